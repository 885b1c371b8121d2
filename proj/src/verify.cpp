#include "defdirac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include "defdirac/algebra.hpp"
#include "defdirac/closed_form.hpp"
#include "defdirac/io.hpp"
#include "defdirac/parallel.hpp"
#include "defdirac/radial.hpp"

namespace defdirac {

namespace {

Check make_check(std::string name, double measured, double bound, bool pass, std::string note = "") {
    return Check{std::move(name), measured, bound, pass, std::move(note)};
}

Check upper_bound_check(std::string name, double measured, double bound, std::string note = "") {
    return make_check(std::move(name), measured, bound, measured <= bound, std::move(note));
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    // least squares on (log x, log y)
    const size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(std::max(ys[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

PotentialSamples eckart_samples(const EckartParams& p, int n_points) {
    double kappa_sq = 1.0;
    const double t0 = p.A; // ground-level decay sets the domain
    if (t0 > 0.0) {
        const double kap = p.B / t0 - t0;
        kappa_sq = kap > 0.0 ? kap * kap : 1.0;
    }
    const RadialGrid grid = build_grid(-kappa_sq, p.nu, n_points);
    return eckart_potential(p, grid);
}

PotentialSamples eckart_samples_for_level(const EckartParams& p, int n_r, int n_points) {
    const double t = p.A + 0.5 * p.nu * n_r;
    const double kap = p.B / t - t;
    const double kappa_sq = kap > 0.0 ? kap * kap : 1.0;
    const RadialGrid grid = build_grid(-kappa_sq, p.nu, n_points);
    return eckart_potential(p, grid);
}

struct SweepPoint {
    double e2, nu, a;
    int k, n_r;
    Branch branch;
};

std::vector<SweepPoint> documented_sweep() {
    std::vector<SweepPoint> pts;
    for (double e2 : {0.1, 0.5})
        for (double nu : {0.005, 0.02})
            for (double a : {0.0, 0.02})
                for (int k : {1, 2})
                    for (int n_r : {0, 1, 2})
                        for (Branch br : {Branch::plus, Branch::minus})
                            pts.push_back({e2, nu, a, k, n_r, br});
    return pts;
}

// The radical expression with its deformation cross term reassembled so that
// it solves the level quadratic identically; used to characterize the
// plain form's defect.
double energy_radical_reassembled(const QuantumState& state, const PhysicalConstants& consts,
                                  const DeformationParams& deform) {
    const double hbar = consts.hbar, m = consts.m, c = consts.c, e2 = consts.e2;
    const double nu = deform.nu, a = deform.a;
    const double mc2 = consts.mc2();
    const double alpha = consts.alpha();
    const double beta = m * c * a / hbar;
    const double k2 = static_cast<double>(state.k) * state.k;
    const double abar2 = alpha * alpha - beta * beta;
    const double N = state.n * state.n;
    const double p = k2 + abar2;
    const double q = k2 - abar2;
    const double first = nu * e2 * (N + p) / (2.0 * (N + alpha * alpha)) +
                         (m * c / hbar) * (m * c / hbar) * e2 * a / (N + alpha * alpha);
    const double S = 1.0 + abar2 / N +
                     std::pow(nu * e2 / (2.0 * mc2), 2) * (1.0 + p / N) * (1.0 + p / N) -
                     a * nu * (1.0 + p / N) +
                     std::pow(hbar * nu / (2.0 * m * c), 2) * (1.0 + alpha * alpha / N) *
                         (2.0 * q - N - p * p / N);
    return first + mc2 / (1.0 + alpha * alpha / N) * std::sqrt(S);
}

struct ScalingStudy {
    double slope_plain = 0.0;      // residual vs the nonrelativistic level
    double slope_corrected = 0.0;  // after subtracting the 1/c^2 corrections
    double coeff_extracted = 0.0;  // Richardson limit of c^2 * residual
    double coeff_delta1 = 0.0;     // c^2 * delta1 at the largest c
    double plateau = 0.0;          // residual at the largest c
};

ScalingStudy c_scaling(double e2, double nu, double abar, int k, int n_r, bool use_radical) {
    const std::vector<double> cs = {10.0, 20.0, 40.0, 80.0, 160.0};
    std::vector<double> r0, r1;
    double K1 = 0, K2 = 0, KD = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        const double c = cs[i];
        PhysicalConstants consts{1.0, 1.0, c, e2};
        const DeformationParams deform = DeformationParams::with_abar(nu, abar, consts);
        const Couplings coup = derive_couplings(consts, deform);
        const QuantumState st = make_state(coup, k, n_r, Branch::plus);
        const double E = use_radical ? energy_radical(st, consts, deform)
                                     : energy_exact(st, consts, deform).e_closed;
        const int n_int = n_r + k; // integer principal number of the plus branch
        const NonRelativisticLevel nr = energy_nonrelativistic(1.0, 1.0, e2, nu, abar, k, n_int);
        const CorrectionBreakdown cb = relativistic_correction(consts, nu, abar, k, n_int);
        const double resid0 = E - consts.mc2() - nr.e_prime;
        const double resid1 = resid0 - cb.total;
        r0.push_back(std::abs(resid0));
        r1.push_back(std::abs(resid1));
        if (i == cs.size() - 2) K1 = resid0 * c * c;
        if (i == cs.size() - 1) {
            K2 = resid0 * c * c;
            KD = cb.delta1 * c * c;
        }
    }
    ScalingStudy s;
    s.slope_plain = fit_slope(cs, r0);
    s.slope_corrected = fit_slope(cs, r1);
    s.coeff_extracted = (4.0 * K2 - K1) / 3.0;
    s.coeff_delta1 = KD;
    s.plateau = r0.back();
    return s;
}

} // namespace

SuiteReport verify_eckart() {
    SuiteReport rep{"eckart", {}};
    const EckartParams p{1.0, 3.0, 2.0};

    // ground level: slope-2 convergence of the FD eigenvalue to the closed form
    const EckartLevel lv0 = eckart_level(p, 0);
    std::vector<double> hs, errs;
    for (int n_points : {2001, 4001, 8001}) {
        const PotentialSamples pot = eckart_samples_for_level(p, 0, n_points);
        hs.push_back(pot.grid.h);
        errs.push_back(std::abs(fd_eigenvalue(pot, 0) - lv0.epsilon));
    }
    const double slope0 = fit_slope(hs, errs);
    rep.checks.push_back(make_check("fd_ground_level_convergence_slope", slope0, 2.0,
                                    std::abs(slope0 - 2.0) <= 0.1,
                                    "target -10, errors " + fmt17(errs[0]) + " -> " + fmt17(errs[2])));

    // cross-solver agreement at a fine grid
    {
        const PotentialSamples pot = eckart_samples_for_level(p, 0, 32001);
        const double fd = fd_eigenvalue(pot, 0);
        const double sh = shooting_eigen(pot, 0);
        rep.checks.push_back(upper_bound_check("fd_vs_shooting_rel_gap",
                                               std::abs(fd - sh) / std::abs(lv0.epsilon), 1e-6));
    }

    // the formula value at n_r = 1 (-6.25) fails the per-level guard; the FD
    // spectrum confirms there is no second bound level (second eigenvalue
    // stays above the continuum edge -2B = -6)
    {
        const EckartLevel lv1 = eckart_level(p, 1);
        rep.checks.push_back(make_check("level1_formula_value", lv1.epsilon, -6.25,
                                        lv1.epsilon == -6.25 && !lv1.exists,
                                        "guard B > (A + nu n_r/2)^2 fails: 3 < 4"));
        const PotentialSamples pot = eckart_samples_for_level(p, 0, 8001);
        const double fd2 = fd_eigenvalue(pot, 1);
        rep.checks.push_back(make_check(
            "level1_absent_from_fd_spectrum", fd2, -6.0, fd2 > -6.0,
            "second FD eigenvalue sits at the truncated continuum edge, not at -6.25"));
    }

    // a well with three genuine levels; slope-2 convergence for each
    {
        const EckartParams deep{1.0, 10.0, 2.0};
        for (int n_r = 0; n_r < 3; ++n_r) {
            const EckartLevel lv = eckart_level(deep, n_r);
            std::vector<double> hs2, errs2;
            for (int n_points : {2001, 4001, 8001}) {
                const PotentialSamples pot = eckart_samples_for_level(deep, n_r, n_points);
                hs2.push_back(pot.grid.h);
                errs2.push_back(std::abs(fd_eigenvalue(pot, n_r) - lv.epsilon));
            }
            const double sl = fit_slope(hs2, errs2);
            rep.checks.push_back(make_check("fd_multilevel_slope_nr" + std::to_string(n_r), sl,
                                            2.0, std::abs(sl - 2.0) <= 0.1 && lv.exists, ""));
        }
    }
    return rep;
}

SuiteReport verify_susy() {
    SuiteReport rep{"susy", {}};
    const std::vector<SweepPoint> pts = documented_sweep();

    struct Row {
        bool ran = false;
        bool failed = false;
        double e_closed = 0.0, e_num = 0.0;
    };
    std::vector<Row> rows(pts.size());

    parallel_for_index(static_cast<int>(pts.size()), [&](int i) {
        // solver failures become suite failures, never crashes
        try {
            const SweepPoint& sp = pts[i];
            PhysicalConstants consts{1.0, 1.0, 1.0, sp.e2};
            const DeformationParams deform = DeformationParams::with_a(sp.nu, sp.a, consts);
            const Couplings coup = derive_couplings(consts, deform);
            if (sp.k * sp.k <= coup.alpha_bar_sq) return;
            const QuantumState st = make_state(coup, sp.k, sp.n_r, sp.branch);
            const SpectrumRecord rec = energy_exact(st, consts, deform);
            if (!rec.bound_ok || !rec.level_exists) return;
            const SelfConsistentResult sc = self_consistent_energy(st, consts, deform);
            rows[i].ran = true;
            rows[i].e_closed = rec.e_closed;
            rows[i].e_num = sc.energy;
        } catch (const std::exception&) {
            rows[i].failed = true;
        }
    });

    int ran = 0, solver_failures = 0;
    for (const Row& r : rows) solver_failures += r.failed ? 1 : 0;
    double worst_dev = 0.0;
    std::map<std::tuple<double, double, double, int, int>, std::pair<double, double>> minus_rows;
    std::map<std::tuple<double, double, double, int, int>, std::pair<double, double>> plus_rows;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (!rows[i].ran) continue;
        ++ran;
        worst_dev = std::max(worst_dev,
                             std::abs(rows[i].e_num - rows[i].e_closed) / std::abs(rows[i].e_closed));
        const SweepPoint& sp = pts[i];
        const auto key = std::make_tuple(sp.e2, sp.nu, sp.a, sp.k,
                                         sp.branch == Branch::minus ? sp.n_r : sp.n_r - 1);
        if (sp.branch == Branch::minus)
            minus_rows[key] = {rows[i].e_closed, rows[i].e_num};
        else
            plus_rows[key] = {rows[i].e_closed, rows[i].e_num};
    }
    rep.checks.push_back(upper_bound_check("cross_validation_worst_rel_dev", worst_dev, 1e-6,
                                           std::to_string(ran) + " bound states, 4001-point grid"));
    rep.checks.push_back(make_check("cross_validation_solver_failures",
                                    static_cast<double>(solver_failures), 0.0,
                                    solver_failures == 0, ""));

    double worst_closed = 0.0, worst_num = 0.0;
    int pairs = 0;
    for (const auto& [key, mv] : minus_rows) {
        const auto it = plus_rows.find(key);
        if (it == plus_rows.end()) continue;
        ++pairs;
        worst_closed = std::max(worst_closed, std::abs(mv.first - it->second.first));
        worst_num = std::max(worst_num, std::abs(mv.second - it->second.second));
    }
    rep.checks.push_back(upper_bound_check("susy_degeneracy_closed_form", worst_closed, 1e-12,
                                           std::to_string(pairs) + " partner pairs"));
    rep.checks.push_back(upper_bound_check("susy_degeneracy_numeric", worst_num, 1e-6,
                                           std::to_string(pairs) + " partner pairs"));
    return rep;
}

SuiteReport verify_limits() {
    SuiteReport rep{"limits", {}};
    PhysicalConstants consts{1.0, 1.0, 1.0, 0.5};

    // nu -> 0: linear decay onto the nu = 0 spectrum
    {
        const double a = 0.1;
        const double e_zero = energy_nu_zero(consts, a, 1, Branch::plus, 0);
        const std::vector<double> nus = {1e-4, 1e-5, 1e-6};
        std::vector<double> diffs;
        for (double nu : nus) {
            const DeformationParams deform = DeformationParams::with_a(nu, a, consts);
            const Couplings coup = derive_couplings(consts, deform);
            const QuantumState st = make_state(coup, 1, 0, Branch::plus);
            diffs.push_back(std::abs(energy_exact(st, consts, deform).e_closed - e_zero));
        }
        const double slope = fit_slope(nus, diffs);
        rep.checks.push_back(make_check("nu_to_zero_slope", slope, 1.0,
                                        std::abs(slope - 1.0) <= 0.1, ""));
        // linear Richardson from the two smallest nu
        const DeformationParams d1 = DeformationParams::with_a(nus[1], a, consts);
        const DeformationParams d2 = DeformationParams::with_a(nus[2], a, consts);
        const Couplings c1 = derive_couplings(consts, d1);
        const Couplings c2 = derive_couplings(consts, d2);
        const double E1 = energy_exact(make_state(c1, 1, 0, Branch::plus), consts, d1).e_closed;
        const double E2 = energy_exact(make_state(c2, 1, 0, Branch::plus), consts, d2).e_closed;
        const double extrap = (nus[1] * E2 - nus[2] * E1) / (nus[1] - nus[2]);
        rep.checks.push_back(
            upper_bound_check("nu_to_zero_extrapolated_disagreement", std::abs(extrap - e_zero), 1e-8));
    }

    // a = 0 reduction to the pure Coulomb level
    {
        const double e_zero = energy_nu_zero(consts, 0.0, 1, Branch::plus, 0);
        const double coulomb = consts.mc2() * std::sqrt(1.0 - consts.alpha() * consts.alpha());
        rep.checks.push_back(upper_bound_check("nu_zero_a_zero_vs_coulomb",
                                               std::abs(e_zero - coulomb), 1e-12));
    }

    // nonrelativistic limit, zeroth order: slope -2 where the closed forms are
    // mutually consistent (abar * nu = 0)
    {
        const ScalingStudy s1 = c_scaling(0.5, 0.05, 0.0, 1, 0, false);
        rep.checks.push_back(make_check("nonrel_slope_abar0", s1.slope_plain, -2.0,
                                        std::abs(s1.slope_plain + 2.0) <= 0.3, "nu=0.05, abar=0"));
        const ScalingStudy s2 = c_scaling(0.5, 0.0, 0.1, 1, 0, false);
        rep.checks.push_back(make_check("nonrel_slope_nu0", s2.slope_plain, -2.0,
                                        std::abs(s2.slope_plain + 2.0) <= 0.3, "nu=0, abar=0.1"));

        // with abar*nu != 0 the radical form (and only it) matches
        // the nonrelativistic level formula; the quadratic root plateaus at
        // the a*nu cross term it carries and the radical lacks
        const ScalingStudy s3r = c_scaling(0.5, 0.05, 0.1, 1, 0, true);
        rep.checks.push_back(make_check("nonrel_slope_cross_radical_form", s3r.slope_plain, -2.0,
                                        std::abs(s3r.slope_plain + 2.0) <= 0.3,
                                        "nu=0.05, abar=0.1, radical-form energy"));
        const ScalingStudy s3q = c_scaling(0.5, 0.05, 0.1, 1, 0, false);
        const double predicted = 0.5 * 0.05 * 0.5 * 0.1 * (1.0 + 1.0); // (nu e2 abar/2)(1 + k^2/n^2)
        rep.checks.push_back(make_check(
            "nonrel_cross_term_plateau_matches_model", s3q.plateau, predicted,
            std::abs(s3q.plateau - predicted) <= 0.02 * predicted,
            "quadratic-root energy keeps the a*nu cross term absent from the radical-route formulas"));
    }

    // reconciliation with the deformed-Schroedinger comparison values
    {
        std::mt19937_64 rng(20240817);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const int l = static_cast<int>(unif(rng) * 5);
            const int n = l + 1 + static_cast<int>(unif(rng) * (6 - l));
            const double nu = 0.1 * unif(rng);
            const double e2 = 0.1 + 1.9 * unif(rng);
            const double qt = energy_qt(1.0, 1.0, e2, nu, l, n).e_prime;
            const double rec = qt_reconciliation(1.0, 1.0, e2, nu, l, n);
            worst = std::max(worst, std::abs(rec - qt) / std::max(std::abs(qt), 1e-300));
        }
        rep.checks.push_back(upper_bound_check("qt_reconciliation_worst_rel", worst, 1e-12,
                                               "1000 draws, l <= 4, n <= 6, nu <= 0.1"));
        const double qt0 = energy_qt(1.0, 1.0, 1.0, 0.1, 0, 1).e_prime;
        const double rec0 = qt_reconciliation(1.0, 1.0, 1.0, 0.1, 0, 1);
        rep.checks.push_back(upper_bound_check("qt_reconciliation_l0_identity",
                                               std::abs(rec0 - qt0), 1e-15));
    }
    return rep;
}

SuiteReport verify_algebra() {
    SuiteReport rep{"algebra", {}};

    // 2x2 eigenvalues against the closed form, random admissible draws
    {
        std::mt19937_64 rng(7041977);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            PhysicalConstants consts{1.0, 1.0, 1.0, 0.0};
            const double C1 = -(0.05 + 0.9 * unif(rng));
            const double C2 = 0.3 * unif(rng);
            const int k = 1 + static_cast<int>(unif(rng) * 3);
            consts.e2 = -C1;
            const DeformationParams deform = DeformationParams::with_a(0.0, C2, consts);
            const Couplings coup = derive_couplings(consts, deform);
            if (k * k <= coup.alpha_bar_sq) continue;
            const LambdaMatrix lm = lambda_matrix_numeric(consts, C1, C2, k);
            const double closed = lambda_eigenvalue(coup, k, Branch::plus);
            worst = std::max(worst, std::abs(lm.eig_plus - closed) / closed);
            worst = std::max(worst, std::abs(lm.eig_minus + closed) / closed);
        }
        rep.checks.push_back(upper_bound_check("lambda_matrix_vs_closed_form", worst, 1e-12,
                                               "1000 draws"));
    }

    // deformed commutator: exact for the undeformed pair, h^2 otherwise
    {
        const double flat = deformed_commutator_residual(0.0, 10.0, 401);
        rep.checks.push_back(upper_bound_check("commutator_residual_nu0", flat, 1e-12));
        std::vector<double> hs, rs;
        double prev = 1e300;
        bool monotone = true;
        for (int n : {201, 401, 801, 1601}) {
            const double r = deformed_commutator_residual(0.01, 10.0, n);
            hs.push_back(10.0 / (n - 1));
            rs.push_back(r);
            if (r > prev) monotone = false;
            prev = r;
        }
        const double slope = fit_slope(hs, rs);
        rep.checks.push_back(make_check("commutator_residual_slope", slope, 2.0,
                                        std::abs(slope - 2.0) <= 0.1 && monotone,
                                        monotone ? "monotone under halving" : "NOT monotone"));
    }

    // separability residuals: h^2 against analytic right-hand sides
    {
        PhysicalConstants consts{1.0, 1.0, 1.0, 0.5};
        const DeformationParams deform = DeformationParams::with_a(0.1, 0.05, consts);
        std::vector<double> hs, r1s, r2s;
        for (int n : {201, 401, 801}) {
            const SeparabilityResiduals sr = separability_residual(consts, deform, 1.0, 6.0, n);
            hs.push_back(5.0 / (n - 1));
            r1s.push_back(sr.res1);
            r2s.push_back(sr.res2);
        }
        const double s1 = fit_slope(hs, r1s);
        const double s2 = fit_slope(hs, r2s);
        rep.checks.push_back(
            make_check("separability_res1_slope", s1, 2.0, std::abs(s1 - 2.0) <= 0.1, ""));
        rep.checks.push_back(
            make_check("separability_res2_slope", s2, 2.0, std::abs(s2 - 2.0) <= 0.1, ""));
    }
    return rep;
}

SuiteReport verify_corrections() {
    SuiteReport rep{"corrections", {}};

    // quadratic consistency of the radical form, 500 random admissible draws
    {
        std::mt19937_64 rng(19830615);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double worst_zero_cross = 0.0;  // draws with a*nu = 0
        double worst_reassembled = 0.0; // cross-term-reassembled radical, all draws
        double worst_radical = 0.0;     // radical form, a*nu != 0 draws
        int n_zero = 0, n_cross = 0;
        while (n_zero + n_cross < 500) {
            PhysicalConstants consts{1.0, 1.0, 1.0, 0.05 + 0.75 * unif(rng)};
            const int mode = static_cast<int>(unif(rng) * 3);
            const double nu = mode == 0 ? 0.0 : 0.1 * unif(rng);
            const double a = mode == 1 ? 0.0 : 0.1 * unif(rng);
            const int k = (1 + static_cast<int>(unif(rng) * 3)) * (unif(rng) < 0.5 ? -1 : 1);
            const int n_r = static_cast<int>(unif(rng) * 3);
            const Branch br = unif(rng) < 0.5 ? Branch::plus : Branch::minus;
            const DeformationParams deform = DeformationParams::with_a(nu, a, consts);
            const Couplings coup = derive_couplings(consts, deform);
            if (k * k <= coup.alpha_bar_sq) continue;
            const QuantumState st = make_state(coup, k, n_r, br);
            const double radical = energy_radical(st, consts, deform);
            if (!std::isfinite(radical)) continue;
            const double resid_radical = quadratic_residual(radical, st, consts, deform);
            const double reassembled = energy_radical_reassembled(st, consts, deform);
            worst_reassembled =
                std::max(worst_reassembled, quadratic_residual(reassembled, st, consts, deform));
            if (a * nu == 0.0) {
                ++n_zero;
                worst_zero_cross = std::max(worst_zero_cross, resid_radical);
            } else {
                ++n_cross;
                worst_radical = std::max(worst_radical, resid_radical);
            }
        }
        rep.checks.push_back(upper_bound_check("radical_residual_anu_zero", worst_zero_cross, 1e-10,
                                               std::to_string(n_zero) + " draws"));
        rep.checks.push_back(upper_bound_check(
            "radical_reassembled_residual_all", worst_reassembled, 1e-10,
            std::to_string(n_zero + n_cross) +
                " draws; radical with the a*nu cross term reassembled solves the quadratic"));
        rep.checks.push_back(make_check(
            "radical_form_discrepancy_reported", worst_radical, 1e-10, worst_radical > 1e-10,
            "FINDING: radical form leaves a systematic a*nu residual (" +
                std::to_string(n_cross) + " draws); see README notes"));
    }

    // first relativistic correction equals the fine-structure expression at abar=0
    {
        PhysicalConstants consts{1.0, 1.0, 1.0, 0.1};
        double worst = 0.0;
        for (int k : {1, 2, 3})
            for (int n_r : {0, 1, 2}) {
                const double n = n_r + k;
                const CorrectionBreakdown cb = relativistic_correction(consts, 0.0, 0.0, k, n);
                const double sommerfeld = -consts.m * std::pow(consts.e2, 2) *
                                          std::pow(consts.alpha(), 2) /
                                          (2.0 * consts.hbar * consts.hbar * n * n * n * n) *
                                          (n / std::abs(k) - 0.75);
                worst = std::max(worst, std::abs(cb.delta1 - sommerfeld) /
                                            std::max(std::abs(sommerfeld), 1e-300));
                if (std::abs(cb.delta2) > 0.0 || std::abs(cb.delta3) > 0.0) worst = 1.0;
            }
        rep.checks.push_back(upper_bound_check("sommerfeld_formula_identity", worst, 1e-14));
    }

    // alpha^4 coefficient of the c-scaling study matches delta1 within 1%
    {
        const ScalingStudy s = c_scaling(0.5, 0.0, 0.0, 1, 0, false);
        const double rel = std::abs(s.coeff_extracted - s.coeff_delta1) /
                           std::abs(s.coeff_delta1);
        rep.checks.push_back(upper_bound_check("sommerfeld_coefficient_from_scaling", rel, 0.01));
    }

    // corrected residual slopes (expected -4, required <= -3.5)
    {
        const ScalingStudy s1 = c_scaling(0.5, 0.05, 0.0, 1, 0, false);
        rep.checks.push_back(make_check("corrected_slope_abar0", s1.slope_corrected, -3.5,
                                        s1.slope_corrected <= -3.5, "nu=0.05, abar=0"));
        const ScalingStudy s2 = c_scaling(0.5, 0.0, 0.1, 1, 0, false);
        rep.checks.push_back(make_check("corrected_slope_nu0", s2.slope_corrected, -3.5,
                                        s2.slope_corrected <= -3.5, "nu=0, abar=0.1"));
        const ScalingStudy s3 = c_scaling(0.5, 0.05, 0.1, 1, 0, true);
        rep.checks.push_back(make_check("corrected_slope_cross_radical_form", s3.slope_corrected,
                                        -3.5, s3.slope_corrected <= -3.5,
                                        "nu=0.05, abar=0.1, radical-form energy"));
    }
    return rep;
}

std::vector<SuiteReport> verify_all() {
    return {verify_eckart(), verify_susy(), verify_limits(), verify_algebra(),
            verify_corrections()};
}

std::string format_report(const SuiteReport& r) {
    std::string out = "suite " + r.suite + "\n";
    for (const auto& c : r.checks) {
        out += c.pass ? "  [PASS] " : "  [FAIL] ";
        out += c.name + ": measured=" + fmt17(c.measured) + " bound=" + fmt17(c.bound);
        if (!c.note.empty()) out += "  (" + c.note + ")";
        out += "\n";
    }
    return out;
}

} // namespace defdirac
