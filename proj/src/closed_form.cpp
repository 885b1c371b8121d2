#include "defdirac/closed_form.hpp"

#include <cmath>
#include <limits>

namespace defdirac {

EckartLevel eckart_level(const EckartParams& p, int n_r) {
    EckartLevel lv;
    const double t = p.A + 0.5 * p.nu * n_r;
    lv.epsilon = -t * t - p.B * p.B / (t * t);
    lv.well_condition = p.B > p.A * p.A && p.A >= 0.0 && p.B >= 0.0;
    lv.level_condition = p.B > t * t;
    lv.exists = lv.well_condition && lv.level_condition;
    return lv;
}

EffectiveParams effective_params(double energy, const QuantumState& state,
                                 const PhysicalConstants& consts,
                                 const DeformationParams& deform) {
    const double hbar = consts.hbar, m = consts.m, c = consts.c, e2 = consts.e2;
    const double nu = deform.nu, a = deform.a;
    const double k2 = static_cast<double>(state.k) * state.k;
    const double beta = m * c * a / hbar;
    const double alpha = e2 / (hbar * c);

    EffectiveParams ep;
    ep.lstar_product = k2 + beta * beta - state.lambda - alpha * alpha;
    ep.e_star_sq = energy / consts.mc2() * e2 - hbar * hbar * k2 * nu / m +
                   hbar * hbar * nu / (2.0 * m) * state.lambda - consts.mc2() * a;
    ep.e_star = (energy * energy - consts.mc2() * consts.mc2()) / (2.0 * consts.mc2()) -
                hbar * hbar * k2 * nu * nu / (2.0 * m);
    return ep;
}

MappedProblem eckart_mapping(const QuantumState& state, const PhysicalConstants& consts,
                             const DeformationParams& deform, double energy) {
    if (!(deform.nu > 0.0))
        throw DeformationRequired("eckart_mapping needs nu > 0; use energy_nu_zero");
    const double hbar = consts.hbar, m = consts.m, nu = deform.nu;

    MappedProblem mp;
    mp.eff = effective_params(energy, state, consts, deform);
    mp.pot.nu = nu;
    mp.pot.A = 0.5 * nu * (state.l_star + 1.0);
    mp.pot.B = m * mp.eff.e_star_sq * nu / (2.0 * hbar * hbar) +
               nu * nu * mp.eff.lstar_product / 4.0;
    mp.epsilon_target =
        2.0 * m / (hbar * hbar) *
        (mp.eff.e_star - hbar * hbar * nu * nu * mp.eff.lstar_product / (4.0 * m) -
         mp.eff.e_star_sq * nu / 2.0);
    return mp;
}

namespace {

struct QuadCoeffs {
    double a2 = 0.0; // u^2 coefficient, u = E/mc^2
    double a1 = 0.0;
    double a0 = 0.0;
};

// Level condition collected as a2 u^2 + a1 u + a0 = 0 (all terms in mc^2
// units). Dimensionless shorthand: w = hbar nu/(m c), beta = m c a/hbar.
QuadCoeffs quad_coeffs(const QuantumState& state, const PhysicalConstants& consts,
                       const DeformationParams& deform) {
    const double alpha = consts.alpha();
    const double beta = consts.m * consts.c * deform.a / consts.hbar;
    const double w = consts.hbar * deform.nu / (consts.m * consts.c);
    const double k2 = static_cast<double>(state.k) * state.k;
    const double abar2 = alpha * alpha - beta * beta;
    const double N = state.n * state.n;
    const double p = k2 + abar2;
    const double q = k2 - abar2;
    const double d = beta + 0.5 * w * p;

    QuadCoeffs qc;
    qc.a2 = 1.0 + alpha * alpha / N;
    qc.a1 = -(w * alpha + 2.0 * alpha * d / N);
    qc.a0 = -1.0 - 0.5 * w * w * q + 0.25 * w * w * N + w * beta + d * d / N;
    return qc;
}

} // namespace

double quadratic_residual(double energy, const QuantumState& state,
                          const PhysicalConstants& consts, const DeformationParams& deform) {
    const QuadCoeffs qc = quad_coeffs(state, consts, deform);
    const double u = energy / consts.mc2();
    return std::abs(qc.a2 * u * u + qc.a1 * u + qc.a0);
}

QuadraticRoots energy_quadratic_roots(const QuantumState& state, const PhysicalConstants& consts,
                                      const DeformationParams& deform) {
    const QuadCoeffs qc = quad_coeffs(state, consts, deform);
    const double disc = qc.a1 * qc.a1 - 4.0 * qc.a2 * qc.a0;
    if (disc < 0.0) throw ComplexRoots("level quadratic has no real roots");
    const double sq = std::sqrt(disc);
    // stable form: avoid cancellation in the root of smaller magnitude
    const double t = -0.5 * (qc.a1 + std::copysign(sq, qc.a1));
    double u1 = t / qc.a2;
    double u2 = (t != 0.0) ? qc.a0 / t : -qc.a1 / (2.0 * qc.a2);
    if (u1 > u2) std::swap(u1, u2);

    QuadraticRoots r;
    r.e_low = u1 * consts.mc2();
    r.e_high = u2 * consts.mc2();
    r.residual_low = quadratic_residual(r.e_low, state, consts, deform);
    r.residual_high = quadratic_residual(r.e_high, state, consts, deform);
    return r;
}

double energy_radical(const QuantumState& state, const PhysicalConstants& consts,
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
                     std::pow(nu * e2 / (2.0 * mc2), 2) * (1.0 + p / N) * (1.0 + a * nu + p / N) +
                     std::pow(hbar * nu / (2.0 * m * c), 2) * (1.0 + alpha * alpha / N) *
                         (2.0 * q - N - p * p / N);
    if (S < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return first + mc2 / (1.0 + alpha * alpha / N) * std::sqrt(S);
}

SpectrumRecord energy_exact(const QuantumState& state, const PhysicalConstants& consts,
                            const DeformationParams& deform) {
    SpectrumRecord rec;
    rec.k = state.k;
    rec.n_r = state.n_r;
    rec.branch = state.branch;
    rec.lambda = state.lambda;
    rec.l_star = state.l_star;
    rec.n = state.n;

    const QuadraticRoots roots = energy_quadratic_roots(state, consts, deform);
    rec.e_low = roots.e_low;
    rec.e_high = roots.e_high;
    rec.e_radical = energy_radical(state, consts, deform);

    // physical root: the one the radical form tracks; falls back to the root
    // nearest +mc^2 when the radicand is negative
    if (std::isfinite(rec.e_radical)) {
        rec.radical_matches_root =
            std::abs(rec.e_radical - roots.e_high) <= std::abs(rec.e_radical - roots.e_low) ? 1 : 0;
    } else {
        rec.radical_matches_root =
            std::abs(roots.e_high - consts.mc2()) <= std::abs(roots.e_low - consts.mc2()) ? 1 : 0;
    }
    rec.e_closed = rec.radical_matches_root == 1 ? roots.e_high : roots.e_low;
    rec.quadratic_residual = rec.radical_matches_root == 1 ? roots.residual_high : roots.residual_low;
    rec.radical_residual = std::isfinite(rec.e_radical)
                               ? quadratic_residual(rec.e_radical, state, consts, deform)
                               : std::numeric_limits<double>::quiet_NaN();

    rec.bound_ok = bound_state_condition(rec.e_closed, consts, deform, state.k);
    if (deform.nu > 0.0) {
        const MappedProblem mp = eckart_mapping(state, consts, deform, rec.e_closed);
        const EckartLevel lv = eckart_level(mp.pot, state.n_r);
        rec.level_exists = lv.exists;
        rec.well_condition = lv.well_condition;
    }
    return rec;
}

double energy_nu_zero(const PhysicalConstants& consts, double a, int k, Branch branch, int n_r) {
    const double hbar = consts.hbar, m = consts.m, e2 = consts.e2;
    if (a >= e2 / consts.mc2())
        throw MassParameterTooLarge("nu = 0 spectrum requires a < e2/mc^2");
    DeformationParams d = DeformationParams::with_a(0.0, a, consts);
    const Couplings coup = derive_couplings(consts, d);
    const double ls = effective_orbital(coup, k, branch);
    const double n = principal_quantum_number(n_r, ls);
    const double N = n * n;
    return consts.mc2() / (1.0 + coup.alpha * coup.alpha / N) *
           (m * e2 * a / (hbar * hbar * N) + std::sqrt(1.0 + coup.alpha_bar_sq / N));
}

NonRelativisticLevel energy_nonrelativistic(double m, double hbar, double e2, double nu,
                                            double abar, int k, double n) {
    if (!(n > 0.0)) throw NonPositivePrincipal("n must be > 0");
    const double k2 = static_cast<double>(k) * k;
    const double N = n * n;
    const double t = hbar * hbar * nu * k2 / (2.0 * m);

    NonRelativisticLevel lv;
    lv.e_prime = -m / (2.0 * hbar * hbar * N) * (e2 - t) * (e2 - t) -
                 hbar * hbar * nu * nu * N / (8.0 * m) + 0.5 * nu * (e2 + t) +
                 m * e2 * e2 / (2.0 * hbar * hbar * N) * abar * (2.0 - abar);
    lv.bounded = e2 > hbar * hbar * nu / m * k2 + e2 * abar;
    return lv;
}

NonRelativisticLevel energy_qt(double m, double hbar, double e2, double nu, int l, double n) {
    if (l < 0) throw ConfigError("l must be >= 0");
    if (!(n > 0.0)) throw NonPositivePrincipal("n must be > 0");
    const double b = static_cast<double>(l) * (l + 1) + 1.0;
    const double t = hbar * hbar * nu * b / (2.0 * m);

    NonRelativisticLevel lv;
    lv.e_prime = -m / (2.0 * hbar * hbar * n * n) * (e2 - t) * (e2 - t) -
                 hbar * hbar * nu * nu * n * n / (8.0 * m) + 0.5 * nu * (e2 + t);
    lv.bounded = e2 > hbar * hbar * nu / (2.0 * m) *
                          (static_cast<double>(l + 1) * (2 * l + 1) + 1.0);
    return lv;
}

double qt_reconciliation(double m, double hbar, double e2, double nu, int l, double n) {
    if (l < 0) throw ConfigError("l must be >= 0");
    // spin-orbit eigenvalue at k^2 = (l+1)^2 reduces to hbar^2 l / 2
    const double shift = hbar * hbar * nu * l / (2.0 * m);
    const double e2_shifted = e2 + shift;
    const NonRelativisticLevel base =
        energy_nonrelativistic(m, hbar, e2_shifted, nu, 0.0, l + 1, n);
    return base.e_prime - nu * shift;
}

SpinOrbitShift spin_orbit_shift(double m, double hbar, double nu, int k, int l) {
    const double sl =
        hbar * hbar * (static_cast<double>(k) * k - static_cast<double>(l) * (l + 1) - 1.0) / 2.0;
    SpinOrbitShift s;
    s.const_coeff = nu * nu / m * sl;
    s.coulomb_like_coeff = nu / m * sl;
    return s;
}

CorrectionBreakdown relativistic_correction(const PhysicalConstants& consts, double nu,
                                            double abar, int k, double n) {
    if (k == 0) throw ConfigError("k must be nonzero");
    if (!(n > 0.0)) throw NonPositivePrincipal("n must be > 0");
    const double hbar = consts.hbar, m = consts.m, c = consts.c, e2 = consts.e2;
    const double alpha = consts.alpha();
    const double a2 = alpha * alpha;
    const double k2 = static_cast<double>(k) * k;
    const double ak = std::abs(static_cast<double>(k));
    const double N = n * n;
    const double n4 = N * N;

    CorrectionBreakdown cb;
    cb.delta1 = -m * e2 * e2 * a2 / (2.0 * hbar * hbar * n4) * std::pow(1.0 - abar, 3) *
                (n / ak * (1.0 + abar) - 0.75 * (1.0 + abar / 3.0));
    cb.delta2 = -std::pow(hbar * nu / (8.0 * m * c), 2) * hbar * hbar * nu * nu *
                std::pow(N - k2, 4) / (2.0 * m * n4);
    cb.delta3 = nu * e2 * a2 / (2.0 * n4) *
                    ((1.0 - abar * abar) * n * ak - k2 - N * abar * abar) +
                hbar * hbar * nu * nu * a2 / (8.0 * m * n4) *
                    ((N + k2) * (N + k2) +
                     (1.0 - abar * abar) * (2.0 * k2 * k2 - 1.5 * (N + k2) * (N + k2) +
                                            n / ak * (n4 - k2 * k2)));
    cb.total = cb.delta1 + cb.delta2 + cb.delta3;
    return cb;
}

std::function<double(double)> mass_potential_u1(const PhysicalConstants& consts,
                                                const DeformationParams& deform) {
    const double mc2 = consts.mc2();
    const double a = deform.a;
    return [mc2, a](double r) {
        if (!(r > 0.0)) throw DomainError("U1 requires r > 0");
        const double f1 = 1.0 + a / r;
        return 0.5 * mc2 * (f1 * f1 - 1.0);
    };
}

} // namespace defdirac
