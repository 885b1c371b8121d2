#include "defdirac/radial.hpp"

#include <algorithm>
#include <cmath>

#include "defdirac/tridiag.hpp"

namespace defdirac {

double map_r_to_x(double r, double nu) {
    if (!(r >= 0.0)) throw DomainError("coordinate map requires r >= 0");
    if (!(nu >= 0.0)) throw DomainError("coordinate map requires nu >= 0");
    if (nu == 0.0) return r;
    return std::log1p(nu * r) / nu; // log1p keeps full precision for nu r << 1
}

double map_x_to_r(double x, double nu) {
    if (!(x >= 0.0)) throw DomainError("coordinate map requires x >= 0");
    if (!(nu >= 0.0)) throw DomainError("coordinate map requires nu >= 0");
    if (nu == 0.0) return x;
    return std::expm1(nu * x) / nu;
}

RadialGrid build_grid(double epsilon_scale, double nu, int n_points, double x_max_override) {
    if (n_points < 3) throw InvalidGrid("n_points must be >= 3");
    RadialGrid g;
    g.n_points = n_points;
    if (x_max_override > 0.0) {
        g.x_max = x_max_override;
    } else {
        if (x_max_override < 0.0) throw InvalidGrid("x_max must be > 0");
        constexpr double kappa_min = 1e-2;
        const double kappa = std::sqrt(std::max(std::abs(epsilon_scale), kappa_min * kappa_min));
        const double nu_eff = std::max(nu, kappa);
        const double x_raw = 13.0 * std::log(10.0) / kappa; // tail e^{-kappa x} < 1e-12
        g.x_max = std::clamp(x_raw, 10.0 / nu_eff, 200.0 / nu_eff);
    }
    g.h = g.x_max / (n_points - 1);
    return g;
}

PotentialSamples eckart_potential(const EckartParams& p, const RadialGrid& grid) {
    if (!(p.nu > 0.0)) throw DeformationRequired("eckart_potential needs nu > 0");
    PotentialSamples ps;
    ps.grid = grid;
    ps.values.resize(grid.interior());
    for (int i = 0; i < grid.interior(); ++i) {
        const double y = 0.5 * grid.x(i) * p.nu;
        const double sh = std::sinh(y);
        ps.values[i] = p.A * (p.A - 0.5 * p.nu) / (sh * sh) - 2.0 * p.B / std::tanh(y);
    }
    // origin expansion: V ~ L/x^2 + C/x + v0 + v1 x
    ps.has_origin_series = true;
    ps.inv_sq = 4.0 * p.A * (p.A - 0.5 * p.nu) / (p.nu * p.nu);
    ps.inv_lin = -4.0 * p.B / p.nu;
    ps.v0 = -ps.inv_sq * p.nu * p.nu / 12.0;
    ps.v1 = -p.B * p.nu / 3.0;
    return ps;
}

namespace {

struct OriginSeries {
    bool active = false;
    double p = 1.0; // indicial exponent, chi ~ x^p
    double c1 = 0.0;
};

OriginSeries origin_series(const PotentialSamples& pot) {
    OriginSeries os;
    if (!pot.has_origin_series) return os;
    const double L = pot.inv_sq;
    if (1.0 + 4.0 * L < 0.0) return os; // below the fall-to-center threshold; leave plain
    os.p = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * L));
    os.c1 = pot.inv_lin / (2.0 * os.p);
    os.active = std::abs(os.p - std::round(os.p)) > 1e-9;
    return os;
}

// Assemble -d^2/dx^2 + V as a symmetric tridiagonal matrix. With a fractional
// indicial exponent, the first few diagonal entries use the closure that makes
// the kinetic row exact on x^p + c1 x^(p+1); integer exponents reproduce the
// plain stencil identically.
void assemble_fd(const PotentialSamples& pot, bool origin_closure, std::vector<double>& diag,
                 std::vector<double>& off) {
    const RadialGrid& g = pot.grid;
    const int n = g.interior();
    const double h = g.h;
    const double inv_h2 = 1.0 / (h * h);
    diag.resize(n);
    off.assign(std::max(0, n - 1), -inv_h2);
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * inv_h2 + pot.values[i];

    const OriginSeries os = origin_series(pot);
    if (!origin_closure || !os.active) return;

    const double p = os.p, c1 = os.c1;
    auto phi = [&](double t) { return std::pow(t, p) * (1.0 + c1 * t); };
    auto phidd = [&](double t) {
        return p * (p - 1.0) * std::pow(t, p - 2.0) + c1 * (p + 1.0) * p * std::pow(t, p - 1.0);
    };
    int j_max = 64;
    if (c1 != 0.0)
        j_max = std::min(j_max, std::max(1, static_cast<int>(0.25 / (std::abs(c1) * h))));
    j_max = std::min(j_max, n - 1);
    for (int i = 0; i < j_max; ++i) {
        const double xi = g.x(i);
        const double dk = (phi(xi - h) + phi(xi + h) - h * h * phidd(xi)) / (h * h * phi(xi));
        diag[i] = dk + pot.values[i];
    }
}

} // namespace

double fd_eigenvalue(const PotentialSamples& pot, int index, bool origin_closure) {
    std::vector<double> diag, off;
    assemble_fd(pot, origin_closure, diag, off);
    return tridiag_eigenvalue(diag, off, index);
}

std::vector<EigenPair> fd_eigen(const PotentialSamples& pot, int count, bool origin_closure) {
    if (count < 1) throw InvalidGrid("count must be >= 1");
    std::vector<double> diag, off;
    assemble_fd(pot, origin_closure, diag, off);
    std::vector<EigenPair> out(count);
    for (int i = 0; i < count; ++i) {
        out[i].value = tridiag_eigenvalue(diag, off, i);
        out[i].vector = tridiag_eigenvector(diag, off, out[i].value);
        double norm = 0.0;
        for (double v : out[i].vector) norm += v * v;
        norm = std::sqrt(norm * pot.grid.h);
        for (double& v : out[i].vector) v /= norm;
    }
    return out;
}

int count_nodes(std::span<const double> values) {
    if (values.empty()) throw DomainError("count_nodes: empty array");
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, std::abs(v));
    const double cut = 1e-12 * peak;
    int nodes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (double v : values) {
        if (std::abs(v) < cut) continue;
        if (have_prev && std::signbit(v) != std::signbit(prev)) ++nodes;
        prev = v;
        have_prev = true;
    }
    return nodes;
}

namespace {

struct ShootResult {
    double chi_end = 0.0;
    int nodes = 0;
    double peak = 0.0;
};

// RK4 on y = [chi, chi'], stride 2h so the midpoint lands on a sampled node.
ShootResult shoot_once(const PotentialSamples& pot, double eps) {
    const RadialGrid& g = pot.grid;
    const std::vector<double>& V = pot.values;
    const int n = g.interior();
    const double h = g.h;
    const double H = 2.0 * h;

    // series start at the first interior point
    double p = 1.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;
    if (pot.has_origin_series && 1.0 + 4.0 * pot.inv_sq >= 0.0) {
        p = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * pot.inv_sq));
        const double C = pot.inv_lin;
        c1 = C / (2.0 * p);
        c2 = (C * c1 + (pot.v0 - eps)) / (2.0 * (2.0 * p + 1.0));
        c3 = (C * c2 + (pot.v0 - eps) * c1 + pot.v1) / (3.0 * (2.0 * p + 2.0));
    }
    const double x1 = g.x(0);
    double chi = std::pow(x1, p) * (1.0 + c1 * x1 + c2 * x1 * x1 + c3 * x1 * x1 * x1);
    double dchi = p * std::pow(x1, p - 1.0) + c1 * (p + 1.0) * std::pow(x1, p) +
                  c2 * (p + 2.0) * std::pow(x1, p + 1.0) + c3 * (p + 3.0) * std::pow(x1, p + 2.0);

    ShootResult res;
    res.peak = std::abs(chi);
    double sign = chi >= 0.0 ? 1.0 : -1.0;
    for (int i = 0; i + 2 < n; i += 2) {
        const double k1c = dchi, k1d = (V[i] - eps) * chi;
        const double c2_ = chi + 0.5 * H * k1c, d2_ = dchi + 0.5 * H * k1d;
        const double k2c = d2_, k2d = (V[i + 1] - eps) * c2_;
        const double c3_ = chi + 0.5 * H * k2c, d3_ = dchi + 0.5 * H * k2d;
        const double k3c = d3_, k3d = (V[i + 1] - eps) * c3_;
        const double c4_ = chi + H * k3c, d4_ = dchi + H * k3d;
        const double k4c = d4_, k4d = (V[i + 2] - eps) * c4_;
        chi += H / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
        dchi += H / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        if (chi != 0.0) {
            const double s = chi >= 0.0 ? 1.0 : -1.0;
            if (s != sign) {
                ++res.nodes;
                sign = s;
            }
        }
        res.peak = std::max(res.peak, std::abs(chi));
        if (std::abs(chi) > 1e250) { // rescale, nodes unaffected
            chi *= 1e-250;
            dchi *= 1e-250;
            res.peak *= 1e-250;
        }
    }
    res.chi_end = chi;
    return res;
}

} // namespace

double shooting_eigen(const PotentialSamples& pot, int n_r) {
    if (n_r < 0) throw DomainError("n_r must be >= 0");
    const std::vector<double>& V = pot.values;
    double vmin = V[0], vend = V.back();
    for (double v : V) vmin = std::min(vmin, v);

    double lo = vmin - 0.001 * std::abs(vmin) - 1.0;
    double hi = vend;
    const int scan = 128;
    int n_lo = shoot_once(pot, lo).nodes;
    double prev = lo;
    double bra = 0.0, brb = 0.0;
    bool found = false;
    for (int j = 1; j <= scan; ++j) {
        const double eps = lo + (hi - lo) * j / scan;
        const int nn = shoot_once(pot, eps).nodes;
        if (n_lo <= n_r && nn >= n_r + 1) {
            bra = prev;
            brb = eps;
            found = true;
            break;
        }
        prev = eps;
        n_lo = nn;
    }
    if (!found) throw BracketingFailure("shooting: no node-count transition in scanned window");

    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (bra + brb);
        const ShootResult sr = shoot_once(pot, mid);
        if (sr.nodes >= n_r + 1)
            brb = mid;
        else
            bra = mid;
        if (brb - bra < 1e-14 * std::max(1.0, std::abs(mid))) {
            if (std::abs(sr.chi_end) < 1e-12 * sr.peak) break;
        }
        if (brb - bra < 4e-16 * std::max(1.0, std::abs(mid))) break;
    }
    return 0.5 * (bra + brb);
}

namespace {

double solve_on_grid(const QuantumState& state, const PhysicalConstants& consts,
                     const DeformationParams& deform, const RadialGrid& grid, double e_ref,
                     int scan_steps, double tol_rel, SelfConsistentResult* diag_out) {
    // The closure series is frozen at the reference energy so the discrete
    // operator family stays continuous in E.
    const double ref_inv_lin = [&] {
        const MappedProblem mp = eckart_mapping(state, consts, deform, e_ref);
        return eckart_potential(mp.pot, grid).inv_lin;
    }();

    auto sample = [&](double E) {
        const MappedProblem mp = eckart_mapping(state, consts, deform, E);
        PotentialSamples pot = eckart_potential(mp.pot, grid);
        pot.inv_lin = ref_inv_lin;
        return pot;
    };
    int evals = 0;
    auto g_of = [&](double E) {
        ++evals;
        return fd_eigenvalue(sample(E), state.n_r) -
               eckart_mapping(state, consts, deform, E).epsilon_target;
    };

    const double e_max = 1.5 * e_ref;
    const double g_scale = std::abs(eckart_mapping(state, consts, deform, e_ref).epsilon_target);
    double root = 0.0;
    bool accepted = false;
    double prev = e_max / scan_steps;
    double g_prev = g_of(prev);
    for (int j = 2; j <= scan_steps && !accepted; ++j) {
        const double E = e_max * j / scan_steps;
        const double g_cur = g_of(E);
        if (g_prev == 0.0 || g_prev * g_cur < 0.0) {
            double bra = prev, brb = E, g_a = g_prev;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (bra + brb);
                if (mid <= bra || mid >= brb) break;
                const double g_mid = g_of(mid);
                if (g_a * g_mid <= 0.0)
                    brb = mid;
                else {
                    bra = mid;
                    g_a = g_mid;
                }
                if (brb - bra < tol_rel * std::abs(mid)) break;
            }
            root = 0.5 * (bra + brb);
            if (std::abs(g_of(root)) <= 1e-4 * std::max(g_scale, 1e-30)) accepted = true;
        }
        prev = E;
        g_prev = g_cur;
    }
    if (!accepted)
        throw BracketingFailure("self-consistent solve: no root of g(E) in scan window");

    if (diag_out) {
        const MappedProblem mp = eckart_mapping(state, consts, deform, root);
        const PotentialSamples pot = sample(root);
        diag_out->epsilon_numeric = fd_eigenvalue(pot, state.n_r);
        diag_out->epsilon_target = mp.epsilon_target;
        diag_out->residual_g = std::abs(diag_out->epsilon_numeric - diag_out->epsilon_target);
        diag_out->evaluations += evals;
        const std::vector<EigenPair> pairs = fd_eigen(pot, state.n_r + 1);
        diag_out->node_count = count_nodes(pairs[state.n_r].vector);
    }
    return root;
}

RadialGrid grid_for_state(const QuantumState& state, const PhysicalConstants& consts,
                          const DeformationParams& deform, const SolverOptions& opts,
                          double e_ref) {
    const MappedProblem mp = eckart_mapping(state, consts, deform, e_ref);
    // decay scale: epsilon - V(infinity) = epsilon + 2B
    const double decay_sq = mp.epsilon_target + 2.0 * mp.pot.B;
    return build_grid(-std::abs(decay_sq), deform.nu, opts.n_points, opts.x_max);
}

} // namespace

SelfConsistentResult self_consistent_energy(const QuantumState& state,
                                            const PhysicalConstants& consts,
                                            const DeformationParams& deform,
                                            const SolverOptions& opts) {
    if (!(deform.nu > 0.0)) throw DeformationRequired("self_consistent_energy needs nu > 0");
    const QuadraticRoots roots = energy_quadratic_roots(state, consts, deform);
    const double e_ref = roots.e_high;

    SelfConsistentResult res;
    res.grid = grid_for_state(state, consts, deform, opts, e_ref);

    res.energy_full_grid = solve_on_grid(state, consts, deform, res.grid, e_ref, opts.scan_steps,
                                         opts.tol_rel, &res);
    if (opts.refine) {
        RadialGrid half = res.grid;
        half.n_points = (res.grid.n_points + 1) / 2;
        half.h = half.x_max / (half.n_points - 1);
        res.energy_half_grid =
            solve_on_grid(state, consts, deform, half, e_ref, opts.scan_steps, opts.tol_rel, nullptr);
        res.energy = (4.0 * res.energy_full_grid - res.energy_half_grid) / 3.0;
    } else {
        res.energy_half_grid = 0.0;
        res.energy = res.energy_full_grid;
    }
    return res;
}

WavefunctionSamples export_wavefunction(const QuantumState& state, const PhysicalConstants& consts,
                                        const DeformationParams& deform,
                                        const SolverOptions& opts) {
    const SelfConsistentResult sc = self_consistent_energy(state, consts, deform, opts);
    const MappedProblem mp = eckart_mapping(state, consts, deform, sc.energy_full_grid);
    const PotentialSamples pot = eckart_potential(mp.pot, sc.grid);
    const std::vector<EigenPair> pairs = fd_eigen(pot, state.n_r + 1);
    const EigenPair& ep = pairs[state.n_r];

    WavefunctionSamples ws;
    ws.energy = sc.energy;
    ws.k = state.k;
    ws.n_r = state.n_r;
    ws.branch = state.branch;
    ws.nu = deform.nu;
    ws.a = deform.a;
    ws.x.resize(sc.grid.interior());
    ws.r.resize(sc.grid.interior());
    ws.chi = ep.vector;
    for (int i = 0; i < sc.grid.interior(); ++i) {
        ws.x[i] = sc.grid.x(i);
        ws.r[i] = map_x_to_r(ws.x[i], deform.nu);
    }
    ws.nodes = count_nodes(ws.chi);
    return ws;
}

} // namespace defdirac
