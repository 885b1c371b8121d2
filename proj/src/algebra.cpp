#include "defdirac/algebra.hpp"

#include <cmath>

namespace defdirac {

std::vector<double> GridOperator::apply(std::span<const double> v) const {
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = diag[i] * v[i];
        if (i > 0) s += lower[i - 1] * v[i - 1];
        if (i + 1 < n) s += upper[i] * v[i + 1];
        out[i] = s;
    }
    return out;
}

GridOperator central_difference(int n, double h) {
    GridOperator d;
    d.n = n;
    d.h = h;
    d.lower.assign(n - 1, -0.5 / h);
    d.diag.assign(n, 0.0);
    d.upper.assign(n - 1, 0.5 / h);
    return d;
}

namespace {

GridOperator scaled_momentum(double nu, double x_max, int n_points) {
    // P = f^{1/2} p f^{1/2} as a real matrix (the -i hbar factor is analytic);
    // stored entries are those of F^{1/2} D F^{1/2}
    const double h = x_max / (n_points - 1);
    GridOperator s = central_difference(n_points, h);
    for (int i = 0; i + 1 < n_points; ++i) {
        const double fi = std::sqrt(1.0 + nu * (h * i));
        const double fj = std::sqrt(1.0 + nu * (h * (i + 1)));
        s.upper[i] *= fi * fj;
        s.lower[i] *= fj * fi;
    }
    return s;
}

} // namespace

GridOperator deformed_momentum(double nu, double x_max, int n_points) {
    return scaled_momentum(nu, x_max, n_points);
}

double deformed_commutator_residual(double nu, double x_max, int n_points, double hbar) {
    const double h = x_max / (n_points - 1);
    const GridOperator S = scaled_momentum(nu, x_max, n_points);

    // residual operator applied to the linear test function chi = 1 + x:
    // [x, P] - i hbar f  ->  -i hbar [ (X S - S X) chi + f chi ]
    std::vector<double> chi(n_points), xchi(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double x = h * i;
        chi[i] = 1.0 + x;
        xchi[i] = x * chi[i];
    }
    const std::vector<double> s_chi = S.apply(chi);
    const std::vector<double> s_xchi = S.apply(xchi);

    const int skip = std::max(1, static_cast<int>(0.05 * n_points));
    double worst = 0.0;
    for (int i = skip; i < n_points - skip; ++i) {
        const double x = h * i;
        const double f = 1.0 + nu * x;
        const double res = x * s_chi[i] - s_xchi[i] + f * chi[i];
        worst = std::max(worst, std::abs(hbar * res));
    }
    return worst;
}

LambdaMatrix lambda_matrix_numeric(const PhysicalConstants& consts, double C1, double C2, int k) {
    if (k == 0) throw ConfigError("k must be nonzero");
    const double off1 = C1 / (consts.hbar * consts.c) + consts.m * consts.c / consts.hbar * C2;
    const double off2 = -C1 / (consts.hbar * consts.c) + consts.m * consts.c / consts.hbar * C2;

    LambdaMatrix lm;
    lm.entries = {static_cast<double>(k), off1, off2, static_cast<double>(-k)};
    // trace-free: characteristic quadratic lambda^2 = k^2 + off1*off2
    const double lam2 = static_cast<double>(k) * k + off1 * off2;
    if (lam2 < 0.0) throw SupercriticalCoupling("2x2 eigenvalues imaginary");
    lm.eig_plus = std::sqrt(lam2);
    lm.eig_minus = -lm.eig_plus;
    return lm;
}

SeparabilityResiduals separability_residual(const PhysicalConstants& consts,
                                            const DeformationParams& deform, double r_min,
                                            double r_max, int n_points) {
    if (!(r_min > 0.0) || !(r_max > r_min)) throw InvalidGrid("need 0 < r_min < r_max");
    if (n_points < 3) throw InvalidGrid("n_points must be >= 3");
    const double h = (r_max - r_min) / (n_points - 1);
    const double C1 = -consts.e2;
    const double C2 = deform.a;

    SeparabilityResiduals out;
    for (int i = 1; i + 1 < n_points; ++i) {
        const double r = r_min + h * i;
        const double rm = r - h, rp = r + h;
        const double fr_m = (1.0 + deform.nu * rm) / rm;
        const double fr_p = (1.0 + deform.nu * rp) / rp;
        const double dfr = (fr_p - fr_m) / (2.0 * h); // central difference of f/r
        const double du = consts.e2 / (r * r);        // dU/dr analytic
        const double df1 = -deform.a / (r * r);       // df1/dr analytic
        out.res1 = std::max(out.res1, std::abs(C1 * dfr - du));
        out.res2 = std::max(out.res2, std::abs(C2 * dfr - df1));
    }
    return out;
}

} // namespace defdirac
