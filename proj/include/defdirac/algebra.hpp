#pragma once

#include <array>
#include <span>
#include <vector>

#include "defdirac/params.hpp"

namespace defdirac {

// Tridiagonal operator over a 1-D uniform grid (all nodes, no boundary
// elimination); complex factors like i*hbar are tracked analytically by the
// callers, entries stay real.
struct GridOperator {
    int n = 0;
    double h = 0.0;
    std::vector<double> lower, diag, upper;

    std::vector<double> apply(std::span<const double> v) const;
};

// Central-difference derivative matrix (antisymmetric interior rows).
GridOperator central_difference(int n, double h);

// Max |([x, P] - i hbar f) chi| over interior rows (outer 5% excluded), with
// P = f^{1/2} p f^{1/2}, f = 1 + nu x, applied to the linear test function
// chi = 1 + x. Exact at nu = 0; O(h^2) otherwise.
double deformed_commutator_residual(double nu, double x_max, int n_points, double hbar = 1.0);

// f = 1 (nu = 0) must give P identical to p entrywise.
GridOperator deformed_momentum(double nu, double x_max, int n_points);

struct LambdaMatrix {
    // row-major 2x2: [[k, C1/(hbar c) + m c C2/hbar], [-C1/(hbar c) + m c C2/hbar, -k]]
    std::array<double, 4> entries{};
    double eig_plus = 0.0;
    double eig_minus = 0.0;
};

// Eigenvalues by the characteristic quadratic; compare with lambda_eigenvalue
// under C1 = -e2, C2 = a. Throws SupercriticalCoupling when the squared
// eigenvalue is negative.
LambdaMatrix lambda_matrix_numeric(const PhysicalConstants& consts, double C1, double C2, int k);

struct SeparabilityResiduals {
    double res1 = 0.0; // |C1 D(f/r) - dU/dr|, central difference vs analytic
    double res2 = 0.0; // |C2 D(f/r) - df1/dr|
};

// f = 1 + nu r, f1 = 1 + a/r, U = -e2/r, C1 = -e2, C2 = a; the f/r derivative
// is taken by central differences on a strictly positive r-grid, the right
// hand sides analytically.
SeparabilityResiduals separability_residual(const PhysicalConstants& consts,
                                            const DeformationParams& deform, double r_min,
                                            double r_max, int n_points);

} // namespace defdirac
