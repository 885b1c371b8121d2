#pragma once

#include <span>
#include <vector>

#include "defdirac/closed_form.hpp"
#include "defdirac/params.hpp"

namespace defdirac {

// Uniform grid on [0, x_max]; the eigenproblem lives on the interior points
// (Dirichlet at both ends).
struct RadialGrid {
    double x_max = 0.0;
    int n_points = 0; // total including both endpoints
    double h = 0.0;

    int interior() const { return n_points - 2; }
    double x(int interior_index) const { return h * (interior_index + 1); }
};

// x = ln(1 + nu r)/nu and its inverse; nu = 0 is the identity.
double map_r_to_x(double r, double nu);
double map_x_to_r(double x, double nu);

// Grid sizing: kappa = sqrt(max(|epsilon_scale|, kappa_min^2)) with
// kappa_min = 1e-2; x_max = 13 ln(10)/kappa (tail below 1e-12), clamped to
// [10/nu', 200/nu'], nu' = max(nu, kappa). epsilon_scale should be the decay
// rate squared of the target state, i.e. epsilon - V(infinity).
// x_max_override > 0 is honored verbatim.
RadialGrid build_grid(double epsilon_scale, double nu, int n_points, double x_max_override = 0.0);

struct PotentialSamples {
    RadialGrid grid;
    std::vector<double> values; // at interior points, 1/length^2 units
    // Origin expansion V ~ inv_sq/x^2 + inv_lin/x + v0 + v1 x, used by the
    // indicial closure and the shooting series start.
    bool has_origin_series = false;
    double inv_sq = 0.0;
    double inv_lin = 0.0;
    double v0 = 0.0;
    double v1 = 0.0;
};

PotentialSamples eckart_potential(const EckartParams& p, const RadialGrid& grid);

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector; // interior values, normalized sum(v^2) h = 1
};

// Lowest `count` eigenpairs of -d^2/dx^2 + V with the symmetric three-point
// second difference and Dirichlet ends. When the potential carries a
// fractional indicial exponent p (chi ~ x^p at the origin), the diagonal
// entries near the origin use a closure exact on x^p + c1 x^(p+1); entries
// are unchanged for integer p. Plain 3-point behavior can be forced with
// origin_closure = false.
std::vector<EigenPair> fd_eigen(const PotentialSamples& pot, int count,
                                bool origin_closure = true);

// Eigenvalue only (no vector), same operator.
double fd_eigenvalue(const PotentialSamples& pot, int index, bool origin_closure = true);

// Outward RK4 integration (one-step, fourth order, stride 2h so midpoints fall
// on sampled nodes) from a series start at the first interior point; bisects
// on the node count of the solution. Throws BracketingFailure when the scanned
// window contains no count transition.
double shooting_eigen(const PotentialSamples& pot, int n_r);

// Strict sign changes, entries below 1e-12 * max|value| skipped.
int count_nodes(std::span<const double> values);

struct SolverOptions {
    int n_points = 4001;
    double x_max = 0.0;      // 0 = auto policy
    double tol_rel = 1e-10;  // outer root tolerance on E
    int scan_steps = 64;
    bool refine = true;      // two-grid h^2 extrapolation of the outer root
};

struct SelfConsistentResult {
    double energy = 0.0;          // refined when opts.refine, else the full-grid root
    double energy_full_grid = 0.0;
    double energy_half_grid = 0.0;
    double residual_g = 0.0;      // |eps_numeric - eps_target| at the full-grid root
    double epsilon_numeric = 0.0;
    double epsilon_target = 0.0;
    int node_count = 0;
    RadialGrid grid;
    int evaluations = 0;
};

// Root of g(E) = eps_numeric(E) - eps_target(E), where eps_numeric is the
// n_r-th FD eigenvalue of the potential mapped at E. The potential's B and the
// target both depend on E, so the eigenproblem is nonlinear in E; a bracket is
// scanned over (0, 1.5 E_high] and bisected.
SelfConsistentResult self_consistent_energy(const QuantumState& state,
                                            const PhysicalConstants& consts,
                                            const DeformationParams& deform,
                                            const SolverOptions& opts = {});

struct WavefunctionSamples {
    std::vector<double> x;
    std::vector<double> r;   // inverse coordinate map of x
    std::vector<double> chi; // normalized: sum(chi^2) h = 1
    double energy = 0.0;
    int k = 0;
    int n_r = 0;
    Branch branch = Branch::plus;
    double nu = 0.0;
    double a = 0.0;
    int nodes = 0;
};

WavefunctionSamples export_wavefunction(const QuantumState& state, const PhysicalConstants& consts,
                                        const DeformationParams& deform,
                                        const SolverOptions& opts = {});

} // namespace defdirac
