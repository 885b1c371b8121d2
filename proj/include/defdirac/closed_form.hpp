#pragma once

#include <functional>
#include <optional>

#include "defdirac/params.hpp"

namespace defdirac {

// Hyperbolic well V(x) = A(A - nu/2)/sinh^2(x nu/2) - 2B/tanh(x nu/2).
struct EckartParams {
    double A = 0.0;  // 1/length
    double B = 0.0;  // 1/length^2
    double nu = 0.0; // 1/length
};

struct EckartLevel {
    double epsilon = 0.0;        // -(A + nu n_r/2)^2 - B^2/(A + nu n_r/2)^2
    bool exists = false;         // well_condition && level_condition
    bool well_condition = false; // B > A^2, A >= 0, B >= 0 (well supports at least one level)
    bool level_condition = false;// B > (A + nu n_r/2)^2 (this level decays)
};

EckartLevel eckart_level(const EckartParams& p, int n_r);

// Asterisked quantities of the separated radial problem.
struct EffectiveParams {
    double lstar_product = 0.0; // l*(l*+1)
    double e_star_sq = 0.0;     // e*^2, energy*length
    double e_star = 0.0;        // E*, energy
};

EffectiveParams effective_params(double energy, const QuantumState& state,
                                 const PhysicalConstants& consts,
                                 const DeformationParams& deform);

struct MappedProblem {
    EckartParams pot;
    double epsilon_target = 0.0; // 1/length^2
    EffectiveParams eff;
};

// Requires nu > 0; throws DeformationRequired otherwise.
MappedProblem eckart_mapping(const QuantumState& state, const PhysicalConstants& consts,
                             const DeformationParams& deform, double energy);

struct QuadraticRoots {
    double e_low = 0.0;
    double e_high = 0.0;
    double residual_low = 0.0;  // |quadratic at root| in mc^2 units
    double residual_high = 0.0;
};

// The level condition viewed as a quadratic in E; roots sorted ascending.
// Throws ComplexRoots when the discriminant is negative.
QuadraticRoots energy_quadratic_roots(const QuantumState& state, const PhysicalConstants& consts,
                                      const DeformationParams& deform);

// |LHS - RHS| of the level condition at the given E, in units of mc^2.
double quadratic_residual(double energy, const QuantumState& state,
                          const PhysicalConstants& consts, const DeformationParams& deform);

// The explicit radical expression for the level energy. Its agreement with
// the quadratic is monitored, never assumed (see
// SpectrumRecord::radical_residual).
double energy_radical(const QuantumState& state, const PhysicalConstants& consts,
                      const DeformationParams& deform);

struct SpectrumRecord {
    int k = 0;
    int n_r = 0;
    Branch branch = Branch::plus;
    double lambda = 0.0;
    double l_star = 0.0;
    double n = 0.0;
    double e_closed = 0.0;           // physical root of the level quadratic
    double e_radical = 0.0;          // radical-form value (NaN if its radicand < 0)
    double e_low = 0.0, e_high = 0.0;
    double quadratic_residual = 0.0; // residual of e_closed, mc^2 units
    double radical_residual = 0.0;   // residual of e_radical, mc^2 units
    int radical_matches_root = 1;    // 0 = low root, 1 = high root
    bool bound_ok = false;           // bound-state condition at e_closed
    bool level_exists = true;        // per-level well guard at e_closed (true when nu = 0)
    bool well_condition = true;
    std::optional<double> e_numeric;
    std::optional<int> node_count;
};

// Closed-form level: physical root of the quadratic, with the radical form and
// its residual carried as diagnostics. NoBoundState is a flag, not an error.
SpectrumRecord energy_exact(const QuantumState& state, const PhysicalConstants& consts,
                            const DeformationParams& deform);

// nu = 0 spectrum (position-dependent mass only). Requires a < e2/mc^2.
double energy_nu_zero(const PhysicalConstants& consts, double a, int k, Branch branch, int n_r);

struct NonRelativisticLevel {
    double e_prime = 0.0; // E' = E - mc^2 limit value
    bool bounded = false; // spectrum-limiting condition
};

NonRelativisticLevel energy_nonrelativistic(double m, double hbar, double e2, double nu,
                                            double abar, int k, double n);

// Comparison value for the deformed Coulomb problem solved directly at the
// nonrelativistic level, bracket [l(l+1)+1].
NonRelativisticLevel energy_qt(double m, double hbar, double e2, double nu, int l, double n);

// Removes the spin-orbit deformation contribution from the nonrelativistic
// level at k^2 = (l+1)^2 and must reproduce energy_qt exactly.
double qt_reconciliation(double m, double hbar, double e2, double nu, int l, double n);

struct SpinOrbitShift {
    double const_coeff = 0.0;        // energy
    double coulomb_like_coeff = 0.0; // energy*length, multiplies 1/r
};

SpinOrbitShift spin_orbit_shift(double m, double hbar, double nu, int k, int l);

struct CorrectionBreakdown {
    double delta1 = 0.0; // deformation-independent (Sommerfeld at abar = 0)
    double delta2 = 0.0; // pure deformation
    double delta3 = 0.0; // cross term
    double total = 0.0;
};

CorrectionBreakdown relativistic_correction(const PhysicalConstants& consts, double nu,
                                            double abar, int k, double n);

// U1(r) = mc^2 (f1^2 - 1)/2 with f1 = 1 + a/r. Throws DomainError at r <= 0.
std::function<double(double)> mass_potential_u1(const PhysicalConstants& consts,
                                                const DeformationParams& deform);

} // namespace defdirac
