#pragma once

#include <string>

#include "defdirac/errors.hpp"

namespace defdirac {

enum class Branch { plus, minus };

inline const char* to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

// hbar, m, c, e2 are kept explicit everywhere; natural units hbar=m=c=1 are
// only the default construction, never an assumption.
struct PhysicalConstants {
    double hbar = 1.0;
    double m = 1.0;
    double c = 1.0;
    double e2 = 1.0; // charge squared, energy*length

    void validate() const;
    double mc2() const { return m * c * c; }
    double alpha() const { return e2 / (hbar * c); }
};

// Deformation strength nu (f = 1 + nu r) and mass parameter a (f1 = 1 + a/r).
// One of {a, abar} is primary; the other follows from a = (e2/mc^2) * abar.
struct DeformationParams {
    double nu = 0.0;
    double a = 0.0;
    double abar = 0.0;

    static DeformationParams with_a(double nu, double a, const PhysicalConstants& consts);
    static DeformationParams with_abar(double nu, double abar, const PhysicalConstants& consts);
};

struct Couplings {
    double alpha = 0.0;         // e2/(hbar c)
    double mca_over_hbar = 0.0; // m c a / hbar
    double alpha_bar_sq = 0.0;  // alpha^2 - (m c a/hbar)^2, may be negative
};

Couplings derive_couplings(const PhysicalConstants& consts, const DeformationParams& deform);

// +/- sqrt(k^2 - alpha_bar^2). Throws SupercriticalCoupling when k^2 <= alpha_bar^2.
double lambda_eigenvalue(const Couplings& coup, int k, Branch branch);

// l* = sqrt(k^2 - alpha_bar^2) - 1 (plus branch) or sqrt(k^2 - alpha_bar^2) (minus).
double effective_orbital(const Couplings& coup, int k, Branch branch);

// n = n_r + l* + 1; throws NonPositivePrincipal when n <= 0.
double principal_quantum_number(int n_r, double l_star);

// (E/mc^2) e2 > (hbar^2 nu/m) k^2 + mc^2 a
bool bound_state_condition(double energy, const PhysicalConstants& consts,
                           const DeformationParams& deform, int k);

// k and -k are distinct states even though every implemented formula depends
// on k^2 only.
struct QuantumState {
    int k = 1;
    int n_r = 0;
    Branch branch = Branch::plus;
    double lambda = 0.0;
    double l_star = 0.0;
    double n = 0.0;
};

QuantumState make_state(const Couplings& coup, int k, int n_r, Branch branch);

} // namespace defdirac
