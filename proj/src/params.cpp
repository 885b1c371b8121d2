#include "defdirac/params.hpp"

#include <cmath>

namespace defdirac {

void PhysicalConstants::validate() const {
    if (!(hbar > 0.0)) throw ConfigError("hbar must be > 0");
    if (!(m > 0.0)) throw ConfigError("m must be > 0");
    if (!(c > 0.0)) throw ConfigError("c must be > 0");
    if (!(e2 >= 0.0)) throw ConfigError("e2 must be >= 0");
}

namespace {
void check_nu(double nu) {
    // negative nu breaks the coordinate map domain; rejected rather than guessed
    if (!(nu >= 0.0)) throw ConfigError("nu must be >= 0");
}
} // namespace

DeformationParams DeformationParams::with_a(double nu, double a, const PhysicalConstants& consts) {
    check_nu(nu);
    consts.validate();
    DeformationParams d;
    d.nu = nu;
    d.a = a;
    d.abar = consts.e2 > 0.0 ? a * consts.mc2() / consts.e2 : 0.0;
    return d;
}

DeformationParams DeformationParams::with_abar(double nu, double abar,
                                               const PhysicalConstants& consts) {
    check_nu(nu);
    consts.validate();
    DeformationParams d;
    d.nu = nu;
    d.abar = abar;
    d.a = consts.e2 / consts.mc2() * abar;
    return d;
}

Couplings derive_couplings(const PhysicalConstants& consts, const DeformationParams& deform) {
    consts.validate();
    Couplings c;
    c.alpha = consts.alpha();
    c.mca_over_hbar = consts.m * consts.c * deform.a / consts.hbar;
    c.alpha_bar_sq = c.alpha * c.alpha - c.mca_over_hbar * c.mca_over_hbar;
    return c;
}

namespace {
double lambda_magnitude(const Couplings& coup, int k) {
    if (k == 0) throw ConfigError("k must be a nonzero integer");
    const double s2 = static_cast<double>(k) * k - coup.alpha_bar_sq;
    if (!(s2 > 0.0))
        throw SupercriticalCoupling("k^2 <= alpha_bar^2 (k=" + std::to_string(k) + ")");
    return std::sqrt(s2);
}
} // namespace

double lambda_eigenvalue(const Couplings& coup, int k, Branch branch) {
    const double s = lambda_magnitude(coup, k);
    return branch == Branch::plus ? s : -s;
}

double effective_orbital(const Couplings& coup, int k, Branch branch) {
    const double s = lambda_magnitude(coup, k);
    return branch == Branch::plus ? s - 1.0 : s;
}

double principal_quantum_number(int n_r, double l_star) {
    if (n_r < 0) throw ConfigError("n_r must be >= 0");
    const double n = n_r + l_star + 1.0;
    if (!(n > 0.0)) throw NonPositivePrincipal("n = n_r + l* + 1 <= 0");
    return n;
}

bool bound_state_condition(double energy, const PhysicalConstants& consts,
                           const DeformationParams& deform, int k) {
    const double lhs = energy / consts.mc2() * consts.e2;
    const double rhs = consts.hbar * consts.hbar * deform.nu / consts.m *
                           (static_cast<double>(k) * k) +
                       consts.mc2() * deform.a;
    return lhs > rhs;
}

QuantumState make_state(const Couplings& coup, int k, int n_r, Branch branch) {
    QuantumState st;
    st.k = k;
    st.n_r = n_r;
    st.branch = branch;
    st.lambda = lambda_eigenvalue(coup, k, branch);
    st.l_star = effective_orbital(coup, k, branch);
    st.n = principal_quantum_number(n_r, st.l_star);
    return st;
}

} // namespace defdirac
