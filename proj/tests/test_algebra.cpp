#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "defdirac/algebra.hpp"
#include "defdirac/params.hpp"

using namespace defdirac;

TEST_CASE("deformed momentum reduces to the plain derivative at nu = 0") {
    const GridOperator p = central_difference(101, 0.1);
    const GridOperator s = deformed_momentum(0.0, 10.0, 101);
    for (int i = 0; i < 100; ++i) {
        CHECK(s.upper[i] == p.upper[i]);
        CHECK(s.lower[i] == p.lower[i]);
    }
    for (int i = 0; i < 101; ++i) CHECK(s.diag[i] == 0.0);
}

TEST_CASE("deformed commutator residual") {
    SUBCASE("exact for the undeformed pair") {
        CHECK(deformed_commutator_residual(0.0, 10.0, 401) <= 1e-12);
    }
    SUBCASE("second order in h and monotone under halving") {
        double prev = 1e300;
        std::vector<double> hs, rs;
        for (int n : {201, 401, 801, 1601}) {
            const double r = deformed_commutator_residual(0.01, 10.0, n);
            CHECK(r < prev);
            prev = r;
            hs.push_back(10.0 / (n - 1));
            rs.push_back(r);
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < hs.size(); ++i) {
            sx += std::log(hs[i]);
            sy += std::log(rs[i]);
            sxx += std::log(hs[i]) * std::log(hs[i]);
            sxy += std::log(hs[i]) * std::log(rs[i]);
        }
        const double slope = (hs.size() * sxy - sx * sy) / (hs.size() * sxx - sx * sx);
        CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
    }
    SUBCASE("hbar scales the residual linearly") {
        const double r1 = deformed_commutator_residual(0.05, 10.0, 401, 1.0);
        const double r2 = deformed_commutator_residual(0.05, 10.0, 401, 2.0);
        CHECK(r2 == doctest::Approx(2.0 * r1).epsilon(1e-13));
    }
}

TEST_CASE("lambda matrix") {
    PhysicalConstants c{1.0, 1.0, 1.0, 0.5};
    SUBCASE("diagonal case") {
        const LambdaMatrix lm = lambda_matrix_numeric(c, 0.0, 0.0, 2);
        CHECK(lm.eig_plus == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(lm.eig_minus == doctest::Approx(-2.0).epsilon(1e-15));
    }
    SUBCASE("pinned couplings") {
        const LambdaMatrix lm = lambda_matrix_numeric(c, -0.5, 0.1, 1);
        CHECK(lm.eig_plus == doctest::Approx(std::sqrt(0.76)).epsilon(1e-14));
    }
    SUBCASE("trace free") {
        const LambdaMatrix lm = lambda_matrix_numeric(c, -0.3, 0.2, 3);
        CHECK(lm.entries[0] + lm.entries[3] == 0.0);
    }
    SUBCASE("matches the closed form across draws") {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double C1 = -(0.05 + 0.9 * unif(rng));
            const double C2 = 0.3 * unif(rng);
            const int k = 1 + static_cast<int>(unif(rng) * 3);
            PhysicalConstants cc{1.0, 1.0, 1.0, -C1};
            const DeformationParams d = DeformationParams::with_a(0.0, C2, cc);
            const Couplings cp = derive_couplings(cc, d);
            if (k * k <= cp.alpha_bar_sq) continue;
            const LambdaMatrix lm = lambda_matrix_numeric(cc, C1, C2, k);
            const double closed = lambda_eigenvalue(cp, k, Branch::plus);
            worst = std::max(worst, std::abs(lm.eig_plus - closed) / closed);
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("separability residuals") {
    PhysicalConstants c{1.0, 1.0, 1.0, 0.5};
    SUBCASE("analytic derivatives cancel identically") {
        // d/dr(f/r) = -1/r^2, dU/dr = e2/r^2, df1/dr = -a/r^2
        for (double r : {0.5, 1.0, 3.0}) {
            const double dfr = -1.0 / (r * r);
            CHECK(-c.e2 * dfr - c.e2 / (r * r) == 0.0);
            CHECK(0.05 * dfr - (-0.05 / (r * r)) == 0.0);
        }
    }
    SUBCASE("a = 0 leaves res2 at zero") {
        const DeformationParams d = DeformationParams::with_a(0.1, 0.0, c);
        const SeparabilityResiduals sr = separability_residual(c, d, 0.5, 5.0, 101);
        CHECK(sr.res2 == 0.0);
    }
    SUBCASE("central differences decay at second order") {
        const DeformationParams d = DeformationParams::with_a(0.1, 0.05, c);
        std::vector<double> hs, r1, r2;
        for (int n : {201, 401, 801}) {
            const SeparabilityResiduals sr = separability_residual(c, d, 1.0, 6.0, n);
            hs.push_back(5.0 / (n - 1));
            r1.push_back(sr.res1);
            r2.push_back(sr.res2);
        }
        auto slope = [&](const std::vector<double>& ys) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (size_t i = 0; i < hs.size(); ++i) {
                sx += std::log(hs[i]);
                sy += std::log(ys[i]);
                sxx += std::log(hs[i]) * std::log(hs[i]);
                sxy += std::log(hs[i]) * std::log(ys[i]);
            }
            return (hs.size() * sxy - sx * sy) / (hs.size() * sxx - sx * sx);
        };
        CHECK(slope(r1) == doctest::Approx(2.0).epsilon(0.05));
        CHECK(slope(r2) == doctest::Approx(2.0).epsilon(0.05));
    }
}
