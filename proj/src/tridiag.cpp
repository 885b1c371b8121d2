#include "defdirac/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "defdirac/errors.hpp"

namespace defdirac {

int sturm_count_below(std::span<const double> diag, std::span<const double> off, double x) {
    const int n = static_cast<int>(diag.size());
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        // exact zero pivot: x is an eigenvalue of the leading minor; the next
        // pivot must come out hugely negative and be counted
        double denom = q;
        if (denom == 0.0)
            denom = tiny;
        else if (std::abs(denom) < tiny)
            denom = std::copysign(tiny, denom);
        q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

namespace {

// Gershgorin bounds
void spectrum_bounds(std::span<const double> diag, std::span<const double> off, double& lo,
                     double& hi) {
    const int n = static_cast<int>(diag.size());
    lo = std::numeric_limits<double>::infinity();
    hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < n) r += std::abs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
}

} // namespace

double tridiag_eigenvalue(std::span<const double> diag, std::span<const double> off, int idx) {
    const int n = static_cast<int>(diag.size());
    if (idx < 0 || idx >= n) throw ConvergenceFailure("eigenvalue index out of range");
    double lo, hi;
    spectrum_bounds(diag, off, lo, hi);
    // bisection: invariant count(lo) <= idx < count(hi); runs to the float
    // resolution at the eigenvalue's own magnitude
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count_below(diag, off, mid) <= idx)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() *
                           std::max(std::abs(lo), std::abs(hi)))
            break;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> tridiag_lowest_eigenvalues(std::span<const double> diag,
                                               std::span<const double> off, int count) {
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(tridiag_eigenvalue(diag, off, i));
    return out;
}

std::vector<double> tridiag_eigenvector(std::span<const double> diag, std::span<const double> off,
                                        double eigenvalue) {
    const int n = static_cast<int>(diag.size());
    // inverse iteration with a partial-pivot LU of (T - lambda I)
    std::vector<double> dl(n), du1(std::max(0, n - 1)), du2(std::max(0, n - 2));
    std::vector<double> sub(std::max(0, n - 1));
    std::vector<int> piv(n, 0);

    const double shift = eigenvalue;
    for (int i = 0; i < n; ++i) dl[i] = diag[i] - shift;
    for (int i = 0; i + 1 < n; ++i) {
        du1[i] = off[i];
        sub[i] = off[i];
    }
    std::fill(du2.begin(), du2.end(), 0.0);

    // LU factorization (Thomas with row swaps)
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(sub[i]) > std::abs(dl[i])) {
            piv[i] = 1;
            std::swap(dl[i], sub[i]);
            std::swap(du1[i], dl[i + 1]);
            if (i + 2 < n) {
                du2[i] = du1[i + 1];
                du1[i + 1] = 0.0;
            }
        }
        const double denom =
            dl[i] != 0.0 ? dl[i]
                         : std::numeric_limits<double>::epsilon() * (std::abs(shift) + 1.0);
        const double mult = sub[i] / denom;
        sub[i] = mult;
        dl[i + 1] -= mult * du1[i];
        if (i + 2 < n) du1[i + 1] -= mult * du2[i];
    }
    if (dl[n - 1] == 0.0)
        dl[n - 1] = std::numeric_limits<double>::epsilon() * (std::abs(shift) + 1.0);

    auto solve = [&](std::vector<double>& b) {
        for (int i = 0; i + 1 < n; ++i) {
            if (piv[i]) std::swap(b[i], b[i + 1]);
            b[i + 1] -= sub[i] * b[i];
        }
        b[n - 1] /= dl[n - 1];
        if (n >= 2) b[n - 2] = (b[n - 2] - du1[n - 2] * b[n - 1]) / dl[n - 2];
        for (int i = n - 3; i >= 0; --i)
            b[i] = (b[i] - du1[i] * b[i + 1] - du2[i] * b[i + 2]) / dl[i];
    };

    std::vector<double> v(n, 1.0);
    for (int i = 0; i < n; ++i) v[i] = 1.0 / std::sqrt(static_cast<double>(n));
    for (int it = 0; it < 4; ++it) {
        solve(v);
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw ConvergenceFailure("inverse iteration failed");
        for (double& x : v) x /= norm;
    }
    // fix overall sign: first significant entry positive
    for (double x : v) {
        if (std::abs(x) > 1e-8) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            break;
        }
    }
    return v;
}

} // namespace defdirac
