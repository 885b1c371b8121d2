#pragma once

#include <span>
#include <vector>

namespace defdirac {

// Symmetric tridiagonal eigen tools (Sturm bisection + inverse iteration).
// diag has n entries, off has n-1.

// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count_below(std::span<const double> diag, std::span<const double> off, double x);

// The idx-th eigenvalue (ascending, 0-based), bisected to relative tail ~1e-15.
double tridiag_eigenvalue(std::span<const double> diag, std::span<const double> off, int idx);

// Lowest `count` eigenvalues, ascending.
std::vector<double> tridiag_lowest_eigenvalues(std::span<const double> diag,
                                               std::span<const double> off, int count);

// Normalized eigenvector for a converged eigenvalue, via inverse iteration
// with partial-pivot tridiagonal solves.
std::vector<double> tridiag_eigenvector(std::span<const double> diag,
                                        std::span<const double> off, double eigenvalue);

} // namespace defdirac
