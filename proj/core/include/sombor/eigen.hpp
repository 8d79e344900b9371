#pragma once

#include <vector>

#include "sombor/matrix.hpp"

namespace sombor {

/// Eigenvalue multiset of a symmetric matrix, sorted descending. Carries no
/// eigenvector information.
struct Spectrum {
    std::vector<double> values;

    size_t size() const { return values.size(); }
    double sum() const;
    double abs_sum() const;
};

inline constexpr double kDefaultEigTol = 1e-12;

/// Eigenvalues by cyclic Jacobi with row-cyclic sweeps. Terminates once the
/// off-diagonal Frobenius norm drops below tol times the Frobenius norm of M.
/// Throws std::invalid_argument if tol <= 0.
Spectrum symmetric_eigenvalues(const DenseSymMatrix& m, double tol = kDefaultEigTol);

/// Sum of absolute eigenvalues. Graph energy is energy(adjacency_matrix(g));
/// Sombor energy is energy(sombor_matrix(g)).
double energy(const DenseSymMatrix& m, double tol = kDefaultEigTol);

}  // namespace sombor
