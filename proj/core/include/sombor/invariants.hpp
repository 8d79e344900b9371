#pragma once

#include <cmath>

#include "sombor/eigen.hpp"
#include "sombor/graph.hpp"
#include "sombor/matrix.hpp"

namespace sombor {

/// Weight contributed by an edge whose endpoints have degrees du and dv:
/// sqrt(du^2 + dv^2). Shared by sombor_index, sombor_matrix and
/// reduced_matrix so structurally equal entries are computed identically.
inline double sombor_edge_weight(double du, double dv) {
    return std::sqrt(du * du + dv * dv);
}

/// Sombor index: sum of sombor_edge_weight over all edges, accumulated in
/// lexicographic edge order. Zero on edgeless graphs.
double sombor_index(const Graph& g);

/// 0/1 adjacency matrix. Throws std::invalid_argument on the empty graph
/// (matrices have positive order).
DenseSymMatrix adjacency_matrix(const Graph& g);

/// Matrix with sombor_edge_weight(d(u), d(v)) on edges, zero elsewhere.
/// For a k-regular graph this equals k*sqrt(2) times the adjacency matrix.
DenseSymMatrix sombor_matrix(const Graph& g);

enum class ReducedKind { splitting, shadow };

/// The (m+1) x (m+1) arrowhead factor of the transformed Sombor matrix.
///
/// splitting: head (m+1)k*sqrt(2), arms k*sqrt(m^2+2m+2). The identity
///   sombor_matrix(m_splitting(g, m)) == kronecker(reduced, adjacency_matrix(g))
/// holds entrywise for k-regular g under the copy-major vertex layout.
///
/// shadow: head and arms both mk*sqrt(2). This is a claim object only: the
/// shadow construction actually joins every copy pair, which yields an
/// all-ones block pattern, not this arrowhead.
DenseSymMatrix reduced_matrix(ReducedKind kind, int k, int m);

/// Eigenvalues of the arrowhead matrix with head a and m arms b: zero with
/// multiplicity m-1 plus the roots of x^2 - a*x - m*b^2 = 0, descending.
Spectrum rank2_spectrum(double a, double b, int m);

}  // namespace sombor
