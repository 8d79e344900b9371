#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace sombor {

/// Undirected edge with endpoints stored as u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction validates the simple-graph invariants: no self-loops, all
/// endpoints in range. Duplicate edges in the input collapse to one edge.
/// Neighbor lists are kept sorted, so iteration order is deterministic.
class Graph {
  public:
    /// Empty graph on n vertices (n may be zero).
    explicit Graph(int n);

    /// Graph on n vertices with the given edges. Endpoint order within an
    /// edge does not matter; duplicates are collapsed.
    /// Throws std::invalid_argument on a self-loop or an index >= n.
    Graph(int n, const std::vector<Edge>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    /// Degree of vertex v. Throws std::out_of_range if v is not a vertex.
    int degree(int v) const;

    /// Sorted neighbor indices of v. Throws std::out_of_range.
    std::span<const int> neighbors(int v) const;

    bool has_edge(int u, int v) const;

    /// All edges exactly once, sorted lexicographically by (u, v).
    std::vector<Edge> edges() const;

    /// k if every vertex has degree k, std::nullopt otherwise.
    /// Throws std::invalid_argument on the empty graph.
    std::optional<int> regular_degree() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Reads the edge-list interchange format:
///   line 1: "n m", then m lines "u v" with 0-based indices and u < v.
/// Throws std::runtime_error on malformed input.
Graph read_edge_list(std::istream& in);

/// Writes the same format; edges in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace sombor
