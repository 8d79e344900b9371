#include "sombor/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sombor {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Graph::Graph(int n, const std::vector<Edge>& edge_list) : Graph(n) {
    for (const Edge& e : edge_list) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge index out of range: (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") with n=" + std::to_string(n));
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += static_cast<int>(nbrs.size());
    }
    edge_count_ /= 2;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                std::to_string(n_) + ")");
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

std::span<const int> Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                std::to_string(n_) + ")");
    return adj_[static_cast<size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.push_back({u, v});
    return out;  // adjacency lists are sorted, so this is lexicographic
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) throw std::invalid_argument("regularity undefined on the empty graph");
    const int k = static_cast<int>(adj_[0].size());
    for (const auto& nbrs : adj_)
        if (static_cast<int>(nbrs.size()) != k) return std::nullopt;
    return k;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("edge list: missing header line");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m)) throw std::runtime_error("edge list: header must be \"n m\"");
    std::string trailing;
    if (header >> trailing) throw std::runtime_error("edge list: trailing tokens in header");
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative count in header");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edge lines, got " + std::to_string(i));
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v))
            throw std::runtime_error("edge list: malformed edge on line " + std::to_string(i + 2));
        if (row >> trailing)
            throw std::runtime_error("edge list: trailing tokens on line " + std::to_string(i + 2));
        if (u >= v)
            throw std::runtime_error("edge list: endpoints must satisfy u < v on line " +
                                     std::to_string(i + 2));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    Graph g(static_cast<int>(n), edges);
    if (g.edge_count() != static_cast<int>(m))
        throw std::runtime_error("edge list: duplicate edges in input");
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace sombor
