#include "sombor/invariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sombor {

double sombor_index(const Graph& g) {
    double sum = 0.0;
    for (const Edge& e : g.edges())
        sum += sombor_edge_weight(static_cast<double>(g.degree(e.u)),
                                  static_cast<double>(g.degree(e.v)));
    return sum;
}

DenseSymMatrix adjacency_matrix(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("adjacency_matrix: empty graph has no matrix");
    DenseSymMatrix a(g.vertex_count());
    for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
    return a;
}

DenseSymMatrix sombor_matrix(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("sombor_matrix: empty graph has no matrix");
    DenseSymMatrix s(g.vertex_count());
    for (const Edge& e : g.edges())
        s.set(e.u, e.v,
              sombor_edge_weight(static_cast<double>(g.degree(e.u)),
                                 static_cast<double>(g.degree(e.v))));
    return s;
}

DenseSymMatrix reduced_matrix(ReducedKind kind, int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("reduced_matrix requires k, m >= 1");
    DenseSymMatrix b(m + 1);
    const double kd = static_cast<double>(k), md = static_cast<double>(m);
    if (kind == ReducedKind::splitting) {
        const double original_degree = (md + 1.0) * kd;
        b.set(0, 0, sombor_edge_weight(original_degree, original_degree));
        for (int j = 1; j <= m; ++j)
            b.set(0, j, sombor_edge_weight(original_degree, kd));
    } else {
        const double shadow_degree = md * kd;
        const double w = sombor_edge_weight(shadow_degree, shadow_degree);
        b.set(0, 0, w);
        for (int j = 1; j <= m; ++j) b.set(0, j, w);
    }
    return b;
}

Spectrum rank2_spectrum(double a, double b, int m) {
    if (m < 1) throw std::invalid_argument("rank2_spectrum requires m >= 1");
    const double discriminant = std::sqrt(a * a + 4.0 * m * b * b);
    Spectrum spec;
    spec.values.assign(static_cast<size_t>(m + 1), 0.0);
    spec.values.front() = (a + discriminant) / 2.0;
    spec.values.back() = (a - discriminant) / 2.0;
    std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
    return spec;
}

}  // namespace sombor
