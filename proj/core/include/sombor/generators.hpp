#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Copy count used by the shadow transform: `definition` takes m copies,
/// `example` takes m+1. Both are useful because published treatments of the
/// shadow graph disagree on which count they mean; keeping the two variants
/// first-class lets the claim suite measure each.
enum class ShadowConvention { definition, example };

std::string_view to_string(ShadowConvention c);
ShadowConvention parse_convention(std::string_view text);

// Base families. All throw std::invalid_argument on bad parameters.
Graph cycle(int n);                            // n >= 3, 2-regular
Graph complete(int n);                         // n >= 1, (n-1)-regular
Graph complete_bipartite(int a, int b);        // a,b >= 1
Graph hypercube(int d);                        // d >= 1, 2^d vertices, d-regular
Graph prism(int n);                            // n >= 3, circular ladder, 3-regular

/// Pairing-model sample of a k-regular graph on n vertices. Deterministic in
/// the seed. Requires n*k even and k < n; rejects pairings containing loops
/// or multi-edges, capped at 1000 attempts (std::runtime_error afterwards).
Graph random_regular(int n, int k, std::uint64_t seed);

/// Adds m clones per vertex; clone (i, j), j in 1..m, sits at index j*n + i
/// and is adjacent to exactly the neighbors of vertex i. Requires m >= 1.
Graph m_splitting(const Graph& g, int m);

/// Takes c copies of g (c = m or m+1 by convention); vertex i of copy t sits
/// at index t*n + i and is adjacent to the neighbors of its counterpart in
/// every copy, the copy it lives in included. Requires m >= 1.
Graph m_shadow(const Graph& g, int m, ShadowConvention convention = ShadowConvention::definition);

enum class Family {
    cycle,
    complete,
    complete_bipartite,
    hypercube,
    prism,
    random_regular,
    custom,  // externally supplied graph (e.g. read from file); not generable
};

std::string_view to_string(Family f);

struct Transform {
    enum class Kind { splitting, shadow };
    Kind kind = Kind::splitting;
    int m = 1;
    ShadowConvention convention = ShadowConvention::definition;  // shadow only
};

/// Declarative graph description: a base family plus a transform pipeline.
///
/// String grammar (case-insensitive): `family(args)` followed by zero or
/// more `|`-separated transforms, e.g.
///   cycle(6)
///   cycle(6)|splitting(m=1)
///   complete(4)|shadow(m=2,convention=definition)
///   random_regular(10,3,42)
struct GraphSpec {
    Family family = Family::custom;
    std::vector<std::int64_t> args;
    std::vector<Transform> pipeline;
    std::string label;  // used for Family::custom (display only)

    static GraphSpec parse(std::string_view text);
    std::string to_string() const;
};

/// Builds the base family graph and applies the pipeline left to right.
Graph generate(const GraphSpec& spec);

}  // namespace sombor
