#include "sombor/generators.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace sombor {
namespace {

std::invalid_argument param_error(const std::string& msg) { return std::invalid_argument(msg); }

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view to_string(ShadowConvention c) {
    return c == ShadowConvention::definition ? "definition" : "example";
}

ShadowConvention parse_convention(std::string_view text) {
    const std::string t = lower(trim(text));
    if (t == "definition") return ShadowConvention::definition;
    if (t == "example") return ShadowConvention::example;
    throw param_error("unknown shadow convention \"" + std::string(text) +
                      "\" (expected definition or example)");
}

Graph cycle(int n) {
    if (n < 3) throw param_error("cycle(n) requires n >= 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        edges.push_back({std::min(i, j), std::max(i, j)});
    }
    return Graph(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw param_error("complete(n) requires n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw param_error("complete_bipartite(a,b) requires a, b >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(a) * b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, edges);
}

Graph hypercube(int d) {
    if (d < 1) throw param_error("hypercube(d) requires d >= 1");
    if (d > 20) throw param_error("hypercube(d) supports d <= 20");
    const int n = 1 << d;
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * d / 2);
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < d; ++bit) {
            int v = u ^ (1 << bit);
            if (u < v) edges.push_back({u, v});
        }
    return Graph(n, edges);
}

Graph prism(int n) {
    if (n < 3) throw param_error("prism(n) requires n >= 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(3) * n);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        edges.push_back({std::min(i, j), std::max(i, j)});          // outer cycle
        edges.push_back({std::min(i, j) + n, std::max(i, j) + n});  // inner cycle
        edges.push_back({i, n + i});                                // rung
    }
    return Graph(2 * n, edges);
}

Graph random_regular(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1) throw param_error("random_regular(n,k) requires n, k >= 1");
    if (k >= n) throw param_error("random_regular: no simple k-regular graph with k >= n");
    if ((static_cast<long long>(n) * k) % 2 != 0)
        throw param_error("random_regular: n*k must be even");

    std::mt19937_64 rng(seed);
    // Explicit Fisher-Yates with a modulo draw keeps the sample identical
    // across standard library implementations.
    auto draw = [&rng](size_t bound) { return static_cast<size_t>(rng() % bound); };

    std::vector<int> stubs(static_cast<size_t>(n) * k);
    const int max_attempts = 1000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        size_t pos = 0;
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < k; ++j) stubs[pos++] = v;
        for (size_t i = stubs.size() - 1; i > 0; --i) std::swap(stubs[i], stubs[draw(i + 1)]);

        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.insert({std::min(u, v), std::max(u, v)}).second) ok = false;
        }
        if (!ok) continue;

        std::vector<Edge> edges;
        edges.reserve(seen.size());
        for (const auto& [u, v] : seen) edges.push_back({u, v});
        return Graph(n, edges);
    }
    throw std::runtime_error("random_regular: retry limit exhausted (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ")");
}

Graph m_splitting(const Graph& g, int m) {
    if (m < 1) throw param_error("m_splitting requires m >= 1");
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    edges.reserve(edges.size() * (1 + 2 * static_cast<size_t>(m)));
    for (const Edge& e : g.edges())
        for (int j = 1; j <= m; ++j) {
            edges.push_back({std::min(e.v, j * n + e.u), std::max(e.v, j * n + e.u)});
            edges.push_back({std::min(e.u, j * n + e.v), std::max(e.u, j * n + e.v)});
        }
    return Graph((m + 1) * n, edges);
}

Graph m_shadow(const Graph& g, int m, ShadowConvention convention) {
    if (m < 1) throw param_error("m_shadow requires m >= 1");
    const int copies = convention == ShadowConvention::definition ? m : m + 1;
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(copies) * copies * g.edge_count());
    for (const Edge& e : g.edges())
        for (int t = 0; t < copies; ++t)
            for (int s = 0; s < copies; ++s) {
                int u = t * n + e.u, v = s * n + e.v;
                edges.push_back({std::min(u, v), std::max(u, v)});
            }
    return Graph(copies * n, edges);
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::hypercube: return "hypercube";
        case Family::prism: return "prism";
        case Family::random_regular: return "random_regular";
        case Family::custom: return "custom";
    }
    return "custom";
}

namespace {

struct Stage {
    std::string name;
    std::vector<std::string> args;
};

Stage parse_stage(std::string_view text) {
    text = trim(text);
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw param_error("graph spec: expected name(args) in \"" + std::string(text) + "\"");
    Stage stage;
    stage.name = lower(trim(text.substr(0, open)));
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    size_t start = 0;
    while (start <= inner.size() && !inner.empty()) {
        size_t comma = inner.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? inner.substr(start) : inner.substr(start, comma - start);
        stage.args.emplace_back(trim(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (stage.name.empty()) throw param_error("graph spec: missing stage name");
    return stage;
}

std::int64_t parse_int(const std::string& text, const std::string& where) {
    try {
        size_t used = 0;
        long long value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw param_error("graph spec: expected integer for " + where + ", got \"" + text + "\"");
    }
}

// Accepts `m=3` or a bare integer.
int parse_m_arg(const std::string& arg, const std::string& where) {
    std::string text = arg;
    if (auto eq = text.find('='); eq != std::string::npos) {
        if (lower(trim(text.substr(0, eq))) != "m")
            throw param_error("graph spec: unknown argument \"" + arg + "\" for " + where);
        text = std::string(trim(text.substr(eq + 1)));
    }
    auto value = parse_int(text, where + " m");
    if (value < 1) throw param_error("graph spec: " + where + " requires m >= 1");
    return static_cast<int>(value);
}

}  // namespace

GraphSpec GraphSpec::parse(std::string_view text) {
    if (trim(text).empty()) throw param_error("graph spec: empty string");
    GraphSpec spec;
    size_t start = 0;
    std::string str(text);
    std::vector<Stage> stages;
    while (start <= str.size()) {
        size_t bar = str.find('|', start);
        std::string_view piece = bar == std::string::npos
                                     ? std::string_view(str).substr(start)
                                     : std::string_view(str).substr(start, bar - start);
        stages.push_back(parse_stage(piece));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }

    const Stage& base = stages.front();
    auto expect_args = [&](size_t count) {
        if (base.args.size() != count)
            throw param_error("graph spec: " + base.name + " expects " + std::to_string(count) +
                              " argument(s)");
    };
    if (base.name == "cycle") {
        spec.family = Family::cycle;
        expect_args(1);
    } else if (base.name == "complete") {
        spec.family = Family::complete;
        expect_args(1);
    } else if (base.name == "complete_bipartite") {
        spec.family = Family::complete_bipartite;
        expect_args(2);
    } else if (base.name == "hypercube") {
        spec.family = Family::hypercube;
        expect_args(1);
    } else if (base.name == "prism") {
        spec.family = Family::prism;
        expect_args(1);
    } else if (base.name == "random_regular") {
        spec.family = Family::random_regular;
        expect_args(3);
    } else {
        throw param_error("graph spec: unknown family \"" + base.name + "\"");
    }
    for (const auto& arg : base.args) spec.args.push_back(parse_int(arg, base.name));
    for (size_t i = 0; i < spec.args.size(); ++i) {
        // Seed (third random_regular argument) may be zero; other parameters are positive.
        bool is_seed = spec.family == Family::random_regular && i == 2;
        if (spec.args[i] < (is_seed ? 0 : 1))
            throw param_error("graph spec: " + base.name + " parameters must be positive");
    }

    for (size_t s = 1; s < stages.size(); ++s) {
        const Stage& st = stages[s];
        Transform t;
        if (st.name == "splitting") {
            t.kind = Transform::Kind::splitting;
            if (st.args.size() != 1)
                throw param_error("graph spec: splitting expects one argument (m)");
            t.m = parse_m_arg(st.args[0], "splitting");
        } else if (st.name == "shadow") {
            t.kind = Transform::Kind::shadow;
            if (st.args.empty() || st.args.size() > 2)
                throw param_error("graph spec: shadow expects m and optional convention");
            t.m = parse_m_arg(st.args[0], "shadow");
            if (st.args.size() == 2) {
                auto eq = st.args[1].find('=');
                std::string key = eq == std::string::npos ? "" : lower(trim(std::string_view(st.args[1]).substr(0, eq)));
                if (key != "convention")
                    throw param_error("graph spec: unknown shadow argument \"" + st.args[1] + "\"");
                t.convention = parse_convention(std::string_view(st.args[1]).substr(eq + 1));
            }
        } else {
            throw param_error("graph spec: unknown transform \"" + st.name + "\"");
        }
        spec.pipeline.push_back(t);
    }
    return spec;
}

std::string GraphSpec::to_string() const {
    if (family == Family::custom) return label.empty() ? "custom" : label;
    std::string out(sombor::to_string(family));
    out += '(';
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(args[i]);
    }
    out += ')';
    for (const Transform& t : pipeline) {
        if (t.kind == Transform::Kind::splitting) {
            out += "|splitting(m=" + std::to_string(t.m) + ")";
        } else {
            out += "|shadow(m=" + std::to_string(t.m) + ",convention=" +
                   std::string(sombor::to_string(t.convention)) + ")";
        }
    }
    return out;
}

Graph generate(const GraphSpec& spec) {
    Graph g(0);
    switch (spec.family) {
        case Family::cycle: g = cycle(static_cast<int>(spec.args.at(0))); break;
        case Family::complete: g = complete(static_cast<int>(spec.args.at(0))); break;
        case Family::complete_bipartite:
            g = complete_bipartite(static_cast<int>(spec.args.at(0)),
                                   static_cast<int>(spec.args.at(1)));
            break;
        case Family::hypercube: g = hypercube(static_cast<int>(spec.args.at(0))); break;
        case Family::prism: g = prism(static_cast<int>(spec.args.at(0))); break;
        case Family::random_regular:
            g = random_regular(static_cast<int>(spec.args.at(0)), static_cast<int>(spec.args.at(1)),
                               static_cast<std::uint64_t>(spec.args.at(2)));
            break;
        case Family::custom:
            throw param_error("graph spec: custom specs cannot be generated");
    }
    for (const Transform& t : spec.pipeline)
        g = t.kind == Transform::Kind::splitting ? m_splitting(g, t.m)
                                                 : m_shadow(g, t.m, t.convention);
    return g;
}

}  // namespace sombor
