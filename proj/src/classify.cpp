#include "usf/classify.hpp"

#include "usf/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace usf {

namespace {

const char* kGraphRequirement = "any r >= 1";
const char* kHypergraphRequirement = "r >= R_G(H)";

void require_graph(const Hypergraph& h) {
    for (int e = 0; e < h.edge_count(); ++e)
        if (h.incidence[e].size() > 2)
            throw usf_error(errc::not_a_graph, "edge '" + h.edge_ids[e] +
                                                   "' has degree > 2; use hypergraph mode");
    if (!is_simple(h))
        throw usf_error(errc::not_a_graph, "parallel edges with identical vertex sets; use hypergraph mode");
}

int max_edge_degree(const Hypergraph& h) {
    size_t best = 0;
    for (const auto& row : h.incidence) best = std::max(best, row.size());
    return static_cast<int>(best);
}

bool is_identity_plan(const VertexMergePlan& plan, const Hypergraph& h) {
    return static_cast<int>(plan.blocks.size()) == h.vertex_count();
}

} // namespace

DimensionVerdict classify_faithful(const Hypergraph& h, int d, Mode mode) {
    if (d < 5) throw usf_error(errc::bad_dimension, "verdicts are defined for integer d >= 5");
    if (mode == Mode::graph) require_graph(h);

    DimensionVerdict v;
    v.dimension = d;
    v.mode = mode;
    v.minmax_value = min_max_weight(h, Rat(d)).value;
    v.faithfully_ubiquitous = v.minmax_value <= 0;
    v.r_requirement = mode == Mode::graph ? kGraphRequirement : kHypergraphRequirement;
    if (v.faithfully_ubiquitous) {
        v.ubiquitous = true;
        v.witness_quotient = identity_merge_plan(h);
    }
    return v;
}

DimensionVerdict classify_ubiquitous(const Hypergraph& h, int d, Mode mode,
                                     std::optional<int> max_edge_degree_cap, int vertex_limit) {
    DimensionVerdict v = classify_faithful(h, d, mode);
    v.edge_degree_cap = mode == Mode::hypergraph ? max_edge_degree_cap : std::nullopt;
    if (v.faithfully_ubiquitous) return v;

    if (h.vertex_count() > vertex_limit)
        throw usf_error(errc::size_guard, "quotient scan limited to " + std::to_string(vertex_limit) +
                                              " vertices (" + std::to_string(h.vertex_count()) +
                                              " given)");

    const Rat rd(d);
    std::optional<VertexMergePlan> witness;
    std::vector<VertexMergePlan> skipped;
    for_each_vertex_merge_plan(h, [&](const VertexMergePlan& plan) {
        if (witness || is_identity_plan(plan, h)) return;
        Hypergraph q = quotient(h, plan);
        if (mode == Mode::hypergraph && v.edge_degree_cap && max_edge_degree(q) > *v.edge_degree_cap) {
            skipped.push_back(plan);
            return;
        }
        if (min_max_weight(q, rd).value <= 0) witness = plan;
    });

    if (witness) {
        v.ubiquitous = true;
        v.witness_quotient = std::move(witness);
        return v;
    }
    for (const auto& plan : skipped) {
        if (min_max_weight(quotient(h, plan), rd).value <= 0)
            throw usf_error(errc::missing_cap,
                            "a quotient above the edge-degree cap is faithfully ubiquitous; "
                            "the verdict depends on the cap");
    }
    v.ubiquitous = false;
    return v;
}

TreeCriterionReport tree_criterion(const Hypergraph& t, int d) {
    if (d <= 8) throw usf_error(errc::bad_dimension, "the forest criterion applies for d > 8");
    for (int e = 0; e < t.edge_count(); ++e)
        if (t.incidence[e].size() != 2)
            throw usf_error(errc::not_a_forest,
                            "edge '" + t.edge_ids[e] + "' is not a graph edge of degree 2");

    // Union-find cycle check (parallel edges count as cycles).
    std::vector<int> root(t.vertex_count());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& row : t.incidence) {
        int a = find(row[0]), b = find(row[1]);
        if (a == b) throw usf_error(errc::not_a_forest, "contains a cycle");
        root[a] = b;
    }

    const int m = t.edge_count();
    if (m > 24) throw usf_error(errc::size_guard, "edge-subset scan limited to 24 edges");
    const int nb = t.boundary_count();
    std::vector<uint64_t> edge_verts(m, 0);
    for (int e = 0; e < m; ++e)
        for (int v : t.incidence[e]) edge_verts[e] |= uint64_t{1} << v;

    TreeCriterionReport rep;
    rep.dimension = d;
    rep.threshold = Rat(d - 4, d - 8);
    rep.max_ratio = Rat(0);
    for (uint64_t emask = 1; emask < (uint64_t{1} << m); ++emask) {
        uint64_t touched = 0;
        for (int e = 0; e < m; ++e)
            if (emask >> e & 1) touched |= edge_verts[e];
        const int interior = std::popcount(touched >> nb);
        if (interior == 0) {
            rep.max_ratio_infinite = true;
            continue;
        }
        rep.max_ratio = std::max(rep.max_ratio, Rat(std::popcount(emask), interior));
    }
    rep.verdict = !rep.max_ratio_infinite && rep.max_ratio <= rep.threshold;
    return rep;
}

CriticalDimensions critical_dimensions(const Hypergraph& h, Mode mode, int d_lo, int d_hi,
                                       std::optional<int> max_edge_degree_cap, int vertex_limit) {
    if (d_lo < 5 || d_hi < d_lo)
        throw usf_error(errc::bad_dimension, "dimension range must satisfy 5 <= lo <= hi");

    auto search = [&](auto&& verdict) -> std::optional<int> {
        if (!verdict(d_lo)) return std::nullopt;
        int lo = d_lo, hi = d_hi;
        while (lo < hi) {
            int mid = lo + (hi - lo + 1) / 2;
            if (verdict(mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    };

    CriticalDimensions out;
    out.faithful_threshold =
        search([&](int d) { return classify_faithful(h, d, mode).faithfully_ubiquitous; });
    if (h.vertex_count() <= vertex_limit)
        out.ubiquity_threshold = search([&](int d) {
            return *classify_ubiquitous(h, d, mode, max_edge_degree_cap, vertex_limit).ubiquitous;
        });
    return out;
}

namespace {

std::string padded(const std::string& prefix, int idx, int width) {
    std::string n = std::to_string(idx);
    while (static_cast<int>(n.size()) < width) n.insert(n.begin(), '0');
    return prefix + n;
}

int id_width(int count) { return count >= 10 ? 2 : 1; }

} // namespace

Hypergraph make_edge(int boundary_vertices) {
    if (boundary_vertices < 1) throw std::invalid_argument("edge:k needs k >= 1");
    std::vector<std::string> boundary, verts;
    const int w = id_width(boundary_vertices);
    for (int i = 1; i <= boundary_vertices; ++i) {
        boundary.push_back(padded("b", i, w));
        verts.push_back(boundary.back());
    }
    return Hypergraph::from_parts(boundary, {}, {{"e", verts}});
}

Hypergraph make_path(int edges) {
    if (edges < 1) throw std::invalid_argument("path:n needs n >= 1");
    const int w = id_width(edges);
    std::vector<std::string> chain;
    chain.push_back("a");
    for (int i = 1; i < edges; ++i) chain.push_back(padded("u", i, w));
    chain.push_back("b");
    std::vector<std::pair<std::string, std::vector<std::string>>> es;
    for (int i = 0; i < edges; ++i)
        es.emplace_back(padded("e", i + 1, w), std::vector<std::string>{chain[i], chain[i + 1]});
    return Hypergraph::from_parts({"a", "b"},
                                  {chain.begin() + 1, chain.end() - 1}, std::move(es));
}

Hypergraph make_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star:k needs k >= 1");
    const int w = id_width(leaves);
    std::vector<std::string> boundary;
    std::vector<std::pair<std::string, std::vector<std::string>>> es;
    for (int i = 1; i <= leaves; ++i) {
        boundary.push_back(padded("l", i, w));
        es.emplace_back(padded("e", i, w), std::vector<std::string>{boundary.back(), "c"});
    }
    return Hypergraph::from_parts(std::move(boundary), {"c"}, std::move(es));
}

Hypergraph make_three_pairs() {
    std::vector<std::pair<std::string, std::vector<std::string>>> es;
    for (int i = 1; i <= 3; ++i) {
        std::string s = std::to_string(i);
        es.emplace_back("p" + s, std::vector<std::string>{"a" + s, "b" + s, "u" + s});
    }
    es.emplace_back("hub", std::vector<std::string>{"u1", "u2", "u3"});
    return Hypergraph::from_parts({"a1", "b1", "a2", "b2", "a3", "b3"}, {"u1", "u2", "u3"},
                                  std::move(es));
}

Hypergraph make_tree_family(int d) {
    if (d < 9) throw std::invalid_argument("tree-family:d needs d >= 9");
    const int k = (d - 4) / 5, extra = (d - 4) % 5; // arms 1..extra are one longer
    std::vector<std::string> boundary, interior{"c"};
    std::vector<std::pair<std::string, std::vector<std::string>>> es;
    for (int arm = 1; arm <= 5; ++arm) {
        const int len = k + (arm <= extra ? 1 : 0);
        std::string leaf = "t" + std::to_string(arm);
        boundary.push_back(leaf);
        std::string prev = "c";
        for (int pos = 1; pos < len; ++pos) {
            std::string mid = padded("a" + std::to_string(arm) + "x", pos, 2);
            interior.push_back(mid);
            es.emplace_back(padded("e" + std::to_string(arm) + "x", pos, 2),
                            std::vector<std::string>{prev, mid});
            prev = mid;
        }
        es.emplace_back(padded("e" + std::to_string(arm) + "x", len, 2),
                        std::vector<std::string>{prev, leaf});
    }
    return Hypergraph::from_parts(std::move(boundary), std::move(interior), std::move(es));
}

bool is_builtin_name(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    return name == "edge" || name == "path" || name == "star" || name == "tree-family" ||
           name == "three-pairs";
}

Hypergraph make_builtin(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    auto arg = [&]() -> int {
        if (colon == std::string::npos || colon + 1 >= spec.size())
            throw std::invalid_argument("builtin '" + name + "' needs a numeric argument");
        return std::stoi(spec.substr(colon + 1));
    };
    if (name == "edge") return make_edge(arg());
    if (name == "path") return make_path(arg());
    if (name == "star") return make_star(arg());
    if (name == "tree-family") return make_tree_family(arg());
    if (name == "three-pairs") return make_three_pairs();
    throw std::invalid_argument("unknown builtin hypergraph '" + spec + "'");
}

std::vector<std::string> builtin_catalog() {
    return {
        "edge:k         one edge over k boundary vertices",
        "path:n         path of n edges, endpoints on the boundary",
        "star:k         k boundary leaves around one interior hub",
        "three-pairs    three boundary pairs joined through a hub edge",
        "tree-family:d  five-arm separating tree for dimension d >= 9",
    };
}

std::vector<Selector> bordered_zero_subhypergraphs(const Hypergraph& h, const Rat& d) {
    if (d <= 4) throw usf_error(errc::bad_dimension, "basicness checks require d > 4");
    const Rat heavy = d - 4;
    std::vector<Selector> out;
    const int total = h.vertex_count() + h.edge_count();
    for_each_subhypergraph(h, [&](const Selector& s) {
        if (s.edges.empty()) return; // non-trivial only
        if (static_cast<int>(s.boundary.size() + s.interior.size() + s.edges.size()) == total)
            return; // proper only
        if (!is_bordered(h, s)) return;
        std::vector<char> selected(h.vertex_count(), 0);
        for (int v : s.boundary) selected[v] = 1;
        for (int v : s.interior) selected[v] = 1;
        long long delta = 0;
        for (int e : s.edges)
            for (int v : h.incidence[e]) delta += selected[v];
        Rat eta = heavy * delta - d * static_cast<long long>(s.edges.size()) -
                  heavy * static_cast<long long>(s.interior.size());
        if (eta == 0) out.push_back(s);
    });
    return out;
}

bool is_basic(const Hypergraph& h, const Rat& d) {
    if (d <= 4) throw usf_error(errc::bad_dimension, "basicness checks require d > 4");
    const Rat cutoff = d / (d - 4);
    for (const auto& row : h.incidence)
        if (Rat(static_cast<long long>(row.size())) <= cutoff) return false;
    return bordered_zero_subhypergraphs(h, d).empty();
}

} // namespace usf
