#include "usf/hypergraph.hpp"

#include "usf/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace usf {

const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_boundary: return "EmptyBoundary";
        case errc::dangling_incidence: return "DanglingIncidence";
        case errc::edge_with_no_vertex: return "EdgeWithNoVertex";
        case errc::duplicate_id: return "DuplicateId";
        case errc::orphan_edge: return "OrphanEdge";
        case errc::boundary_collision: return "BoundaryCollision";
        case errc::not_a_graph: return "NotAGraph";
        case errc::not_a_forest: return "NotAForest";
        case errc::bad_dimension: return "BadDimension";
        case errc::missing_cap: return "MissingCap";
        case errc::size_guard: return "SizeGuard";
        case errc::inconclusive_at_cap: return "InconclusiveAtCap";
    }
    return "UnknownError";
}

namespace {

void check_sorted_unique(const std::vector<std::string>& ids, const char* what) {
    for (size_t i = 1; i < ids.size(); ++i) {
        if (ids[i - 1] == ids[i])
            throw usf_error(errc::duplicate_id, std::string(what) + " id '" + ids[i] + "' repeated");
        if (ids[i - 1] > ids[i])
            throw std::invalid_argument(std::string(what) + " ids not in canonical order");
    }
}

} // namespace

Hypergraph Hypergraph::from_parts(std::vector<std::string> boundary,
                                  std::vector<std::string> interior,
                                  std::vector<std::pair<std::string, std::vector<std::string>>> edges) {
    Hypergraph h;
    std::sort(boundary.begin(), boundary.end());
    std::sort(interior.begin(), interior.end());
    h.boundary_ids = std::move(boundary);
    h.interior_ids = std::move(interior);

    if (h.boundary_ids.empty())
        throw usf_error(errc::empty_boundary, "a hypergraph with boundary needs at least one boundary vertex");
    check_sorted_unique(h.boundary_ids, "boundary vertex");
    check_sorted_unique(h.interior_ids, "interior vertex");

    std::map<std::string, int> vertex_index;
    for (int v = 0; v < h.vertex_count(); ++v) {
        auto [it, inserted] = vertex_index.emplace(h.vertex_id(v), v);
        if (!inserted)
            throw usf_error(errc::duplicate_id, "vertex id '" + h.vertex_id(v) + "' appears in both classes");
    }

    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t e = 1; e < edges.size(); ++e)
        if (edges[e - 1].first == edges[e].first)
            throw usf_error(errc::duplicate_id, "edge id '" + edges[e].first + "' repeated");

    for (auto& [id, verts] : edges) {
        std::vector<int> row;
        row.reserve(verts.size());
        for (const auto& vid : verts) {
            auto it = vertex_index.find(vid);
            if (it == vertex_index.end())
                throw usf_error(errc::dangling_incidence,
                                "edge '" + id + "' references unknown vertex '" + vid + "'");
            row.push_back(it->second);
        }
        std::sort(row.begin(), row.end());
        for (size_t i = 1; i < row.size(); ++i)
            if (row[i - 1] == row[i])
                throw usf_error(errc::duplicate_id,
                                "edge '" + id + "' lists vertex '" + h.vertex_id(row[i]) + "' twice");
        if (row.empty())
            throw usf_error(errc::edge_with_no_vertex, "edge '" + id + "' is incident to no vertex");
        h.edge_ids.push_back(id);
        h.incidence.push_back(std::move(row));
    }
    return h;
}

void validate(const Hypergraph& h) {
    if (h.boundary_ids.empty())
        throw usf_error(errc::empty_boundary, "boundary vertex set is empty");
    check_sorted_unique(h.boundary_ids, "boundary vertex");
    check_sorted_unique(h.interior_ids, "interior vertex");
    check_sorted_unique(h.edge_ids, "edge");

    std::set<std::string> seen(h.boundary_ids.begin(), h.boundary_ids.end());
    for (const auto& id : h.interior_ids)
        if (!seen.insert(id).second)
            throw usf_error(errc::duplicate_id, "vertex id '" + id + "' appears in both classes");

    if (h.incidence.size() != h.edge_ids.size())
        throw usf_error(errc::dangling_incidence, "incidence rows do not match the edge set");
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& row = h.incidence[e];
        if (row.empty())
            throw usf_error(errc::edge_with_no_vertex, "edge '" + h.edge_ids[e] + "' is incident to no vertex");
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 0 || row[i] >= h.vertex_count())
                throw usf_error(errc::dangling_incidence,
                                "edge '" + h.edge_ids[e] + "' references a vertex that does not exist");
            if (i > 0 && row[i - 1] == row[i])
                throw usf_error(errc::duplicate_id,
                                "edge '" + h.edge_ids[e] + "' repeats an incidence pair");
            if (i > 0 && row[i - 1] > row[i])
                throw std::invalid_argument("incidence row not sorted");
        }
    }
}

bool is_simple(const Hypergraph& h) {
    std::set<std::vector<int>> seen;
    for (const auto& row : h.incidence)
        if (!seen.insert(row).second) return false;
    return true;
}

std::pair<std::vector<int>, std::vector<int>> degrees(const Hypergraph& h) {
    std::vector<int> vertex_deg(h.vertex_count(), 0);
    std::vector<int> edge_deg(h.edge_count(), 0);
    for (int e = 0; e < h.edge_count(); ++e) {
        edge_deg[e] = static_cast<int>(h.incidence[e].size());
        for (int v : h.incidence[e]) ++vertex_deg[v];
    }
    return {std::move(vertex_deg), std::move(edge_deg)};
}

long long total_weight(const Hypergraph& h) {
    long long delta = 0;
    for (const auto& row : h.incidence) delta += static_cast<long long>(row.size());
    return delta;
}

Selector full_selector(const Hypergraph& h) {
    Selector s;
    s.boundary.resize(h.boundary_count());
    std::iota(s.boundary.begin(), s.boundary.end(), 0);
    s.interior.resize(h.interior_count());
    std::iota(s.interior.begin(), s.interior.end(), h.boundary_count());
    s.edges.resize(h.edge_count());
    std::iota(s.edges.begin(), s.edges.end(), 0);
    return s;
}

EdgePartition singleton_edge_partition(const Hypergraph& h) {
    EdgePartition p;
    for (int e = 0; e < h.edge_count(); ++e) p.blocks.push_back({e});
    return p;
}

VertexMergePlan identity_merge_plan(const Hypergraph& h) {
    VertexMergePlan m;
    for (int v = 0; v < h.vertex_count(); ++v) m.blocks.push_back({v});
    return m;
}

namespace {

std::vector<std::vector<int>> canonical_blocks(std::vector<std::vector<int>> blocks, int n,
                                               const char* what) {
    std::vector<int> seen(n, 0);
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument(std::string(what) + ": empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 0 || x >= n) throw std::invalid_argument(std::string(what) + ": index out of range");
            if (seen[x]++) throw std::invalid_argument(std::string(what) + ": index covered twice");
        }
    }
    for (int x = 0; x < n; ++x)
        if (!seen[x]) throw std::invalid_argument(std::string(what) + ": index not covered");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

} // namespace

EdgePartition make_edge_partition(std::vector<std::vector<int>> blocks, int edge_count) {
    return EdgePartition{canonical_blocks(std::move(blocks), edge_count, "edge partition")};
}

VertexMergePlan make_merge_plan(std::vector<std::vector<int>> blocks, const Hypergraph& h) {
    VertexMergePlan m{canonical_blocks(std::move(blocks), h.vertex_count(), "merge plan")};
    for (const auto& b : m.blocks) {
        int boundary_members = 0;
        for (int v : b)
            if (h.is_boundary_vertex(v)) ++boundary_members;
        if (boundary_members > 1)
            throw usf_error(errc::boundary_collision, "a block merges two boundary vertices");
    }
    return m;
}

Hypergraph materialize_subhypergraph(const Hypergraph& h, const Selector& s) {
    if (s.boundary.empty())
        throw usf_error(errc::empty_boundary, "selector keeps no boundary vertex");
    std::vector<char> selected(h.vertex_count(), 0);
    std::vector<std::string> boundary, interior;
    for (int v : s.boundary) {
        selected[v] = 1;
        boundary.push_back(h.vertex_id(v));
    }
    for (int v : s.interior) {
        selected[v] = 1;
        interior.push_back(h.vertex_id(v));
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int e : s.edges) {
        std::vector<std::string> verts;
        for (int v : h.incidence[e])
            if (selected[v]) verts.push_back(h.vertex_id(v));
        if (verts.empty())
            throw usf_error(errc::orphan_edge,
                            "selected edge '" + h.edge_ids[e] + "' loses all incident vertices");
        edges.emplace_back(h.edge_ids[e], std::move(verts));
    }
    return Hypergraph::from_parts(std::move(boundary), std::move(interior), std::move(edges));
}

Hypergraph coarsen(const Hypergraph& h, const EdgePartition& p) {
    EdgePartition canon = make_edge_partition(p.blocks, h.edge_count());
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (const auto& block : canon.blocks) {
        std::string id = h.edge_ids[block.front()];
        std::set<int> verts;
        for (int e : block) {
            if (h.edge_ids[e] < id) id = h.edge_ids[e];
            verts.insert(h.incidence[e].begin(), h.incidence[e].end());
        }
        std::vector<std::string> vert_ids;
        for (int v : verts) vert_ids.push_back(h.vertex_id(v));
        edges.emplace_back(std::move(id), std::move(vert_ids));
    }
    return Hypergraph::from_parts(h.boundary_ids, h.interior_ids, std::move(edges));
}

Hypergraph quotient(const Hypergraph& h, const VertexMergePlan& m) {
    VertexMergePlan canon = make_merge_plan(m.blocks, h);
    std::vector<int> block_of(h.vertex_count(), -1);
    std::vector<std::string> block_id(canon.blocks.size());
    std::vector<std::string> boundary, interior;
    for (size_t b = 0; b < canon.blocks.size(); ++b) {
        std::string id;
        bool has_boundary = false;
        for (int v : canon.blocks[b]) {
            block_of[v] = static_cast<int>(b);
            if (h.is_boundary_vertex(v)) {
                has_boundary = true;
                id = h.vertex_id(v);
            }
        }
        if (!has_boundary) {
            id = h.vertex_id(canon.blocks[b].front());
            for (int v : canon.blocks[b]) id = std::min(id, h.vertex_id(v));
        }
        block_id[b] = id;
        (has_boundary ? boundary : interior).push_back(id);
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int e = 0; e < h.edge_count(); ++e) {
        std::set<int> blocks;
        for (int v : h.incidence[e]) blocks.insert(block_of[v]);
        std::vector<std::string> verts;
        for (int b : blocks) verts.push_back(block_id[b]);
        edges.emplace_back(h.edge_ids[e], std::move(verts));
    }
    return Hypergraph::from_parts(std::move(boundary), std::move(interior), std::move(edges));
}

bool is_full(const Hypergraph& h, const Selector& s) {
    std::vector<char> selected(h.vertex_count(), 0);
    for (int v : s.boundary) selected[v] = 1;
    for (int v : s.interior) selected[v] = 1;
    for (int e : s.edges)
        for (int v : h.incidence[e])
            if (!selected[v]) return false;
    return true;
}

bool is_bordered(const Hypergraph& h, const Selector& s) {
    if (static_cast<int>(s.boundary.size()) != h.boundary_count()) return false;
    std::vector<char> selected(h.vertex_count(), 0);
    for (int v : s.boundary) selected[v] = 1;
    for (int v : s.interior) selected[v] = 1;
    std::vector<int> outside_deg(h.vertex_count(), 0);
    for (int e : s.edges)
        for (int v : h.incidence[e])
            if (!selected[v] && ++outside_deg[v] > 1) return false;
    return true;
}

bool is_subordinate(const Selector& s, const EdgePartition& p) {
    std::set<int> chosen(s.edges.begin(), s.edges.end());
    for (const auto& block : p.blocks) {
        size_t inside = 0;
        for (int e : block) inside += chosen.count(e);
        if (inside != 0 && inside != block.size()) return false;
    }
    return true;
}

namespace {

constexpr int kMaskLimit = 63;

Selector selector_from_masks(const Hypergraph& h, uint64_t bmask, uint64_t imask, uint64_t emask) {
    Selector s;
    for (int v = 0; v < h.boundary_count(); ++v)
        if (bmask >> v & 1) s.boundary.push_back(v);
    for (int v = 0; v < h.interior_count(); ++v)
        if (imask >> v & 1) s.interior.push_back(h.boundary_count() + v);
    for (int e = 0; e < h.edge_count(); ++e)
        if (emask >> e & 1) s.edges.push_back(e);
    return s;
}

// Restricted-growth-string enumeration: labels[i] <= 1 + max(labels[0..i-1]).
// Visits partitions of 0..n-1 in lexicographic RGS order.
void rgs_recurse(int n, int pos, int max_label, std::vector<int>& labels,
                 const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == n) {
        fn(labels);
        return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
        labels[pos] = label;
        rgs_recurse(n, pos + 1, std::max(max_label, label), labels, fn);
    }
}

std::vector<std::vector<int>> blocks_from_labels(const std::vector<int>& labels) {
    int nblocks = 0;
    for (int l : labels) nblocks = std::max(nblocks, l + 1);
    std::vector<std::vector<int>> blocks(nblocks);
    for (size_t i = 0; i < labels.size(); ++i) blocks[labels[i]].push_back(static_cast<int>(i));
    return blocks;
}

} // namespace

void for_each_subhypergraph(const Hypergraph& h, const std::function<void(const Selector&)>& fn) {
    const int nb = h.boundary_count(), ni = h.interior_count(), m = h.edge_count();
    if (h.vertex_count() > kMaskLimit || m > kMaskLimit)
        throw usf_error(errc::size_guard, "subhypergraph enumeration limited to 63 vertices/edges");
    std::vector<uint64_t> edge_mask(m, 0);
    for (int e = 0; e < m; ++e)
        for (int v : h.incidence[e]) edge_mask[e] |= uint64_t{1} << v;

    for (uint64_t bmask = 1; bmask < (uint64_t{1} << nb); ++bmask) {
        for (uint64_t imask = 0; imask < (uint64_t{1} << ni); ++imask) {
            const uint64_t vmask = bmask | imask << nb;
            for (uint64_t emask = 0; emask < (uint64_t{1} << m); ++emask) {
                bool ok = true;
                for (int e = 0; e < m && ok; ++e)
                    if ((emask >> e & 1) && !(edge_mask[e] & vmask)) ok = false;
                if (ok) fn(selector_from_masks(h, bmask, imask, emask));
            }
        }
    }
}

std::vector<Selector> enumerate_subhypergraphs(const Hypergraph& h) {
    std::vector<Selector> out;
    for_each_subhypergraph(h, [&](const Selector& s) { out.push_back(s); });
    return out;
}

void for_each_edge_partition(const Hypergraph& h, const std::function<void(const EdgePartition&)>& fn) {
    const int m = h.edge_count();
    if (m == 0) {
        fn(EdgePartition{});
        return;
    }
    std::vector<int> labels(m, 0);
    rgs_recurse(m, 1, 0, labels, [&](const std::vector<int>& l) {
        fn(EdgePartition{blocks_from_labels(l)});
    });
}

std::vector<EdgePartition> enumerate_edge_partitions(const Hypergraph& h) {
    if (h.edge_count() > 12)
        throw usf_error(errc::size_guard, "edge partition materialization limited to 12 edges");
    std::vector<EdgePartition> out;
    for_each_edge_partition(h, [&](const EdgePartition& p) { out.push_back(p); });
    return out;
}

void for_each_vertex_merge_plan(const Hypergraph& h,
                                const std::function<void(const VertexMergePlan&)>& fn) {
    const int nb = h.boundary_count(), nv = h.vertex_count();
    // Boundary vertices come first, so the boundary constraint pins labels
    // 0..nb-1 to them and interior labels range freely above.
    std::vector<int> labels(nv);
    for (int v = 0; v < nb; ++v) labels[v] = v;
    rgs_recurse(nv, nb, nb - 1, labels, [&](const std::vector<int>& l) {
        fn(VertexMergePlan{blocks_from_labels(l)});
    });
}

std::vector<VertexMergePlan> enumerate_vertex_merge_plans(const Hypergraph& h) {
    if (h.vertex_count() > 12)
        throw usf_error(errc::size_guard, "merge plan materialization limited to 12 vertices");
    std::vector<VertexMergePlan> out;
    for_each_vertex_merge_plan(h, [&](const VertexMergePlan& m) { out.push_back(m); });
    return out;
}

namespace {

bool match_interiors(const Hypergraph& a, const Hypergraph& b, const std::vector<int>& deg_a,
                     const std::vector<int>& deg_b, std::vector<int>& map_av, std::vector<char>& used,
                     int next, const std::vector<std::vector<int>>& b_canon) {
    const int nb = a.boundary_count();
    if (next == a.vertex_count()) {
        std::vector<std::vector<int>> mapped;
        mapped.reserve(a.incidence.size());
        for (const auto& row : a.incidence) {
            std::vector<int> img;
            img.reserve(row.size());
            for (int v : row) img.push_back(map_av[v]);
            std::sort(img.begin(), img.end());
            mapped.push_back(std::move(img));
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == b_canon;
    }
    for (int w = nb; w < b.vertex_count(); ++w) {
        if (used[w] || deg_a[next] != deg_b[w]) continue;
        used[w] = 1;
        map_av[next] = w;
        if (match_interiors(a, b, deg_a, deg_b, map_av, used, next + 1, b_canon)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.boundary_ids != b.boundary_ids) return false;
    if (a.interior_count() != b.interior_count() || a.edge_count() != b.edge_count()) return false;

    auto [deg_a, edeg_a] = degrees(a);
    auto [deg_b, edeg_b] = degrees(b);
    for (int v = 0; v < a.boundary_count(); ++v)
        if (deg_a[v] != deg_b[v]) return false;
    {
        auto sa = edeg_a, sb = edeg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
        std::vector<int> ia(deg_a.begin() + a.boundary_count(), deg_a.end());
        std::vector<int> ib(deg_b.begin() + b.boundary_count(), deg_b.end());
        std::sort(ia.begin(), ia.end());
        std::sort(ib.begin(), ib.end());
        if (ia != ib) return false;
    }

    std::vector<std::vector<int>> b_canon = b.incidence;
    std::sort(b_canon.begin(), b_canon.end());

    std::vector<int> map_av(a.vertex_count());
    for (int v = 0; v < a.boundary_count(); ++v) map_av[v] = v;
    std::vector<char> used(b.vertex_count(), 0);
    return match_interiors(a, b, deg_a, deg_b, map_av, used, a.boundary_count(), b_canon);
}

std::optional<EdgePartition> is_refinement(const Hypergraph& h, const Hypergraph& target) {
    if (target.edge_count() > h.edge_count()) return std::nullopt;
    if (h.boundary_ids != target.boundary_ids) return std::nullopt;
    if (h.interior_count() != target.interior_count()) return std::nullopt;

    std::optional<EdgePartition> found;
    for_each_edge_partition(h, [&](const EdgePartition& p) {
        if (found || static_cast<int>(p.blocks.size()) != target.edge_count()) return;
        if (is_isomorphic(coarsen(h, p), target)) found = p;
    });
    return found;
}

} // namespace usf
