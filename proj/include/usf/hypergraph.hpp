#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace usf {

/// A finite hypergraph with boundary: vertices are split into a nonempty
/// boundary set and an interior set, and edges are incident to arbitrary
/// nonempty vertex sets. Parallel edges (distinct ids, identical incident
/// vertex sets) are allowed.
///
/// Vertices are indexed 0..vertex_count()-1 with boundary vertices first;
/// ids within each class are kept in lexicographic order, as are edge ids.
struct Hypergraph {
    std::vector<std::string> boundary_ids;
    std::vector<std::string> interior_ids;
    std::vector<std::string> edge_ids;
    std::vector<std::vector<int>> incidence; // per edge, sorted vertex indices

    int boundary_count() const { return static_cast<int>(boundary_ids.size()); }
    int interior_count() const { return static_cast<int>(interior_ids.size()); }
    int vertex_count() const { return boundary_count() + interior_count(); }
    int edge_count() const { return static_cast<int>(edge_ids.size()); }

    bool is_boundary_vertex(int v) const { return v < boundary_count(); }
    const std::string& vertex_id(int v) const {
        return v < boundary_count() ? boundary_ids[v] : interior_ids[v - boundary_count()];
    }

    /// Builds a canonical hypergraph from id lists. Sorts ids, resolves
    /// vertex references and checks every structural invariant
    /// (EmptyBoundary, DuplicateId, DanglingIncidence, EdgeWithNoVertex).
    static Hypergraph from_parts(std::vector<std::string> boundary,
                                 std::vector<std::string> interior,
                                 std::vector<std::pair<std::string, std::vector<std::string>>> edges);
};

/// Checks all type invariants of an already-built value; throws usf_error
/// naming the violated invariant.
void validate(const Hypergraph& h);

/// True iff no two distinct edges have the same incident vertex set.
bool is_simple(const Hypergraph& h);

/// (per-vertex degree, per-edge degree), indexed like the hypergraph.
std::pair<std::vector<int>, std::vector<int>> degrees(const Hypergraph& h);

/// Sum of edge degrees (equivalently of vertex degrees).
long long total_weight(const Hypergraph& h);

/// Selects a subhypergraph: subsets of boundary vertices, interior vertices
/// and edges (as sorted index lists). The induced incidence is the
/// restriction to the selected sets.
struct Selector {
    std::vector<int> boundary;
    std::vector<int> interior;
    std::vector<int> edges;

    bool operator==(const Selector&) const = default;
};

/// A partition of the edge index set; blocks are sorted internally and
/// ordered by their smallest element.
struct EdgePartition {
    std::vector<std::vector<int>> blocks;

    bool operator==(const EdgePartition&) const = default;
};

/// A partition of the full vertex index set; each block may contain at most
/// one boundary vertex.
struct VertexMergePlan {
    std::vector<std::vector<int>> blocks;

    bool operator==(const VertexMergePlan&) const = default;
};

Selector full_selector(const Hypergraph& h);
EdgePartition singleton_edge_partition(const Hypergraph& h);
VertexMergePlan identity_merge_plan(const Hypergraph& h);

/// Canonicalizes (sorts) and checks that the blocks partition 0..n-1.
EdgePartition make_edge_partition(std::vector<std::vector<int>> blocks, int edge_count);
VertexMergePlan make_merge_plan(std::vector<std::vector<int>> blocks, const Hypergraph& h);

/// Restricts h to a selector. Throws OrphanEdge if a selected edge loses all
/// incident vertices and EmptyBoundary if no boundary vertex is selected.
Hypergraph materialize_subhypergraph(const Hypergraph& h, const Selector& s);

/// Merges the edges within each block; vertex sets are unchanged and the
/// merged edge is incident to the union of the block's incident sets. The
/// merged edge takes the lexicographically smallest id in its block.
Hypergraph coarsen(const Hypergraph& h, const EdgePartition& p);

/// Merges the vertices within each block; the edge set is unchanged and a
/// merged vertex is incident to an edge iff some block member was. A block
/// containing a boundary vertex stays on the boundary and keeps its id;
/// otherwise the block takes its lexicographically smallest member id.
/// Throws BoundaryCollision if a block contains two boundary vertices.
Hypergraph quotient(const Hypergraph& h, const VertexMergePlan& m);

/// Full: every vertex incident to a selected edge is selected.
bool is_full(const Hypergraph& h, const Selector& s);

/// Bordered: all boundary vertices selected, and every unselected vertex is
/// incident to at most one selected edge.
bool is_bordered(const Hypergraph& h, const Selector& s);

/// Subordinate: every block of p is contained in or disjoint from s.edges.
bool is_subordinate(const Selector& s, const EdgePartition& p);

/// Enumerates every legal selector exactly once (nonempty boundary subset,
/// no selected edge left without a selected incident vertex), in mask order:
/// boundary subsets outermost, then interior subsets, then edge subsets.
void for_each_subhypergraph(const Hypergraph& h, const std::function<void(const Selector&)>& fn);
std::vector<Selector> enumerate_subhypergraphs(const Hypergraph& h);

/// Enumerates set partitions of the edge set in restricted-growth-string
/// lexicographic order (the single-block partition first, all-singletons
/// last). The materializing variant refuses more than 12 edges.
void for_each_edge_partition(const Hypergraph& h, const std::function<void(const EdgePartition&)>& fn);
std::vector<EdgePartition> enumerate_edge_partitions(const Hypergraph& h);

/// Enumerates vertex partitions with at most one boundary vertex per block,
/// in the same restricted-growth order. The materializing variant refuses
/// more than 12 vertices.
void for_each_vertex_merge_plan(const Hypergraph& h, const std::function<void(const VertexMergePlan&)>& fn);
std::vector<VertexMergePlan> enumerate_vertex_merge_plans(const Hypergraph& h);

/// Isomorphism with boundary vertices pinned by label: boundary id sets must
/// coincide, interior vertices and edges are matched by backtracking.
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Searches for an edge partition p with coarsen(h, p) isomorphic to target;
/// returns the first witness in enumeration order, or nullopt.
std::optional<EdgePartition> is_refinement(const Hypergraph& h, const Hypergraph& target);

} // namespace usf
