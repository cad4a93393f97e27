#pragma once

#include "usf/lattice.hpp"
#include "usf/rng.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace usf {

/// One sampled wired spanning forest: the spanning tree of the wired box,
/// reported as parent pointers toward the wired root, plus the component
/// labels of the forest left after deleting the wired vertex. Component ids
/// are assigned in order of each component's smallest vertex.
///
/// Hand-built forests (from_edges) may carry component labels only, in which
/// case `parent` is empty.
struct LatticeForest {
    LatticeBox box;
    std::vector<int64_t> parent;   // size volume when present
    std::vector<int8_t> parent_dir; // direction from vertex to its parent
    std::vector<int32_t> component; // size volume
    int32_t component_count = 0;

    bool has_parents() const { return !parent.empty(); }
};

/// Builds a forest from directed (child, parent) pairs; parents may be the
/// wired vertex. Unlisted vertices become singleton components. Pairs must
/// be box edges and no child may repeat.
LatticeForest forest_from_edges(const LatticeBox& box,
                                const std::vector<std::pair<int64_t, int64_t>>& child_parent);

/// Wilson's algorithm on the wired box: starting from the wired root, each
/// unvisited vertex launches a random walk, whose loop erasure is grafted
/// onto the tree. The output law is the uniform spanning tree of the wired
/// box regardless of the vertex order. Reusable across samples; buffers are
/// epoch-stamped so repeated sampling does not reallocate.
class WilsonSampler {
  public:
    explicit WilsonSampler(const LatticeBox& box);

    LatticeForest sample(CounterRng& rng); // order 0..volume-1
    LatticeForest sample(std::span<const int64_t> order, CounterRng& rng);

    /// Runs only the walks rooted at the given points and reports whether
    /// they all belong to one component of the in-box forest. Wilson's
    /// output law is order independent, so this equals sampling a full
    /// forest and checking the component of each point.
    bool joint_component(std::span<const int64_t> points, CounterRng& rng);

  private:
    void reset();
    void run_walk(int64_t start, CounterRng& rng);

    LatticeBox box_;
    uint32_t epoch_ = 0;
    std::vector<uint32_t> in_tree_stamp_;
    std::vector<int64_t> parent_;
    std::vector<int8_t> parent_dir_;
    uint32_t walk_epoch_ = 0;
    std::vector<uint32_t> last_stamp_;
    std::vector<int64_t> last_pos_;
    std::vector<int64_t> walk_verts_;
    std::vector<int8_t> walk_dirs_;
    std::vector<uint32_t> comp_stamp_;
    std::vector<int32_t> comp_id_;
};

LatticeForest wilson_wired(const LatticeBox& box, CounterRng& rng);
LatticeForest wilson_wired(const LatticeBox& box, std::span<const int64_t> order, CounterRng& rng);

/// Component-graph adjacency at distance r: multi-source BFS truncated at
/// depth r from each component. Returns sorted component-id pairs (a < b).
std::vector<std::pair<int32_t, int32_t>> component_graph(const LatticeForest& f, int r);

/// All component sets of size <= max_degree that jointly intersect a vertex
/// set of diameter <= r; equivalently, sets admitting one point per
/// component with pairwise distances <= r. Singletons always qualify.
/// Returns sorted id vectors in lexicographic order.
std::vector<std::vector<int32_t>> component_hyperedges(const LatticeForest& f, int r,
                                                       int max_degree);

} // namespace usf
