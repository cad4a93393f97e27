#pragma once

#include "usf/forest.hpp"
#include "usf/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace usf {

/// An assignment of one box vertex to every incidence slot (edge, vertex) of
/// the pattern hypergraph. `slots` lists the pairs in canonical order (edges
/// ascending, incident vertices ascending within each edge) and `points` is
/// parallel to it.
struct WitnessAssignment {
    std::vector<std::pair<int, int>> slots;
    std::vector<int64_t> points;
};

struct WitnessOptions {
    /// Restrict candidate points to the union of the boundary components'
    /// neighborhoods of radius r*|E| (a pruning window; equal to the full
    /// scan on every box small enough to verify, which the tests do).
    bool seed_window = false;
};

/// Streams every witness for the r-faithful presence of h at the given
/// distinct boundary components:
///   (1) within each edge, assigned points satisfy <p q> <= r-1,
///   (2) slots of a boundary vertex v lie in its given component,
///   (3) slots of an interior vertex share one component,
///   (4) distinct pattern vertices occupy distinct components.
/// The visitor may return false to stop early. Returns the number of
/// witnesses visited.
int64_t witness_search(const LatticeForest& f, const Hypergraph& h,
                       const std::vector<int32_t>& boundary_components, int r,
                       const std::function<bool(const WitnessAssignment&)>& visit,
                       const WitnessOptions& options = {});

int64_t count_witnesses(const LatticeForest& f, const Hypergraph& h,
                        const std::vector<int32_t>& boundary_components, int r,
                        const WitnessOptions& options = {});

std::vector<WitnessAssignment> collect_witnesses(const LatticeForest& f, const Hypergraph& h,
                                                 const std::vector<int32_t>& boundary_components,
                                                 int r, int64_t limit,
                                                 const WitnessOptions& options = {});

} // namespace usf
