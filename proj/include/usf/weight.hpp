#pragma once

#include "usf/hypergraph.hpp"
#include "usf/rational.hpp"

namespace usf {

/// Per-hypergraph weight summary at a queried (dimension, alpha):
/// eta = (d-2a)*delta - d*edge_count - (d-2a)*interior_count.
struct WeightReport {
    long long delta = 0;
    long long edge_count = 0;
    long long interior_count = 0;
    Rat dimension;
    Rat alpha;
    Rat eta;
};

/// The d-apparent weight in its generalized form; alpha = 2 is the plain
/// d-apparent weight used by every verdict.
Rat apparent_weight(const Hypergraph& h, const Rat& d, const Rat& alpha = Rat(2));

WeightReport weight_report(const Hypergraph& h, const Rat& d, const Rat& alpha = Rat(2));

/// Buoyant: apparent weight is non-positive.
bool is_buoyant(const Hypergraph& h, const Rat& d);

struct CoarseningOptimum {
    Rat value;
    EdgePartition partition;
};

/// Minimum of the apparent weight over all coarsenings, with an achieving
/// edge partition. Ties are broken by fewest blocks, then by
/// restricted-growth-string order. Exact partition enumeration refuses more
/// than `exact_edge_limit` edges (override at your own runtime's peril).
CoarseningOptimum min_coarsening_weight(const Hypergraph& h, const Rat& d, int exact_edge_limit = 12);

/// The partition witness of min_coarsening_weight.
EdgePartition optimal_coarsening(const Hypergraph& h, const Rat& d, int exact_edge_limit = 12);

struct SubhypergraphMax {
    Rat value;
    Selector selector;
};

/// Maximum of the apparent weight over all subhypergraphs, computed by
/// scanning edge subsets only: for a fixed edge subset the optimal vertex
/// choice is closed-form (keep boundary vertices of positive restricted
/// degree; keep interior vertices of restricted degree >= 2). Requires
/// d >= 4. The empty subhypergraph is included, so the result is >= 0.
SubhypergraphMax max_subhypergraph_weight(const Hypergraph& h, const Rat& d);

struct MinMaxSolution {
    Rat value;
    EdgePartition witness_coarsening;
    Selector witness_subhypergraph; // refers to coarsen(h, witness_coarsening)
};

/// min over coarsenings of (max over subhypergraphs of the apparent weight),
/// for d >= 4. Computed by taking an optimal coarsening and maximizing over
/// its subhypergraphs; the swap lemma makes this exact. The reported
/// subhypergraph selector lives in the coarsened hypergraph.
MinMaxSolution min_max_weight(const Hypergraph& h, const Rat& d, int exact_edge_limit = 12);

/// max over subhypergraphs of (min over coarsenings of the apparent weight),
/// for d >= 4, by direct double enumeration. Equals min_max_weight on every
/// input; kept as the second algebraic route. Small instances only.
Rat max_min_weight(const Hypergraph& h, const Rat& d);

} // namespace usf
