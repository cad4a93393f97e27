#pragma once

#include "usf/rational.hpp"
#include "usf/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace usf {

/// A point of the ultrametric polytope on a finite index set: a symmetric
/// matrix of rationals in [0,1] with zero diagonal satisfying the strong
/// triangle inequality d(a,b) <= max(d(a,c), d(c,b)).
struct UltrametricPoint {
    std::vector<std::string> index_set;
    std::vector<std::vector<Rat>> values;

    int size() const { return static_cast<int>(index_set.size()); }
    const Rat& at(int a, int b) const { return values[a][b]; }
};

/// Checks shape, symmetry, zero diagonal, range and the strong triangle
/// inequality; throws std::invalid_argument naming the violation.
void validate_ultrametric(const UltrametricPoint& x);

/// A linear combination of minima over pair supports:
/// F(x) = sum_k coeff_k * min{ x[a][b] : (a,b) in support_k }.
struct ObjectiveTerm {
    Rat coeff;
    std::vector<std::pair<int, int>> support; // nonempty, indices into the index set
};

struct ObjectiveSpec {
    std::vector<std::string> index_set;
    std::vector<ObjectiveTerm> terms;

    int size() const { return static_cast<int>(index_set.size()); }
};

void validate_objective(const ObjectiveSpec& f);

Rat evaluate(const ObjectiveSpec& f, const UltrametricPoint& x);

/// The 0/1 point of the polytope induced by a partition: distance zero
/// within blocks, one across.
UltrametricPoint partition_point(const std::vector<std::string>& index_set,
                                 const std::vector<std::vector<int>>& partition);

struct PolytopeMax {
    Rat value;
    std::vector<std::vector<int>> partition;
};

/// Exact maximum of F over the ultrametric polytope. The maximum is attained
/// at a 0/1 point, i.e. at a partition of the index set, so the scan ranges
/// over partitions. Refuses index sets larger than `cap`.
PolytopeMax maximize_over_polytope(const ObjectiveSpec& f, int cap = 10);

/// Same, over the sub-polytope where distances across the given blocks are
/// pinned to one: candidate partitions refine the block structure.
PolytopeMax maximize_blockwise(const ObjectiveSpec& f, const std::vector<std::vector<int>>& blocks,
                               int cap = 10);

/// The largest ultrametric dominated pointwise by l (minimax path closure).
/// l must be symmetric and nonnegative with zero diagonal; values need not
/// be bounded by one.
std::vector<std::vector<Rat>> subdominant_ultrametric(const std::vector<std::vector<Rat>>& l);

/// Samples a random bounded ultrametric from a random recursive binary
/// hierarchy with independent uniform level heights (denominator
/// `level_denominator`), monotonized toward the root.
UltrametricPoint random_ultrametric(const std::vector<std::string>& index_set, CounterRng& rng,
                                    long long level_denominator = 1024);

} // namespace usf
