#pragma once

#include "usf/hypergraph.hpp"
#include "usf/rational.hpp"
#include "usf/weight.hpp"

#include <optional>
#include <string>

namespace usf {

/// Whether verdicts are asked for the component graph (simple graphs with
/// boundary, any r >= 1) or the component hypergraph (general hypergraphs,
/// r >= R_G(H)).
enum class Mode { graph, hypergraph };

struct DimensionVerdict {
    int dimension = 0;
    Mode mode = Mode::hypergraph;
    bool faithfully_ubiquitous = false;
    /// Absent when the quotient scan was not run (classify_faithful on a
    /// non-faithful input decides nothing about plain ubiquity).
    std::optional<bool> ubiquitous;
    std::optional<VertexMergePlan> witness_quotient;
    Rat minmax_value;
    std::string r_requirement;
    /// The edge-degree cap applied to the quotient scan, when one was.
    std::optional<int> edge_degree_cap;
};

/// Faithful ubiquity at integer dimension d >= 5 via the min-max criterion
/// (faithful iff the min-max value is <= 0). Graph mode additionally
/// requires every edge degree <= 2 and simplicity (NotAGraph otherwise).
DimensionVerdict classify_faithful(const Hypergraph& h, int d, Mode mode);

/// Ubiquity: scans vertex merge plans for a quotient that is faithfully
/// ubiquitous. In hypergraph mode an edge-degree cap stands in for the
/// "R_G(quotient) <= r" constraint: quotients whose maximum edge degree
/// exceeds the cap are skipped, and MissingCap is raised when the verdict
/// would have been positive among only the skipped quotients.
DimensionVerdict classify_ubiquitous(const Hypergraph& h, int d, Mode mode,
                                     std::optional<int> max_edge_degree_cap = std::nullopt,
                                     int vertex_limit = 10);

struct TreeCriterionReport {
    int dimension = 0;
    /// max over subgraphs of |E'| / |interior(E')|; the infinite flag covers
    /// subgraphs with at least one edge and no interior vertex.
    Rat max_ratio;
    bool max_ratio_infinite = false;
    Rat threshold; // (d-4)/(d-8)
    bool verdict = false;
};

/// The forest criterion for d > 8: faithful (equivalently plain) ubiquity
/// holds iff max over subgraphs of |E'|/|interior'| is at most (d-4)/(d-8).
/// Throws NotAForest on cycles, parallel edges or non-graph edges, and
/// BadDimension for d <= 8.
TreeCriterionReport tree_criterion(const Hypergraph& t, int d);

struct CriticalDimensions {
    std::optional<int> faithful_threshold;
    std::optional<int> ubiquity_threshold;
};

/// Largest dimensions in [d_lo, d_hi] with a positive verdict, found by
/// binary search (the criterion is monotone in d). Absent when the verdict
/// already fails at d_lo. The ubiquity side is skipped (left absent) when
/// the vertex count exceeds the quotient-scan limit.
CriticalDimensions critical_dimensions(const Hypergraph& h, Mode mode, int d_lo, int d_hi,
                                       std::optional<int> max_edge_degree_cap = std::nullopt,
                                       int vertex_limit = 10);

// Named constructions used throughout the test suites and the CLI.
Hypergraph make_edge(int boundary_vertices);             // one edge over k boundary vertices
Hypergraph make_path(int edges);                         // path, endpoints on the boundary
Hypergraph make_star(int leaves);                        // leaves on the boundary, one interior hub
Hypergraph make_three_pairs();                           // three boundary pairs joined through a hub edge
Hypergraph make_tree_family(int d);                      // five-arm separating tree for dimension d >= 9

/// Resolves shorthand like "edge:5", "path:3", "star:4", "tree-family:13",
/// "three-pairs". Throws std::invalid_argument for unknown names.
Hypergraph make_builtin(const std::string& spec);
bool is_builtin_name(const std::string& spec);
std::vector<std::string> builtin_catalog();

/// d-basic: no edge of degree <= d/(d-4) and no proper, non-trivial bordered
/// subhypergraph of apparent weight exactly zero. Requires d > 4.
bool is_basic(const Hypergraph& h, const Rat& d);

/// All proper, non-trivial bordered subhypergraphs with apparent weight zero
/// (the witnesses that is_basic rules out).
std::vector<Selector> bordered_zero_subhypergraphs(const Hypergraph& h, const Rat& d);

} // namespace usf
