#pragma once

#include "usf/forest.hpp"
#include "usf/hypergraph.hpp"
#include "usf/ultrametric.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace usf {

/// Text format, one hypergraph per file:
///   # comment
///   boundary: a b
///   interior: u
///   edge e1: a u
/// Tokens are whitespace separated; '#' starts a comment. Structural errors
/// raise parse_error with the offending line; invariant violations raise
/// usf_error.
Hypergraph parse_hypergraph_text(std::istream& in);
std::string format_hypergraph_text(const Hypergraph& h);

/// JSON mirror: {"boundary": [...], "interior": [...], "edges": {id: [ids]}}.
Hypergraph parse_hypergraph_json(std::istream& in);
nlohmann::json hypergraph_to_json(const Hypergraph& h);

/// Dispatches on the ".json" extension, otherwise reads the text format.
Hypergraph load_hypergraph(const std::string& path);

/// Forest dump: one line "child parent" per in-box vertex, vertices as
/// comma-joined coordinates and W for the wired vertex.
void dump_forest(const LatticeForest& f, std::ostream& out);
LatticeForest parse_forest(const LatticeBox& box, std::istream& in);

/// Objective file for the ultrametric optimizer:
///   set: a b c
///   term -3: a,b b,c
///   term 1/2: a,c
ObjectiveSpec parse_objective(std::istream& in);

} // namespace usf
