#pragma once

#include "usf/hypergraph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace usf {

using BigInt = boost::multiprecision::cpp_int;

/// A lattice point given by raw coordinates (not tied to a finite box).
using Point = std::vector<int64_t>;

int64_t l1_distance(const Point& a, const Point& b);

/// The bracket <xy> = graph distance + 1.
int64_t distance_bracket(const Point& a, const Point& b);

struct SpreadResult {
    BigInt value;                           // min over trees of the bracket product
    std::vector<std::pair<int, int>> tree;  // index pairs into K achieving it
    double log2_value = 0.0;
};

/// The spread of a point set: the minimum over trees on K of the product of
/// edge brackets. Because the bracket order determines the tree, a minimum
/// spanning tree under the brackets attains the minimum product exactly.
/// |K| = 1 gives the empty product 1.
SpreadResult spread(const std::vector<Point>& points);

/// The enumeration-order product prod_i min{ <x_i x_j> : j earlier }, which
/// dominates the spread for every order.
BigInt spread_greedy(const std::vector<Point>& points, const std::vector<int>& order);

/// Log2 of the witness weight: the product over boundary vertices u of
/// <x_u, {xi_e : e incident to u}>^-(d-2a) times the product over interior
/// vertices of <{xi_e : e incident to u}>^-(d-2a), each factor an exact
/// spread. Interior vertices of degree zero make an empty factor and are
/// rejected.
double witness_weight_log2(const Hypergraph& h, const std::vector<Point>& boundary_points,
                           const std::vector<Point>& edge_points, double d, double alpha = 2.0);

} // namespace usf
