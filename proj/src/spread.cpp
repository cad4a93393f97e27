#include "usf/spread.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace usf {

int64_t l1_distance(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("points of different dimension");
    int64_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += std::llabs(a[i] - b[i]);
    return d;
}

int64_t distance_bracket(const Point& a, const Point& b) { return l1_distance(a, b) + 1; }

SpreadResult spread(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    if (n == 0) throw std::invalid_argument("spread of an empty point set");
    SpreadResult out;
    out.value = 1;
    if (n == 1) return out;

    struct Edge {
        int64_t bracket;
        int a, b;
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({distance_bracket(points[i], points[j]), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.bracket, x.a, x.b) < std::tie(y.bracket, y.a, y.b);
    });

    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const Edge& e : edges) {
        const int a = find(e.a), b = find(e.b);
        if (a == b) continue;
        root[a] = b;
        out.value *= e.bracket;
        out.log2_value += std::log2(static_cast<double>(e.bracket));
        out.tree.emplace_back(e.a, e.b);
        if (static_cast<int>(out.tree.size()) == n - 1) break;
    }
    return out;
}

BigInt spread_greedy(const std::vector<Point>& points, const std::vector<int>& order) {
    const int n = static_cast<int>(points.size());
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order must enumerate the point set");
    BigInt product = 1;
    for (int i = 1; i < n; ++i) {
        int64_t best = 0;
        for (int j = 0; j < i; ++j) {
            const int64_t b = distance_bracket(points[order[i]], points[order[j]]);
            if (j == 0 || b < best) best = b;
        }
        product *= best;
    }
    return product;
}

double witness_weight_log2(const Hypergraph& h, const std::vector<Point>& boundary_points,
                           const std::vector<Point>& edge_points, double d, double alpha) {
    if (static_cast<int>(boundary_points.size()) != h.boundary_count())
        throw std::invalid_argument("one point per boundary vertex required");
    if (static_cast<int>(edge_points.size()) != h.edge_count())
        throw std::invalid_argument("one point per edge required");

    auto [vertex_deg, edge_deg] = degrees(h);
    double log2_sum = 0.0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        std::vector<Point> factor;
        if (h.is_boundary_vertex(v)) factor.push_back(boundary_points[v]);
        for (int e = 0; e < h.edge_count(); ++e)
            if (std::binary_search(h.incidence[e].begin(), h.incidence[e].end(), v))
                factor.push_back(edge_points[e]);
        if (factor.empty())
            throw std::invalid_argument("interior vertex '" + h.vertex_id(v) +
                                        "' has no incident edge: empty weight factor");
        log2_sum += spread(factor).log2_value;
    }
    return -(d - 2 * alpha) * log2_sum;
}

} // namespace usf
