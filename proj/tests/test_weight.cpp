#include "usf/classify.hpp"
#include "usf/errors.hpp"
#include "usf/weight.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace usf;

namespace {

Hypergraph parallel_pair() {
    return Hypergraph::from_parts({"a", "b"}, {}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}}});
}

Hypergraph random_tree_with_boundary(CounterRng& rng, int max_edges) {
    const int n = 2 + static_cast<int>(rng.next_below(max_edges));
    auto edges = oracle::random_tree_edges(rng, n);
    const uint64_t bmask = 1 + rng.next_below((uint64_t{1} << n) - 1);
    std::vector<std::string> boundary, interior;
    for (int v = 0; v < n; ++v)
        (bmask >> v & 1 ? boundary : interior).push_back("v" + std::to_string(v));
    std::vector<std::pair<std::string, std::vector<std::string>>> es;
    for (size_t i = 0; i < edges.size(); ++i)
        es.emplace_back("e" + std::to_string(i),
                        std::vector<std::string>{"v" + std::to_string(edges[i].first),
                                                 "v" + std::to_string(edges[i].second)});
    return Hypergraph::from_parts(std::move(boundary), std::move(interior), std::move(es));
}

} // namespace

TEST_SUITE_BEGIN("weight");

TEST_CASE("apparent weight from the definition") {
    SUBCASE("one edge over k boundary vertices: (d-4)k - d") {
        for (int k : {2, 3, 5})
            for (int d : {5, 6, 8, 13})
                CHECK(apparent_weight(make_edge(k), Rat(d)) == Rat(d - 4) * k - d);
        CHECK(apparent_weight(make_edge(5), Rat(5)) == 0);
    }
    SUBCASE("simple graphs collapse to (d-8)|E| - (d-4)|interior|") {
        for (int d : {5, 9, 12, 30})
            CHECK(apparent_weight(make_path(2), Rat(d)) == Rat(d - 12)); // 2(d-8)-(d-4)
    }
    SUBCASE("edgeless") {
        Hypergraph h = Hypergraph::from_parts({"a"}, {"u", "v"}, {});
        for (int d : {4, 7, 19}) CHECK(apparent_weight(h, Rat(d)) == Rat(-(d - 4) * 2));
    }
    SUBCASE("generalized exponent") {
        Hypergraph h = make_three_pairs();
        CHECK(apparent_weight(h, Rat(10)) == apparent_weight(h, Rat(10), Rat(2)));
        CHECK(apparent_weight(h, Rat(10), Rat(3)) == Rat(4) * 12 - Rat(10) * 4 - Rat(4) * 3);
        CHECK(apparent_weight(h, Rat(10), Rat(9, 2)) == Rat(1) * 12 - Rat(10) * 4 - Rat(1) * 3);
    }
    SUBCASE("report fields") {
        WeightReport r = weight_report(make_three_pairs(), Rat(10));
        CHECK(r.delta == 12);
        CHECK(r.edge_count == 4);
        CHECK(r.interior_count == 3);
        CHECK(r.eta == Rat(5) * 10 - 36);
        auto [vd, ed] = degrees(make_three_pairs());
        long long by_vertex = 0;
        for (int x : vd) by_vertex += x;
        CHECK(by_vertex == r.delta);
    }
}

TEST_CASE("buoyancy") {
    CHECK(is_buoyant(make_edge(3), Rat(6)));       // 3*2 - 6 = 0
    CHECK_FALSE(is_buoyant(make_edge(3), Rat(7))); // 3*3 - 7 = 2
    Hypergraph edgeless = Hypergraph::from_parts({"a"}, {"u"}, {});
    for (int d = 4; d <= 30; ++d) CHECK(is_buoyant(edgeless, Rat(d)));
}

TEST_CASE("minimum over coarsenings") {
    SUBCASE("forests are already optimal") {
        CounterRng rng(21, 0);
        for (int trial = 0; trial < 25; ++trial) {
            Hypergraph t = random_tree_with_boundary(rng, 8);
            for (Rat d : {Rat(4), Rat(9, 2), Rat(7), Rat(12)}) {
                auto [value, partition] = min_coarsening_weight(t, d);
                CHECK(value == apparent_weight(t, d));
                CHECK(partition.blocks.size() == static_cast<size_t>(t.edge_count()));
            }
        }
    }
    SUBCASE("parallel pair at d = 10 wants the merge") {
        auto [value, partition] = min_coarsening_weight(parallel_pair(), Rat(10));
        CHECK(value == 2); // merged: d - 8
        CHECK(partition.blocks == std::vector<std::vector<int>>{{0, 1}});
    }
    SUBCASE("single edge has only itself") {
        auto [value, partition] = min_coarsening_weight(make_edge(3), Rat(9));
        CHECK(value == apparent_weight(make_edge(3), Rat(9)));
        CHECK(partition.blocks.size() == 1);
    }
    SUBCASE("ties break toward fewer blocks") {
        // Parallel pair at d = 8: split and merged both weigh 0.
        auto [value, partition] = min_coarsening_weight(parallel_pair(), Rat(8));
        CHECK(value == 0);
        CHECK(partition.blocks.size() == 1);
    }
    SUBCASE("oracle agreement on random hypergraphs") {
        CounterRng rng(22, 0);
        for (int trial = 0; trial < 40; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng);
            for (Rat d : {Rat(4), Rat(11, 2), Rat(9), Rat(17)}) {
                Rat expected(0);
                bool first = true;
                const auto edges = oracle::edge_sets(h);
                for (const auto& blocks : oracle::all_partitions(h.edge_count())) {
                    const auto coarse = oracle::coarsen_edges(edges, blocks);
                    oracle::RawSelector s;
                    for (int v = 0; v < h.vertex_count(); ++v) s.verts.insert(v);
                    for (size_t e = 0; e < coarse.size(); ++e) s.edges.insert(static_cast<int>(e));
                    Rat v = oracle::selector_eta(h.boundary_count(), coarse, s, d);
                    if (first || v < expected) expected = v;
                    first = false;
                }
                CHECK(min_coarsening_weight(h, d).value == expected);
            }
        }
    }
    SUBCASE("the exact scan refuses too many edges") {
        std::vector<std::pair<std::string, std::vector<std::string>>> es;
        for (int i = 0; i < 13; ++i)
            es.emplace_back("e" + std::to_string(i + 10), std::vector<std::string>{"a"});
        Hypergraph wide = Hypergraph::from_parts({"a"}, {}, std::move(es));
        CHECK_THROWS_AS(min_coarsening_weight(wide, Rat(9)), usf_error);
        CHECK_NOTHROW(min_coarsening_weight(wide, Rat(9), 13)); // explicit override
    }
}

TEST_CASE("maximum over subhypergraphs via the closed-form vertex choice") {
    SUBCASE("matches the brute force") {
        CounterRng rng(23, 0);
        for (int trial = 0; trial < 60; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng);
            for (Rat d : {Rat(5), Rat(9, 2), Rat(8), Rat(20)})
                CHECK(max_subhypergraph_weight(h, d).value ==
                      oracle::max_subhypergraph_eta(h, d));
        }
    }
    SUBCASE("the reported selector achieves the value") {
        CounterRng rng(24, 0);
        for (int trial = 0; trial < 40; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng);
            for (Rat d : {Rat(5), Rat(13)}) {
                auto [value, sel] = max_subhypergraph_weight(h, d);
                Hypergraph sub = materialize_subhypergraph(h, sel);
                CHECK(apparent_weight(sub, d) == value);
            }
        }
    }
    SUBCASE("degree-one interior vertices are left out") {
        Hypergraph h = Hypergraph::from_parts({"a", "b"}, {"u"}, {{"e", {"a", "b", "u"}}});
        auto [value, sel] = max_subhypergraph_weight(h, Rat(10));
        CHECK(value == 2); // 2(d-4) - d with u excluded
        CHECK(sel.interior.empty());
        CHECK(sel.edges == std::vector<int>{0});
    }
    SUBCASE("empty edge subset wins when everything is negative") {
        auto [value, sel] = max_subhypergraph_weight(make_path(3), Rat(5));
        CHECK(value == 0);
        CHECK(sel.edges.empty());
    }
    SUBCASE("d below 4 is rejected") {
        CHECK_THROWS_AS(max_subhypergraph_weight(make_edge(2), Rat(3)), usf_error);
    }
}

TEST_CASE("min-max criterion value") {
    SUBCASE("paths") {
        for (int n = 1; n <= 4; ++n)
            for (int d = 4; d <= 30; ++d) {
                Rat expected = std::max(Rat(0), Rat(d - 4 * n - 4));
                MinMaxSolution got = min_max_weight(make_path(n), Rat(d));
                CHECK(got.value == expected);
                CHECK(got.value == oracle::min_max(make_path(n), Rat(d)));
            }
    }
    SUBCASE("single edge over k boundary vertices") {
        for (int k : {2, 3, 5})
            for (int d : {5, 6, 9, 14})
                CHECK(min_max_weight(make_edge(k), Rat(d)).value ==
                      std::max(Rat(0), Rat(d - 4) * k - d));
    }
    SUBCASE("edgeless value is zero") {
        Hypergraph h = Hypergraph::from_parts({"a", "b"}, {"u"}, {});
        CHECK(min_max_weight(h, Rat(11)).value == 0);
    }
    SUBCASE("witnesses are consistent") {
        CounterRng rng(25, 0);
        for (int trial = 0; trial < 30; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng);
            MinMaxSolution mm = min_max_weight(h, Rat(9));
            Hypergraph coarse = coarsen(h, mm.witness_coarsening);
            Hypergraph sub = materialize_subhypergraph(coarse, mm.witness_subhypergraph);
            CHECK(apparent_weight(sub, Rat(9)) == mm.value);
        }
    }
}

TEST_CASE("max-min equals min-max") {
    CounterRng rng(26, 0);
    SUBCASE("random hypergraphs, integer and rational d") {
        for (int trial = 0; trial < 40; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng, 6, 4);
            for (Rat d : {Rat(4), Rat(9, 2), Rat(7), Rat(35, 3), Rat(19)}) {
                Rat mm = min_max_weight(h, d).value;
                CHECK(mm == max_min_weight(h, d));
                CHECK(mm == oracle::min_max(h, d));
                CHECK(mm == oracle::max_min(h, d));
            }
        }
    }
    SUBCASE("forests reduce to the best subforest") {
        for (int trial = 0; trial < 20; ++trial) {
            Hypergraph t = random_tree_with_boundary(rng, 6);
            for (Rat d : {Rat(5), Rat(10), Rat(16)})
                CHECK(max_min_weight(t, d) == oracle::max_subhypergraph_eta(t, d));
        }
    }
    SUBCASE("d below 4 is rejected") {
        CHECK_THROWS_AS(min_max_weight(make_edge(2), Rat(7, 2)), usf_error);
        CHECK_THROWS_AS(max_min_weight(make_edge(2), Rat(7, 2)), usf_error);
    }
}

TEST_CASE("min-max is monotone in the dimension") {
    CounterRng rng(27, 0);
    for (int trial = 0; trial < 25; ++trial) {
        Hypergraph h = oracle::random_hypergraph(rng);
        Rat prev = min_max_weight(h, Rat(4)).value;
        for (int d = 5; d <= 24; ++d) {
            Rat cur = min_max_weight(h, Rat(d)).value;
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("forest rigidity: merges only add weight") {
    CounterRng rng(28, 0);
    for (int trial = 0; trial < 15; ++trial) {
        Hypergraph t = random_tree_with_boundary(rng, 6);
        const Rat base = apparent_weight(t, Rat(9));
        for_each_edge_partition(t, [&](const EdgePartition& p) {
            long long merges = t.edge_count() - static_cast<long long>(p.blocks.size());
            CHECK(apparent_weight(coarsen(t, p), Rat(9)) >= base + 4 * merges);
        });
    }
}

TEST_SUITE_END();
