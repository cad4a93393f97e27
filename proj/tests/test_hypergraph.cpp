#include "usf/errors.hpp"
#include "usf/hypergraph.hpp"
#include "usf/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace usf;

namespace {

Hypergraph path_aub() {
    return Hypergraph::from_parts({"a", "b"}, {"u"}, {{"e1", {"a", "u"}}, {"e2", {"u", "b"}}});
}

bool same_structure(const Hypergraph& x, const Hypergraph& y) {
    return x.boundary_ids == y.boundary_ids && x.interior_ids == y.interior_ids &&
           x.incidence == y.incidence;
}

} // namespace

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("validation names the violated invariant") {
    CHECK_NOTHROW(validate(Hypergraph::from_parts({"a"}, {}, {{"e", {"a"}}})));

    CHECK_THROWS_WITH_AS(Hypergraph::from_parts({}, {"u"}, {}),
                         doctest::Contains("EmptyBoundary"), usf_error);
    CHECK_THROWS_WITH_AS(Hypergraph::from_parts({"a"}, {}, {{"e", {}}}),
                         doctest::Contains("EdgeWithNoVertex"), usf_error);
    CHECK_THROWS_WITH_AS(Hypergraph::from_parts({"a"}, {}, {{"e", {"ghost"}}}),
                         doctest::Contains("DanglingIncidence"), usf_error);
    CHECK_THROWS_WITH_AS(Hypergraph::from_parts({"a"}, {"a"}, {}),
                         doctest::Contains("DuplicateId"), usf_error);
    CHECK_THROWS_WITH_AS(Hypergraph::from_parts({"a", "b"}, {}, {{"e", {"a"}}, {"e", {"b"}}}),
                         doctest::Contains("DuplicateId"), usf_error);

    // Hand-built invalid values are caught by validate as well.
    Hypergraph broken = Hypergraph::from_parts({"a"}, {}, {{"e", {"a"}}});
    broken.incidence[0].clear();
    CHECK_THROWS_AS(validate(broken), usf_error);
}

TEST_CASE("degrees") {
    Hypergraph h = Hypergraph::from_parts({"a", "b", "c"}, {}, {{"e", {"a", "b", "c"}}});
    auto [vd, ed] = degrees(h);
    CHECK(ed == std::vector<int>{3});
    CHECK(vd == std::vector<int>{1, 1, 1});

    Hypergraph parallel =
        Hypergraph::from_parts({"a", "b"}, {}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}}});
    auto [pvd, ped] = degrees(parallel);
    CHECK(pvd == std::vector<int>{2, 2});
    CHECK(total_weight(parallel) == 4);
    CHECK_FALSE(is_simple(parallel));

    Hypergraph edgeless = Hypergraph::from_parts({"a", "b"}, {"u"}, {});
    auto [evd, eed] = degrees(edgeless);
    CHECK(evd == std::vector<int>{0, 0, 0});
    CHECK(eed.empty());
}

TEST_CASE("materialize_subhypergraph") {
    Hypergraph h = path_aub();

    SUBCASE("full selector is the identity") {
        Hypergraph again = materialize_subhypergraph(h, full_selector(h));
        CHECK(same_structure(h, again));
    }
    SUBCASE("an edge kept without its vertices is an orphan") {
        Selector s;
        s.boundary = {0}; // a
        s.edges = {1};    // e2 = {u, b}
        CHECK_THROWS_WITH_AS(materialize_subhypergraph(h, s), doctest::Contains("OrphanEdge"),
                             usf_error);
    }
    SUBCASE("path restricted to one edge") {
        Selector s;
        s.boundary = {0};
        s.interior = {2};
        s.edges = {0}; // e1 = {a, u}
        Hypergraph sub = materialize_subhypergraph(h, s);
        CHECK(sub.edge_count() == 1);
        CHECK(sub.incidence[0].size() == 2);
        CHECK(sub.boundary_ids == std::vector<std::string>{"a"});
    }
    SUBCASE("empty boundary is rejected") {
        Selector s;
        s.interior = {2};
        CHECK_THROWS_AS(materialize_subhypergraph(h, s), usf_error);
    }
}

TEST_CASE("subhypergraph enumeration counts match the oracle") {
    SUBCASE("single edge over one boundary vertex") {
        Hypergraph h = Hypergraph::from_parts({"a"}, {}, {{"e", {"a"}}});
        CHECK(enumerate_subhypergraphs(h).size() == 2); // ({a}, {}), ({a}, {e})
    }
    SUBCASE("one boundary, one interior, one edge over both") {
        Hypergraph h = Hypergraph::from_parts({"a"}, {"u"}, {{"e", {"a", "u"}}});
        CHECK(enumerate_subhypergraphs(h).size() == 4);
    }
    SUBCASE("no edges: nonempty boundary subsets") {
        Hypergraph h = Hypergraph::from_parts({"a", "b", "c"}, {}, {});
        CHECK(enumerate_subhypergraphs(h).size() == (1u << 3) - 1);
    }
    SUBCASE("random instances") {
        CounterRng rng(11, 0);
        for (int trial = 0; trial < 30; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng);
            auto expected =
                oracle::all_selectors(h.boundary_count(), h.vertex_count(), oracle::edge_sets(h));
            auto got = enumerate_subhypergraphs(h);
            CHECK(got.size() == expected.size());
            std::set<std::pair<std::set<int>, std::set<int>>> seen;
            for (const Selector& s : got) {
                std::set<int> verts(s.boundary.begin(), s.boundary.end());
                verts.insert(s.interior.begin(), s.interior.end());
                CHECK(seen.emplace(verts, std::set<int>(s.edges.begin(), s.edges.end())).second);
            }
        }
    }
}

TEST_CASE("coarsen") {
    SUBCASE("all singletons is the identity up to relabeling") {
        Hypergraph h = path_aub();
        CHECK(same_structure(coarsen(h, singleton_edge_partition(h)), h));
    }
    SUBCASE("merging parallel edges halves the weight") {
        Hypergraph h =
            Hypergraph::from_parts({"a", "b"}, {}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}}});
        CHECK(total_weight(h) == 4);
        Hypergraph merged = coarsen(h, make_edge_partition({{0, 1}}, 2));
        CHECK(merged.edge_count() == 1);
        CHECK(total_weight(merged) == 2);
    }
    SUBCASE("star with all edges merged") {
        Hypergraph h = Hypergraph::from_parts(
            {"x1", "x2", "x3"}, {"c"},
            {{"e1", {"x1", "c"}}, {"e2", {"x2", "c"}}, {"e3", {"x3", "c"}}});
        Hypergraph merged = coarsen(h, make_edge_partition({{0, 1, 2}}, 3));
        CHECK(merged.edge_count() == 1);
        CHECK(merged.incidence[0].size() == 4);
        CHECK(total_weight(merged) == 4);
    }
    SUBCASE("vertex sets never change and weight never grows") {
        CounterRng rng(12, 0);
        for (int trial = 0; trial < 40; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng);
            for_each_edge_partition(h, [&](const EdgePartition& p) {
                Hypergraph c = coarsen(h, p);
                CHECK(c.boundary_ids == h.boundary_ids);
                CHECK(c.interior_ids == h.interior_ids);
                CHECK(c.edge_count() == static_cast<int>(p.blocks.size()));
                CHECK(total_weight(c) <= total_weight(h));
            });
        }
    }
}

TEST_CASE("quotient") {
    SUBCASE("identity plan") {
        Hypergraph h = path_aub();
        CHECK(same_structure(quotient(h, identity_merge_plan(h)), h));
    }
    SUBCASE("merging the middle of a three-edge path") {
        Hypergraph h = Hypergraph::from_parts(
            {"a", "b"}, {"u", "v"},
            {{"e1", {"a", "u"}}, {"e2", {"u", "v"}}, {"e3", {"v", "b"}}});
        Hypergraph q = quotient(h, make_merge_plan({{0}, {1}, {2, 3}}, h));
        CHECK(q.edge_count() == 3); // quotients preserve the edge set
        CHECK(q.interior_ids == std::vector<std::string>{"u"});
        auto [vd, ed] = degrees(q);
        std::sort(ed.begin(), ed.end());
        CHECK(ed == std::vector<int>{1, 2, 2}); // the middle edge collapses onto one vertex
    }
    SUBCASE("two boundary vertices cannot merge") {
        Hypergraph h = path_aub();
        CHECK_THROWS_WITH_AS(quotient(h, VertexMergePlan{{{0, 1}, {2}}}),
                             doctest::Contains("BoundaryCollision"), usf_error);
    }
    SUBCASE("edge count preserved, vertex count never grows") {
        CounterRng rng(13, 0);
        for (int trial = 0; trial < 25; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng, 5, 4);
            for_each_vertex_merge_plan(h, [&](const VertexMergePlan& m) {
                Hypergraph q = quotient(h, m);
                CHECK(q.edge_count() == h.edge_count());
                CHECK(q.vertex_count() == static_cast<int>(m.blocks.size()));
            });
        }
    }
}

TEST_CASE("structural predicates") {
    Hypergraph h = path_aub();
    CHECK(is_full(h, full_selector(h)));
    CHECK(is_bordered(h, full_selector(h)));

    Selector missing_endpoint;
    missing_endpoint.boundary = {0};
    missing_endpoint.edges = {0}; // e1 = {a, u} but u unselected
    CHECK_FALSE(is_full(h, missing_endpoint));
    CHECK_FALSE(is_bordered(h, missing_endpoint)); // b missing from the boundary

    // u is unselected but meets both selected edges: not bordered.
    Selector both_edges;
    both_edges.boundary = {0, 1};
    both_edges.edges = {0, 1};
    CHECK_FALSE(is_bordered(h, both_edges));
    Selector one_edge;
    one_edge.boundary = {0, 1};
    one_edge.edges = {0};
    CHECK(is_bordered(h, one_edge));

    EdgePartition both = make_edge_partition({{0, 1}}, 2);
    CHECK_FALSE(is_subordinate(one_edge, both)); // block {e1,e2} split by {e1}
    CHECK(is_subordinate(both_edges, both));
    Selector no_edges;
    no_edges.boundary = {0};
    CHECK(is_subordinate(no_edges, both));
}

TEST_CASE("partition and merge-plan enumeration counts") {
    auto h3 = Hypergraph::from_parts({"a"}, {},
                                     {{"e1", {"a"}}, {"e2", {"a"}}, {"e3", {"a"}}});
    CHECK(enumerate_edge_partitions(h3).size() == 5); // Bell(3)
    auto h4 = Hypergraph::from_parts(
        {"a"}, {}, {{"e1", {"a"}}, {"e2", {"a"}}, {"e3", {"a"}}, {"e4", {"a"}}});
    CHECK(enumerate_edge_partitions(h4).size() == 15); // Bell(4)

    // Two boundary vertices and one interior vertex: of the Bell(3) = 5
    // vertex partitions, the two merging a-b are excluded.
    Hypergraph v3 = Hypergraph::from_parts({"a", "b"}, {"u"}, {});
    auto plans = enumerate_vertex_merge_plans(v3);
    CHECK(plans.size() == 3);
    for (const auto& plan : plans) CHECK_NOTHROW(make_merge_plan(plan.blocks, v3));

    SUBCASE("counts match the independent enumerations") {
        CounterRng rng(14, 0);
        for (int trial = 0; trial < 20; ++trial) {
            Hypergraph h = oracle::random_hypergraph(rng, 7, 6);
            CHECK(static_cast<long long>(enumerate_edge_partitions(h).size()) ==
                  oracle::bell(h.edge_count()));
            long long allowed = 0;
            for (const auto& blocks : oracle::all_partitions(h.vertex_count())) {
                bool ok = true;
                for (const auto& b : blocks) {
                    int boundary = 0;
                    for (int v : b) boundary += h.is_boundary_vertex(v);
                    ok &= boundary <= 1;
                }
                allowed += ok;
            }
            size_t got = 0;
            for_each_vertex_merge_plan(h, [&](const VertexMergePlan&) { ++got; });
            CHECK(static_cast<long long>(got) == allowed);
        }
    }
}

TEST_CASE("isomorphism and refinement") {
    Hypergraph h = path_aub();
    SUBCASE("coarsen round trip") {
        EdgePartition p = make_edge_partition({{0, 1}}, 2);
        Hypergraph target = coarsen(h, p);
        auto witness = is_refinement(h, target);
        REQUIRE(witness.has_value());
        CHECK(is_isomorphic(coarsen(h, *witness), target));
    }
    SUBCASE("coarsening never adds edges") {
        Hypergraph single = Hypergraph::from_parts({"a", "b"}, {}, {{"e", {"a", "b"}}});
        Hypergraph two =
            Hypergraph::from_parts({"a", "b"}, {}, {{"e1", {"a"}}, {"e2", {"b"}}});
        CHECK_FALSE(is_refinement(single, two).has_value());
    }
    SUBCASE("parallel edges refine their merge") {
        Hypergraph pair =
            Hypergraph::from_parts({"a", "b"}, {}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}}});
        Hypergraph merged = coarsen(pair, make_edge_partition({{0, 1}}, 2));
        auto witness = is_refinement(pair, merged);
        REQUIRE(witness.has_value());
        CHECK(witness->blocks == std::vector<std::vector<int>>{{0, 1}});
    }
    SUBCASE("interior labels are free, boundary labels pinned") {
        Hypergraph x = Hypergraph::from_parts({"a"}, {"u"}, {{"e", {"a", "u"}}});
        Hypergraph y = Hypergraph::from_parts({"a"}, {"w"}, {{"f", {"a", "w"}}});
        Hypergraph z = Hypergraph::from_parts({"c"}, {"u"}, {{"e", {"c", "u"}}});
        CHECK(is_isomorphic(x, y));
        CHECK_FALSE(is_isomorphic(x, z));
    }
}

TEST_CASE("subordinate coarsenings commute with restriction") {
    CounterRng rng(15, 0);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        Hypergraph h = oracle::random_hypergraph(rng, 6, 4);
        if (h.edge_count() == 0) continue;
        auto partitions = enumerate_edge_partitions(h);
        const EdgePartition p = partitions[rng.next_below(partitions.size())];

        // Pick a subset of blocks; take the full subhypergraph they span
        // plus every boundary vertex (so the result stays well defined).
        std::vector<int> chosen_edges;
        std::set<int> chosen_verts;
        for (const auto& block : p.blocks)
            if (rng.next_bool())
                for (int e : block) {
                    chosen_edges.push_back(e);
                    chosen_verts.insert(h.incidence[e].begin(), h.incidence[e].end());
                }
        Selector s;
        for (int v = 0; v < h.boundary_count(); ++v) chosen_verts.insert(v);
        for (int v : chosen_verts)
            (h.is_boundary_vertex(v) ? s.boundary : s.interior).push_back(v);
        std::sort(chosen_edges.begin(), chosen_edges.end());
        s.edges = chosen_edges;
        REQUIRE(is_subordinate(s, p));
        REQUIRE(is_full(h, s));

        // Coarsen the restriction along the restricted partition.
        std::map<int, int> edge_pos;
        for (size_t i = 0; i < s.edges.size(); ++i) edge_pos[s.edges[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> restricted;
        for (const auto& block : p.blocks) {
            std::vector<int> rb;
            for (int e : block)
                if (edge_pos.count(e)) rb.push_back(edge_pos[e]);
            if (!rb.empty()) restricted.push_back(rb);
        }
        Hypergraph side_a =
            coarsen(materialize_subhypergraph(h, s),
                    make_edge_partition(restricted, static_cast<int>(s.edges.size())));

        // The matching subhypergraph of the coarsened hypergraph: the blocks
        // inside s.edges, with the same vertices.
        Hypergraph hc = coarsen(h, p);
        std::set<int> inside(s.edges.begin(), s.edges.end());
        Selector cs;
        cs.boundary = s.boundary;
        cs.interior = s.interior;
        for (size_t b = 0; b < p.blocks.size(); ++b)
            if (inside.count(p.blocks[b].front())) cs.edges.push_back(static_cast<int>(b));
        Hypergraph side_b = materialize_subhypergraph(hc, cs);
        CHECK(is_isomorphic(side_a, side_b));
        ++done;
    }
    CHECK(done == 40);
}

TEST_SUITE_END();
