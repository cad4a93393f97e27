#include "usf/errors.hpp"
#include "usf/ultrametric.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace usf;

namespace {

const std::vector<std::string> kAbc{"a", "b", "c"};
const std::vector<std::string> kAbcd{"a", "b", "c", "d"};

UltrametricPoint constant_point(const std::vector<std::string>& ids, const Rat& value) {
    UltrametricPoint x;
    x.index_set = ids;
    const int n = static_cast<int>(ids.size());
    x.values.assign(n, std::vector<Rat>(n, value));
    for (int i = 0; i < n; ++i) x.values[i][i] = Rat(0);
    return x;
}

ObjectiveSpec random_objective(CounterRng& rng, const std::vector<std::string>& ids) {
    ObjectiveSpec f;
    f.index_set = ids;
    const int n = static_cast<int>(ids.size());
    const int terms = 1 + static_cast<int>(rng.next_below(6));
    for (int k = 0; k < terms; ++k) {
        ObjectiveTerm t;
        t.coeff = Rat(static_cast<long long>(rng.next_below(21)) - 10,
                      1 + static_cast<long long>(rng.next_below(4)));
        const int pairs = 1 + static_cast<int>(rng.next_below(5));
        for (int p = 0; p < pairs; ++p)
            t.support.emplace_back(static_cast<int>(rng.next_below(n)),
                                   static_cast<int>(rng.next_below(n)));
        f.terms.push_back(std::move(t));
    }
    return f;
}

} // namespace

TEST_SUITE_BEGIN("ultrametric");

TEST_CASE("point validation") {
    CHECK_NOTHROW(validate_ultrametric(constant_point(kAbc, Rat(1))));
    CHECK_NOTHROW(validate_ultrametric(partition_point(kAbcd, {{0, 1}, {2, 3}})));

    UltrametricPoint bad = constant_point(kAbc, Rat(1));
    bad.values[0][1] = Rat(1, 2); // symmetry broken
    CHECK_THROWS_AS(validate_ultrametric(bad), std::invalid_argument);

    UltrametricPoint triangle = constant_point(kAbc, Rat(1));
    triangle.values[0][1] = triangle.values[1][0] = Rat(1, 4);
    triangle.values[1][2] = triangle.values[2][1] = Rat(1, 4);
    // d(a,c) = 1 > max(1/4, 1/4)
    CHECK_THROWS_AS(validate_ultrametric(triangle), std::invalid_argument);
    triangle.values[0][2] = triangle.values[2][0] = Rat(1, 4);
    CHECK_NOTHROW(validate_ultrametric(triangle));
}

TEST_CASE("evaluate") {
    SUBCASE("single term picks its minimum") {
        ObjectiveSpec f;
        f.index_set = kAbc;
        f.terms.push_back({Rat(2), {{0, 1}}});
        CHECK(evaluate(f, constant_point(kAbc, Rat(1))) == 2);
        CHECK(evaluate(f, constant_point(kAbc, Rat(0))) == 0);
        f.terms.push_back({Rat(5), {{2, 2}}}); // diagonal support: always zero
        CHECK(evaluate(f, constant_point(kAbc, Rat(1))) == 2);
    }
    SUBCASE("two terms at the partition point ab|c") {
        ObjectiveSpec f;
        f.index_set = kAbc;
        f.terms.push_back({Rat(1), {{0, 1}}});
        f.terms.push_back({Rat(-3), {{0, 1}, {1, 2}}});
        CHECK(evaluate(f, partition_point(kAbc, {{0, 1}, {2}})) == 0);
    }
    SUBCASE("empty supports are rejected") {
        ObjectiveSpec f;
        f.index_set = kAbc;
        f.terms.push_back({Rat(1), {}});
        CHECK_THROWS_AS(evaluate(f, constant_point(kAbc, Rat(1))), std::invalid_argument);
    }
}

TEST_CASE("polytope maximization") {
    SUBCASE("nonnegative coefficients want everything apart") {
        CounterRng rng(41, 0);
        for (int trial = 0; trial < 20; ++trial) {
            ObjectiveSpec f = random_objective(rng, kAbcd);
            for (auto& t : f.terms)
                if (t.coeff < 0) t.coeff = -t.coeff;
            PolytopeMax best = maximize_over_polytope(f);
            CHECK(best.value == evaluate(f, partition_point(kAbcd, {{0}, {1}, {2}, {3}})));
        }
    }
    SUBCASE("one negative term collapses its pair") {
        ObjectiveSpec f;
        f.index_set = kAbc;
        f.terms.push_back({Rat(-1), {{0, 1}}});
        PolytopeMax best = maximize_over_polytope(f);
        CHECK(best.value == 0);
        int label_a = -1, label_b = -1;
        for (size_t blk = 0; blk < best.partition.size(); ++blk)
            for (int i : best.partition[blk]) {
                if (i == 0) label_a = static_cast<int>(blk);
                if (i == 1) label_b = static_cast<int>(blk);
            }
        CHECK(label_a == label_b);
    }
    SUBCASE("the scan dominates random ultrametrics and returns a 0/1 point") {
        CounterRng rng(42, 0);
        for (int trial = 0; trial < 10; ++trial) {
            ObjectiveSpec f = random_objective(rng, kAbcd);
            PolytopeMax best = maximize_over_polytope(f);
            UltrametricPoint witness = partition_point(kAbcd, best.partition);
            CHECK_NOTHROW(validate_ultrametric(witness));
            CHECK(evaluate(f, witness) == best.value);
            for (int sample = 0; sample < 1000; ++sample) {
                UltrametricPoint x = random_ultrametric(kAbcd, rng);
                CHECK(evaluate(f, x) <= best.value);
            }
        }
    }
    SUBCASE("index sets beyond the cap are refused") {
        ObjectiveSpec f;
        for (int i = 0; i < 11; ++i) f.index_set.push_back("i" + std::to_string(i));
        f.terms.push_back({Rat(1), {{0, 1}}});
        CHECK_THROWS_AS(maximize_over_polytope(f), usf_error);
    }
}

TEST_CASE("blockwise maximization") {
    CounterRng rng(43, 0);
    SUBCASE("a single block is the unconstrained problem") {
        for (int trial = 0; trial < 10; ++trial) {
            ObjectiveSpec f = random_objective(rng, kAbcd);
            CHECK(maximize_blockwise(f, {{0, 1, 2, 3}}).value ==
                  maximize_over_polytope(f).value);
        }
    }
    SUBCASE("singleton blocks force the all-ones point") {
        for (int trial = 0; trial < 10; ++trial) {
            ObjectiveSpec f = random_objective(rng, kAbcd);
            CHECK(maximize_blockwise(f, {{0}, {1}, {2}, {3}}).value ==
                  evaluate(f, partition_point(kAbcd, {{0}, {1}, {2}, {3}})));
        }
    }
    SUBCASE("two blocks of two match the filtered partition scan") {
        const std::vector<std::vector<int>> blocks{{0, 1}, {2, 3}};
        for (int trial = 0; trial < 10; ++trial) {
            ObjectiveSpec f = random_objective(rng, kAbcd);
            Rat expected(0);
            bool first = true;
            for (const auto& partition : oracle::all_partitions(4)) {
                bool refines = true;
                for (const auto& blk : partition) {
                    bool left = false, right = false;
                    for (int i : blk) (i < 2 ? left : right) = true;
                    refines &= !(left && right);
                }
                if (!refines) continue;
                Rat v = evaluate(f, partition_point(kAbcd, partition));
                if (first || v > expected) expected = v;
                first = false;
            }
            PolytopeMax got = maximize_blockwise(f, blocks);
            CHECK(got.value == expected);
        }
    }
}

TEST_CASE("subdominant ultrametric") {
    SUBCASE("an ultrametric is its own closure") {
        UltrametricPoint x = partition_point(kAbcd, {{0, 2}, {1}, {3}});
        CHECK(subdominant_ultrametric(x.values) == x.values);
    }
    SUBCASE("triangle 5/2/9 closes through the cheap chain") {
        std::vector<std::vector<Rat>> l{{Rat(0), Rat(5), Rat(9)},
                                        {Rat(5), Rat(0), Rat(2)},
                                        {Rat(9), Rat(2), Rat(0)}};
        auto hat = subdominant_ultrametric(l);
        CHECK(hat[0][2] == 5);
        CHECK(hat[0][1] == 5);
        CHECK(hat[1][2] == 2);
    }
    SUBCASE("matches the chain oracle, is dominated, and is ultrametric") {
        CounterRng rng(44, 0);
        for (int trial = 0; trial < 15; ++trial) {
            const int n = 3 + static_cast<int>(rng.next_below(4));
            std::vector<std::vector<Rat>> l(n, std::vector<Rat>(n, Rat(0)));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    l[i][j] = l[j][i] = Rat(static_cast<long long>(rng.next_below(64)), 16);
            auto hat = subdominant_ultrametric(l);
            CHECK(hat == oracle::chain_minimax(l));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    CHECK(hat[i][j] <= l[i][j]);
                    for (int k = 0; k < n; ++k)
                        CHECK(hat[i][j] <= std::max(hat[i][k], hat[k][j]));
                }
        }
    }
    SUBCASE("every dominated ultrametric sits below the closure") {
        CounterRng rng(45, 0);
        std::vector<std::string> ids{"p", "q", "r", "s", "t"};
        for (int trial = 0; trial < 15; ++trial) {
            std::vector<std::vector<Rat>> l(5, std::vector<Rat>(5, Rat(0)));
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    l[i][j] = l[j][i] = Rat(1 + static_cast<long long>(rng.next_below(32)), 16);
            auto hat = subdominant_ultrametric(l);

            // Scale a random hierarchy until it fits under l pointwise.
            UltrametricPoint u = random_ultrametric(ids, rng);
            Rat lambda(1);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    if (u.values[i][j] > 0)
                        lambda = std::min(lambda, l[i][j] / u.values[i][j]);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    const Rat scaled = u.values[i][j] * lambda;
                    CHECK(scaled <= l[i][j]);
                    CHECK(scaled <= hat[i][j]);
                }
        }
    }
    SUBCASE("shape violations are rejected") {
        std::vector<std::vector<Rat>> bad{{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
        CHECK_THROWS_AS(subdominant_ultrametric(bad), std::invalid_argument);
    }
}

TEST_CASE("objective homogeneity on feasible points") {
    CounterRng rng(46, 0);
    for (int trial = 0; trial < 10; ++trial) {
        ObjectiveSpec f = random_objective(rng, kAbcd);
        UltrametricPoint x = random_ultrametric(kAbcd, rng);
        const Rat fx = evaluate(f, x);

        for (Rat lambda : {Rat(0), Rat(1, 3), Rat(1)}) {
            UltrametricPoint scaled = x;
            for (auto& row : scaled.values)
                for (auto& v : row) v *= lambda;
            CHECK_NOTHROW(validate_ultrametric(scaled));
            CHECK(evaluate(f, scaled) == lambda * fx);
        }

        Rat max_value(0);
        for (const auto& row : x.values)
            for (const auto& v : row) max_value = std::max(max_value, v);
        const Rat alpha = (Rat(1) - max_value) / 2;
        UltrametricPoint shifted = x;
        for (size_t i = 0; i < shifted.values.size(); ++i)
            for (size_t j = 0; j < shifted.values.size(); ++j)
                if (i != j) shifted.values[i][j] += alpha;
        CHECK_NOTHROW(validate_ultrametric(shifted));
        const Rat f_ones = evaluate(f, constant_point(kAbcd, Rat(1)));
        CHECK(evaluate(f, shifted) == fx + alpha * f_ones);
    }
}

TEST_CASE("random hierarchies are valid points") {
    CounterRng rng(47, 0);
    for (int trial = 0; trial < 50; ++trial) {
        UltrametricPoint x = random_ultrametric(kAbcd, rng);
        CHECK_NOTHROW(validate_ultrametric(x));
    }
}

TEST_SUITE_END();
