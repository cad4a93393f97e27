#include "usf/ultrametric.hpp"

#include "usf/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace usf {

namespace {

void check_square(const std::vector<std::vector<Rat>>& values, size_t n, const char* what) {
    if (values.size() != n) throw std::invalid_argument(std::string(what) + ": wrong row count");
    for (const auto& row : values)
        if (row.size() != n) throw std::invalid_argument(std::string(what) + ": ragged matrix");
}

} // namespace

void validate_ultrametric(const UltrametricPoint& x) {
    const int n = x.size();
    check_square(x.values, n, "ultrametric");
    for (int a = 0; a < n; ++a) {
        if (x.values[a][a] != 0) throw std::invalid_argument("ultrametric: nonzero diagonal");
        for (int b = 0; b < n; ++b) {
            if (x.values[a][b] != x.values[b][a])
                throw std::invalid_argument("ultrametric: not symmetric");
            if (x.values[a][b] < 0 || x.values[a][b] > 1)
                throw std::invalid_argument("ultrametric: value outside [0,1]");
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (x.values[a][b] > std::max(x.values[a][c], x.values[c][b]))
                    throw std::invalid_argument("ultrametric: strong triangle inequality fails");
}

void validate_objective(const ObjectiveSpec& f) {
    const int n = f.size();
    for (const auto& term : f.terms) {
        if (term.support.empty())
            throw std::invalid_argument("objective: empty support set");
        for (auto [a, b] : term.support)
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("objective: support index out of range");
    }
}

Rat evaluate(const ObjectiveSpec& f, const UltrametricPoint& x) {
    if (f.index_set != x.index_set)
        throw std::invalid_argument("objective and point disagree on the index set");
    validate_objective(f);
    Rat total(0);
    for (const auto& term : f.terms) {
        Rat m = x.at(term.support.front().first, term.support.front().second);
        for (auto [a, b] : term.support) m = std::min(m, x.at(a, b));
        total += term.coeff * m;
    }
    return total;
}

UltrametricPoint partition_point(const std::vector<std::string>& index_set,
                                 const std::vector<std::vector<int>>& partition) {
    const int n = static_cast<int>(index_set.size());
    std::vector<int> label(n, -1);
    for (size_t b = 0; b < partition.size(); ++b)
        for (int i : partition[b]) {
            if (i < 0 || i >= n || label[i] != -1)
                throw std::invalid_argument("partition does not cover the index set exactly once");
            label[i] = static_cast<int>(b);
        }
    for (int i = 0; i < n; ++i)
        if (label[i] == -1) throw std::invalid_argument("partition misses an index");
    UltrametricPoint x;
    x.index_set = index_set;
    x.values.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (label[a] != label[b]) x.values[a][b] = Rat(1);
    return x;
}

namespace {

// Value of F at the 0/1 point of a given labelling: a term contributes its
// coefficient unless some support pair is co-blocked (min = 0).
Rat value_at_labels(const ObjectiveSpec& f, const std::vector<int>& label) {
    Rat total(0);
    for (const auto& term : f.terms) {
        bool zero = false;
        for (auto [a, b] : term.support)
            if (a == b || label[a] == label[b]) {
                zero = true;
                break;
            }
        if (!zero) total += term.coeff;
    }
    return total;
}

std::vector<std::vector<int>> blocks_of(const std::vector<int>& label, int nblocks) {
    std::vector<std::vector<int>> blocks(nblocks);
    for (size_t i = 0; i < label.size(); ++i) blocks[label[i]].push_back(static_cast<int>(i));
    return blocks;
}

} // namespace

PolytopeMax maximize_over_polytope(const ObjectiveSpec& f, int cap) {
    validate_objective(f);
    const int n = f.size();
    if (n > cap)
        throw usf_error(errc::size_guard, "polytope scan limited to " + std::to_string(cap) +
                                              " indices (" + std::to_string(n) + " given)");
    if (n == 0) return PolytopeMax{Rat(0), {}};

    std::vector<int> label(n, 0);
    PolytopeMax best{value_at_labels(f, label), blocks_of(label, 1)}; // single block first
    auto rec = [&](auto&& self, int pos, int max_label) -> void {
        if (pos == n) {
            Rat v = value_at_labels(f, label);
            if (v > best.value) best = PolytopeMax{v, blocks_of(label, max_label + 1)};
            return;
        }
        for (int l = 0; l <= max_label + 1; ++l) {
            label[pos] = l;
            self(self, pos + 1, std::max(max_label, l));
        }
    };
    if (n > 1) {
        best.value = Rat(0) - Rat(1); // re-scan everything, single block included
        best.partition.clear();
        rec(rec, 1, 0);
        if (best.partition.empty()) throw std::logic_error("partition scan visited nothing");
    }
    return best;
}

PolytopeMax maximize_blockwise(const ObjectiveSpec& f, const std::vector<std::vector<int>>& blocks,
                               int cap) {
    validate_objective(f);
    const int n = f.size();
    if (n > cap)
        throw usf_error(errc::size_guard, "polytope scan limited to " + std::to_string(cap) +
                                              " indices (" + std::to_string(n) + " given)");
    // blocks must partition the index set
    {
        std::vector<char> seen(n, 0);
        for (const auto& b : blocks)
            for (int i : b) {
                if (i < 0 || i >= n || seen[i])
                    throw std::invalid_argument("blocks do not partition the index set");
                seen[i] = 1;
            }
        for (int i = 0; i < n; ++i)
            if (!seen[i]) throw std::invalid_argument("blocks miss an index");
    }

    std::vector<int> label(n, -1);
    PolytopeMax best;
    bool any = false;
    int next_label = 0;

    // Product of per-block partitions: cross-block labels never coincide.
    std::function<void(size_t)> per_block = [&](size_t bi) {
        if (bi == blocks.size()) {
            Rat v = value_at_labels(f, label);
            if (!any || v > best.value) {
                any = true;
                best = PolytopeMax{v, blocks_of(label, next_label)};
            }
            return;
        }
        const auto& members = blocks[bi];
        const int base = next_label;
        std::function<void(size_t, int)> rec = [&](size_t pos, int max_used) {
            if (pos == members.size()) {
                int saved = next_label;
                next_label = base + max_used + 1;
                per_block(bi + 1);
                next_label = saved;
                return;
            }
            for (int l = 0; l <= max_used + 1; ++l) {
                label[members[pos]] = base + l;
                rec(pos + 1, std::max(max_used, l));
            }
        };
        if (members.empty()) {
            per_block(bi + 1);
        } else {
            label[members[0]] = base;
            rec(1, 0);
        }
    };
    per_block(0);
    if (!any) { // no indices at all
        best.value = value_at_labels(f, label);
        best.partition.clear();
    }
    return best;
}

std::vector<std::vector<Rat>> subdominant_ultrametric(const std::vector<std::vector<Rat>>& l) {
    const size_t n = l.size();
    check_square(l, n, "subdominant input");
    for (size_t a = 0; a < n; ++a) {
        if (l[a][a] != 0) throw std::invalid_argument("subdominant input: nonzero diagonal");
        for (size_t b = 0; b < n; ++b) {
            if (l[a][b] != l[b][a]) throw std::invalid_argument("subdominant input: not symmetric");
            if (l[a][b] < 0) throw std::invalid_argument("subdominant input: negative value");
        }
    }
    // Minimax path closure: the (min, max) semiring analogue of
    // Floyd-Warshall computes min over chains of the max step.
    std::vector<std::vector<Rat>> m = l;
    for (size_t c = 0; c < n; ++c)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                m[a][b] = std::min(m[a][b], std::max(m[a][c], m[c][b]));
    return m;
}

namespace {

// Assigns distances for a random laminar hierarchy over `members`.
// Returns the subtree's effective height (monotone toward the root).
Rat sample_hierarchy(const std::vector<int>& members, CounterRng& rng, long long den,
                     std::vector<std::vector<Rat>>& dist) {
    if (members.size() <= 1) return Rat(0);
    std::vector<int> left, right;
    do {
        left.clear();
        right.clear();
        for (int v : members) (rng.next_bool() ? left : right).push_back(v);
    } while (left.empty() || right.empty());
    Rat height(static_cast<long long>(rng.next_below(den + 1)), den);
    height = std::max(height, sample_hierarchy(left, rng, den, dist));
    height = std::max(height, sample_hierarchy(right, rng, den, dist));
    for (int a : left)
        for (int b : right) dist[a][b] = dist[b][a] = height;
    return height;
}

} // namespace

UltrametricPoint random_ultrametric(const std::vector<std::string>& index_set, CounterRng& rng,
                                    long long level_denominator) {
    const int n = static_cast<int>(index_set.size());
    UltrametricPoint x;
    x.index_set = index_set;
    x.values.assign(n, std::vector<Rat>(n, Rat(0)));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    sample_hierarchy(all, rng, level_denominator, x.values);
    return x;
}

} // namespace usf
