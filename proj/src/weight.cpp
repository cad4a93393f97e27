#include "usf/weight.hpp"

#include "usf/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace usf {

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        size_t used = 0;
        long long num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash))
            throw std::invalid_argument("");
        if (slash == std::string::npos) return Rat(num);
        long long den = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1) throw std::invalid_argument("");
        return Rat(num, den);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("zero denominator in rational '" + text + "'");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

Rat apparent_weight(const Hypergraph& h, const Rat& d, const Rat& alpha) {
    const Rat heavy = d - 2 * alpha;
    return heavy * total_weight(h) - d * h.edge_count() - heavy * h.interior_count();
}

WeightReport weight_report(const Hypergraph& h, const Rat& d, const Rat& alpha) {
    WeightReport r;
    r.delta = total_weight(h);
    r.edge_count = h.edge_count();
    r.interior_count = h.interior_count();
    r.dimension = d;
    r.alpha = alpha;
    r.eta = apparent_weight(h, d, alpha);
    return r;
}

bool is_buoyant(const Hypergraph& h, const Rat& d) { return apparent_weight(h, d) <= 0; }

namespace {

// Bit-packed view for the exact scans: vertices and edges as 64-bit masks.
struct PackedH {
    int nb = 0, ni = 0, m = 0;
    std::vector<uint64_t> edge_verts;  // per edge: incident vertex mask
    std::vector<uint64_t> vertex_edges; // per vertex: incident edge mask
};

PackedH pack(const Hypergraph& h) {
    if (h.vertex_count() > 63 || h.edge_count() > 63)
        throw usf_error(errc::size_guard, "exact weight scans limited to 63 vertices/edges");
    PackedH p;
    p.nb = h.boundary_count();
    p.ni = h.interior_count();
    p.m = h.edge_count();
    p.edge_verts.assign(p.m, 0);
    p.vertex_edges.assign(h.vertex_count(), 0);
    for (int e = 0; e < p.m; ++e)
        for (int v : h.incidence[e]) {
            p.edge_verts[e] |= uint64_t{1} << v;
            p.vertex_edges[v] |= uint64_t{1} << e;
        }
    return p;
}

// With d = p/q (q > 0) the apparent weight of a (sub/coarsened) hypergraph
// with weight delta, e edges and i interior vertices is key/q, where
//   key = p*(delta - e - i) + 4q*(i - delta).
// All comparisons run on the integer key.
struct DimKey {
    long long p, q;

    explicit DimKey(const Rat& d) : p(d.numerator()), q(d.denominator()) {}

    long long key(long long delta, long long edges, long long interior) const {
        return p * (delta - edges - interior) + 4 * q * (interior - delta);
    }
    Rat value(long long key) const { return Rat(key, q); }
};

template <class Visit>
void scan_rgs(int n, Visit&& visit) {
    // Restricted growth strings in lexicographic order; visit(labels, nblocks).
    std::vector<int> labels(std::max(n, 1), 0);
    if (n == 0) {
        visit(labels, 0);
        return;
    }
    auto rec = [&](auto&& self, int pos, int max_label) -> void {
        if (pos == n) {
            visit(labels, max_label + 1);
            return;
        }
        for (int label = 0; label <= max_label + 1; ++label) {
            labels[pos] = label;
            self(self, pos + 1, std::max(max_label, label));
        }
    };
    rec(rec, 1, 0);
}

struct BestPartition {
    bool any = false;
    long long key = 0;
    int nblocks = 0;
    std::vector<int> labels;

    void offer(long long k, int blocks, const std::vector<int>& l) {
        if (!any || k < key || (k == key && blocks < nblocks)) {
            any = true;
            key = k;
            nblocks = blocks;
            labels = l;
        }
    }
};

EdgePartition partition_from_labels(const std::vector<int>& labels, int n, int nblocks) {
    std::vector<std::vector<int>> blocks(nblocks);
    for (int i = 0; i < n; ++i) blocks[labels[i]].push_back(i);
    return EdgePartition{std::move(blocks)};
}

} // namespace

CoarseningOptimum min_coarsening_weight(const Hypergraph& h, const Rat& d, int exact_edge_limit) {
    if (h.edge_count() > exact_edge_limit)
        throw usf_error(errc::size_guard,
                        "coarsening scan needs Bell(" + std::to_string(h.edge_count()) +
                            ") partitions; raise the edge limit to force it");
    const PackedH ph = pack(h);
    const DimKey dk(d);
    BestPartition best;
    std::vector<uint64_t> unions(std::max(ph.m, 1));
    scan_rgs(ph.m, [&](const std::vector<int>& labels, int nblocks) {
        std::fill(unions.begin(), unions.begin() + std::max(nblocks, 1), 0);
        for (int e = 0; e < ph.m; ++e) unions[labels[e]] |= ph.edge_verts[e];
        long long delta = 0;
        for (int b = 0; b < nblocks; ++b) delta += std::popcount(unions[b]);
        best.offer(dk.key(delta, nblocks, ph.ni), nblocks, labels);
    });
    return CoarseningOptimum{dk.value(best.key), partition_from_labels(best.labels, ph.m, best.nblocks)};
}

EdgePartition optimal_coarsening(const Hypergraph& h, const Rat& d, int exact_edge_limit) {
    return min_coarsening_weight(h, d, exact_edge_limit).partition;
}

SubhypergraphMax max_subhypergraph_weight(const Hypergraph& h, const Rat& d) {
    if (d < 4) throw usf_error(errc::bad_dimension, "subhypergraph maximization requires d >= 4");
    const PackedH ph = pack(h);
    const DimKey dk(d);
    const long long c = dk.p - 4 * dk.q; // (d-4) scaled by q; nonnegative here
    const int nv = ph.nb + ph.ni;

    long long best_key = 0; // the empty subhypergraph
    uint64_t best_mask = 0;
    for (uint64_t emask = 1; emask < (uint64_t{1} << ph.m); ++emask) {
        long long key = -dk.p * std::popcount(emask);
        for (int v = 0; v < nv; ++v) {
            const int deg = std::popcount(ph.vertex_edges[v] & emask);
            if (v < ph.nb)
                key += c * deg;
            else if (deg >= 2)
                key += c * (deg - 1);
        }
        if (key > best_key) {
            best_key = key;
            best_mask = emask;
        }
    }

    // Rebuild the achieving selector: zero-contribution vertices are left out
    // except where an edge would otherwise lose all incident vertices.
    Selector sel;
    std::vector<char> chosen(nv, 0);
    for (int v = 0; v < nv; ++v) {
        const int deg = std::popcount(ph.vertex_edges[v] & best_mask);
        if (v < ph.nb ? deg >= 1 : deg >= 2) chosen[v] = 1;
    }
    for (int e = 0; e < ph.m; ++e) {
        if (!(best_mask >> e & 1)) continue;
        bool covered = false;
        for (int v : h.incidence[e]) covered |= chosen[v];
        if (!covered) chosen[h.incidence[e].front()] = 1;
        sel.edges.push_back(e);
    }
    for (int v = 0; v < ph.nb; ++v)
        if (chosen[v]) sel.boundary.push_back(v);
    if (sel.boundary.empty()) sel.boundary.push_back(0);
    for (int v = ph.nb; v < nv; ++v)
        if (chosen[v]) sel.interior.push_back(v);
    return SubhypergraphMax{dk.value(best_key), std::move(sel)};
}

MinMaxSolution min_max_weight(const Hypergraph& h, const Rat& d, int exact_edge_limit) {
    if (d < 4) throw usf_error(errc::bad_dimension, "the min-max criterion requires d >= 4");
    CoarseningOptimum opt = min_coarsening_weight(h, d, exact_edge_limit);
    Hypergraph coarse = coarsen(h, opt.partition);
    SubhypergraphMax inner = max_subhypergraph_weight(coarse, d);
    return MinMaxSolution{inner.value, std::move(opt.partition), std::move(inner.selector)};
}

Rat max_min_weight(const Hypergraph& h, const Rat& d) {
    if (d < 4) throw usf_error(errc::bad_dimension, "the max-min problem requires d >= 4");
    const PackedH ph = pack(h);
    if (ph.m > 8 || ph.nb + ph.ni > 10)
        throw usf_error(errc::size_guard, "the double enumeration is limited to 8 edges / 10 vertices");
    const DimKey dk(d);
    const int nv = ph.nb + ph.ni;
    constexpr long long kInf = std::numeric_limits<long long>::max();

    long long best = 0; // empty subhypergraph: every coarsening has weight 0
    std::vector<int> subset;
    std::vector<uint32_t> vmasks;
    std::vector<long long> min_key;
    std::vector<uint64_t> unions;
    for (uint64_t emask = 0; emask < (uint64_t{1} << ph.m); ++emask) {
        subset.clear();
        for (int e = 0; e < ph.m; ++e)
            if (emask >> e & 1) subset.push_back(e);

        vmasks.clear();
        for (uint32_t vmask = 1; vmask < (uint32_t{1} << nv); ++vmask) {
            if (!(vmask & ((uint32_t{1} << ph.nb) - 1))) continue; // boundary part empty
            bool ok = true;
            for (int e : subset)
                if (!(ph.edge_verts[e] & vmask)) {
                    ok = false;
                    break;
                }
            if (ok) vmasks.push_back(vmask);
        }
        if (vmasks.empty()) continue;

        min_key.assign(vmasks.size(), kInf);
        const int k = static_cast<int>(subset.size());
        unions.assign(std::max(k, 1), 0);
        scan_rgs(k, [&](const std::vector<int>& labels, int nblocks) {
            std::fill(unions.begin(), unions.begin() + std::max(nblocks, 1), 0);
            for (int i = 0; i < k; ++i) unions[labels[i]] |= ph.edge_verts[subset[i]];
            for (size_t vi = 0; vi < vmasks.size(); ++vi) {
                const uint64_t vmask = vmasks[vi];
                long long delta = 0;
                for (int b = 0; b < nblocks; ++b) delta += std::popcount(unions[b] & vmask);
                const long long interior = std::popcount(vmask >> ph.nb);
                min_key[vi] = std::min(min_key[vi], dk.key(delta, nblocks, interior));
            }
        });
        for (long long mk : min_key) best = std::max(best, mk);
    }
    return dk.value(best);
}

} // namespace usf
