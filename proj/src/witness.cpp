#include "usf/witness.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace usf {

namespace {

struct SearchState {
    const LatticeForest& f;
    const Hypergraph& h;
    int r;
    const std::function<bool(const WitnessAssignment&)>* visit;
    WitnessAssignment assignment;
    std::vector<std::vector<int64_t>> comp_points;
    std::vector<int32_t> vertex_comp;   // -1 while undecided
    std::vector<char> comp_used;
    std::vector<char> allowed;          // seed window; empty = everything
    std::vector<int> edge_first_slot;   // first slot index of each edge
    int64_t found = 0;
    bool stopped = false;

    bool point_allowed(int64_t p) const { return allowed.empty() || allowed[p]; }

    bool close_within_edge(int slot, int64_t p) const {
        const int e = assignment.slots[slot].first;
        for (int s = edge_first_slot[e]; s < slot; ++s)
            if (f.box.l1(assignment.points[s], p) > r - 2) return false;
        return true;
    }

    void emit() {
        ++found;
        if (visit && *visit && !(*visit)(assignment)) stopped = true;
    }

    void recurse(int slot) {
        if (stopped) return;
        if (slot == static_cast<int>(assignment.slots.size())) {
            emit();
            return;
        }
        const auto [e, v] = assignment.slots[slot];
        const int32_t c = vertex_comp[v];
        if (c >= 0) {
            for (int64_t p : comp_points[c]) {
                if (!point_allowed(p) || !close_within_edge(slot, p)) continue;
                assignment.points[slot] = p;
                recurse(slot + 1);
                if (stopped) return;
            }
            return;
        }
        // Interior vertex without a component yet: any unused component works.
        auto try_point = [&](int64_t p) {
            const int32_t pc = f.component[p];
            if (comp_used[pc] || !point_allowed(p)) return;
            if (!close_within_edge(slot, p)) return;
            comp_used[pc] = 1;
            vertex_comp[v] = pc;
            assignment.points[slot] = p;
            recurse(slot + 1);
            vertex_comp[v] = -1;
            comp_used[pc] = 0;
        };
        if (slot > edge_first_slot[e]) {
            // Previous slots of this edge pin the candidates into a ball.
            const int64_t center = assignment.points[edge_first_slot[e]];
            for (int64_t p = 0; p < f.box.volume && !stopped; ++p) {
                if (f.box.l1(center, p) > r - 2) continue;
                try_point(p);
            }
        } else {
            for (int64_t p = 0; p < f.box.volume && !stopped; ++p) try_point(p);
        }
    }
};

} // namespace

int64_t witness_search(const LatticeForest& f, const Hypergraph& h,
                       const std::vector<int32_t>& boundary_components, int r,
                       const std::function<bool(const WitnessAssignment&)>& visit,
                       const WitnessOptions& options) {
    if (r < 1) throw std::invalid_argument("witness search needs r >= 1");
    if (static_cast<int>(boundary_components.size()) != h.boundary_count())
        throw std::invalid_argument("one component per boundary vertex required");
    {
        std::set<int32_t> distinct;
        for (int32_t c : boundary_components) {
            if (c < 0 || c >= f.component_count)
                throw std::invalid_argument("unknown component id");
            if (!distinct.insert(c).second)
                throw std::invalid_argument("boundary components must be distinct");
        }
    }

    SearchState st{f, h, r, &visit, {}, {}, {}, {}, {}, {}, 0, false};
    st.comp_points.resize(f.component_count);
    for (int64_t v = 0; v < f.box.volume; ++v) st.comp_points[f.component[v]].push_back(v);
    st.vertex_comp.assign(h.vertex_count(), -1);
    st.comp_used.assign(f.component_count, 0);
    for (int v = 0; v < h.boundary_count(); ++v) {
        st.vertex_comp[v] = boundary_components[v];
        st.comp_used[boundary_components[v]] = 1;
    }
    st.edge_first_slot.assign(h.edge_count(), 0);
    for (int e = 0; e < h.edge_count(); ++e) {
        st.edge_first_slot[e] = static_cast<int>(st.assignment.slots.size());
        for (int v : h.incidence[e]) st.assignment.slots.emplace_back(e, v);
    }
    st.assignment.points.assign(st.assignment.slots.size(), 0);

    if (options.seed_window) {
        // Multi-source BFS of depth r*|E| from every boundary-component point.
        st.allowed.assign(f.box.volume, 0);
        std::vector<int32_t> dist(f.box.volume, -1);
        std::deque<int64_t> queue;
        for (int32_t c : boundary_components)
            for (int64_t p : st.comp_points[c]) {
                st.allowed[p] = 1;
                dist[p] = 0;
                queue.push_back(p);
            }
        const int depth = r * std::max(h.edge_count(), 1);
        while (!queue.empty()) {
            const int64_t v = queue.front();
            queue.pop_front();
            if (dist[v] == depth) continue;
            for (int dir = 0; dir < f.box.directions(); ++dir) {
                const int64_t w = f.box.step(v, dir);
                if (w == f.box.wired() || dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                st.allowed[w] = 1;
                queue.push_back(w);
            }
        }
    }

    st.recurse(0);
    return st.found;
}

int64_t count_witnesses(const LatticeForest& f, const Hypergraph& h,
                        const std::vector<int32_t>& boundary_components, int r,
                        const WitnessOptions& options) {
    return witness_search(f, h, boundary_components, r, nullptr, options);
}

std::vector<WitnessAssignment> collect_witnesses(const LatticeForest& f, const Hypergraph& h,
                                                 const std::vector<int32_t>& boundary_components,
                                                 int r, int64_t limit,
                                                 const WitnessOptions& options) {
    std::vector<WitnessAssignment> out;
    witness_search(
        f, h, boundary_components, r,
        [&](const WitnessAssignment& w) {
            out.push_back(w);
            return static_cast<int64_t>(out.size()) < limit;
        },
        options);
    return out;
}

} // namespace usf
