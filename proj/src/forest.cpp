#include "usf/forest.hpp"

#include "usf/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace usf {

namespace {

// Canonical component labels of the in-box forest: ids in order of each
// component's smallest vertex.
void label_components(const LatticeBox& box, const std::vector<int64_t>& parent,
                      std::vector<int32_t>& component, int32_t& count) {
    component.assign(box.volume, -1);
    count = 0;
    std::vector<int64_t> chain;
    for (int64_t v = 0; v < box.volume; ++v) {
        if (component[v] >= 0) continue;
        chain.clear();
        int64_t u = v;
        while (u != box.wired() && component[u] < 0) {
            chain.push_back(u);
            u = parent[u];
        }
        const int32_t id = u == box.wired() ? count++ : component[u];
        for (int64_t w : chain) component[w] = id;
    }
}

int direction_between(const LatticeBox& box, int64_t from, int64_t to) {
    for (int dir = 0; dir < box.directions(); ++dir)
        if (box.step(from, dir) == to) return dir;
    throw std::invalid_argument("vertices are not box neighbors");
}

} // namespace

LatticeForest forest_from_edges(const LatticeBox& box,
                                const std::vector<std::pair<int64_t, int64_t>>& child_parent) {
    LatticeForest f{box, {}, {}, {}, 0};
    std::vector<int64_t> parent(box.volume, box.wired());
    std::vector<char> listed(box.volume, 0);

    // Union-find over the in-box edges only; wired edges separate components.
    std::vector<int64_t> root(box.volume);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int64_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (auto [child, par] : child_parent) {
        if (child < 0 || child >= box.volume)
            throw std::invalid_argument("forest edge child outside the box");
        if (listed[child]) throw std::invalid_argument("vertex has two parents");
        listed[child] = 1;
        direction_between(box, child, par); // validates adjacency (wired included)
        parent[child] = par;
        if (par != box.wired()) {
            int64_t a = find(child), b = find(par);
            if (a == b) throw std::invalid_argument("forest edges close a cycle");
            root[a] = b;
        }
    }

    f.component.assign(box.volume, -1);
    f.component_count = 0;
    for (int64_t v = 0; v < box.volume; ++v) {
        int64_t r = find(v);
        if (f.component[r] < 0) f.component[r] = f.component_count++;
        f.component[v] = f.component[r];
    }
    // Relabel in order of smallest member so labels are canonical.
    {
        std::vector<int32_t> remap(f.component_count, -1);
        int32_t next = 0;
        for (int64_t v = 0; v < box.volume; ++v)
            if (remap[f.component[v]] < 0) remap[f.component[v]] = next++;
        for (int64_t v = 0; v < box.volume; ++v) f.component[v] = remap[f.component[v]];
    }

    const bool full = std::all_of(listed.begin(), listed.end(), [](char c) { return c != 0; });
    if (full) {
        f.parent = std::move(parent);
        f.parent_dir.resize(box.volume);
        for (int64_t v = 0; v < box.volume; ++v)
            f.parent_dir[v] = static_cast<int8_t>(direction_between(box, v, f.parent[v]));
    }
    return f;
}

WilsonSampler::WilsonSampler(const LatticeBox& box) : box_(box) {
    in_tree_stamp_.assign(box.volume + 1, 0);
    parent_.assign(box.volume, box.wired());
    parent_dir_.assign(box.volume, 0);
    last_stamp_.assign(box.volume, 0);
    last_pos_.assign(box.volume, 0);
}

void WilsonSampler::reset() {
    ++epoch_;
    in_tree_stamp_[box_.wired()] = epoch_;
}

void WilsonSampler::run_walk(int64_t start, CounterRng& rng) {
    if (in_tree_stamp_[start] == epoch_) return;
    ++walk_epoch_;
    walk_verts_.clear();
    walk_dirs_.clear();
    int64_t v = start;
    while (in_tree_stamp_[v] != epoch_) {
        last_stamp_[v] = walk_epoch_;
        last_pos_[v] = static_cast<int64_t>(walk_verts_.size());
        const int dir = static_cast<int>(rng.next_below(box_.directions()));
        walk_verts_.push_back(v);
        walk_dirs_.push_back(static_cast<int8_t>(dir));
        v = box_.step(v, dir);
    }
    // Graft the loop erasure: from each kept vertex, take the step recorded
    // at its final visit.
    int64_t cur = start;
    while (in_tree_stamp_[cur] != epoch_) {
        const int64_t pos = last_pos_[cur];
        const int8_t dir = walk_dirs_[pos];
        parent_[cur] = box_.step(cur, dir);
        parent_dir_[cur] = dir;
        in_tree_stamp_[cur] = epoch_;
        cur = parent_[cur];
    }
}

LatticeForest WilsonSampler::sample(CounterRng& rng) {
    reset();
    for (int64_t v = 0; v < box_.volume; ++v) run_walk(v, rng);
    LatticeForest f{box_, parent_, parent_dir_, {}, 0};
    label_components(box_, f.parent, f.component, f.component_count);
    return f;
}

LatticeForest WilsonSampler::sample(std::span<const int64_t> order, CounterRng& rng) {
    if (static_cast<int64_t>(order.size()) != box_.volume)
        throw std::invalid_argument("order must enumerate every box vertex");
    reset();
    std::vector<char> seen(box_.volume, 0);
    for (int64_t v : order) {
        if (v < 0 || v >= box_.volume || seen[v])
            throw std::invalid_argument("order must enumerate every box vertex exactly once");
        seen[v] = 1;
        run_walk(v, rng);
    }
    LatticeForest f{box_, parent_, parent_dir_, {}, 0};
    label_components(box_, f.parent, f.component, f.component_count);
    return f;
}

bool WilsonSampler::joint_component(std::span<const int64_t> points, CounterRng& rng) {
    if (points.empty()) throw std::invalid_argument("joint_component needs at least one point");
    reset();
    for (int64_t p : points) {
        if (p < 0 || p >= box_.volume) throw std::invalid_argument("point outside the box");
        run_walk(p, rng);
    }
    if (comp_stamp_.empty()) {
        comp_stamp_.assign(box_.volume, 0);
        comp_id_.assign(box_.volume, 0);
    }
    // Climb from each point; distinct trees reach the wired vertex through
    // distinct attachment chains.
    int32_t next_id = 0;
    int32_t first_id = -1;
    std::vector<int64_t> chain;
    for (int64_t p : points) {
        chain.clear();
        int64_t u = p;
        while (u != box_.wired() && comp_stamp_[u] != epoch_) {
            chain.push_back(u);
            u = parent_[u];
        }
        const int32_t id = u == box_.wired() ? next_id++ : comp_id_[u];
        for (int64_t w : chain) {
            comp_stamp_[w] = epoch_;
            comp_id_[w] = id;
        }
        if (first_id < 0)
            first_id = id;
        else if (id != first_id)
            return false;
    }
    return true;
}

LatticeForest wilson_wired(const LatticeBox& box, CounterRng& rng) {
    WilsonSampler sampler(box);
    return sampler.sample(rng);
}

LatticeForest wilson_wired(const LatticeBox& box, std::span<const int64_t> order, CounterRng& rng) {
    WilsonSampler sampler(box);
    return sampler.sample(order, rng);
}

std::vector<std::pair<int32_t, int32_t>> component_graph(const LatticeForest& f, int r) {
    if (r < 1) throw std::invalid_argument("component graph needs r >= 1");
    const LatticeBox& box = f.box;
    std::vector<std::vector<int64_t>> members(f.component_count);
    for (int64_t v = 0; v < box.volume; ++v) members[f.component[v]].push_back(v);

    std::set<std::pair<int32_t, int32_t>> edges;
    std::vector<int32_t> dist(box.volume);
    std::vector<char> seen(box.volume);
    std::deque<int64_t> queue;
    for (int32_t c = 0; c < f.component_count; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        for (int64_t v : members[c]) {
            seen[v] = 1;
            dist[v] = 0;
            queue.push_back(v);
        }
        while (!queue.empty()) {
            const int64_t v = queue.front();
            queue.pop_front();
            if (dist[v] == r) continue;
            for (int dir = 0; dir < box.directions(); ++dir) {
                const int64_t w = box.step(v, dir);
                if (w == box.wired() || seen[w]) continue;
                seen[w] = 1;
                dist[w] = dist[v] + 1;
                queue.push_back(w);
                if (f.component[w] != c)
                    edges.emplace(std::min(c, f.component[w]), std::max(c, f.component[w]));
            }
        }
    }
    return {edges.begin(), edges.end()};
}

namespace {

// Offsets with L1 norm <= r (the zero offset included).
void gen_offsets(int dim, int r, std::vector<int64_t>& current, std::vector<std::vector<int64_t>>& out) {
    if (static_cast<int>(current.size()) == dim) {
        out.push_back(current);
        return;
    }
    int used = 0;
    for (int64_t c : current) used += static_cast<int>(std::abs(c));
    for (int64_t v = -(r - used); v <= r - used; ++v) {
        current.push_back(v);
        gen_offsets(dim, r, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int32_t>> component_hyperedges(const LatticeForest& f, int r,
                                                       int max_degree) {
    if (r < 1) throw std::invalid_argument("component hyperedges need r >= 1");
    if (max_degree < 1 || max_degree > 6)
        throw usf_error(errc::size_guard, "hyperedge scan limited to degree 6");
    const LatticeBox& box = f.box;

    std::set<std::vector<int32_t>> found;
    for (int32_t c = 0; c < f.component_count; ++c) found.insert({c});
    if (max_degree >= 2) {
        std::vector<std::vector<int64_t>> offsets;
        std::vector<int64_t> scratch;
        gen_offsets(box.dim, r, scratch, offsets);

        std::vector<int64_t> window;
        for (int64_t anchor = 0; anchor < box.volume; ++anchor) {
            const auto ac = box.coords_of(anchor);
            window.clear();
            for (const auto& off : offsets) {
                std::vector<int64_t> c(box.dim);
                bool ok = true;
                for (int i = 0; i < box.dim && ok; ++i) {
                    c[i] = ac[i] + off[i];
                    ok = c[i] >= 0 && c[i] < box.side;
                }
                if (ok) window.push_back(box.index_of(c));
            }
            // Anchor must carry the smallest component id of the set, so
            // only larger ids extend it; every hyperedge is found when the
            // anchor runs over the point of its smallest component.
            std::sort(window.begin(), window.end(), [&](int64_t a, int64_t b) {
                return f.component[a] != f.component[b] ? f.component[a] < f.component[b] : a < b;
            });
            std::vector<int64_t> chosen{anchor};
            std::vector<int32_t> comps{f.component[anchor]};
            auto extend = [&](auto&& self, size_t from) -> void {
                if (comps.size() >= 2) found.insert(comps);
                if (static_cast<int>(comps.size()) == max_degree) return;
                for (size_t i = from; i < window.size(); ++i) {
                    const int64_t p = window[i];
                    const int32_t pc = f.component[p];
                    if (pc <= comps.back()) continue;
                    bool close = true;
                    for (int64_t q : chosen)
                        if (box.l1(p, q) > r) {
                            close = false;
                            break;
                        }
                    if (!close) continue;
                    chosen.push_back(p);
                    comps.push_back(pc);
                    self(self, i + 1);
                    chosen.pop_back();
                    comps.pop_back();
                }
            };
            extend(extend, 0);
        }
    }
    return {found.begin(), found.end()};
}

} // namespace usf
