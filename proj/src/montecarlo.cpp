#include "usf/montecarlo.hpp"

#include "usf/errors.hpp"
#include "usf/witness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace usf {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

void run_samples(int64_t samples, int threads,
                 const std::function<void(int worker, int64_t begin, int64_t end)>& body) {
    if (samples < 1) throw std::invalid_argument("at least one sample required");
    const int workers = static_cast<int>(std::min<int64_t>(resolve_threads(threads), samples));
    if (workers == 1) {
        body(0, 0, samples);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int64_t chunk = (samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int64_t begin = w * chunk;
        const int64_t end = std::min(samples, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

namespace {

ConnectionEstimate wilson_interval(int64_t hits, int64_t samples) {
    ConnectionEstimate e;
    e.hits = hits;
    e.samples = samples;
    e.p = static_cast<double>(hits) / static_cast<double>(samples);
    const double z = 1.959963984540054; // 95%
    const double n = static_cast<double>(samples);
    const double z2 = z * z;
    const double center = (e.p + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z * std::sqrt(e.p * (1 - e.p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    e.ci_low = std::max(0.0, center - half);
    e.ci_high = std::min(1.0, center + half);
    return e;
}

} // namespace

ConnectionEstimate estimate_connection(const LatticeBox& box, const std::vector<Point>& points,
                                       int64_t samples, uint64_t seed, int threads) {
    if (points.empty()) throw std::invalid_argument("estimate_connection needs at least one point");
    std::vector<int64_t> indices;
    indices.reserve(points.size());
    for (const Point& p : points) indices.push_back(box.index_of(p));

    std::atomic<int64_t> hits{0};
    run_samples(samples, threads, [&](int, int64_t begin, int64_t end) {
        WilsonSampler sampler(box);
        int64_t local = 0;
        for (int64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, static_cast<uint64_t>(i));
            if (sampler.joint_component(indices, rng)) ++local;
        }
        hits += local;
    });
    return wilson_interval(hits.load(), samples);
}

namespace {

// Smallest r <= r_max such that some radius-r ball meets at least
// min_components distinct components; 0 when none does.
int min_ball_radius(const LatticeForest& f, int min_components, int r_max,
                    std::vector<int32_t>& dist, std::deque<int64_t>& queue,
                    std::vector<int64_t>& touched, std::vector<int32_t>& comps) {
    const LatticeBox& box = f.box;
    for (int r = 1; r <= r_max; ++r) {
        for (int64_t v = 0; v < box.volume; ++v) {
            comps.clear();
            comps.push_back(f.component[v]);
            touched.clear();
            touched.push_back(v);
            dist[v] = 0;
            queue.clear();
            queue.push_back(v);
            bool hit = false;
            while (!queue.empty() && !hit) {
                const int64_t u = queue.front();
                queue.pop_front();
                if (dist[u] == r) continue;
                for (int dir = 0; dir < box.directions(); ++dir) {
                    const int64_t w = box.step(u, dir);
                    if (w == box.wired() || dist[w] >= 0) continue;
                    dist[w] = dist[u] + 1;
                    touched.push_back(w);
                    queue.push_back(w);
                    const int32_t c = f.component[w];
                    if (std::find(comps.begin(), comps.end(), c) == comps.end()) {
                        comps.push_back(c);
                        if (static_cast<int>(comps.size()) >= min_components) {
                            hit = true;
                            break;
                        }
                    }
                }
            }
            for (int64_t w : touched) dist[w] = -1;
            if (hit) return r;
        }
    }
    return 0;
}

} // namespace

RThresholdEstimate estimate_r_threshold(const LatticeBox& box, int min_components, int r_max,
                                        int64_t samples, uint64_t seed, int threads) {
    if (min_components < 2) throw std::invalid_argument("estimate_r_threshold needs M >= 2");
    if (r_max < 1) throw std::invalid_argument("estimate_r_threshold needs r_max >= 1");

    std::vector<int> min_r(samples, 0);
    run_samples(samples, threads, [&](int, int64_t begin, int64_t end) {
        WilsonSampler sampler(box);
        std::vector<int32_t> dist(box.volume, -1);
        std::deque<int64_t> queue;
        std::vector<int64_t> touched;
        std::vector<int32_t> comps;
        for (int64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, static_cast<uint64_t>(i));
            LatticeForest f = sampler.sample(rng);
            min_r[i] = min_ball_radius(f, min_components, r_max, dist, queue, touched, comps);
        }
    });

    RThresholdEstimate out;
    out.samples = samples;
    out.hit_frequency.assign(r_max, 0.0);
    for (int r = 1; r <= r_max; ++r) {
        int64_t hits = 0;
        for (int v : min_r) hits += (v >= 1 && v <= r) ? 1 : 0;
        out.hit_frequency[r - 1] = static_cast<double>(hits) / static_cast<double>(samples);
    }
    for (int r = 1; r <= r_max; ++r)
        if (out.hit_frequency[r - 1] > 0) {
            out.threshold = r;
            return out;
        }
    throw usf_error(errc::inconclusive_at_cap,
                    "no radius up to " + std::to_string(r_max) + " ever met " +
                        std::to_string(min_components) + " components in " +
                        std::to_string(samples) + " samples");
}

std::vector<int32_t> component_count_samples(const LatticeBox& box, int64_t samples, uint64_t seed,
                                             int threads) {
    std::vector<int32_t> counts(samples, 0);
    run_samples(samples, threads, [&](int, int64_t begin, int64_t end) {
        WilsonSampler sampler(box);
        for (int64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, static_cast<uint64_t>(i));
            counts[i] = sampler.sample(rng).component_count;
        }
    });
    return counts;
}

std::vector<int64_t> witness_count_samples(const LatticeBox& box, const Hypergraph& h, int r,
                                           int64_t samples, uint64_t seed, int threads,
                                           int64_t per_sample_limit) {
    std::vector<int64_t> counts(samples, 0);
    run_samples(samples, threads, [&](int, int64_t begin, int64_t end) {
        WilsonSampler sampler(box);
        for (int64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, static_cast<uint64_t>(i));
            LatticeForest f = sampler.sample(rng);
            if (f.component_count < h.boundary_count()) {
                counts[i] = 0;
                continue;
            }
            // Boundary goes on the largest components, ties to the one with
            // the smallest vertex (component ids are in smallest-vertex order).
            std::vector<int64_t> size(f.component_count, 0);
            for (int64_t v = 0; v < box.volume; ++v) ++size[f.component[v]];
            std::vector<int32_t> by_size(f.component_count);
            std::iota(by_size.begin(), by_size.end(), 0);
            std::stable_sort(by_size.begin(), by_size.end(),
                             [&](int32_t a, int32_t b) { return size[a] > size[b]; });
            std::vector<int32_t> x(by_size.begin(), by_size.begin() + h.boundary_count());
            int64_t seen = 0;
            witness_search(f, h, x, r, [&](const WitnessAssignment&) {
                return ++seen < per_sample_limit;
            });
            counts[i] = seen;
        }
    });
    return counts;
}

} // namespace usf
