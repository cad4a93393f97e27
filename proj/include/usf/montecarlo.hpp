#pragma once

#include "usf/forest.hpp"
#include "usf/hypergraph.hpp"
#include "usf/lattice.hpp"
#include "usf/spread.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace usf {

/// Runs `samples` independent jobs across up to `threads` workers. Each
/// sample draws its randomness from a dedicated substream (seed, sample
/// index), so results do not depend on the worker count or schedule.
void run_samples(int64_t samples, int threads,
                 const std::function<void(int worker, int64_t begin, int64_t end)>& body);

int resolve_threads(int threads);

struct ConnectionEstimate {
    double p = 0.0;
    double ci_low = 0.0; // 95% Wilson score interval
    double ci_high = 0.0;
    int64_t hits = 0;
    int64_t samples = 0;
};

/// Monte Carlo estimate of P(all points of K share a forest component),
/// sampling with Wilson's algorithm started at K (order independence of the
/// output law makes the partial run exact).
ConnectionEstimate estimate_connection(const LatticeBox& box, const std::vector<Point>& points,
                                       int64_t samples, uint64_t seed, int threads = 0);

struct RThresholdEstimate {
    int threshold = 0;                 // smallest r with a positive hit frequency
    std::vector<double> hit_frequency; // index r-1 for r = 1..r_max; cumulative in r
    int64_t samples = 0;
};

/// Empirical stand-in for the minimal diameter at which some vertex set
/// meets `min_components` distinct components: per sample, scans all
/// radius-r balls for incidence with that many components. One-sided by
/// nature (a finite box only ever under-reports). Throws InconclusiveAtCap
/// when no radius up to r_max ever succeeds.
RThresholdEstimate estimate_r_threshold(const LatticeBox& box, int min_components, int r_max,
                                        int64_t samples, uint64_t seed, int threads = 0);

/// Component count of the in-box forest, one entry per sample.
std::vector<int32_t> component_count_samples(const LatticeBox& box, int64_t samples, uint64_t seed,
                                             int threads = 0);

/// Witness counts for h per sample; the boundary is placed on the largest
/// components (ties to the one with the smallest vertex). Samples with too
/// few components count zero.
std::vector<int64_t> witness_count_samples(const LatticeBox& box, const Hypergraph& h, int r,
                                           int64_t samples, uint64_t seed, int threads = 0,
                                           int64_t per_sample_limit = 1000000);

} // namespace usf
