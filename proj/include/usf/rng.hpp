#pragma once

#include <cstdint>
#include <limits>

namespace usf {

/// splitmix64 run in counter mode: output i is a strong 64-bit mix of
/// (key, i), so substreams are cheap (derive a fresh key per stream index)
/// and sampling is reproducible independently of scheduling.
class CounterRng {
  public:
    using result_type = uint64_t;

    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : key_(mix(mix(seed ^ 0xd1b54a32d192ed03ULL) + stream)) {}

    uint64_t next() { return mix(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

    /// Unbiased integer in [0, n) by rejection.
    uint64_t next_below(uint64_t n) {
        const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bool() { return next() & 1; }

    uint64_t operator()() { return next(); }
    static constexpr uint64_t min() { return 0; }
    static constexpr uint64_t max() { return std::numeric_limits<uint64_t>::max(); }

  private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t counter_ = 0;
};

} // namespace usf
