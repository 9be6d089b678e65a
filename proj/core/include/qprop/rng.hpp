#pragma once

#include <cmath>
#include <cstdint>

namespace qprop {

// splitmix64 finalizer; the avalanche core behind every random stream here.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based stream: value(i) depends only on (seed, stream, i), so any
// worker partitioning of the counter axis reproduces the same draws.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1))) {}

    std::uint64_t at(std::uint64_t counter) const {
        return mix64(key_ + 0x9E3779B97F4A7C15ULL * (counter + 1));
    }

private:
    std::uint64_t key_;
};

// Sequential view over one counter stream, for shuffles and index draws.
class SeqRng {
public:
    SeqRng(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}

    std::uint64_t next() { return rng_.at(counter_++); }

    // Unbiased uniform draw in [0, bound); rejection keeps it exact.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t cutoff = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= cutoff) return r % bound;
        }
    }

private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

// p mapped onto the 64-bit counter range: a draw u hits iff u < threshold.
struct BernoulliThreshold {
    std::uint64_t threshold = 0;
    bool always = false;

    static BernoulliThreshold make(double p) {
        BernoulliThreshold t;
        if (p <= 0.0) return t;
        const long double scaled = std::ldexp(static_cast<long double>(p), 64);
        if (scaled >= 0x1p64L) {
            t.always = true;
        } else {
            t.threshold = static_cast<std::uint64_t>(scaled);
        }
        return t;
    }

    bool hit(std::uint64_t u) const { return always || u < threshold; }
};

}  // namespace qprop
