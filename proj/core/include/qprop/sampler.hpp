#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qprop/distribution.hpp"
#include "qprop/graph.hpp"

namespace qprop {

struct SampleReport {
    ErrorDistribution distribution;       // counts / shots
    std::vector<std::uint64_t> counts;    // histogram over 0..n, sums to shots
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    double expectation = 0.0;
    double variance = 0.0;
    double expectation_stderr = 0.0;      // sqrt(variance / shots)
};

// Monte Carlo estimate of the error-number distribution. Shots are processed
// 64 at a time: every source column draws a 64-bit Bernoulli mask from a
// counter stream keyed by (seed, column), counter = shot index, and readout
// parity words accumulate as XORs of the column's row pattern gated by the
// mask. Identical results for any worker count.
SampleReport sample(const Rsg& rsg, double p, std::uint64_t shots, std::uint64_t seed, int workers = 1);

struct SweepRow {
    double axis = 0.0;
    double expectation = 0.0;
    double variance = 0.0;
    double shift = 0.0;      // against the empty circuit at the same n, T, p
    double entropy = 0.0;
    double stderr_e = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

struct SweepInstance {
    Rsg rsg;
    double p;
};

// One sampled row per axis value; the instance factory owns the meaning of
// the axis (p grid, T grid, ...).
std::vector<SweepRow> sweep(std::span<const double> axis_values,
                            const std::function<SweepInstance(double)>& instance_at, std::uint64_t shots,
                            std::uint64_t seed, int workers = 1);

}  // namespace qprop
