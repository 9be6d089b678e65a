#include "qprop/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "qprop/analysis.hpp"
#include "qprop/rng.hpp"

namespace qprop {

namespace {

struct ColumnPattern {
    CounterRng rng;
    std::vector<std::uint32_t> rows;
};

std::uint64_t bernoulli_mask(const CounterRng& rng, BernoulliThreshold threshold, std::uint64_t first_shot) {
    std::uint64_t mask = 0;
    for (int bit = 0; bit < 64; ++bit) {
        if (threshold.hit(rng.at(first_shot + static_cast<std::uint64_t>(bit)))) {
            mask |= std::uint64_t{1} << bit;
        }
    }
    return mask;
}

void run_blocks(const std::vector<ColumnPattern>& columns, BernoulliThreshold threshold, std::size_t n,
                std::uint64_t block_begin, std::uint64_t block_end, std::uint64_t shots,
                std::vector<std::uint64_t>& hist) {
    std::vector<std::uint64_t> parity(n);
    for (std::uint64_t block = block_begin; block < block_end; ++block) {
        std::fill(parity.begin(), parity.end(), 0);
        const std::uint64_t first_shot = block * 64;
        for (const ColumnPattern& col : columns) {
            const std::uint64_t mask = bernoulli_mask(col.rng, threshold, first_shot);
            if (!mask) continue;
            for (std::uint32_t row : col.rows) parity[row] ^= mask;
        }
        const int valid = static_cast<int>(std::min<std::uint64_t>(64, shots - first_shot));
        for (int bit = 0; bit < valid; ++bit) {
            std::size_t flipped = 0;
            for (std::size_t row = 0; row < n; ++row) flipped += (parity[row] >> bit) & 1u;
            ++hist[flipped];
        }
    }
}

}  // namespace

SampleReport sample(const Rsg& rsg, double p, std::uint64_t shots, std::uint64_t seed, int workers) {
    if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample: p must lie in [0, 1]");
    if (workers < 1) workers = 1;

    const std::size_t n = static_cast<std::size_t>(rsg.readout_count());
    std::vector<ColumnPattern> columns;
    columns.reserve(rsg.site_count());
    for (std::size_t col = 0; col < rsg.site_count(); ++col) {
        ColumnPattern cp{CounterRng(seed, col), {}};
        for (std::size_t row = 0; row < n; ++row) {
            if (rsg.matrix().get(row, col)) cp.rows.push_back(static_cast<std::uint32_t>(row));
        }
        columns.push_back(std::move(cp));
    }
    const BernoulliThreshold threshold = BernoulliThreshold::make(p);

    const std::uint64_t blocks = (shots + 63) / 64;
    const int used = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), blocks));
    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(used),
                                                    std::vector<std::uint64_t>(n + 1, 0));
    {
        std::vector<std::thread> threads;
        for (int w = 0; w < used; ++w) {
            const std::uint64_t begin = blocks * w / used;
            const std::uint64_t end = blocks * (w + 1) / used;
            threads.emplace_back([&, w, begin, end] {
                run_blocks(columns, threshold, n, begin, end, shots, partial[static_cast<std::size_t>(w)]);
            });
        }
        for (auto& t : threads) t.join();
    }

    SampleReport report;
    report.counts.assign(n + 1, 0);
    for (const auto& h : partial) {
        for (std::size_t k = 0; k <= n; ++k) report.counts[k] += h[k];
    }
    report.shots = shots;
    report.seed = seed;

    std::vector<double> probs(n + 1);
    double e = 0.0;
    double e2 = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        probs[k] = static_cast<double>(report.counts[k]) / static_cast<double>(shots);
        e += static_cast<double>(k) * probs[k];
        e2 += static_cast<double>(k) * static_cast<double>(k) * probs[k];
    }
    report.distribution = ErrorDistribution(std::move(probs));
    report.expectation = e;
    report.variance = std::max(0.0, e2 - e * e);
    report.expectation_stderr = std::sqrt(report.variance / static_cast<double>(shots));
    return report;
}

std::vector<SweepRow> sweep(std::span<const double> axis_values,
                            const std::function<SweepInstance(double)>& instance_at, std::uint64_t shots,
                            std::uint64_t seed, int workers) {
    std::vector<SweepRow> rows;
    rows.reserve(axis_values.size());
    for (double axis : axis_values) {
        const SweepInstance inst = instance_at(axis);
        const SampleReport report = sample(inst.rsg, inst.p, shots, seed, workers);
        SweepRow row;
        row.axis = axis;
        row.expectation = report.expectation;
        row.variance = report.variance;
        row.shift = report.expectation -
                    closed_empty(inst.rsg.readout_count(), inst.rsg.window_count(), inst.p).expectation;
        row.entropy = entropy(report.distribution);
        row.stderr_e = report.expectation_stderr;
        row.shots = report.shots;
        row.seed = report.seed;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qprop
