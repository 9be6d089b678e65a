#include "qprop/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace qprop {

namespace {

void check_normalized(const std::vector<double>& probs) {
    if (probs.empty()) throw std::invalid_argument("distribution needs at least one entry");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw std::invalid_argument("distribution entries must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution entries must sum to 1 (got " + std::to_string(sum) + ")");
    }
}

}  // namespace

ErrorDistribution::ErrorDistribution(std::vector<double> probs) {
    check_normalized(probs);
    probs_ = std::move(probs);
}

ErrorDistribution ErrorDistribution::point_mass(std::size_t k, std::size_t max_count) {
    if (k > max_count) throw std::invalid_argument("point_mass: k exceeds max_count");
    std::vector<double> probs(max_count + 1, 0.0);
    probs[k] = 1.0;
    return ErrorDistribution(std::move(probs));
}

ErrorDistribution convolve(const ErrorDistribution& a, const ErrorDistribution& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return ErrorDistribution(std::move(out));
}

Moments moments(const ErrorDistribution& d) {
    double e = 0.0;
    double e2 = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        e += static_cast<double>(k) * d[k];
        e2 += static_cast<double>(k) * static_cast<double>(k) * d[k];
    }
    double var = e2 - e * e;
    if (var < 0.0) var = 0.0;  // shield tiny negative rounding
    return {e, var};
}

double entropy(const ErrorDistribution& d) {
    double h = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] > 0.0) h -= d[k] * std::log(d[k]);
    }
    return h < 0.0 ? 0.0 : h;
}

double kl_divergence(const ErrorDistribution& p, const ErrorDistribution& q) {
    const std::size_t len = std::max(p.size(), q.size());
    double d = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        if (p[k] == 0.0) continue;
        if (q[k] <= 0.0) throw std::invalid_argument("kl_divergence: Q vanishes on the support of P");
        d += p[k] * std::log(p[k] / q[k]);
    }
    return d < 0.0 ? 0.0 : d;
}

double logical_bound(double expectation, int distance) {
    if (distance < 0) throw std::invalid_argument("logical_bound: distance must be >= 0");
    return expectation / (distance + 1);
}

double logical_exact(const ErrorDistribution& d, int distance) {
    if (distance < 0) throw std::invalid_argument("logical_exact: distance must be >= 0");
    double tail = 0.0;
    for (std::size_t k = static_cast<std::size_t>(distance) + 1; k < d.size(); ++k) tail += d[k];
    return tail;
}

}  // namespace qprop
