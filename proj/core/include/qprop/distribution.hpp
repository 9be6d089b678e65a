#pragma once

#include <cstddef>
#include <vector>

namespace qprop {

// Probabilities over the count of flipped readouts, index k = 0..max_count.
// Entries are nonnegative and sum to 1 within 1e-9.
class ErrorDistribution {
public:
    ErrorDistribution() = default;
    explicit ErrorDistribution(std::vector<double> probs);

    static ErrorDistribution point_mass(std::size_t k, std::size_t max_count);

    std::size_t size() const { return probs_.size(); }
    std::size_t max_count() const { return probs_.size() - 1; }
    double operator[](std::size_t k) const { return k < probs_.size() ? probs_[k] : 0.0; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

struct Moments {
    double expectation = 0.0;
    double variance = 0.0;
};

// Distribution of the sum of two independent counts.
ErrorDistribution convolve(const ErrorDistribution& a, const ErrorDistribution& b);

Moments moments(const ErrorDistribution& d);

// Natural-log entropy, with 0 log 0 = 0.
double entropy(const ErrorDistribution& d);

// KL(P || Q); throws when Q vanishes where P does not.
double kl_divergence(const ErrorDistribution& p, const ErrorDistribution& q);

// Markov tail bound on the logical error rate: expectation / (distance + 1).
double logical_bound(double expectation, int distance);

// Exact tail: probability of more than `distance` flipped readouts.
double logical_exact(const ErrorDistribution& d, int distance);

}  // namespace qprop
