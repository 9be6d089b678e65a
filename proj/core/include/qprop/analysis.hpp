#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>

#include "qprop/bitmat.hpp"
#include "qprop/distribution.hpp"
#include "qprop/graph.hpp"

namespace qprop {

// Raised when an exact computation would enumerate too large a pattern space.
struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBruteForceColumnLimit = 24;
inline constexpr std::size_t kBruteForceRowLimit = 64;

// Exact distribution by enumerating all 2^(nT) source patterns, weighting
// each by p^|v| (1-p)^(nT-|v|). Requires nT <= 24 and n <= 64.
ErrorDistribution brute_force_distribution(const Rsg& rsg, double p);

// Exact distribution via per-component enumeration folded with convolve.
// Each component must satisfy the brute-force limits on its own.
ErrorDistribution component_distribution(const Rsg& rsg, double p);

enum class Parity { Even, Odd };

// Probability that `sites` independent Bernoulli(p) flips have the parity:
// odd = 1/2 - 1/2 (1-2p)^sites.
double parity_prob(std::size_t sites, double p, Parity parity);

// Exact distribution for the staircase transversal circuit on 2r qubits,
// built pair by pair from the three per-pair site areas and folded by
// convolution. T = r + 1 throughout.
ErrorDistribution dp_transversal(int r, double p);

// Per-pair counts for pair k of the staircase: sites on the target line,
// sites on the control line after its gate, sites on the control line up to
// and including its gate window.
struct TransversalAreas {
    std::size_t area1;
    std::size_t area2;
    std::size_t area3;
};
TransversalAreas transversal_areas(int r, int k);

// Distribution over 0..2 errors for one pair with the given areas.
std::array<double, 3> transversal_pair_distribution(const TransversalAreas& areas, double p);

// Closed forms.
Moments closed_empty(int n, int T, double p);
Moments closed_parallel_transversal(int n, double p);
std::array<double, 3> parallel_pair_basis(double p);  // per-pair P(0), P(1), P(2)
ErrorDistribution closed_fully(int n, int T, double p);

// Difference between a circuit's expected readout-error count and the empty
// circuit's at the same n, T, p.
double shift(const Moments& circuit_moments, int n, int T, double p);
double shift_over_time(int n, double p, int T1, int T2);
double shift_over_p(int n, int T, double p1, double p2);

// Row-misidentification estimate for a distance-d (odd) code:
// d * d! / ((d_e - 1)! d_e!) * p_e^{d_e} with d_e = (d+1)/2.
double surface_misid_rate(int distance, double p_e);

// Closed-form marginal and pairwise readout-error probabilities from row
// degrees and shared degree; exact for independent per-site flips.
double readout_prob(const Rsg& rsg, int readout, double p);
double joint_prob(const Rsg& rsg, int readout_a, int readout_b, double p);

// P(any readout in `readouts` flips), inclusion-exclusion over all nonempty
// sub-collections; each intersection is enumerated over its column support.
double union_prob_incl_excl(const Rsg& rsg, std::span<const int> readouts, double p);

// Largest achievable flipped-readout count, by enumeration.
std::size_t max_error_count(const Rsg& rsg);

// Lexicographically smallest source pattern producing exactly k flipped
// readouts (column 0 weighs heaviest), or nullopt when none exists.
std::optional<BitVector> pattern_with_count(const Rsg& rsg, std::size_t k);

}  // namespace qprop
