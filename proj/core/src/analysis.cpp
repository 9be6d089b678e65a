#include "qprop/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

namespace qprop {

namespace {

struct Kahan {
    long double sum = 0.0L;
    long double carry = 0.0L;
    void add(long double x) {
        const long double y = x - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void require_probability(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": p must lie in [0, 1]");
    }
}

// p^j (1-p)^(m-j) for j = 0..m, in extended precision.
std::vector<long double> pattern_weights(std::size_t m, double p) {
    std::vector<long double> w(m + 1);
    const long double lp = static_cast<long double>(p);
    const long double lq = 1.0L - lp;
    for (std::size_t j = 0; j <= m; ++j) {
        w[j] = std::pow(lp, static_cast<long double>(j)) * std::pow(lq, static_cast<long double>(m - j));
    }
    return w;
}

std::vector<std::uint64_t> column_masks(const BitMatrix& m, std::span<const std::size_t> cols,
                                        std::span<const std::size_t> rows) {
    std::vector<std::uint64_t> masks(cols.size(), 0);
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            if (m.get(rows[ri], cols[ci])) masks[ci] |= std::uint64_t{1} << ri;
        }
    }
    return masks;
}

// Gray-code walk over all 2^m source patterns: each step toggles one column,
// so the readout parity word and the pattern weight update in O(1).
std::vector<double> enumerate_distribution(std::span<const std::uint64_t> masks, std::size_t row_count,
                                           double p) {
    const std::size_t m = masks.size();
    const auto weights = pattern_weights(m, p);
    std::vector<Kahan> bins(row_count + 1);

    std::uint64_t parity = 0;
    std::uint32_t pattern = 0;
    std::size_t on_bits = 0;
    bins[0].add(weights[0]);
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int bit = std::countr_zero(i);
        pattern ^= std::uint32_t{1} << bit;
        on_bits += (pattern >> bit) & 1u ? +1 : -1;
        parity ^= masks[static_cast<std::size_t>(bit)];
        bins[static_cast<std::size_t>(std::popcount(parity))].add(weights[on_bits]);
    }

    std::vector<double> out(row_count + 1);
    for (std::size_t k = 0; k <= row_count; ++k) out[k] = static_cast<double>(bins[k].sum);
    return out;
}

void require_enumerable(std::size_t cols, std::size_t rows, const char* who) {
    if (cols > kBruteForceColumnLimit) {
        throw InstanceTooLarge(std::string(who) + ": " + std::to_string(cols) +
                               " source sites exceed the enumeration limit of " +
                               std::to_string(kBruteForceColumnLimit));
    }
    if (rows > kBruteForceRowLimit) {
        throw InstanceTooLarge(std::string(who) + ": " + std::to_string(rows) +
                               " readouts exceed the enumeration limit of " +
                               std::to_string(kBruteForceRowLimit));
    }
}

std::vector<std::size_t> iota_vector(std::size_t count) {
    std::vector<std::size_t> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = i;
    return v;
}

}  // namespace

ErrorDistribution brute_force_distribution(const Rsg& rsg, double p) {
    require_probability(p, "brute_force_distribution");
    const std::size_t rows = static_cast<std::size_t>(rsg.readout_count());
    const std::size_t cols = rsg.site_count();
    require_enumerable(cols, rows, "brute_force_distribution");
    const auto all_cols = iota_vector(cols);
    const auto all_rows = iota_vector(rows);
    const auto masks = column_masks(rsg.matrix(), all_cols, all_rows);
    return ErrorDistribution(enumerate_distribution(masks, rows, p));
}

ErrorDistribution component_distribution(const Rsg& rsg, double p) {
    require_probability(p, "component_distribution");
    const auto parts = components(rsg);
    ErrorDistribution result({1.0});
    for (const Component& comp : parts.components) {
        require_enumerable(comp.columns.size(), comp.readouts.size(), "component_distribution");
        std::vector<std::size_t> rows;
        rows.reserve(comp.readouts.size());
        for (int q : comp.readouts) rows.push_back(static_cast<std::size_t>(q) - 1);
        const auto masks = column_masks(rsg.matrix(), comp.columns, rows);
        result = convolve(result, ErrorDistribution(enumerate_distribution(masks, rows.size(), p)));
    }
    return result;
}

double parity_prob(std::size_t sites, double p, Parity parity) {
    const double even = 0.5 + 0.5 * std::pow(1.0 - 2.0 * p, static_cast<double>(sites));
    return parity == Parity::Even ? even : 1.0 - even;
}

TransversalAreas transversal_areas(int r, int k) {
    const int T = r + 1;
    return {static_cast<std::size_t>(T), static_cast<std::size_t>(T - k), static_cast<std::size_t>(k)};
}

std::array<double, 3> transversal_pair_distribution(const TransversalAreas& areas, double p) {
    const double e1 = parity_prob(areas.area1, p, Parity::Even);
    const double o1 = parity_prob(areas.area1, p, Parity::Odd);
    const double e2 = parity_prob(areas.area2, p, Parity::Even);
    const double o2 = parity_prob(areas.area2, p, Parity::Odd);
    const double e3 = parity_prob(areas.area3, p, Parity::Even);
    const double o3 = parity_prob(areas.area3, p, Parity::Odd);
    // The control line reads area2 xor area3, the target line area1 xor area3.
    return {
        e1 * e2 * e3 + o1 * o2 * o3,
        e1 * o2 * e3 + e1 * o2 * o3 + o1 * e2 * e3 + o1 * e2 * o3,
        e1 * e2 * o3 + o1 * o2 * e3,
    };
}

ErrorDistribution dp_transversal(int r, double p) {
    require_probability(p, "dp_transversal");
    if (r < 1) throw std::invalid_argument("dp_transversal: r must be >= 1");
    ErrorDistribution dist({1.0});
    for (int k = 1; k <= r; ++k) {
        const auto pair = transversal_pair_distribution(transversal_areas(r, k), p);
        dist = convolve(dist, ErrorDistribution({pair[0], pair[1], pair[2]}));
    }
    return dist;
}

Moments closed_empty(int n, int T, double p) {
    require_probability(p, "closed_empty");
    if (n < 1 || T < 1) throw std::invalid_argument("closed_empty: n and T must be >= 1");
    const double q_t = std::pow(1.0 - 2.0 * p, static_cast<double>(T));
    return {n / 2.0 * (1.0 - q_t), n / 4.0 * (1.0 - q_t * q_t)};
}

std::array<double, 3> parallel_pair_basis(double p) {
    return {
        1.0 + p * (-4.0 + p * (7.0 - 4.0 * p)),
        p * (3.0 + p * (-6.0 + 4.0 * p)),
        p * (1.0 - p),
    };
}

Moments closed_parallel_transversal(int n, double p) {
    require_probability(p, "closed_parallel_transversal");
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("closed_parallel_transversal: n must be even");
    const double pairs = n / 2.0;
    const double e = pairs * (p * (5.0 + p * (-8.0 + 4.0 * p)));
    const double var = pairs * (p * (7.0 + p * (-35.0 + p * (84.0 + p * (-104.0 + p * (64.0 - 16.0 * p))))));
    return {e, var};
}

ErrorDistribution closed_fully(int n, int T, double p) {
    require_probability(p, "closed_fully");
    if (n < 1 || T < 1) throw std::invalid_argument("closed_fully: n and T must be >= 1");
    std::vector<double> probs(static_cast<std::size_t>(n) + 1, 0.0);
    const double p_all = 0.5 - 0.5 * std::pow(1.0 - 2.0 * p, static_cast<double>(n) * T);
    probs[static_cast<std::size_t>(n)] = p_all;
    probs[0] += 1.0 - p_all;  // += keeps n's entry intact when p_all lands on 0
    return ErrorDistribution(std::move(probs));
}

double shift(const Moments& circuit_moments, int n, int T, double p) {
    return circuit_moments.expectation - closed_empty(n, T, p).expectation;
}

double shift_over_time(int n, double p, int T1, int T2) {
    if (T1 > T2) throw std::invalid_argument("shift_over_time: T1 must not exceed T2");
    const double q = 1.0 - 2.0 * p;
    return n / 2.0 * (std::pow(q, T1) - std::pow(q, T2));
}

double shift_over_p(int n, int T, double p1, double p2) {
    return n / 2.0 *
           (std::pow(1.0 - 2.0 * p1, static_cast<double>(T)) - std::pow(1.0 - 2.0 * p2, static_cast<double>(T)));
}

double surface_misid_rate(int distance, double p_e) {
    if (distance < 1 || distance % 2 == 0) {
        throw std::invalid_argument("surface_misid_rate: distance must be odd and >= 1");
    }
    const int d_e = (distance + 1) / 2;
    // d! / ((d_e - 1)! d_e!) = product of (d_e+1..d) / (d_e-1)!
    long double coeff = static_cast<long double>(distance);
    for (int i = d_e + 1; i <= distance; ++i) coeff *= i;
    for (int i = 2; i <= d_e - 1; ++i) coeff /= i;
    return static_cast<double>(coeff * std::pow(static_cast<long double>(p_e), d_e));
}

double readout_prob(const Rsg& rsg, int readout, double p) {
    if (readout < 1 || readout > rsg.readout_count()) {
        throw std::out_of_range("readout_prob: readout index out of range");
    }
    return parity_prob(rsg.readout_degree(readout), p, Parity::Odd);
}

double joint_prob(const Rsg& rsg, int readout_a, int readout_b, double p) {
    if (readout_a < 1 || readout_a > rsg.readout_count() || readout_b < 1 ||
        readout_b > rsg.readout_count()) {
        throw std::out_of_range("joint_prob: readout index out of range");
    }
    const double q = 1.0 - 2.0 * p;
    const double x = static_cast<double>(rsg.readout_degree(readout_a));
    const double y = static_cast<double>(rsg.readout_degree(readout_b));
    const double a = static_cast<double>(rsg.shared_degree(readout_a, readout_b));
    return 0.25 - 0.25 * std::pow(q, x) - 0.25 * std::pow(q, y) + 0.25 * std::pow(q, x + y - 2.0 * a);
}

namespace {

// P(all rows in `rows` flip), enumerated over the columns touching them.
double all_odd_prob(const Rsg& rsg, std::span<const std::size_t> rows, double p) {
    std::vector<std::size_t> support;
    for (std::size_t col = 0; col < rsg.site_count(); ++col) {
        for (std::size_t row : rows) {
            if (rsg.matrix().get(row, col)) {
                support.push_back(col);
                break;
            }
        }
    }
    require_enumerable(support.size(), rows.size(), "union_prob_incl_excl");
    const auto masks = column_masks(rsg.matrix(), support, rows);
    const auto weights = pattern_weights(support.size(), p);
    const std::uint64_t want = rows.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows.size()) - 1;

    Kahan acc;
    std::uint64_t parity = 0;
    std::uint32_t pattern = 0;
    std::size_t on_bits = 0;
    if (parity == want) acc.add(weights[0]);
    const std::uint64_t total = std::uint64_t{1} << support.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        const int bit = std::countr_zero(i);
        pattern ^= std::uint32_t{1} << bit;
        on_bits += (pattern >> bit) & 1u ? +1 : -1;
        parity ^= masks[static_cast<std::size_t>(bit)];
        if (parity == want) acc.add(weights[on_bits]);
    }
    return static_cast<double>(acc.sum);
}

}  // namespace

double union_prob_incl_excl(const Rsg& rsg, std::span<const int> readouts, double p) {
    std::vector<std::size_t> rows;
    for (int q : readouts) {
        if (q < 1 || q > rsg.readout_count()) {
            throw std::out_of_range("union_prob_incl_excl: readout index out of range");
        }
        rows.push_back(static_cast<std::size_t>(q) - 1);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    if (rows.empty()) return 0.0;
    if (rows.size() > 20) {
        throw InstanceTooLarge("union_prob_incl_excl: more than 20 readouts");
    }

    double total = 0.0;
    const std::uint32_t subsets = std::uint32_t{1} << rows.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if ((mask >> i) & 1u) chosen.push_back(rows[i]);
        }
        const double term = all_odd_prob(rsg, chosen, p);
        total += (std::popcount(mask) & 1) ? term : -term;
    }
    return total;
}

std::size_t max_error_count(const Rsg& rsg) {
    const std::size_t rows = static_cast<std::size_t>(rsg.readout_count());
    const std::size_t cols = rsg.site_count();
    require_enumerable(cols, rows, "max_error_count");
    const auto all_cols = iota_vector(cols);
    const auto all_rows = iota_vector(rows);
    const auto masks = column_masks(rsg.matrix(), all_cols, all_rows);

    std::size_t best = 0;
    std::uint64_t parity = 0;
    const std::uint64_t total = std::uint64_t{1} << cols;
    for (std::uint64_t i = 1; i < total; ++i) {
        parity ^= masks[static_cast<std::size_t>(std::countr_zero(i))];
        best = std::max(best, static_cast<std::size_t>(std::popcount(parity)));
        if (best == rows) break;
    }
    return best;
}

std::optional<BitVector> pattern_with_count(const Rsg& rsg, std::size_t k) {
    const std::size_t rows = static_cast<std::size_t>(rsg.readout_count());
    const std::size_t cols = rsg.site_count();
    require_enumerable(cols, rows, "pattern_with_count");
    if (k > rows) return std::nullopt;
    const auto all_cols = iota_vector(cols);
    const auto all_rows = iota_vector(rows);
    const auto masks = column_masks(rsg.matrix(), all_cols, all_rows);

    // Numeric order with column 0 as the most significant bit is exactly the
    // lexicographic order of the pattern as a column-indexed bit string.
    std::vector<std::uint64_t> bit_masks(cols);
    for (std::size_t j = 0; j < cols; ++j) bit_masks[j] = masks[cols - 1 - j];

    std::uint64_t parity = 0;
    const std::uint64_t total = std::uint64_t{1} << cols;
    for (std::uint64_t u = 0; u < total; ++u) {
        if (u != 0) {
            std::uint64_t toggled = u ^ (u - 1);
            while (toggled) {
                const int bit = std::countr_zero(toggled);
                toggled &= toggled - 1;
                parity ^= bit_masks[static_cast<std::size_t>(bit)];
            }
        }
        if (static_cast<std::size_t>(std::popcount(parity)) == k) {
            BitVector v(cols);
            for (std::size_t col = 0; col < cols; ++col) {
                if ((u >> (cols - 1 - col)) & 1u) v.set(col, true);
            }
            return v;
        }
    }
    return std::nullopt;
}

}  // namespace qprop
