#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qprop/distribution.hpp"
#include "qprop/rng.hpp"

using namespace qprop;

namespace {

ErrorDistribution random_distribution(std::size_t len, std::uint64_t seed) {
    SeqRng rng(seed, 13);
    std::vector<double> probs(len);
    double sum = 0.0;
    for (double& p : probs) {
        p = static_cast<double>(rng.below(1000) + 1);
        sum += p;
    }
    for (double& p : probs) p /= sum;
    return ErrorDistribution(std::move(probs));
}

}  // namespace

TEST_CASE("constructor validates") {
    CHECK_THROWS_AS(ErrorDistribution({0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(ErrorDistribution({1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(ErrorDistribution(std::vector<double>{}), std::invalid_argument);
    CHECK_NOTHROW(ErrorDistribution({0.25, 0.5, 0.25}));
}

TEST_CASE("convolve") {
    const ErrorDistribution d = random_distribution(5, 1);
    const ErrorDistribution delta = ErrorDistribution::point_mass(0, 0);
    const ErrorDistribution folded = convolve(d, delta);
    REQUIRE(folded.size() == d.size());
    for (std::size_t k = 0; k < d.size(); ++k) CHECK(folded[k] == doctest::Approx(d[k]).epsilon(1e-14));

    const ErrorDistribution coin({0.5, 0.5});
    const ErrorDistribution two = convolve(coin, coin);
    CHECK(two[0] == doctest::Approx(0.25));
    CHECK(two[1] == doctest::Approx(0.5));
    CHECK(two[2] == doctest::Approx(0.25));
}

TEST_CASE("moments") {
    const Moments pm = moments(ErrorDistribution::point_mass(3, 5));
    CHECK(pm.expectation == doctest::Approx(3.0));
    CHECK(pm.variance == doctest::Approx(0.0));

    const Moments mm = moments(ErrorDistribution({0.25, 0.5, 0.25}));
    CHECK(mm.expectation == doctest::Approx(1.0));
    CHECK(mm.variance == doctest::Approx(0.5));
}

TEST_CASE("moments add under convolution") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const ErrorDistribution a = random_distribution(4 + seed % 3, seed * 2);
        const ErrorDistribution b = random_distribution(3 + seed % 4, seed * 2 + 1);
        const Moments ma = moments(a);
        const Moments mb = moments(b);
        const Moments mc = moments(convolve(a, b));
        CHECK(mc.expectation == doctest::Approx(ma.expectation + mb.expectation).epsilon(1e-12));
        CHECK(mc.variance == doctest::Approx(ma.variance + mb.variance).epsilon(1e-12));
    }
}

TEST_CASE("entropy") {
    CHECK(entropy(ErrorDistribution::point_mass(2, 4)) == doctest::Approx(0.0));
    const std::size_t m = 7;
    CHECK(entropy(ErrorDistribution(std::vector<double>(m, 1.0 / m))) ==
          doctest::Approx(std::log(static_cast<double>(m))).epsilon(1e-12));
}

TEST_CASE("joint entropy over independent components is additive") {
    // The additive law lives on the product sample space (k1, k2), not on the
    // sum k1 + k2.
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const ErrorDistribution a = random_distribution(4, seed + 50);
        const ErrorDistribution b = random_distribution(5, seed + 60);
        double joint = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                const double p = a[i] * b[j];
                if (p > 0.0) joint -= p * std::log(p);
            }
        }
        CHECK(joint == doctest::Approx(entropy(a) + entropy(b)).epsilon(1e-12));
    }
}

TEST_CASE("kl divergence") {
    const ErrorDistribution d = random_distribution(6, 77);
    CHECK(kl_divergence(d, d) == doctest::Approx(0.0));

    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const ErrorDistribution p = random_distribution(5, seed + 10);
        const ErrorDistribution q = random_distribution(5, seed + 20);
        CHECK(kl_divergence(p, q) >= 0.0);
    }

    const ErrorDistribution support_p({0.5, 0.5, 0.0});
    const ErrorDistribution support_q({1.0, 0.0, 0.0});
    CHECK_THROWS_AS(kl_divergence(support_p, support_q), std::invalid_argument);
    CHECK_NOTHROW(kl_divergence(support_q, support_p));
}

TEST_CASE("logical bound and exact tail") {
    CHECK(logical_exact(ErrorDistribution::point_mass(0, 3), 1) == doctest::Approx(0.0));
    CHECK(logical_bound(0.0, 1) == doctest::Approx(0.0));

    const ErrorDistribution d({0.25, 0.5, 0.25});
    CHECK(logical_exact(d, 1) == doctest::Approx(0.25));
    CHECK(logical_bound(moments(d).expectation, 1) == doctest::Approx(0.5));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ErrorDistribution r = random_distribution(8, seed + 30);
        const double e = moments(r).expectation;
        for (int dist : {0, 1, 3, 5}) CHECK(logical_exact(r, dist) <= logical_bound(e, dist) + 1e-15);
    }
}
