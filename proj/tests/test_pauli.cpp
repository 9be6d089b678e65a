#include <utility>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "qprop/pauli.hpp"

using namespace qprop;

namespace {

PauliFrame two_qubit_frame(Pauli a, Pauli b) {
    PauliFrame f(2);
    f.mul(1, a);
    f.mul(2, b);
    return f;
}

}  // namespace

TEST_CASE("conj_h table") {
    for (const auto& [in, out] : std::vector<std::pair<Pauli, Pauli>>{
             {Pauli::X, Pauli::Z}, {Pauli::Z, Pauli::X}, {Pauli::Y, Pauli::Y}, {Pauli::I, Pauli::I}}) {
        PauliFrame f(1);
        f.mul(1, in);
        CHECK(conj_h(f, 1).get(1) == out);
    }
}

TEST_CASE("conj_phase table") {
    for (const auto& [in, out] : std::vector<std::pair<Pauli, Pauli>>{
             {Pauli::X, Pauli::Y}, {Pauli::Y, Pauli::X}, {Pauli::Z, Pauli::Z}, {Pauli::I, Pauli::I}}) {
        PauliFrame f(1);
        f.mul(1, in);
        CHECK(conj_phase(f, 1).get(1) == out);
    }
}

TEST_CASE("conj_cnot reproduces all sixteen two-qubit rows") {
    struct Row {
        Pauli in_c, in_t, out_c, out_t;
    };
    const Row rows[] = {
        {Pauli::I, Pauli::I, Pauli::I, Pauli::I}, {Pauli::X, Pauli::I, Pauli::X, Pauli::X},
        {Pauli::I, Pauli::X, Pauli::I, Pauli::X}, {Pauli::X, Pauli::X, Pauli::X, Pauli::I},
        {Pauli::Z, Pauli::I, Pauli::Z, Pauli::I}, {Pauli::I, Pauli::Z, Pauli::Z, Pauli::Z},
        {Pauli::Z, Pauli::Z, Pauli::I, Pauli::Z}, {Pauli::Y, Pauli::I, Pauli::Y, Pauli::X},
        {Pauli::I, Pauli::Y, Pauli::Z, Pauli::Y}, {Pauli::Y, Pauli::Y, Pauli::X, Pauli::Z},
        {Pauli::X, Pauli::Y, Pauli::Y, Pauli::Z}, {Pauli::Y, Pauli::X, Pauli::Y, Pauli::I},
        {Pauli::X, Pauli::Z, Pauli::Y, Pauli::Y}, {Pauli::Z, Pauli::X, Pauli::Z, Pauli::X},
        {Pauli::Y, Pauli::Z, Pauli::X, Pauli::Y}, {Pauli::Z, Pauli::Y, Pauli::I, Pauli::Y},
    };
    for (const Row& row : rows) {
        const PauliFrame out = conj_cnot(two_qubit_frame(row.in_c, row.in_t), 1, 2);
        CHECK(out.get(1) == row.out_c);
        CHECK(out.get(2) == row.out_t);
    }
}

TEST_CASE("conjugations are involutions on the bit representation") {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const PauliFrame f = two_qubit_frame(static_cast<Pauli>(a), static_cast<Pauli>(b));
            CHECK(conj_h(conj_h(f, 1), 1) == f);
            CHECK(conj_phase(conj_phase(f, 2), 2) == f);
            CHECK(conj_cnot(conj_cnot(f, 1, 2), 1, 2) == f);
        }
    }
}

TEST_CASE("conj argument validation") {
    PauliFrame f(2);
    CHECK_THROWS_AS(conj_h(f, 3), std::out_of_range);
    CHECK_THROWS_AS((void)conj_cnot(f, 1, 1), std::invalid_argument);
}

TEST_CASE("propagate_frame basics") {
    const Circuit c = gen_staircase_transversal(6);
    CHECK(propagate_frame(c, {}) == PauliFrame(6));

    // Two X injections meeting on one readout line cancel there.
    const std::vector<std::pair<SiteId, Pauli>> pair = {{{1, 1}, Pauli::X}, {{4, 3}, Pauli::X}};
    const PauliFrame out = propagate_frame(c, pair);
    CHECK_FALSE(out.x_bit(4));
    CHECK(out.x_bit(1));  // the control line keeps its own error

    CHECK_THROWS_AS(propagate_frame(c, std::vector<std::pair<SiteId, Pauli>>{{{7, 1}, Pauli::X}}),
                    std::out_of_range);
}

TEST_CASE("X-sector equivalence with the parity-exact map, exhaustive") {
    const Circuit circuits[] = {
        Circuit{2, 2, {{1, 2, 1}}},
        gen_staircase_transversal(4),
        gen_parallel_transversal(4),
        Circuit{3, 2, {{1, 2, 1}, {2, 3, 1}}},
        gen_empty(2, 3),
    };
    for (const Circuit& c : circuits) {
        const Rsg rsg = build_rsg(build_epstg(c));
        const std::size_t m = rsg.site_count();
        REQUIRE(m <= 16);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
            BitVector v(m);
            std::vector<std::pair<SiteId, Pauli>> injections;
            for (std::size_t i = 0; i < m; ++i) {
                if ((bits >> i) & 1u) {
                    v.set(i, true);
                    injections.emplace_back(rsg.site_of(i), Pauli::X);
                }
            }
            CHECK(propagate_frame(c, injections).x_bits() == mat_vec(rsg.matrix(), v));
        }
    }
}

TEST_CASE("Z errors propagate along reversed gate direction") {
    // Swapping control/target (keeping gate order) gives the transfer whose
    // parity-exact map must reproduce the Z sector.
    const Circuit circuits[] = {
        gen_staircase_transversal(4),
        Circuit{3, 2, {{1, 2, 1}, {2, 3, 1}}},
        gen_random_global(5, 3, 2, 9),
    };
    for (const Circuit& c : circuits) {
        Circuit swapped = c;
        for (Gate& g : swapped.gates) std::swap(g.control, g.target);
        const Rsg z_map = build_rsg(build_epstg(swapped));
        SeqRng rng(17, 3);
        for (int trial = 0; trial < 64; ++trial) {
            BitVector v(z_map.site_count());
            std::vector<std::pair<SiteId, Pauli>> injections;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (rng.below(2) == 1) {
                    v.set(i, true);
                    injections.emplace_back(z_map.site_of(i), Pauli::Z);
                }
            }
            CHECK(propagate_frame(c, injections).z_bits() == mat_vec(z_map.matrix(), v));
        }
    }
}
