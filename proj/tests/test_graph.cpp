#include <string>

#include "doctest.h"
#include "oracle.hpp"
#include "qprop/graph.hpp"

using namespace qprop;

namespace {

// Circuit behind the worked 4x8 decision matrix: two staircase gates with
// readout directly after the second window.
Circuit worked_decision_circuit() { return Circuit{4, 2, {{1, 3, 1}, {2, 4, 2}}}; }

BitMatrix qubit_major_matrix(const Rsg& rsg) {
    const auto order = rsg.qubit_major_columns();
    BitMatrix out(static_cast<std::size_t>(rsg.readout_count()), order.size());
    for (std::size_t d = 0; d < order.size(); ++d) {
        for (std::size_t r = 0; r < out.rows(); ++r) {
            if (rsg.matrix().get(r, order[d])) out.set(r, d, true);
        }
    }
    return out;
}

void check_parity_law_exhaustive(const Circuit& c) {
    const Rsg rsg = build_rsg(build_epstg(c));
    const std::size_t m = rsg.site_count();
    REQUIRE(m <= 20);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        BitVector v(m);
        for (std::size_t i = 0; i < m; ++i) v.set(i, (bits >> i) & 1u);
        CHECK(mat_vec(rsg.matrix(), v) == oracle::forward_readout(c, v));
    }
}

}  // namespace

TEST_CASE("build_epstg transfer matrices") {
    const Epstg empty = build_epstg(gen_empty(3, 4));
    for (int t = 1; t <= 4; ++t) CHECK(empty.window_transfer(t) == BitMatrix::identity(3));

    const Epstg pair = build_epstg(Circuit{2, 2, {{1, 2, 1}}});
    CHECK(pair.window_transfer(1) == BitMatrix::from_rows({{1, 0}, {1, 1}}));
    CHECK(pair.window_transfer(2) == BitMatrix::identity(2));

    // Applying the same gate twice in one window cancels over GF(2).
    const Epstg doubled = build_epstg(Circuit{2, 1, {{1, 2, 1}, {1, 2, 1}}});
    CHECK(doubled.window_transfer(1) == BitMatrix::identity(2));
}

TEST_CASE("staircase readout sources") {
    const Rsg rsg = build_rsg(build_epstg(gen_staircase_transversal(6)));
    CHECK(rsg.readout_degree(4) == 5);
    const std::size_t row = 3;
    CHECK(rsg.matrix().get(row, rsg.column_of({1, 1})));
    for (int t = 1; t <= 4; ++t) CHECK(rsg.matrix().get(row, rsg.column_of({4, t})));
    // Readout 1 keeps only its own line.
    CHECK(rsg.readout_degree(1) == 4);
}

TEST_CASE("worked decision instance matrix") {
    const Rsg rsg = build_rsg(build_epstg(worked_decision_circuit()));
    // Qubit-major column order: Q1[1] Q1[2] Q2[1] Q2[2] Q3[1] Q3[2] Q4[1] Q4[2].
    // Row 4 carries Q2[2]: an error arriving right before the second window's
    // gate is copied onto qubit 4 as well.
    const BitMatrix expected = BitMatrix::from_rows({
        {1, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0, 0, 0},
        {1, 0, 0, 0, 1, 1, 0, 0},
        {0, 0, 1, 1, 0, 0, 1, 1},
    });
    CHECK(qubit_major_matrix(rsg) == expected);
}

TEST_CASE("empty circuit rows are disjoint with T ones") {
    const Rsg rsg = build_rsg(build_epstg(gen_empty(4, 3)));
    for (int q = 1; q <= 4; ++q) {
        CHECK(rsg.readout_degree(q) == 3);
        for (int t = 1; t <= 3; ++t) CHECK(rsg.matrix().get(q - 1, rsg.column_of({q, t})));
    }
}

TEST_CASE("parity-exact law, exhaustive forward simulation") {
    check_parity_law_exhaustive(Circuit{2, 2, {{1, 2, 1}}});
    check_parity_law_exhaustive(gen_staircase_transversal(4));
    check_parity_law_exhaustive(gen_parallel_transversal(4));
    check_parity_law_exhaustive(gen_empty(3, 3));
    check_parity_law_exhaustive(Circuit{3, 2, {{1, 2, 1}, {2, 3, 1}}});  // chained window
    check_parity_law_exhaustive(Circuit{3, 2, {{2, 3, 1}, {1, 2, 1}}});  // order flipped
}

TEST_CASE("parity-exact law, randomized on larger instances") {
    const Circuit c = gen_random_global(7, 4, 3, 2024);
    const Rsg rsg = build_rsg(build_epstg(c));
    SeqRng rng(5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        BitVector v(rsg.site_count());
        for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng.below(2) == 1);
        CHECK(mat_vec(rsg.matrix(), v) == oracle::forward_readout(c, v));
    }
}

TEST_CASE("path-existence matches parity-exact on unique-path circuits") {
    for (const Circuit& c : {gen_empty(4, 3), gen_staircase_transversal(6), gen_parallel_transversal(6)}) {
        const Epstg g = build_epstg(c);
        CHECK(build_rsg(g, RsgMode::ParityExact).matrix() == build_rsg(g, RsgMode::PathExistence).matrix());
    }
}

TEST_CASE("path-existence keeps cancelled even-multiplicity paths") {
    // Diamond: qubit 1 fans out to 2 and 3, both recombine on 4.
    const Circuit diamond{4, 2, {{1, 2, 1}, {1, 3, 1}, {2, 4, 2}, {3, 4, 2}}};
    const Epstg g = build_epstg(diamond);
    const Rsg parity = build_rsg(g, RsgMode::ParityExact);
    const Rsg path = build_rsg(g, RsgMode::PathExistence);
    const std::size_t col = parity.column_of({1, 1});
    CHECK_FALSE(parity.matrix().get(3, col));  // the two paths cancel
    CHECK(path.matrix().get(3, col));          // but reachability remains
}

TEST_CASE("window slicing keeps transfer matrices") {
    const Circuit c = gen_random_global(6, 5, 2, 31337);
    const Epstg full = build_epstg(c);
    for (int t1 = 1; t1 <= 5; ++t1) {
        for (int t2 = t1; t2 <= 5; ++t2) {
            Circuit sliced{c.n, t2 - t1 + 1, {}};
            for (Gate g : c.gates) {
                if (g.window >= t1 && g.window <= t2) {
                    g.window -= t1 - 1;
                    sliced.gates.push_back(g);
                }
            }
            const Epstg sub = build_epstg(sliced);
            for (int t = 1; t <= sliced.T; ++t) {
                CHECK(sub.window_transfer(t) == full.window_transfer(t + t1 - 1));
            }
        }
    }
}

TEST_CASE("components") {
    const Rsg parallel = build_rsg(build_epstg(gen_parallel_transversal(4)));
    const auto parts = components(parallel);
    REQUIRE(parts.components.size() == 2);
    CHECK(parts.components[0].readouts == std::vector<int>{1, 3});
    CHECK(parts.components[1].readouts == std::vector<int>{2, 4});

    CHECK(components(build_rsg(build_epstg(gen_empty(4, 2)))).components.size() == 4);
    CHECK(components(gen_complete_rsg(4, 2)).components.size() == 1);
}

TEST_CASE("components partition rows and never share columns") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Circuit c = gen_random_global(8, 3, 3, seed);
        const Rsg rsg = build_rsg(build_epstg(c));
        const auto parts = components(rsg);
        std::vector<int> seen_rows;
        std::vector<std::size_t> seen_cols;
        for (const auto& comp : parts.components) {
            for (int q : comp.readouts) seen_rows.push_back(q);
            for (std::size_t col : comp.columns) seen_cols.push_back(col);
        }
        std::sort(seen_rows.begin(), seen_rows.end());
        std::vector<int> expect_rows(8);
        for (int q = 1; q <= 8; ++q) expect_rows[q - 1] = q;
        CHECK(seen_rows == expect_rows);
        std::sort(seen_cols.begin(), seen_cols.end());
        CHECK(std::adjacent_find(seen_cols.begin(), seen_cols.end()) == seen_cols.end());
    }
}

TEST_CASE("gen_complete_rsg") {
    const Rsg r = gen_complete_rsg(4, 2);
    CHECK(r.matrix().rows() == 4);
    CHECK(r.matrix().cols() == 8);
    for (int q = 1; q <= 4; ++q) CHECK(r.readout_degree(q) == 8);
    CHECK(gen_complete_rsg(1, 1).matrix() == BitMatrix::from_rows({{1}}));
}

TEST_CASE("export_graph") {
    const Rsg tiny = build_rsg(build_epstg(gen_empty(1, 1)));
    CHECK(export_graph(tiny, GraphFormat::JsonEdges) == "{\"edges\":[[\"Q1[1]\",\"R1\"]]}\n");

    const Rsg stair = build_rsg(build_epstg(gen_staircase_transversal(6)));
    const std::string json = export_graph(stair, GraphFormat::JsonEdges);
    std::size_t hits = 0;
    for (std::size_t pos = json.find("\"R4\""); pos != std::string::npos; pos = json.find("\"R4\"", pos + 1)) {
        ++hits;
    }
    CHECK(hits == 5);

    const std::string dot = export_graph(stair, GraphFormat::Dot);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("\"Q1[1]\" -> \"R1\";") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));

    const std::string epstg_dot = export_graph(build_epstg(gen_staircase_transversal(6)), GraphFormat::Dot);
    CHECK(epstg_dot.find("\"Q1[1]\" -> \"Q4[2]\";") != std::string::npos);
}
