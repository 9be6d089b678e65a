#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qprop {

// CNOT(control, target) applied in the given time window. Indices are 1-based.
struct Gate {
    int control = 0;
    int target = 0;
    int window = 0;
    bool operator==(const Gate&) const = default;
};

struct NoiseModel {
    double p = 0.0;  // independent bit-flip probability per qubit per window
};

// n qubits, T time windows, gates sorted by window; list order within a window
// is the application order. A qubit may appear in several gates of one window.
struct Circuit {
    int n = 0;
    int T = 0;
    std::vector<Gate> gates;
    bool operator==(const Circuit&) const = default;
};

struct CircuitFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every violated invariant, one message per finding (empty means valid).
std::vector<std::string> validate(const Circuit& c);

// Throws std::invalid_argument with the joined findings when invalid.
void require_valid(const Circuit& c);

// JSON wire format: {"n": int, "T": int, "gates": [{"t","c","x"}...]},
// "c" control, "x" target; unknown fields rejected. Gate order is preserved.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& c);

Circuit gen_empty(int n, int T);

// CNOT(k, k+r) in window k for k = 1..r, readout one window after the last
// gate, so T = r + 1.
Circuit gen_staircase_transversal(int n);

// All r gates CNOT(k, k+r) in window 1; T = 2.
Circuit gen_parallel_transversal(int n);

// k gates on k disjoint uniformly drawn qubit pairs, freshly drawn per window.
Circuit gen_random_global(int n, int T, int k, std::uint64_t seed);

// One pair set drawn once, repeated identically in every window.
Circuit gen_random_local(int n, int T, int k, std::uint64_t seed);

}  // namespace qprop
