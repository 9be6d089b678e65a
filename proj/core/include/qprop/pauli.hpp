#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "qprop/bitmat.hpp"
#include "qprop/circuit.hpp"
#include "qprop/graph.hpp"

namespace qprop {

// Two-bit encoding: x bit, z bit. Y carries both. Global signs are never
// tracked; error-count statistics do not depend on them.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool pauli_x_bit(Pauli p) { return static_cast<std::uint8_t>(p) & 1u; }
constexpr bool pauli_z_bit(Pauli p) { return static_cast<std::uint8_t>(p) & 2u; }
constexpr Pauli make_pauli(bool x, bool z) {
    return static_cast<Pauli>((x ? 1u : 0u) | (z ? 2u : 0u));
}

class PauliFrame {
public:
    explicit PauliFrame(int n) : x_(static_cast<std::size_t>(n)), z_(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(x_.size()); }

    Pauli get(int q) const { return make_pauli(x_bit(q), z_bit(q)); }

    // Compose (multiply) a Pauli onto qubit q, sign discarded.
    void mul(int q, Pauli p) {
        if (pauli_x_bit(p)) x_.flip(static_cast<std::size_t>(q) - 1);
        if (pauli_z_bit(p)) z_.flip(static_cast<std::size_t>(q) - 1);
    }

    bool x_bit(int q) const { return x_.get(static_cast<std::size_t>(q) - 1); }
    bool z_bit(int q) const { return z_.get(static_cast<std::size_t>(q) - 1); }

    const BitVector& x_bits() const { return x_; }
    const BitVector& z_bits() const { return z_; }

    bool operator==(const PauliFrame&) const = default;

    friend PauliFrame conj_h(PauliFrame f, int q);
    friend PauliFrame conj_phase(PauliFrame f, int q);
    friend PauliFrame conj_cnot(PauliFrame f, int control, int target);

private:
    BitVector x_;
    BitVector z_;
};

// H swaps X and Z on one qubit.
PauliFrame conj_h(PauliFrame f, int q);

// P maps X <-> Y on one qubit and fixes Z.
PauliFrame conj_phase(PauliFrame f, int q);

// CNOT copies the X component control -> target and the Z component
// target -> control.
PauliFrame conj_cnot(PauliFrame f, int control, int target);

// Frame at readout: each injection multiplies in at the start of its window,
// then that window's gates conjugate the whole frame.
PauliFrame propagate_frame(const Circuit& c, std::span<const std::pair<SiteId, Pauli>> injections);

}  // namespace qprop
