#include "qprop/pauli.hpp"

#include <stdexcept>

namespace qprop {

namespace {

void require_qubit(const PauliFrame& f, int q, const char* who) {
    if (q < 1 || q > f.size()) throw std::out_of_range(std::string(who) + ": qubit index out of range");
}

}  // namespace

PauliFrame conj_h(PauliFrame f, int q) {
    require_qubit(f, q, "conj_h");
    const std::size_t i = static_cast<std::size_t>(q) - 1;
    const bool x = f.x_.get(i);
    const bool z = f.z_.get(i);
    f.x_.set(i, z);
    f.z_.set(i, x);
    return f;
}

PauliFrame conj_phase(PauliFrame f, int q) {
    require_qubit(f, q, "conj_phase");
    const std::size_t i = static_cast<std::size_t>(q) - 1;
    if (f.x_.get(i)) f.z_.flip(i);
    return f;
}

PauliFrame conj_cnot(PauliFrame f, int control, int target) {
    require_qubit(f, control, "conj_cnot");
    require_qubit(f, target, "conj_cnot");
    if (control == target) throw std::invalid_argument("conj_cnot: control equals target");
    const std::size_t c = static_cast<std::size_t>(control) - 1;
    const std::size_t x = static_cast<std::size_t>(target) - 1;
    if (f.x_.get(c)) f.x_.flip(x);
    if (f.z_.get(x)) f.z_.flip(c);
    return f;
}

PauliFrame propagate_frame(const Circuit& c, std::span<const std::pair<SiteId, Pauli>> injections) {
    require_valid(c);
    for (const auto& [site, pauli] : injections) {
        if (site.qubit < 1 || site.qubit > c.n || site.window < 1 || site.window > c.T) {
            throw std::out_of_range("propagate_frame: injection site out of range");
        }
        (void)pauli;
    }
    PauliFrame frame(c.n);
    std::size_t next_gate = 0;
    for (int t = 1; t <= c.T; ++t) {
        for (const auto& [site, pauli] : injections) {
            if (site.window == t) frame.mul(site.qubit, pauli);
        }
        while (next_gate < c.gates.size() && c.gates[next_gate].window == t) {
            frame = conj_cnot(std::move(frame), c.gates[next_gate].control, c.gates[next_gate].target);
            ++next_gate;
        }
    }
    return frame;
}

}  // namespace qprop
