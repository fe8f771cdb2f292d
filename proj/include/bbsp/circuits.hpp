#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbsp/counter.hpp"
#include "bbsp/statevector.hpp"

namespace bbsp {

// functional: per-component XOR of the flag.
// circuit: one temporary logical-AND per bit, n Toffolis, n workspace qubits.
// cdkm: majority ripple with one carry qubit, 2n-1 Toffolis.
enum class ComparatorBackend { functional, circuit, cdkm };

ComparatorBackend parse_backend(const std::string& text);
std::string to_string(ComparatorBackend backend);

// Toffolis tallied per comparator call. The functional backend tallies
// the circuit count so that totals do not depend on the backend.
int comparator_toffolis(ComparatorBackend backend, int n);
// Clean qubits a comparator call borrows from the top of the anc register.
int comparator_workspace(ComparatorBackend backend, int n);

// flag ^= [a >= b] on every basis component. Workspace comes from the top
// of the anc register and is returned clean. With require_clean the flag
// and workspace must be zero on every component of nonzero amplitude.
void comparator(StateVector& state, QubitRange a, QubitRange b, int flag, ComparatorBackend backend,
                GateCounter& counter, bool require_clean = false);

void comparator(StateVector& state, Reg a, Reg b, int flag, ComparatorBackend backend, GateCounter& counter,
                bool require_clean = false);

void hadamard_layer(StateVector& state, Reg reg);
void hadamard_layer(StateVector& state, QubitRange range);

// H on ref qubit j wherever data holds a value Lambda > 2^j, so ref spreads
// over [0, 2^ceil(log2 Lambda)). Components outside `support` are untouched.
// Tallies ceil(log2 max Lambda) over supported components of nonzero amplitude.
void controlled_hadamard_layer(StateVector& state, Reg data, Reg ref, GateCounter& counter,
                               const std::optional<BasisPredicate>& support = std::nullopt);

// -1 on components whose listed registers are all zero.
void reflect_about_zero(StateVector& state, const std::vector<Reg>& regs, GateCounter& counter);

// -1 on components matching `pred`.
void reflect_about(StateVector& state, const BasisPredicate& pred, GateCounter& counter);

}  // namespace bbsp
