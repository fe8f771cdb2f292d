#include "bbsp/stateprep.hpp"

namespace bbsp {

void unif_prime(StateVector& state, Reg data, Reg ref, int anc, ComparatorBackend backend, GateCounter& counter,
                const std::optional<BasisPredicate>& support) {
    controlled_hadamard_layer(state, data, ref, counter, support);
    comparator(state, ref, data, anc, backend, counter);
    counter.unif_prime_calls += 1;
}

void unif_prime_inverse(StateVector& state, Reg data, Reg ref, int anc, ComparatorBackend backend,
                        GateCounter& counter, const std::optional<BasisPredicate>& support) {
    comparator(state, ref, data, anc, backend, counter);
    controlled_hadamard_layer(state, data, ref, counter, support);
    counter.unif_prime_calls += 1;
}

namespace {

void require_coherent(const FPAASchedule& schedule) {
    if (!schedule.coherent || schedule.length < 1)
        throw ContractError("uniform-superposition reset needs a phase-coherent fixed-point schedule");
}

// e^{i phi} on the projector, e^{-i phi} on its complement.
void projector_phase(StateVector& state, const BasisPredicate& projector, double phi, GateCounter& counter) {
    apply_subspace_phase(state, projector, phi, -phi);
    counter.reflections += 1;
}

}  // namespace

// M = ez(phi_1) R ez(phi_2) R ... ez(phi_L) R with R alternating between
// unif' (first and last) and its inverse. Phases after unif' act on anc = 0,
// phases after the inverse on ref = 0 and anc = 0.
void unif(StateVector& state, Reg data, Reg ref, int anc, const FPAASchedule& schedule, ComparatorBackend backend,
          GateCounter& counter, const std::optional<BasisPredicate>& support) {
    require_coherent(schedule);
    const RegisterLayout& layout = state.layout();
    const BasisPredicate target = qubits_zero(std::uint64_t{1} << anc);
    const BasisPredicate start = all_zero(layout, {ref}) && target;
    const std::vector<double> phi = schedule.phases();
    for (int k = schedule.length; k >= 1; --k) {
        if (k % 2 == 1) {
            unif_prime(state, data, ref, anc, backend, counter, support);
            projector_phase(state, target, phi[k - 1], counter);
        } else {
            unif_prime_inverse(state, data, ref, anc, backend, counter, support);
            projector_phase(state, start, phi[k - 1], counter);
        }
    }
}

void unif_inverse(StateVector& state, Reg data, Reg ref, int anc, const FPAASchedule& schedule,
                  ComparatorBackend backend, GateCounter& counter, const std::optional<BasisPredicate>& support) {
    require_coherent(schedule);
    const RegisterLayout& layout = state.layout();
    const BasisPredicate target = qubits_zero(std::uint64_t{1} << anc);
    const BasisPredicate start = all_zero(layout, {ref}) && target;
    const std::vector<double> phi = schedule.phases();
    for (int k = 1; k <= schedule.length; ++k) {
        if (k % 2 == 1) {
            projector_phase(state, target, -phi[k - 1], counter);
            unif_prime_inverse(state, data, ref, anc, backend, counter, support);
        } else {
            projector_phase(state, start, -phi[k - 1], counter);
            unif_prime(state, data, ref, anc, backend, counter, support);
        }
    }
    counter.unif_inverse_calls += 1;
}

void unif_inverse(StateVector& state, Reg data, Reg ref, int anc, double eps, ComparatorBackend backend,
                  GateCounter& counter, const std::optional<BasisPredicate>& support) {
    unif_inverse(state, data, ref, anc, fixed_point_schedule(detail::table_delta, eps), backend, counter, support);
}

}  // namespace bbsp
