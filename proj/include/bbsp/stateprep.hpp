#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>

#include "bbsp/circuits.hpp"
#include "bbsp/counter.hpp"
#include "bbsp/fpaa.hpp"
#include "bbsp/oracles.hpp"
#include "bbsp/statevector.hpp"

namespace bbsp {

enum class Problem { linear, root, polar_linear, polar_root, cartesian_linear, cartesian_root };

Problem parse_problem(const std::string& text);
std::string to_string(Problem problem);
bool uses_unif_inverse(Problem problem);

struct AASchedule {
    double theta = 0.0;
    int rounds = 0;
    double predicted_success = 0.0;
};

// k = round(pi / (4 theta) - 1/2) clamped at zero, theta = asin(sin_theta).
AASchedule schedule_from_amplitude(double sin_theta);
AASchedule schedule_with_rounds(double sin_theta, int rounds);

// Initial good amplitude sin(theta) of the problem, from quantized codes.
double initial_good_amplitude(const QuantizedSpec& spec, Problem problem);
AASchedule schedule_rounds(const QuantizedSpec& spec, Problem problem);
AASchedule schedule_rounds(const AmplitudeSpec& spec, Problem problem);

// A state-preparation map with its inverse.
struct PreparationMap {
    std::function<void(StateVector&, GateCounter&)> forward;
    std::function<void(StateVector&, GateCounter&)> inverse;
};

// k rounds of -A S_0 A^dag S_good. S_0 reflects about the all-zero state.
void amplitude_amplification(StateVector& state, const PreparationMap& prep, const BasisPredicate& good, int rounds,
                             GateCounter& counter);

struct PrepOptions {
    ComparatorBackend backend = ComparatorBackend::functional;
    std::optional<int> rounds;
    double eps = 1e-3;
    CountingMode counting = CountingMode::paper;
    int qubit_cap = default_qubit_cap;
    // Allocate comparator workspace even for the functional backend, so
    // states from different backends share one layout.
    bool shared_workspace = false;
};

struct PrepResult {
    Problem problem = Problem::linear;
    StateVector state;          // postselected full state
    Eigen::VectorXcd output;    // out-register amplitudes of `state`
    Eigen::VectorXcd target;    // normalized quantized target
    int rounds = 0;
    double theta = 0.0;
    double predicted_success = 0.0;
    double success_probability = 0.0;
    double fidelity = 0.0;
    GateCounter counts;
    int qubits = 0;             // model qubit count (with circuit workspace)
    int simulated_qubits = 0;
    int fpaa_length = 0;
};

// Layout and map A for the linear problem:
// H on out, amp, H on ref, comparator(ref, data -> flag), H on ref.
RegisterLayout linear_layout(const QuantizedSpec& spec, const PrepOptions& options);
PreparationMap prepare_unitary_linear(const QuantizedSpec& spec, const RegisterLayout& layout,
                                      ComparatorBackend backend);

// Root map: as linear without the final H on ref.
RegisterLayout root_layout(const QuantizedSpec& spec, const PrepOptions& options);
PreparationMap prepare_unitary_root(const QuantizedSpec& spec, const RegisterLayout& layout,
                                    ComparatorBackend backend);

// Cartesian maps use a two-qubit flag: bit 0 the comparison result,
// bit 1 the Re/Im selector.
RegisterLayout cartesian_layout(const QuantizedSpec& spec, const PrepOptions& options);
PreparationMap prepare_unitary_cartesian_linear(const QuantizedSpec& spec, const RegisterLayout& layout,
                                                ComparatorBackend backend);
PreparationMap prepare_unitary_cartesian_root(const QuantizedSpec& spec, const RegisterLayout& layout);

// Good subspaces.
BasisPredicate linear_good(const RegisterLayout& layout);
BasisPredicate root_good(const RegisterLayout& layout);
BasisPredicate cartesian_good(const RegisterLayout& layout);

// Ref spreads over [0, 2^ceil(log2 Lambda)) for data value Lambda, then
// anc ^= [ref >= data].
void unif_prime(StateVector& state, Reg data, Reg ref, int anc, ComparatorBackend backend, GateCounter& counter,
                const std::optional<BasisPredicate>& support = std::nullopt);
void unif_prime_inverse(StateVector& state, Reg data, Reg ref, int anc, ComparatorBackend backend,
                        GateCounter& counter, const std::optional<BasisPredicate>& support = std::nullopt);

// Fixed-point amplification of unif_prime; `schedule` must be coherent.
void unif(StateVector& state, Reg data, Reg ref, int anc, const FPAASchedule& schedule, ComparatorBackend backend,
          GateCounter& counter, const std::optional<BasisPredicate>& support = std::nullopt);
// Inverse of unif: maps ref uniform over [0, Lambda) to ref = 0 up to eps.
void unif_inverse(StateVector& state, Reg data, Reg ref, int anc, const FPAASchedule& schedule,
                  ComparatorBackend backend, GateCounter& counter,
                  const std::optional<BasisPredicate>& support = std::nullopt);
void unif_inverse(StateVector& state, Reg data, Reg ref, int anc, double eps, ComparatorBackend backend,
                  GateCounter& counter, const std::optional<BasisPredicate>& support = std::nullopt);

// Normalized targets over labels 0..d-1 from quantized codes.
Eigen::VectorXcd linear_target(const QuantizedSpec& spec);
Eigen::VectorXcd root_target(const QuantizedSpec& spec);
Eigen::VectorXcd polar_target(const QuantizedSpec& spec, bool root);
Eigen::VectorXcd cartesian_linear_target(const QuantizedSpec& spec);
// Principal square root of the quantized complex values.
Eigen::VectorXcd cartesian_root_target(const QuantizedSpec& spec);
// The vector the inequality test actually produces: marked counts per branch.
Eigen::VectorXcd cartesian_root_count_target(const QuantizedSpec& spec);

// Unquantized targets for error-scaling studies.
Eigen::VectorXcd exact_target(const AmplitudeSpec& spec, Problem problem);

PrepResult prepare_linear(const AmplitudeSpec& spec, const PrepOptions& options = {});
PrepResult prepare_root(const AmplitudeSpec& spec, const PrepOptions& options = {});
PrepResult prepare_polar(const AmplitudeSpec& spec, bool root, const PrepOptions& options = {});
PrepResult prepare_cartesian_linear(const AmplitudeSpec& spec, const PrepOptions& options = {});
PrepResult prepare_cartesian_root(const AmplitudeSpec& spec, const PrepOptions& options = {});

// Arcsine baseline for the linear problem: H on out, amp, rot on flag,
// AA on flag = 0, amp reset. angle_bits > 0 rounds the rotation angles.
PrepResult prepare_linear_rot(const AmplitudeSpec& spec, const PrepOptions& options = {}, int angle_bits = 0);

PrepResult prepare(const AmplitudeSpec& spec, Problem problem, const PrepOptions& options = {});

double state_fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

}  // namespace bbsp
