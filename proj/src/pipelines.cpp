#include <cmath>
#include <numbers>

#include "bbsp/stateprep.hpp"

namespace bbsp {

namespace {

// Hadamards on the ceil(log2 d) low qubits of out; none when d = 1.
void prepare_out(StateVector& state, int d) {
    const int bits = ceil_log2(static_cast<std::uint64_t>(d));
    for (int i = 0; i < bits; ++i) h(state, state.layout().qubit(Reg::out, i));
}

ComparatorBackend modeled(ComparatorBackend backend) {
    return backend == ComparatorBackend::functional ? ComparatorBackend::circuit : backend;
}

int anc_width(const PrepOptions& options, int n, int extra) {
    int w = comparator_workspace(options.backend, n);
    if (options.shared_workspace) w = std::max(w, n);
    return extra + w;
}

void require_form(const QuantizedSpec& spec, std::initializer_list<Form> forms) {
    for (Form f : forms)
        if (spec.form == f) return;
    throw ArgumentError("spec form '" + to_string(spec.form) + "' does not fit this problem");
}

struct Run {
    StateVector state;
    GateCounter counter;
    AASchedule schedule;
    int fpaa_length = 0;
    int model_qubits = 0;
};

AASchedule pick_schedule(double sin_theta, const PrepOptions& options) {
    return options.rounds ? schedule_with_rounds(sin_theta, *options.rounds) : schedule_from_amplitude(sin_theta);
}

Run run_linear(const QuantizedSpec& q, const PrepOptions& options) {
    const RegisterLayout layout = linear_layout(q, options);
    Run run{StateVector(layout), GateCounter{}, {}, 0, 0};
    run.counter.mode = options.counting;
    run.schedule = pick_schedule(initial_good_amplitude(q, Problem::linear), options);
    PreparationMap a = prepare_unitary_linear(q, layout, options.backend);
    a.forward(run.state, run.counter);
    amplitude_amplification(run.state, a, linear_good(layout), run.schedule.rounds, run.counter);
    apply_permutation_oracle(run.state, make_amp_oracle(q, layout), run.counter);
    run.model_qubits = layout[Reg::out].width + 2 * q.n + 1 + comparator_workspace(modeled(options.backend), q.n);
    return run;
}

Run run_root(const QuantizedSpec& q, const PrepOptions& options) {
    const RegisterLayout layout = root_layout(q, options);
    Run run{StateVector(layout), GateCounter{}, {}, 0, 0};
    run.counter.mode = options.counting;
    run.schedule = pick_schedule(initial_good_amplitude(q, Problem::root), options);
    PreparationMap a = prepare_unitary_root(q, layout, options.backend);
    a.forward(run.state, run.counter);
    amplitude_amplification(run.state, a, root_good(layout), run.schedule.rounds, run.counter);
    FPAASchedule fp = fixed_point_schedule(detail::table_delta, options.eps);
    run.fpaa_length = fp.length;
    unif_inverse(run.state, Reg::data, Reg::ref, layout.qubit(Reg::anc, 0), fp, options.backend, run.counter,
                 reg_equals(layout, Reg::flag, 0));
    apply_permutation_oracle(run.state, make_amp_oracle(q, layout), run.counter);
    run.model_qubits = layout[Reg::out].width + 2 * q.n + 2 + comparator_workspace(modeled(options.backend), q.n);
    return run;
}

PrepResult finish(Run&& run, Problem problem, Eigen::VectorXcd target) {
    const RegisterLayout& layout = run.state.layout();
    const BasisPredicate post = all_zero(layout, {Reg::data, Reg::ref, Reg::flag, Reg::anc});
    const double fid = fidelity(run.state, target, post);
    auto [selected, p] = postselect(run.state, post);
    PrepResult r{problem, std::move(selected), {}, std::move(target), run.schedule.rounds, run.schedule.theta,
                 run.schedule.predicted_success, p, fid, run.counter, run.model_qubits, layout.total(),
                 run.fpaa_length};
    r.output = r.state.amplitudes().head(Eigen::Index{1} << layout[Reg::out].width);
    return r;
}

Eigen::VectorXcd normalized(Eigen::VectorXcd v) {
    const double nrm = v.norm();
    if (!(nrm > 0.0)) throw DegenerateError("target has zero norm");
    return v / nrm;
}

}  // namespace

RegisterLayout linear_layout(const QuantizedSpec& spec, const PrepOptions& options) {
    return make_layout(out_width_for(spec.d), spec.n, spec.n, 1, anc_width(options, spec.n, 0), options.qubit_cap);
}

RegisterLayout root_layout(const QuantizedSpec& spec, const PrepOptions& options) {
    return make_layout(out_width_for(spec.d), spec.n, spec.n, 1, anc_width(options, spec.n, 1), options.qubit_cap);
}

RegisterLayout cartesian_layout(const QuantizedSpec& spec, const PrepOptions& options) {
    return make_layout(out_width_for(spec.d), spec.n + 1, spec.n, 2, anc_width(options, spec.n, 0),
                       options.qubit_cap);
}

BasisPredicate linear_good(const RegisterLayout& layout) { return all_zero(layout, {Reg::ref, Reg::flag, Reg::anc}); }
BasisPredicate root_good(const RegisterLayout& layout) { return all_zero(layout, {Reg::flag, Reg::anc}); }
BasisPredicate cartesian_good(const RegisterLayout& layout) {
    return all_zero(layout, {Reg::ref, Reg::flag, Reg::anc});
}

PreparationMap prepare_unitary_linear(const QuantizedSpec& spec, const RegisterLayout& layout,
                                      ComparatorBackend backend) {
    require_form(spec, {Form::real, Form::polar});
    PermutationOracle amp = make_amp_oracle(spec, layout);
    const int flag = layout.qubit(Reg::flag, 0);
    const int d = spec.d;
    auto body = [=](StateVector& s, GateCounter& c) {
        hadamard_layer(s, Reg::ref);
        comparator(s, Reg::ref, Reg::data, flag, backend, c);
        hadamard_layer(s, Reg::ref);
    };
    return {[=](StateVector& s, GateCounter& c) {
                prepare_out(s, d);
                apply_permutation_oracle(s, amp, c);
                body(s, c);
            },
            [=](StateVector& s, GateCounter& c) {
                body(s, c);
                apply_permutation_oracle(s, amp, c);
                prepare_out(s, d);
            }};
}

PreparationMap prepare_unitary_root(const QuantizedSpec& spec, const RegisterLayout& layout,
                                    ComparatorBackend backend) {
    require_form(spec, {Form::real, Form::polar});
    PermutationOracle amp = make_amp_oracle(spec, layout);
    const int flag = layout.qubit(Reg::flag, 0);
    const int d = spec.d;
    return {[=](StateVector& s, GateCounter& c) {
                prepare_out(s, d);
                apply_permutation_oracle(s, amp, c);
                hadamard_layer(s, Reg::ref);
                comparator(s, Reg::ref, Reg::data, flag, backend, c);
            },
            [=](StateVector& s, GateCounter& c) {
                comparator(s, Reg::ref, Reg::data, flag, backend, c);
                hadamard_layer(s, Reg::ref);
                apply_permutation_oracle(s, amp, c);
                prepare_out(s, d);
            }};
}

PreparationMap prepare_unitary_cartesian_linear(const QuantizedSpec& spec, const RegisterLayout& layout,
                                                ComparatorBackend backend) {
    require_form(spec, {Form::cartesian});
    const int flag = layout.qubit(Reg::flag, 0);
    const int selector = layout.qubit(Reg::flag, 1);
    const int sign = layout.qubit(Reg::data, spec.n);
    auto [re, im] = make_cartesian_oracles(spec, layout);
    PermutationOracle write = make_selected_oracle(re, im, selector);
    const QubitRange magnitude = layout[Reg::data].low(spec.n);
    const QubitRange ref = layout[Reg::ref];
    const int d = spec.d;
    auto middle = [=](StateVector& s, GateCounter& c) {
        hadamard_layer(s, Reg::ref);
        apply_permutation_oracle(s, write, c);
        z(s, sign);
        comparator(s, ref, magnitude, flag, backend, c);
        apply_permutation_oracle(s, write, c);
        hadamard_layer(s, Reg::ref);
    };
    return {[=](StateVector& s, GateCounter& c) {
                prepare_out(s, d);
                h(s, selector);
                sgate(s, selector);
                middle(s, c);
                h(s, selector);
            },
            [=](StateVector& s, GateCounter& c) {
                h(s, selector);
                middle(s, c);
                phase(s, selector, -std::numbers::pi / 2);
                h(s, selector);
                prepare_out(s, d);
            }};
}

PreparationMap prepare_unitary_cartesian_root(const QuantizedSpec& spec, const RegisterLayout& layout) {
    require_form(spec, {Form::cartesian});
    const int flag = layout.qubit(Reg::flag, 0);
    const int selector = layout.qubit(Reg::flag, 1);
    const int sign = layout.qubit(Reg::data, spec.n);
    PermutationOracle im = make_cartesian_oracles(spec, layout).second;
    PermutationOracle test = cartesian_root_inequality_oracle(spec, layout, selector, flag);
    const int d = spec.d;
    // The imaginary branch takes the sign of b from the data sign bit.
    auto middle = [=](StateVector& s, GateCounter& c) {
        hadamard_layer(s, Reg::ref);
        apply_permutation_oracle(s, im, c);
        cz(s, selector, sign);
        apply_permutation_oracle(s, test, c);
        apply_permutation_oracle(s, im, c);
        hadamard_layer(s, Reg::ref);
    };
    return {[=](StateVector& s, GateCounter& c) {
                prepare_out(s, d);
                h(s, selector);
                sgate(s, selector);
                middle(s, c);
                h(s, selector);
            },
            [=](StateVector& s, GateCounter& c) {
                h(s, selector);
                middle(s, c);
                phase(s, selector, -std::numbers::pi / 2);
                h(s, selector);
                prepare_out(s, d);
            }};
}

Eigen::VectorXcd linear_target(const QuantizedSpec& spec) {
    Eigen::VectorXcd t(spec.d);
    for (int l = 0; l < spec.d; ++l) t(l) = double(spec.first[l].magnitude);
    return normalized(t);
}

Eigen::VectorXcd root_target(const QuantizedSpec& spec) {
    Eigen::VectorXcd t(spec.d);
    for (int l = 0; l < spec.d; ++l) t(l) = std::sqrt(double(spec.first[l].magnitude));
    return normalized(t);
}

Eigen::VectorXcd polar_target(const QuantizedSpec& spec, bool root) {
    Eigen::VectorXcd t(spec.d);
    for (int l = 0; l < spec.d; ++l) {
        const double mag = double(spec.first[l].magnitude);
        const double arg = 2 * std::numbers::pi * std::ldexp(double(spec.second[l].magnitude), -spec.n);
        t(l) = root ? std::polar(std::sqrt(mag), arg / 2) : std::polar(mag, arg);
    }
    return normalized(t);
}

Eigen::VectorXcd cartesian_linear_target(const QuantizedSpec& spec) {
    Eigen::VectorXcd t(spec.d);
    for (int l = 0; l < spec.d; ++l)
        t(l) = std::complex<double>(double(spec.first[l].signed_value()), double(spec.second[l].signed_value()));
    return normalized(t);
}

Eigen::VectorXcd cartesian_root_target(const QuantizedSpec& spec) {
    Eigen::VectorXcd t(spec.d);
    for (int l = 0; l < spec.d; ++l) {
        std::complex<double> v(double(spec.first[l].signed_value()), double(spec.second[l].signed_value()));
        std::complex<double> r = std::sqrt(v);
        // b = 0 with a < 0 takes the +i branch.
        if (spec.second[l].negative && r.imag() > 0) r = std::conj(r);
        t(l) = r;
    }
    return normalized(t);
}

Eigen::VectorXcd cartesian_root_count_target(const QuantizedSpec& spec) {
    Eigen::VectorXcd t(spec.d);
    for (int l = 0; l < spec.d; ++l) {
        const auto a = spec.first[l].signed_value();
        const auto b = spec.second[l].signed_value();
        const double re = double(cartesian_root_marked_count(a, b, spec.n, false));
        const double im = double(cartesian_root_marked_count(a, b, spec.n, true));
        t(l) = std::complex<double>(re, spec.second[l].negative ? -im : im);
    }
    return normalized(t);
}

Eigen::VectorXcd exact_target(const AmplitudeSpec& spec, Problem problem) {
    Eigen::VectorXcd t(spec.d);
    for (int l = 0; l < spec.d; ++l) {
        const auto& v = spec.values[l];
        switch (problem) {
            case Problem::linear: t(l) = v[0]; break;
            case Problem::root: t(l) = std::sqrt(v[0]); break;
            case Problem::polar_linear: t(l) = std::polar(v[0], v[1]); break;
            case Problem::polar_root: {
                double arg = std::fmod(v[1], 2 * std::numbers::pi);
                if (arg < 0) arg += 2 * std::numbers::pi;
                t(l) = std::polar(std::sqrt(v[0]), arg / 2);
                break;
            }
            case Problem::cartesian_linear: t(l) = std::complex<double>(v[0], v[1]); break;
            case Problem::cartesian_root: {
                std::complex<double> r = std::sqrt(std::complex<double>(v[0], v[1]));
                if (v[1] < 0 && r.imag() > 0) r = std::conj(r);
                t(l) = r;
                break;
            }
        }
    }
    return normalized(t);
}

double state_fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    const Eigen::Index n = std::max(a.size(), b.size());
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n), y = Eigen::VectorXcd::Zero(n);
    x.head(a.size()) = a;
    y.head(b.size()) = b;
    return std::norm(x.dot(y)) / (x.squaredNorm() * y.squaredNorm());
}

PrepResult prepare_linear(const AmplitudeSpec& spec, const PrepOptions& options) {
    QuantizedSpec q = quantize_spec(spec);
    require_form(q, {Form::real});
    Eigen::VectorXcd target = linear_target(q);
    return finish(run_linear(q, options), Problem::linear, std::move(target));
}

PrepResult prepare_root(const AmplitudeSpec& spec, const PrepOptions& options) {
    QuantizedSpec q = quantize_spec(spec);
    require_form(q, {Form::real});
    Eigen::VectorXcd target = root_target(q);
    return finish(run_root(q, options), Problem::root, std::move(target));
}

PrepResult prepare_polar(const AmplitudeSpec& spec, bool root, const PrepOptions& options) {
    QuantizedSpec q = quantize_spec(spec);
    require_form(q, {Form::polar});
    Eigen::VectorXcd target = polar_target(q, root);
    Run run = root ? run_root(q, options) : run_linear(q, options);
    const RegisterLayout layout = run.state.layout();
    PermutationOracle arg = make_polar_oracles(q, layout).second;
    apply_permutation_oracle(run.state, arg, run.counter);
    const double unit = (root ? std::numbers::pi : 2 * std::numbers::pi) / std::ldexp(1.0, q.n);
    for (int j = 0; j < q.n; ++j) phase(run.state, layout.qubit(Reg::data, j), unit * std::ldexp(1.0, j));
    run.counter.phase_rotations += q.n;
    apply_permutation_oracle(run.state, arg, run.counter);
    return finish(std::move(run), root ? Problem::polar_root : Problem::polar_linear, std::move(target));
}

PrepResult prepare_cartesian_linear(const AmplitudeSpec& spec, const PrepOptions& options) {
    QuantizedSpec q = quantize_spec(spec);
    require_form(q, {Form::cartesian});
    Eigen::VectorXcd target = cartesian_linear_target(q);
    const RegisterLayout layout = cartesian_layout(q, options);
    Run run{StateVector(layout), GateCounter{}, {}, 0, 0};
    run.counter.mode = options.counting;
    run.schedule = pick_schedule(initial_good_amplitude(q, Problem::cartesian_linear), options);
    PreparationMap a = prepare_unitary_cartesian_linear(q, layout, options.backend);
    a.forward(run.state, run.counter);
    amplitude_amplification(run.state, a, cartesian_good(layout), run.schedule.rounds, run.counter);
    run.model_qubits = layout[Reg::out].width + 2 * q.n + 3 + comparator_workspace(modeled(options.backend), q.n);
    return finish(std::move(run), Problem::cartesian_linear, std::move(target));
}

PrepResult prepare_cartesian_root(const AmplitudeSpec& spec, const PrepOptions& options) {
    QuantizedSpec q = quantize_spec(spec);
    require_form(q, {Form::cartesian});
    Eigen::VectorXcd target = cartesian_root_target(q);
    PrepOptions local = options;
    local.backend = ComparatorBackend::functional;
    local.shared_workspace = false;
    const RegisterLayout layout = cartesian_layout(q, local);
    Run run{StateVector(layout), GateCounter{}, {}, 0, 0};
    run.counter.mode = options.counting;
    run.schedule = pick_schedule(initial_good_amplitude(q, Problem::cartesian_root), options);
    PreparationMap a = prepare_unitary_cartesian_root(q, layout);
    a.forward(run.state, run.counter);
    amplitude_amplification(run.state, a, cartesian_good(layout), run.schedule.rounds, run.counter);
    run.model_qubits = layout.total();
    return finish(std::move(run), Problem::cartesian_root, std::move(target));
}

PrepResult prepare_linear_rot(const AmplitudeSpec& spec, const PrepOptions& options, int angle_bits) {
    QuantizedSpec q = quantize_spec(spec);
    require_form(q, {Form::real});
    Eigen::VectorXcd target = linear_target(q);
    const RegisterLayout layout = make_layout(out_width_for(q.d), q.n, 0, 1, 0, options.qubit_cap);
    Run run{StateVector(layout), GateCounter{}, {}, 0, 0};
    run.counter.mode = options.counting;
    run.schedule = pick_schedule(initial_good_amplitude(q, Problem::linear), options);
    PermutationOracle amp = make_amp_oracle(q, layout);
    const QubitRange data = layout[Reg::data];
    const int flag = layout.qubit(Reg::flag, 0);
    const int d = q.d;
    PreparationMap a{[=](StateVector& s, GateCounter& c) {
                         prepare_out(s, d);
                         apply_permutation_oracle(s, amp, c);
                         apply_rot_baseline(s, data, flag, c, angle_bits);
                     },
                     [=](StateVector& s, GateCounter& c) {
                         apply_rot_baseline(s, data, flag, c, angle_bits);
                         apply_permutation_oracle(s, amp, c);
                         prepare_out(s, d);
                     }};
    a.forward(run.state, run.counter);
    amplitude_amplification(run.state, a, all_zero(layout, {Reg::flag}), run.schedule.rounds, run.counter);
    apply_permutation_oracle(run.state, amp, run.counter);
    run.model_qubits = layout.total();
    return finish(std::move(run), Problem::linear, std::move(target));
}

PrepResult prepare(const AmplitudeSpec& spec, Problem problem, const PrepOptions& options) {
    switch (problem) {
        case Problem::linear: return prepare_linear(spec, options);
        case Problem::root: return prepare_root(spec, options);
        case Problem::polar_linear: return prepare_polar(spec, false, options);
        case Problem::polar_root: return prepare_polar(spec, true, options);
        case Problem::cartesian_linear: return prepare_cartesian_linear(spec, options);
        case Problem::cartesian_root: return prepare_cartesian_root(spec, options);
    }
    throw ArgumentError("unknown problem");
}

}  // namespace bbsp
