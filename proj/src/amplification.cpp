#include <cmath>
#include <numbers>

#include "bbsp/stateprep.hpp"

namespace bbsp {

Problem parse_problem(const std::string& text) {
    if (text == "linear") return Problem::linear;
    if (text == "root") return Problem::root;
    if (text == "polar-linear") return Problem::polar_linear;
    if (text == "polar-root") return Problem::polar_root;
    if (text == "cartesian-linear") return Problem::cartesian_linear;
    if (text == "cartesian-root") return Problem::cartesian_root;
    throw ArgumentError("unknown problem '" + text + "'");
}

std::string to_string(Problem problem) {
    switch (problem) {
        case Problem::linear: return "linear";
        case Problem::root: return "root";
        case Problem::polar_linear: return "polar-linear";
        case Problem::polar_root: return "polar-root";
        case Problem::cartesian_linear: return "cartesian-linear";
        case Problem::cartesian_root: return "cartesian-root";
    }
    return "?";
}

bool uses_unif_inverse(Problem problem) { return problem == Problem::root || problem == Problem::polar_root; }

AASchedule schedule_with_rounds(double sin_theta, int rounds) {
    if (!(sin_theta > 0.0) || sin_theta > 1.0 + 1e-12) throw DegenerateError("initial good amplitude is zero");
    if (rounds < 0) throw ArgumentError("rounds must be non-negative");
    AASchedule s;
    s.theta = std::asin(std::min(1.0, sin_theta));
    s.rounds = rounds;
    double v = std::sin((2 * rounds + 1) * s.theta);
    s.predicted_success = v * v;
    return s;
}

AASchedule schedule_from_amplitude(double sin_theta) {
    if (!(sin_theta > 0.0)) throw DegenerateError("initial good amplitude is zero");
    const double theta = std::asin(std::min(1.0, sin_theta));
    const int k = std::max(0, static_cast<int>(std::lround(std::numbers::pi / (4 * theta) - 0.5)));
    return schedule_with_rounds(sin_theta, k);
}

double initial_good_amplitude(const QuantizedSpec& spec, Problem problem) {
    const double scale = std::ldexp(1.0, spec.n);
    const double dim = padded_dimension(spec.d);
    double v = 0.0;
    switch (problem) {
        case Problem::linear:
        case Problem::polar_linear: {
            double s2 = 0.0;
            for (const auto& c : spec.first) s2 += double(c.magnitude) * c.magnitude;
            v = std::sqrt(s2) / (scale * std::sqrt(dim));
            break;
        }
        case Problem::root:
        case Problem::polar_root: {
            double s1 = 0.0;
            for (const auto& c : spec.first) s1 += c.magnitude;
            v = std::sqrt(s1 / (scale * dim));
            break;
        }
        case Problem::cartesian_linear: {
            double s2 = 0.0;
            for (int l = 0; l < spec.d; ++l)
                s2 += double(spec.first[l].magnitude) * spec.first[l].magnitude +
                      double(spec.second[l].magnitude) * spec.second[l].magnitude;
            v = std::sqrt(s2) / (2 * scale * std::sqrt(dim));
            break;
        }
        case Problem::cartesian_root: {
            double s2 = 0.0;
            for (int l = 0; l < spec.d; ++l) {
                double re = cartesian_root_marked_count(spec.first[l].signed_value(), spec.second[l].signed_value(),
                                                        spec.n, false);
                double im = cartesian_root_marked_count(spec.first[l].signed_value(), spec.second[l].signed_value(),
                                                        spec.n, true);
                s2 += re * re + im * im;
            }
            v = std::sqrt(s2) / (2 * scale * std::sqrt(dim));
            break;
        }
    }
    if (!(v > 0.0)) throw DegenerateError("quantized amplitudes are all zero");
    return v;
}

AASchedule schedule_rounds(const QuantizedSpec& spec, Problem problem) {
    return schedule_from_amplitude(initial_good_amplitude(spec, problem));
}

AASchedule schedule_rounds(const AmplitudeSpec& spec, Problem problem) {
    return schedule_rounds(quantize_spec(spec), problem);
}

void amplitude_amplification(StateVector& state, const PreparationMap& prep, const BasisPredicate& good, int rounds,
                             GateCounter& counter) {
    if (rounds < 0) throw ArgumentError("rounds must be non-negative");
    std::vector<Reg> everything(all_registers.begin(), all_registers.end());
    for (int r = 0; r < rounds; ++r) {
        reflect_about(state, good, counter);
        prep.inverse(state, counter);
        reflect_about_zero(state, everything, counter);
        prep.forward(state, counter);
        state.amplitudes() *= -1.0;
    }
}

}  // namespace bbsp
