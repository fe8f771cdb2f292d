#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace bbsp {

// Phase sequence for fixed-point amplification. In the two-dimensional
// model with R(a) = [[a, s], [s, -a]] and ez(t) = diag(e^{it}, e^{-it}),
//
//     M = ez(phi_1) R ez(phi_2) R ... ez(phi_L) R,
//
// the good amplitude is M(0, 0). phi_1 is the leading phase and
// (phi_{2j}, phi_{2j+1}) the j-th pair.
struct FPAASchedule {
    double delta = 0.0;
    double eps = 0.0;
    int length = 1;
    double leading_phase = 0.0;
    std::vector<std::pair<double, double>> phase_pairs;
    // Coherent schedules bound |1 - P(a)| by 1 - sqrt(1 - eps^2), so the
    // phase of P stays flat across [delta, 1]. Otherwise only |P| is bounded.
    bool coherent = false;

    std::vector<double> phases() const;
};

FPAASchedule schedule_from_phases(const std::vector<double>& phases, double delta, double eps, bool coherent);

// Good amplitude M(0, 0) for initial amplitude a.
std::complex<double> fpaa_amplitude(const std::vector<double>& phases, double a);
std::complex<double> fpaa_amplitude(const FPAASchedule& schedule, double a);

struct SweepReport {
    double min_magnitude = 1.0;
    double max_deviation = 0.0;  // max |1 - P(a)|
    double max_phase = 0.0;      // max |arg P(a)|
};

// Sweeps a over [lo, hi] in `samples` evenly spaced points, endpoints included.
SweepReport sweep_fpaa(const std::vector<double>& phases, double lo, double hi, int samples);

bool satisfies_contract(const FPAASchedule& schedule, int samples = 4001);

// Shortest sequence meeting the contract. For delta >= 1/sqrt(2) this is a
// coherent sequence from the precomputed table; otherwise (or past the end of
// the table) it is the Chebyshev construction, which bounds |P| only.
FPAASchedule fixed_point_schedule(double delta, double eps);

// Chebyshev-derived phases with |P(a)| >= sqrt(1 - eps^2) on [delta, 1].
FPAASchedule chebyshev_schedule(double delta, double eps);

// Shortest coherent sequence, or nullopt-like schedule with length 0 when the
// table cannot reach eps.
FPAASchedule coherent_schedule(double delta, double eps);

namespace detail {

struct TabulatedSequence {
    int length;
    double worst_deviation;
    std::vector<double> phases;
};

inline constexpr double table_delta = 0.70710678118654752440;

const std::vector<TabulatedSequence>& coherent_fpaa_table();

}  // namespace detail

}  // namespace bbsp
