#include "bbsp/fpaa.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bbsp/config.hpp"

namespace bbsp {

std::vector<double> FPAASchedule::phases() const {
    std::vector<double> out{leading_phase};
    for (const auto& [first, second] : phase_pairs) {
        out.push_back(first);
        out.push_back(second);
    }
    return out;
}

FPAASchedule schedule_from_phases(const std::vector<double>& phases, double delta, double eps, bool coherent) {
    if (phases.size() % 2 != 1) throw ArgumentError("phase sequence length must be odd");
    FPAASchedule s;
    s.delta = delta;
    s.eps = eps;
    s.length = static_cast<int>(phases.size());
    s.leading_phase = phases[0];
    for (std::size_t j = 1; j + 1 < phases.size(); j += 2) s.phase_pairs.emplace_back(phases[j], phases[j + 1]);
    s.coherent = coherent;
    return s;
}

std::complex<double> fpaa_amplitude(const std::vector<double>& phases, double a) {
    const double s = std::sqrt(std::max(0.0, 1.0 - a * a));
    Eigen::Matrix2cd r;
    r << a, s, s, -a;
    Eigen::Vector2cd v(1.0, 0.0);
    for (auto it = phases.rbegin(); it != phases.rend(); ++it) {
        v = r * v;
        v(0) *= std::polar(1.0, *it);
        v(1) *= std::polar(1.0, -*it);
    }
    return v(0);
}

std::complex<double> fpaa_amplitude(const FPAASchedule& schedule, double a) {
    return fpaa_amplitude(schedule.phases(), a);
}

SweepReport sweep_fpaa(const std::vector<double>& phases, double lo, double hi, int samples) {
    SweepReport rep;
    for (int k = 0; k < samples; ++k) {
        double a = samples == 1 ? hi : lo + (hi - lo) * k / (samples - 1);
        std::complex<double> p = fpaa_amplitude(phases, a);
        rep.min_magnitude = std::min(rep.min_magnitude, std::abs(p));
        rep.max_deviation = std::max(rep.max_deviation, std::abs(1.0 - p));
        rep.max_phase = std::max(rep.max_phase, std::abs(std::arg(p)));
    }
    return rep;
}

namespace {

double magnitude_floor(double eps) { return std::sqrt(1.0 - eps * eps); }

void check_args(double delta, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("eps must lie in (0, 1)");
    if (!(delta > 0.0 && delta <= 1.0)) throw ArgumentError("delta must lie in (0, 1]");
}

std::vector<double> chebyshev_phases(int length, double eps) {
    const int l = (length - 1) / 2;
    const double gamma = 1.0 / std::cosh(std::acosh(1.0 / eps) / length);
    const double w = std::sqrt(1.0 - gamma * gamma);
    std::vector<double> alpha(l), beta(l);
    for (int j = 1; j <= l; ++j)
        alpha[j - 1] = 2.0 * std::atan(1.0 / (std::tan(2.0 * std::numbers::pi * j / length) * w));
    for (int j = 1; j <= l; ++j) beta[j - 1] = -alpha[l - j];
    // Round j reflects the target by beta_j and the start by -alpha_j; the
    // target reflection comes first.
    std::vector<double> phi(length, 0.0);
    for (int j = 1; j <= l; ++j) {
        phi[length - 2 * j + 1] = beta[j - 1] / 2.0;
        phi[length - 2 * j] = -alpha[j - 1] / 2.0;
    }
    return phi;
}

}  // namespace

bool satisfies_contract(const FPAASchedule& schedule, int samples) {
    SweepReport rep = sweep_fpaa(schedule.phases(), schedule.delta, 1.0, samples);
    const double floor = magnitude_floor(schedule.eps);
    if (schedule.coherent) return rep.max_deviation <= 1.0 - floor + tolerances.contract;
    return rep.min_magnitude >= floor - tolerances.contract;
}

FPAASchedule chebyshev_schedule(double delta, double eps) {
    check_args(delta, eps);
    int length = 1;
    if (delta < 1.0) {
        const double needed = std::acosh(1.0 / eps) / std::acosh(1.0 / std::sqrt(1.0 - delta * delta));
        length = std::max(1, static_cast<int>(std::ceil(needed - 1e-12)));
        if (length % 2 == 0) ++length;
    }
    for (const int stop = length + 40; length < stop; length += 2) {
        FPAASchedule s = schedule_from_phases(chebyshev_phases(length, eps), delta, eps, false);
        if (satisfies_contract(s)) return s;
    }
    throw ContractError("no Chebyshev schedule found");
}

FPAASchedule coherent_schedule(double delta, double eps) {
    check_args(delta, eps);
    FPAASchedule none;
    none.length = 0;
    if (delta < detail::table_delta - 1e-15) return none;
    for (const auto& row : detail::coherent_fpaa_table()) {
        if (row.worst_deviation > 1.0 - magnitude_floor(eps)) continue;
        FPAASchedule s = schedule_from_phases(row.phases, delta, eps, true);
        if (satisfies_contract(s)) return s;
    }
    return none;
}

FPAASchedule fixed_point_schedule(double delta, double eps) {
    FPAASchedule s = coherent_schedule(delta, eps);
    if (s.length > 0) return s;
    return chebyshev_schedule(delta, eps);
}

}  // namespace bbsp
