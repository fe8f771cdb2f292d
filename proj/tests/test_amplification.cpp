#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bbsp/stateprep.hpp"

using namespace bbsp;

TEST_CASE("round selection") {
    AASchedule s = schedule_from_amplitude(0.25);
    CHECK(s.rounds == 3);
    CHECK(s.theta == doctest::Approx(std::asin(0.25)));
    CHECK(s.predicted_success == doctest::Approx(std::pow(std::sin(7 * std::asin(0.25)), 2)));
    CHECK(s.predicted_success == doctest::Approx(0.961).epsilon(1e-3));
    CHECK(schedule_from_amplitude(1.0).rounds == 0);
    CHECK(schedule_from_amplitude(0.5).rounds == 1);
    CHECK(schedule_with_rounds(0.5, 0).predicted_success == doctest::Approx(0.25));
    CHECK_THROWS_AS(schedule_from_amplitude(0.0), DegenerateError);
    CHECK_THROWS_AS(schedule_with_rounds(0.5, -1), ArgumentError);
}

TEST_CASE("Grover iterate on a uniform register") {
    // good = out = 5 among 8 labels, a = 1/sqrt(8)
    RegisterLayout l = make_layout(3, 1, 0, 0, 0);
    PreparationMap h3{[](StateVector& s, GateCounter&) {
                          for (int q = 0; q < 3; ++q) h(s, q);
                      },
                      [](StateVector& s, GateCounter&) {
                          for (int q = 0; q < 3; ++q) h(s, q);
                      }};
    BasisPredicate good = reg_equals(l, Reg::out, 5);
    const double theta = std::asin(1 / std::sqrt(8.0));
    for (int k = 0; k <= 4; ++k) {
        StateVector s(l);
        GateCounter c;
        h3.forward(s, c);
        amplitude_amplification(s, h3, good, k, c);
        CHECK(probability(s, good) == doctest::Approx(std::pow(std::sin((2 * k + 1) * theta), 2)).epsilon(1e-12));
        CHECK(c.reflections == 2 * k);
        // phase convention: the good amplitude keeps the sign of sin((2k+1) theta)
        CHECK(s[5].real() == doctest::Approx(std::sin((2 * k + 1) * theta)).epsilon(1e-12));
    }
}

TEST_CASE("initial amplitudes from codes") {
    AmplitudeSpec spec{4, 2, Form::real, {{0.25, 0}, {0.25, 0}, {0.25, 0}, {0.25, 0}}, {}};
    QuantizedSpec q = quantize_spec(spec);
    CHECK(initial_good_amplitude(q, Problem::linear) == doctest::Approx(0.25));
    CHECK(initial_good_amplitude(q, Problem::root) == doctest::Approx(0.5));
    AmplitudeSpec zero{2, 2, Form::real, {{0.1, 0}, {0.2, 0}}, {}};
    CHECK_THROWS_AS(schedule_rounds(zero, Problem::linear), DegenerateError);
}

TEST_CASE("problem names") {
    for (Problem p : {Problem::linear, Problem::root, Problem::polar_linear, Problem::polar_root,
                      Problem::cartesian_linear, Problem::cartesian_root})
        CHECK(parse_problem(to_string(p)) == p);
    CHECK(uses_unif_inverse(Problem::polar_root));
    CHECK_FALSE(uses_unif_inverse(Problem::cartesian_root));
    CHECK_THROWS_AS(parse_problem("sqrt"), ArgumentError);
}
