#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bbsp/spec_io.hpp"
#include "bbsp/stateprep.hpp"

using namespace bbsp;
using cd = std::complex<double>;

namespace {

AmplitudeSpec real_spec(int n, std::vector<double> v) {
    AmplitudeSpec s{static_cast<int>(v.size()), n, Form::real, {}, {}};
    for (double x : v) s.values.push_back({x, 0.0});
    return s;
}

AmplitudeSpec cartesian_spec(int n, std::vector<cd> v) {
    AmplitudeSpec s{static_cast<int>(v.size()), n, Form::cartesian, {}, {}};
    for (cd x : v) s.values.push_back({x.real(), x.imag()});
    return s;
}

// Overlap up to a global phase.
double overlap(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return state_fidelity(a, b); }

// Brute-force good amplitude: norm of the projection of A|0> on `good`.
double good_norm(const StateVector& s, const BasisPredicate& good) { return std::sqrt(probability(s, good)); }

}  // namespace

TEST_CASE("linear example gives the quantized vector exactly") {
    PrepResult r = prepare_linear(real_spec(4, {0.75, 0.25}));
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.output(0) / r.output(1) - 3.0) < 1e-10);
    CHECK(r.rounds == schedule_rounds(real_spec(4, {0.75, 0.25}), Problem::linear).rounds);
    CHECK(r.success_probability == doctest::Approx(r.predicted_success).epsilon(1e-12));
    CHECK(r.qubits == 1 + 3 * 4 + 1);
    // 2k + 2 queries: one in A, two per round, one to reset data
    CHECK(r.counts.oracle_queries == 2 * r.rounds + 2);
}

TEST_CASE("k = 0 success is sin^2 theta") {
    PrepOptions o;
    o.rounds = 0;
    AmplitudeSpec spec = real_spec(3, {0.5, 0.375, 0.125});
    PrepResult r = prepare_linear(spec, o);
    const double a = std::sqrt(0.25 + 0.140625 + 0.015625) / 2;
    CHECK(r.success_probability == doctest::Approx(a * a).epsilon(1e-12));
}

TEST_CASE("pre-amplification amplitudes by brute force") {
    AmplitudeSpec spec = random_spec(4, 4, Form::real, 3);
    QuantizedSpec q = quantize_spec(spec);
    double s1 = 0, s2 = 0;
    for (auto& c : q.first) s1 += c.magnitude, s2 += double(c.magnitude) * c.magnitude;

    PrepOptions o;
    RegisterLayout l = linear_layout(q, o);
    StateVector s(l);
    GateCounter c;
    prepare_unitary_linear(q, l, o.backend).forward(s, c);
    CHECK(good_norm(s, linear_good(l)) == doctest::Approx(std::sqrt(s2) / (16 * 2)).epsilon(1e-12));

    l = root_layout(q, o);
    StateVector r(l);
    prepare_unitary_root(q, l, o.backend).forward(r, c);
    CHECK(good_norm(r, root_good(l)) == doctest::Approx(std::sqrt(s1 / (16 * 4))).epsilon(1e-12));
}

TEST_CASE("map inverses undo the forward maps") {
    AmplitudeSpec spec = random_spec(3, 3, Form::real, 9);
    QuantizedSpec q = quantize_spec(spec);
    PrepOptions o;
    o.backend = ComparatorBackend::circuit;
    for (int which = 0; which < 2; ++which) {
        RegisterLayout l = which ? root_layout(q, o) : linear_layout(q, o);
        PreparationMap a = which ? prepare_unitary_root(q, l, o.backend) : prepare_unitary_linear(q, l, o.backend);
        StateVector s(l);
        GateCounter c;
        a.forward(s, c);
        a.inverse(s, c);
        CHECK(std::abs(s[0] - 1.0) < 1e-12);
    }
    AmplitudeSpec cs = random_spec(3, 3, Form::cartesian, 9);
    QuantizedSpec cq = quantize_spec(cs);
    RegisterLayout l = cartesian_layout(cq, o);
    for (int which = 0; which < 2; ++which) {
        PreparationMap a = which ? prepare_unitary_cartesian_root(cq, l)
                                 : prepare_unitary_cartesian_linear(cq, l, o.backend);
        StateVector s(l);
        GateCounter c;
        a.forward(s, c);
        a.inverse(s, c);
        CHECK(std::abs(s[0] - 1.0) < 1e-12);
    }
}

TEST_CASE("AA success follows sin^2((2k+1) theta)") {
    for (int seed = 0; seed < 4; ++seed) {
        AmplitudeSpec spec = random_spec(2 + seed * 2, 3 + seed, Form::real, seed);
        for (int k = 0; k <= 4; ++k) {
            PrepOptions o;
            o.rounds = k;
            PrepResult r = prepare_linear(spec, o);
            CHECK(r.success_probability == doctest::Approx(std::pow(std::sin((2 * k + 1) * r.theta), 2)).epsilon(1e-9));
        }
    }
}

TEST_CASE("backends give the same state") {
    AmplitudeSpec spec = random_spec(4, 3, Form::real, 21);
    PrepOptions f, c, k;
    f.shared_workspace = true;
    c.backend = ComparatorBackend::circuit;
    k.backend = ComparatorBackend::cdkm;
    PrepResult rf = prepare_linear(spec, f), rc = prepare_linear(spec, c), rk = prepare_linear(spec, k);
    CHECK((rf.state.amplitudes() - rc.state.amplitudes()).norm() < 1e-10);
    CHECK((rf.output - rk.output).norm() < 1e-10);
    CHECK(rf.counts.toffoli == rc.counts.toffoli);
    CHECK(rk.counts.toffoli == rc.counts.toffoli / 3 * 5);
}

TEST_CASE("root pipeline") {
    AmplitudeSpec spec = random_spec(4, 4, Form::real, 5);
    PrepOptions o;
    o.eps = 1e-3;
    PrepResult r = prepare_root(spec, o);
    CHECK(r.fidelity >= 1 - 2e-3);
    CHECK(r.counts.unif_inverse_calls == 1);
    CHECK(r.fpaa_length > 0);
    CHECK(r.counts.unif_prime_calls == r.fpaa_length);
    o.eps = 1e-1;
    PrepResult loose = prepare_root(spec, o);
    CHECK(loose.fpaa_length < r.fpaa_length);
}

TEST_CASE("unif inverse resets a uniform ref") {
    const int n = 4;
    RegisterLayout l = make_layout(1, n, n, 1, 1);
    for (std::uint64_t lambda : {1u, 3u, 8u, 13u}) {
        StateVector s(l);
        s[0] = 0;
        for (std::uint64_t x = 0; x < lambda; ++x)
            s[l[Reg::ref].write(l[Reg::data].write(0, lambda), x)] = 1 / std::sqrt(double(lambda));
        GateCounter c;
        unif_inverse(s, Reg::data, Reg::ref, l.qubit(Reg::anc, 0), 1e-3, ComparatorBackend::functional, c);
        const cd back = s[l[Reg::data].write(0, lambda)];
        CHECK(std::norm(back) >= 1 - 1e-6);
        CHECK(std::abs(std::arg(back)) < 2e-3);
    }
}

TEST_CASE("polar pipelines attach the phase") {
    AmplitudeSpec spec{2, 4, Form::polar, {{0.5, std::numbers::pi / 2}, {0.5, std::numbers::pi}}, {}};
    PrepResult lin = prepare_polar(spec, false);
    CHECK(lin.fidelity == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(lin.output(1) / lin.output(0) - cd(0, 1)) < 1e-10);
    CHECK(lin.counts.phase_rotations == 4);
    PrepOptions o;
    o.eps = 1e-3;
    PrepResult root = prepare_polar(spec, true, o);
    CHECK(root.fidelity >= 1 - 2e-3);
    const cd ratio = root.output(1) / root.output(0);
    CHECK(std::abs(std::arg(ratio) - std::numbers::pi / 4) < 1e-2);
}

TEST_CASE("cartesian linear") {
    SUBCASE("purely real matches the linear problem with half the amplitude") {
        AmplitudeSpec re = real_spec(3, {0.5, 0.25, 0.875});
        AmplitudeSpec cs = cartesian_spec(3, {0.5, 0.25, 0.875});
        QuantizedSpec cq = quantize_spec(cs);
        CHECK(initial_good_amplitude(cq, Problem::cartesian_linear) ==
              doctest::Approx(initial_good_amplitude(quantize_spec(re), Problem::linear) / 2));
        PrepResult a = prepare_linear(re), b = prepare_cartesian_linear(cs);
        CHECK(overlap(a.output, b.output) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("i/2 on one label") {
        PrepResult r = prepare_cartesian_linear(cartesian_spec(3, {cd(0, 0.5)}));
        CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(r.theta == doctest::Approx(std::asin(0.25)));
    }
    SUBCASE("signs and phases") {
        AmplitudeSpec cs = cartesian_spec(3, {0.5, -0.5, cd(0, 0.5)});
        PrepResult r = prepare_cartesian_linear(cs);
        CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(r.output(1) / r.output(0) + 1.0) < 1e-10);
        CHECK(std::abs(r.output(2) / r.output(0) - cd(0, 1)) < 1e-10);
    }
    SUBCASE("pre-AA amplitude") {
        AmplitudeSpec cs = random_spec(4, 3, Form::cartesian, 8);
        QuantizedSpec q = quantize_spec(cs);
        double s2 = 0;
        for (int l = 0; l < 4; ++l)
            s2 += std::pow(double(q.first[l].magnitude), 2) + std::pow(double(q.second[l].magnitude), 2);
        PrepOptions o;
        RegisterLayout l = cartesian_layout(q, o);
        StateVector s(l);
        GateCounter c;
        prepare_unitary_cartesian_linear(q, l, o.backend).forward(s, c);
        CHECK(good_norm(s, cartesian_good(l)) == doctest::Approx(std::sqrt(s2) / (8 * 2 * 2)).epsilon(1e-12));
        // data is returned clean on the good branch
        CHECK(probability(s, cartesian_good(l) && !all_zero(l, {Reg::data})) < 1e-24);
    }
}

TEST_CASE("cartesian root") {
    AmplitudeSpec cs = cartesian_spec(6, {0.25, -0.25, cd(0, 0.25), cd(0.3, -0.4)});
    QuantizedSpec q = quantize_spec(cs);
    PrepResult r = prepare_cartesian_root(cs);
    CHECK(overlap(r.output.head(4), cartesian_root_count_target(q)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.fidelity >= 1 - 1e-2);
    // b < 0 puts a negative imaginary part on the last label
    CHECK(std::arg(r.output(3) / r.output(0)) < 0);
    CHECK(r.counts.oracle_queries == 4 * (2 * r.rounds + 1));
}

TEST_CASE("rot baseline targets the same state") {
    AmplitudeSpec spec = random_spec(4, 5, Form::real, 13);
    PrepResult comp = prepare_linear(spec);
    PrepResult rot = prepare_linear_rot(spec);
    CHECK(overlap(comp.output, rot.output) == doctest::Approx(1.0).epsilon(1e-10));
    PrepResult rounded = prepare_linear_rot(spec, {}, 6);
    CHECK(1 - overlap(comp.output, rounded.output) <= std::ldexp(1.0, -5 + 1));
}

TEST_CASE("degenerate and malformed specs") {
    CHECK_THROWS_AS(prepare_linear(real_spec(2, {0.1, 0.2})), DegenerateError);
    CHECK_THROWS_AS(prepare_linear(cartesian_spec(3, {0.5})), ArgumentError);
    AmplitudeSpec big = random_spec(8, 8, Form::real, 1);
    PrepOptions o;
    o.backend = ComparatorBackend::circuit;
    CHECK_THROWS_AS(prepare_linear(big, o), ResourceError);
}
