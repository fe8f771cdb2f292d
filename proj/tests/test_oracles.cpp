#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <random>

#include "bbsp/oracles.hpp"
#include "bbsp/resources.hpp"

using namespace bbsp;
using boost::multiprecision::cpp_bin_float_50;
using boost::multiprecision::cpp_int;

namespace {

// Number of x in [0, 2^n) below 2^n * Re or Im of sqrt(a + ib), in 50 digits.
std::int64_t reference_count(std::int64_t a_code, std::int64_t b_code, int n, bool imaginary) {
    const cpp_bin_float_50 scale = boost::multiprecision::ldexp(cpp_bin_float_50(1), n);
    const cpp_bin_float_50 a = a_code / scale, b = b_code / scale;
    const cpp_bin_float_50 mod = sqrt(a * a + b * b);
    const cpp_bin_float_50 part = sqrt(imaginary ? (mod - a) / 2 : (mod + a) / 2);
    cpp_bin_float_50 bound = ceil(part * scale);
    // x = 0 fails the strict test when b = 0
    if (b_code == 0 && bound > 0) bound -= 1;
    return std::min<std::int64_t>(static_cast<std::int64_t>(bound), std::int64_t{1} << n);
}

bool reference_inequality(std::int64_t x, std::int64_t a, std::int64_t b, int n, bool plus) {
    const cpp_int s = cpp_int(1) << n;
    const cpp_int lhs = 4 * cpp_int(x) * x * (cpp_int(x) * x - (plus ? -1 : 1) * cpp_int(a) * s);
    return lhs < cpp_int(b) * b * s * s;
}

}  // namespace

TEST_CASE("quantize floors toward zero with the sign kept") {
    CHECK(quantize(0.75, 2).magnitude == 3);
    CHECK(quantize(0.74, 2).magnitude == 2);
    FixedPointCode c = quantize(-0.5, 3);
    CHECK(c.magnitude == 4);
    CHECK(c.negative);
    CHECK(c.encoded() == (4u | 8u));
    CHECK(c.signed_value() == -4);
    CHECK_THROWS_AS(quantize(1.0, 3), ArgumentError);
    CHECK_THROWS_AS(quantize(0.5, 0), ArgumentError);
}

TEST_CASE("decimal quantization is exact") {
    CHECK(quantize_decimal("0.75", 2).magnitude == 3);
    CHECK(quantize_decimal("0.0625", 4).magnitude == 1);
    CHECK(quantize_decimal("6.25e-2", 4).magnitude == 1);
    CHECK(quantize_decimal("625E-4", 4).magnitude == 1);
    CHECK(quantize_decimal("0.06249999999999999999999", 4).magnitude == 0);
    CHECK(quantize_decimal("-0.5", 1).negative);
    CHECK(quantize_decimal("0.999", 10).magnitude == 1022);
    CHECK_THROWS_AS(quantize_decimal("1.5", 3), ArgumentError);
    CHECK_THROWS_AS(quantize_decimal("0.5x", 3), ArgumentError);
    CHECK_THROWS_AS(quantize_decimal("", 3), ArgumentError);
}

TEST_CASE("argument quantization") {
    const double two_pi = 2 * std::acos(-1.0);
    CHECK(quantize_argument(0.0, 3).magnitude == 0);
    CHECK(quantize_argument(two_pi / 4, 3).magnitude == 2);
    CHECK(quantize_argument(-two_pi / 4, 3).magnitude == 6);
    CHECK(quantize_argument(two_pi * 1.25, 3).magnitude == 2);
}

TEST_CASE("amp oracle writes codes per label") {
    AmplitudeSpec spec{3, 3, Form::real, {{0.5, 0}, {0.25, 0}, {0.875, 0}}, {}};
    RegisterLayout l = make_layout(2, 3, 0, 0, 0);
    PermutationOracle amp = make_amp_oracle(spec, l);
    const std::uint64_t expect[] = {4, 2, 7, 0};
    for (std::uint64_t label = 0; label < 4; ++label)
        for (std::uint64_t z = 0; z < 8; ++z) {
            std::uint64_t i = l[Reg::data].write(label, z);
            CHECK(l.read(amp.map(i), Reg::data) == (z ^ expect[label]));
            CHECK(l.read(amp.map(i), Reg::out) == label);
        }
    CHECK(amp.involution);
}

TEST_CASE("cartesian oracles write sign-magnitude codes") {
    AmplitudeSpec spec{2, 2, Form::cartesian, {{0.5, -0.25}, {-0.75, 0.0}}, {}};
    RegisterLayout l = make_layout(1, 3, 0, 2, 0);
    auto [re, im] = make_cartesian_oracles(spec, l);
    CHECK(l.read(re.map(0), Reg::data) == 2);
    CHECK(l.read(im.map(0), Reg::data) == (1u | 4u));
    CHECK(l.read(re.map(1), Reg::data) == (3u | 4u));
    PermutationOracle sel = make_selected_oracle(re, im, l.qubit(Reg::flag, 1));
    const std::uint64_t with_sel = std::uint64_t{1} << l.qubit(Reg::flag, 1);
    CHECK(l.read(sel.map(0), Reg::data) == 2);
    CHECK(l.read(sel.map(with_sel), Reg::data) == 5);
}

TEST_CASE("rot baseline amplitudes") {
    const int n = 3;
    RegisterLayout l = make_layout(1, n, 0, 1, 0);
    for (std::uint64_t xi = 0; xi < 8; ++xi) {
        StateVector s(l);
        s[0] = 0;
        s[l[Reg::data].write(0, xi)] = 1;
        GateCounter c;
        apply_rot_baseline(s, l[Reg::data], l.qubit(Reg::flag, 0), c);
        CHECK(s[l[Reg::data].write(0, xi)].real() == doctest::Approx(xi / 8.0));
        CHECK(c.phase_rotations == n);
        apply_rot_baseline(s, l[Reg::data], l.qubit(Reg::flag, 0), c);
        CHECK(std::abs(s[l[Reg::data].write(0, xi)] - 1.0) < 1e-14);
    }
}

TEST_CASE("inequality matches exact integers") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 8; ++n) {
        std::uniform_int_distribution<std::int64_t> code(-(1 << n) + 1, (1 << n) - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const std::int64_t a = code(rng), b = code(rng);
            for (bool plus : {false, true}) {
                std::int64_t count = 0;
                for (std::int64_t x = 0; x < (1 << n); ++x) {
                    const bool ours = cartesian_root_inequality(x, a, b, n, plus);
                    CHECK(ours == reference_inequality(x, a, b, n, plus));
                    count += ours;
                }
                CHECK(count == cartesian_root_marked_count(a, b, n, plus));
                CHECK(count == reference_count(a, b, n, plus));
            }
        }
    }
}

TEST_CASE("marked counts of the worked cases") {
    const int n = 8;
    const std::int64_t one = 1 << n;
    // a = 1/4: real branch marks x in (0, 2^n / 2), imaginary none
    CHECK(cartesian_root_marked_count(one / 4, 0, n, false) == one / 2 - 1);
    CHECK(cartesian_root_marked_count(one / 4, 0, n, true) == 0);
    // a = -1/4
    CHECK(cartesian_root_marked_count(-one / 4, 0, n, false) == 0);
    CHECK(cartesian_root_marked_count(-one / 4, 0, n, true) == one / 2 - 1);
    // i/4: both branches near 2^n sqrt(1/8)
    const double expect = one * std::sqrt(1.0 / 8);
    CHECK(std::abs(cartesian_root_marked_count(0, one / 4, n, false) - expect) <= 1.0);
    CHECK(std::abs(cartesian_root_marked_count(0, one / 4, n, true) - expect) <= 1.0);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(validate_spec(AmplitudeSpec{2, 3, Form::real, {{0.5, 0}}, {}}), ArgumentError);
    CHECK_THROWS_AS(validate_spec(AmplitudeSpec{1, 3, Form::real, {{-0.5, 0}}, {}}), ArgumentError);
    CHECK_THROWS_AS(validate_spec(AmplitudeSpec{1, 17, Form::real, {{0.5, 0}}, {}}), ArgumentError);
    CHECK_NOTHROW(validate_spec(AmplitudeSpec{1, 3, Form::cartesian, {{-0.5, 0.5}}, {}}));
}
