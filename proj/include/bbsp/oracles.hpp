#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bbsp/counter.hpp"
#include "bbsp/statevector.hpp"

namespace bbsp {

enum class Form { real, polar, cartesian };

Form parse_form(const std::string& text);
std::string to_string(Form form);

// values[l] = {value, 0} (real), {magnitude, argument} (polar) or {re, im}
// (cartesian). When `decimals` is filled it holds the exact decimal text of
// each value and quantization uses it instead of the doubles.
struct AmplitudeSpec {
    int d = 0;
    int n = 0;
    Form form = Form::real;
    std::vector<std::array<double, 2>> values;
    std::vector<std::array<std::string, 2>> decimals;
};

void validate_spec(const AmplitudeSpec& spec);

// Sign-magnitude fixed-point code.
struct FixedPointCode {
    int width = 0;
    std::uint32_t magnitude = 0;
    bool negative = false;

    // Sign bit placed just above the magnitude bits.
    std::uint32_t encoded() const { return magnitude | (negative ? (std::uint32_t{1} << width) : 0u); }
    std::int64_t signed_value() const { return negative ? -std::int64_t(magnitude) : std::int64_t(magnitude); }
};

// floor(2^n |v|) with the sign of v; 0 quantizes to +0.
FixedPointCode quantize(double value, int n);
// Exact version reading a decimal literal such as "0.75", "-1e-3" or "3.5E-1".
FixedPointCode quantize_decimal(std::string_view text, int n);
// floor(2^n * arg / 2pi) after reducing arg into [0, 2pi).
FixedPointCode quantize_argument(double arg, int n);

struct QuantizedSpec {
    int d = 0;
    int n = 0;
    Form form = Form::real;
    std::vector<FixedPointCode> first;   // value, magnitude or real part
    std::vector<FixedPointCode> second;  // argument or imaginary part
};

QuantizedSpec quantize_spec(const AmplitudeSpec& spec);

// |l>|z> -> |l>|z xor alpha_l^(n)> on out (x) data. Labels l >= d write 0.
PermutationOracle make_amp_oracle(const QuantizedSpec& spec, const RegisterLayout& layout);
PermutationOracle make_amp_oracle(const AmplitudeSpec& spec, const RegisterLayout& layout);

// Sign-magnitude writes of Re and Im into data (width n + 1, sign on top).
std::pair<PermutationOracle, PermutationOracle> make_cartesian_oracles(const QuantizedSpec& spec,
                                                                       const RegisterLayout& layout);
std::pair<PermutationOracle, PermutationOracle> make_cartesian_oracles(const AmplitudeSpec& spec,
                                                                       const RegisterLayout& layout);

// Magnitude oracle and argument oracle for the polar form.
std::pair<PermutationOracle, PermutationOracle> make_polar_oracles(const QuantizedSpec& spec,
                                                                   const RegisterLayout& layout);
std::pair<PermutationOracle, PermutationOracle> make_polar_oracles(const AmplitudeSpec& spec,
                                                                   const RegisterLayout& layout);

// Applies `when_clear` where qubit `selector` is 0 and `when_set` where it is
// 1. Counts as one query.
PermutationOracle make_selected_oracle(PermutationOracle when_clear, PermutationOracle when_set, int selector);

// Arcsine baseline: flag |0> -> sin t |0> + cos t |1> with sin t = xi / 2^n
// for the data code xi, and |1> -> cos t |0> - sin t |1>. angle_bits > 0
// rounds t to that many bits of pi/2.
void apply_rot_baseline(StateVector& state, QubitRange data, int flag, GateCounter& counter, int angle_bits = 0);

// True when 4 x^2 (x^2 - s a 2^n) < b^2 2^(2n) with s = +1 (plus_branch false)
// or s = -1 (plus_branch true); a, b are signed n-bit codes.
bool cartesian_root_inequality(std::int64_t x, std::int64_t a_code, std::int64_t b_code, int n, bool plus_branch);

// flag ^= !inequality, reading x from ref, the branch from `selector` and
// the codes of label l from the spec. Tallies two queries (Re and Im).
PermutationOracle cartesian_root_inequality_oracle(const QuantizedSpec& spec, const RegisterLayout& layout,
                                                   int selector, int flag);

// Number of x in [0, 2^n) satisfying the inequality.
std::int64_t cartesian_root_marked_count(std::int64_t a_code, std::int64_t b_code, int n, bool plus_branch);

}  // namespace bbsp
