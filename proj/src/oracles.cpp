#include "bbsp/oracles.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "bbsp/resources.hpp"

namespace bbsp {

Form parse_form(const std::string& text) {
    if (text == "real") return Form::real;
    if (text == "polar") return Form::polar;
    if (text == "cartesian") return Form::cartesian;
    throw ArgumentError("unknown form '" + text + "'");
}

std::string to_string(Form form) {
    switch (form) {
        case Form::real: return "real";
        case Form::polar: return "polar";
        case Form::cartesian: return "cartesian";
    }
    return "?";
}

namespace {

void check_bits(int n) {
    if (n < 1 || n > max_precision_bits)
        throw ArgumentError("precision bits must lie in [1, " + std::to_string(max_precision_bits) + "]");
}

struct Decimal {
    bool negative = false;
    std::string integer;   // digits before the point, leading zeros stripped
    std::string fraction;  // digits after the point
};

Decimal parse_decimal(std::string_view text) {
    std::size_t p = 0;
    Decimal out;
    if (p < text.size() && (text[p] == '-' || text[p] == '+')) out.negative = text[p++] == '-';
    std::string digits;
    long point = -1;
    for (; p < text.size(); ++p) {
        char c = text[p];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
        } else if (c == '.' && point < 0) {
            point = static_cast<long>(digits.size());
        } else {
            break;
        }
    }
    if (digits.empty()) throw ArgumentError("malformed decimal '" + std::string(text) + "'");
    if (point < 0) point = static_cast<long>(digits.size());
    if (p < text.size()) {
        if (text[p] != 'e' && text[p] != 'E') throw ArgumentError("malformed decimal '" + std::string(text) + "'");
        ++p;
        bool neg = false;
        if (p < text.size() && (text[p] == '-' || text[p] == '+')) neg = text[p++] == '-';
        if (p == text.size()) throw ArgumentError("malformed decimal '" + std::string(text) + "'");
        long e = 0;
        for (; p < text.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(text[p])))
                throw ArgumentError("malformed decimal '" + std::string(text) + "'");
            e = std::min(e * 10 + (text[p] - '0'), 100000L);
        }
        point += neg ? -e : e;
    }
    if (point <= 0) {
        out.fraction = std::string(static_cast<std::size_t>(-point), '0') + digits;
    } else if (point >= static_cast<long>(digits.size())) {
        out.integer = digits + std::string(static_cast<std::size_t>(point) - digits.size(), '0');
    } else {
        out.integer = digits.substr(0, static_cast<std::size_t>(point));
        out.fraction = digits.substr(static_cast<std::size_t>(point));
    }
    out.integer.erase(0, out.integer.find_first_not_of('0') == std::string::npos
                             ? out.integer.size()
                             : out.integer.find_first_not_of('0'));
    return out;
}

bool all_zero_digits(const std::string& s) { return s.find_first_not_of('0') == std::string::npos; }

}  // namespace

FixedPointCode quantize(double value, int n) {
    check_bits(n);
    if (!std::isfinite(value) || std::abs(value) >= 1.0) throw ArgumentError("value outside (-1, 1)");
    FixedPointCode c;
    c.width = n;
    c.magnitude = static_cast<std::uint32_t>(std::floor(std::ldexp(std::abs(value), n)));
    c.negative = value < 0.0;
    return c;
}

FixedPointCode quantize_decimal(std::string_view text, int n) {
    check_bits(n);
    Decimal dec = parse_decimal(text);
    if (!dec.integer.empty()) throw ArgumentError("value outside (-1, 1): " + std::string(text));
    // Binary digits of the fraction by repeated doubling.
    std::string frac = dec.fraction;
    std::uint32_t mag = 0;
    for (int k = 0; k < n; ++k) {
        int carry = 0;
        for (std::size_t i = frac.size(); i-- > 0;) {
            int v = (frac[i] - '0') * 2 + carry;
            frac[i] = static_cast<char>('0' + v % 10);
            carry = v / 10;
        }
        mag = (mag << 1) | static_cast<std::uint32_t>(carry);
    }
    FixedPointCode c;
    c.width = n;
    c.magnitude = mag;
    c.negative = dec.negative && !all_zero_digits(dec.fraction);
    return c;
}

FixedPointCode quantize_argument(double arg, int n) {
    check_bits(n);
    if (!std::isfinite(arg)) throw ArgumentError("argument is not finite");
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(arg, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    FixedPointCode c;
    c.width = n;
    double code = std::floor(std::ldexp(r / two_pi, n));
    c.magnitude = static_cast<std::uint32_t>(std::min(code, std::ldexp(1.0, n) - 1));
    return c;
}

void validate_spec(const AmplitudeSpec& spec) {
    if (spec.d < 1) throw ArgumentError("d must be at least 1");
    check_bits(spec.n);
    if (static_cast<int>(spec.values.size()) != spec.d)
        throw ArgumentError("expected " + std::to_string(spec.d) + " values, got " + std::to_string(spec.values.size()));
    if (!spec.decimals.empty() && spec.decimals.size() != spec.values.size())
        throw ArgumentError("decimal text does not match the values");
    for (std::size_t l = 0; l < spec.values.size(); ++l) {
        const auto& v = spec.values[l];
        if (!std::isfinite(v[0]) || !std::isfinite(v[1])) throw ArgumentError("non-finite value");
        switch (spec.form) {
            case Form::real:
                if (v[0] < 0.0 || v[0] >= 1.0) throw ArgumentError("real values must lie in [0, 1)");
                break;
            case Form::polar:
                if (v[0] < 0.0 || v[0] >= 1.0) throw ArgumentError("magnitudes must lie in [0, 1)");
                break;
            case Form::cartesian:
                if (std::abs(v[0]) >= 1.0 || std::abs(v[1]) >= 1.0)
                    throw ArgumentError("real and imaginary parts must lie in (-1, 1)");
                break;
        }
    }
}

QuantizedSpec quantize_spec(const AmplitudeSpec& spec) {
    validate_spec(spec);
    QuantizedSpec q;
    q.d = spec.d;
    q.n = spec.n;
    q.form = spec.form;
    const bool exact = !spec.decimals.empty();
    for (int l = 0; l < spec.d; ++l) {
        auto code = [&](int k) {
            return exact && !spec.decimals[l][k].empty() ? quantize_decimal(spec.decimals[l][k], spec.n)
                                                         : quantize(spec.values[l][k], spec.n);
        };
        q.first.push_back(code(0));
        if (spec.form == Form::polar)
            q.second.push_back(quantize_argument(spec.values[l][1], spec.n));
        else if (spec.form == Form::cartesian)
            q.second.push_back(code(1));
        else
            q.second.push_back(FixedPointCode{spec.n, 0, false});
        if (spec.form != Form::cartesian && q.first.back().negative)
            throw ArgumentError("magnitudes must be non-negative");
    }
    return q;
}

namespace {

PermutationOracle xor_write(const RegisterLayout& layout, std::vector<std::uint64_t> codes, int width) {
    const QubitRange out = layout[Reg::out];
    const QubitRange data = layout[Reg::data];
    if (data.width < width)
        throw ArgumentError("data register has " + std::to_string(data.width) + " qubits, oracle writes " +
                            std::to_string(width));
    codes.resize(std::size_t{1} << out.width, 0);
    return {[out, data, codes = std::move(codes)](std::uint64_t i) {
                return i ^ (codes[out.read(i)] << data.offset);
            },
            true, 1};
}

void check_labels(const QuantizedSpec& spec, const RegisterLayout& layout) {
    if ((std::uint64_t{1} << layout[Reg::out].width) < static_cast<std::uint64_t>(spec.d))
        throw ArgumentError("out register cannot index " + std::to_string(spec.d) + " labels");
}

}  // namespace

PermutationOracle make_amp_oracle(const QuantizedSpec& spec, const RegisterLayout& layout) {
    if (spec.form == Form::cartesian) throw ArgumentError("amp oracle needs a real or polar spec");
    check_labels(spec, layout);
    std::vector<std::uint64_t> codes;
    for (const auto& c : spec.first) codes.push_back(c.magnitude);
    return xor_write(layout, std::move(codes), spec.n);
}

PermutationOracle make_amp_oracle(const AmplitudeSpec& spec, const RegisterLayout& layout) {
    if (spec.form != Form::real) throw ArgumentError("amp oracle needs a real spec");
    return make_amp_oracle(quantize_spec(spec), layout);
}

std::pair<PermutationOracle, PermutationOracle> make_cartesian_oracles(const QuantizedSpec& spec,
                                                                       const RegisterLayout& layout) {
    if (spec.form != Form::cartesian) throw ArgumentError("cartesian oracles need a cartesian spec");
    check_labels(spec, layout);
    std::vector<std::uint64_t> re, im;
    for (int l = 0; l < spec.d; ++l) {
        re.push_back(spec.first[l].encoded());
        im.push_back(spec.second[l].encoded());
    }
    return {xor_write(layout, std::move(re), spec.n + 1), xor_write(layout, std::move(im), spec.n + 1)};
}

std::pair<PermutationOracle, PermutationOracle> make_cartesian_oracles(const AmplitudeSpec& spec,
                                                                       const RegisterLayout& layout) {
    return make_cartesian_oracles(quantize_spec(spec), layout);
}

std::pair<PermutationOracle, PermutationOracle> make_polar_oracles(const QuantizedSpec& spec,
                                                                   const RegisterLayout& layout) {
    if (spec.form != Form::polar) throw ArgumentError("polar oracles need a polar spec");
    check_labels(spec, layout);
    std::vector<std::uint64_t> mag, arg;
    for (int l = 0; l < spec.d; ++l) {
        mag.push_back(spec.first[l].magnitude);
        arg.push_back(spec.second[l].magnitude);
    }
    return {xor_write(layout, std::move(mag), spec.n), xor_write(layout, std::move(arg), spec.n)};
}

std::pair<PermutationOracle, PermutationOracle> make_polar_oracles(const AmplitudeSpec& spec,
                                                                   const RegisterLayout& layout) {
    return make_polar_oracles(quantize_spec(spec), layout);
}

PermutationOracle make_selected_oracle(PermutationOracle when_clear, PermutationOracle when_set, int selector) {
    const std::uint64_t bit = std::uint64_t{1} << selector;
    const bool involution = when_clear.involution && when_set.involution;
    return {[clear = std::move(when_clear.map), set = std::move(when_set.map), bit](std::uint64_t i) {
                std::uint64_t j = (i & bit) ? set(i) : clear(i);
                if ((j & bit) != (i & bit)) throw ContractError("selected oracle changed its selector");
                return j;
            },
            involution, 1};
}

void apply_rot_baseline(StateVector& state, QubitRange data, int flag, GateCounter& counter, int angle_bits) {
    const int n = data.width;
    const std::uint64_t fb = std::uint64_t{1} << flag;
    if (data.contains(flag)) throw ArgumentError("flag inside data register");
    auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        if (i & fb) continue;
        double t = std::asin(std::ldexp(static_cast<double>(data.read(i)), -n));
        if (angle_bits > 0) {
            const double unit = std::ldexp(std::numbers::pi / 2, -angle_bits);
            t = std::round(t / unit) * unit;
        }
        const double s = std::sin(t), c = std::cos(t);
        std::complex<double> x0 = a(i), x1 = a(i | fb);
        a(i) = s * x0 + c * x1;
        a(i | fb) = c * x0 - s * x1;
    }
    counter.phase_rotations += n;
    const auto& table = arcsine_toffoli_table();
    if (auto it = table.find(n); it != table.end()) counter.toffoli += it->second;
}

bool cartesian_root_inequality(std::int64_t x, std::int64_t a_code, std::int64_t b_code, int n, bool plus_branch) {
    using i128 = __int128;
    const i128 x2 = i128(x) * x;
    const i128 shift = i128(1) << n;
    const i128 a_term = (plus_branch ? i128(a_code) : -i128(a_code)) * shift;
    const i128 lhs = 4 * x2 * (x2 + a_term);
    const i128 rhs = i128(b_code) * b_code * shift * shift;
    return lhs < rhs;
}

std::int64_t cartesian_root_marked_count(std::int64_t a_code, std::int64_t b_code, int n, bool plus_branch) {
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < (std::int64_t{1} << n); ++x)
        if (cartesian_root_inequality(x, a_code, b_code, n, plus_branch)) ++count;
    return count;
}

PermutationOracle cartesian_root_inequality_oracle(const QuantizedSpec& spec, const RegisterLayout& layout,
                                                   int selector, int flag) {
    if (spec.form != Form::cartesian) throw ArgumentError("inequality oracle needs a cartesian spec");
    check_labels(spec, layout);
    const QubitRange out = layout[Reg::out];
    const QubitRange ref = layout[Reg::ref];
    if (ref.width != spec.n) throw ArgumentError("ref width must equal n");
    const std::uint64_t sb = std::uint64_t{1} << selector;
    const std::uint64_t fb = std::uint64_t{1} << flag;
    std::vector<std::int64_t> a(std::size_t{1} << out.width, 0), b(a.size(), 0);
    for (int l = 0; l < spec.d; ++l) {
        a[l] = spec.first[l].signed_value();
        b[l] = spec.second[l].signed_value();
    }
    const int n = spec.n;
    return {[=](std::uint64_t i) {
                const std::uint64_t l = out.read(i);
                const bool holds = cartesian_root_inequality(static_cast<std::int64_t>(ref.read(i)), a[l], b[l], n,
                                                             (i & sb) != 0);
                return holds ? i : (i ^ fb);
            },
            true, 2};
}

}  // namespace bbsp
