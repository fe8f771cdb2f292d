#include "bbsp/spec_io.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

namespace bbsp {

namespace {

using nlohmann::json;

// Builds a DOM where every number is stored as its literal text.
class LiteralNumbers {
public:
    explicit LiteralNumbers(json& root) : root_(root) {}

    bool null() { return put(nullptr); }
    bool boolean(bool v) { return put(v); }
    bool number_integer(json::number_integer_t v) { return put(std::to_string(v)); }
    bool number_unsigned(json::number_unsigned_t v) { return put(std::to_string(v)); }
    bool number_float(json::number_float_t, const json::string_t& text) { return put(text); }
    bool string(json::string_t& v) { return put(v); }
    bool binary(json::binary_t&) { throw ArgumentError("binary values are not supported"); }
    bool start_object(std::size_t) {
        stack_.push_back(place(json::object()));
        return true;
    }
    bool key(json::string_t& k) {
        key_ = k;
        return true;
    }
    bool end_object() {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) {
        stack_.push_back(place(json::array()));
        return true;
    }
    bool end_array() {
        stack_.pop_back();
        return true;
    }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) {
        throw ArgumentError("malformed JSON at byte " + std::to_string(pos) + ": " + e.what());
    }

private:
    json* place(json v) {
        if (stack_.empty()) {
            root_ = std::move(v);
            return &root_;
        }
        json& top = *stack_.back();
        if (top.is_array()) {
            top.push_back(std::move(v));
            return &top.back();
        }
        top[key_] = std::move(v);
        return &top[key_];
    }
    bool put(json v) {
        place(std::move(v));
        return true;
    }

    json& root_;
    std::vector<json*> stack_;
    std::string key_;
};

int as_int(const json& v, const char* what) {
    if (!v.is_string()) throw ArgumentError(std::string("'") + what + "' must be a number");
    const std::string& s = v.get_ref<const std::string&>();
    std::size_t used = 0;
    int out = 0;
    try {
        out = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size()) throw ArgumentError(std::string("'") + what + "' must be an integer");
    return out;
}

std::string as_decimal(const json& v) {
    if (!v.is_string()) throw ArgumentError("values must be numbers");
    return v.get<std::string>();
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw ArgumentError("not a decimal: '" + s + "'");
    return out;
}

}  // namespace

AmplitudeSpec parse_spec(const std::string& text) {
    json root;
    LiteralNumbers handler(root);
    json::sax_parse(text, &handler);
    if (!root.is_object()) throw ArgumentError("spec must be a JSON object");
    for (const char* k : {"d", "n", "form", "values"})
        if (!root.contains(k)) throw ArgumentError(std::string("spec is missing '") + k + "'");

    AmplitudeSpec spec;
    spec.d = as_int(root["d"], "d");
    spec.n = as_int(root["n"], "n");
    spec.form = parse_form(root["form"].is_string() ? root["form"].get<std::string>() : "");
    const json& values = root["values"];
    if (!values.is_array()) throw ArgumentError("'values' must be an array");
    for (const json& v : values) {
        std::array<std::string, 2> dec;
        if (spec.form == Form::real) {
            dec[0] = as_decimal(v);
            dec[1] = "0";
        } else {
            if (!v.is_array() || v.size() != 2) throw ArgumentError("polar and cartesian values must be pairs");
            dec = {as_decimal(v[0]), as_decimal(v[1])};
        }
        spec.values.push_back({to_double(dec[0]), to_double(dec[1])});
        spec.decimals.push_back(dec);
    }
    validate_spec(spec);
    return spec;
}

AmplitudeSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

AmplitudeSpec random_spec(int d, int n, Form form, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    AmplitudeSpec spec{d, n, form, {}, {}};
    for (int l = 0; l < d; ++l) {
        switch (form) {
            case Form::real: spec.values.push_back({unit(rng), 0.0}); break;
            case Form::polar: spec.values.push_back({unit(rng), 2 * std::numbers::pi * unit(rng)}); break;
            case Form::cartesian: spec.values.push_back({2 * unit(rng) - 1, 2 * unit(rng) - 1}); break;
        }
    }
    validate_spec(spec);
    return spec;
}

double round12(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return std::strtod(buf, nullptr) + 0.0;
}

nlohmann::ordered_json to_json(const PrepResult& r, int n, int d) {
    nlohmann::ordered_json j;
    j["problem"] = to_string(r.problem);
    j["n"] = n;
    j["d"] = d;
    j["rounds"] = r.rounds;
    j["success_probability"] = round12(r.success_probability);
    j["fidelity"] = round12(r.fidelity);
    j["counts"] = {{"toffoli", r.counts.toffoli},
                   {"oracle_queries", r.counts.oracle_queries},
                   {"controlled_hadamard", r.counts.controlled_hadamard},
                   {"phase_rotations", r.counts.phase_rotations},
                   {"reflections", r.counts.reflections},
                   {"headline", r.counts.headline()}};
    j["qubits"] = r.qubits;
    j["simulated_qubits"] = r.simulated_qubits;
    if (r.fpaa_length > 0) j["fpaa_length"] = r.fpaa_length;
    nlohmann::ordered_json amps = nlohmann::ordered_json::array();
    for (Eigen::Index l = 0; l < d; ++l)
        amps.push_back({round12(r.output(l).real()), round12(r.output(l).imag())});
    j["output"] = amps;
    return j;
}

}  // namespace bbsp
