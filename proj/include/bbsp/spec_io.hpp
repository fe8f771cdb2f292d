#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "bbsp/oracles.hpp"
#include "bbsp/stateprep.hpp"

namespace bbsp {

// {"d": int, "n": int, "form": "real"|"polar"|"cartesian", "values": [...]}.
// Real values are plain numbers, the other forms take pairs. The literal
// text of each number is kept so quantization is exact.
AmplitudeSpec parse_spec(const std::string& text);
AmplitudeSpec load_spec(const std::string& path);

// Values drawn uniformly: [0, 1) for real and magnitudes, [0, 2pi) for
// arguments, (-1, 1) for Cartesian parts.
AmplitudeSpec random_spec(int d, int n, Form form, std::uint64_t seed);

// Round to 12 significant digits.
double round12(double value);

nlohmann::ordered_json to_json(const PrepResult& result, int n, int d);

}  // namespace bbsp
