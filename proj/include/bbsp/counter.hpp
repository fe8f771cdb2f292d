#pragma once

#include <string>

namespace bbsp {

enum class CountingMode { paper, full };

struct GateCounter {
    CountingMode mode = CountingMode::paper;
    long long toffoli = 0;
    long long oracle_queries = 0;
    long long controlled_hadamard = 0;
    long long phase_rotations = 0;
    long long reflections = 0;

    long long comparator_calls = 0;
    long long unif_prime_calls = 0;
    long long unif_inverse_calls = 0;

    // Non-Clifford total. Paper mode leaves out reflections and phase rotations.
    long long headline() const {
        long long total = toffoli + controlled_hadamard;
        if (mode == CountingMode::full) total += reflections + phase_rotations;
        return total;
    }
};

CountingMode parse_counting_mode(const std::string& text);
std::string to_string(CountingMode mode);

}  // namespace bbsp
