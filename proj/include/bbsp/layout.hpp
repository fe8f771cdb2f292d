#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bbsp/config.hpp"

namespace bbsp {

enum class Reg { out, data, ref, flag, anc };

inline constexpr std::array<Reg, 5> all_registers{Reg::out, Reg::data, Reg::ref, Reg::flag, Reg::anc};

std::string to_string(Reg r);

struct QubitRange {
    int offset = 0;
    int width = 0;

    int end() const { return offset + width; }
    bool contains(int q) const { return q >= offset && q < end(); }
    std::uint64_t mask() const {
        return width == 0 ? 0 : (((std::uint64_t{1} << width) - 1) << offset);
    }
    // Integer content of this range in basis index `index`, LSB first.
    std::uint64_t read(std::uint64_t index) const { return (index & mask()) >> offset; }
    std::uint64_t write(std::uint64_t index, std::uint64_t value) const {
        return (index & ~mask()) | ((value << offset) & mask());
    }
    int qubit(int i) const;
    QubitRange low(int bits) const;
};

// Named registers on contiguous qubit ranges. Qubit 0 is the least
// significant bit of the basis index.
struct RegisterLayout {
    std::array<QubitRange, 5> ranges{};
    int cap = default_qubit_cap;

    const QubitRange& operator[](Reg r) const { return ranges[static_cast<int>(r)]; }
    QubitRange& operator[](Reg r) { return ranges[static_cast<int>(r)]; }

    int total() const;
    std::uint64_t dimension() const { return std::uint64_t{1} << total(); }
    std::uint64_t read(std::uint64_t index, Reg r) const { return (*this)[r].read(index); }
    int qubit(Reg r, int i) const { return (*this)[r].qubit(i); }

    // Throws ArgumentError on overlap or gaps, ResourceError past the cap.
    void validate() const;
};

// out, data, ref, flag, anc packed in that order from qubit 0.
RegisterLayout make_layout(int out_width, int data_width, int ref_width, int flag_width, int anc_width,
                           int cap = default_qubit_cap);

int ceil_log2(std::uint64_t x);
// Out register width for d labels: max(1, ceil(log2 d)).
int out_width_for(int d);
// Number of labels reached by the Hadamard layer on out: 2^ceil(log2 d).
int padded_dimension(int d);

}  // namespace bbsp
