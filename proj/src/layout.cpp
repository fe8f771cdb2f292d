#include "bbsp/layout.hpp"

#include <algorithm>
#include <vector>

#include "bbsp/counter.hpp"

namespace bbsp {

std::string to_string(Reg r) {
    switch (r) {
        case Reg::out: return "out";
        case Reg::data: return "data";
        case Reg::ref: return "ref";
        case Reg::flag: return "flag";
        case Reg::anc: return "anc";
    }
    return "?";
}

int QubitRange::qubit(int i) const {
    if (i < 0 || i >= width) throw ArgumentError("register bit " + std::to_string(i) + " out of range");
    return offset + i;
}

QubitRange QubitRange::low(int bits) const {
    if (bits < 0 || bits > width) throw ArgumentError("sub-range wider than register");
    return {offset, bits};
}

int RegisterLayout::total() const {
    int t = 0;
    for (const auto& r : ranges) t += r.width;
    return t;
}

void RegisterLayout::validate() const {
    for (const auto& r : ranges)
        if (r.offset < 0 || r.width < 0) throw ArgumentError("negative register offset or width");
    if ((*this)[Reg::out].width < 1) throw ArgumentError("out register needs at least one qubit");
    if ((*this)[Reg::data].width < 1) throw ArgumentError("data register needs at least one qubit");
    const int m = total();
    if (m > cap) throw ResourceError("layout needs " + std::to_string(m) + " qubits, cap is " + std::to_string(cap));
    if (m > 62) throw ResourceError("layout exceeds 62 qubits");
    std::vector<int> owner(m, -1);
    for (int k = 0; k < 5; ++k) {
        const auto& r = ranges[k];
        for (int q = r.offset; q < r.end(); ++q) {
            if (q >= m) throw ArgumentError("registers do not cover a contiguous qubit range");
            if (owner[q] != -1)
                throw ArgumentError("registers " + to_string(all_registers[owner[q]]) + " and " +
                                    to_string(all_registers[k]) + " overlap");
            owner[q] = k;
        }
    }
}

RegisterLayout make_layout(int out_width, int data_width, int ref_width, int flag_width, int anc_width, int cap) {
    RegisterLayout layout;
    layout.cap = cap;
    int offset = 0;
    const std::array<int, 5> widths{out_width, data_width, ref_width, flag_width, anc_width};
    for (int k = 0; k < 5; ++k) {
        layout.ranges[k] = {offset, widths[k]};
        offset += widths[k];
    }
    layout.validate();
    return layout;
}

int ceil_log2(std::uint64_t x) {
    int k = 0;
    while ((std::uint64_t{1} << k) < x) ++k;
    return k;
}

int out_width_for(int d) {
    if (d < 1) throw ArgumentError("d must be positive");
    return std::max(1, ceil_log2(static_cast<std::uint64_t>(d)));
}

int padded_dimension(int d) {
    if (d < 1) throw ArgumentError("d must be positive");
    return 1 << ceil_log2(static_cast<std::uint64_t>(d));
}

CountingMode parse_counting_mode(const std::string& text) {
    if (text == "paper" || text == "paper-accounting") return CountingMode::paper;
    if (text == "full") return CountingMode::full;
    throw ArgumentError("unknown counting mode '" + text + "'");
}

std::string to_string(CountingMode mode) { return mode == CountingMode::paper ? "paper" : "full"; }

}  // namespace bbsp
