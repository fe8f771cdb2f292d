#pragma once

#include <stdexcept>
#include <string>

namespace bbsp {

struct Tolerances {
    double norm = 1e-10;
    double unitarity = 1e-12;
    double purity = 1e-9;
    double exactness = 1e-10;
    // Slack on fixed-point bounds; equiripple sequences touch the bound exactly.
    double contract = 1e-13;
};

inline constexpr Tolerances tolerances{};

inline constexpr int default_qubit_cap = 26;
inline constexpr int max_precision_bits = 16;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Layout exceeds the qubit cap or a register is too small.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// A precondition on quantum state content was violated.
class ContractError : public Error {
public:
    using Error::Error;
};

// Zero target norm, zero postselection mass, or an undefined data value.
class DegenerateError : public Error {
public:
    using Error::Error;
};

class EntanglementError : public Error {
public:
    using Error::Error;
};

}  // namespace bbsp
