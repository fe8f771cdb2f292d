#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bbsp/config.hpp"
#include "bbsp/counter.hpp"
#include "bbsp/layout.hpp"

namespace bbsp {

template <typename Real>
class BasicStateVector {
public:
    using Complex = std::complex<Real>;
    using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    explicit BasicStateVector(const RegisterLayout& layout) : layout_(layout) {
        layout_.validate();
        amps_ = Amplitudes::Zero(static_cast<Eigen::Index>(layout_.dimension()));
        amps_(0) = Complex(1);
    }

    const RegisterLayout& layout() const { return layout_; }
    int qubits() const { return layout_.total(); }
    std::uint64_t dimension() const { return static_cast<std::uint64_t>(amps_.size()); }

    Amplitudes& amplitudes() { return amps_; }
    const Amplitudes& amplitudes() const { return amps_; }
    Complex& operator[](std::uint64_t i) { return amps_(static_cast<Eigen::Index>(i)); }
    const Complex& operator[](std::uint64_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

    Real norm() const { return amps_.norm(); }

private:
    RegisterLayout layout_;
    Amplitudes amps_;
};

using StateVector = BasicStateVector<double>;
using Matrix2c = Eigen::Matrix2cd;

template <typename Real = double>
BasicStateVector<Real> init_state(const RegisterLayout& layout) {
    return BasicStateVector<Real>(layout);
}

// ---- predicates over basis labels ----

struct BasisPredicate {
    std::function<bool(std::uint64_t)> test;

    bool operator()(std::uint64_t index) const { return test(index); }
};

inline BasisPredicate reg_equals(const RegisterLayout& layout, Reg r, std::uint64_t value) {
    QubitRange range = layout[r];
    return {[range, value](std::uint64_t i) { return range.read(i) == value; }};
}

inline BasisPredicate reg_bit(const RegisterLayout& layout, Reg r, int bit, bool value) {
    std::uint64_t m = std::uint64_t{1} << layout.qubit(r, bit);
    return {[m, value](std::uint64_t i) { return ((i & m) != 0) == value; }};
}

inline BasisPredicate reg_matches(const RegisterLayout& layout, Reg r, std::function<bool(std::uint64_t)> rule) {
    QubitRange range = layout[r];
    return {[range, rule = std::move(rule)](std::uint64_t i) { return rule(range.read(i)); }};
}

inline BasisPredicate all_zero(const RegisterLayout& layout, std::initializer_list<Reg> regs) {
    std::uint64_t m = 0;
    for (Reg r : regs) m |= layout[r].mask();
    return {[m](std::uint64_t i) { return (i & m) == 0; }};
}

inline BasisPredicate qubits_zero(std::uint64_t mask) {
    return {[mask](std::uint64_t i) { return (i & mask) == 0; }};
}

inline BasisPredicate operator&&(BasisPredicate a, BasisPredicate b) {
    return {[a = std::move(a), b = std::move(b)](std::uint64_t i) { return a(i) && b(i); }};
}

inline BasisPredicate operator!(BasisPredicate a) {
    return {[a = std::move(a)](std::uint64_t i) { return !a(i); }};
}

// ---- gates ----

namespace detail {

inline void check_qubits(int total, std::initializer_list<int> qs) {
    std::vector<int> seen;
    for (int q : qs) {
        if (q < 0 || q >= total) throw ArgumentError("qubit index " + std::to_string(q) + " out of range");
        if (std::find(seen.begin(), seen.end(), q) != seen.end())
            throw ArgumentError("repeated qubit index " + std::to_string(q));
        seen.push_back(q);
    }
}

inline void check_qubits(int total, const std::vector<int>& qs) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (qs[i] < 0 || qs[i] >= total) throw ArgumentError("qubit index " + std::to_string(qs[i]) + " out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (qs[i] == qs[j]) throw ArgumentError("repeated qubit index " + std::to_string(qs[i]));
    }
}

inline std::uint64_t mask_of(const std::vector<int>& qs) {
    std::uint64_t m = 0;
    for (int q : qs) m |= std::uint64_t{1} << q;
    return m;
}

}  // namespace detail

// Applies a 2x2 unitary to `target` on components where every control is 1.
template <typename Real>
void apply_controlled_1q(BasicStateVector<Real>& state, const std::vector<int>& controls, int target,
                         const Matrix2c& u) {
    std::vector<int> all = controls;
    all.push_back(target);
    detail::check_qubits(state.qubits(), all);
    using C = std::complex<Real>;
    const C u00(u(0, 0)), u01(u(0, 1)), u10(u(1, 0)), u11(u(1, 1));
    const std::uint64_t cm = detail::mask_of(controls);
    const std::uint64_t tb = std::uint64_t{1} << target;
    const std::uint64_t low = tb - 1;
    const std::uint64_t half = state.dimension() >> 1;
    auto& a = state.amplitudes();
    for (std::uint64_t k = 0; k < half; ++k) {
        std::uint64_t i0 = ((k & ~low) << 1) | (k & low);
        if ((i0 & cm) != cm) continue;
        std::uint64_t i1 = i0 | tb;
        C x0 = a(i0), x1 = a(i1);
        a(i0) = u00 * x0 + u01 * x1;
        a(i1) = u10 * x0 + u11 * x1;
    }
}

template <typename Real>
void apply_1q(BasicStateVector<Real>& state, int target, const Matrix2c& u) {
    apply_controlled_1q(state, {}, target, u);
}

// Multi-controlled X as an in-place swap.
template <typename Real>
void apply_mcx(BasicStateVector<Real>& state, const std::vector<int>& controls, int target) {
    std::vector<int> all = controls;
    all.push_back(target);
    detail::check_qubits(state.qubits(), all);
    const std::uint64_t cm = detail::mask_of(controls);
    const std::uint64_t tb = std::uint64_t{1} << target;
    const std::uint64_t low = tb - 1;
    const std::uint64_t half = state.dimension() >> 1;
    auto& a = state.amplitudes();
    for (std::uint64_t k = 0; k < half; ++k) {
        std::uint64_t i0 = ((k & ~low) << 1) | (k & low);
        if ((i0 & cm) == cm) std::swap(a(i0), a(i0 | tb));
    }
}

// Multiplies by e^{i phi} every component with all listed qubits set.
template <typename Real>
void apply_mc_phase(BasicStateVector<Real>& state, const std::vector<int>& qubits, double phi) {
    detail::check_qubits(state.qubits(), qubits);
    const std::uint64_t m = detail::mask_of(qubits);
    const std::complex<Real> w = std::polar(Real(1), Real(phi));
    auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        if ((i & m) == m) a(i) *= w;
}

template <typename Real>
void apply_mcz(BasicStateVector<Real>& state, const std::vector<int>& qubits) {
    detail::check_qubits(state.qubits(), qubits);
    const std::uint64_t m = detail::mask_of(qubits);
    auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        if ((i & m) == m) a(i) = -a(i);
}

inline Matrix2c hadamard_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix2c h;
    h << r, r, r, -r;
    return h;
}

template <typename Real> void x(BasicStateVector<Real>& s, int q) { apply_mcx(s, {}, q); }
template <typename Real> void cnot(BasicStateVector<Real>& s, int c, int t) { apply_mcx(s, {c}, t); }
template <typename Real> void toffoli(BasicStateVector<Real>& s, int c0, int c1, int t) { apply_mcx(s, {c0, c1}, t); }
template <typename Real> void h(BasicStateVector<Real>& s, int q) { apply_1q(s, q, hadamard_matrix()); }
template <typename Real> void controlled_h(BasicStateVector<Real>& s, int c, int t) {
    apply_controlled_1q(s, {c}, t, hadamard_matrix());
}
template <typename Real> void z(BasicStateVector<Real>& s, int q) { apply_mcz(s, {q}); }
template <typename Real> void cz(BasicStateVector<Real>& s, int a, int b) { apply_mcz(s, {a, b}); }
template <typename Real> void sgate(BasicStateVector<Real>& s, int q) { apply_mc_phase(s, {q}, std::numbers::pi / 2); }
template <typename Real> void phase(BasicStateVector<Real>& s, int q, double phi) { apply_mc_phase(s, {q}, phi); }
template <typename Real> void controlled_phase(BasicStateVector<Real>& s, int c, int t, double phi) {
    apply_mc_phase(s, {c, t}, phi);
}

enum class Gate { X, H, Z, S, CNOT, CZ, Toffoli, ControlledH, Phase, ControlledPhase, MCZ };

// Dispatch by gate name. Controls come first in `qubits`, the target last.
template <typename Real>
void apply_gate(BasicStateVector<Real>& s, Gate g, const std::vector<int>& qubits, double angle = 0.0) {
    auto arity = [&](std::size_t k) {
        if (qubits.size() != k) throw ArgumentError("wrong number of qubits for gate");
    };
    switch (g) {
        case Gate::X: arity(1); x(s, qubits[0]); break;
        case Gate::H: arity(1); h(s, qubits[0]); break;
        case Gate::Z: arity(1); z(s, qubits[0]); break;
        case Gate::S: arity(1); sgate(s, qubits[0]); break;
        case Gate::CNOT: arity(2); cnot(s, qubits[0], qubits[1]); break;
        case Gate::CZ: arity(2); cz(s, qubits[0], qubits[1]); break;
        case Gate::Toffoli: arity(3); toffoli(s, qubits[0], qubits[1], qubits[2]); break;
        case Gate::ControlledH: arity(2); controlled_h(s, qubits[0], qubits[1]); break;
        case Gate::Phase: arity(1); phase(s, qubits[0], angle); break;
        case Gate::ControlledPhase: arity(2); controlled_phase(s, qubits[0], qubits[1], angle); break;
        case Gate::MCZ:
            if (qubits.empty()) throw ArgumentError("multi-controlled Z needs at least one qubit");
            apply_mcz(s, qubits);
            break;
    }
}

// Multiplies matching components by e^{i on} and the rest by e^{i off}.
template <typename Real>
void apply_subspace_phase(BasicStateVector<Real>& state, const BasisPredicate& pred, double on, double off = 0.0) {
    const std::complex<Real> w_on = std::polar(Real(1), Real(on));
    const std::complex<Real> w_off = std::polar(Real(1), Real(off));
    auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dimension(); ++i) a(i) *= pred(i) ? w_on : w_off;
}

// ---- oracles ----

// Basis permutation on full labels. `involution` enables the in-place path.
struct PermutationOracle {
    std::function<std::uint64_t(std::uint64_t)> map;
    bool involution = true;
    int queries = 1;
};

template <typename Real>
void apply_permutation_oracle(BasicStateVector<Real>& state, const PermutationOracle& f, GateCounter& counter) {
    auto& a = state.amplitudes();
    const std::uint64_t dim = state.dimension();
    if (f.involution) {
        for (std::uint64_t i = 0; i < dim; ++i) {
            std::uint64_t j = f.map(i);
            if (j >= dim || f.map(j) != i) throw ContractError("oracle is not an involution");
            if (j > i) std::swap(a(i), a(j));
        }
    } else {
        typename BasicStateVector<Real>::Amplitudes out(a.size());
        std::vector<bool> hit(dim, false);
        for (std::uint64_t i = 0; i < dim; ++i) {
            std::uint64_t j = f.map(i);
            if (j >= dim || hit[j]) throw ContractError("oracle is not a bijection");
            hit[j] = true;
            out(j) = a(i);
        }
        a.swap(out);
    }
    counter.oracle_queries += f.queries;
}

// ---- measurement ----

template <typename Real>
double probability(const BasicStateVector<Real>& state, const BasisPredicate& pred) {
    double p = 0.0;
    const auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        if (pred(i)) p += std::norm(a(i));
    return p;
}

template <typename Real>
std::pair<BasicStateVector<Real>, double> postselect(const BasicStateVector<Real>& state, const BasisPredicate& pred) {
    BasicStateVector<Real> out = state;
    auto& a = out.amplitudes();
    double p = 0.0;
    for (std::uint64_t i = 0; i < out.dimension(); ++i) {
        if (pred(i))
            p += std::norm(a(i));
        else
            a(i) = 0;
    }
    if (p <= 0.0) throw DegenerateError("postselection has zero probability");
    a /= static_cast<Real>(std::sqrt(p));
    return {std::move(out), p};
}

// Reduced density matrix on the out register (which sits at qubit 0).
template <typename Real>
Eigen::MatrixXcd reduced_out_density(const BasicStateVector<Real>& state) {
    const QubitRange out = state.layout()[Reg::out];
    if (out.offset != 0) throw ArgumentError("out register must start at qubit 0");
    const Eigen::Index rows = Eigen::Index{1} << out.width;
    const Eigen::Index cols = static_cast<Eigen::Index>(state.dimension()) / rows;
    Eigen::MatrixXcd m = Eigen::Map<const Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>>(
                             state.amplitudes().data(), rows, cols)
                             .template cast<std::complex<double>>();
    return m * m.adjoint();
}

namespace detail {

inline Eigen::VectorXcd padded_target(const Eigen::VectorXcd& target, Eigen::Index size) {
    if (target.size() > size) throw ArgumentError("target longer than the out register");
    if (std::abs(target.norm() - 1.0) > tolerances.norm) throw ArgumentError("target is not normalized");
    Eigen::VectorXcd t = Eigen::VectorXcd::Zero(size);
    t.head(target.size()) = target;
    return t;
}

}  // namespace detail

// <t|rho_out|t> of the postselected state, without a purity check.
template <typename Real>
double mixed_fidelity(const BasicStateVector<Real>& state, const Eigen::VectorXcd& target, const BasisPredicate& pred) {
    auto [post, p] = postselect(state, pred);
    Eigen::MatrixXcd rho = reduced_out_density(post);
    Eigen::VectorXcd t = detail::padded_target(target, rho.rows());
    return std::clamp((t.adjoint() * rho * t)(0, 0).real(), 0.0, 1.0);
}

// |<t|psi_out>|^2 where the postselected state must factor as psi_out (x) rest.
template <typename Real>
double fidelity(const BasicStateVector<Real>& state, const Eigen::VectorXcd& target, const BasisPredicate& pred) {
    auto [post, p] = postselect(state, pred);
    Eigen::MatrixXcd rho = reduced_out_density(post);
    double purity = (rho * rho).trace().real();
    if (std::abs(purity - 1.0) > tolerances.purity)
        throw EntanglementError("postselected out state is not pure (purity " + std::to_string(purity) + ")");
    Eigen::VectorXcd t = detail::padded_target(target, rho.rows());
    return std::clamp((t.adjoint() * rho * t)(0, 0).real(), 0.0, 1.0);
}

// Pure out-register state of a product state, phase fixed so the largest entry is real positive.
template <typename Real>
Eigen::VectorXcd out_state(const BasicStateVector<Real>& state) {
    Eigen::MatrixXcd rho = reduced_out_density(state);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    Eigen::VectorXcd v = es.eigenvectors().col(rho.rows() - 1);
    Eigen::Index k;
    v.cwiseAbs().maxCoeff(&k);
    return v * (std::abs(v(k)) / v(k));
}

}  // namespace bbsp
