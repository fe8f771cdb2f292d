#include "bbsp/circuits.hpp"

#include <algorithm>

namespace bbsp {

namespace {

constexpr double negligible = 1e-20;

void check_clean(const StateVector& state, std::uint64_t mask, const char* what) {
    const auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        if ((i & mask) != 0 && std::norm(a(i)) > negligible)
            throw ContractError(std::string(what) + " is not clean");
}

void functional_compare(StateVector& state, QubitRange a, QubitRange b, int flag) {
    const std::uint64_t fb = std::uint64_t{1} << flag;
    auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        if (i & fb) continue;
        if (a.read(i) >= b.read(i)) std::swap(amps(i), amps(i | fb));
    }
}

// Carry chain of a + ~b + 1 held in temporaries t_i = c_{i+1}, using
// c_{i+1} = c_i xor ((a_i xor c_i) and (~b_i xor c_i)).
void logical_and_compare(StateVector& s, QubitRange a, QubitRange b, int flag, const std::vector<int>& t) {
    const int n = a.width;
    auto step = [&](int i) {
        if (i == 0) {
            x(s, a.qubit(0));
            toffoli(s, a.qubit(0), b.qubit(0), t[0]);
            x(s, a.qubit(0));
            x(s, t[0]);
            return;
        }
        const int c = t[i - 1], ai = a.qubit(i), bi = b.qubit(i);
        cnot(s, c, ai);
        x(s, bi);
        cnot(s, c, bi);
        toffoli(s, ai, bi, t[i]);
        cnot(s, c, t[i]);
        cnot(s, c, bi);
        x(s, bi);
        cnot(s, c, ai);
    };
    for (int i = 0; i < n; ++i) step(i);
    cnot(s, t[n - 1], flag);
    // Each step is self-inverse given the earlier temporaries, so the
    // uncompute pass repeats them in reverse.
    for (int i = n - 1; i >= 0; --i) step(i);
}

// Majority ripple with one carry qubit; the final carry lands in the flag.
void cdkm_compare(StateVector& s, QubitRange a, QubitRange b, int flag, int carry) {
    const int n = a.width;
    for (int i = 0; i < n; ++i) x(s, b.qubit(i));
    x(s, carry);
    auto maj = [&](int c, int bq, int aq) {
        cnot(s, aq, bq);
        cnot(s, aq, c);
        toffoli(s, c, bq, aq);
    };
    auto unmaj = [&](int c, int bq, int aq) {
        toffoli(s, c, bq, aq);
        cnot(s, aq, c);
        cnot(s, aq, bq);
    };
    for (int i = 0; i < n - 1; ++i) maj(i == 0 ? carry : a.qubit(i - 1), b.qubit(i), a.qubit(i));
    const int q = n == 1 ? carry : a.qubit(n - 2);
    const int al = a.qubit(n - 1), bl = b.qubit(n - 1);
    cnot(s, q, al);
    cnot(s, q, bl);
    toffoli(s, al, bl, flag);
    cnot(s, q, flag);
    cnot(s, q, bl);
    cnot(s, q, al);
    for (int i = n - 2; i >= 0; --i) unmaj(i == 0 ? carry : a.qubit(i - 1), b.qubit(i), a.qubit(i));
    x(s, carry);
    for (int i = 0; i < n; ++i) x(s, b.qubit(i));
}

}  // namespace

ComparatorBackend parse_backend(const std::string& text) {
    if (text == "functional") return ComparatorBackend::functional;
    if (text == "circuit") return ComparatorBackend::circuit;
    if (text == "cdkm") return ComparatorBackend::cdkm;
    throw ArgumentError("unknown backend '" + text + "'");
}

std::string to_string(ComparatorBackend backend) {
    switch (backend) {
        case ComparatorBackend::functional: return "functional";
        case ComparatorBackend::circuit: return "circuit";
        case ComparatorBackend::cdkm: return "cdkm";
    }
    return "?";
}

int comparator_toffolis(ComparatorBackend backend, int n) {
    return backend == ComparatorBackend::cdkm ? 2 * n - 1 : n;
}

int comparator_workspace(ComparatorBackend backend, int n) {
    switch (backend) {
        case ComparatorBackend::functional: return 0;
        case ComparatorBackend::circuit: return n;
        case ComparatorBackend::cdkm: return 1;
    }
    return 0;
}

void comparator(StateVector& state, QubitRange a, QubitRange b, int flag, ComparatorBackend backend,
                GateCounter& counter, bool require_clean) {
    const int n = a.width;
    if (n != b.width) throw ArgumentError("comparator registers differ in width");
    if (n < 1) throw ArgumentError("comparator registers are empty");
    const RegisterLayout& layout = state.layout();
    if (flag < 0 || flag >= layout.total()) throw ArgumentError("flag qubit out of range");
    if (a.end() > layout.total() || b.end() > layout.total()) throw ArgumentError("comparator register out of range");
    for (int q = 0; q < layout.total(); ++q)
        if ((a.contains(q) && b.contains(q)) || ((a.contains(q) || b.contains(q)) && q == flag))
            throw ArgumentError("comparator registers overlap");

    const int w = comparator_workspace(backend, n);
    const QubitRange anc = layout[Reg::anc];
    if (anc.width < w) throw ResourceError("anc register too small for comparator workspace");
    std::vector<int> work;
    std::uint64_t work_mask = 0;
    for (int k = 0; k < w; ++k) {
        int q = anc.end() - w + k;
        if (a.contains(q) || b.contains(q) || q == flag) throw ArgumentError("comparator workspace overlaps operands");
        work.push_back(q);
        work_mask |= std::uint64_t{1} << q;
    }
    if (require_clean) {
        check_clean(state, std::uint64_t{1} << flag, "comparator flag");
        check_clean(state, work_mask, "comparator workspace");
    }

    switch (backend) {
        case ComparatorBackend::functional: functional_compare(state, a, b, flag); break;
        case ComparatorBackend::circuit: logical_and_compare(state, a, b, flag, work); break;
        case ComparatorBackend::cdkm: cdkm_compare(state, a, b, flag, work[0]); break;
    }
    counter.toffoli += comparator_toffolis(backend, n);
    counter.comparator_calls += 1;
}

void comparator(StateVector& state, Reg a, Reg b, int flag, ComparatorBackend backend, GateCounter& counter,
                bool require_clean) {
    comparator(state, state.layout()[a], state.layout()[b], flag, backend, counter, require_clean);
}

void hadamard_layer(StateVector& state, QubitRange range) {
    for (int i = 0; i < range.width; ++i) h(state, range.qubit(i));
}

void hadamard_layer(StateVector& state, Reg reg) { hadamard_layer(state, state.layout()[reg]); }

void controlled_hadamard_layer(StateVector& state, Reg data, Reg ref, GateCounter& counter,
                               const std::optional<BasisPredicate>& support) {
    const QubitRange dr = state.layout()[data];
    const QubitRange rr = state.layout()[ref];
    auto& a = state.amplitudes();
    auto supported = [&](std::uint64_t i) { return !support || (*support)(i); };

    std::uint64_t max_lambda = 0;
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        if (!supported(i) || std::norm(a(i)) <= negligible) continue;
        std::uint64_t lambda = dr.read(i);
        if (lambda == 0) throw DegenerateError("controlled Hadamard layer: data holds 0 on a supported component");
        max_lambda = std::max(max_lambda, lambda);
    }

    const double r = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < rr.width; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << rr.qubit(j);
        const std::uint64_t threshold = std::uint64_t{1} << j;
        for (std::uint64_t i = 0; i < state.dimension(); ++i) {
            if ((i & bit) || !supported(i) || dr.read(i) <= threshold) continue;
            std::complex<double> x0 = a(i), x1 = a(i | bit);
            a(i) = r * (x0 + x1);
            a(i | bit) = r * (x0 - x1);
        }
    }
    counter.controlled_hadamard += ceil_log2(max_lambda);
}

void reflect_about(StateVector& state, const BasisPredicate& pred, GateCounter& counter) {
    auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dimension(); ++i)
        if (pred(i)) a(i) = -a(i);
    counter.reflections += 1;
}

void reflect_about_zero(StateVector& state, const std::vector<Reg>& regs, GateCounter& counter) {
    std::uint64_t m = 0;
    for (Reg r : regs) m |= state.layout()[r].mask();
    reflect_about(state, qubits_zero(m), counter);
}

}  // namespace bbsp
