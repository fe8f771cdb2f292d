#!/usr/bin/env python3
"""Generate the phase-coherent fixed-point amplification table.

Model: A restricted to the two-dimensional invariant subspace is the
reflection R(a) = [[a, s], [s, -a]], s = sqrt(1 - a^2).  A phase sequence
(phi_1, ..., phi_L) gives

    M = ez(phi_1) R ez(phi_2) R ... ez(phi_L) R,   ez(t) = diag(e^{it}, e^{-it})

with good amplitude P(a) = M[0, 0] and bad amplitude Q(a) = M[1, 0].

Sequences of the form phi = (0, h, -reverse(h)) give a real P(a), so
|1 - P| = 1 - sqrt(1 - |Q|^2) and the phase of P is flat.  For each odd L
we minimise max |Q| over [delta, 1] in that family; working with Q rather
than 1 - P keeps the objective well above double rounding.  A second search
over unrestricted phases minimises |1 - P| through the pair
(|Q|^2 / (1 + |P|), arg P), which is accurate to rounding as well.  Each L
is seeded from shorter solutions by inserting zero phases, refined by least
squares, Lawson reweighting and an SLSQP minimax.

Results go to tools/fpaa_phases.jsonl as they are found (reruns resume from
it) and then to src/fpaa_table.cpp.
Usage: python3 tools/fpaa_phases.py [max_L]
"""
import json
import os
import sys

import jax
import jax.numpy as jnp
import numpy as np
from scipy.optimize import least_squares, minimize

jax.config.update("jax_enable_x64", True)

DELTA = 1.0 / np.sqrt(2.0)
MAX_L = int(sys.argv[1]) if len(sys.argv) > 1 else 29
HERE = os.path.dirname(os.path.abspath(__file__))
STORE = os.path.join(HERE, "fpaa_phases.jsonl")
TABLE = os.path.join(HERE, "..", "src", "fpaa_table.cpp")


def expand(h):
    return jnp.concatenate([jnp.zeros(1), h, -h[::-1]])


def amplitudes(phi, a):
    s = jnp.sqrt(jnp.clip(1.0 - a * a, 0.0, None))
    r0 = jnp.exp(1j * phi[-1]) * a
    r1 = jnp.exp(-1j * phi[-1]) * s
    for k in range(phi.shape[0] - 2, -1, -1):
        r0, r1 = r0 * a + r1 * s, r0 * s - r1 * a
        r0, r1 = r0 * jnp.exp(1j * phi[k]), r1 * jnp.exp(-1j * phi[k])
    return r0, r1


def make_problem(grid, real_family):
    grid = jnp.asarray(grid)

    def res(x):
        if real_family:
            q = amplitudes(expand(x), grid)[1]
            return jnp.concatenate([q.real, q.imag])
        p, q = amplitudes(x, grid)
        mag = jnp.abs(p)
        return jnp.concatenate([(q * q.conj()).real / (1.0 + mag), jnp.angle(p)])

    def sq(x):
        r = res(x)
        k = r.shape[0] // 2
        return r[:k] ** 2 + r[k:] ** 2

    return (jax.jit(res), jax.jit(jax.jacfwd(res)), jax.jit(sq), jax.jit(jax.jacfwd(sq)))


def objective(x, grid, funcs):
    return float(np.sqrt(np.max(np.asarray(funcs[2](x)))))


def worst_deviation(phi, grid):
    p = np.asarray(amplitudes(jnp.asarray(phi), jnp.asarray(grid))[0])
    return float(np.max(np.abs(1.0 - p))), float(np.max(np.abs(np.angle(p))))


def refine(h0, funcs, grid):
    res, jres, sq, jsq = funcs
    n = grid.size
    h = least_squares(lambda x: np.asarray(res(x)), h0, jac=lambda x: np.asarray(jres(x)), method="lm",
                      xtol=1e-15, ftol=1e-15, gtol=1e-15).x
    # Lawson: reweighted least squares drifts toward the minimax solution
    w = np.full(n, 1.0 / n)
    best, best_w = h, objective(h, grid, funcs)
    for _ in range(60):
        sw = np.sqrt(np.concatenate([w, w]))
        h = least_squares(lambda x: sw * np.asarray(res(x)), h, jac=lambda x: sw[:, None] * np.asarray(jres(x)),
                          method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=200).x
        mag = np.sqrt(np.asarray(sq(h)))
        w = w * mag
        w /= w.sum()
        cur = objective(h, grid, funcs)
        if cur < best_w:
            best, best_w = h, cur
    # epigraph minimax: min t subject to |Q_i|^2 / scale <= t
    scale = best_w ** 2
    z0 = np.concatenate([best, [1.0]])
    cons = {"type": "ineq",
            "fun": lambda z: z[-1] - np.asarray(sq(z[:-1])) / scale,
            "jac": lambda z: np.hstack([-np.asarray(jsq(z[:-1])) / scale, np.ones((n, 1))])}
    out = minimize(lambda z: z[-1], z0, jac=lambda z: np.eye(z.size)[-1], constraints=[cons], method="SLSQP",
                   options={"ftol": 1e-15, "maxiter": 500})
    if objective(out.x[:-1], grid, funcs) < best_w:
        best = out.x[:-1]
    return best


def load():
    rows = {}
    if os.path.exists(STORE):
        with open(STORE) as f:
            for line in f:
                r = json.loads(line)
                rows[r["length"]] = r
    return rows


def optimise(starts, grid, real_family, fine, to_phases):
    funcs = make_problem(grid, real_family)
    quick = []
    for s in starts:
        x = least_squares(lambda v: np.asarray(funcs[0](v)), s, jac=lambda v: np.asarray(funcs[1](v)), method="lm",
                          xtol=1e-15, ftol=1e-15, gtol=1e-15).x
        quick.append((objective(x, grid, funcs), x))
    quick.sort(key=lambda t: t[0])
    cands = [refine(x, funcs, grid) for _, x in quick[:3]]
    return min(cands, key=lambda c: worst_deviation(to_phases(c), fine)[0])


def search(L, rows, rng, fine):
    m = (L - 1) // 2
    grid = DELTA + (1 - DELTA) * (1 - np.cos(np.linspace(0, np.pi, 12 * L + 60))) / 2
    to_real = lambda h: np.asarray(expand(jnp.asarray(h)))
    starts = [rng.uniform(-np.pi, np.pi, m) for _ in range(4)]
    if L - 2 in rows:
        starts.append(np.append(rows[L - 2]["inner"], 0.0))
    if L - 4 in rows:
        p = np.asarray(rows[L - 4]["inner"])
        starts += [np.insert(p, k, [0.0, 0.0]) for k in range(p.size + 1)]
    h = optimise(starts, grid, True, fine, to_real)
    real_phi = to_real(h)

    # unrestricted, seeded with zero pairs in shorter solutions (R ez(0) R = I)
    free_starts = [real_phi]
    if L - 2 in rows:
        for key in ("phases", "real_phases"):
            p = np.asarray(rows[L - 2][key])
            free_starts += [np.insert(p, k, [0.0, 0.0]) for k in range(1, p.size + 1, 2)]
    if L - 4 in rows:
        p = np.asarray(rows[L - 4]["phases"])
        free_starts += [np.insert(p, k, [0.0] * 4) for k in range(1, p.size + 1, 2)]
    phi = optimise(free_starts, grid, False, fine, lambda x: x)
    if worst_deviation(phi, fine)[0] >= worst_deviation(real_phi, fine)[0]:
        phi = real_phi
    dev, phase = worst_deviation(phi, fine)
    return {"length": L, "inner": [float(v) for v in h], "real_phases": [float(v) for v in real_phi],
            "real_deviation": worst_deviation(real_phi, fine)[0], "phases": [float(v) for v in phi],
            "worst_deviation": dev, "max_phase": phase}


def write_table(rows):
    out = ["// Generated by tools/fpaa_phases.py; do not edit by hand.",
           "// Phase-flat sequences for delta = 1/sqrt(2), kept only where they beat every shorter one.",
           "",
           '#include "bbsp/fpaa.hpp"',
           "",
           "namespace bbsp::detail {",
           "",
           "const std::vector<TabulatedSequence>& coherent_fpaa_table() {",
           "    static const std::vector<TabulatedSequence> table = {"]
    best = np.inf
    for L in sorted(rows):
        r = rows[L]
        if r["worst_deviation"] >= best:
            continue
        best = r["worst_deviation"]
        phi = [float(np.remainder(v + np.pi, 2 * np.pi) - np.pi) for v in r["phases"]]
        vals = ", ".join(f"{v:.17g}" for v in phi)
        # stored bound is padded slightly for sampling between grid points
        out.append(f"        {{{L}, {r['worst_deviation'] * 1.001:.6e}, {{{vals}}}}},")
    out += ["    };", "    return table;", "}", "", "}  // namespace bbsp::detail", ""]
    with open(TABLE, "w") as f:
        f.write("\n".join(out))


def main():
    rng = np.random.default_rng(1729)
    fine = np.linspace(DELTA, 1.0, 20001)
    rows = load()
    for L in range(3, MAX_L + 1, 2):
        if L in rows:
            continue
        rows[L] = search(L, rows, rng, fine)
        with open(STORE, "a") as f:
            f.write(json.dumps(rows[L]) + "\n")
        r = rows[L]
        print(f"L={L} real {r['real_deviation']:.4e} max|1-P|={r['worst_deviation']:.4e} "
              f"max|arg P|={r['max_phase']:.2e}", file=sys.stderr, flush=True)
    write_table(rows)


if __name__ == "__main__":
    main()
