"""Brute-force ground truth for ct(P^n Q) mod m.

Everything here expands actual polynomial products with eager modular
reduction and reads off the constant coefficient.  No windows, section
operators, matrices, or repeated squaring are used, so these values are
an independent check on every other code path.  The generic route works
on plain dictionaries; two dense integer fast paths (one dimensional
running products, and half-power pairing for several variables) do the
same schoolbook arithmetic with numpy int64 and are cross-checked
against the dictionary route in the tests.
"""

from __future__ import annotations

import numpy as np

from .errors import ResourceLimitError

DEFAULT_MAX_N = 10**6
DEFAULT_TERM_GUARD = 10**6
DEFAULT_DENSE_CELLS = 2**25


def _as_dict(P):
    return dict(P.terms), P.nvars


def _dict_mul(a, b, modulus, term_guard):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = (out.get(e, 0) + ca * cb) % modulus
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        if len(out) > term_guard:
            raise ResourceLimitError(
                "oracle product exceeds %d terms" % term_guard
            )
    return out


def ct_pow_mod(P, Q, n, modulus, max_n=DEFAULT_MAX_N,
               term_guard=DEFAULT_TERM_GUARD):
    """ct(P^n Q) mod ``modulus`` by a chain of full multiplications."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if n > max_n:
        raise ResourceLimitError("index %d exceeds the oracle guard %d" % (n, max_n))
    if P.nvars != Q.nvars:
        raise ValueError("P and Q variable counts differ")
    pd, nvars = _as_dict(P.with_modulus(modulus))
    cur, _ = _as_dict(Q.with_modulus(modulus))
    for _ in range(n):
        cur = _dict_mul(cur, pd, modulus, term_guard)
    return cur.get((0,) * nvars, 0)


def sequence(P, Q, modulus, count, max_n=DEFAULT_MAX_N,
             term_guard=DEFAULT_TERM_GUARD, dense_cells=DEFAULT_DENSE_CELLS):
    """The first ``count`` values of n -> ct(P^n Q) mod ``modulus``."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if count - 1 > max_n:
        raise ResourceLimitError(
            "count %d exceeds the oracle guard %d" % (count, max_n)
        )
    if P.nvars != Q.nvars:
        raise ValueError("P and Q variable counts differ")
    if count == 0:
        return []
    P = P.with_modulus(modulus)
    Q = Q.with_modulus(modulus)
    if P.nvars == 1 and (modulus - 1) ** 2 * max(len(P.terms), 1) < 2**62:
        return _sequence_dense_1d(P, Q, modulus, count)
    if P.nvars > 1:
        plan = _halving_plan(P, Q, count, dense_cells)
        if plan is not None and (modulus - 1) ** 2 * max(len(P.terms), len(Q.terms), 1) < 2**62:
            return _sequence_dense_halving(P, Q, modulus, count, plan)
    return _sequence_dicts(P, Q, modulus, count, term_guard)


def _sequence_dicts(P, Q, modulus, count, term_guard):
    pd, nvars = _as_dict(P)
    cur, _ = _as_dict(Q)
    zero = (0,) * nvars
    out = []
    for _ in range(count):
        out.append(cur.get(zero, 0))
        cur = _dict_mul(cur, pd, modulus, term_guard)
    return out


# ---------------------------------------------------------------------------
# dense fast paths
# ---------------------------------------------------------------------------


def _bounds(terms, nvars):
    lo = [0] * nvars
    hi = [0] * nvars
    for e in terms:
        for i, x in enumerate(e):
            lo[i] = min(lo[i], x)
            hi[i] = max(hi[i], x)
    return lo, hi


def _to_dense(poly):
    lo, hi = _bounds(poly.terms, poly.nvars)
    arr = np.zeros([h - l + 1 for l, h in zip(lo, hi)], dtype=np.int64)
    for e, c in poly.terms.items():
        arr[tuple(x - l for x, l in zip(e, lo))] = c
    return arr, lo


def _sequence_dense_1d(P, Q, modulus, count):
    pa, plo = _to_dense(P)
    cur, lo = _to_dense(Q)
    plo = plo[0]
    lo = lo[0]
    out = []
    for _ in range(count):
        idx = -lo
        out.append(int(cur[idx]) if 0 <= idx < cur.shape[0] else 0)
        cur = np.convolve(cur, pa) % modulus
        lo += plo
    return out


def _halving_plan(P, Q, count, dense_cells):
    """Array shapes for the pairing route, or None if it would not fit."""
    plo, phi = _bounds(P.terms, P.nvars)
    qlo, qhi = _bounds(Q.terms, Q.nvars)
    half = (count - 1 + 1) // 2  # largest retained power of P
    cells = 1
    for i in range(P.nvars):
        cells *= (phi[i] - plo[i]) * (half + 1) + (qhi[i] - qlo[i]) + 1
    return half if cells <= dense_cells else None


def _shift_add_mul(arr, lo, terms, modulus, nvars):
    tlo, thi = _bounds(terms, nvars)
    out = np.zeros(
        [arr.shape[i] + thi[i] - tlo[i] for i in range(nvars)], dtype=np.int64
    )
    for e, c in terms.items():
        sl = tuple(
            slice(e[i] - tlo[i], e[i] - tlo[i] + arr.shape[i])
            for i in range(nvars)
        )
        out[sl] += c * arr
    out %= modulus
    return out, [lo[i] + tlo[i] for i in range(nvars)]


def _corr_at_zero(a, alo, b, blo, modulus, nvars):
    """sum over e of a[e] * b[-e], read through the offsets."""
    fb = b[tuple(slice(None, None, -1) for _ in range(nvars))]
    fblo = [-(blo[i] + b.shape[i] - 1) for i in range(nvars)]
    start = [max(alo[i], fblo[i]) for i in range(nvars)]
    end = [
        min(alo[i] + a.shape[i], fblo[i] + fb.shape[i]) for i in range(nvars)
    ]
    if any(s >= e for s, e in zip(start, end)):
        return 0
    sa = a[tuple(slice(start[i] - alo[i], end[i] - alo[i]) for i in range(nvars))]
    sb = fb[tuple(slice(start[i] - fblo[i], end[i] - fblo[i]) for i in range(nvars))]
    return int((sa * sb % modulus).sum() % modulus)


def _sequence_dense_halving(P, Q, modulus, count, half):
    """ct(P^(2m) Q) = <P^m, P^m Q> and ct(P^(2m+1) Q) = <P^m, P^(m+1) Q>,
    pairing coefficients at opposite exponents, so only powers up to
    about count/2 are ever expanded."""
    nvars = P.nvars
    pterms = P.terms
    qterms = Q.terms
    if not qterms:
        return [0] * count
    a = np.ones((1,) * nvars, dtype=np.int64)  # P^0
    alo = [0] * nvars
    out = []
    while len(out) < count:
        c, clo = _shift_add_mul(a, alo, qterms, modulus, nvars)
        out.append(_corr_at_zero(a, alo, c, clo, modulus, nvars))  # n = 2m
        if len(out) >= count:
            break
        if pterms:
            nxt, nxtlo = _shift_add_mul(a, alo, pterms, modulus, nvars)
        else:
            nxt, nxtlo = np.zeros((1,) * nvars, dtype=np.int64), [0] * nvars
        cn, cnlo = _shift_add_mul(nxt, nxtlo, qterms, modulus, nvars)
        out.append(_corr_at_zero(a, alo, cn, cnlo, modulus, nvars))  # n = 2m+1
        a, alo = nxt, nxtlo
    return out[:count]
