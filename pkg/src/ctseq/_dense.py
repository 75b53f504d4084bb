"""Dense integer arrays for polynomial multiply chains.

Used where dictionary products would thrash: high powers and
section extraction for multivariate bases.  All arithmetic is int64
with eager reduction; guards refuse sizes that could overflow or blow
the memory budget.
"""

from __future__ import annotations

import numpy as np

from .errors import ResourceLimitError
from .laurent import LaurentPoly

# elements, not bytes
DEFAULT_DENSE_CAP = 2**26


class DenseChain:
    """Iterates cur, cur*P, cur*P^2, ... as dense integer arrays."""

    def __init__(self, start, P, steps, mod, dense_cap=DEFAULT_DENSE_CAP):
        self.nvars = start.nvars
        self.mod = mod
        self.pterms = sorted(P.with_modulus(mod).terms.items())
        lo_p = [0] * self.nvars
        hi_p = [0] * self.nvars
        for e, _ in self.pterms:
            for i, x in enumerate(e):
                lo_p[i] = min(lo_p[i], x)
                hi_p[i] = max(hi_p[i], x)
        self.lo_p, self.hi_p = lo_p, hi_p
        start = start.with_modulus(mod)
        lo_s = [0] * self.nvars
        hi_s = [0] * self.nvars
        for e in start.terms:
            for i, x in enumerate(e):
                lo_s[i] = min(lo_s[i], x)
                hi_s[i] = max(hi_s[i], x)
        final_shape = [
            (hi_s[i] - lo_s[i]) + steps * (hi_p[i] - lo_p[i]) + 1
            for i in range(self.nvars)
        ]
        cells = 1
        for s in final_shape:
            cells *= s
        if cells > dense_cap:
            raise ResourceLimitError(
                "dense power chain needs %d cells, cap is %d" % (cells, dense_cap)
            )
        if (mod - 1) ** 2 * max(len(self.pterms), 1) >= 2**63:
            raise ResourceLimitError(
                "modulus %d too large for exact int64 dense arithmetic" % mod
            )
        shape = [(hi_s[i] - lo_s[i]) + 1 for i in range(self.nvars)]
        self.arr = np.zeros(shape, dtype=np.int64)
        for e, c in start.terms.items():
            self.arr[tuple(e[i] - lo_s[i] for i in range(self.nvars))] = c
        self.offset = lo_s

    def step(self):
        """Multiply the current array by P once."""
        arr, lo_p, hi_p = self.arr, self.lo_p, self.hi_p
        new_shape = [
            arr.shape[i] + (hi_p[i] - lo_p[i]) for i in range(self.nvars)
        ]
        out = np.zeros(new_shape, dtype=np.int64)
        for e, c in self.pterms:
            sl = tuple(
                slice(e[i] - lo_p[i], e[i] - lo_p[i] + arr.shape[i])
                for i in range(self.nvars)
            )
            out[sl] += c * arr
        out %= self.mod
        self.arr = out
        self.offset = [self.offset[i] + lo_p[i] for i in range(self.nvars)]

    def to_poly(self):
        terms = {}
        for idx in zip(*np.nonzero(self.arr)):
            e = tuple(int(idx[i]) + self.offset[i] for i in range(self.nvars))
            terms[e] = int(self.arr[idx])
        return LaurentPoly(self.nvars, terms, self.mod)

    def section_poly(self, k):
        """section_k of the current value (keep exponents divisible by k)."""
        if k == 1:
            return self.to_poly()
        starts = [(-self.offset[i]) % k for i in range(self.nvars)]
        view = self.arr[tuple(slice(starts[i], None, k) for i in range(self.nvars))]
        terms = {}
        for idx in zip(*np.nonzero(view)):
            e = tuple(
                (int(idx[i]) * k + starts[i] + self.offset[i]) // k
                for i in range(self.nvars)
            )
            terms[e] = int(view[idx])
        return LaurentPoly(self.nvars, terms, self.mod)


def power_mod(P, exponent, mod, dense_cap=DEFAULT_DENSE_CAP):
    """P^exponent mod ``mod`` through a dense multiply chain."""
    chain = DenseChain(LaurentPoly.one(P.nvars, mod), P, exponent, mod, dense_cap)
    for _ in range(exponent):
        chain.step()
    return chain.to_poly()
