"""Reduction of mod-p^a sequences to a stable base polynomial.

Write B = p^(a-1).  The B-th power of P mod p^a always has the shape
R = T(x^(p^ell)) for a polynomial T that commutes with the digit
machinery mod p^a (raising T to the p-th power equals substituting
x -> x^p).  Splitting an index n' as B*n + k with 0 <= k < B gives

    ct(P^n' Q) = ct(T^n * section_{p^ell}(P^k Q))   (mod p^a),

so one matrix family for T plus B coding rows reproduces the whole
sequence.  With a = 1 everything degenerates to the plain machinery.
"""

from __future__ import annotations

from ._dense import DEFAULT_DENSE_CAP, DenseChain, power_mod
from .errors import ResourceLimitError
from .laurent import LaurentPoly
from .linrep import (
    DEFAULT_DIGIT_CAP,
    DEFAULT_WINDOW_CAP,
    IndexSet,
    LinRep,
    digits_lsd,
)
from .morphism import MorphicStream

DEFAULT_BLOCK_CAP = 2**16


def _p_adic_valuation(x, p):
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# the reduction
# ---------------------------------------------------------------------------


def reduce_p_tilde(P, p, a, dense_cap=DEFAULT_DENSE_CAP):
    """The stable base for P mod p^a, as (polynomial, ell).

    Computes R = P^(p^(a-1)) mod p^a and divides every exponent by the
    largest power p^ell dividing all nonzero exponent entries.  Constant
    R (including a = 1, where R = P by convention) yields ell = 0.
    """
    if a < 1:
        raise ValueError("exponent a must be >= 1")
    mod = p**a
    if a == 1:
        return P.with_modulus(mod), 0
    R = power_mod(P.with_modulus(mod), p ** (a - 1), mod, dense_cap)
    if R.is_constant():
        return R, 0
    ell = None
    for e in R.terms:
        for x in e:
            if x:
                v = _p_adic_valuation(x, p)
                if ell is None or v < ell:
                    ell = v
    if ell == 0:
        return R, 0
    pl = p**ell
    terms = {tuple(x // pl for x in e): c for e, c in R.terms.items()}
    return LaurentPoly(R.nvars, terms, mod), ell


class TildeReduction:
    """Everything needed to produce ct(P^n Q) mod p^a termwise.

    ``block_rows[k]`` is the coding row for residue k of the index mod
    p^(a-1), i.e. the window coefficients of section_{p^ell}(P^k Q); the
    matrices of ``tilde_rep`` advance the quotient index.  Immutable
    after construction except for the lazily grown letter stream.
    """

    def __init__(self, P, Qs, p, a,
                 window_cap=DEFAULT_WINDOW_CAP,
                 digit_cap=DEFAULT_DIGIT_CAP,
                 block_cap=DEFAULT_BLOCK_CAP,
                 dense_cap=DEFAULT_DENSE_CAP):
        if not Qs:
            raise ValueError("need at least one coding polynomial")
        self.p = p
        self.a = a
        self.modulus = p**a
        self.block_count = p ** (a - 1)
        if self.block_count > block_cap:
            raise ResourceLimitError(
                "p^(a-1) = %d residue classes exceed cap %d"
                % (self.block_count, block_cap)
            )
        mod = self.modulus
        self.P = P.with_modulus(mod)
        self.Qs = [q.with_modulus(mod) for q in Qs]
        self.p_tilde, self.ell = reduce_p_tilde(P, p, a, dense_cap)
        pl = p**self.ell
        # reduced codings: section_{p^ell}(P^k Q) for every residue k
        self.reduced_codings = []
        for q in self.Qs:
            chain = DenseChain(q, self.P, self.block_count - 1, mod, dense_cap)
            codings = [chain.section_poly(pl)]
            for _ in range(self.block_count - 1):
                chain.step()
                codings.append(chain.section_poly(pl))
            self.reduced_codings.append(codings)
        m = max(self.p_tilde.degree() - 1, 0)
        for codings in self.reduced_codings:
            for q in codings:
                m = max(m, q.degree())
        index = IndexSet(P.nvars, m)
        if len(index) > window_cap:
            raise ResourceLimitError(
                "window size %d exceeds cap %d" % (len(index), window_cap)
            )
        self.tilde_rep = LinRep(
            self.p_tilde, self.reduced_codings[0][0], p, a,
            index_set=index, digit_cap=digit_cap,
        )
        self.block_rows = [
            self.tilde_rep.row_vector(q) for q in self.reduced_codings[0]
        ]
        self._all_rows = [self.block_rows] + [
            [self.tilde_rep.row_vector(q) for q in codings]
            for codings in self.reduced_codings[1:]
        ]
        self._stream = None

    def stream(self):
        """The shared letter stream of the stable base (grown lazily)."""
        if self._stream is None:
            self._stream = MorphicStream(self.tilde_rep)
        return self._stream

    def term(self, n, which=0):
        """ct(P^n Q) mod p^a for a single index n >= 0."""
        if n < 0:
            raise ValueError("index must be >= 0")
        quotient, k = divmod(n, self.block_count)
        row = self._all_rows[which][k]
        return self.tilde_rep.eval_digits(digits_lsd(quotient, self.p), row=row)

    def prefix(self, n, which=0):
        """The first n terms of ct(P^*) mod p^a, via the letter stream."""
        if n <= 0:
            return []
        blocks = self.block_count
        quotient_len = -(-n // blocks)
        stream = self.stream()
        per_residue = [
            stream.coded_prefix(row, quotient_len) for row in self._all_rows[which]
        ]
        out = []
        for q in range(quotient_len):
            for k in range(blocks):
                if len(out) == n:
                    return out
                out.append(per_residue[k][q])
        return out

    def __repr__(self):
        return "<TildeReduction p=%d a=%d ell=%d window=%d>" % (
            self.p, self.a, self.ell, len(self.tilde_rep.index_set),
        )


def build_reduction(P, Q, p, a, **caps):
    """The single-coding reduction for ct(P^n Q) mod p^a."""
    return TildeReduction(P, [Q], p, a, **caps)


def build_reduction_multi(P, Qs, p, a, **caps):
    """One reduction serving several codings over a shared window."""
    return TildeReduction(P, Qs, p, a, **caps)


def term(red, n, which=0):
    return red.term(n, which)


def prefix(red, n, which=0):
    return red.prefix(n, which)
