"""Digit-indexed matrix representation of ct(P^n Q) sequences.

For a window radius m covering both P and Q, the coefficients of P^n
with exponents in T = [-m, m]^r form a column vector V(n), and for each
base-p digit k there is a matrix gamma(k) with

    gamma(k)[i, j] = coefficient of x^(p*j - i) in P^k,

satisfying gamma(k) . V(n) = V(p*n + k).  The sequence value is
vec(Q) . V(n).  Digits are taken least significant first throughout.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import ResourceLimitError, RingMismatchError
from .laurent import LaurentPoly

DEFAULT_WINDOW_CAP = 5000
# building every digit matrix is refused for primes above this
DEFAULT_DIGIT_CAP = 101


def digits_lsd(n, p):
    """Base-p digits of n, least significant first; [0] for n = 0."""
    if n == 0:
        return [0]
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out


class IndexSet:
    """The ordered exponent window T = [-m, m]^r.

    ``vectors`` lists the window lexicographically ascending and
    ``constant_index`` is the position of the all-zero vector.  The
    ordering is positional arithmetic in base 2m+1, which lets matrix
    construction map exponent vectors to indices without dictionaries.
    """

    __slots__ = ("r", "m", "vectors", "position", "constant_index",
                 "_np_vectors", "_weights")

    def __init__(self, r, m):
        if r < 1 or m < 0:
            raise ValueError("need r >= 1 and m >= 0")
        self.r = r
        self.m = m
        self.vectors = tuple(itertools.product(range(-m, m + 1), repeat=r))
        self.position = {v: i for i, v in enumerate(self.vectors)}
        self.constant_index = self.position[(0,) * r]
        self._np_vectors = np.array(self.vectors, dtype=np.int64).reshape(
            len(self.vectors), r
        )
        side = 2 * m + 1
        self._weights = np.array(
            [side ** (r - 1 - i) for i in range(r)], dtype=np.int64
        )

    def __len__(self):
        return len(self.vectors)

    def __repr__(self):
        return "<IndexSet [-%d,%d]^%d, size %d>" % (self.m, self.m, self.r, len(self))


def build_index(P, Qs, window_cap=DEFAULT_WINDOW_CAP):
    """Window radius m = max(deg P - 1, max deg Q_i, 0) as an IndexSet."""
    r = P.nvars
    m = P.degree() - 1
    for q in Qs:
        if q.nvars != r:
            raise RingMismatchError("P and Q variable counts differ")
        m = max(m, q.degree())
    m = max(m, 0)
    size = (2 * m + 1) ** r
    if size > window_cap:
        raise ResourceLimitError(
            "window size %d exceeds cap %d" % (size, window_cap)
        )
    return IndexSet(r, m)


class StateVector:
    """A window of coefficients of some P^n, with its constant entry."""

    __slots__ = ("entries", "constant_index")

    def __init__(self, entries, constant_index):
        self.entries = tuple(int(x) for x in entries)
        self.constant_index = constant_index

    @property
    def constant_entry(self):
        return self.entries[self.constant_index]

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, StateVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "StateVector%r" % (self.entries,)


class LinRep:
    """The triple (vec(Q), gamma, V(0)) over Z/p^a Z.

    Matrices are built lazily per digit and cached; the cache is an
    append-only dict, safe for concurrent readers (a rebuild race writes
    identical content).  For a > 1 the base polynomial must satisfy
    P(x)^p = P(x^p) mod p^a, which primepower.build_reduction arranges;
    with a = 1 any P qualifies.

    Matrix and vector entries are residues; they are stored as float64
    when every accumulated dot product fits below 2^53 (BLAS is far
    faster than integer loops and remains exact there), else as int64.
    """

    def __init__(self, P, Q, p, a=1,
                 index_set=None,
                 window_cap=DEFAULT_WINDOW_CAP,
                 digit_cap=DEFAULT_DIGIT_CAP):
        if a < 1:
            raise ValueError("exponent a must be >= 1")
        self.p = p
        self.a = a
        self.modulus = p**a
        self.digit_cap = digit_cap
        if index_set is None:
            index_set = build_index(P, [Q], window_cap)
        self.index_set = index_set
        # matrix products accumulate |T| products of residues in int64
        if len(index_set) * (self.modulus - 1) ** 2 >= 2**62:
            raise ResourceLimitError(
                "modulus %d too large for exact int64 matrix arithmetic"
                % self.modulus
            )
        # float64 BLAS is much faster than int64 loops and stays exact as
        # long as every accumulated dot product is below 2^53
        if len(index_set) * (self.modulus - 1) ** 2 < 2**53:
            self._dtype = np.float64
        else:
            self._dtype = np.int64
        self.P = P.with_modulus(self.modulus)
        self.Q = Q.with_modulus(self.modulus)
        self.row_Q = self.row_vector(self.Q)
        v0 = np.zeros(len(index_set), dtype=self._dtype)
        v0[index_set.constant_index] = 1
        v0.setflags(write=False)
        self.v0 = v0
        self._gammas = {}
        self._ppows = [LaurentPoly.one(P.nvars, self.modulus)]

    # -- vectors ---------------------------------------------------------

    def row_vector(self, Q):
        """vec(Q): the coefficients of Q at the ordered window indices."""
        Q = Q.with_modulus(self.modulus)
        if Q.degree() > self.index_set.m:
            raise RingMismatchError(
                "polynomial of degree %d does not fit window radius %d"
                % (Q.degree(), self.index_set.m)
            )
        if Q.nvars != self.index_set.r:
            raise RingMismatchError("variable count differs from the window")
        row = np.zeros(len(self.index_set), dtype=self._dtype)
        for e, c in Q.terms.items():
            row[self.index_set.position[e]] = c
        row.setflags(write=False)
        return row

    def _ppow(self, k):
        if len(self._ppows) <= k and self.P.nvars >= 2:
            # multivariate powers through dense arrays; dictionary
            # products choke on the term counts of stable bases
            from ._dense import DenseChain

            chain = DenseChain(self._ppows[-1], self.P, k, self.modulus)
            while len(self._ppows) <= k:
                chain.step()
                self._ppows.append(chain.to_poly())
        while len(self._ppows) <= k:
            self._ppows.append(self._ppows[-1] * self.P)
        return self._ppows[k]

    # -- matrices ----------------------------------------------------------

    def gamma(self, k):
        """The digit matrix for k in 0..p-1."""
        if not 0 <= k < self.p:
            raise ValueError("digit %d out of range for base %d" % (k, self.p))
        g = self._gammas.get(k)
        if g is None:
            g = self._build_gamma(k)
            self._gammas[k] = g
        return g

    def _build_gamma(self, k):
        index = self.index_set
        p = self.p
        g = np.zeros((len(index), len(index)), dtype=self._dtype)
        pk = self._ppow(k)
        # entry (i, j) = coeff of x^(p*j - i); scan terms of P^k once,
        # resolving window positions arithmetically
        jmat = index._np_vectors
        all_j = np.arange(len(index))
        for e, c in pk.terms.items():
            imat = p * jmat - np.array(e, dtype=np.int64)
            valid = (np.abs(imat) <= index.m).all(axis=1)
            rows = ((imat[valid] + index.m) * index._weights).sum(axis=1)
            g[rows, all_j[valid]] = c
        g.setflags(write=False)
        return g

    def all_gammas(self):
        """Every digit matrix; refused for primes above the digit cap."""
        if self.p > self.digit_cap:
            raise ResourceLimitError(
                "materializing %d digit matrices exceeds cap %d"
                % (self.p, self.digit_cap)
            )
        return [self.gamma(k) for k in range(self.p)]

    # -- evaluation -----------------------------------------------------------

    def state_array(self, n):
        """V(n) as an array of residues (integral values, see class note)."""
        v = self.v0
        for d in reversed(digits_lsd(n, self.p)):
            v = self.gamma(d) @ v % self.modulus
        return v

    def state_vector(self, n):
        """V(n): entry at window index i is ct(P^n x^i) mod p^a."""
        return StateVector(self.state_array(n), self.index_set.constant_index)

    def eval_digits(self, digits, row=None):
        """row . gamma(d_0) ... gamma(d_t) . V(0) for an explicit digit word."""
        r = self.row_Q if row is None else row
        for d in digits:
            r = r @ self.gamma(d) % self.modulus
        return int(r[self.index_set.constant_index])

    def eval_term(self, n):
        """ct(P^n Q) mod p^a (requires the stability hypothesis when a > 1)."""
        return self.eval_digits(digits_lsd(n, self.p))

    def settle_exponent(self):
        """Least s >= 1 with gamma(0)^s equal to the constant-index unit."""
        index = self.index_set
        target = np.zeros((len(index), len(index)), dtype=np.int64)
        target[index.constant_index, index.constant_index] = 1
        bound = len(digits_lsd(max(index.m, 1), self.p))
        g0 = self.gamma(0)
        power = g0
        for s in range(1, bound + 1):
            if np.array_equal(power, target):
                return s
            power = power @ g0 % self.modulus
        raise AssertionError(
            "gamma(0)^s did not settle within the provable bound %d" % bound
        )

    def __repr__(self):
        return "<LinRep p=%d a=%d window=%d>" % (self.p, self.a, len(self.index_set))
