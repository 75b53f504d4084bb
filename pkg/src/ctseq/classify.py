"""Exact recurrence classification, zero witnesses, and statistics.

A sequence ct(P^n Q) mod p^a is linearly recurrent exactly when no
power of P has constant term divisible by p; otherwise zero occurs with
frequency one.  The decision depends only on P and p, never on Q or a,
and it is made exactly: breadth-first closure of the window vectors of
P mod p either exhausts every reachable state with nonzero constant
entry, or it finds the least index n0 with p | ct(P^n0).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction

import numpy as np

from . import oracle
from .errors import ResourceLimitError
from .laurent import LaurentPoly
from .linrep import LinRep
from .morphism import MorphicStream
from .primepower import build_reduction_multi

DEFAULT_STATE_CAP = 200_000
# zero witnesses larger than this skip the brute-force cross-checks
WITNESS_VERIFY_BUDGET = 20_000


@dataclass
class ReachReport:
    """Closure of the window vectors of P, with the zero-term flags."""

    states: list
    zero_ct_reachable: bool
    witness_n0: int | None
    nonzero_ct_off_origin: bool  # some n > 0 keeps the constant term a unit


def reachable_states(rep, state_cap=DEFAULT_STATE_CAP):
    """All vectors gamma-reachable from V(0), in first-occurrence order.

    The walk that first reaches each state is the most significant
    digit string of the least n producing it, so states are discovered
    in increasing order of that n and the first state whose constant
    entry vanishes mod p yields the minimal witness index.
    """
    p = rep.p
    mod = rep.modulus
    gammas = rep.all_gammas()
    c_index = rep.index_set.constant_index
    start = tuple(int(x) for x in rep.v0)
    ids = {start: 0}
    states = [start]
    values = [0]  # least index n with V(n) equal to this state
    witness = None
    queue = deque([0])
    while queue:
        s = queue.popleft()
        vec = np.array(states[s], dtype=np.int64)
        for k in range(p):
            new = tuple(int(x) for x in gammas[k] @ vec % mod)
            if new not in ids:
                t = len(states)
                if t >= state_cap:
                    raise ResourceLimitError(
                        "reachable set exceeds %d states" % state_cap
                    )
                ids[new] = t
                states.append(new)
                values.append(values[s] * p + k)
                if witness is None and new[c_index] % p == 0:
                    witness = values[t]
                queue.append(t)
    # states reachable along some walk containing a nonzero digit;
    # these are exactly the V(n) with n > 0
    seen = set()
    frontier = deque()
    for s in range(len(states)):
        vec = np.array(states[s], dtype=np.int64)
        for k in range(1, p):
            t = ids[tuple(int(x) for x in gammas[k] @ vec % mod)]
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    off_origin_unit = False
    while frontier:
        s = frontier.popleft()
        if states[s][c_index] % p != 0:
            off_origin_unit = True
            break
        vec = np.array(states[s], dtype=np.int64)
        for k in range(p):
            t = ids[tuple(int(x) for x in gammas[k] @ vec % mod)]
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return ReachReport(
        states=states,
        zero_ct_reachable=witness is not None,
        witness_n0=witness,
        nonzero_ct_off_origin=off_origin_unit,
    )


def _verify_witness(P, p, rep, n0):
    """Belt-and-braces checks on a BFS witness (skipped when huge)."""
    if n0 is None or n0 > WITNESS_VERIFY_BUDGET:
        return
    prefix = MorphicStream(rep).coded_prefix(rep.v0, n0 + 1)
    if any(v % p == 0 for v in prefix[:n0]):
        raise AssertionError("breadth-first witness %d is not minimal" % n0)
    if prefix[n0] % p != 0:
        raise AssertionError("breadth-first witness %d is not a zero" % n0)
    if n0 <= 2_000:
        if oracle.ct_pow_mod(P, LaurentPoly.one(P.nvars), n0, p) != 0:
            raise AssertionError("oracle rejects witness %d" % n0)


def zero_witness(P, p, state_cap=DEFAULT_STATE_CAP):
    """Least n with p | ct(P^n), or None if provably no such n exists.

    None is exact, not heuristic: it means the closure was exhausted
    with every constant entry a unit mod p.  A state-cap overflow
    raises ResourceLimitError instead of returning anything.
    """
    rep = LinRep(P, LaurentPoly.one(P.nvars), p, 1)
    reach = reachable_states(rep, state_cap)
    _verify_witness(P, p, rep, reach.witness_n0)
    return reach.witness_n0


@dataclass
class Verdict:
    p: int
    a: int
    m: int
    window_size: int
    settle_s: int
    reachable_states: int
    zero_witness: int | None
    linearly_recurrent: bool | None
    recurrence_guaranteed: bool | None
    conjecture_bound: int
    naive_bound_digits: int
    status: str


def _naive_bound_digits(p, window_size):
    """Decimal digit count of p^(p^window_size)."""
    if window_size > 200_000:
        raise ResourceLimitError("window too large to size the a priori bound")
    exponent = p**window_size
    getcontext().prec = len(str(exponent)) + 25
    return int(Decimal(exponent) * Decimal(p).log10()) + 1


def verdict(P, Q, p, a=1, state_cap=DEFAULT_STATE_CAP):
    """Classify ct(P^n Q) mod p^a.

    The window is built from P alone (coding by Q never affects the
    answer, nor does the exponent a); Q and a are echoed into the
    record so callers can tell what was asked.
    """
    rep = LinRep(P, LaurentPoly.one(P.nvars), p, 1)
    index = rep.index_set
    settle = rep.settle_exponent()
    deg = P.degree()
    try:
        reach = reachable_states(rep, state_cap)
        _verify_witness(P, p, rep, reach.witness_n0)
        witness = reach.witness_n0
        return Verdict(
            p=p,
            a=a,
            m=index.m,
            window_size=len(index),
            settle_s=settle,
            reachable_states=len(reach.states),
            zero_witness=witness,
            linearly_recurrent=witness is None,
            recurrence_guaranteed=reach.nonzero_ct_off_origin,
            conjecture_bound=p**deg,
            naive_bound_digits=_naive_bound_digits(p, len(index)),
            status="exact",
        )
    except ResourceLimitError:
        return Verdict(
            p=p,
            a=a,
            m=index.m,
            window_size=len(index),
            settle_s=settle,
            reachable_states=0,
            zero_witness=None,
            linearly_recurrent=None,
            recurrence_guaranteed=None,
            conjecture_bound=p**deg,
            naive_bound_digits=_naive_bound_digits(p, len(index)),
            status="inconclusive",
        )


# ---------------------------------------------------------------------------
# sequence statistics
# ---------------------------------------------------------------------------


def zero_frequency(seq, count):
    """Exact fraction of zeros among the first ``count`` terms."""
    if count <= 0:
        raise ValueError("count must be positive")
    if len(seq) < count:
        raise ValueError("sequence provides %d of %d terms" % (len(seq), count))
    zeros = sum(1 for v in seq[:count] if v == 0)
    return Fraction(zeros, count)


@dataclass
class GapRow:
    word: tuple
    count: int
    max_gap: int
    censored: bool


@dataclass
class GapReport:
    word_length: int
    prefix_length: int
    rows: list = field(default_factory=list)


def gap_stats(seq, word_length, count):
    """Largest spacing between repeats of each length-L word.

    Purely empirical: gaps are measured between start positions of
    occurrences inside the prefix, and a row is flagged censored when
    the unexplored tail after its last occurrence already exceeds the
    largest gap seen, so the true bound may be larger.
    """
    if not 0 < word_length <= count:
        raise ValueError("need 0 < word length <= prefix length")
    if len(seq) < count:
        raise ValueError("sequence provides %d of %d terms" % (len(seq), count))
    occurrences = {}
    for i in range(count - word_length + 1):
        w = tuple(seq[i : i + word_length])
        occurrences.setdefault(w, []).append(i)
    report = GapReport(word_length=word_length, prefix_length=count)
    last_start = count - word_length
    for w in sorted(occurrences):
        starts = occurrences[w]
        gap = max(
            (b - a for a, b in zip(starts, starts[1:])), default=0
        )
        censored = (last_start - starts[-1]) > gap
        report.rows.append(GapRow(w, len(starts), gap, censored))
    return report


# ---------------------------------------------------------------------------
# combinations
# ---------------------------------------------------------------------------


def combine(P, parts, p, a, count):
    """First ``count`` values of sum_i beta_i * ct(P^(n+k_i) Q_i) mod p^a.

    ``parts`` is a list of (shift, Q, beta) with shift >= 0.  All parts
    are read off one shared letter stream.
    """
    rows = combine_components(P, parts, p, a, count)
    mod = p**a
    out = []
    betas = [beta for _, _, beta in parts]
    for values in rows:
        out.append(sum(b * v for b, v in zip(betas, values)) % mod)
    return out


def combine_components(P, parts, p, a, count):
    """The raw tuples (ct(P^(n+k_i) Q_i))_i per index, for external use."""
    if not parts:
        raise ValueError("need at least one part")
    for shift, _, _ in parts:
        if shift < 0:
            raise ValueError("shifts must be >= 0")
    red = build_reduction_multi(P, [q for _, q, _ in parts], p, a)
    streams = [
        red.prefix(count + shift, which=i)[shift:]
        for i, (shift, _, _) in enumerate(parts)
    ]
    return list(zip(*streams)) if count else []


# ---------------------------------------------------------------------------
# the one-variable bound scan
# ---------------------------------------------------------------------------


@dataclass
class ScanItem:
    index: int
    poly: LaurentPoly
    p: int
    status: str  # "witness" | "no_zero" | "inconclusive"
    witness: int | None
    bound: int
    conforms: bool | None


@dataclass
class ScanReport:
    count: int
    primes: tuple
    degree_max: int
    coeff_max: int
    seed: int
    items: list = field(default_factory=list)

    @property
    def violations(self):
        return [it for it in self.items if it.conforms is False]

    @property
    def inconclusive(self):
        return [it for it in self.items if it.status == "inconclusive"]


def random_univariate(rng, degree_max, coeff_max):
    """A nonzero one-variable polynomial with bounded degree and entries."""
    while True:
        terms = {}
        for e in range(-degree_max, degree_max + 1):
            c = rng.randint(-coeff_max, coeff_max)
            if c:
                terms[(e,)] = c
        if terms:
            return LaurentPoly(1, terms)


def conjecture_scan(count=200, degree_max=3, coeff_max=3, primes=(2, 3, 5),
                    seed=0, state_cap=DEFAULT_STATE_CAP):
    """Hunt for one-variable witnesses at or above p^deg(P).

    Every found witness is compared against the p^deg(P) threshold;
    rows that meet or exceed it are findings reported as violations,
    never assertion failures.
    """
    rng = random.Random(seed)
    corpus = [random_univariate(rng, degree_max, coeff_max) for _ in range(count)]
    report = ScanReport(
        count=count, primes=tuple(primes), degree_max=degree_max,
        coeff_max=coeff_max, seed=seed,
    )
    for idx, poly in enumerate(corpus):
        for p in primes:
            bound = p ** poly.degree()
            try:
                witness = zero_witness(poly, p, state_cap)
            except ResourceLimitError:
                report.items.append(
                    ScanItem(idx, poly, p, "inconclusive", None, bound, None)
                )
                continue
            if witness is None:
                report.items.append(
                    ScanItem(idx, poly, p, "no_zero", None, bound, None)
                )
            else:
                report.items.append(
                    ScanItem(idx, poly, p, "witness", witness, bound,
                             witness < bound)
                )
    return report
