"""Finite automata with output for constant term sequences.

The forward automaton starts from Q and follows Q -> section of P^k Q
on digit k, consuming the index least significant digit first; each
state outputs its constant term.  The reverse automaton has the window
vectors V(i) as states with transitions V -> gamma(k).V; it yields V(n)
when fed the digits of n most significant first (it reads the forward
input in reverse, hence the name), and its output is the constant entry,
optionally coded by an explicit row vector.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .errors import ResourceLimitError
from .laurent import LaurentPoly
from .linrep import LinRep, digits_lsd

DEFAULT_STATE_CAP = 50_000

_EXPORT_FORMATS = ("dot", "walnut")


class Dfao:
    """A complete automaton over digits 0..p-1 with per-state outputs."""

    __slots__ = (
        "p",
        "modulus",
        "direction",
        "initial",
        "transitions",
        "outputs",
        "state_labels",
        "state_vectors",
    )

    def __init__(self, p, modulus, direction, transitions, outputs,
                 state_labels, state_vectors=None):
        self.p = p
        self.modulus = modulus
        self.direction = direction
        self.initial = 0
        self.transitions = transitions
        self.outputs = outputs
        self.state_labels = state_labels
        self.state_vectors = state_vectors

    @property
    def state_count(self):
        return len(self.transitions)

    def run_digits(self, digits, row=None):
        """Consume an explicit digit word in the machine's own order."""
        state = self.initial
        table = self.transitions
        for d in digits:
            state = table[state][d]
        if self.direction == "reverse" and row is not None:
            row = np.asarray(row, dtype=np.int64)
            vec = np.array(self.state_vectors[state], dtype=np.int64)
            return int(row @ vec % self.modulus)
        return self.outputs[state]

    def run(self, n, row=None):
        """The sequence value at index n.

        The forward machine consumes the base-p digits of n least
        significant first; the reverse machine consumes them most
        significant first.  Either way the result is the value at n.
        """
        digits = digits_lsd(n, self.p)
        if self.direction == "reverse":
            digits = list(reversed(digits))
        return self.run_digits(digits, row)

    def export(self, format):  # noqa: A002 - external interface name
        if format == "walnut":
            return self._export_walnut()
        if format == "dot":
            return self._export_dot()
        raise ValueError(
            "unknown export format %r (expected one of %s)"
            % (format, "/".join(_EXPORT_FORMATS))
        )

    def _export_walnut(self):
        order = "lsd" if self.direction == "forward" else "msd"
        blocks = ["%s_%d" % (order, self.p)]
        for s in range(self.state_count):
            lines = ["%d %d" % (s, self.outputs[s])]
            for d in range(self.p):
                lines.append("%d -> %d" % (d, self.transitions[s][d]))
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    def _export_dot(self):
        lines = ["digraph {"]
        for s in range(self.state_count):
            lines.append('  %d [label="%d/%d"];' % (s, s, self.outputs[s]))
        for s in range(self.state_count):
            for d in range(self.p):
                lines.append(
                    '  %d -> %d [label="%d"];' % (s, self.transitions[s][d], d)
                )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return "<Dfao %s p=%d states=%d>" % (
            self.direction, self.p, self.state_count,
        )


def _poly_from_row(row, index_set, nvars, modulus):
    terms = {}
    for pos, c in enumerate(row):
        if c:
            terms[index_set.vectors[pos]] = int(c)
    return LaurentPoly(nvars, terms, modulus)


def build_forward(P, Q, p, modulus=None, state_cap=DEFAULT_STATE_CAP, rep=None):
    """Close {Q} under Q -> section of P^k Q over all digits k.

    ``modulus`` defaults to p.  For a modulus p^a with a > 1 the caller
    must supply a stable base (see primepower.build_reduction); with the
    default prime modulus any P is valid.  States are explored breadth
    first with digits ascending, so the numbering is reproducible.
    Transitions are computed through the window matrices; the agreement
    with the direct section-operator map is covered by the duality tests.
    """
    if rep is None:
        if modulus is None:
            modulus = p
        a = _power_exponent(modulus, p)
        rep = LinRep(P, Q, p, a)
    from .textio import format_poly

    mod = rep.modulus
    index = rep.index_set
    c_index = index.constant_index
    gammas = rep.all_gammas()
    start = tuple(int(x) for x in rep.row_vector(Q))
    ids = {start: 0}
    rows = [start]
    transitions = []
    queue = deque([0])
    while queue:
        s = queue.popleft()
        row = np.array(rows[s], dtype=np.int64)
        dests = []
        for g in gammas:
            new = tuple(int(x) for x in row @ g % mod)
            t = ids.get(new)
            if t is None:
                t = len(rows)
                if t >= state_cap:
                    raise ResourceLimitError(
                        "forward automaton exceeds %d states" % state_cap
                    )
                ids[new] = t
                rows.append(new)
                queue.append(t)
            dests.append(t)
        transitions.append(dests)
    outputs = [int(r[c_index]) for r in rows]
    labels = [
        format_poly(_poly_from_row(r, index, rep.P.nvars, mod)) for r in rows
    ]
    return Dfao(rep.p, mod, "forward", transitions, outputs, labels)


def build_reverse(rep, state_cap=DEFAULT_STATE_CAP):
    """Close {V(0)} under V -> gamma(k).V over all digits k."""
    mod = rep.modulus
    gammas = rep.all_gammas()
    c_index = rep.index_set.constant_index
    start = tuple(int(x) for x in rep.v0)
    ids = {start: 0}
    vecs = [start]
    transitions = []
    queue = deque([0])
    while queue:
        s = queue.popleft()
        vec = np.array(vecs[s], dtype=np.int64)
        dests = []
        for g in gammas:
            new = tuple(int(x) for x in g @ vec % mod)
            t = ids.get(new)
            if t is None:
                t = len(vecs)
                if t >= state_cap:
                    raise ResourceLimitError(
                        "reverse automaton exceeds %d states" % state_cap
                    )
                ids[new] = t
                vecs.append(new)
                queue.append(t)
            dests.append(t)
        transitions.append(dests)
    outputs = [int(v[c_index]) for v in vecs]
    labels = ["(%s)" % ",".join(str(x) for x in v) for v in vecs]
    return Dfao(rep.p, mod, "reverse", transitions, outputs, labels,
                state_vectors=vecs)


def _power_exponent(modulus, p):
    """a such that modulus = p^a, validating the shape."""
    a = 0
    m = modulus
    while m % p == 0 and m > 1:
        m //= p
        a += 1
    if m != 1 or a == 0:
        raise ValueError("modulus %d is not a power of %d" % (modulus, p))
    return a


def run(d, n, row=None):
    return d.run(n, row)


def export(d, format):  # noqa: A002
    return d.export(format)
