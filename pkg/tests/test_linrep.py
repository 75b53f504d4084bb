import random

import numpy as np
import pytest

from ctseq import oracle
from ctseq.errors import ResourceLimitError, RingMismatchError
from ctseq.laurent import LaurentPoly
from ctseq.linrep import IndexSet, LinRep, build_index, digits_lsd
from ctseq.textio import parse_poly, preset

one = LaurentPoly.one(1)


def test_digits_lsd():
    assert digits_lsd(0, 3) == [0]
    assert digits_lsd(6, 3) == [0, 2]
    assert digits_lsd(11, 2) == [1, 1, 0, 1]


def test_build_index_motzkin():
    P, Q = preset("motzkin")
    index = build_index(P, [Q])
    assert (index.m, len(index), index.constant_index) == (2, 5, 2)
    assert index.vectors[0] == (-2,)
    assert index.vectors[index.constant_index] == (0,)


def test_build_index_window_of_one():
    P, _ = preset("pascal")
    index = build_index(P, [one])
    assert (index.m, len(index)) == (0, 1)
    P3, Q3 = preset("apery")
    index3 = build_index(P3, [Q3])
    assert (index3.m, len(index3)) == (0, 1)


def test_build_index_cap():
    P = parse_poly("x^40*y^40 + x^-40*y^-40")
    with pytest.raises(ResourceLimitError):
        build_index(P, [LaurentPoly.one(2)])


def test_index_set_order():
    index = IndexSet(2, 1)
    assert index.vectors[:3] == ((-1, -1), (-1, 0), (-1, 1))
    assert index.vectors[index.constant_index] == (0, 0)


def test_gamma_trinomial_digit_one():
    P, Q = preset("motzkin")  # same trinomial base, window radius 2
    rep = LinRep(P, Q, 3)
    g = rep.gamma(1)
    expected = {(-2, -1), (-1, 0), (0, 0), (1, 0), (2, 1)}
    pos = rep.index_set.position
    for i, ivec in enumerate(rep.index_set.vectors):
        for j, jvec in enumerate(rep.index_set.vectors):
            want = 1 if (ivec[0], jvec[0]) in expected else 0
            assert g[i, j] == want, (ivec, jvec)
    assert pos[(0,)] == 2


def test_gamma_zero_is_constant_unit():
    P, Q = preset("motzkin")
    rep = LinRep(P, Q, 3)
    g0 = np.asarray(rep.gamma(0))
    target = np.zeros_like(g0)
    target[2, 2] = 1
    assert np.array_equal(g0, target)


def test_gamma_window_of_one():
    P, _ = preset("pascal")
    rep = LinRep(P, one, 2)
    assert rep.gamma(0).tolist() == [[1]]
    assert rep.gamma(1).tolist() == [[0]]
    with pytest.raises(ValueError):
        rep.gamma(2)


def test_state_vector_trinomial():
    P, _ = preset("trinomial")
    rep = LinRep(P, parse_poly("1 - x^2"), 3)
    assert rep.state_vector(2).entries == (1, 2, 0, 2, 1)
    assert rep.state_vector(0).entries == tuple(int(x) for x in rep.v0)
    # digits of 6 are (0, 2) lsd-first, so V(6) = gamma(0) V(2)
    v6 = rep.gamma(0) @ rep.state_array(2) % 3
    assert rep.state_vector(6).entries == tuple(int(x) for x in v6)
    # cross-check against the expanded power
    p6 = P.with_modulus(3).pow(6)
    want = tuple(p6.coeff((-i,)) for i in range(-2, 3))
    assert rep.state_vector(6).entries == want


def test_state_vector_constant_entry():
    P, _ = preset("trinomial")
    rep = LinRep(P, one, 3)
    assert rep.state_vector(2).constant_entry == 0  # central trinomial 3 = 0 mod 3


def test_eval_term_fixtures():
    P, Q = preset("motzkin")
    rep = LinRep(P, Q, 3)
    assert rep.eval_term(2) == 2  # third Motzkin number
    assert rep.eval_term(0) == Q.ct() % 3
    Pc, Qc = preset("catalan")
    repc = LinRep(Pc, Qc, 2)
    assert repc.eval_term(3) == 1  # fourth Catalan number is 5


def test_settle_exponent():
    P, Q = preset("motzkin")
    assert LinRep(P, Q, 3).settle_exponent() == 1
    assert LinRep(preset("pascal")[0], one, 2).settle_exponent() == 1
    rep = LinRep(P, parse_poly("x^9 + x^-9"), 2)
    s = rep.settle_exponent()
    assert s <= 4
    g0 = np.asarray(rep.gamma(0))
    power = np.linalg.matrix_power(g0, s) % 2
    target = np.zeros_like(g0)
    c = rep.index_set.constant_index
    target[c, c] = 1
    assert np.array_equal(power, target)
    for extra in (1, 2):
        assert np.array_equal(np.linalg.matrix_power(g0, s + extra) % 2, target)


def test_digit_step_identity_presets():
    for name in ("pascal", "catalan", "motzkin"):
        P, Q = preset(name)
        for p in (2, 3):
            rep = LinRep(P, Q, p)
            vs = [rep.state_array(n) for n in range(p * 120 + p)]
            for n in range(120):
                for k in range(p):
                    got = rep.gamma(k) @ vs[n] % p
                    assert np.array_equal(got, vs[p * n + k]), (name, p, n, k)


def test_oracle_agreement_small():
    for name in ("pascal", "catalan", "motzkin", "trinomial"):
        P, Q = preset(name)
        for p in (2, 3, 5):
            rep = LinRep(P, Q, p)
            want = oracle.sequence(P, Q, p, 500)
            assert [rep.eval_term(n) for n in range(500)] == want, (name, p)
    P, Q = preset("apery")
    rep = LinRep(P, Q, 5)
    assert [rep.eval_term(n) for n in range(48)] == oracle.sequence(P, Q, 5, 48)


def test_row_column_duality():
    rng = random.Random(3)
    from conftest import random_poly

    cases = [preset("motzkin"), preset("catalan")]
    cases += [(random_poly(rng), random_poly(rng)) for _ in range(20)]
    for P, Q in cases:
        for p in (2, 3, 5):
            rep = LinRep(P, Q, p)
            Pm = P.with_modulus(p)
            state = Q.with_modulus(p)
            for k in range(p):
                lhs = rep.row_vector(state) @ rep.gamma(k) % p
                rhs = rep.row_vector(Pm.pow(k).mul(state).lambda_k(p))
                assert np.array_equal(lhs, rhs), (p, k)


def test_degree_closure_under_iteration():
    rng = random.Random(4)
    from conftest import random_poly

    P = random_poly(rng, degree_max=3)
    Q = random_poly(rng, degree_max=3)
    p = 3
    m = build_index(P, [Q]).m
    state = Q.with_modulus(p)
    Pm = P.with_modulus(p)
    powers = [Pm.pow(k) for k in range(p)]
    for _ in range(200):
        k = rng.randrange(p)
        state = powers[k].mul(state).lambda_k(p)
        assert state.degree() <= m


def test_trailing_zero_invariance():
    P, Q = preset("motzkin")
    rep = LinRep(P, Q, 3)
    for n in (0, 1, 5, 19, 100):
        base = digits_lsd(n, 3)
        value = rep.eval_digits(base)
        for pad in (1, 2, 5):
            assert rep.eval_digits(base + [0] * pad) == value


def test_row_vector_validation():
    P, Q = preset("motzkin")
    rep = LinRep(P, Q, 3)
    with pytest.raises(RingMismatchError):
        rep.row_vector(parse_poly("x^9"))
    with pytest.raises(RingMismatchError):
        rep.row_vector(parse_poly("x*y"))


def test_digit_cap():
    P, Q = preset("pascal")
    rep = LinRep(P, Q, 103, digit_cap=101)
    assert rep.eval_term(5) is not None  # single digits build lazily
    with pytest.raises(ResourceLimitError):
        rep.all_gammas()
