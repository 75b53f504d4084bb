import random

import pytest

from ctseq.laurent import LaurentPoly
from ctseq.textio import preset

CORPUS_SEED = 20250809


def random_poly(rng, nvars=1, degree_max=2, coeff_max=3, nonzero=True):
    while True:
        terms = {}
        for _ in range(rng.randint(1, 2 * degree_max + 2)):
            e = tuple(rng.randint(-degree_max, degree_max) for _ in range(nvars))
            c = rng.randint(-coeff_max, coeff_max)
            if c:
                terms[e] = terms.get(e, 0) + c
        poly = LaurentPoly(nvars, terms)
        if poly.terms or not nonzero:
            return poly


@pytest.fixture(scope="session")
def preset_pairs():
    return {name: preset(name) for name in ("pascal", "catalan", "motzkin", "trinomial", "apery")}


@pytest.fixture(scope="session")
def corpus_pairs():
    """100 seeded univariate (P, Q) pairs for the engine-equivalence runs."""
    rng = random.Random(CORPUS_SEED)
    return [
        (random_poly(rng), random_poly(rng, nonzero=False)) for _ in range(100)
    ]


@pytest.fixture(scope="session")
def corpus_polys():
    """200 seeded univariate P for the settle/stable-base/witness suites."""
    rng = random.Random(CORPUS_SEED + 1)
    return [random_poly(rng, degree_max=3) for _ in range(200)]
