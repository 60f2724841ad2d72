"""Random instance generators shared by the test modules."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from hypothesis import strategies as st

from trigpoly import BiPoly, GaussRational, NaiveTrigPoly, TrigPoly, UniPoly


def rand_fraction(rng: random.Random, lo: int = -6, hi: int = 6) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def rand_gauss(rng: random.Random, p_complex: float = 0.3) -> GaussRational:
    im = rand_fraction(rng) if rng.random() < p_complex else Fraction(0)
    return GaussRational(rand_fraction(rng), im)


def rand_unipoly(rng: random.Random, max_degree: int) -> UniPoly:
    d = rng.randint(0, max_degree)
    return UniPoly(tuple(rand_gauss(rng) for _ in range(d + 1)))


def rand_bipoly(rng: random.Random, max_degree: int, density: float = 0.5) -> BiPoly:
    terms = {}
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            if rng.random() < density:
                terms[(i, j)] = rand_gauss(rng)
    return BiPoly(terms)


def rand_trig(rng: random.Random, max_degree: int, density: float = 0.7) -> TrigPoly:
    k = rng.randint(0, max_degree)
    a = [rand_gauss(rng) if rng.random() < density else 0 for _ in range(k + 1)]
    b = [rand_gauss(rng) if rng.random() < density else 0 for _ in range(k)]
    return TrigPoly(tuple(a), tuple(b))


def rand_naive(rng: random.Random, max_degree: int) -> NaiveTrigPoly:
    k = rng.randint(0, max_degree)
    alpha = [rand_gauss(rng) for _ in range(k + 1)]
    beta = [rand_gauss(rng) for _ in range(k)]
    return NaiveTrigPoly(tuple(alpha), tuple(beta))


def sample_ts(n: int = 50, seed: int = 1234) -> list[float]:
    rng = random.Random(seed)
    return [rng.uniform(0.0, 2 * math.pi) for _ in range(n)]


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(GaussRational, fractions, fractions)
nonzero_gauss = gauss.filter(bool)
unipolys = st.lists(gauss, max_size=7).map(lambda cs: UniPoly(tuple(cs)))
