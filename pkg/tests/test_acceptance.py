"""Acceptance criteria, one check per criterion.

Each ``criterion_N`` returns ``(passed, detail)``. Under pytest the outcome
lines are printed in the terminal summary; ``python tests/test_acceptance.py``
prints them directly.
"""
from __future__ import annotations

import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import rand_bipoly, rand_fraction, rand_naive, rand_trig, sample_ts  # noqa: E402
from trigpoly import (  # noqa: E402
    BiPoly,
    Modulus,
    NaiveRepresentation,
    Obstruction,
    TrigPoly,
    UniPoly,
    canonical_to_trig,
    chebyshev,
    decide_naive,
    identity_check,
    ideal_member,
    naive_to_standard,
    param_point,
    parity_split,
    reduce,
    representability_oracle,
    trig_to_canonical,
)
from trigpoly.cli import run  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}

# Fixed exact circle points: parameters 1/21 .. 20/21.
CIRCLE_POINTS = [param_point(Fraction(j, 21)) for j in range(1, 21)]


def criterion_1():
    """sin(2kt), k = 1..10, is obstructed by exactly U_{2k-1}; under 1 s."""
    chebyshev.cache_clear()
    start = time.perf_counter()
    failures = []
    for k in range(1, 11):
        result = decide_naive(TrigPoly.sin(2 * k))
        u = chebyshev("U", 2 * k - 1)
        if not isinstance(result, Obstruction) or result.b_odd != u:
            failures.append(k)
        elif not parity_split(u)[0].is_zero():
            failures.append(k)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1.0
    return ok, f"failures={failures} elapsed={elapsed:.3f}s (limit 1s)"


def criterion_2():
    """sin((2k+1)t) has p = 0; cos(nt) has p = T_n, q = 0."""
    bad_sin = []
    for k in range(10):
        rep = decide_naive(TrigPoly.sin(2 * k + 1))
        if not isinstance(rep, NaiveRepresentation) or not rep.p.is_zero():
            bad_sin.append(k)
    bad_cos = []
    for n in range(21):
        rep = decide_naive(TrigPoly.cos(n))
        if rep != NaiveRepresentation(chebyshev("T", n), UniPoly()):
            bad_cos.append(n)
    ok = not bad_sin and not bad_cos
    return ok, f"sin k=0..9 failures={bad_sin}; cos n=0..20 failures={bad_cos}"


def criterion_3():
    """naive_to_standard on 200 random naive polynomials, checked exactly."""
    rng = random.Random(2024)
    failures = 0
    for _ in range(200):
        g = rand_naive(rng, 10)
        f = naive_to_standard(g)
        direct = BiPoly.from_x(g.p) + BiPoly.from_y(g.q)
        direct_trig = canonical_to_trig(reduce(direct, Modulus.CIRCLE)[1])
        form = trig_to_canonical(f)
        same_values = all(form(x, y) == direct(x, y) for x, y in CIRCLE_POINTS)
        if not (identity_check(f, direct_trig).equal and same_values):
            failures += 1
    return failures == 0, f"{failures}/200 mismatches at 20 exact circle points"


def criterion_4():
    """Exact recomposition and the three-way ideal-membership equivalence."""
    rng = random.Random(4044)
    circle = Modulus.CIRCLE.polynomial
    bad_recompose = bad_equiv = members = 0
    for j in range(200):
        if j % 4 == 0:
            r = circle * rand_bipoly(rng, 4)
        else:
            r = rand_bipoly(rng, 6)
        s, c = reduce(r, Modulus.CIRCLE)
        if s * circle + c.to_bipoly() != r:
            bad_recompose += 1
        member = ideal_member(r, Modulus.CIRCLE)
        vanishes = all(not r(x, y) for x, y in CIRCLE_POINTS)
        if not (member == c.is_zero() == vanishes):
            bad_equiv += 1
        members += member
    ok = bad_recompose == 0 and bad_equiv == 0
    return ok, (
        f"recomposition failures={bad_recompose}, equivalence failures={bad_equiv}, "
        f"members={members}/200"
    )


def criterion_5():
    """decide_naive agrees with the linear-algebra oracle; under 10 s."""
    rng = random.Random(5055)
    start = time.perf_counter()
    disagreements = constructed = 0
    for j in range(100):
        if j % 5 < 2:
            f = naive_to_standard(rand_naive(rng, 8))
            constructed += 1
        else:
            f = rand_trig(rng, 8)
        decided = isinstance(decide_naive(f), NaiveRepresentation)
        if decided != representability_oracle(f):
            disagreements += 1
    elapsed = time.perf_counter() - start
    ok = disagreements == 0 and constructed >= 30 and elapsed < 10.0
    return ok, (
        f"disagreements={disagreements}, constructed={constructed}, "
        f"elapsed={elapsed:.2f}s (limit 10s)"
    )


def criterion_6():
    """Chebyshev functional equations in floats; coefficient parity for n <= 30."""
    ts = sample_ts(50, seed=66)
    worst = 0.0
    for n in range(16):
        t_n = chebyshev("T", n)
        for t in ts:
            worst = max(worst, abs(t_n.eval_complex(math.cos(t)) - math.cos(n * t)))
            if n:
                u = chebyshev("U", n - 1).eval_complex(math.cos(t))
                worst = max(worst, abs(math.sin(t) * u - math.sin(n * t)))
    bad_parity = []
    for n in range(31):
        for kind in "TU":
            even, odd = parity_split(chebyshev(kind, n))
            if (even if n % 2 else odd) or chebyshev(kind, n).degree != n:
                bad_parity.append((kind, n))
    ok = worst < 1e-9 and not bad_parity
    return ok, f"max deviation={worst:.2e} (tol 1e-9), parity failures={bad_parity}"


def criterion_7():
    """Hyperbolic identity via the CLI; 50 multiples of x^2 - y^2 - 1 reduce to zero."""
    code, text = run(["identity", "cosh(t)^2 - sinh(t)^2 = 1"])
    rng = random.Random(7077)
    hyper = Modulus.HYPERBOLA.polynomial
    nonzero = 0
    for _ in range(50):
        cofactor = rand_bipoly(rng, 4)
        while cofactor.is_zero():
            cofactor = rand_bipoly(rng, 4)
        s, c = reduce(hyper * cofactor, Modulus.HYPERBOLA)
        if not c.is_zero() or s != cofactor:
            nonzero += 1
    ok = code == 0 and text == "IDENTITY" and nonzero == 0
    return ok, f"cli exit={code} output={text!r}; nonzero residues={nonzero}/50"


GOLDEN = [
    (["naive", "sin(2t)"], 1, "NOT REPRESENTABLE\nobstruction: odd part of B(x) = 2*x"),
    (["identity", "2*sin(t)*cos(t) = sin(2t)"], 0, "IDENTITY"),
    (["chebyshev", "T", "2"], 0, "2*x^2 - 1"),
]


def criterion_8():
    """CLI golden transcript, byte-identical."""
    mismatches = [argv for argv, code, text in GOLDEN if run(argv) != (code, text)]
    return not mismatches, f"mismatches={mismatches}"


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}


def format_line(number: int, ok: bool, detail: str) -> str:
    title = CRITERIA[number].__doc__.strip()
    return f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title} [{detail}]"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = CRITERIA[number]()
    RESULTS[number] = (ok, detail)
    assert ok, format_line(number, ok, detail)


if __name__ == "__main__":
    all_ok = True
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number]()
        all_ok &= ok
        print(format_line(number, ok, detail))
    sys.exit(0 if all_ok else 1)
