"""Trigonometric polynomials in the Fourier basis and in the power ("naive") basis.

A :class:`TrigPoly` is ``sum a_n cos(nt) + sum b_n sin(nt)``. Through
``cos(nt) = T_n(cos t)`` and ``sin(nt) = sin t * U_{n-1}(cos t)`` it corresponds
to the circle residue ``A(x) + y*B(x)`` with ``x = cos t`` and ``y = sin t``.
A function is a combination of powers of ``cos t`` and ``sin t`` exactly when
``B`` is an even polynomial; :func:`decide_naive` returns either the
representation or the odd part of ``B`` as the obstruction.
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Sequence

from .numkernel import (
    ZERO,
    BiPoly,
    GaussRational,
    ScalarLike,
    UniPoly,
    _join_terms,
    chebyshev,
    compose,
    parity_split,
    to_chebyshev_basis,
)
from .quotient import (
    CanonicalForm,
    Modulus,
    bezout_degree_bound,
    canonical_mul,
    param_point,
    reduce,
    witness_parameters,
)

__all__ = [
    "TrigPoly",
    "NaiveTrigPoly",
    "NaiveRepresentation",
    "Obstruction",
    "IdentityResult",
    "SampleReport",
    "trig_to_canonical",
    "canonical_to_trig",
    "naive_to_standard",
    "trig_mul",
    "decide_naive",
    "identity_check",
    "sample_check",
]

DEFAULT_TOL = 1e-9


def _trim_pair(a: Sequence[GaussRational], b: Sequence[GaussRational]):
    a = [GaussRational.coerce(c) for c in a] or [ZERO]
    b = [GaussRational.coerce(c) for c in b]
    k = max(len(a) - 1, len(b))
    a += [ZERO] * (k + 1 - len(a))
    b += [ZERO] * (k - len(b))
    while k > 0 and not a[k] and not b[k - 1]:
        k -= 1
    return tuple(a[: k + 1]), tuple(b[:k])


@dataclass(frozen=True)
class TrigPoly:
    """``sum_{n=0..k} a[n] cos(nt) + sum_{n=1..k} b[n-1] sin(nt)``.

    ``b`` is stored zero-based: ``b[0]`` is the coefficient of ``sin(t)``.
    """

    a: tuple[GaussRational, ...] = (ZERO,)
    b: tuple[GaussRational, ...] = ()

    def __post_init__(self):
        a, b = _trim_pair(self.a, self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def constant(cls, c: ScalarLike) -> TrigPoly:
        return cls((c,))

    @classmethod
    def cos(cls, n: int, c: ScalarLike = 1) -> TrigPoly:
        return cls((ZERO,) * n + (GaussRational.coerce(c),))

    @classmethod
    def sin(cls, n: int, c: ScalarLike = 1) -> TrigPoly:
        if n < 1:
            raise ValueError("sin(nt) needs n >= 1")
        return cls((ZERO,), (ZERO,) * (n - 1) + (GaussRational.coerce(c),))

    @property
    def degree(self) -> int:
        return len(self.a) - 1

    def cos_coeff(self, n: int) -> GaussRational:
        return self.a[n] if 0 <= n < len(self.a) else ZERO

    def sin_coeff(self, n: int) -> GaussRational:
        return self.b[n - 1] if 1 <= n <= len(self.b) else ZERO

    def is_zero(self) -> bool:
        return self.degree == 0 and not self.a[0]

    def __add__(self, other):
        other = _as_trig(other)
        if other is None:
            return NotImplemented
        k = max(self.degree, other.degree)
        a = [self.cos_coeff(n) + other.cos_coeff(n) for n in range(k + 1)]
        b = [self.sin_coeff(n) + other.sin_coeff(n) for n in range(1, k + 1)]
        return TrigPoly(tuple(a), tuple(b))

    __radd__ = __add__

    def __neg__(self) -> TrigPoly:
        return TrigPoly(tuple(-c for c in self.a), tuple(-c for c in self.b))

    def __sub__(self, other):
        other = _as_trig(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_trig(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, TrigPoly):
            return trig_mul(self, other)
        try:
            c = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return TrigPoly(tuple(x * c for x in self.a), tuple(x * c for x in self.b))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TrigPoly:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        form = trig_to_canonical(self) ** n
        return canonical_to_trig(form)

    def __call__(self, t: float) -> complex:
        """Floating-point value at ``t``."""
        total = 0j
        for n, c in enumerate(self.a):
            if c:
                total += complex(c) * math.cos(n * t)
        for n, c in enumerate(self.b, start=1):
            if c:
                total += complex(c) * math.sin(n * t)
        return total

    def render(self) -> str:
        """E.g. ``3/2 + 3/2*cos(2t) + sin(2t)``, by increasing frequency."""
        terms = []
        for n in range(self.degree + 1):
            if self.cos_coeff(n):
                terms.append((self.cos_coeff(n), _atom("cos", n) if n else ""))
            if n and self.sin_coeff(n):
                terms.append((self.sin_coeff(n), _atom("sin", n)))
        return _join_terms(terms)

    def __str__(self) -> str:
        return self.render()


def _atom(func: str, n: int) -> str:
    return f"{func}(t)" if n == 1 else f"{func}({n}t)"


def _as_trig(value) -> TrigPoly | None:
    if isinstance(value, TrigPoly):
        return value
    try:
        return TrigPoly.constant(GaussRational.coerce(value))
    except TypeError:
        return None


@dataclass(frozen=True)
class NaiveTrigPoly:
    """``sum_{n=0..k} alpha[n] cos^n(t) + sum_{n=1..k} beta[n-1] sin^n(t)``."""

    alpha: tuple[GaussRational, ...] = ()
    beta: tuple[GaussRational, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alpha", self.p.coeffs)
        object.__setattr__(self, "beta", self.q.coeffs[1:])

    @property
    def p(self) -> UniPoly:
        return UniPoly(self.alpha)

    @property
    def q(self) -> UniPoly:
        return UniPoly((ZERO,) + tuple(self.beta))

    def __call__(self, t: float) -> complex:
        return self.p.eval_complex(math.cos(t)) + self.q.eval_complex(math.sin(t))


@dataclass(frozen=True)
class NaiveRepresentation:
    """The function ``p(cos t) + q(sin t)``, with ``q`` odd."""

    p: UniPoly
    q: UniPoly

    def __call__(self, t: float) -> complex:
        return self.p.eval_complex(math.cos(t)) + self.q.eval_complex(math.sin(t))

    def to_canonical(self) -> CanonicalForm:
        return reduce(BiPoly.from_x(self.p) + BiPoly.from_y(self.q), Modulus.CIRCLE)[1]

    def render(self) -> str:
        return f"P(x) = {self.p.render('x')}; Q(y) = {self.q.render('y')}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Obstruction:
    """Nonzero odd part of ``B(x)``: no naive representation exists."""

    b_odd: UniPoly

    def __post_init__(self):
        if self.b_odd.is_zero():
            raise ValueError("an obstruction must be nonzero")
        if parity_split(self.b_odd)[0]:
            raise ValueError("an obstruction must be an odd polynomial")

    def render(self) -> str:
        return f"odd part of B(x) = {self.b_odd.render('x')}"


def trig_to_canonical(f: TrigPoly) -> CanonicalForm:
    """``A = sum a_n T_n`` and ``B = sum b_n U_{n-1}`` over the circle."""
    a = UniPoly()
    for n, c in enumerate(f.a):
        if c:
            a = a + chebyshev("T", n) * c
    b = UniPoly()
    for n, c in enumerate(f.b, start=1):
        if c:
            b = b + chebyshev("U", n - 1) * c
    return CanonicalForm(a, b, Modulus.CIRCLE)


def canonical_to_trig(c: CanonicalForm) -> TrigPoly:
    if c.modulus is not Modulus.CIRCLE:
        raise ValueError("only circle residues correspond to trigonometric polynomials")
    return TrigPoly(to_chebyshev_basis("T", c.a), to_chebyshev_basis("U", c.b))


def naive_to_standard(g: NaiveTrigPoly) -> TrigPoly:
    """Rewrite ``P(cos t) + Q(sin t)`` in the Fourier basis."""
    r = BiPoly.from_x(g.p) + BiPoly.from_y(g.q)
    return canonical_to_trig(reduce(r, Modulus.CIRCLE)[1])


def trig_mul(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    return canonical_to_trig(canonical_mul(trig_to_canonical(f), trig_to_canonical(g)))


def decide_naive(f: TrigPoly) -> NaiveRepresentation | Obstruction:
    """Write ``f`` as ``p(cos t) + q(sin t)`` or explain why that is impossible.

    With ``f = A(x) + y B(x)``, an even ``B(x) = C(x^2)`` gives
    ``y B(x) = y C(1 - y^2)`` on the circle, so ``p = A`` and ``q(y) = y C(1 - y^2)``.
    Any odd part of ``B`` survives every such rewrite and is returned instead.
    """
    form = trig_to_canonical(f)
    even, odd = parity_split(form.b)
    if odd:
        return Obstruction(odd)
    c = UniPoly(even.coeffs[::2])
    one_minus_sq = UniPoly((1, 0, -1))
    q = UniPoly.x() * compose(c, one_minus_sq)
    return NaiveRepresentation(form.a, q)


@dataclass(frozen=True)
class IdentityResult:
    """Verdict of :func:`identity_check`.

    When ``equal`` is false, ``point`` is an exact curve point where the two
    sides differ and ``lhs``/``rhs`` are their exact values there.
    """

    equal: bool
    point: tuple[GaussRational, GaussRational] | None = None
    parameter: GaussRational | None = None
    lhs: GaussRational | None = None
    rhs: GaussRational | None = None


def forms_identity(f: CanonicalForm, g: CanonicalForm) -> IdentityResult:
    """Compare two residues; on inequality find an exact separating point.

    A nonzero residue of degree d meets the (irreducible) modulus curve in at
    most 2d points, so scanning 2d + 1 distinct parameters must find one.
    """
    diff = f - g
    if diff.is_zero():
        return IdentityResult(True)
    bound = bezout_degree_bound(diff.modulus.polynomial, diff.to_bipoly())
    for attempt, s in enumerate(witness_parameters()):
        if attempt > bound:
            raise AssertionError(f"nonzero residue {diff} vanished at {attempt} curve points")
        x, y = param_point(s, f.modulus)
        lhs, rhs = f(x, y), g(x, y)
        if lhs != rhs:
            return IdentityResult(False, (x, y), GaussRational.coerce(s), lhs, rhs)


def identity_check(f: TrigPoly, g: TrigPoly) -> IdentityResult:
    """Decide ``f == g`` as functions of ``t``; refutations carry a circle point."""
    return forms_identity(trig_to_canonical(f), trig_to_canonical(g))


@dataclass(frozen=True)
class SampleReport:
    verdict: str  # "pass", "fail" or "inconclusive"
    max_deviation: float
    worst_t: float | None
    samples: int
    seed: int
    tol: float

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def sample_points(n: int, seed: int) -> list[float]:
    rng = random.Random(seed)
    return [rng.uniform(0.0, 2 * math.pi) for _ in range(n)]


def compare_samples(lhs, rhs, n: int, seed: int = 0, tol: float = DEFAULT_TOL) -> SampleReport:
    """Float comparison of two callables of ``t`` at seeded random points."""
    if n < 1:
        raise ValueError("need at least one sample")
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    worst, worst_t = 0.0, None
    for t in sample_points(n, seed):
        try:
            dev = abs(lhs(t) - rhs(t))
        except OverflowError:
            return SampleReport("inconclusive", math.inf, t, n, seed, tol)
        if not cmath.isfinite(dev):
            return SampleReport("inconclusive", math.inf, t, n, seed, tol)
        if dev > worst:
            worst, worst_t = dev, t
    verdict = "pass" if worst < tol else "fail"
    return SampleReport(verdict, worst, worst_t, n, seed, tol)


def sample_check(
    f: TrigPoly,
    r: NaiveRepresentation,
    n: int = 50,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> SampleReport:
    """Floating-point spot check that ``r`` and ``f`` agree."""
    return compare_samples(f, r, n, seed, tol)
