"""Arithmetic in C[x, y] modulo the circle x^2 + y^2 - 1 or hyperbola x^2 - y^2 - 1.

Both moduli are monic quadratics in ``y``, so every residue class has a unique
representative ``A(x) + y*B(x)``. :func:`reduce` computes it together with the
quotient ``S`` such that ``r = S*modulus + A + y*B``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .numkernel import BiPoly, GaussRational, ScalarLike, UniPoly

__all__ = [
    "Modulus",
    "CanonicalForm",
    "reduce",
    "ideal_member",
    "canonical_mul",
    "param_point",
    "bezout_degree_bound",
]


class Modulus(enum.Enum):
    CIRCLE = "circle"
    HYPERBOLA = "hyperbola"

    @property
    def polynomial(self) -> BiPoly:
        """``x^2 + y^2 - 1`` or ``x^2 - y^2 - 1``."""
        ysign = 1 if self is Modulus.CIRCLE else -1
        return BiPoly({(2, 0): 1, (0, 2): ysign, (0, 0): -1})

    @property
    def y_squared(self) -> UniPoly:
        """The polynomial in ``x`` that ``y^2`` rewrites to."""
        if self is Modulus.CIRCLE:
            return UniPoly((1, 0, -1))
        return UniPoly((-1, 0, 1))

    @property
    def _quotient_sign(self) -> int:
        # y^2 = sign * modulus + y_squared
        return 1 if self is Modulus.CIRCLE else -1


@dataclass(frozen=True)
class CanonicalForm:
    """The residue ``a(x) + y*b(x)`` modulo ``modulus``."""

    a: UniPoly
    b: UniPoly
    modulus: Modulus = Modulus.CIRCLE

    @classmethod
    def zero(cls, modulus: Modulus = Modulus.CIRCLE) -> CanonicalForm:
        return cls(UniPoly(), UniPoly(), modulus)

    @classmethod
    def constant(cls, c: ScalarLike, modulus: Modulus = Modulus.CIRCLE) -> CanonicalForm:
        return cls(UniPoly.constant(c), UniPoly(), modulus)

    @classmethod
    def x(cls, modulus: Modulus = Modulus.CIRCLE) -> CanonicalForm:
        return cls(UniPoly.x(), UniPoly(), modulus)

    @classmethod
    def y(cls, modulus: Modulus = Modulus.CIRCLE) -> CanonicalForm:
        return cls(UniPoly(), UniPoly.constant(1), modulus)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def _check(self, other: CanonicalForm) -> None:
        if self.modulus is not other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus.value} vs {other.modulus.value}"
            )

    def __add__(self, other: CanonicalForm) -> CanonicalForm:
        self._check(other)
        return CanonicalForm(self.a + other.a, self.b + other.b, self.modulus)

    def __sub__(self, other: CanonicalForm) -> CanonicalForm:
        self._check(other)
        return CanonicalForm(self.a - other.a, self.b - other.b, self.modulus)

    def __neg__(self) -> CanonicalForm:
        return CanonicalForm(-self.a, -self.b, self.modulus)

    def __mul__(self, other):
        if isinstance(other, CanonicalForm):
            return canonical_mul(self, other)
        try:
            c = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return CanonicalForm(self.a * c, self.b * c, self.modulus)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int) -> CanonicalForm:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = CanonicalForm.constant(1, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_bipoly(self) -> BiPoly:
        return BiPoly.from_x(self.a) + BiPoly.from_x(self.b) * BiPoly.y()

    def __call__(self, x: ScalarLike, y: ScalarLike) -> GaussRational:
        return self.a(x) + GaussRational.coerce(y) * self.b(x)

    def render(self) -> str:
        return f"A(x) = {self.a.render('x')}; B(x) = {self.b.render('x')}"

    def __str__(self) -> str:
        return self.render()


def reduce(r: BiPoly, m: Modulus = Modulus.CIRCLE) -> tuple[BiPoly, CanonicalForm]:
    """Divide ``r`` by the modulus, returning ``(quotient, remainder)``.

    Terms are processed from the highest power of ``y`` down, each ``y^j``
    with ``j >= 2`` rewritten through the modulus' rule for ``y^2``.
    """
    by_y: dict[int, UniPoly] = {}
    for (i, j), c in r.items():
        by_y[j] = by_y.get(j, UniPoly()) + UniPoly.monomial(i, c)

    rho = m.y_squared
    sign = m._quotient_sign
    quotient: dict[tuple[int, int], GaussRational] = {}
    top = max(by_y, default=0)
    for j in range(top, 1, -1):
        rj = by_y.pop(j, None)
        if not rj:
            continue
        for i, c in enumerate(rj.coeffs):
            if c:
                quotient[(i, j - 2)] = quotient.get((i, j - 2), 0) + c * sign
        by_y[j - 2] = by_y.get(j - 2, UniPoly()) + rj * rho

    form = CanonicalForm(by_y.get(0, UniPoly()), by_y.get(1, UniPoly()), m)
    return BiPoly(quotient), form


def ideal_member(r: BiPoly, m: Modulus = Modulus.CIRCLE) -> bool:
    """True iff ``r`` is a multiple of the modulus polynomial."""
    return reduce(r, m)[1].is_zero()


def canonical_mul(f: CanonicalForm, g: CanonicalForm) -> CanonicalForm:
    """Product of residues: (A1 + yB1)(A2 + yB2) with one y^2 rewrite."""
    f._check(g)
    rho = f.modulus.y_squared
    a = f.a * g.a + rho * (f.b * g.b)
    b = f.a * g.b + g.a * f.b
    return CanonicalForm(a, b, f.modulus)


def param_point(
    s: ScalarLike, m: Modulus = Modulus.CIRCLE
) -> tuple[GaussRational, GaussRational]:
    """Exact point on the curve from the rational parametrisation at ``s``.

    Circle: ((1-s^2)/(1+s^2), 2s/(1+s^2)); hyperbola: ((1+s^2)/(1-s^2), 2s/(1-s^2)).
    """
    s = GaussRational.coerce(s)
    s2 = s * s
    if m is Modulus.CIRCLE:
        den = 1 + s2
        if not den:
            raise ValueError("parameter s = ±i is excluded on the circle")
        return (1 - s2) / den, (2 * s) / den
    den = 1 - s2
    if not den:
        raise ValueError("parameter s = ±1 is excluded on the hyperbola")
    return (1 + s2) / den, (2 * s) / den


def bezout_degree_bound(p: BiPoly, q: BiPoly) -> int:
    """Upper bound ``deg(p) * deg(q)`` on common zeros of ``p`` and ``q``.

    Only valid when ``p`` and ``q`` share no common factor; that is not checked.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("degree bound undefined for the zero polynomial")
    return int(p.degree) * int(q.degree)


def witness_parameters():
    """Deterministic stream of distinct rationals in (0, 1): 1/2, 1/3, 2/3, 1/4, ...

    Distinct real parameters give distinct curve points on either modulus.
    """
    den = 2
    while True:
        for num in range(1, den):
            q = Fraction(num, den)
            if q.denominator == den:
                yield q
        den += 1
