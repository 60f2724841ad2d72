"""Exact scalar and polynomial arithmetic over the Gaussian rationals Q(i).

Everything here is exact: scalars are pairs of :class:`fractions.Fraction`,
univariate polynomials are dense coefficient tuples, bivariate polynomials are
sparse exponent maps. Values are immutable and hashable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

__all__ = [
    "GaussRational",
    "UniPoly",
    "BiPoly",
    "parity_split",
    "compose",
    "chebyshev",
    "to_chebyshev_basis",
    "format_scalar",
]

ScalarLike = Union["GaussRational", int, Fraction]


@dataclass(frozen=True, slots=True)
class GaussRational:
    """A number ``re + im*i`` with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        # Fraction already keeps lowest terms with a positive denominator.
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", _to_fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", _to_fraction(self.im))

    @classmethod
    def coerce(cls, value: ScalarLike) -> GaussRational:
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to GaussRational")

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> GaussRational:
        return GaussRational(-self.re, -self.im)

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("GaussRational division by zero")
        n = other.norm()
        num = self * other.conjugate()
        return GaussRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> GaussRational:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussRational(1) / self**-exponent
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        # float(Fraction) raises OverflowError for huge values; callers rely on that.
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussRational({format_scalar(self)})"

    def __str__(self) -> str:
        return format_scalar(self)


def _to_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or int")
    return Fraction(value)


def _maybe(value) -> GaussRational | None:
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return GaussRational(Fraction(value))
    return None


ZERO = GaussRational()
ONE = GaussRational(Fraction(1))
I = GaussRational(Fraction(0), Fraction(1))


def _fmt_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(c: GaussRational) -> str:
    """Render a scalar as ``a``, ``a/b``, ``c*i`` or ``(a/b+c/d*i)``."""
    if c.im == 0:
        return _fmt_fraction(c.re)
    if c.re == 0:
        return _fmt_imag(c.im)
    im = _fmt_imag(c.im)
    sep = "" if im.startswith("-") else "+"
    return f"({_fmt_fraction(c.re)}{sep}{im})"


def _fmt_imag(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{_fmt_fraction(q)}*i"


def _split_sign(c: GaussRational) -> tuple[bool, str, bool]:
    """Return (negative, magnitude text, is_unit) for term rendering.

    Real and purely imaginary coefficients have their sign pulled out so that
    terms join as ``a - b``; general complex ones stay parenthesised.
    """
    if c.im == 0 or c.re == 0:
        neg = (c.re < 0) if c.im == 0 else (c.im < 0)
        mag = GaussRational(abs(c.re), abs(c.im))
        return neg, format_scalar(mag), mag == ONE
    return False, format_scalar(c), False


def _join_terms(terms: Iterable[tuple[GaussRational, str]]) -> str:
    """Join ``(coefficient, monomial)`` pairs; empty monomial means a constant."""
    out: list[str] = []
    for c, mono in terms:
        neg, mag, unit = _split_sign(c)
        if not mono:
            body = mag
        elif unit:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def _power(var: str, n: int) -> str:
    if n == 0:
        return ""
    if n == 1:
        return var
    return f"{var}^{n}"


def _strip(coeffs: Sequence[GaussRational]) -> tuple[GaussRational, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True, slots=True)
class UniPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``x**k``.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and degree ``-inf``.
    """

    coeffs: Tuple[GaussRational, ...] = ()

    def __post_init__(self):
        cs = tuple(GaussRational.coerce(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", _strip(cs))

    @classmethod
    def constant(cls, c: ScalarLike) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: ScalarLike = 1) -> UniPoly:
        return cls((ZERO,) * n + (GaussRational.coerce(c),))

    @classmethod
    def x(cls) -> UniPoly:
        return cls.monomial(1)

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def leading(self) -> GaussRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> GaussRational:
        """Coefficient of ``x**k``; zero beyond the degree."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _as_unipoly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self[k] + other[k] for k in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_unipoly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self[k] - other[k] for k in range(n)))

    def __rsub__(self, other):
        other = _as_unipoly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(tuple(out))
        c = _maybe(other)
        if c is None:
            return NotImplemented
        return UniPoly(tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = UniPoly((ONE,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, v: ScalarLike) -> GaussRational:
        """Exact Horner evaluation."""
        v = GaussRational.coerce(v)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def eval_complex(self, v: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * v + complex(c)
        return acc

    def render(self, var: str = "x") -> str:
        """Text form in decreasing degree, e.g. ``2*x^2 - 1``."""
        terms = [
            (c, _power(var, k))
            for k, c in reversed(list(enumerate(self.coeffs)))
            if c
        ]
        return _join_terms(terms)

    def __str__(self) -> str:
        return self.render()


def _as_unipoly(value) -> UniPoly | None:
    if isinstance(value, UniPoly):
        return value
    c = _maybe(value)
    return None if c is None else UniPoly((c,))


def parity_split(p: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Split ``p`` into its even-degree and odd-degree parts."""
    even = tuple(c if k % 2 == 0 else ZERO for k, c in enumerate(p.coeffs))
    odd = tuple(c if k % 2 == 1 else ZERO for k, c in enumerate(p.coeffs))
    return UniPoly(even), UniPoly(odd)


def compose(p: UniPoly, q: UniPoly) -> UniPoly:
    """Return ``p(q(x))`` by Horner's scheme over polynomials."""
    acc = UniPoly()
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc


@lru_cache(maxsize=None)
def chebyshev(kind: str, n: int) -> UniPoly:
    """Chebyshev polynomial ``T_n`` (kind ``"T"``) or ``U_n`` (kind ``"U"``).

    Built from X_0 = 1, X_1 = x (T) or 2x (U), X_{n+1} = 2x X_n - X_{n-1}.
    """
    if kind not in ("T", "U"):
        raise ValueError(f"kind must be 'T' or 'U', got {kind!r}")
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if n == 0:
        return UniPoly((ONE,))
    if n == 1:
        return UniPoly((ZERO, ONE if kind == "T" else GaussRational(2)))
    two_x = UniPoly.monomial(1, 2)
    return two_x * chebyshev(kind, n - 1) - chebyshev(kind, n - 2)


def to_chebyshev_basis(kind: str, p: UniPoly) -> tuple[GaussRational, ...]:
    """Coefficients ``c`` with ``p = sum(c[n] * chebyshev(kind, n))``.

    Peels off the top Chebyshev term by matching leading coefficients.
    The zero polynomial maps to the empty tuple.
    """
    if p.is_zero():
        return ()
    out = [ZERO] * len(p.coeffs)
    rest = p
    while rest:
        d = len(rest.coeffs) - 1
        basis = chebyshev(kind, d)
        c = rest.leading / basis.leading
        out[d] = c
        rest = rest - basis * c
    return tuple(out)


class BiPoly:
    """Sparse polynomial in ``x`` and ``y``: ``{(i, j): coeff}`` for ``x^i y^j``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], ScalarLike] | None = None):
        clean: dict[tuple[int, int], GaussRational] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            c = GaussRational.coerce(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> BiPoly:
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: ScalarLike) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def from_x(cls, p: UniPoly) -> BiPoly:
        return cls._raw({(k, 0): c for k, c in enumerate(p.coeffs)})

    @classmethod
    def from_y(cls, q: UniPoly) -> BiPoly:
        return cls._raw({(0, k): c for k, c in enumerate(q.coeffs)})

    @property
    def terms(self) -> Mapping[tuple[int, int], GaussRational]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], GaussRational]]:
        return iter(self._terms.items())

    @property
    def degree(self) -> int | float:
        if not self._terms:
            return -math.inf
        return max(i + j for i, j in self._terms)

    def y_degree(self) -> int | float:
        if not self._terms:
            return -math.inf
        return max(j for _, j in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, i: int, j: int) -> GaussRational:
        return self._terms.get((i, j), ZERO)

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -v for k, v in self._terms.items()})

    def __add__(self, other):
        other = _as_bipoly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, ZERO) + v
        return BiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_bipoly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, ZERO) - v
        return BiPoly._raw(out)

    def __rsub__(self, other):
        other = _as_bipoly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_bipoly(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int], GaussRational] = {}
        for (i1, j1), a in self._terms.items():
            for (i2, j2), b in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, ZERO) + a * b
        return BiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = BiPoly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: ScalarLike, y: ScalarLike) -> GaussRational:
        x = GaussRational.coerce(x)
        y = GaussRational.coerce(y)
        total = ZERO
        for (i, j), c in self._terms.items():
            total = total + c * x**i * y**j
        return total

    def __eq__(self, other):
        other = _as_bipoly(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def render(self) -> str:
        """Text form ordered by total degree, then x-degree, both decreasing."""
        keys = sorted(self._terms, key=lambda k: (k[0] + k[1], k[0]), reverse=True)
        terms = []
        for i, j in keys:
            mono = "*".join(filter(None, (_power("x", i), _power("y", j))))
            terms.append((self._terms[(i, j)], mono))
        return _join_terms(terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BiPoly({self.render()!r})"


def _as_bipoly(value) -> BiPoly | None:
    if isinstance(value, BiPoly):
        return value
    c = _maybe(value)
    return None if c is None else BiPoly._raw({(0, 0): c})
