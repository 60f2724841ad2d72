import random
from fractions import Fraction as F

import pytest

from helpers import rand_bipoly, rand_fraction, rand_gauss
from trigpoly import (
    BiPoly,
    CanonicalForm,
    Modulus,
    UniPoly,
    bezout_degree_bound,
    canonical_mul,
    ideal_member,
    param_point,
    reduce,
)
from trigpoly.numkernel import I

CIRCLE, HYPERBOLA = Modulus.CIRCLE, Modulus.HYPERBOLA
X, Y = BiPoly.x(), BiPoly.y()


def form(a=(), b=(), m=CIRCLE):
    return CanonicalForm(UniPoly(a), UniPoly(b), m)


def recompose(s, c, m):
    return s * m.polynomial + c.to_bipoly()


class TestReduce:
    def test_modulus_itself(self):
        s, c = reduce(CIRCLE.polynomial, CIRCLE)
        assert s == BiPoly.constant(1)
        assert c == form()

    def test_y_squared(self):
        s, c = reduce(Y * Y, CIRCLE)
        assert s == BiPoly.constant(1)
        assert c == form((1, 0, -1))

    def test_already_canonical(self):
        s, c = reduce(2 * X * Y, CIRCLE)
        assert s.is_zero()
        assert c == form((), (0, 2))

    def test_hyperbola_y_squared(self):
        s, c = reduce(Y * Y, HYPERBOLA)
        assert s == BiPoly.constant(-1)
        assert c == form((-1, 0, 1), (), HYPERBOLA)

    def test_zero(self):
        s, c = reduce(BiPoly(), CIRCLE)
        assert s.is_zero() and c.is_zero()

    @pytest.mark.parametrize("m", [CIRCLE, HYPERBOLA])
    def test_recomposition_random(self, m):
        rng = random.Random(11)
        for _ in range(200):
            r = rand_bipoly(rng, 6)
            s, c = reduce(r, m)
            assert recompose(s, c, m) == r
            assert c.modulus is m

    @pytest.mark.parametrize("m", [CIRCLE, HYPERBOLA])
    def test_idempotent(self, m):
        rng = random.Random(12)
        for _ in range(50):
            _, c = reduce(rand_bipoly(rng, 6), m)
            s2, c2 = reduce(c.to_bipoly(), m)
            assert s2.is_zero()
            assert c2 == c

    @pytest.mark.parametrize("m", [CIRCLE, HYPERBOLA])
    def test_residue_agrees_on_curve(self, m):
        rng = random.Random(13)
        params = [rand_fraction(rng) for _ in range(20)]
        params = [s for s in params if s * s != 1]
        for _ in range(40):
            r = rand_bipoly(rng, 6)
            _, c = reduce(r, m)
            rest = r - c.to_bipoly()
            values = []
            for s in params:
                x, y = param_point(s, m)
                assert rest(x, y) == 0
                values.append(r(x, y))
            if not c.is_zero():
                assert any(values), f"nonzero residue {c} vanished at every sample"


class TestIdealMember:
    def test_explicit_multiple(self):
        assert ideal_member(CIRCLE.polynomial * (X**3 * Y - 7), CIRCLE)

    def test_not_member(self):
        assert not ideal_member(2 * X * Y, CIRCLE)

    def test_hyperbola(self):
        assert ideal_member(X * X - Y * Y - 1, HYPERBOLA)
        assert not ideal_member(X * X - Y * Y - 1, CIRCLE)


class TestCanonicalMul:
    def test_y_times_y(self):
        assert canonical_mul(form((), (1,)), form((), (1,))) == form((1, 0, -1))
        assert canonical_mul(form((), (1,), HYPERBOLA), form((), (1,), HYPERBOLA)) == form(
            (-1, 0, 1), (), HYPERBOLA
        )

    def test_x_times_y(self):
        assert canonical_mul(form((0, 1)), form((), (1,))) == form((), (0, 1))

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            canonical_mul(form((1,)), form((1,), (), HYPERBOLA))

    @pytest.mark.parametrize("m", [CIRCLE, HYPERBOLA])
    def test_agrees_with_reduce_of_product(self, m):
        rng = random.Random(21)
        for _ in range(100):
            r1, r2 = rand_bipoly(rng, 4), rand_bipoly(rng, 4)
            expected = reduce(r1 * r2, m)[1]
            assert canonical_mul(reduce(r1, m)[1], reduce(r2, m)[1]) == expected

    def test_power(self):
        y = CanonicalForm.y()
        assert y**2 == form((1, 0, -1))
        assert y**0 == form((1,))


class TestParamPoint:
    def test_circle(self):
        assert param_point(F(1, 2)) == (F(3, 5), F(4, 5))
        assert param_point(0) == (1, 0)

    def test_hyperbola(self):
        assert param_point(F(1, 2), HYPERBOLA) == (F(5, 3), F(4, 3))

    def test_excluded(self):
        with pytest.raises(ValueError):
            param_point(1, HYPERBOLA)
        with pytest.raises(ValueError):
            param_point(I, CIRCLE)
        with pytest.raises(ValueError):
            param_point(-I, CIRCLE)

    @pytest.mark.parametrize("m", [CIRCLE, HYPERBOLA])
    def test_on_curve(self, m):
        rng = random.Random(5)
        for _ in range(50):
            s = rand_gauss(rng)
            try:
                x, y = param_point(s, m)
            except ValueError:
                continue
            assert m.polynomial(x, y) == 0


class TestBezout:
    def test_circle_bound(self):
        for d in range(1, 6):
            q = X**d + Y
            assert bezout_degree_bound(CIRCLE.polynomial, q) == 2 * d

    def test_lines(self):
        assert bezout_degree_bound(X + Y, X - 2 * Y + 1) == 1

    def test_product_of_degrees(self):
        assert bezout_degree_bound(X**3 + Y, X * Y**3 + 1) == 12

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            bezout_degree_bound(BiPoly(), X)


def test_render_form():
    assert form((-1, 0, 2), (0, 2)).render() == "A(x) = 2*x^2 - 1; B(x) = 2*x"
