"""Exact scalar tower: rationals, polynomials, rational functions, series."""

import pytest
from hypothesis import given, settings, strategies as st

from triggaudin.poly import UniPoly
from triggaudin.rationals import QQ, format_rational, parse_rational, rational
from triggaudin.ratfun import FracField, PoleError, RatFun
from triggaudin.series import SeriesRing, TruncSeries, TruncationError

F = FracField("u", QQ)
u = F.gen


def rat(p, q=1):
    return rational(p, q)


def const(c):
    return F.embed(c)


class TestRationals:
    def test_parse_and_format(self):
        assert parse_rational("3/4") == rat(3, 4)
        assert parse_rational("-7") == rat(-7)
        assert format_rational(rat(3, 4)) == "3/4"
        assert format_rational(rat(5)) == "5/1"

    def test_reduction(self):
        assert rat(6, 4) == rat(3, 2)
        assert rat(-6, -4) == rat(3, 2)


class TestRatFunArithmetic:
    def test_partial_fraction_of_sum(self):
        # 1/(1-u) + 1/(1+u) = 2/(1-u^2)
        a = F.one / (F.one - u)
        b = F.one / (F.one + u)
        c = F.from_int(2) / (F.one - u * u)
        assert a + b == c

    def test_gcd_cancellation(self):
        assert u / u == F.one

    def test_inverse_pair(self):
        x = u
        a = (F.one + x) / (F.one - x)
        b = (F.one - x) / (F.one + x)
        assert a * b == F.one

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            F.one / F.zero

    def test_canonical_form(self):
        # monic denominator, reduced
        f = (u + F.one) / (u.scale(rat(2)) + F.from_int(2))
        assert f == F.embed(rat(1, 2))

    def test_derivative_examples(self):
        assert const(rat(5)).derivative() == F.zero
        assert (u * u).derivative() == u.scale(rat(2))
        g = F.one / (F.one - u)
        assert g.derivative() == F.one / ((F.one - u) * (F.one - u))


# random rational functions for property tests
coeffs = st.integers(min_value=-6, max_value=6)


def _poly(cs):
    return UniPoly("u", QQ, [rat(c) for c in cs])


ratfuns = st.builds(
    lambda nc, dc: RatFun("u", QQ, _poly(nc), _poly(dc + [1])),
    st.lists(coeffs, min_size=1, max_size=4),
    st.lists(coeffs, min_size=0, max_size=3),
)


class TestRatFunProperties:
    @settings(max_examples=60, deadline=None)
    @given(ratfuns, ratfuns)
    def test_add_sub_roundtrip(self, a, b):
        assert (a + b) - b == a

    @settings(max_examples=60, deadline=None)
    @given(ratfuns, ratfuns)
    def test_mul_div_roundtrip(self, a, b):
        if not b.is_zero():
            assert (a * b) / b == a

    @settings(max_examples=60, deadline=None)
    @given(ratfuns, ratfuns)
    def test_leibniz(self, a, b):
        lhs = (a * b).derivative()
        rhs = a.derivative() * b + a * b.derivative()
        assert lhs == rhs

    @settings(max_examples=60, deadline=None)
    @given(ratfuns)
    def test_canonical(self, a):
        assert a.den.leading() == QQ.one
        g = a.num.gcd(a.den)
        assert g.degree() in (None, 0)


class TestExpandAt:
    def test_simple_pole(self):
        a = rat(3)
        f = F.one / (u - const(a))
        assert f.expand_at(a, -1, 0) == [rat(1), rat(0)]

    def test_shifted_ratio_residue(self):
        # (a+u)/(a-u) at u=a has residue -2a
        a = rat(5)
        f = (const(a) + u) / (const(a) - u)
        assert f.residue_at(a) == rat(-10)

    def test_geometric(self):
        f = F.one / (F.one - u)
        assert f.expand_at(rat(0), 0, 3) == [rat(1)] * 4

    @settings(max_examples=40, deadline=None)
    @given(ratfuns)
    def test_taylor_matches(self, f):
        # Taylor coefficients at a non-pole reproduce f mod (u-p)^4
        p = rat(2)
        if not f.den.eval(p):
            return
        cs = f.expand_at(p, 0, 3)
        acc = F.zero
        shift = u - const(p)
        for k, c in enumerate(cs):
            acc = acc + (shift ** k).scale(c)
        diff = f - acc
        if not diff.is_zero():
            # (u-p)^4 must divide the numerator of the difference
            num = diff.num.compose_shift(p)
            assert num.valuation() >= 4


class TestPartialFractions:
    def test_two_simple_poles(self):
        f = F.one / ((u - F.one) * (u - F.from_int(3)))
        poly, parts = f.partial_fractions([rat(1), rat(3)])
        assert poly.is_zero()
        assert parts == {rat(1): [rat(-1, 2)], rat(3): [rat(1, 2)]}
        assert f.recombine_check(poly, parts)

    def test_pure_polynomial(self):
        f = u * u
        poly, parts = f.partial_fractions([rat(1)])
        assert parts == {}
        assert RatFun.from_poly(poly) == f

    def test_division_plus_residue(self):
        a = rat(4)
        f = (const(a) + u) / (const(a) - u)
        poly, parts = f.partial_fractions([a])
        assert RatFun.from_poly(poly) == const(rat(-1))
        assert parts == {a: [rat(-8)]}
        assert f.recombine_check(poly, parts)

    def test_unlisted_pole_rejected(self):
        f = F.one / (u - F.from_int(7))
        with pytest.raises(PoleError):
            f.partial_fractions([rat(1)])

    @settings(max_examples=40, deadline=None)
    @given(st.lists(coeffs, min_size=1, max_size=4))
    def test_recombine_random(self, nc):
        den = (u - F.one) * (u - F.from_int(3)) * (u - F.from_int(3))
        f = RatFun.from_poly(_poly(nc)) / den
        poly, parts = f.partial_fractions([rat(1), rat(3)])
        assert f.recombine_check(poly, parts)


class TestTruncSeries:
    def test_beyond_order_is_error(self):
        s = TruncSeries("y", QQ, 2, [rat(1), rat(2)])
        assert s.coefficient(2) == rat(0)
        with pytest.raises(TruncationError):
            s.coefficient(3)

    def test_mul_truncates_to_min_order(self):
        a = TruncSeries("y", QQ, 4, [rat(1), rat(1)])
        b = TruncSeries("y", QQ, 2, [rat(1), rat(-1)])
        p = a * b
        assert p.order == 2
        assert [p.coefficient(k) for k in range(3)] == [rat(1), rat(0), rat(-1)]

    def test_invert_geometric(self):
        ring = SeriesRing("y", QQ, 5)
        s = ring.one - ring.gen
        inv = s.invert()
        assert [inv.coefficient(k) for k in range(6)] == [rat(1)] * 6
        assert s * inv == ring.one

    def test_derivative_loses_one_order(self):
        s = TruncSeries("y", QQ, 3, [rat(1), rat(1), rat(1), rat(1)])
        d = s.derivative()
        assert d.order == 2
        assert [d.coefficient(k) for k in range(3)] == [rat(1), rat(2), rat(3)]

    def test_scale_var(self):
        s = TruncSeries("y", QQ, 2, [rat(1), rat(1), rat(1)])
        t = s.scale_var(rat(2))
        assert [t.coefficient(k) for k in range(3)] == [rat(1), rat(2), rat(4)]


class TestTower:
    def test_bivariate_arithmetic(self):
        # Q(q)(u): coefficients are themselves rational functions
        Fq = FracField("q", QQ)
        Fu = FracField("u", Fq)
        q = Fu.embed(Fq.gen)
        uu = Fu.gen
        f = (q * uu - Fu.one) / (uu - Fu.one)
        g = f * (uu - Fu.one)
        assert g == q * uu - Fu.one
