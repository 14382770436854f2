from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from currentkm.errors import PolynomialSyntaxError, RingMismatch, UnknownVariable
from currentkm.polyring import (
    Polynomial,
    poly_eval,
    poly_mul,
    poly_parse,
    rational_roots,
    squarefree_part,
    univariate_divmod,
    univariate_gcd,
)

XY = ("x", "y")
T = ("t",)
F = Fraction


def P(text, ring=XY):
    return poly_parse(text, ring)


class TestParse:
    def test_examples(self):
        assert P("t^2-1", T).terms == {(2,): 1, (0,): -1}
        assert P("0", XY).terms == {}
        assert P("x*y - 1/2").terms == {(1, 1): 1, (0, 0): F(-1, 2)}

    def test_leading_sign_and_whitespace(self):
        assert P(" - x ^ 2 + 3 * y ") == P("3*y-x^2")

    def test_repeated_variable_and_like_terms(self):
        assert P("x*x*y + x^2*y - 2*x^2*y").is_zero()

    @pytest.mark.parametrize("text,pos", [("x +", 3), ("x ** 2", 3), ("2/0*x", 2), ("x $ y", 2), ("", 0)])
    def test_syntax_errors_carry_position(self, text, pos):
        with pytest.raises(PolynomialSyntaxError) as err:
            P(text)
        assert err.value.position == pos

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            P("x + z")

    @pytest.mark.parametrize("text", ["x*y - 1/2", "-3/7*x^3*y + y^2 - 1", "0", "x", "-1"])
    def test_print_parse_fixed_point(self, text):
        p = P(text)
        assert P(str(p)) == p
        assert str(P(str(p))) == str(p)


def test_grevlex_leading_terms():
    assert P("x^2 + x*y + y^2").leading_monomial() == (2, 0)
    # equal degree: grevlex prefers the smaller power of the last variable
    assert P("x*y^2 + x^2*y").leading_monomial() == (2, 1)
    assert P("y^3 + x^2").leading_monomial() == (0, 3)


def test_mul_examples():
    assert poly_mul(P("t-1", T), P("t+1", T)) == P("t^2-1", T)
    assert poly_mul(P("x+y"), P("0")).is_zero()
    assert poly_mul(P("x+y"), P("x-y")) == P("x^2-y^2")


def test_mul_ring_mismatch():
    with pytest.raises(RingMismatch):
        poly_mul(P("x"), P("t", T))


def test_eval_examples():
    assert poly_eval(P("t^2-1", T), [1]) == 0
    assert poly_eval(P("t^2-1", T), [2]) == 3
    assert poly_eval(P("x*y-1/2"), [F(1, 2), 1]) == 0
    with pytest.raises(RingMismatch):
        poly_eval(P("x"), [1])


def test_squarefree_examples():
    assert squarefree_part(P("t^2-2*t+1", T)) == P("t-1", T)
    assert squarefree_part(P("t^2-1", T)) == P("t^2-1", T)
    # gcd(t^3 - t^2, 3t^2 - 2t) = t by hand Euclid
    assert univariate_gcd(P("t^3-t^2", T), P("3*t^2-2*t", T)) == P("t", T)
    assert squarefree_part(P("t^3-t^2", T)) == P("t^2-t", T)
    with pytest.raises(ValueError):
        squarefree_part(P("0", T))


def test_rational_roots():
    assert rational_roots(P("6*t^3 - t^2 - t", T)) == [F(-1, 3), 0, F(1, 2)]
    assert rational_roots(P("t^2-2", T)) == []
    assert rational_roots(P("1/4*t^2 - 1", T)) == [-2, 2]


# ------------------------------------------------------------ properties

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, coeffs, max_size=5).map(lambda d: Polynomial(XY, d))
points = st.tuples(coeffs, coeffs)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(polys, polys, points)
def test_eval_is_a_ring_homomorphism(p, q, pt):
    assert (p * q).eval(pt) == p.eval(pt) * q.eval(pt)
    assert (p + q).eval(pt) == p.eval(pt) + q.eval(pt)


@settings(max_examples=60, deadline=None)
@given(polys)
def test_print_parse_roundtrip(p):
    assert P(str(p)) == p


roots = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=1, max_size=4)
mults = st.lists(st.integers(1, 3), min_size=4, max_size=4)


@settings(max_examples=50, deadline=None)
@given(roots, mults, st.fractions(min_value=1, max_value=5, max_denominator=3))
def test_squarefree_part_properties(rs, ms, lead):
    t = Polynomial.var(T, 0)
    p = Polynomial.constant(T, lead)
    for r, m in zip(rs, ms):
        p = p * (t - r) ** m
    s = squarefree_part(p)
    _, rem = univariate_divmod(p, s)
    assert rem.is_zero()
    assert univariate_gcd(s, s.derivative()).total_degree() == 0
    assert s.leading_coefficient() == 1
    # every linear factor survives, with multiplicity one
    assert s.total_degree() == len(set(rs))
    assert set(rational_roots(s)) == set(rs)
    # p divides s^deg p
    _, rem = univariate_divmod(s ** p.total_degree(), p)
    assert rem.is_zero()
