import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from tunnelkit.errors import (
    ConstantTermNotOne,
    NonInvertibleConstantTerm,
    NotDivisible,
    SeriesError,
    UnknownVariable,
)
from tunnelkit.series import MultiPoly, TruncatedSeries
from tunnelkit.series.poly import MAX_EXPONENT
from tunnelkit.series.series import Z

x, u, v = MultiPoly.var("x"), MultiPoly.var("u"), MultiPoly.var("v")

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(st.tuples(small, st.sampled_from([MultiPoly.const(1), x, u, x * u, v * v])), max_size=3).map(
    lambda parts: sum((c * m for c, m in parts), MultiPoly())
)


def series(order=5):
    return st.lists(polys, min_size=order + 1, max_size=order + 1).map(lambda cs: TruncatedSeries(cs, order))


def half_binomial(k):
    # (1/2 choose k) as an exact fraction
    out = Fraction(1)
    for j in range(k):
        out *= Fraction(1, 2) - j
        out /= j + 1
    return out


# polynomials


def test_parse_and_print():
    p = MultiPoly.parse("3x^2y - 1/2 v p^3 + 2")
    assert p == 3 * x * x * MultiPoly.var("y") - Fraction(1, 2) * v * MultiPoly.var("p", 3) + 2
    assert str(MultiPoly.parse("vp^2 + x^2p")) == "v*p^2 + x^2*p"
    assert str(MultiPoly()) == "0"
    assert MultiPoly.parse("x v*p^3") == MultiPoly.monomial(1, x=1, v=1, p=3)


def test_coefficients_and_degree():
    p = MultiPoly.parse("2u^2v + 3u - 1")
    assert p.coefficient(u=2, v=1) == 2
    assert p.coefficient(u=1) == 3
    assert p.constant_term() == -1
    assert p.degree("u") == 2 and p.degree("x") == 0
    assert p.variables() == {"u", "v"}


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        MultiPoly.var("a")
    with pytest.raises(UnknownVariable):
        MultiPoly.parse("x").subs({"b": 1})


def test_exponent_overflow():
    with pytest.raises(OverflowError):
        MultiPoly.var("x", MAX_EXPONENT) * x
    with pytest.raises(OverflowError):
        MultiPoly.var("x", MAX_EXPONENT + 1)


def test_divide_exact():
    assert MultiPoly.parse("2u^2y + 4uy").divide_exact(2 * u * MultiPoly.var("y")) == u + 2
    with pytest.raises(NotDivisible):
        MultiPoly.parse("u + v").divide_exact(u)
    with pytest.raises(NotDivisible):
        u.divide_exact(u + v)


def test_subs_and_swap():
    p = MultiPoly.parse("u^2 v + 3u")
    assert p.swap("u", "v") == MultiPoly.parse("v^2 u + 3v")
    assert p.subs({"u": v, "v": u}) == p.swap("u", "v")
    assert p.subs({"u": 1, "v": 1}) == 4
    assert p.subs({"u": x + 1}) == (x + 1) ** 2 * v + 3 * (x + 1)


@given(polys, polys, polys)
def test_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MultiPoly()


@given(polys)
def test_poly_parse_round_trip(p):
    assert MultiPoly.parse(str(p)) == p


# series


def test_product_examples():
    N = 6
    one_plus = TruncatedSeries([1, 1], N)
    one_minus = TruncatedSeries([1, -1], N)
    assert one_plus * one_minus == TruncatedSeries([1, 0, -1], N)
    assert (one_plus * TruncatedSeries.zero(N)).is_zero()
    assert TruncatedSeries.geometric(1, N) * one_minus == TruncatedSeries.one(N)


def test_order_is_minimum():
    a = TruncatedSeries([1, 2, 3], 5)
    b = TruncatedSeries([1, 1], 3)
    assert (a + b).order == 3 and (a * b).order == 3


def test_reciprocal_examples():
    N = 7
    assert TruncatedSeries([1, -1], N).reciprocal() == TruncatedSeries.geometric(1, N)
    assert TruncatedSeries([1, -u], N).reciprocal() == TruncatedSeries([u ** k for k in range(N + 1)], N)
    with pytest.raises(NonInvertibleConstantTerm):
        Z(4).reciprocal()
    with pytest.raises(NonInvertibleConstantTerm):
        TruncatedSeries([u, 1], 4).reciprocal()


def test_sqrt1p_examples():
    N = 10
    assert TruncatedSeries.one(N).sqrt1p() == TruncatedSeries.one(N)
    root = TruncatedSeries([1, -4], N).sqrt1p()
    assert root.coeffs == tuple(MultiPoly.const(half_binomial(k) * (-4) ** k) for k in range(N + 1))
    assert [root[k].constant_term() for k in range(5)] == [1, -2, -2, -4, -10]
    assert TruncatedSeries([1, 2, 1], N).sqrt1p() == TruncatedSeries([1, 1], N)
    with pytest.raises(ConstantTermNotOne):
        TruncatedSeries([4, 1], N).sqrt1p()


@given(series(), series(), series())
def test_series_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series(4))
def test_reciprocal_and_sqrt_identities(a):
    b = a.shift(1).truncate(4) + 1
    assert (b * b.reciprocal()) == TruncatedSeries.one(4)
    s = b.sqrt1p()
    assert s * s == b


def test_z_structure():
    a = TruncatedSeries([0, 0, u, v], 5)
    assert a.div_z(2) == TruncatedSeries([u, v], 3)
    with pytest.raises(NotDivisible):
        a.div_z(3)
    assert TruncatedSeries([1, 1], 3).shift(2) == TruncatedSeries([0, 0, 1, 1], 5)
    assert TruncatedSeries.geometric(1, 4).scale_z(u) == TruncatedSeries.geometric(u, 4)
    with pytest.raises(SeriesError):
        TruncatedSeries.one(2).coefficient(3)
    with pytest.raises(SeriesError):
        TruncatedSeries.one(2).truncate(4)


def test_agrees_with_and_strict_equality():
    a = TruncatedSeries([1, 2, 3], 2)
    b = TruncatedSeries([1, 2, 3, 4], 3)
    assert a != b
    assert a.agrees_with(b)
    assert not b.agrees_with(TruncatedSeries([1, 2, 3, 5], 3))


def test_printing():
    assert str(TruncatedSeries([1, x * MultiPoly.var("p"), v * MultiPoly.var("p", 2) + x * x * MultiPoly.var("p")], 2)) == (
        "1 + x*p*z + (v*p^2 + x^2*p)*z^2 + O(z^3)"
    )
    assert str(TruncatedSeries.zero(1)) == "0 + O(z^2)"
    assert str(TruncatedSeries([0, -1], 1)) == "(-1)*z + O(z^2)"


def test_json_round_trip():
    s = TruncatedSeries([1, Fraction(-1, 2) * u, x * v + 3], 4)
    data = json.loads(s.to_json())
    assert data["order"] == 4
    assert TruncatedSeries.from_dict(data) == s


def test_catalan_golden(pytestconfig):
    from tunnelkit.series import gf_catalan

    golden = json.loads((pytestconfig.rootpath / "tests" / "golden" / "catalan_order8.json").read_text())
    assert TruncatedSeries.from_dict(golden) == gf_catalan(8)
    assert [gf_catalan(8)[k] for k in range(9)] == [comb(2 * k, k) // (k + 1) for k in range(9)]
