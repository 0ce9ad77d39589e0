"""Ring-level tests for truncated Laurent series arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtheta import EvalContext, InsufficientPrecisionError, LaurentSeries
from qtheta.series import ZeroDivisorError as QZeroDivisorError

F = Fraction


def poly(terms: dict, valid_to: int = 50) -> LaurentSeries:
    return LaurentSeries.from_terms({e: F(c) for e, c in terms.items()}, valid_to)


def test_zero_and_one():
    z = LaurentSeries.zero(10)
    assert z.is_zero_to_order()
    one = LaurentSeries.one(10)
    assert one.coeff(0) == 1
    assert one.coeff(3) == 0


def test_monomial_roundtrip():
    s = LaurentSeries.monomial(F(3, 1), -2, 10)
    assert s.lo == -2
    assert s.coeff(-2) == 3
    assert s.coeff(0) == 0
    assert list(s.nonzero_terms()) == [(-2, F(3))]


def test_add_alignment():
    a = poly({-1: 2, 3: 5})
    b = poly({0: 1, 3: -5})
    c = a.add(b)
    assert c.coeff(-1) == 2
    assert c.coeff(0) == 1
    assert c.coeff(3) == 0


def test_mul_shifts_validity():
    # f valid below 10, g a monomial q^3: product only trusted below 13? No:
    # validity of f*g is min(f.vt + g.lo, g.vt + f.lo).
    f = poly({0: 1, 1: 1}, valid_to=10)
    g = LaurentSeries.monomial(F(1), 3, 50)
    p = f.mul(g)
    assert p.valid_to == 13
    assert p.coeff(3) == 1 and p.coeff(4) == 1


def test_mul_negative_exponents():
    f = poly({-2: 1, 0: -1}, valid_to=20)
    g = poly({-1: 1, 1: 1}, valid_to=20)
    p = f * g
    assert p.coeff(-3) == 1
    assert p.coeff(-1) == 1 - 1
    assert p.coeff(1) == -1


def test_invert_roundtrip():
    f = poly({0: 1, 1: -1, 5: 2}, valid_to=30)
    g = f.invert()
    prod = f * g
    one = LaurentSeries.one(prod.valid_to)
    assert prod.first_mismatch(one, prod.valid_to) is None


def test_invert_with_valuation():
    # 1/(q^2 - q^3) = q^-2 * (1 + q + q^2 + ...)
    f = poly({2: 1, 3: -1}, valid_to=20)
    g = f.invert()
    assert g.lo == -2
    for e in range(-2, g.valid_to):
        assert g.coeff(e) == 1
    # validity shrinks by twice the valuation
    assert g.valid_to == 20 - 4


def test_invert_zero_raises():
    with pytest.raises(QZeroDivisorError):
        LaurentSeries.zero(10).invert()


def test_pow_int():
    f = poly({0: 1, 1: 1}, valid_to=12)
    cube = f.pow_int(3)
    assert [cube.coeff(e) for e in range(4)] == [1, 3, 3, 1]
    inv2 = f.pow_int(-2)
    assert (inv2 * f * f).first_mismatch(LaurentSeries.one(8), 8) is None


def test_first_mismatch_reports_exponent_and_values():
    a = poly({0: 1, 4: 2}, valid_to=10)
    b = poly({0: 1, 4: 3}, valid_to=10)
    assert a.first_mismatch(b, 10) == (4, F(2), F(3))
    assert a.first_mismatch(a, 10) is None


def test_first_mismatch_beyond_validity_raises():
    a = poly({0: 1}, valid_to=10)
    b = poly({0: 1}, valid_to=10)
    with pytest.raises(InsufficientPrecisionError):
        a.first_mismatch(b, 11)


def test_context_rejects_nonpositive_order():
    with pytest.raises(ValueError):
        EvalContext(order=0)


small_series = st.builds(
    poly,
    st.dictionaries(
        st.integers(min_value=-4, max_value=8),
        st.integers(min_value=-9, max_value=9),
        max_size=6,
    ),
)


@settings(max_examples=60, deadline=None)
@given(small_series, small_series, small_series)
def test_ring_axioms(a, b, c):
    upto = 30
    lhs = (a + b) + c
    rhs = a + (b + c)
    assert lhs.first_mismatch(rhs, upto) is None
    assert (a * b).first_mismatch(b * a, min(upto, (a * b).valid_to)) is None
    dist_l = a * (b + c)
    dist_r = a * b + a * c
    w = min(dist_l.valid_to, dist_r.valid_to)
    assert dist_l.first_mismatch(dist_r, w) is None


@settings(max_examples=40, deadline=None)
@given(small_series)
def test_sub_self_is_zero(a):
    assert (a - a).is_zero_to_order()
