"""Pochhammer and theta-product tests against independent oracles."""

from fractions import Fraction

import pytest

from qtheta import EvalContext, J, Jm, Monomial, NonConvergentError, jtheta, pochhammer
from qtheta import oracles as O
from qtheta.theta import jtheta_shift

F = Fraction
CTX = EvalContext(order=60)


def M(sign, exp):
    return Monomial(sign, exp)


def dict_matches(series, d, upto):
    for e in range(series.lo, upto):
        assert series.coeff(e) == d.get(e, 0), f"exponent {e}"


def test_pochhammer_finite_small():
    # (q; q)_3 = (1-q)(1-q^2)(1-q^3)
    s = pochhammer(M(1, 1), M(1, 1), 3, CTX)
    expect = {0: 1, 1: -1, 2: -1, 3: 0, 4: 1, 5: 1, 6: -1}
    for e, c in expect.items():
        assert s.coeff(e) == c


def test_pochhammer_n_zero_is_one():
    s = pochhammer(M(1, 5), M(1, 2), 0, CTX)
    assert list(s.nonzero_terms()) == [(0, F(1))]


def test_pochhammer_finite_vanishing_factor():
    # (q^0; B)_n contains a 1 - q^0 factor: exactly zero.
    s = pochhammer(M(1, 0), M(1, 3), 2, CTX)
    assert s.is_zero_to_order()


def test_pochhammer_infinite_pentagonal():
    s = pochhammer(M(1, 1), M(1, 1), None, CTX)
    dict_matches(s, O.pentagonal(CTX.order), CTX.order)


def test_pochhammer_infinite_matches_oracle():
    for a, B in [(M(1, 2), M(1, 5)), (M(-1, 1), M(1, 3)), (M(1, -3), M(1, 10))]:
        s = pochhammer(a, B, None, CTX)
        d = O.dpoch_inf(a, B, CTX.order)
        dict_matches(s, d, min(CTX.order, s.valid_to))


def test_pochhammer_infinite_divergent_base():
    with pytest.raises(NonConvergentError):
        pochhammer(M(1, 1), M(1, 0), None, CTX)


def test_jtheta_triple_product_vs_bilateral_sum():
    pairs = [
        (M(1, 1), M(1, 3)),
        (M(1, 2), M(1, 5)),
        (M(-1, 4), M(1, 10)),
        (M(1, 32), M(1, 40)),
        (M(1, -3), M(1, 10)),
        (M(-1, 7), M(-1, 10)),
    ]
    for x, B in pairs:
        s = jtheta(x, B, CTX)
        d = O.djtheta(x, B, CTX.order)
        dict_matches(s, d, min(CTX.order, s.valid_to))


def test_jtheta_vanishes_exactly_on_lattice():
    for k in (-2, -1, 0, 1, 3):
        s = jtheta(M(1, 5) ** k, M(1, 5), CTX)
        assert s.is_zero_to_order()
    # near miss: x = q^6 with B = q^5 does not vanish
    assert not jtheta(M(1, 6), M(1, 5), CTX).is_zero_to_order()


def test_jtheta_quasi_periodicity():
    x, B = M(1, 3), M(1, 7)
    lhs = jtheta(B * x, B, CTX)
    rhs = jtheta(x, B, CTX).times_monomial(-x.sign, -x.exp)
    w = min(lhs.valid_to, rhs.valid_to)
    assert lhs.first_mismatch(rhs, w) is None


def test_jtheta_inversion_symmetry():
    # j(x^-1, B) = -x^-1 j(x, B)
    x, B = M(1, 2), M(1, 9)
    lhs = jtheta(x.inverse(), B, CTX)
    rhs = jtheta(x, B, CTX).times_monomial(-x.sign, -x.exp)
    w = min(lhs.valid_to, rhs.valid_to)
    assert lhs.first_mismatch(rhs, w) is None


def test_jtheta_shift_consistent_with_reduction():
    # Deeply out-of-window arguments are reduced via quasi-periodicity; the
    # result stays correct and the validity window shrinks by exactly the
    # analytic shift.
    x, B = M(1, -32), M(1, 40)
    t = jtheta_shift(x, B)
    s = jtheta(x, B, CTX)
    assert s.valid_to == CTX.order + t
    dict_matches(s, O.djtheta(x, B, s.valid_to), s.valid_to)


def test_J_shorthand_pentagonal():
    # J(1,3) at base q is Euler's product (q; q)_inf.
    s = J(1, 3, M(1, 1), CTX)
    dict_matches(s, O.pentagonal(CTX.order), CTX.order)


def test_Jm_matches_triple_J():
    for m, base in [(1, M(1, 10)), (2, M(-1, 10)), (4, M(1, 10))]:
        a = Jm(m, base, CTX)
        b = J(m, 3 * m, base, CTX)
        w = min(a.valid_to, b.valid_to, CTX.order)
        assert a.first_mismatch(b, w) is None


def test_jtheta_signed_base():
    x, B = M(-1, 4), M(-1, 10)
    s = jtheta(x, B, CTX)
    dict_matches(s, O.djtheta(x, B, CTX.order), min(CTX.order, s.valid_to))
