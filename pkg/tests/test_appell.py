"""Appell-Lerch sums, k, g2, and the Delta/Lambda theta quotients."""

from fractions import Fraction

import pytest

from qtheta import (
    EvalContext,
    GenericityError,
    Monomial,
    appell_m,
    delta_term,
    g2,
    geom_inverse,
    lambda_term,
    small_k,
)
from qtheta import oracles as O
from qtheta.appell import g2_pole_index, is_generic_m, small_k_pole_index

F = Fraction
CTX = EvalContext(order=60)


def M(sign, exp):
    return Monomial(sign, exp)


def dict_matches(series, d, upto):
    for e in range(min(series.lo, min(d) if d else 0), upto):
        assert series.coeff(e) == d.get(e, 0), f"exponent {e}"


def test_geom_inverse_positive_exponent():
    s = geom_inverse(M(1, 3), CTX)
    for e in range(CTX.order):
        assert s.coeff(e) == (1 if e % 3 == 0 else 0)


def test_geom_inverse_sign_alternates():
    s = geom_inverse(M(-1, 2), CTX)
    assert [s.coeff(e) for e in (0, 2, 4, 6)] == [1, -1, 1, -1]


def test_geom_inverse_negative_exponent():
    # 1/(1 - q^-2) = -q^2 - q^4 - ... (expansion in positive powers)
    s = geom_inverse(M(1, -2), CTX)
    assert s.coeff(0) == 0
    assert [s.coeff(e) for e in (2, 4, 6)] == [-1, -1, -1]


def test_geom_inverse_minus_one_is_half():
    s = geom_inverse(M(-1, 0), CTX)
    assert list(s.nonzero_terms()) == [(0, F(1, 2))]


def test_geom_inverse_one_raises():
    with pytest.raises(GenericityError):
        geom_inverse(M(1, 0), CTX)


# Parameter tuples actually exercised by the identity registry.
M_TUPLES = [
    (M(-1, 3), M(1, 10), M(1, 1)),
    (M(-1, -3), M(1, 10), M(1, -1)),
    (M(-1, 1), M(1, 10), M(1, 2)),
    (M(-1, 12), M(1, 40), M(1, 8)),
    (M(-1, -8), M(1, 40), M(1, 8)),
    (M(-1, 4), M(-1, 10), M(1, -4)),
    (M(1, 18), M(1, 40), M(1, 32)),
]
K_TUPLES = [(M(-1, 1), M(-1, 10)), (M(-1, 2), M(-1, 10))]
G2_TUPLES = [(M(1, 1), M(1, 20)), (M(1, 3), M(1, 20)), (M(1, 1), M(1, 10))]


@pytest.mark.parametrize("x,B,z", M_TUPLES)
def test_appell_m_matches_oracle(x, B, z):
    s = appell_m(x, B, z, CTX)
    upto = min(CTX.order, s.valid_to)
    dict_matches(s, O.om(x, B, z, upto), upto)


@pytest.mark.parametrize("x,B", K_TUPLES)
def test_small_k_matches_oracle(x, B):
    s = small_k(x, B, CTX)
    upto = min(CTX.order, s.valid_to)
    dict_matches(s, O.ok_(x, B, upto), upto)


@pytest.mark.parametrize("x,B", G2_TUPLES)
def test_g2_matches_oracle(x, B):
    s = g2(x, B, CTX)
    upto = min(CTX.order, s.valid_to)
    dict_matches(s, O.og2(x, B, upto), upto)


def test_appell_m_genericity_rejected():
    # z on the base lattice makes the theta denominator vanish.
    assert not is_generic_m(M(-1, 3), M(1, 10), M(1, 0))
    with pytest.raises(GenericityError):
        appell_m(M(-1, 3), M(1, 10), M(1, 0), CTX)
    # xz on the pole lattice hits a vanishing summand denominator.
    assert not is_generic_m(M(1, 3), M(1, 10), M(1, 7))
    with pytest.raises(GenericityError):
        appell_m(M(1, 3), M(1, 10), M(1, 7), CTX)


def test_small_k_genericity_rejected():
    assert small_k_pole_index(M(1, 5), M(1, 5)) is not None
    with pytest.raises(GenericityError):
        small_k(M(1, 5), M(1, 5), CTX)


def test_g2_genericity_rejected():
    assert g2_pole_index(M(1, 10), M(1, 10)) is not None
    with pytest.raises(GenericityError):
        g2(M(1, 10), M(1, 10), CTX)


def test_delta_term_as_m_difference():
    # Delta(x, q, z1, z0) equals m(x, q, z1) - m(x, q, z0): the quotient
    # form used by the engine must agree with the sum-side oracle.
    cases = [
        (M(-1, 1), M(1, 10), M(1, 2), M(1, 3)),
        (M(1, 18), M(1, 40), M(1, 32), M(1, 24)),
    ]
    for x, B, z1, z0 in cases:
        s = delta_term(x, B, z1, z0, CTX)
        upto = min(CTX.order, s.valid_to)
        diff = O.dadd(O.om(x, B, z1, upto), {e: -c for e, c in O.om(x, B, z0, upto).items()})
        dict_matches(s, O.dtrunc(diff, upto), upto)


def test_delta_term_exact_zero_when_slots_coincide():
    s = delta_term(M(-1, 1), M(1, 10), M(1, 2), M(1, 2), CTX)
    assert s.is_zero_to_order()


def test_lambda_zeros_are_exact():
    z1 = lambda_term(M(-1, 4), M(-1, 10), M(1, 8), CTX)
    assert z1.is_zero_to_order()
    z2 = lambda_term(M(1, 2), M(-1, 10), M(1, 4), CTX)
    assert z2.is_zero_to_order()


def test_lambda_generic_value_nonzero():
    s = lambda_term(M(-1, 1), M(1, 10), M(1, 2), CTX)
    assert not s.is_zero_to_order()
