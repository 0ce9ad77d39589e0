"""Tenth-order mock theta functions X and chi."""

from fractions import Fraction

from qtheta import EvalContext, Monomial, evaluate, mt_X, mt_chi
from qtheta import oracles as O

F = Fraction
CTX = EvalContext(order=40)


def M(sign, exp):
    return Monomial(sign, exp)


# Frozen leading coefficients, independently computed by direct summation
# of the defining Eulerian series.
X_AT_MINUS_Q2 = {0: 1, 2: 1, 4: 1, 8: 1, 10: 2, 12: 1, 14: 1, 16: 1, 18: 2, 20: 3}
X_AT_Q = {0: 1, 1: -1, 2: 1, 4: 1, 5: -2, 6: 1, 7: -1, 8: 1, 9: -2, 10: 3, 11: -1, 12: 2}
CHI_AT_MINUS_Q2 = {2: -1, 4: -1, 6: -1, 8: -2, 10: -2, 12: -1, 14: -2, 16: -3, 18: -3, 20: -3}
CHI_AT_Q = {1: 1, 2: -1, 3: 1, 4: -2, 5: 2, 6: -1, 7: 2, 8: -3, 9: 3, 10: -3, 11: 3, 12: -4}


def dict_matches(series, d, upto):
    for e in range(series.lo, upto):
        assert series.coeff(e) == d.get(e, 0), f"exponent {e}"


def test_X_constant_term():
    assert mt_X(M(1, 1), CTX).coeff(0) == 1
    assert mt_X(M(-1, 2), CTX).coeff(0) == 1


def test_chi_starts_at_base_exponent():
    s = mt_chi(M(1, 1), CTX)
    assert s.coeff(0) == 0
    assert s.coeff(1) == 1


def test_X_frozen_values():
    dict_matches(mt_X(M(-1, 2), CTX), X_AT_MINUS_Q2, 21)
    dict_matches(mt_X(M(1, 1), CTX), X_AT_Q, 13)


def test_chi_frozen_values():
    dict_matches(mt_chi(M(-1, 2), CTX), CHI_AT_MINUS_Q2, 21)
    dict_matches(mt_chi(M(1, 1), CTX), CHI_AT_Q, 13)


def test_X_matches_oracle():
    for b in (M(1, 1), M(-1, 2), M(1, 3)):
        dict_matches(mt_X(b, CTX), O.oX(b, CTX.order), CTX.order)


def test_chi_matches_oracle():
    for b in (M(1, 1), M(-1, 2), M(1, 3)):
        dict_matches(mt_chi(b, CTX), O.ochi(b, CTX.order), CTX.order)


def test_X_appell_lerch_rewriting():
    # X(-q^2) rewritten as an Appell-Lerch m-sum plus a theta quotient.
    ctx = EvalContext(order=50)
    lhs = evaluate("X(-q^2)", ctx)
    rhs = evaluate("2*m(-q^4,-q^10,q^8) - J(3,10,-q^2)*J(5,10,-q^2)/J(1,5,-q^2)", ctx)
    w = min(lhs.valid_to, rhs.valid_to)
    assert lhs.first_mismatch(rhs, w) is None


def test_chi_appell_lerch_rewriting():
    ctx = EvalContext(order=50)
    lhs = evaluate("chi(-q^2)", ctx)
    rhs = evaluate(
        "2*m(q^2,-q^10,q^4) - q^2*J(1,10,-q^2)*J(5,10,-q^2)/J(2,5,-q^2)", ctx
    )
    w = min(lhs.valid_to, rhs.valid_to)
    assert lhs.first_mismatch(rhs, w) is None
