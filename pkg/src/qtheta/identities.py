"""Named registry of q-series identities and the verification procedure.

Every identity is stored as a pair of expression texts; both sides are
evaluated from the displayed formulas verbatim, never simplified into
one another, and compared coefficient-by-coefficient over the common
trusted window.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .parser import EvalError, evaluate
from .series import EvalContext, LaurentSeries, QSeriesError


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: str
    rhs: str
    min_order: int
    source: str


@dataclass(frozen=True)
class VerificationReport:
    name: str
    order_requested: int
    order_effective: int
    status: str  # "equal" | "mismatch" | "error"
    mismatch: Optional[tuple]  # (exponent, lhs coeff, rhs coeff)
    detail: Optional[str]
    millis: float

    def to_dict(self) -> dict:
        mm = None
        if self.mismatch is not None:
            e, a, b = self.mismatch
            mm = {"exponent": e, "lhs": str(a), "rhs": str(b)}
        return {
            "name": self.name,
            "order_requested": self.order_requested,
            "order_effective": self.order_effective,
            "status": self.status,
            "mismatch": mm,
            "detail": self.detail,
            "millis": self.millis,
        }


_THETA_QUOT_X = (
    "pochinf(q^4,q^4)^2 * (j(-q^2,q^20)^2*j(q^12,q^40) + 2*q*pochinf(q^40,q^40)^3)"
    " / (pochinf(q^2,q^2)*pochinf(q^20,q^20)*pochinf(q^40,q^40)*j(q^8,q^40))"
)
_THETA_QUOT_CHI = (
    "pochinf(q^4,q^4)^2 * (2*q*pochinf(q^40,q^40)^3 - j(-q^6,q^20)^2*j(q^4,q^40))"
    " / (pochinf(q^2,q^2)*pochinf(q^20,q^20)*pochinf(q^40,q^40)*j(q^16,q^40))"
)

_HM = "Hickerson-Mortenson, Duke Math. J. 165 (2014)"

_REGISTRY: tuple[Identity, ...] = (
    Identity(
        "mtc-X",
        "X(-q^2)",
        "-2*q*g2(q,q^20) + 2*q^5*g2(q^9,q^20) + " + _THETA_QUOT_X,
        40,
        "Gordon-McIntosh conjectured identity for X, (5.18) in their survey",
    ),
    Identity(
        "mtc-chi",
        "chi(-q^2)",
        "-2*q^3*g2(q^3,q^20) - 2*q^5*g2(q^7,q^20) + q^2*" + _THETA_QUOT_CHI,
        40,
        "Gordon-McIntosh conjectured identity for chi, (5.18) in their survey",
    ),
    Identity(
        "choi-X-a",
        "X(-q^2)",
        "-2*q^2*k(-q^2,-q^10)"
        " - Jm(5,-q^2)*Jm(10,-q^2)*J(2,5,-q^2)/(J(2,10,-q^2)*J(1,5,-q^2))",
        10,
        "Choi's Appell-Lerch form of X at base -q^2",
    ),
    Identity(
        "choi-X-b",
        "X(-q^2)",
        "2*m(-q^4,-q^10,q^8) - J(3,10,-q^2)*J(5,10,-q^2)/J(1,5,-q^2)",
        10,
        "Choi's form of X rewritten through the k-to-m and z-shift laws",
    ),
    Identity(
        "quartic-X",
        "m(-q^4,-q^10,q^8)",
        "m(q^18,q^40,q^32) - q^-4*m(q^2,q^40,q^-32)",
        40,
        "base-change law at (x,z) = (-q^4, q^8), simplified by the x-inversion law",
    ),
    Identity(
        "zshift-X-1",
        "m(q^18,q^40,q^32)",
        "m(q^18,q^40,q) + delta(q^18,q^40,q^32,q)",
        40,
        "z-shift law (" + _HM + ", Thm. 3.3)",
    ),
    Identity(
        "zshift-X-2",
        "m(q^2,q^40,q^-32)",
        "m(q^2,q^40,q^9) + delta(q^2,q^40,q^-32,q^9)",
        40,
        "z-shift law (" + _HM + ", Thm. 3.3)",
    ),
    Identity(
        "theta-core-X",
        _THETA_QUOT_X,
        "-J(3,10,-q^2)*J(5,10,-q^2)/J(1,5,-q^2)"
        " + 2*delta(q^18,q^40,q^32,q) - 2*q^-4*delta(q^2,q^40,q^-32,q^9)",
        40,
        "theta-quotient identity closing the X chain (machine-verified modular identity)",
    ),
    Identity(
        "choi-chi-a",
        "chi(-q^2)",
        "2 - 2*q^4*k(q^4,-q^10)"
        " - q^2*Jm(5,-q^2)*Jm(10,-q^2)*J(1,5,-q^2)/(J(4,10,-q^2)*J(2,5,-q^2))",
        10,
        "Choi's Appell-Lerch form of chi at base -q^2",
    ),
    Identity(
        "choi-chi-b",
        "chi(-q^2)",
        "2*m(q^2,-q^10,q^4) - q^2*J(1,10,-q^2)*J(5,10,-q^2)/J(2,5,-q^2)",
        10,
        "Choi's form of chi rewritten through the k-to-m and z-shift laws",
    ),
    Identity(
        "quartic-chi",
        "m(q^2,-q^10,q^4)",
        "m(q^14,q^40,q^16) + q^-2*m(q^6,q^40,q^-16)",
        40,
        "base-change law at (x,z) = (q^2, q^4), simplified by the x-inversion law",
    ),
    Identity(
        "zshift-chi-1",
        "m(q^14,q^40,q^16)",
        "m(q^14,q^40,q^3) + delta(q^14,q^40,q^16,q^3)",
        40,
        "z-shift law (" + _HM + ", Thm. 3.3)",
    ),
    Identity(
        "zshift-chi-2",
        "m(q^6,q^40,q^-16)",
        "m(q^6,q^40,q^7) + delta(q^6,q^40,q^-16,q^7)",
        40,
        "z-shift law (" + _HM + ", Thm. 3.3)",
    ),
    Identity(
        "theta-core-chi",
        # The q^2 prefactor is required for the identity to hold; it is the
        # same prefactor the chi identity carries on its theta-quotient part.
        "q^2*" + _THETA_QUOT_CHI,
        "-q^2*J(1,10,-q^2)*J(5,10,-q^2)/J(2,5,-q^2)"
        " + 2*delta(q^14,q^40,q^16,q^3) + 2*q^-2*delta(q^6,q^40,q^-16,q^7)",
        40,
        "theta-quotient identity closing the chi chain (machine-verified modular identity)",
    ),
    Identity(
        "law-m1",
        "m(-q^3,q^10,q)",
        "-q^-3*m(-q^-3,q^10,q^-1)",
        10,
        "x-inversion law for Appell-Lerch sums (" + _HM + ", Prop. 3.1)",
    ),
    Identity(
        "law-m2",
        "m(q^3,q^10,q^2)",
        "m(q^3,q^10,q) + delta(q^3,q^10,q^2,q)",
        10,
        "z-shift law (" + _HM + ", Thm. 3.3)",
    ),
    Identity(
        "law-m3",
        "m(-q,q^10,q^2)",
        "m(-q^12,q^40,q^8) + q^-9*m(-q^-8,q^40,q^8) - lambda(-q,q^10,q^2)",
        40,
        "base-change law q -> q^4 (" + _HM + ", Thm. 3.9)",
    ),
    Identity(
        "law-m4",
        "g2(q^3,q^20)",
        "-q^-3*m(q^14,q^40,q^3)",
        40,
        "universal mock theta g2 as an Appell-Lerch sum (" + _HM + ", (4.6))",
    ),
    Identity(
        "law-m5",
        "-q^2*k(-q^2,-q^10)",
        "m(-q^4,-q^10,q^-4) + Jm(1,-q^10)^4/(2*Jm(2,-q^10)^2*j(q^4,-q^10))",
        10,
        "k-to-m law with its theta-quotient correction (" + _HM + ", Prop. 4.4)",
    ),
    Identity(
        "lambda-zero-X",
        "lambda(-q^4,-q^10,q^8)",
        "0",
        40,
        "exact vanishing: the numerator theta j(-x*z^2, q) vanishes at these parameters",
    ),
    Identity(
        "lambda-zero-chi",
        "lambda(q^2,-q^10,q^4)",
        "0",
        40,
        "exact vanishing: the numerator theta j(-x*z^2, q) vanishes at these parameters",
    ),
)


def builtin_registry() -> tuple[Identity, ...]:
    """The built-in identity registry, in fixed order."""
    return _REGISTRY


def lookup(name: str) -> Optional[Identity]:
    for ident in _REGISTRY:
        if ident.name == name:
            return ident
    return None


def eval_sides(ident: Identity, ctx: EvalContext) -> tuple[LaurentSeries, LaurentSeries]:
    """Evaluate both sides of an identity; engine errors propagate."""
    return evaluate(ident.lhs, ctx), evaluate(ident.rhs, ctx)


def verify(ident: Identity, ctx: EvalContext) -> VerificationReport:
    """Compare both sides over the common effective window.  Evaluation
    errors (genericity, precision) become status "error", never a crash."""
    if ctx.order < ident.min_order:
        raise ValueError(
            f"order {ctx.order} is below the minimum meaningful order "
            f"{ident.min_order} for {ident.name}"
        )
    t0 = time.perf_counter()
    try:
        lhs, rhs = eval_sides(ident, ctx)
        effective = min(ctx.order, lhs.valid_to, rhs.valid_to)
        mm = lhs.first_mismatch(rhs, effective)
    except (EvalError, QSeriesError, ValueError) as exc:
        return VerificationReport(
            ident.name, ctx.order, 0, "error", None, str(exc),
            (time.perf_counter() - t0) * 1000.0,
        )
    millis = (time.perf_counter() - t0) * 1000.0
    if mm is None:
        return VerificationReport(ident.name, ctx.order, effective, "equal", None, None, millis)
    return VerificationReport(ident.name, ctx.order, effective, "mismatch", mm, None, millis)


def verify_all(ctx: EvalContext) -> list[VerificationReport]:
    """One report per registry entry, in registry order."""
    worst = max(ident.min_order for ident in _REGISTRY)
    if ctx.order < worst:
        raise ValueError(f"order {ctx.order} is below the registry minimum {worst}")
    return [verify(ident, ctx) for ident in _REGISTRY]
