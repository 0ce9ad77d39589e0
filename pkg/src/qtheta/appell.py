"""Appell-Lerch sums, the universal mock theta function g2, and the
theta-quotient correction terms used when shifting their parameters.

All parameters are signed monomials.  Genericity (no vanishing
denominator theta, no vanishing geometric denominator at any summation
index) is checked eagerly and exactly before any series work starts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from .monomial import Monomial
from .series import EvalContext, LaurentSeries, QSeriesError
from .theta import J, Jm, jtheta, jtheta_shift

_HALF = Fraction(1, 2)


class GenericityError(QSeriesError):
    """A parameter choice causes a pole: a vanishing 1 - q^0 denominator
    or a vanishing theta function in a denominator."""

    def __init__(self, message: str, index: Optional[int] = None) -> None:
        super().__init__(message if index is None else f"{message} (index {index})")
        self.index = index


def _check_base(B: Monomial) -> None:
    if B.exp <= 0:
        raise ValueError("base must have positive exponent")


def geom_inverse(u: Monomial, ctx: EvalContext) -> LaurentSeries:
    """Expansion of 1/(1 - u) for a signed monomial u.

    u.exp > 0 gives the geometric series; u.exp < 0 rewrites via
    1/(1-u) = -u^(-1)/(1-u^(-1)); u = -1 gives the constant 1/2.
    """
    return _geom(u, ctx.order)


def _geom(u: Monomial, order: int) -> LaurentSeries:
    order = max(order, 1)
    if u.exp == 0:
        if u.sign == 1:
            raise GenericityError("pole: denominator 1 - q^0 vanishes")
        return LaurentSeries.monomial(_HALF, 0, order)
    terms = {}
    if u.exp > 0:
        k = 0
        while k * u.exp < order:
            terms[k * u.exp] = Fraction(u.sign if k % 2 else 1)
            k += 1
    else:
        # -(u^-1 + u^-2 + ...): positive, increasing exponents.
        k = 1
        while -k * u.exp < order:
            terms[-k * u.exp] = Fraction(-(u.sign if k % 2 else 1))
            k += 1
    return LaurentSeries.from_terms(terms, order)


def _geom_min_exp(u_exp: int) -> int:
    return -u_exp if u_exp < 0 else 0


def _scan_bilateral(valuation: Callable[[int], int], order: int) -> tuple[list[int], int]:
    """Summation indices whose term valuation reaches below the order.

    Walks outward from 0 in both directions and stops a direction after
    4 consecutive indices whose valuation is at or past the window; the
    quadratic exponent growth makes valuations eventually increasing and
    the margin guards the transition region.
    """
    keep: list[int] = []
    vmin = 0
    for direction in (1, -1):
        misses = 0
        r = 0 if direction == 1 else -1
        while misses < 4:
            v = valuation(r)
            if v < order:
                keep.append(r)
                misses = 0
                if v < vmin:
                    vmin = v
            else:
                misses += 1
            r += direction
    return keep, vmin


# ---------------------------------------------------------------------------
# m(x, q, z)
# ---------------------------------------------------------------------------


def m_pole_index(x: Monomial, B: Monomial, z: Monomial) -> Optional[int]:
    """Summation index r at which 1 - B^(r-1)*x*z vanishes, or None."""
    num = x.exp + z.exp
    if num % B.exp:
        return None
    r = 1 - num // B.exp
    s = (B.sign if (r - 1) % 2 else 1) * x.sign * z.sign
    return r if s == 1 else None


def is_generic_m(x: Monomial, B: Monomial, z: Monomial) -> bool:
    return z.power_in(B) is None and m_pole_index(x, B, z) is None


def appell_m(x: Monomial, B: Monomial, z: Monomial, ctx: EvalContext) -> LaurentSeries:
    """The Appell-Lerch sum
    m(x,q,z) = (1/j(z,q)) * sum_r (-1)^r q^C(r,2) z^r / (1 - q^(r-1) x z)
    at q = B."""
    _check_base(B)
    if z.power_in(B) is not None:
        raise GenericityError("z is an integral power of the base; j(z, base) vanishes")
    pole = m_pole_index(x, B, z)
    if pole is not None:
        raise GenericityError("denominator 1 - base^(r-1)*x*z vanishes", index=pole)

    order = ctx.order
    t = jtheta_shift(z, B)
    ord_s = max(order + t, 1)

    def val(r: int) -> int:
        return r * (r - 1) // 2 * B.exp + r * z.exp + _geom_min_exp((r - 1) * B.exp + x.exp + z.exp)

    keep, vmin = _scan_bilateral(val, ord_s)
    acc = LaurentSeries.zero(ord_s)
    for r in keep:
        u = (B ** (r - 1)) * x * z
        binom = r * (r - 1) // 2
        me = binom * B.exp + r * z.exp
        ms = (-1 if r % 2 else 1) * (B.sign if binom % 2 else 1) * (z.sign if r % 2 else 1)
        term = _geom(u, ord_s - min(me, 0)).times_monomial(ms, me)
        acc = acc.add(term)
    inv = jtheta(z, B, EvalContext(max(order + t - min(vmin, 0), 1))).invert()
    return acc.mul(inv)


# ---------------------------------------------------------------------------
# k(x, q)
# ---------------------------------------------------------------------------


def small_k_pole_index(x: Monomial, B: Monomial) -> Optional[int]:
    """Index n at which 1 - B^(2n)*x^2 vanishes, or None.

    The denominator monomial always has positive sign, so the pole
    exists exactly when the exponent can reach zero.
    """
    if x.exp % B.exp:
        return None
    return -x.exp // B.exp


def small_k(x: Monomial, B: Monomial, ctx: EvalContext) -> LaurentSeries:
    """k(x,q) = (1/(x*j(-q,q^4))) * sum_n q^(n(2n+1)) / (1 - q^(2n) x^2)
    at q = B."""
    _check_base(B)
    pole = small_k_pole_index(x, B)
    if pole is not None:
        raise GenericityError("denominator 1 - base^(2n)*x^2 vanishes", index=pole)

    order = ctx.order
    ord_s = max(order + x.exp, 1)

    def val(n: int) -> int:
        return n * (2 * n + 1) * B.exp + _geom_min_exp(2 * n * B.exp + 2 * x.exp)

    keep, vmin = _scan_bilateral(val, ord_s)
    acc = LaurentSeries.zero(ord_s)
    for n in keep:
        u = (B ** (2 * n)) * (x**2)
        e = n * (2 * n + 1)
        term = _geom(u, ord_s - min(e * B.exp, 0)).times_monomial(
            B.sign if e % 2 else 1, e * B.exp
        )
        acc = acc.add(term)
    inv = jtheta(-B, B**4, EvalContext(max(ord_s - min(vmin, 0), 1))).invert()
    return acc.mul(inv).times_monomial(x.sign, -x.exp)


# ---------------------------------------------------------------------------
# g2(x, q)
# ---------------------------------------------------------------------------


def g2_pole_index(x: Monomial, B: Monomial) -> Optional[int]:
    """Index n at which 1 - x*B^n vanishes, or None."""
    if x.exp % B.exp:
        return None
    n = -x.exp // B.exp
    s = x.sign * (B.sign if n % 2 else 1)
    return n if s == 1 else None


def g2(x: Monomial, B: Monomial, ctx: EvalContext) -> LaurentSeries:
    """g2(x,q) = (1/j(q,q^2)) * sum_n (-1)^n q^(n(n+1)) / (1 - x q^n)
    at q = B."""
    _check_base(B)
    pole = g2_pole_index(x, B)
    if pole is not None:
        raise GenericityError("denominator 1 - x*base^n vanishes", index=pole)

    order = ctx.order

    def val(n: int) -> int:
        return n * (n + 1) * B.exp + _geom_min_exp(x.exp + n * B.exp)

    keep, vmin = _scan_bilateral(val, order)
    acc = LaurentSeries.zero(order)
    for n in keep:
        u = x * (B**n)
        e = n * (n + 1)
        ms = (-1 if n % 2 else 1) * (B.sign if e % 2 else 1)
        term = _geom(u, order - min(e * B.exp, 0)).times_monomial(ms, e * B.exp)
        acc = acc.add(term)
    inv = jtheta(B, B**2, EvalContext(max(order - min(vmin, 0), 1))).invert()
    return acc.mul(inv)


# ---------------------------------------------------------------------------
# Delta / Lambda correction terms
# ---------------------------------------------------------------------------


def delta_term(
    x: Monomial, B: Monomial, z1: Monomial, z0: Monomial, ctx: EvalContext
) -> LaurentSeries:
    """The z-shift correction
    Delta = z0 J1^3 j(z1/z0,q) j(x z0 z1,q) / (j(z0,q) j(z1,q) j(x z0,q) j(x z1,q))
    at q = B, assembled exactly as the displayed theta quotient."""
    _check_base(B)
    for label, mono in (("z0", z0), ("z1", z1), ("x*z0", x * z0), ("x*z1", x * z1)):
        if mono.power_in(B) is not None:
            raise GenericityError(f"denominator theta j({label}, base) vanishes")
    if (z1 / z0).power_in(B) is not None or (x * z0 * z1).power_in(B) is not None:
        return LaurentSeries.zero(ctx.order)
    num = jtheta(z1 / z0, B, ctx).mul(jtheta(x * z0 * z1, B, ctx))
    num = num.mul(Jm(1, B, ctx).pow_int(3)).times_monomial(z0.sign, z0.exp)
    den = jtheta(z0, B, ctx).mul(jtheta(z1, B, ctx))
    den = den.mul(jtheta(x * z0, B, ctx)).mul(jtheta(x * z1, B, ctx))
    return num.mul(den.invert())


def lambda_term(x: Monomial, B: Monomial, z: Monomial, ctx: EvalContext) -> LaurentSeries:
    """The base-change correction
    Lambda = J2 J4 j(-x z^2,q) j(-x z^3,q) / (x j(xz,q) j(z^4,q^4) j(-q x^2 z^4,q^2))
    at q = B; exactly zero when a numerator theta vanishes."""
    _check_base(B)
    den_args = (
        ("x*z", x * z, B),
        ("z^4", z**4, B**4),
        ("-q*x^2*z^4", -(B * x**2 * z**4), B**2),
    )
    for label, mono, base in den_args:
        if mono.power_in(base) is not None:
            raise GenericityError(f"denominator theta j({label}, ...) vanishes")
    if (-(x * z**2)).power_in(B) is not None or (-(x * z**3)).power_in(B) is not None:
        return LaurentSeries.zero(ctx.order)
    num = J(2, 6, B, ctx).mul(J(4, 12, B, ctx))
    num = num.mul(jtheta(-(x * z**2), B, ctx)).mul(jtheta(-(x * z**3), B, ctx))
    den = jtheta(x * z, B, ctx).mul(jtheta(z**4, B**4, ctx))
    den = den.mul(jtheta(-(B * x**2 * z**4), B**2, ctx))
    return num.mul(den.invert()).times_monomial(x.sign, -x.exp)
