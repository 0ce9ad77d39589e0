"""q-Pochhammer symbols and the two-variable theta product j(x, q).

Arguments are restricted to signed monomials, which makes vanishing and
pole detection exact.  Out-of-range theta arguments are reduced by the
quasi-periodicity law before expanding the triple product.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .monomial import Monomial
from .series import EvalContext, LaurentSeries, NonConvergentError

_ONE = Fraction(1)


def _factor_sign(a: Monomial, B: Monomial, k: int) -> int:
    # sign of a * B^(k-1)
    return a.sign * (B.sign if (k - 1) % 2 else 1)


def _dict_times_factor(d: dict, s: int, e: int) -> dict:
    """Exact polynomial product d * (1 - s*q^e)."""
    out = dict(d)
    for exp, c in d.items():
        key = exp + e
        cur = out.get(key)
        out[key] = (cur - s * c) if cur is not None else -s * c
    return {e2: c for e2, c in out.items() if c}


def _one_minus(s: int, e: int, valid_to: int) -> LaurentSeries:
    return LaurentSeries.from_terms({0: _ONE, e: Fraction(-s)}, valid_to)


def pochhammer(a: Monomial, B: Monomial, n: Optional[int], ctx: EvalContext) -> LaurentSeries:
    """(a; B)_n = prod_{k=1..n} (1 - a*B^(k-1)); n = None means infinity.

    A finite product with a factor 1 - q^0 vanishes identically and
    returns the exact zero series.  The infinite product requires every
    factor to be nonzero and converges q-adically because B.exp > 0.
    """
    if B.exp <= 0:
        if n is None:
            raise NonConvergentError("infinite product needs a base with positive exponent")
        raise ValueError("base must have positive exponent")
    order = ctx.order

    if n is not None:
        if n < 0:
            raise ValueError("finite Pochhammer length must be >= 0")
        head = {0: _ONE}
        for k in range(1, n + 1):
            e = a.exp + (k - 1) * B.exp
            s = _factor_sign(a, B, k)
            if e == 0 and s == 1:
                return LaurentSeries.zero(order)
            head = _dict_times_factor(head, s, e)
        return LaurentSeries.from_terms(head, order)

    # Infinite product: multiply the finitely many factors with
    # non-positive exponent exactly, then truncated factors until the
    # exponent passes the window.
    head = {0: _ONE}
    k = 1
    while True:
        e = a.exp + (k - 1) * B.exp
        if e > 0:
            break
        s = _factor_sign(a, B, k)
        if e == 0:
            if s == 1:
                raise ValueError("infinite product has a vanishing factor (a = B^(1-k))")
            head = {exp: 2 * c for exp, c in head.items()}
        else:
            head = _dict_times_factor(head, s, e)
        k += 1
    head_lo = min(head)
    tail_order = order - head_lo
    acc = LaurentSeries.one(tail_order)
    while True:
        e = a.exp + (k - 1) * B.exp
        if e >= tail_order:
            break
        acc = acc.mul(_one_minus(_factor_sign(a, B, k), e, tail_order))
        k += 1
    if head == {0: _ONE}:
        return acc
    return LaurentSeries.from_terms(head, order).mul(acc)


def _reduce(x: Monomial, B: Monomial) -> tuple[Optional[Monomial], int, int]:
    """Reduce x modulo B-powers for the theta product.

    Returns (x_reduced, pref_sign, pref_exp) with
    j(x, B) = pref_sign * q^pref_exp * j(x_reduced, B), where x_reduced
    has 0 <= exp < B.exp and (exp > 0 or sign == -1).  x_reduced is None
    when x is an integral power of B, i.e. j(x, B) = 0.
    """
    k, r = divmod(x.exp, B.exp)
    sign = x.sign * (B.sign if k % 2 else 1)
    if r == 0 and sign == 1:
        return None, 1, 0
    xr = Monomial(sign, r)
    if k == 0:
        return xr, 1, 0
    binom = k * (k - 1) // 2
    pref_sign = (-1 if k % 2 else 1) * (B.sign if binom % 2 else 1) * (xr.sign if k % 2 else 1)
    pref_exp = -binom * B.exp - k * r
    return xr, pref_sign, pref_exp


def jtheta_shift(x: Monomial, B: Monomial) -> int:
    """Exponent shift the quasi-periodic reduction applies to j(x, B).

    Zero when x is an integral power of B (the theta vanishes).
    """
    _, _, pref_exp = _reduce(x, B)
    return pref_exp


def jtheta(x: Monomial, B: Monomial, ctx: EvalContext) -> LaurentSeries:
    """j(x, B) = (x; B)_inf (B/x; B)_inf (B; B)_inf.

    Vanishes exactly when x is an integral power of B; any other integer
    exponent is brought in range with j(B^k*x, B) = (-1)^k B^(-k(k-1)/2)
    x^(-k) j(x, B), whose monomial prefactor shifts lo and valid_to.
    """
    if B.exp <= 0:
        raise ValueError("base must have positive exponent")
    xr, pref_sign, pref_exp = _reduce(x, B)
    if xr is None:
        return LaurentSeries.zero(ctx.order)
    res = pochhammer(xr, B, None, ctx)
    res = res.mul(pochhammer(B / xr, B, None, ctx))
    res = res.mul(pochhammer(B, B, None, ctx))
    if pref_exp or pref_sign != 1:
        res = res.times_monomial(pref_sign, pref_exp)
    return res


def J(a: int, m: int, base: Monomial, ctx: EvalContext) -> LaurentSeries:
    """J_{a,m} at the given base: j(base^a, base^m)."""
    if m <= 0:
        raise ValueError("m must be positive")
    Bm = base**m
    if Bm.exp <= 0:
        raise ValueError("base must have positive exponent")
    return jtheta(base**a, Bm, ctx)


def Jm(m: int, base: Monomial, ctx: EvalContext) -> LaurentSeries:
    """J_m = J_{m,3m}; at base q this is (q^m; q^m)_inf."""
    return J(m, 3 * m, base, ctx)
