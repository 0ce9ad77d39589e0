"""The two 10th-order mock theta Eulerian series X and chi.

Both are evaluated directly at a signed-monomial base, so substitutions
like q -> -q^2 are exact monomial algebra rather than series composition.
The Pochhammer denominator inverse is extended incrementally: each new
summand appends two geometric factors to a running inverse product.
"""

from __future__ import annotations

from .appell import _geom
from .monomial import Monomial
from .series import EvalContext, LaurentSeries


def mt_X(B: Monomial, ctx: EvalContext) -> LaurentSeries:
    """X(q) = sum_{n>=0} (-1)^n q^(n^2) / (-q; q)_{2n} at q = B."""
    if B.exp <= 0:
        raise ValueError("base must have positive exponent")
    order = ctx.order
    acc = LaurentSeries.one(order)  # n = 0: empty product
    dinv = LaurentSeries.one(order)
    n = 1
    while n * n * B.exp < order:
        for k in (2 * n - 1, 2 * n):
            # factor of (-B; B)_{2n} is 1 - (-B^k); its inverse is geometric
            dinv = dinv.mul(_geom(-(B**k), order))
        mono = B ** (n * n)
        sgn = (-1 if n % 2 else 1) * mono.sign
        acc = acc.add(dinv.times_monomial(sgn, mono.exp))
        n += 1
    return acc


def mt_chi(B: Monomial, ctx: EvalContext) -> LaurentSeries:
    """chi(q) = sum_{n>=0} (-1)^n q^((n+1)^2) / (-q; q)_{2n+1} at q = B."""
    if B.exp <= 0:
        raise ValueError("base must have positive exponent")
    order = ctx.order
    acc = LaurentSeries.zero(order)
    dinv = LaurentSeries.one(order)
    kdone = 0
    n = 0
    while (n + 1) * (n + 1) * B.exp < order:
        for k in range(kdone + 1, 2 * n + 2):
            dinv = dinv.mul(_geom(-(B**k), order))
        kdone = 2 * n + 1
        mono = B ** ((n + 1) * (n + 1))
        sgn = (-1 if n % 2 else 1) * mono.sign
        acc = acc.add(dinv.times_monomial(sgn, mono.exp))
        n += 1
    return acc
