"""Exact truncated Laurent series in q over the rationals.

A series is a dense coefficient window [lo, valid_to): coefficients at
exponents below lo are zero, coefficients at or beyond valid_to are
unknown and are never read.  Validity is tracked per series and shrinks
under multiplication exactly as dictated by the unknown high-order terms
of the factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

Coefficient = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class QSeriesError(Exception):
    """Base class for series arithmetic errors."""


class ZeroDivisorError(QSeriesError):
    """Inversion of a series that is zero through its whole window."""


class InsufficientPrecisionError(QSeriesError):
    """A coefficient at or beyond a validity bound was requested."""


class NonConvergentError(QSeriesError):
    """An infinite product whose factor exponents never pass the window."""


@dataclass(frozen=True)
class EvalContext:
    """Working order: coefficients of q^e are trusted/compared for e < order."""

    order: int

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError("order must be an integer >= 1")


class LaurentSeries:
    """Dense window of exact rational coefficients of a Laurent series in q.

    coeffs[i] holds the coefficient of q^(lo + i); len(coeffs) is exactly
    valid_to - lo.  Instances are immutable by convention: no method
    mutates self, and callers must not touch .coeffs.
    """

    __slots__ = ("lo", "coeffs", "valid_to")

    def __init__(self, lo: int, coeffs, valid_to: int) -> None:
        coeffs = list(coeffs)
        if valid_to < lo or len(coeffs) != valid_to - lo:
            raise ValueError("dense window requires len(coeffs) == valid_to - lo")
        self.lo = lo
        self.coeffs = coeffs
        self.valid_to = valid_to

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, valid_to: int) -> "LaurentSeries":
        return cls(min(0, valid_to), [_ZERO] * max(valid_to, 0), valid_to)

    @classmethod
    def one(cls, valid_to: int) -> "LaurentSeries":
        return cls.monomial(_ONE, 0, valid_to)

    @classmethod
    def monomial(cls, c, e: int, valid_to: int) -> "LaurentSeries":
        """The single-term series c*q^e, trusted below valid_to."""
        if e >= valid_to:
            # The term itself lies beyond the window; all trusted
            # coefficients are zero.
            return cls(valid_to, [], valid_to)
        out = [_ZERO] * (valid_to - e)
        out[0] = Fraction(c)
        return cls(e, out, valid_to)

    @classmethod
    def from_terms(cls, terms: dict, valid_to: int) -> "LaurentSeries":
        """Series from an {exponent: coefficient} mapping, truncated."""
        kept = {e: Fraction(c) for e, c in terms.items() if e < valid_to and c}
        if not kept:
            return cls(valid_to, [], valid_to)
        lo = min(kept)
        out = [_ZERO] * (valid_to - lo)
        for e, c in kept.items():
            out[e - lo] = c
        return cls(lo, out, valid_to)

    # -- access -------------------------------------------------------

    def coeff(self, e: int) -> Fraction:
        """Coefficient of q^e; errors at or beyond the validity bound."""
        if e >= self.valid_to:
            raise InsufficientPrecisionError(
                f"coefficient of q^{e} requested, but series is only valid below q^{self.valid_to}"
            )
        if e < self.lo:
            return _ZERO
        return self.coeffs[e - self.lo]

    def nonzero_terms(self) -> Iterator[tuple[int, Fraction]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lo + i, c

    def is_zero_to_order(self) -> bool:
        """True when every trusted coefficient is zero."""
        return not any(self.coeffs)

    # -- ring operations ----------------------------------------------

    def add(self, other: "LaurentSeries") -> "LaurentSeries":
        lo = min(self.lo, other.lo)
        vt = min(self.valid_to, other.valid_to)
        if vt <= lo:
            return LaurentSeries(vt, [], vt)
        out = [_ZERO] * (vt - lo)
        for s in (self, other):
            base = s.lo - lo
            for i, c in enumerate(s.coeffs):
                if base + i >= vt - lo:
                    break
                if c:
                    out[base + i] += c
        return LaurentSeries(lo, out, vt)

    def neg(self) -> "LaurentSeries":
        return LaurentSeries(self.lo, [-c for c in self.coeffs], self.valid_to)

    def sub(self, other: "LaurentSeries") -> "LaurentSeries":
        return self.add(other.neg())

    def scale(self, c) -> "LaurentSeries":
        c = Fraction(c)
        return LaurentSeries(self.lo, [c * a for a in self.coeffs], self.valid_to)

    def times_monomial(self, sign: int, exp: int) -> "LaurentSeries":
        """Multiply by the exact monomial sign*q^exp (shift semantics)."""
        coeffs = self.coeffs if sign == 1 else [-c for c in self.coeffs]
        return LaurentSeries(self.lo + exp, coeffs, self.valid_to + exp)

    def mul(self, other: "LaurentSeries") -> "LaurentSeries":
        lo = self.lo + other.lo
        vt = min(self.valid_to + other.lo, other.valid_to + self.lo)
        if vt <= lo:
            return LaurentSeries(vt, [], vt)
        n = vt - lo
        f, g = self.coeffs, other.coeffs
        # Schoolbook product; iterate the sparser operand on the outside.
        if sum(1 for c in g[:n] if c) < sum(1 for c in f[:n] if c):
            f, g = g, f
        out = [_ZERO] * n
        for i, a in enumerate(f):
            if i >= n:
                break
            if not a:
                continue
            jmax = min(len(g), n - i)
            for j in range(jmax):
                b = g[j]
                if b:
                    out[i + j] += a * b
        return LaurentSeries(lo, out, vt)

    def invert(self) -> "LaurentSeries":
        """Multiplicative inverse through the (shifted) window."""
        v = None
        for i, c in enumerate(self.coeffs):
            if c:
                v = i
                break
        if v is None:
            raise ZeroDivisorError("cannot invert a series that is zero through its window")
        val = self.lo + v
        u = self.coeffs[v:]
        n = len(u)
        u0inv = _ONE / u[0]
        tail = [(i, c) for i, c in enumerate(u) if i and c]
        w = [_ZERO] * n
        w[0] = u0inv
        for k in range(1, n):
            s = _ZERO
            for i, c in tail:
                if i > k:
                    break
                s += c * w[k - i]
            if s:
                w[k] = -u0inv * s
        return LaurentSeries(-val, w, self.valid_to - 2 * val)

    def pow_int(self, k: int) -> "LaurentSeries":
        if k < 0:
            return self.invert().pow_int(-k)
        if k == 0:
            return LaurentSeries.one(max(self.valid_to, 1))
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return result

    # -- comparison -----------------------------------------------------

    def first_mismatch(
        self, other: "LaurentSeries", upto: int
    ) -> Optional[tuple[int, Fraction, Fraction]]:
        """Least exponent below upto where the two series disagree, or None.

        Refuses (rather than clamps) when upto exceeds a validity bound:
        equality must never be reported on untrusted coefficients.
        """
        if upto > self.valid_to or upto > other.valid_to:
            raise InsufficientPrecisionError(
                f"comparison up to q^{upto} exceeds a validity bound "
                f"({self.valid_to}, {other.valid_to})"
            )
        for e in range(min(self.lo, other.lo), upto):
            a = self.coeff(e)
            b = other.coeff(e)
            if a != b:
                return (e, a, b)
        return None

    # -- misc -----------------------------------------------------------

    def __repr__(self) -> str:
        terms = ", ".join(f"{e}: {c}" for e, c in list(self.nonzero_terms())[:8])
        more = "" if sum(1 for _ in self.nonzero_terms()) <= 8 else ", ..."
        return f"LaurentSeries({{{terms}{more}}}, lo={self.lo}, valid_to={self.valid_to})"

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg
