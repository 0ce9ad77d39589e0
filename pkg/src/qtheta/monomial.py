"""Signed monomials ±q^e, the only admissible theta/Appell parameter form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .series import LaurentSeries


@dataclass(frozen=True)
class Monomial:
    """The monomial sign * q^exp with sign in {+1, -1}."""

    sign: int
    exp: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not isinstance(self.exp, int):
            raise ValueError("exponent must be an integer")

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exp + other.exp)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exp - other.exp)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.sign if k % 2 else 1, self.exp * k)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.sign, self.exp)

    def inverse(self) -> "Monomial":
        return Monomial(self.sign, -self.exp)

    def is_one(self) -> bool:
        return self.sign == 1 and self.exp == 0

    def power_in(self, base: "Monomial") -> Optional[int]:
        """k such that self == base**k, or None.  Requires base.exp > 0."""
        if base.exp <= 0:
            raise ValueError("power_in requires a base with positive exponent")
        if self.exp % base.exp:
            return None
        k = self.exp // base.exp
        return k if (base.sign if k % 2 else 1) == self.sign else None

    def as_series(self, valid_to: int) -> LaurentSeries:
        return LaurentSeries.monomial(self.sign, self.exp, valid_to)

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        if self.exp == 0:
            return s + "1"
        if self.exp == 1:
            return s + "q"
        return f"{s}q^{self.exp}"


Q = Monomial(1, 1)
