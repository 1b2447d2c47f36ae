"""Exact rational building blocks: Bernoulli numbers, cosecant Laurent
coefficients, and values of the form q * pi^w.

Everything here is computed with `fractions.Fraction`, which already provides
arbitrary-precision rationals stored in lowest terms with a positive
denominator. All values are immutable and all functions are pure, so the
module is safe for concurrent use; the Bernoulli cache is an idempotent fill.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "PiMultiple",
    "bernoulli",
    "csc_coefficient",
    "format_rational",
    "parse_rational",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def format_rational(q: Fraction) -> str:
    """Render a rational as "p/q" in lowest terms, or "p" when q = 1."""
    return str(q)


def parse_rational(s: str) -> Fraction:
    """Inverse of :func:`format_rational`. Accepts only "p" or "p/q" forms."""
    s = s.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {s!r}")
    return Fraction(s)


# Bernoulli numbers B_0, B_1, ... with the B_1 = -1/2 convention.  The odd
# convention never matters downstream (only even indices are consumed), it is
# fixed purely for determinism.
_bernoulli_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli(n: int) -> Fraction:
    """B_n via the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0, memoized.

    B_1 = -1/2; B_odd = 0 for odd n >= 3.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    cache = _bernoulli_cache
    while len(cache) <= n:
        m = len(cache)
        s = sum(comb(m + 1, k) * cache[k] for k in range(m))
        cache.append(-s / (m + 1))
    return cache[n]


def csc_coefficient(n: int) -> Fraction:
    """Coefficient of x^(2n-1) in the Laurent expansion of csc x.

    Equals (-1)^(n-1) (2^(2n) - 2) B_{2n} / (2n)!.  In particular the n = 0
    term gives the leading 1/x coefficient, 1.
    """
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    sign = -1 if (n - 1) % 2 else 1
    return Fraction(sign * (2 ** (2 * n) - 2)) * bernoulli(2 * n) / factorial(2 * n)


@dataclass(frozen=True, slots=True)
class PiMultiple:
    """An exact value q * pi^w with rational q and integer w >= 0."""

    coeff: Fraction
    pi_power: int

    def __post_init__(self) -> None:
        if not isinstance(self.coeff, Fraction):
            object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.pi_power < 0:
            raise ValueError("pi_power must be nonnegative")

    def __str__(self) -> str:
        return f"{format_rational(self.coeff)} * pi^{self.pi_power}"

    def __mul__(self, other: "PiMultiple") -> "PiMultiple":
        if not isinstance(other, PiMultiple):
            return NotImplemented
        return PiMultiple(self.coeff * other.coeff, self.pi_power + other.pi_power)

    def __add__(self, other: "PiMultiple") -> "PiMultiple":
        if not isinstance(other, PiMultiple):
            return NotImplemented
        if self.pi_power != other.pi_power:
            raise ValueError(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} terms"
            )
        return PiMultiple(self.coeff + other.coeff, self.pi_power)

    def to_json_obj(self) -> dict:
        return {"coeff": format_rational(self.coeff), "pi_power": self.pi_power}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PiMultiple":
        return cls(parse_rational(obj["coeff"]), int(obj["pi_power"]))
