"""Closed evaluations of repeated-index zeta and zeta-star values as exact
rational multiples of pi powers, with independent symmetric-function oracles.

Three families are covered, labelled to match the CLI:

* thm1 / thmA: the index (2m, ..., 2m) with n repetitions, for the plain and
  the star value respectively (pi power 2mn);
* thmB: the index (3, 1, ..., 3, 1) with 2n entries, star value (pi power 4n);
* thmC: the sum of star values over all 2n+1 insertions of a single 2 into
  that string (pi power 4n+2).

Each family also has a second, independent route (Newton's identities on the
power sums zeta(2mk), or the product relations connecting the families), so
every number here can be cross-checked exactly.

All functions are deterministic pure functions of their integer arguments and
cache only immutable results.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, lcm
from typing import Iterator

from .cyclotomic import CycloElem, cyclo_rational_value
from .exact import PiMultiple, bernoulli

__all__ = [
    "alpha",
    "compositions",
    "euler_zeta_even",
    "mzv_31_repeated",
    "mzv_repeated_2m",
    "newton_e_oracle",
    "newton_h_oracle",
    "thm1_C",
    "thm3_sum",
    "thmA_coefficient",
    "thmA_cyclo_sum",
    "thmB_coefficient",
    "thmB_via_relation",
    "thmC_coefficient",
    "thmC_via_relation",
]


def compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    """Stream all tuples of `slots` nonnegative integers summing to `total`.

    Exactly C(total + slots - 1, slots - 1) tuples, each yielded once, in
    lexicographic order.
    """
    if slots < 1:
        raise ValueError("slots must be positive")
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, slots - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def thm1_C(m: int, n: int) -> Fraction:
    """Recurrence constants for zeta({2m}^n): C_0 = 1 and
    C_n = (1/2n) sum_{l=1}^{n} (-1)^l C(2mn, 2ml) B_{2ml} C_{n-l}."""
    if n == 0:
        return Fraction(1)
    total = sum(
        (-1) ** l * comb(2 * m * n, 2 * m * l) * bernoulli(2 * m * l) * thm1_C(m, n - l)
        for l in range(1, n + 1)
    )
    return total / (2 * n)


def mzv_repeated_2m(m: int, n: int) -> PiMultiple:
    """zeta({2m}^n) = C_n^(m) (2 pi i)^(2mn) / (2mn)! as an exact pi multiple.

    (2 pi i)^(2mn) = (-4)^(mn) pi^(2mn), so the coefficient stays rational.
    """
    w = 2 * m * n
    coeff = thm1_C(m, n) * Fraction(-4) ** (m * n) / factorial(w)
    return PiMultiple(coeff, w)


def euler_zeta_even(k: int) -> PiMultiple:
    """Euler's closed form zeta(2k) = (-1)^(k+1) B_{2k} (2 pi)^(2k) / (2 (2k)!)."""
    if k < 1:
        raise ValueError("k must be positive")
    sign = 1 if (k + 1) % 2 == 0 else -1
    coeff = sign * bernoulli(2 * k) * Fraction(2 ** (2 * k), 2 * factorial(2 * k))
    return PiMultiple(coeff, 2 * k)


def _csc_term(j: int) -> Fraction:
    # (2^{2j} - 2) B_{2j} / (2j)!, the unsigned building block of the
    # cosecant coefficients; the signs are supplied by each formula.
    return Fraction(2 ** (2 * j) - 2) * bernoulli(2 * j) / factorial(2 * j)


@lru_cache(maxsize=None)
def thmA_cyclo_sum(m: int, n: int) -> CycloElem:
    """The group-ring accumulation behind :func:`thmA_coefficient`.

    Streams every composition n_0 + ... + n_{m-1} = mn and accumulates
    (-1)^(m(n-1)) prod_k (2^{2 n_k} - 2) B_{2 n_k} / (2 n_k)! into the
    coefficient of t^(sum_l l n_l mod m) of Q[t]/(t^m - 1).

    The factors are put over the shared denominator L^m (2mn)! (L the lcm of
    the Bernoulli denominators involved), so the whole enumeration runs in
    integer arithmetic; per-residue sums become Fractions only at the end.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = m * n
    bern = [bernoulli(2 * j) for j in range(total + 1)]
    L = lcm(*(b.denominator for b in bern)) if bern else 1
    unit = [
        (2 ** (2 * j) - 2) * bern[j].numerator * (L // bern[j].denominator)
        for j in range(total + 1)
    ]
    acc = [0] * m
    # Depth-first over the slots with running product, running multinomial
    # factor C(2 rem, 2 n_k) and running exponent; one leaf per composition.
    def descend(slot: int, rem: int, exp: int, prod: int) -> None:
        if slot == m - 1:
            acc[(exp + slot * rem) % m] += prod * unit[rem]
            return
        for nk in range(rem + 1):
            descend(
                slot + 1,
                rem - nk,
                (exp + slot * nk) % m,
                prod * unit[nk] * comb(2 * rem, 2 * nk),
            )

    descend(0, total, 0, 1)
    sign = -1 if (m * (n - 1)) % 2 else 1
    den = L**m * factorial(2 * total)
    return CycloElem(m, tuple(Fraction(sign * a, den) for a in acc))


def thmA_coefficient(m: int, n: int) -> Fraction:
    """The rational q with zeta-star({2m}^n) = q pi^(2mn).

    The root-of-unity sum collapses to a rational because it is fixed by the
    Galois action; a :class:`~zetastar.cyclotomic.NotRationalError` here would
    mean the accumulation itself is buggy.
    """
    return cyclo_rational_value(thmA_cyclo_sum(m, n))


def _power_sums(m: int, n: int) -> list[Fraction]:
    # p_k = zeta(2mk) / pi^(2mk) for k = 1..n (index 0 unused).
    return [Fraction(0)] + [euler_zeta_even(m * k).coeff for k in range(1, n + 1)]


def newton_h_oracle(m: int, n: int) -> Fraction:
    """Independent route to zeta-star({2m}^n) / pi^(2mn).

    The star value is the complete homogeneous symmetric function h_n of the
    variables 1/i^(2m), so Newton's identity n h_n = sum_k h_{n-k} p_k
    rebuilds it from the Euler values p_k = zeta(2mk).
    """
    p = _power_sums(m, n)
    h = [Fraction(1)]
    for j in range(1, n + 1):
        h.append(sum(h[j - k] * p[k] for k in range(1, j + 1)) / j)
    return h[n]


def newton_e_oracle(m: int, n: int) -> Fraction:
    """Independent route to zeta({2m}^n) / pi^(2mn), via the elementary
    symmetric function recursion n e_n = sum_k (-1)^(k-1) e_{n-k} p_k."""
    p = _power_sums(m, n)
    e = [Fraction(1)]
    for j in range(1, n + 1):
        e.append(
            sum((-1) ** (k - 1) * e[j - k] * p[k] for k in range(1, j + 1)) / j
        )
    return e[n]


@lru_cache(maxsize=None)
def alpha(n: int) -> Fraction:
    """The double Bernoulli sum
    sum_{n0 + n1 = 2n} (-1)^(n1) (2^{2 n0} - 2) B_{2 n0} / (2 n0)!
                                (2^{2 n1} - 2) B_{2 n1} / (2 n1)!."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(
        (Fraction(-1) ** n1) * _csc_term(2 * n - n1) * _csc_term(n1)
        for n1 in range(2 * n + 1)
    )


def thmB_coefficient(n: int) -> Fraction:
    """The rational q with zeta-star({3,1}^n, 2n entries) = q pi^(4n).

    Direct formula: sum_i 2/(4i+2)! alpha(n-i); the inner double sum of the
    closed form is exactly :func:`alpha`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(Fraction(2, factorial(4 * i + 2)) * alpha(n - i) for i in range(n + 1))


def thmB_via_relation(n: int) -> Fraction:
    """Second route to the same number, through the product relation
    zeta-star({3,1}^n) = sum_i zeta({3,1}^i) zeta-star({4}^(n-i))
    with zeta({3,1}^i) = 2 pi^(4i)/(4i+2)!."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(
        Fraction(2, factorial(4 * i + 2)) * thmA_coefficient(2, n - i)
        for i in range(n + 1)
    )


def mzv_31_repeated(n: int) -> PiMultiple:
    """zeta({3,1}^n, 2n entries) = 2 pi^(4n) / (4n+2)!."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PiMultiple(Fraction(2, factorial(4 * n + 2)), 4 * n)


def thm3_sum(n: int) -> PiMultiple:
    """Sum of zeta over all 2n+1 insertions of a 2 into {3,1}^n:
    pi^(4n+2) / (4n+3)!."""
    if n < 1:
        raise ValueError("n must be positive")
    return PiMultiple(Fraction(1, factorial(4 * n + 3)), 4 * n + 2)


def thmC_coefficient(n: int) -> Fraction:
    """The rational q with sum over the 2-insertion set of zeta-star values
    equal to q pi^(4n+2):
    sum_k { 2^(4k+3) B_{4k+2}/(4k+2)! sum_i alpha(n-k-i)/(4i+2)!
            - alpha(n-k)/(4k+3)! }."""
    if n < 1:
        raise ValueError("n must be positive")
    total = Fraction(0)
    for k in range(n + 1):
        inner = sum(
            alpha(n - k - i) / factorial(4 * i + 2) for i in range(n - k + 1)
        )
        total += (
            Fraction(2 ** (4 * k + 3)) * bernoulli(4 * k + 2) / factorial(4 * k + 2)
        ) * inner - alpha(n - k) / factorial(4 * k + 3)
    return total


def thmC_via_relation(n: int) -> Fraction:
    """Second route to the insertion-set star sum, through
    2 sum_k zeta(4k+2) zeta-star({3,1}^(n-k))
      - sum_k zeta-star({4}^(n-k)) (insertion-set zeta sum at k).

    The k = 0 boundary term inserts a 2 into the empty string, which we read
    as zeta(2); conveniently this equals the k = 0 value pi^2/3! of the
    insertion-sum formula, so a single expression covers every k.
    """
    if n < 1:
        raise ValueError("n must be positive")
    first = 2 * sum(
        euler_zeta_even(2 * k + 1).coeff * thmB_coefficient(n - k)
        for k in range(n + 1)
    )
    second = sum(
        thmA_coefficient(2, n - k) * Fraction(1, factorial(4 * k + 3))
        for k in range(n + 1)
    )
    return first - second
