"""Executable certification of the algebraic identities behind the closed
forms: stuffle commutativity/associativity, the merge-expansion product
identities, the insertion-set identities, the generating-function route to
the repeated-index coefficients, and the numeric product homomorphism.

Every check returns a :class:`Report`; a report with an empty failure list
certifies that each tested instance held exactly (or, for the numeric check,
within the certified error bounds).  Identity checks always compare
canonical :class:`~zetastar.words.HarmElem` values, never term streams, so
ordering artifacts cannot produce false results.

Random words come from :class:`WordSampler`, a 64-bit linear congruential
generator (state <- 6364136223846793005 * state + 1442695040888963407
mod 2^64, draws from the top 32 bits) so that sequences are reproducible
across platforms.  Depth and parts are uniform on small documented ranges;
constrained samples (weight caps, admissibility) are drawn by rejection.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .closed_forms import thmA_coefficient
from .cyclotomic import CycloElem, cyclo_rational_value, cyclo_reduce
from .exact import csc_coefficient
from .numeric import DEFAULT_MAX_TERMS, harm_elem_numeric, mzv_numeric
from .series import PowerSeries
from .words import HarmElem, Word, s_map, s_map_via_s1

__all__ = [
    "Report",
    "WordSampler",
    "verify_genfunc_thmA",
    "verify_s_consistency",
    "verify_stuffle_laws",
    "verify_thm6",
    "verify_thm7",
    "verify_z_homomorphism",
]


@dataclass(slots=True)
class Report:
    """Outcome of one verification run."""

    check: str
    params: dict
    cases: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, **detail) -> None:
        self.cases += 1
        if not passed:
            self.failures.append(detail)

    def to_json_obj(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "cases": self.cases,
            "failures": self.failures,
        }


class WordSampler:
    """Deterministic word source backed by the documented 64-bit LCG."""

    _MULT = 6364136223846793005
    _INC = 1442695040888963407
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self._state = seed & self._MASK

    def _next_u32(self) -> int:
        self._state = (self._MULT * self._state + self._INC) & self._MASK
        return self._state >> 32

    def uniform(self, lo: int, hi: int) -> int:
        """Integer uniform on [lo, hi] (inclusive)."""
        return lo + self._next_u32() % (hi - lo + 1)

    def word(
        self,
        max_depth: int,
        max_part: int,
        max_weight: int | None = None,
        admissible: bool = False,
    ) -> Word:
        """Depth uniform on [1, max_depth], parts uniform on [1, max_part];
        weight caps and admissibility enforced by rejection."""
        while True:
            d = self.uniform(1, max_depth)
            w = tuple(self.uniform(1, max_part) for _ in range(d))
            if max_weight is not None and sum(w) > max_weight:
                continue
            if admissible and w[0] < 2:
                continue
            return w


def verify_stuffle_laws(seed: int, trials: int, max_weight: int) -> Report:
    """Commutativity and associativity of the harmonic product on random
    word triples (depth <= 3, parts <= 4, weight <= max_weight)."""
    if max_weight < 1:
        raise ValueError("max_weight must be at least 1")
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    report = Report(
        "stuffle", {"seed": seed, "trials": trials, "max_weight": max_weight}
    )
    sampler = WordSampler(seed)
    for trial in range(trials):
        u, v, w = (
            HarmElem.from_word(sampler.word(3, 4, max_weight)) for _ in range(3)
        )
        uv = u * v
        comm = uv == v * u
        assoc = uv * w == u * (v * w)
        report.record(
            comm and assoc,
            trial=trial,
            words=[str(u), str(v), str(w)],
            commutative=comm,
            associative=assoc,
        )
    return report


def _word_power(base: Word, reps: int) -> Word:
    return tuple(base) * reps


def verify_thm6(a: int, b: int, n: int) -> Report:
    """The two product identities expanding the merge map of alternating
    words: with u = (a, b),

      S(u^n)        = sum_i u^i * S((a+b)^(n-i))
      S(b u^n)      = sum_i (b, u^i) * S((a+b)^(n-i)).
    """
    report = Report("thm6", {"a": a, "b": b, "n": n})
    merged = [s_map(_word_power((a + b,), j)) for j in range(n + 1)]

    lhs = s_map(_word_power((a, b), n))
    rhs = HarmElem.zero()
    for i in range(n + 1):
        rhs = rhs + HarmElem.from_word(_word_power((a, b), i)) * merged[n - i]
    report.record(lhs == rhs, identity="alternating", lhs=str(lhs), rhs=str(rhs))

    lhs = s_map((b,) + _word_power((a, b), n))
    rhs = HarmElem.zero()
    for i in range(n + 1):
        rhs = rhs + HarmElem.from_word((b,) + _word_power((a, b), i)) * merged[n - i]
    report.record(lhs == rhs, identity="tailed", lhs=str(lhs), rhs=str(rhs))
    return report


def _insertion_word(i: int, j: int, a: int, b: int, c: int) -> Word:
    # (a,b)^i c (a,b)^j
    return (a, b) * i + (c,) + (a, b) * j


def _insertion_word_tailed(i: int, j: int, a: int, b: int, c: int) -> Word:
    # (b,a)^i c (b,a)^j b
    return (b, a) * i + (c,) + (b, a) * j + (b,)


def verify_thm7(a: int, b: int, c: int, n: int) -> Report:
    """The pair of identities behind the insertion-set evaluation.

    With A(i,j) = (a,b)^i c (a,b)^j and B(i,j) = (b,a)^i c (b,a)^j b:

      sum_k S(A(k, n-k)) + sum_k S(a B(k, n-1-k))
        = 2 sum_k z_{(a+b)k+c} * S((a,b)^(n-k))
          - sum_k S((a+b)^(n-k)) * { sum_i A(i, k-i) + sum_i a B(i, k-1-i) }

    and the same shape with every word prefixed (resp. suffixed) by b.
    Summations with an empty range are zero.
    """
    report = Report("thm7", {"a": a, "b": b, "c": c, "n": n})
    merged = [s_map(_word_power((a + b,), j)) for j in range(n + 1)]

    def insertion_block(k: int, lead_b: bool) -> HarmElem:
        out = HarmElem.zero()
        if lead_b:
            for i in range(k + 1):
                out = out + HarmElem.from_word(
                    (b,) + _insertion_word(i, k - i, a, b, c)
                )
            for i in range(k + 1):
                out = out + HarmElem.from_word(
                    _insertion_word_tailed(i, k - i, a, b, c)
                )
        else:
            for i in range(k + 1):
                out = out + HarmElem.from_word(_insertion_word(i, k - i, a, b, c))
            for i in range(k):
                out = out + HarmElem.from_word(
                    (a,) + _insertion_word_tailed(i, k - 1 - i, a, b, c)
                )
        return out

    # first identity
    lhs = HarmElem.zero()
    for k in range(n + 1):
        lhs = lhs + s_map(_insertion_word(k, n - k, a, b, c))
    for k in range(n):
        lhs = lhs + s_map((a,) + _insertion_word_tailed(k, n - 1 - k, a, b, c))
    rhs = HarmElem.zero()
    for k in range(n + 1):
        rhs = rhs + 2 * (
            HarmElem.from_word(((a + b) * k + c,)) * s_map(_word_power((a, b), n - k))
        )
        rhs = rhs - merged[n - k] * insertion_block(k, lead_b=False)
    report.record(lhs == rhs, identity="plain", lhs=str(lhs), rhs=str(rhs))

    # second identity
    lhs = HarmElem.zero()
    for k in range(n + 1):
        lhs = lhs + s_map((b,) + _insertion_word(k, n - k, a, b, c))
        lhs = lhs + s_map(_insertion_word_tailed(k, n - k, a, b, c))
    rhs = HarmElem.zero()
    for k in range(n + 1):
        rhs = rhs + 2 * (
            HarmElem.from_word(((a + b) * k + c,))
            * s_map((b,) + _word_power((a, b), n - k))
        )
        rhs = rhs - merged[n - k] * insertion_block(k, lead_b=True)
    report.record(lhs == rhs, identity="wrapped", lhs=str(lhs), rhs=str(rhs))
    return report


def verify_genfunc_thmA(m: int, max_n: int) -> Report:
    """Generating-function route to the repeated-index star coefficients.

    Builds the m-fold product of the series sum_j csc_coefficient(j)
    t^(k j mod m) x^(2j) (k = 0..m-1) over Q[t]/(t^m - 1), truncated past
    degree 2 m max_n.  The product telescopes against the sine product, so
    every coefficient whose degree is not a multiple of 2m must vanish after
    cyclotomic reduction, and the coefficient of x^(2mn) must reduce to the
    rational produced by the direct composition sum.
    """
    if m < 1 or max_n < 1:
        raise ValueError("m and max_n must be positive")
    report = Report("genfunc", {"m": m, "max_n": max_n})
    order = 2 * m * max_n + 1
    factors = []
    for k in range(m):
        coeffs = [CycloElem.zero(m) for _ in range(order)]
        for j in range(0, (order - 1) // 2 + 1):
            coeffs[2 * j] = CycloElem.root_power(m, k * j, csc_coefficient(j))
        factors.append(PowerSeries(tuple(coeffs)))
    product = factors[0]
    for factor in factors[1:]:
        product = product * factor
    for d in range(1, order):
        coeff = product.coeffs[d]
        if d % (2 * m):
            reduced = cyclo_reduce(coeff)
            report.record(
                not reduced,
                degree=d,
                expected="0",
                got=str([str(f) for f in reduced]),
            )
        else:
            n = d // (2 * m)
            got = cyclo_rational_value(coeff)
            expected = thmA_coefficient(m, n)
            report.record(
                got == expected, degree=d, expected=str(expected), got=str(got)
            )
    return report


def verify_s_consistency(max_depth: int, max_part: int) -> Report:
    """Agreement of the suffix-recursion and two-letter-substitution routes
    to the merge expansion: exhaustive through depth 6, seeded samples
    (120 per depth) beyond."""
    report = Report("sconsist", {"max_depth": max_depth, "max_part": max_part})

    def check(word: Word) -> None:
        direct = s_map(word)
        via_xy = s_map_via_s1(word)
        report.record(
            direct == via_xy, word=list(word), lhs=str(direct), rhs=str(via_xy)
        )

    def exhaust(prefix: Word, remaining: int) -> None:
        if prefix:
            check(prefix)
        if remaining:
            for part in range(1, max_part + 1):
                exhaust(prefix + (part,), remaining - 1)

    exhaust((), min(max_depth, 6))
    if max_depth > 6:
        sampler = WordSampler(1729)
        for d in range(7, max_depth + 1):
            for _ in range(120):
                check(tuple(sampler.uniform(1, max_part) for _ in range(d)))
    return report


def verify_z_homomorphism(
    seed: int,
    trials: int,
    tol: float = 0.25,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> Report:
    """Numeric check that evaluation turns the harmonic product into the
    product of values: |Z(w1 * w2) - Z(w1) Z(w2)| must stay within the
    combined certified bounds.

    Pairs are admissible random words of depth <= 3, parts <= 4 and
    weight <= 6.  The default tolerance is deliberately coarse: stuffle
    products of weight-6 words contain indices whose series converge like
    powers of log, and a tight budget would push their cutoffs past the term
    cap.  The identity check is against the certified bounds, not `tol`.
    """
    report = Report("zhom", {"seed": seed, "trials": trials, "tol": tol})
    sampler = WordSampler(seed)
    for trial in range(trials):
        w1 = sampler.word(3, 4, max_weight=6, admissible=True)
        w2 = sampler.word(3, 4, max_weight=6, admissible=True)
        product = HarmElem.from_word(w1) * HarmElem.from_word(w2)
        lhs = harm_elem_numeric(product, tol, max_terms)
        r1 = mzv_numeric(w1, tol, max_terms)
        r2 = mzv_numeric(w2, tol, max_terms)
        diff = abs(lhs.value - r1.value * r2.value)
        combined = (
            lhs.error_bound
            + abs(r1.value) * r2.error_bound
            + abs(r2.value) * r1.error_bound
            + r1.error_bound * r2.error_bound
        )
        report.record(
            diff <= combined,
            trial=trial,
            w1=list(w1),
            w2=list(w2),
            lhs=lhs.value,
            rhs=r1.value * r2.value,
            difference=diff,
            combined_bound=combined,
        )
    return report
