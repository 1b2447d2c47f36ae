"""Acceptance suite: every exit criterion at its stated tolerance and
runtime budget, one printed pass/fail line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
"""

import math
import time
from fractions import Fraction

from zetastar.closed_forms import (
    mzv_31_repeated,
    mzv_repeated_2m,
    newton_e_oracle,
    newton_h_oracle,
    thm3_sum,
    thmA_coefficient,
    thmB_coefficient,
    thmB_via_relation,
    thmC_coefficient,
    thmC_via_relation,
)
from zetastar.exact import PiMultiple
from zetastar.numeric import mzsv_numeric, mzv_numeric
from zetastar.verify import (
    verify_genfunc_thmA,
    verify_s_consistency,
    verify_stuffle_laws,
    verify_thm6,
    verify_thm7,
    verify_z_homomorphism,
)
from zetastar.words import insertions

F = Fraction
PI = math.pi


def _criterion(number, label, budget_seconds, body):
    start = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"criterion {number:2d} FAIL  {label}")
        raise
    elapsed = time.perf_counter() - start
    print(f"criterion {number:2d} PASS  {elapsed * 1000:9.2f} ms  {label}")
    assert elapsed < budget_seconds, f"criterion {number} exceeded {budget_seconds}s"


def test_criterion_01_closed_constants():
    # warm the arithmetic caches so the timing covers only the checks
    mzv_31_repeated(2), thm3_sum(1)

    def body():
        assert mzv_31_repeated(1) == PiMultiple(F(1, 360), 4)
        assert mzv_31_repeated(2) == PiMultiple(F(1, 1814400), 8)
        assert thm3_sum(1) == PiMultiple(F(1, 5040), 6)

    _criterion(1, "closed constants exact", 0.001, body)


def test_criterion_02_thmA_vs_oracle():
    def body():
        for m in range(1, 4):
            for n in range(5):
                assert thmA_coefficient(m, n) == newton_h_oracle(m, n), (m, n)
        assert thmA_coefficient(1, 1) == F(1, 6)
        assert thmA_coefficient(1, 2) == F(7, 360)
        assert thmA_coefficient(2, 1) == F(1, 90)
        for m in range(1, 7):
            for n in range(5):
                value = thmA_coefficient(m, n)  # must not raise NotRational
                assert value > 0, (m, n)

    _criterion(2, "repeated-2m star family vs symmetric-function oracle", 1.0, body)


def test_criterion_03_thm1_vs_oracle():
    def body():
        for m in range(1, 4):
            for n in range(5):
                assert mzv_repeated_2m(m, n).coeff == newton_e_oracle(m, n), (m, n)
        assert mzv_repeated_2m(1, 1) == PiMultiple(F(1, 6), 2)

    _criterion(3, "repeated-2m plain family vs elementary oracle", 1.0, body)


def test_criterion_04_thmB_two_routes():
    def body():
        for n in range(7):
            assert thmB_coefficient(n) == thmB_via_relation(n), n
        assert thmB_coefficient(1) == F(1, 72)

    _criterion(4, "alternating-31 star family, two routes", 1.0, body)


def test_criterion_05_thmC_two_routes():
    def body():
        for n in range(1, 5):
            assert thmC_coefficient(n) == thmC_via_relation(n), n
        assert thmC_coefficient(1) == F(71, 15120)

    _criterion(5, "insertion-sum star family, two routes", 1.0, body)


def test_criterion_06_thm6_suite():
    def body():
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                for n in range(5):
                    report = verify_thm6(a, b, n)
                    assert report.ok, (a, b, n, report.failures[:1])

    _criterion(6, "merge-map product identities, full grid", 10.0, body)


def test_criterion_07_thm7_suite():
    def body():
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                for c in (1, 2, 3):
                    for n in range(3):
                        report = verify_thm7(a, b, c, n)
                        assert report.ok, (a, b, c, n, report.failures[:1])
        for n in range(4):
            report = verify_thm7(3, 1, 2, n)
            assert report.ok, (n, report.failures[:1])

    _criterion(7, "insertion identities, full grid", 60.0, body)


def test_criterion_08_generating_function():
    def body():
        for m, max_n in ((1, 4), (2, 3), (3, 2)):
            report = verify_genfunc_thmA(m, max_n)
            assert report.ok, (m, max_n, report.failures[:1])

    _criterion(8, "generating-function route to the repeated-2m family", 10.0, body)


def test_criterion_09_s_map_oracle():
    def body():
        report = verify_s_consistency(8, 3)
        assert report.ok, report.failures[:1]
        sampled = report.cases - sum(3**d for d in range(1, 7))
        assert sampled >= 200

    _criterion(9, "merge-map route agreement, depth <= 8", 10.0, body)


def test_criterion_10_stuffle_laws():
    def body():
        report = verify_stuffle_laws(seed=1, trials=100, max_weight=8)
        assert report.ok, report.failures[:1]
        assert report.cases == 100

    _criterion(10, "stuffle commutativity and associativity", 10.0, body)


def test_criterion_11_numeric_cross_checks():
    def body():
        star22 = mzsv_numeric((2, 2), 1e-6)
        truth22 = 7 * PI**4 / 360
        assert abs(star22.value - truth22) <= 1e-6
        assert abs(star22.value - truth22) <= star22.error_bound + 1e-12

        plain31 = mzv_numeric((3, 1), 1e-6)
        truth31 = PI**4 / 360
        assert abs(plain31.value - truth31) <= 1e-6
        assert abs(plain31.value - truth31) <= plain31.error_bound + 1e-12

        per_word = 1e-5 / 3
        values = [mzsv_numeric(word, per_word) for word in insertions(1)]
        total = sum(nv.value for nv in values)
        truth_sum = 71 * PI**6 / 15120
        assert abs(total - truth_sum) <= 1e-5
        assert abs(total - truth_sum) <= sum(nv.error_bound for nv in values) + 1e-12

    _criterion(11, "numeric evaluation against closed forms", 60.0, body)


def test_criterion_12_z_homomorphism():
    def body():
        report = verify_z_homomorphism(seed=1, trials=50, tol=0.25)
        assert report.ok, report.failures[:1]
        assert report.cases == 50

    _criterion(12, "numeric product homomorphism, 50 seeded pairs", 120.0, body)
