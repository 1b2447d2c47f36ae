import math
from fractions import Fraction

import pytest

from zetastar.closed_forms import thmB_coefficient
from zetastar.exact import PiMultiple
from zetastar.numeric import (
    NumericValue,
    ToleranceUnreachable,
    harm_elem_numeric,
    mzsv_numeric,
    mzv_numeric,
    pi_multiple_numeric,
)
from zetastar.words import HarmElem, insertions, s_map

PI = math.pi


class TestMzvNumeric:
    def test_basel_tight_tolerance(self):
        nv = mzv_numeric((2,), 1e-10)
        assert abs(nv.value - PI**2 / 6) <= 1e-10
        assert abs(nv.value - PI**2 / 6) <= nv.error_bound

    def test_three_one(self):
        nv = mzv_numeric((3, 1), 1e-8)
        assert abs(nv.value - PI**4 / 360) <= 1e-8
        assert abs(nv.value - PI**4 / 360) <= nv.error_bound

    def test_rejects_non_admissible(self):
        with pytest.raises(ValueError):
            mzv_numeric((1, 2), 1e-6)
        with pytest.raises(ValueError):
            mzsv_numeric((1, 1), 1e-6)

    def test_unreachable_tolerance(self):
        with pytest.raises(ToleranceUnreachable):
            mzv_numeric((2, 1, 1, 1, 1), 1e-8, max_terms=100_000)

    def test_deterministic(self):
        assert mzv_numeric((3, 2), 1e-9) == mzv_numeric((3, 2), 1e-9)


class TestMzsvNumeric:
    def test_two_two(self):
        nv = mzsv_numeric((2, 2), 1e-6)
        assert abs(nv.value - 7 * PI**4 / 360) <= 1e-6

    def test_depth_one_matches_plain(self):
        star = mzsv_numeric((4,), 1e-10)
        assert abs(star.value - PI**4 / 90) <= 1e-10

    def test_three_one_star(self):
        nv = mzsv_numeric((3, 1), 1e-8)
        truth = float(thmB_coefficient(1)) * PI**4
        assert abs(nv.value - truth) <= nv.error_bound

    def test_star_dominates_strict(self):
        for index in [(2, 2), (3, 1), (2, 1, 1), (4, 2, 1)]:
            star = mzsv_numeric(index, 1e-4)
            plain = mzv_numeric(index, 1e-4)
            assert star.value >= plain.value


class TestErrorBoundsHonest:
    CASES = [
        ((2,), True, PI**2 / 6),
        ((4,), True, PI**4 / 90),
        ((3, 1), True, PI**4 / 360),
        ((2, 2), False, 7 * PI**4 / 360),
        ((4, 4), False, float(Fraction(13, 113400)) * PI**8),
    ]

    @pytest.mark.parametrize("index,strict,truth", CASES)
    def test_bound_dominates_error(self, index, strict, truth):
        for tol in (1e-4, 1e-6):
            nv = mzv_numeric(index, tol) if strict else mzsv_numeric(index, tol)
            assert abs(nv.value - truth) <= nv.error_bound + 1e-12


class TestHarmElemNumeric:
    def test_expansion_of_three_one_star(self):
        nv = harm_elem_numeric(s_map((3, 1)), 1e-8)
        assert abs(nv.value - PI**4 / 72) <= nv.error_bound

    def test_empty(self):
        assert harm_elem_numeric(HarmElem.zero(), 1e-8) == NumericValue(0.0, 0.0)

    def test_unit_word(self):
        nv = harm_elem_numeric(HarmElem.one(), 1e-8)
        assert nv.value == 1.0
        assert nv.error_bound <= 1e-15  # combination rounding slop only

    def test_linearity(self):
        nv = harm_elem_numeric(HarmElem.from_word((2,), 2), 1e-9)
        assert abs(nv.value - PI**2 / 3) <= nv.error_bound

    def test_budget_split_respects_tolerance(self):
        elem = s_map((4, 1, 1))
        nv = harm_elem_numeric(elem, 1e-6)
        truth = sum(
            float(c) * mzv_numeric(w, 1e-10).value for w, c in elem.items()
        )
        assert abs(nv.value - truth) <= 1e-6

    def test_rejects_non_admissible_term(self):
        with pytest.raises(ValueError):
            harm_elem_numeric(HarmElem.from_word((1, 2)), 1e-6)


class TestInsertionSums:
    def test_plain_sum_weight_six(self):
        # sum of zeta over the three 2-insertions into (3,1) is pi^6/5040
        per_word = 3e-6
        total = sum(mzv_numeric(w, per_word).value for w in insertions(1))
        assert abs(total - PI**6 / 5040) <= 1e-6

    def test_star_sum_weight_six(self):
        # the star analogue carries the coefficient 71/15120
        per_word = 1e-5 / 3
        total = sum(mzsv_numeric(w, per_word).value for w in insertions(1))
        assert abs(total - float(Fraction(71, 15120)) * PI**6) <= 1e-6


class TestStarEqualsExpansion:
    INDICES = [
        (2,),
        (3, 1),
        (2, 2),
        (2, 1, 2),
        (3, 1, 1),
        (3, 1, 1, 1),
        (4, 1, 2, 1),
        (2, 2, 1, 1),
    ]

    @pytest.mark.parametrize("index", INDICES)
    def test_star_value_matches_expanded_element(self, index):
        """The star sum equals the evaluated merge expansion (depth <= 4)."""
        tol = 1e-3
        direct = mzsv_numeric(index, tol)
        expanded = harm_elem_numeric(s_map(index), tol)
        diff = abs(direct.value - expanded.value)
        assert diff <= direct.error_bound + expanded.error_bound


class TestPiMultipleNumeric:
    def test_basel(self):
        nv = pi_multiple_numeric(PiMultiple(Fraction(1, 6), 2))
        assert abs(nv.value - 1.6449340668482264) < 1e-15

    def test_unit(self):
        nv = pi_multiple_numeric(PiMultiple(Fraction(1), 0))
        assert nv.value == 1.0

    def test_insertion_sum_weight_six(self):
        # 71 pi^6 / 15120, decimal frozen from an independent high-precision
        # evaluation
        nv = pi_multiple_numeric(PiMultiple(Fraction(71, 15120), 6))
        assert abs(nv.value - 4.514459837555992) < 1e-14
        assert nv.error_bound < 1e-13


class TestJsonShape:
    def test_seventeen_digit_value(self):
        obj = NumericValue(math.pi, 1.5e-9).to_json_obj()
        assert obj["value"] == "3.1415926535897931"
        assert float(obj["error_bound"]) == 1.5e-9
