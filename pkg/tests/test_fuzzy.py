"""Fuzzy grading, the Mamdani rule grids and the objective comparison."""
import random

import pytest

from stockspring import DegenerateError
from stockspring.fuzzy import (COMPARISON_GRADES, FINAL_RULES, SPEC_RULES,
                               aggregate, combine, fuzzy_mark,
                               objective_mark, objective_memberships,
                               quality_memberships, worst_mark)


def one_hot(index):
    v = [0.0] * 5
    v[index] = 1.0
    return tuple(v)


class TestWorstMark:
    def test_upper_margin(self):
        assert worst_mark(0.0, 10.0, 8.0) == pytest.approx(20.0, rel=1e-12)

    def test_lower_margin_wins_when_smaller(self):
        assert worst_mark(5.0, 100.0, 6.0) == pytest.approx(20.0, rel=1e-12)

    def test_zero_upper_bound(self):
        assert worst_mark(0.0, 0.0, 3.0) == -3.0

    def test_unconstrained_lower_side(self):
        # lo <= 0 leaves only the upper margin in play.
        assert worst_mark(0.0, 10.0, 1.0) == pytest.approx(90.0, rel=1e-12)

    def test_violation_is_negative(self):
        assert worst_mark(0.0, 5.5, 5.78) < 0.0


class TestQualityMemberships:
    def test_violation_saturates_very_bad(self):
        assert quality_memberships(-3.0) == (1.0, 0.0, 0.0, 0.0, 0.0)

    def test_wide_margin_saturates_very_good(self):
        assert quality_memberships(45.0) == (0.0, 0.0, 0.0, 0.0, 1.0)
        assert quality_memberships(300.0) == (0.0, 0.0, 0.0, 0.0, 1.0)

    def test_mid_margin_splits_bad_medium(self):
        vb, b, m, g, vg = quality_memberships(10.0)
        assert (vb, g, vg) == (0.0, 0.0, 0.0)
        assert b == pytest.approx(0.5, rel=1e-12)
        assert m == pytest.approx(0.5, rel=1e-12)

    def test_small_margin_splits_very_bad_bad(self):
        vb, b, m, g, vg = quality_memberships(2.5)
        assert vb == pytest.approx(0.5, rel=1e-12)
        assert b == pytest.approx(0.5, rel=1e-12)

    def test_fuzzy_mark_composes(self):
        assert fuzzy_mark(0.0, 5.5, 5.78) == (1.0, 0.0, 0.0, 0.0, 0.0)


class TestAggregate:
    def test_single_criterion_is_identity(self):
        v = (0.1, 0.2, 0.3, 0.4, 0.0)
        assert aggregate([v], [1.0]) == v

    def test_equal_mix_of_extremes(self):
        out = aggregate([one_hot(4), one_hot(0)], [1.0, 1.0])
        assert out == (0.5, 0.0, 0.0, 0.0, 0.5)

    def test_weighted_mean(self):
        out = aggregate([one_hot(0), one_hot(2), one_hot(4)], [2.0, 1.0, 1.0])
        assert out == pytest.approx((0.5, 0.0, 0.25, 0.0, 0.25), rel=1e-12)

    def test_no_weight_raises(self):
        with pytest.raises(ValueError):
            aggregate([one_hot(0)], [0.0])


class TestCombine:
    def test_requirement_comparison_worked_example(self):
        # Tested spring (0, 0, 0.70, 0.30, 0) against incumbent
        # (0, 0.50, 0.50, 0, 0) through the requirement grid.
        out = combine((0.0, 0.0, 0.70, 0.30, 0.0),
                      (0.0, 0.50, 0.50, 0.0, 0.0), SPEC_RULES)
        assert out == pytest.approx((0.3, 0.5, 0.5, 0.0, 0.0), rel=1e-12)

    def test_identical_one_hot_is_equal(self):
        for i in range(5):
            out = combine(one_hot(i), one_hot(i), SPEC_RULES)
            assert out == (0.0, 0.0, 1.0, 0.0, 0.0)

    def test_very_bad_vs_very_good_is_very_superior(self):
        assert combine(one_hot(0), one_hot(4), SPEC_RULES) == (0, 0, 0, 0, 1)

    @pytest.mark.parametrize("table", [SPEC_RULES, FINAL_RULES],
                             ids=["requirements", "final"])
    def test_exhaustive_one_hot_cells(self, table):
        # All 25 cells: one-hot inputs must reproduce the cell label.
        for i in range(5):
            for j in range(5):
                out = combine(one_hot(i), one_hot(j), table)
                assert out == one_hot(COMPARISON_GRADES.index(table[i][j])), \
                    f"cell ({i},{j})"

    def test_min_rule_bounds_output(self):
        rng = random.Random(5)
        for _ in range(500):
            row = tuple(rng.random() for _ in range(5))
            col = tuple(rng.random() for _ in range(5))
            out = combine(row, col, SPEC_RULES)
            assert max(out) <= max(row) + 1e-12
            assert max(out) <= max(col) + 1e-12


class TestObjectiveMark:
    def test_equal_objectives(self):
        assert objective_mark(10.0, 10.0, "minimize") == 0.0

    def test_tested_better_when_minimizing(self):
        assert objective_mark(30.0, 10.0, "minimize") == pytest.approx(100.0)

    def test_tested_worse_when_minimizing(self):
        assert objective_mark(10.0, 30.0, "minimize") == pytest.approx(-100.0)

    def test_sign_flips_for_maximize(self):
        # A larger tested value must read as an improvement.
        assert objective_mark(10.0, 30.0, "maximize") == pytest.approx(100.0)

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateError):
            objective_mark(0.0, 0.0, "minimize")


class TestObjectiveMemberships:
    def test_equal_is_equal(self):
        assert objective_memberships(0.0) == (0.0, 0.0, 1.0, 0.0, 0.0)

    def test_minus_75_splits_superior(self):
        vi, i, e, s, vs = objective_memberships(-75.0)
        assert (vi, i, e) == (0.0, 0.0, 0.0)
        assert s == pytest.approx(0.5, rel=1e-12)
        assert vs == pytest.approx(0.5, rel=1e-12)

    def test_saturation(self):
        assert objective_memberships(150.0) == (1.0, 0.0, 0.0, 0.0, 0.0)
        assert objective_memberships(-150.0) == (0.0, 0.0, 0.0, 0.0, 1.0)


class TestFinalComparison:
    def test_worked_example_with_grid_correction(self):
        # Objective vector (0, 0, 0, 0.57, 0.43) against requirement
        # vector (0.3, 0.5, 0.5, 0, 0).  The published worked example
        # reports I = 0.30, E = 0.50, S = 0.43, but its S is inconsistent
        # with its own min/max arithmetic, which yields S = 0.50 through
        # the (S,E) cell regardless of the corrected (VS,E) cell; the
        # printed (VS,E) = VI also breaks the grid's monotone rows and is
        # treated as a typo (corrected to S).  The keep/replace decision
        # is identical either way.
        out = combine((0.0, 0.0, 0.0, 0.57, 0.43),
                      (0.3, 0.5, 0.5, 0.0, 0.0), FINAL_RULES)
        vi, i, e, s, vs = out
        assert vi == 0.0
        assert i == pytest.approx(0.30, rel=1e-12)
        assert e == pytest.approx(0.50, rel=1e-12)
        assert s == pytest.approx(0.50, rel=1e-12)
        assert vs == 0.0
        inferior = max(vi, i)
        superior = max(s, vs)
        assert superior > inferior  # incumbent kept
