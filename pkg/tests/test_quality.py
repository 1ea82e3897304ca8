import math
from fractions import Fraction as F

import pytest

from outerlab.minima import line_of_minima
from outerlab.minima.quality import axis_quality


def test_two_point_grid_close_points(golden_pair):
    # the two points are nearer than half the grid gap, so no pair is ever far enough apart to test
    line = line_of_minima(*golden_pair, F(1, 20), [0, F(1, 2)])
    assert line.distance(0, 1) < 0.25
    q = axis_quality(line, 30)
    assert q.pairs_checked == 0 and q.violation_count == 0
    assert q.nearest_checked > 0


def test_infinite_kappa_has_no_pair_checks(golden_line):
    q = axis_quality(golden_line, 10, kappa=math.inf)
    assert q.pairs_checked == 0 and q.violation_count == 0


def test_kappa_required_clears_every_item(golden_line):
    q = axis_quality(golden_line, 12, seed=4)
    again = axis_quality(golden_line, 12, seed=4, kappa=q.kappa_required + 1e-9)
    assert again.violation_count == 0
    if q.kappa_required > q.kappa:
        assert q.violation_count > 0


def test_report_serialises(golden_line):
    d = axis_quality(golden_line, 5).to_dict()
    assert set(d) >= {"kappa_emp", "violations", "kappa_required", "clamped"}
