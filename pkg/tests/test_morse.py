import random
from fractions import Fraction as F

import pytest

from outerlab.errors import InvalidInput
from outerlab.minima.morse import distance_to_axis, is_quasi_geodesic, morse_test, perturb, random_chain


def test_axis_is_certified(golden_line):
    line = golden_line
    assert is_quasi_geodesic(line.grid, line.points, max(1.0, line.kappa_emp))
    assert all(distance_to_axis(line, g) == 0 for g in line.points)


def test_thin_point_is_far_or_rejected(golden_line):
    # shrink the shortest edge of an interior point far below the thick part
    line = golden_line
    k = len(line.grid) // 2
    g = line.points[k]
    i = min(range(g.num_edges), key=lambda e: g.lengths[e])
    lengths = list(g.lengths)
    lengths[i] = line.eps / 100
    total = sum(lengths)
    thin = g.with_lengths([q / total for q in lengths])
    pts = list(line.points[k - 1:k + 2])
    pts[1] = thin
    far = distance_to_axis(line, thin)
    assert far > 1 or not is_quasi_geodesic(line.grid[k - 1:k + 2], pts, 2)


def test_chain_shape(golden_line):
    rng = random.Random(0)
    for _ in range(20):
        c = random_chain(golden_line, rng)
        assert c.points[0] == golden_line.points[c.start]
        assert c.points[-1] == golden_line.points[c.stop]
        assert len(c.points) == len(c.params) == c.stop - c.start + 1


def test_perturb_stays_in_outer_space(golden_line):
    rng = random.Random(1)
    for g in golden_line.points:
        h, kind = perturb(g, rng)
        assert kind in ("lengths", "remark", "blowup")
        h.check()


def test_zero_chains_is_inconclusive(golden_line):
    rep = morse_test(golden_line, 1, 5, max_attempts=0)
    assert rep.inconclusive and rep.certified == 0 and rep.M_emp is None


def test_rejects_small_K(golden_line):
    with pytest.raises(InvalidInput):
        morse_test(golden_line, 0.5, 5)


def test_small_budget_report(golden_line):
    rep = morse_test(golden_line, 2, 5, seed=3)
    assert rep.certified == 5 and rep.M_emp is not None
    assert 0 < rep.rate <= 1
