import random
from fractions import Fraction

import pytest

from polyguard.funnel import (APEX, Funnel, NotAFunnelError, cf_color_funnel,
                              funnel_from_polygon, guard_funnel_optimal,
                              guard_funnel_simple, ruler_color, upseg)
from polyguard.geom import Polygon, Segment, pt, segment_in_polygon
from polyguard.random_scenes import random_convex_polygon, random_funnel
from polyguard import shapes


def refs_equal_up_to_mirror(F, got, expected):
    got = set(got)
    exp = set(expected)
    mirrored = {F.mirror_ref(r) for r in exp}
    return got == exp or got == mirrored


def test_funnel_from_polygon_figure():
    F11 = shapes.funnel_11()
    P = F11.to_polygon()
    F = funnel_from_polygon(P)
    assert F.k == 6 and F.m == 6
    assert F.apex == pt("1.9", "2.8")


def test_funnel_from_triangle():
    F = funnel_from_polygon(Polygon([(0, 0), (4, 0), (2, 3)]))
    assert F.k == 2 and F.m == 2


def test_convex_pentagon_is_not_a_funnel():
    rng = random.Random(71)
    P = random_convex_polygon(rng, 5)
    with pytest.raises(NotAFunnelError) as exc:
        funnel_from_polygon(P)
    assert "convex" in str(exc.value)


def test_upseg_structure_on_tangents_funnel():
    F = shapes.tangents_funnel()
    s = upseg(F, "L", 1)       # tangent at l2 through l3
    assert s.left.side == "L" and s.left.index == 2 and s.left.t == 0
    assert s.right.side == "R" and s.right.index == 4 and 0 < s.right.t < 1

    s2 = upseg(F, "R", 2)      # tangent at r3 through r4
    assert s2.right.side == "R" and s2.right.index == 3 and s2.right.t == 0
    assert s2.left.side == "L" and s2.left.index == 5 and 0 < s2.left.t < 1


def test_upseg_last_tangent_contains_apex():
    F = shapes.funnel_11()
    s = upseg(F, "L", F.k - 2)
    assert F.apex in (s.left.point, s.right.point)


def test_upseg_random_funnels_inside():
    rng = random.Random(73)
    for _ in range(15):
        F = random_funnel(rng, rng.randint(4, 10))
        P = F.to_polygon()
        for side, chain in (("L", F.left), ("R", F.right)):
            for i in range(len(chain) - 1):
                s = upseg(F, side, i)
                if s.left.point != s.right.point:
                    assert segment_in_polygon(
                        Segment(s.left.point, s.right.point), P), (side, i)


def test_simple_guarding_on_symmetric_funnel():
    F = shapes.symmetric_funnel_17()
    guards = guard_funnel_simple(F)
    assert len(guards) == 4
    expected = [("L", 1), ("R", 4), ("L", 6), APEX]
    assert refs_equal_up_to_mirror(F, guards, expected)


def test_optimal_guarding_on_symmetric_funnel():
    F = shapes.symmetric_funnel_17()
    guards = guard_funnel_optimal(F)
    assert len(guards) == 3
    expected = [("L", 3), ("R", 3), ("L", 7)]
    assert refs_equal_up_to_mirror(F, guards, expected)


def test_triangle_funnel_single_guard():
    F = funnel_from_polygon(Polygon([(0, 0), (4, 0), (2, 3)]))
    assert len(guard_funnel_simple(F)) == 1
    assert len(guard_funnel_optimal(F)) == 1


def test_simple_vs_optimal_gap_at_most_one():
    rng = random.Random(79)
    for _ in range(25):
        F = random_funnel(rng, rng.randint(4, 12))
        simple = guard_funnel_simple(F)
        optimal = guard_funnel_optimal(F)
        assert 0 <= len(simple) - len(optimal) <= 1, (F.left, F.right)


def test_ruler_sequence_values():
    assert ruler_color(8) == [1, 2, 1, 3, 1, 2, 1, 4]
    assert ruler_color(1) == [1]
    seq16 = ruler_color(16)
    assert seq16[-1] == 5
    assert seq16 == [1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 5]


def test_ruler_window_unique_maximum():
    seq = ruler_color(1024)
    # quadratic exhaustive check of unique window maxima
    for i in range(len(seq)):
        best, count = 0, 0
        for j in range(i, len(seq)):
            if seq[j] > best:
                best, count = seq[j], 1
            elif seq[j] == best:
                count += 1
            if count != 1:
                raise AssertionError((i, j))


def test_cf_color_funnel_symmetric():
    F = shapes.symmetric_funnel_17()
    colored = cf_color_funnel(F)
    assert [c for _, c in colored] == [1, 2, 1, 3]


def test_cf_color_triangle():
    F = funnel_from_polygon(Polygon([(0, 0), (4, 0), (2, 3)]))
    assert [c for _, c in cf_color_funnel(F)] == [1]
