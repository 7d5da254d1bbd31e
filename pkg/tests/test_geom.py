import random
from fractions import Fraction

import pytest

from polyguard.geom import (BOUNDARY, EXTERIOR, INTERIOR, Point, Polygon,
                            Segment, orientation, point_in_polygon, pt,
                            ring_signed_area2, segment_in_polygon,
                            triangulate, validate)
from polyguard.random_scenes import random_convex_polygon, random_simple_polygon
from polyguard import shapes

from oracles import winding_location


def test_orientation_basics():
    assert orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0
    assert orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1


def test_orientation_antisymmetry_and_translation_invariance():
    rng = random.Random(7)
    for _ in range(300):
        p, q, r = (pt(rng.randint(-20, 20), rng.randint(-20, 20))
                   for _ in range(3))
        d = pt(rng.randint(-9, 9), rng.randint(-9, 9))
        assert orientation(p, q, r) == -orientation(p, r, q)
        assert orientation(p, q, r) == orientation(p + d, q + d, r + d)


def test_rational_parsing_is_exact():
    assert pt("0.1", "-2.25") == Point(Fraction(1, 10), Fraction(-9, 4))


def test_validate_simple_figures():
    assert validate(shapes.simple_10gon()) is None
    assert validate(shapes.notch_polygon()) is None  # collinear top accepted
    assert validate(shapes.hexagon_with_hole()) is None


def test_validate_bowtie_self_intersection():
    bad = Polygon([(0, 0), (2, 2), (2, 0), (0, 2)])
    diag = validate(bad)
    assert diag is not None
    assert diag.code == "self-intersection"


def test_validate_hole_outside():
    bad = Polygon([(0, 0), (4, 0), (4, 4), (0, 4)],
                  holes=[[(1, 1), (9, 1), (2, 2)]])
    diag = validate(bad)
    assert diag is not None
    assert diag.code in ("hole-outside", "self-intersection")


def test_point_in_polygon_trivia():
    tri = Polygon([(0, 0), (4, 0), (0, 4)])
    assert point_in_polygon(pt(1, 1), tri) == INTERIOR
    assert point_in_polygon(pt(0, 0), tri) == BOUNDARY
    assert point_in_polygon(pt(2, 2), tri) == BOUNDARY
    assert point_in_polygon(pt(10**6, 10**6), Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])) == EXTERIOR


def test_point_in_polygon_matches_winding_oracle():
    rng = random.Random(11)
    polys = [shapes.simple_10gon(), shapes.hexagon_with_hole(),
             random_simple_polygon(rng, 9)]
    for P in polys:
        xs = [p.x for p in P.outer]
        ys = [p.y for p in P.outer]
        lo_x, hi_x = min(xs) - 1, max(xs) + 1
        lo_y, hi_y = min(ys) - 1, max(ys) + 1
        for _ in range(10000):
            q = Point(lo_x + Fraction(rng.randint(0, 4000), 4000) * (hi_x - lo_x),
                      lo_y + Fraction(rng.randint(0, 4000), 4000) * (hi_y - lo_y))
            assert point_in_polygon(q, P) == winding_location(q, P)


def test_segment_in_polygon_grazing_conventions():
    P = shapes.notch_polygon()
    # passes just above the notch tip: inside
    assert segment_in_polygon(Segment(pt("0", "1.01"), pt("2", "1.01")), P)
    # passes exactly through the notch tip vertex: grazing is allowed
    assert segment_in_polygon(Segment(pt("0", "1"), pt("2", "1")), P)
    # dips below the notch tip: crosses the exterior wedge
    assert not segment_in_polygon(Segment(pt("0", "0.5"), pt("2", "1.01")), P)


def test_segment_in_polygon_symmetry_and_boundary_edges():
    P = Polygon([(0, 0), (5, 0), (5, 3), (0, 3)])
    for (a, b) in P.edges():
        assert segment_in_polygon(Segment(a, b), P)
    rng = random.Random(3)
    Q = random_simple_polygon(rng, 8)
    verts = Q.outer
    for _ in range(60):
        i, j = rng.sample(range(len(verts)), 2)
        s = Segment(verts[i], verts[j])
        assert segment_in_polygon(s, Q) == segment_in_polygon(s.reversed(), Q)


def test_convex_polygon_vertex_pairs_always_visible():
    rng = random.Random(5)
    for n in (4, 6, 9, 12):
        P = random_convex_polygon(rng, n)
        verts = P.outer
        for i in range(n):
            for j in range(i + 1, n):
                assert segment_in_polygon(Segment(verts[i], verts[j]), P)


def test_triangulate_partition_area():
    rng = random.Random(13)
    polys = [shapes.simple_10gon(), shapes.notch_polygon(),
             shapes.camera_room()]
    polys += [random_simple_polygon(rng, n) for n in (6, 9, 12)]
    for P in polys:
        tris = triangulate(P)
        total = Fraction(0)
        for (i, j, k) in tris:
            a, b, c = P.outer[i], P.outer[j], P.outer[k]
            area2 = ring_signed_area2([a, b, c])
            assert area2 > 0
            total += area2
        assert total == abs(ring_signed_area2(P.outer))


def test_require_valid_raises():
    bad = Polygon([(0, 0), (2, 2), (2, 0), (0, 2)])
    with pytest.raises(Exception):
        bad.require_valid()
