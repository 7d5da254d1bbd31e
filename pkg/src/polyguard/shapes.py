"""A small gallery of named example scenes used by the tests and demos.

Coordinates are decimal strings so they parse to exact rationals.
"""

from __future__ import annotations

from fractions import Fraction

from .funnel import Funnel
from .geom import Point, Polygon, pt


def simple_10gon() -> Polygon:
    """A plain simple polygon with 10 vertices, one reflex dent."""
    return Polygon([("0", "0"), ("0", "1.5"), ("2", "4"), ("2.6", "3"),
                    ("4", "3"), ("5", "2.5"), ("4", "1.6"), ("3.1", "0.3"),
                    ("1.9", "2.3"), ("1", "0")])


def notch_polygon() -> Polygon:
    """Flat-topped polygon with a v-notch in the floor; the classic scene
    for grazing sight lines (a sight line may touch the notch tip)."""
    return Polygon([("-1", "1.5"), ("1", "1.5"), ("3", "1.5"),
                    ("2", "0"), ("1", "1"), ("0", "0")])


def hexagon_with_hole() -> Polygon:
    return Polygon([("0", "0"), ("2.5", "3"), ("4", "5"), ("7.5", "1.25"),
                    ("7", "0.5"), ("4.5", "1")],
                   holes=[[("2.5", "2"), ("4", "3.5"), ("5", "2.5"),
                           ("3.5", "2")]])


def camera_room() -> Polygon:
    """An 8-vertex room guarded by two corner cameras (vertices 0 and 4)."""
    return Polygon([("0", "0"), ("3", "1.8"), ("4", "0"), ("6.5", "0.5"),
                    ("7", "5"), ("5.5", "4"), ("3", "5"), ("0", "2")])


def nonplanar_hexagon() -> Polygon:
    """Six vertices whose visibility graph is non-planar, K5-free and
    4-colorable with classes {0,4},{1,3},{2},{5}."""
    return Polygon([("-5", "0"), ("-5", "3"), ("2", "2"), ("9", "3"),
                    ("9", "0"), ("2", "1")])


def funnel_11() -> Funnel:
    left = [("0", "0"), ("0.6", "0.1"), ("1.1", "0.5"), ("1.5", "1.2"),
            ("1.8", "2"), ("1.9", "2.8")]
    right = [("4.5", "0"), ("3.6", "0.2"), ("2.8", "0.8"), ("2.3", "1.5"),
             ("2.05", "2.2"), ("1.9", "2.8")]
    return Funnel([pt(*p) for p in left], [pt(*p) for p in right])


def tangents_funnel() -> Funnel:
    """The 15-vertex funnel used to illustrate upper tangents."""
    left = [("1.93", "4.71"), ("5", "5"), ("8.72", "6.76"), ("10.61", "8.21"),
            ("13.01", "10.71"), ("14.37", "12.5"), ("16.25", "16.99")]
    right = [("29", "4.71"), ("28", "5.1"), ("23.5", "7.58"), ("22.1", "8.49"),
             ("19.22", "10.8"), ("17.33", "13.05"), ("16.83", "14.37"),
             ("16.25", "16.99")]
    return Funnel([pt(*p) for p in left], [pt(*p) for p in right])


def symmetric_funnel_17() -> Funnel:
    """Symmetric 17-vertex funnel where the simple guarding picks 4 guards
    but 3 suffice (one left+right pair beats two single steps)."""
    left_xy = [("-23", "0"), ("-18.5", "0.5"), ("-16", "1"), ("-9.4", "2.8"),
               ("-7.3", "4.2"), ("-3.5", "7"), ("-2", "8.5"), ("-0.5", "13"),
               ("0", "17")]
    left = [pt(*p) for p in left_xy]
    right = [Point(-p.x, p.y) for p in left]
    return Funnel(left, right)


def weakvis_25gon() -> tuple[Polygon, int, int]:
    """25-vertex polygon weakly visible from the edge between vertices
    0 and 24 (in input order); returns (polygon, u_index, v_index)."""
    coords = [("0", "0"), ("6", "0.9"), ("7.9", "2"), ("8", "6"), ("7", "8"),
              ("4.3", "9"), ("5", "11.5"), ("7.8", "9.5"), ("11", "8"),
              ("15", "8.5"), ("15", "11.5"), ("14.5", "13"), ("16.5", "12"),
              ("18", "13"), ("19", "10"), ("19.5", "9"), ("23", "8"),
              ("24", "10.5"), ("24.2", "12"), ("26", "11"), ("31", "10"),
              ("28.6", "8"), ("27.5", "6"), ("25", "1.5"), ("31", "0")]
    return Polygon(coords), 0, 24


def decomposition_27gon() -> tuple[Polygon, int]:
    """27-vertex polygon whose weak-visibility decomposition from the edge
    (18,19) has one left child and two right children, two of them forward.
    Returns (polygon, base_edge_start_index)."""
    coords = [("3.6", "4"), ("5.2", "4.2"), ("3.5", "4.7"), ("6.6", "4.4"),
              ("4", "5"), ("6.4", "5"), ("3.5", "6"), ("5.8", "5.8"),
              ("4", "7"), ("5.2", "6.6"), ("4.4", "7.6"), ("8", "4"),
              ("10.6", "6.8"), ("11", "5"), ("12.5", "7.5"), ("16", "7"),
              ("15", "8"), ("11", "9"), ("16.2", "8"), ("16.5", "4"),
              ("15.5", "6.5"), ("10", "4"), ("11", "3.8"), ("12", "4"),
              ("11.5", "3.5"), ("12", "3"), ("10", "3.6")]
    return Polygon(coords), 18


def v2v_hexagon() -> Polygon:
    """Six-vertex polygon needing 2 colors for vertex-to-vertex
    conflict-free guarding."""
    return Polygon([("0", "0"), ("2.5", "-0.2"), ("2", "0"), ("1", "2"),
                    ("1", "1.6"), ("-0.4", "-0.2")])


def v2v_octagon() -> Polygon:
    """Eight-vertex polygon needing 2 colors for vertex-to-vertex
    conflict-free guarding."""
    return Polygon([("0", "0"), ("1", "0.2"), ("2", "0.2"), ("3", "0"),
                    ("3", "2"), ("2", "1.8"), ("1", "1.8"), ("0", "2")])


def bowl_polygon() -> tuple[Polygon, int, int]:
    """The 20-vertex 'bowl': vertices 1 and 0 (p1, p2) see every other
    vertex, and every optimal vertex-to-vertex conflict-free guarding
    places a guard on one of them.  Returns (polygon, p1_index, p2_index)."""
    coords = [("0.06", "-0.3"), ("-0.06", "-0.3"), ("-1.9", "1"),
              ("-1.9", "1.33"), ("-1.97", "1.66"), ("-2.1", "2"),
              ("-1.1", "2"), ("-0.89", "1.66"), ("-0.64", "1.33"),
              ("-0.3", "1"), ("-0.1", "0.9"), ("0.1", "0.9"), ("0.3", "1"),
              ("0.64", "1.33"), ("0.89", "1.66"), ("1.1", "2"), ("2.1", "2"),
              ("1.97", "1.66"), ("1.9", "1.33"), ("1.9", "1")]
    return Polygon(coords), 1, 0


def collinear_points_with_eye() -> tuple[list[Point], Point]:
    """Eleven collinear points plus one below them, at unit distance from
    the two extremes: the unit-disk visibility graph contains an induced
    star with six leaves."""
    pts = [Point(Fraction(16 * i, 100), Fraction(0)) for i in range(-5, 6)]
    eye = Point(Fraction(0), Fraction(-6, 10))
    return pts + [eye], eye


def udvg_hexagon() -> tuple[Polygon, set[frozenset]]:
    """Grid hexagon whose unit-threshold polygon visibility graph is the
    boundary plus chords {1,3},{1,5},{2,5},{3,5}; pairs {0,3},{1,4},{2,4}
    are visible but too far."""
    P = Polygon([("0", "0"), ("0.5", "0.6"), ("0.8", "1"), ("1.5", "0.6"),
                 ("1.4", "0.1"), ("0.9", "0.2")])
    expected = {frozenset(e) for e in
                [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                 (1, 3), (1, 5), (2, 5), (3, 5)]}
    return P, expected
