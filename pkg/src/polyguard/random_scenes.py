"""Seeded random generators for polygons, funnels and point/segment scenes.

Used by the test-suite and the demo scripts.  Generation is randomized but
every returned object is exact (integer coordinates) and validated.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .funnel import Funnel
from .geom import (COLLINEAR, Point, Polygon, orientation,
                   segments_properly_cross, validate)


def _lattice_points(rng: random.Random, n: int, span: int) -> list[Point]:
    """Distinct lattice points with no three collinear."""
    pts: list[Point] = []
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > 5000:
            raise RuntimeError("could not sample points in general position")
        q = Point(Fraction(rng.randint(0, span)), Fraction(rng.randint(0, span)))
        if q in pts:
            continue
        if any(orientation(a, b, q) == COLLINEAR
               for i, a in enumerate(pts) for b in pts[i + 1:]):
            continue
        pts.append(q)
    return pts


def _untangle(ring: list[Point], max_steps: int = 2000) -> bool:
    """2-opt uncrossing; returns True when the ring is simple."""
    n = len(ring)
    for _ in range(max_steps):
        crossing = None
        for i in range(n):
            a, b = ring[i], ring[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue
                c, d = ring[j], ring[(j + 1) % n]
                if segments_properly_cross(a, b, c, d):
                    crossing = (i, j)
                    break
            if crossing:
                break
        if crossing is None:
            return True
        i, j = crossing
        lo, hi = i + 1, j
        while lo < hi:
            ring[lo], ring[hi] = ring[hi], ring[lo]
            lo += 1
            hi -= 1
    return False


def random_simple_polygon(rng: random.Random, n: int, span: int = 0) -> Polygon:
    """A random simple polygon with n vertices in general position."""
    if span <= 0:
        span = max(12, 3 * n)
    while True:
        pts = _lattice_points(rng, n, span)
        ring = pts[:]
        rng.shuffle(ring)
        if not _untangle(ring):
            continue
        P = Polygon(ring)
        if validate(P) is None:
            return P


def random_convex_polygon(rng: random.Random, n: int, span: int = 64) -> Polygon:
    """A random strictly convex polygon with exactly n vertices (Valtr's
    construction: angle-sorted zero-sum edge vectors on the lattice)."""
    while True:
        dx = _zero_sum_deltas(rng, n, span)
        dy = _zero_sum_deltas(rng, n, span)
        rng.shuffle(dy)
        vecs = [Point(Fraction(a), Fraction(b)) for a, b in zip(dx, dy)]
        if any(v == Point(Fraction(0), Fraction(0)) for v in vecs):
            continue
        from math import gcd
        dirs = set()
        for v in vecs:
            a, b = v.x.numerator, v.y.numerator
            g = gcd(abs(a), abs(b))
            dirs.add((a // g, b // g))
        if len(dirs) < n:
            continue  # parallel edges would merge to a straight vertex
        vecs = _sort_by_angle(vecs)
        ring = [Point(Fraction(0), Fraction(0))]
        for v in vecs[:-1]:
            ring.append(ring[-1] + v)
        P = Polygon(ring)
        if validate(P) is None:
            return P


def _zero_sum_deltas(rng: random.Random, n: int, span: int) -> list[int]:
    xs = sorted(rng.randint(0, span) for _ in range(n))
    lo, hi = xs[0], xs[-1]
    chain_a, chain_b = [lo], [lo]
    for v in xs[1:-1]:
        (chain_a if rng.random() < 0.5 else chain_b).append(v)
    chain_a.append(hi)
    chain_b.append(hi)
    deltas = [b - a for a, b in zip(chain_a, chain_a[1:])]
    deltas += [a - b for a, b in zip(chain_b, chain_b[1:])]
    return deltas


def _sort_by_angle(vecs: list[Point]) -> list[Point]:
    import functools

    def half(d: Point) -> int:
        return 0 if (d.y > 0 or (d.y == 0 and d.x > 0)) else 1

    def cmp(a: Point, b: Point) -> int:
        if half(a) != half(b):
            return half(a) - half(b)
        c = a.x * b.y - a.y * b.x
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(vecs, key=functools.cmp_to_key(cmp))


def _turning_steps(rng: random.Random, count: int, left_side: bool) -> list[Point]:
    """Strictly angle-sorted step vectors for one concave funnel chain."""
    steps: dict[tuple, Point] = {}
    attempts = 0
    while len(steps) < count:
        attempts += 1
        if attempts > 2000:
            raise RuntimeError("could not sample chain steps")
        dx = rng.randint(1, 8)
        dy = rng.randint(1, 8)
        if not left_side:
            dx = -dx
        from math import gcd
        g = gcd(dx, abs(dy))
        key = (dx // g, dy // g)
        steps.setdefault(key, Point(Fraction(dx), Fraction(dy)))
    out = list(steps.values())
    # ascending angle for the left chain, descending for the right chain
    out.sort(key=_angle_sort_key)
    if not left_side:
        out.reverse()
    return out


def _angle_sort_key(d: Point):
    # first quadrant / second quadrant vectors only: sort by slope
    return Fraction(d.y, 1) / d.x if d.x > 0 else Fraction(10 ** 9) + Fraction(d.y, 1) / d.x


def random_funnel(rng: random.Random, n: int) -> Funnel:
    """A random funnel with n vertices (two concave chains over a flat base)."""
    if n < 3:
        raise ValueError("a funnel needs at least 3 vertices")
    k = rng.randint(2, n - 1)   # left chain length including base and apex
    m = n + 1 - k
    left_steps = _turning_steps(rng, k - 1, left_side=True)
    left = [Point(Fraction(0), Fraction(0))]
    for s in left_steps:
        left.append(left[-1] + s)
    apex = left[-1]

    right_steps = _turning_steps(rng, m - 1, left_side=False)
    # rescale vertical parts so the right chain lands back on y = 0
    total = sum(s.y for s in right_steps)
    scale = apex.y / total
    right_steps = [Point(s.x, s.y * scale) for s in right_steps]
    r1 = Point(apex.x - sum(s.x for s in right_steps), Fraction(0))
    right = [r1]
    for s in right_steps:
        right.append(right[-1] + s)
    assert right[-1] == apex
    return Funnel(left=left, right=right)


def random_point_scene(rng: random.Random, n: int, span: int = 6,
                       denom: int = 4) -> list[Point]:
    """Distinct random points on a fine rational grid."""
    pts: set[Point] = set()
    while len(pts) < n:
        pts.add(Point(Fraction(rng.randint(0, span * denom), denom),
                      Fraction(rng.randint(0, span * denom), denom)))
    return sorted(pts)


def random_segment_scene(rng: random.Random, count: int, span: int = 8):
    """Pairwise disjoint random segments with lattice endpoints."""
    from .geom import Segment, on_segment, segment_hits
    segs: list[Segment] = []
    attempts = 0
    while len(segs) < count:
        attempts += 1
        if attempts > 5000:
            raise RuntimeError("could not sample disjoint segments")
        a = Point(Fraction(rng.randint(0, span)), Fraction(rng.randint(0, span)))
        b = Point(Fraction(rng.randint(0, span)), Fraction(rng.randint(0, span)))
        if a == b:
            continue
        ok = True
        for s in segs:
            if segment_hits(a, b, s.a, s.b):
                ok = False
                break
        if ok:
            segs.append(Segment(a, b))
    return segs
