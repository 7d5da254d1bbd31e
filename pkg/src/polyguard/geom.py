"""Exact planar primitives: rational points, segments, polygons and the
robust predicates everything else is built on.

All coordinates are `fractions.Fraction`, so every predicate in this module
is exact; there is no floating-point fast path here by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

RatLike = Union[int, str, Fraction, Decimal, float]

LEFT = 1
COLLINEAR = 0
RIGHT = -1


def rat(value: RatLike) -> Fraction:
    """Coerce a coordinate to an exact Fraction.

    Decimal strings ("4.25", "-0.5") convert losslessly.  Floats are
    accepted and converted through their exact binary value, which is only
    appropriate for hand-written literals.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational coordinate")


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, factor: Fraction) -> "Point":
        return Point(self.x * factor, self.y * factor)


def pt(x: RatLike, y: RatLike) -> Point:
    return Point(rat(x), rat(y))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product (a-o) x (b-o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def dot(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Exact sign of (q-p) x (r-p): LEFT, COLLINEAR or RIGHT."""
    c = cross(p, q, r)
    if c > 0:
        return LEFT
    if c < 0:
        return RIGHT
    return COLLINEAR


def dist2(a: Point, b: Point) -> Fraction:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab."""
    if orientation(a, b, p) != COLLINEAR:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("degenerate segment: endpoints coincide")

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def point_at(self, t: Fraction) -> Point:
        return Point(self.a.x + t * (self.b.x - self.a.x),
                     self.a.y + t * (self.b.y - self.a.y))


def segment_param(a: Point, b: Point, p: Point) -> Fraction:
    """Parameter t with p = a + t*(b-a), for p collinear with ab."""
    if b.x != a.x:
        return (p.x - a.x) / (b.x - a.x)
    return (p.y - a.y) / (b.y - a.y)


def line_intersection(a: Point, b: Point, c: Point, d: Point) -> Optional[Point]:
    """Intersection point of lines ab and cd, or None if parallel."""
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    if d1 == d2:
        return None
    t = d1 / (d1 - d2)
    return Segment(a, b).point_at(t) if a != b else a


def segment_hits(a: Point, b: Point, c: Point, d: Point) -> list[Fraction]:
    """Parameters t in [0,1] along a->b where segment ab meets segment cd.

    A transversal or touching intersection yields one parameter; a collinear
    overlap yields the two parameters bounding the shared sub-segment.
    """
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    if d1 == 0 and d2 == 0:
        # collinear: project c,d onto ab
        ts = []
        for p in (c, d):
            if on_segment(p, a, b):
                ts.append(segment_param(a, b, p))
        for p in (a, b):
            if on_segment(p, c, d):
                ts.append(segment_param(a, b, p))
        if not ts:
            return []
        lo, hi = min(ts), max(ts)
        return [lo] if lo == hi else [lo, hi]
    if (d1 <= 0 <= d2 or d2 <= 0 <= d1) and (d3 <= 0 <= d4 or d4 <= 0 <= d3):
        t = d1 / (d1 - d2)
        if 0 <= t <= 1:
            return [t]
    return []


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments ab and cd cross at a single interior point."""
    d1 = orientation(c, d, a)
    d2 = orientation(c, d, b)
    d3 = orientation(a, b, c)
    d4 = orientation(a, b, d)
    return d1 != d2 and d3 != d4 and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0


def ring_signed_area2(ring: Sequence[Point]) -> Fraction:
    """Twice the signed area of the ring (positive for counterclockwise)."""
    total = Fraction(0)
    n = len(ring)
    for i in range(n):
        a = ring[i]
        b = ring[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total


INTERIOR = "interior"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


@dataclass(frozen=True)
class Diagnostic:
    """First violated polygon invariant, with the offending indices."""
    code: str
    detail: str
    indices: tuple = ()

    def __str__(self) -> str:
        return f"{self.code}: {self.detail} {self.indices}"


class InvalidPolygonError(ValueError):
    def __init__(self, diagnostic: Diagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class Polygon:
    """A polygon given by an outer ring and optional hole rings.

    Rings keep their input vertex order (so vertex indices always refer to
    the input); the orientation of each ring is recorded instead of
    rewriting it.  `ccw_outer()` and friends provide canonical views.
    """

    def __init__(self, outer: Iterable, holes: Iterable = ()):  # noqa: ANN001
        self.outer: tuple[Point, ...] = tuple(_coerce_point(p) for p in outer)
        self.holes: tuple[tuple[Point, ...], ...] = tuple(
            tuple(_coerce_point(p) for p in ring) for ring in holes)
        self._outer_ccw: Optional[bool] = None

    # --- canonical views -------------------------------------------------

    def outer_is_ccw(self) -> bool:
        if self._outer_ccw is None:
            self._outer_ccw = ring_signed_area2(self.outer) > 0
        return self._outer_ccw

    def ccw_outer(self) -> list[tuple[int, Point]]:
        """Outer ring in counterclockwise order as (input_index, point)."""
        idx = list(enumerate(self.outer))
        return idx if self.outer_is_ccw() else idx[::-1]

    def rings(self) -> list[tuple[Point, ...]]:
        return [self.outer, *self.holes]

    def all_vertices(self) -> list[Point]:
        """Vertices of all rings, outer first, in input order."""
        out = list(self.outer)
        for ring in self.holes:
            out.extend(ring)
        return out

    def edges(self) -> list[tuple[Point, Point]]:
        out = []
        for ring in self.rings():
            n = len(ring)
            for i in range(n):
                out.append((ring[i], ring[(i + 1) % n]))
        return out

    def area2(self) -> Fraction:
        """Twice the area of the closed region (outer minus holes)."""
        total = abs(ring_signed_area2(self.outer))
        for ring in self.holes:
            total -= abs(ring_signed_area2(ring))
        return total

    def __repr__(self) -> str:
        return f"Polygon({len(self.outer)} vertices, {len(self.holes)} holes)"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polygon) and self.outer == other.outer
                and self.holes == other.holes)

    def __hash__(self) -> int:
        return hash((self.outer, self.holes))

    def require_valid(self) -> "Polygon":
        diag = validate(self)
        if diag is not None:
            raise InvalidPolygonError(diag)
        return self


def _coerce_point(p) -> Point:  # noqa: ANN001
    if isinstance(p, Point):
        return p
    x, y = p
    return pt(x, y)


def polygon(coords: Iterable, holes: Iterable = ()) -> Polygon:
    return Polygon(coords, holes)


def validate(P: Polygon) -> Optional[Diagnostic]:
    """Check all polygon invariants; return the first violation or None.

    Collinear consecutive vertices are accepted; self-intersections, spur
    vertices, repeated vertices, zero-area rings, wrongly placed holes are
    not.
    """
    rings = P.rings()
    for ri, ring in enumerate(rings):
        if len(ring) < 3:
            return Diagnostic("too-few-vertices",
                              f"ring {ri} has {len(ring)} vertices", (ri,))
        seen = {}
        for i, p in enumerate(ring):
            if p in seen:
                return Diagnostic("repeated-vertex",
                                  f"ring {ri} repeats vertex {p}",
                                  (ri, seen[p], i))
            seen[p] = i
        n = len(ring)
        for i in range(n):
            a, b, c = ring[i - 1], ring[i], ring[(i + 1) % n]
            if orientation(a, b, c) == COLLINEAR and dot(b, a, c) > 0:
                return Diagnostic("spur-vertex",
                                  f"ring {ri} folds back at vertex {i}",
                                  (ri, i))

    # pairwise edge intersection checks across all rings
    indexed_edges = []
    for ri, ring in enumerate(rings):
        n = len(ring)
        for i in range(n):
            indexed_edges.append((ri, i, ring[i], ring[(i + 1) % n]))
    for e1 in range(len(indexed_edges)):
        r1, i1, a, b = indexed_edges[e1]
        for e2 in range(e1 + 1, len(indexed_edges)):
            r2, i2, c, d = indexed_edges[e2]
            n1 = len(rings[r1])
            adjacent = (r1 == r2 and (abs(i1 - i2) == 1 or abs(i1 - i2) == n1 - 1))
            hits = segment_hits(a, b, c, d)
            if not hits:
                continue
            if adjacent:
                if len(hits) > 1:
                    return Diagnostic("overlapping-edges",
                                      f"edges {i1},{i2} of ring {r1} overlap",
                                      (r1, i1, i2))
                # the single shared endpoint is fine
                continue
            return Diagnostic("self-intersection",
                              "edge pair intersects",
                              (r1, i1, r2, i2))

    for ri, ring in enumerate(rings):
        if ring_signed_area2(ring) == 0:
            return Diagnostic("zero-area", f"ring {ri} has zero area", (ri,))

    # hole placement
    for hi, ring in enumerate(P.holes):
        for p in ring:
            if _point_in_ring(p, P.outer) != INTERIOR:
                return Diagnostic("hole-outside",
                                  f"hole {hi} vertex {p} not strictly inside outer",
                                  (hi,))
        for hj, other in enumerate(P.holes):
            if hj == hi:
                continue
            if _point_in_ring(ring[0], other) == INTERIOR:
                return Diagnostic("hole-in-hole",
                                  f"hole {hi} lies inside hole {hj}", (hi, hj))
    return None


def _point_in_ring(p: Point, ring: Sequence[Point]) -> str:
    """Exact location of p relative to a single closed ring."""
    n = len(ring)
    crossings = 0
    for i in range(n):
        a = ring[i]
        b = ring[(i + 1) % n]
        if on_segment(p, a, b):
            return BOUNDARY
        if (a.y > p.y) != (b.y > p.y):
            o = orientation(a, b, p)
            if b.y > a.y:
                if o == LEFT:
                    crossings += 1
            else:
                if o == RIGHT:
                    crossings += 1
    return INTERIOR if crossings % 2 == 1 else EXTERIOR


def point_in_polygon(p: Point, P: Polygon) -> str:
    """Classify p against the closed region of P (holes excluded)."""
    loc = _point_in_ring(p, P.outer)
    if loc != INTERIOR:
        return loc
    for ring in P.holes:
        inner = _point_in_ring(p, ring)
        if inner == BOUNDARY:
            return BOUNDARY
        if inner == INTERIOR:
            return EXTERIOR
    return INTERIOR


def segment_in_polygon(s: Segment, P: Polygon) -> bool:
    """True iff every point of the closed segment lies in the closed region.

    Touching the boundary, grazing vertices and running along edges are all
    allowed; only excursions through the exterior (or a hole) disqualify.
    """
    if point_in_polygon(s.a, P) == EXTERIOR or point_in_polygon(s.b, P) == EXTERIOR:
        return False
    cuts = {Fraction(0), Fraction(1)}
    for (a, b) in P.edges():
        for t in segment_hits(s.a, s.b, a, b):
            if 0 <= t <= 1:
                cuts.add(t)
    ordered = sorted(cuts)
    for t0, t1 in zip(ordered, ordered[1:]):
        mid = s.point_at((t0 + t1) / 2)
        if point_in_polygon(mid, P) == EXTERIOR:
            return False
    return True


def see(P: Polygon, p: Point, q: Point) -> bool:
    """Point-to-point visibility inside P (closed containment convention)."""
    if p == q:
        return True
    return segment_in_polygon(Segment(p, q), P)


# --- triangulation -------------------------------------------------------


def triangulate(P: Polygon) -> list[tuple[int, int, int]]:
    """Ear-clipping triangulation of a simple polygon (no holes).

    Returns triangles as triples of input vertex indices, oriented CCW.
    Straight (collinear) vertices are dropped without emitting a triangle,
    so they never appear inside any triangle.
    """
    if P.holes:
        raise ValueError("triangulate() expects a simple polygon without holes")
    ring = [i for i, _ in P.ccw_outer()]
    pts = P.outer
    triangles: list[tuple[int, int, int]] = []

    def is_ear(idx: int, chain: list[int]) -> bool:
        n = len(chain)
        a, b, c = pts[chain[idx - 1]], pts[chain[idx]], pts[chain[(idx + 1) % n]]
        if orientation(a, b, c) != LEFT:
            return False
        for j in range(n):
            if j in ((idx - 1) % n, idx, (idx + 1) % n):
                continue
            q = pts[chain[j]]
            if _point_in_triangle_closed(q, a, b, c):
                return False
        return True

    chain = ring[:]
    while len(chain) > 3:
        n = len(chain)
        clipped = False
        # drop straight vertices first: they are degenerate ears
        for i in range(n):
            a, b, c = pts[chain[i - 1]], pts[chain[i]], pts[chain[(i + 1) % n]]
            if orientation(a, b, c) == COLLINEAR:
                del chain[i]
                clipped = True
                break
        if clipped:
            continue
        for i in range(n):
            if is_ear(i, chain):
                triangles.append((chain[i - 1], chain[i], chain[(i + 1) % len(chain)]))
                del chain[i]
                clipped = True
                break
        if not clipped:
            raise InvalidPolygonError(Diagnostic(
                "not-simple", "ear clipping found no ear; polygon is not simple"))
    a, b, c = pts[chain[0]], pts[chain[1]], pts[chain[2]]
    if orientation(a, b, c) == LEFT:
        triangles.append((chain[0], chain[1], chain[2]))
    elif orientation(a, b, c) == RIGHT:
        triangles.append((chain[0], chain[2], chain[1]))
    return triangles


def _point_in_triangle_closed(q: Point, a: Point, b: Point, c: Point) -> bool:
    """q inside or on the boundary of CCW triangle abc."""
    return (orientation(a, b, q) >= 0 and orientation(b, c, q) >= 0
            and orientation(c, a, q) >= 0)


def triangle_centroid(a: Point, b: Point, c: Point) -> Point:
    third = Fraction(1, 3)
    return Point((a.x + b.x + c.x) * third, (a.y + b.y + c.y) * third)
