"""Visibility graphs and visibility polygons of simple polygons.

Conventions follow the closed-containment visibility model: two points see
each other iff the segment between them stays in the closed region, and a
polygon vertex lying on the sight line does not block it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geom import (BOUNDARY, COLLINEAR, EXTERIOR, LEFT, Point, Polygon,
                   Segment, cross, on_segment, orientation, point_in_polygon,
                   see, segment_in_polygon, segment_param)
from .geodesic import ShortestPathTree, TriangulatedPolygon, geodesic


@dataclass(frozen=True)
class VisibilityGraph:
    """Symmetric, irreflexive visibility relation over indexed vertices."""

    n: int
    adjacency: frozenset  # frozenset of frozenset({i, j}) pairs
    source: str = "polygon"

    def has_edge(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.adjacency

    def edges(self) -> list[tuple[int, int]]:
        out = sorted(tuple(sorted(e)) for e in self.adjacency)
        return out

    def neighbors(self, i: int) -> set[int]:
        out = set()
        for e in self.adjacency:
            if i in e:
                out |= e
        out.discard(i)
        return out

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def adjacency_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.adjacency:
            i, j = tuple(e)
            adj[i].add(j)
            adj[j].add(i)
        return adj


def graph_from_edges(n: int, edges, source: str = "graph") -> VisibilityGraph:
    adjacency = frozenset(frozenset(e) for e in edges)
    for e in adjacency:
        if len(e) != 2:
            raise ValueError("self-loop or malformed edge")
    return VisibilityGraph(n=n, adjacency=adjacency, source=source)


def vertex_visible(P: Polygon, i: int, j: int) -> bool:
    """Whether polygon vertices i and j see each other.

    Indices run over the outer ring first, then hole rings, in input order.
    """
    verts = P.all_vertices()
    if not (0 <= i < len(verts)) or not (0 <= j < len(verts)):
        raise IndexError("vertex index out of range")
    if i == j:
        raise ValueError("vertex_visible needs two distinct indices")
    return see(P, verts[i], verts[j])


def visibility_graph(P: Polygon) -> VisibilityGraph:
    """Vertex-vertex visibility graph over all rings of P."""
    P.require_valid()
    verts = P.all_vertices()
    n = len(verts)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if see(P, verts[i], verts[j]):
                edges.append((i, j))
    return graph_from_edges(n, edges, source="polygon")


# --- directions and angular order -----------------------------------------


def _dir_key(d: Point) -> tuple:
    """Canonical form of a direction for dedup (reduced, sign-normalized)."""
    from math import gcd
    nx = d.x.numerator * d.y.denominator
    ny = d.y.numerator * d.x.denominator
    g = gcd(abs(nx), abs(ny))
    if g:
        nx //= g
        ny //= g
    return (nx, ny)


def _half(d: Point) -> int:
    """0 for angles in [0, pi), 1 for [pi, 2pi)."""
    if d.y > 0 or (d.y == 0 and d.x > 0):
        return 0
    return 1


def _angle_less(a: Point, b: Point) -> bool:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha < hb
    c = a.x * b.y - a.y * b.x
    return c > 0


def _sorted_directions(dirs: list[Point]) -> list[Point]:
    import functools

    def cmp(a: Point, b: Point) -> int:
        if _dir_key(a) == _dir_key(b):
            return 0
        return -1 if _angle_less(a, b) else 1

    uniq: dict[tuple, Point] = {}
    for d in dirs:
        uniq.setdefault(_dir_key(d), d)
    return sorted(uniq.values(), key=functools.cmp_to_key(cmp))


def _ray_first_edge_hit(P: Polygon, origin: Point, d: Point
                        ) -> Optional[tuple[Fraction, Point, int]]:
    """First boundary hit of the open ray origin + t*d (t > 0).

    Returns (t, point, edge_index) for the nearest transversal crossing of
    an edge; grazing along collinear edges is skipped (the caller picks ray
    directions that avoid vertices).
    """
    best: Optional[tuple[Fraction, Point, int]] = None
    tip = origin + d
    for ei, (a, b) in enumerate(P.edges()):
        d1 = cross(origin, tip, a)
        d2 = cross(origin, tip, b)
        if d1 == d2:
            continue  # parallel or collinear with the ray direction
        u = d1 / (d1 - d2)
        if not (0 <= u <= 1):
            continue
        hit = Point(a.x + u * (b.x - a.x), a.y + u * (b.y - a.y))
        # parameter along the ray
        if d.x != 0:
            t = (hit.x - origin.x) / d.x
        else:
            t = (hit.y - origin.y) / d.y
        if t <= 0:
            continue
        if best is None or t < best[0]:
            best = (t, hit, ei)
    return best


def _sector_mid(d1: Point, d2: Point) -> Point:
    """An exact direction strictly inside the ccw angular sector (d1, d2)."""
    c = d1.x * d2.y - d1.y * d2.x
    if c > 0:
        return d1 + d2
    if c < 0:
        return Point(-(d1.x + d2.x), -(d1.y + d2.y))
    # exactly opposite directions: perpendicular, ccw of d1
    return Point(-d1.y, d1.x)


def visibility_polygon_of_point(P: Polygon, p: Point) -> Polygon:
    """The star-shaped region of P visible from p (simple polygons only).

    Implemented as an exact angular sweep: polygon vertices define critical
    directions, the nearest edge is constant between consecutive ones, and
    boundary/window points are exact rational ray-edge intersections.
    """
    if P.holes:
        raise ValueError("visibility polygons are computed for simple polygons")
    loc = point_in_polygon(p, P)
    if loc == EXTERIOR:
        raise ValueError("query point lies outside the polygon")

    dirs = [v - p for v in P.outer if v != p]
    events = _sorted_directions(dirs)
    if len(events) < 2:
        raise ValueError("degenerate polygon for visibility sweep")

    edges = P.edges()
    sectors = []  # (start_dir, end_dir, edge_index) for kept sectors
    m = len(events)
    for k in range(m):
        d1 = events[k]
        d2 = events[(k + 1) % m]
        mid = _sector_mid(d1, d2)
        hit = _ray_first_edge_hit(P, p, mid)
        if hit is None:
            continue
        _, hp, ei = hit
        if loc == BOUNDARY:
            half = Point((p.x + hp.x) / 2, (p.y + hp.y) / 2)
            if point_in_polygon(half, P) == EXTERIOR:
                continue
        sectors.append((d1, d2, ei))

    if not sectors:
        raise ValueError("empty visibility region")

    ring: list[Point] = []

    def append(q: Point) -> None:
        if not ring or ring[-1] != q:
            ring.append(q)

    if loc == BOUNDARY:
        # rotate so kept sectors are contiguous, then close through p
        keys = {(_dir_key(s[0]), _dir_key(s[1])) for s in sectors}
        full = []
        for k in range(m):
            d1, d2 = events[k], events[(k + 1) % m]
            full.append((_dir_key(d1), _dir_key(d2)))
        kept_flags = [key in keys for key in full]
        if all(kept_flags):
            start = 0
        else:
            start = next(k for k in range(m)
                         if kept_flags[k] and not kept_flags[(k - 1) % m])
        order = [k for k in list(range(start, m)) + list(range(start))
                 if kept_flags[k]]
        sector_by_key = {(_dir_key(s[0]), _dir_key(s[1])): s for s in sectors}
        ordered = [sector_by_key[full[k]] for k in order]
        append(p)
    else:
        ordered = sectors

    for d1, d2, ei in ordered:
        a, b = edges[ei]
        for d in (d1, d2):
            tip = p + d
            e1 = cross(p, tip, a)
            e2 = cross(p, tip, b)
            if e1 == e2:
                continue
            u = e1 / (e1 - e2)
            q = Point(a.x + u * (b.x - a.x), a.y + u * (b.y - a.y))
            append(q)

    if len(ring) > 1 and ring[0] == ring[-1]:
        ring.pop()
    out: list[Point] = []
    for q in ring:
        if q not in out:
            out.append(q)
    return Polygon(out)


# --- weak visibility polygon of an edge ------------------------------------


@dataclass
class Pocket:
    """A connected region of P invisible from the base, cut off by a window."""

    ring: list[Point]                    # window gate/foot plus boundary arc
    gate: Point                          # window endpoint that is a P vertex
    foot: Point                          # other window endpoint on the boundary
    vertex_map: list[Optional[int]]      # ring position -> index in parent polygon


@dataclass
class EdgeVisibility:
    polygon: Polygon                     # the weak visibility polygon
    vertex_map: list[Optional[int]]      # its ring position -> parent vertex index
    pockets: list[Pocket] = field(default_factory=list)


def _window_candidates(P: Polygon, trees) -> list[tuple[Point, Point]]:
    """Extensions of shortest-path-tree edges beyond their endpoint, clipped
    at the first boundary hit; every window of the weak visibility polygon
    lies on one of these chords."""
    pts = P.outer
    out = []
    seen = set()
    for T in trees:
        for r in range(len(pts)):
            par = T.parent[r]
            if par == r:
                continue
            d = pts[r] - pts[par]
            hit = _ray_first_edge_hit(P, pts[r], d)
            if hit is None:
                continue
            foot = hit[1]
            if foot == pts[r]:
                continue
            key = (pts[r], foot)
            if key in seen:
                continue
            seen.add(key)
            if segment_in_polygon(Segment(pts[r], foot), P):
                out.append((pts[r], foot))
    return out


def weak_visibility_from_ring_edge(P: Polygon, base_i: int,
                                   tp: Optional[TriangulatedPolygon] = None
                                   ) -> EdgeVisibility:
    """Weak visibility polygon of the ring edge (base_i, base_i+1) of P.

    The polygon is cut by all shortest-path-tree edge extensions (the only
    lines that can carry windows); weak visibility is constant on each face
    of that subdivision and is decided exactly per face by the funnel-apex
    test: a point sees the base iff its geodesics to the two base endpoints
    part ways immediately.
    """
    from .arrangement import arrangement_of_polygon

    if P.holes:
        raise ValueError("weak visibility requires a simple polygon")
    n = len(P.outer)
    u = base_i % n
    v = (base_i + 1) % n
    if tp is None:
        tp = TriangulatedPolygon(P)
    Tu = ShortestPathTree(P, u, tp)
    Tv = ShortestPathTree(P, v, tp)

    chords = [(a, b, frozenset({"window"}))
              for (a, b) in _window_candidates(P, (Tu, Tv))]
    arr = arrangement_of_polygon(P, chords)

    pu, pv = P.outer[u], P.outer[v]

    def face_sees_base(rep: Point) -> bool:
        gu = geodesic(tp, pu, rep)
        gv = geodesic(tp, pv, rep)
        return gu[-2] != gv[-2]

    visible_faces = set()
    invisible_faces = set()
    for f in arr.bounded_faces():
        if face_sees_base(f.rep):
            visible_faces.add(f.index)
        else:
            invisible_faces.add(f.index)

    rings = arr.union_rings(visible_faces)
    if len(rings) != 1:
        raise AssertionError("weak visibility region is not a single ring")
    ring_pts, vmap = _collapse_ring(P, rings[0])
    polygon = Polygon(ring_pts)

    pockets = []
    for comp in _components(arr, invisible_faces):
        comp_rings = arr.union_rings(comp)
        if len(comp_rings) != 1:
            raise AssertionError("pocket is not simply connected")
        p_ring, p_map = _collapse_ring(P, comp_rings[0])
        gate, foot = _pocket_window(P, arr, comp_rings[0])
        pockets.append(Pocket(ring=p_ring, gate=gate, foot=foot,
                              vertex_map=p_map))
    return EdgeVisibility(polygon=polygon, vertex_map=vmap, pockets=pockets)


def _components(arr, faces: set[int]) -> list[set[int]]:
    adjacency = arr.adjacency()
    remaining = set(faces)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        stack = [seed]
        while stack:
            f = stack.pop()
            for g, _tags in adjacency[f]:
                if g in remaining:
                    remaining.discard(g)
                    comp.add(g)
                    stack.append(g)
        comps.append(comp)
    return comps


def _collapse_ring(P: Polygon, ring_edges) -> tuple[list[Point], list[Optional[int]]]:
    """Drop straight pass-through subdivision points, keeping polygon
    vertices; return points plus their input-vertex indices (None for
    window endpoints)."""
    index_of = {p: i for i, p in enumerate(P.outer)}
    pts = [a for (a, _b, _tags) in ring_edges]
    m = len(pts)
    keep: list[Point] = []
    for i in range(m):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % m]
        if b in index_of:
            keep.append(b)
        elif orientation(a, b, c) != COLLINEAR:
            keep.append(b)
    vmap = [index_of.get(p) for p in keep]
    return keep, vmap


def _pocket_window(P: Polygon, arr, ring_edges) -> tuple[Point, Point]:
    """The window chord of a pocket: the maximal run of non-boundary edges
    on its ring.  Returns (gate, foot) with the gate being a P vertex."""
    m = len(ring_edges)
    window_flags = []
    for (a, b, tags) in ring_edges:
        window_flags.append("boundary" not in tags)
    if not any(window_flags):
        raise AssertionError("pocket without a window")
    # rotate so the run of window edges is contiguous
    start = next(i for i in range(m)
                 if window_flags[i] and not window_flags[(i - 1) % m])
    run = []
    i = start
    while window_flags[i % m] and len(run) < m:
        run.append(ring_edges[i % m])
        i += 1
    if any(window_flags[j % m] for j in range(i, start + m)):
        raise AssertionError("pocket bounded by more than one window")
    a = run[0][0]
    b = run[-1][1]
    verts = set(P.outer)
    if a in verts:
        return a, b
    if b in verts:
        return b, a
    raise AssertionError("window not anchored at a polygon vertex")


def _split_at_chord(P: Polygon, e: Segment) -> tuple[Polygon, int, Polygon, int]:
    """Split a simple polygon along a chord; returns both sides with the
    ring position of the chord edge in each."""
    ring = list(P.outer)

    def locate(q: Point) -> tuple[int, bool]:
        for i, p in enumerate(ring):
            if p == q:
                return i, True
        for i in range(len(ring)):
            a, b = ring[i], ring[(i + 1) % len(ring)]
            if on_segment(q, a, b):
                return i, False
        raise ValueError("chord endpoint is not on the polygon boundary")

    # insert endpoints as ring vertices where needed
    for q in (e.a, e.b):
        i, is_vertex = locate(q)
        if not is_vertex:
            ring.insert(i + 1, q)
    ia = ring.index(e.a)
    ib = ring.index(e.b)
    if ia == ib:
        raise ValueError("degenerate chord")
    n = len(ring)
    side1 = [ring[(ia + k) % n] for k in range(((ib - ia) % n) + 1)]
    side2 = [ring[(ib + k) % n] for k in range(((ia - ib) % n) + 1)]
    # chord edge is (last, first) in each side ring
    return Polygon(side1), len(side1) - 1, Polygon(side2), len(side2) - 1


def visibility_polygon_of_edge(P: Polygon, e: Segment) -> Polygon:
    """Weak visibility polygon of a boundary edge or chord of P.

    All points of P that see at least one point of e.  For a chord this is
    the union of the weak visibility polygons on both sides.
    """
    if P.holes:
        raise ValueError("weak visibility requires a simple polygon")
    n = len(P.outer)
    for i in range(n):
        a, b = P.outer[i], P.outer[(i + 1) % n]
        if (a, b) == (e.a, e.b) or (a, b) == (e.b, e.a):
            return weak_visibility_from_ring_edge(P, i).polygon

    side1, b1, side2, b2 = _split_at_chord(P, e)
    w1 = weak_visibility_from_ring_edge(side1, b1).polygon
    w2 = weak_visibility_from_ring_edge(side2, b2).polygon
    return _merge_on_chord(w1, w2, e)


def _merge_on_chord(w1: Polygon, w2: Polygon, e: Segment) -> Polygon:
    """Union of two polygons sharing exactly the chord e as an edge."""

    def open_ring(w: Polygon) -> list[Point]:
        ring = list(w.outer)
        na = ring.index(e.a)
        ring = ring[na:] + ring[:na]
        if ring[1] == e.b:
            ring = [ring[0]] + ring[:0:-1]
        # now ring starts at e.a and ends at e.b
        assert ring[-1] == e.b, "chord edge missing from visibility polygon"
        return ring

    r1 = open_ring(w1)          # e.a ... e.b
    r2 = open_ring(w2)          # e.a ... e.b
    merged = r1[:-1] + r2[::-1][:-1]
    out: list[Point] = []
    for q in merged:
        if not out or out[-1] != q:
            out.append(q)
    if out[0] == out[-1]:
        out.pop()
    # drop collinear seam vertices introduced at the chord endpoints
    cleaned: list[Point] = []
    m = len(out)
    for i in range(m):
        a, b, c = out[i - 1], out[i], out[(i + 1) % m]
        if orientation(a, b, c) == COLLINEAR and on_segment(b, a, c):
            continue
        cleaned.append(out[i])
    return Polygon(cleaned)
