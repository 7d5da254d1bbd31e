"""Exact arrangements of segments: planar subdivision, faces, adjacency.

Built once from a set of tagged segments (polygon boundary edges plus
interior chords such as visibility windows).  All intersections are exact
rational points; faces are traced with the interior on the left, so every
bounded face comes out counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .geom import (Point, Polygon, ring_signed_area2, segment_hits,
                   segment_param, triangulate, triangle_centroid)


def _angle_cmp_around(center: Point):
    import functools

    def half(d: Point) -> int:
        return 0 if (d.y > 0 or (d.y == 0 and d.x > 0)) else 1

    def cmp(p: Point, q: Point) -> int:
        a = p - center
        b = q - center
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        c = a.x * b.y - a.y * b.x
        if c > 0:
            return -1
        if c < 0:
            return 1
        return 0

    return functools.cmp_to_key(cmp)


@dataclass
class Face:
    index: int
    ring: list[Point]
    rep: Optional[Point]          # None for the unbounded face
    bounded: bool
    edge_keys: list[tuple]        # atomic edge key per ring position


class Arrangement:
    """Planar subdivision induced by a set of tagged segments."""

    def __init__(self, segments: Iterable[tuple[Point, Point, frozenset]]):
        segs = [(a, b, frozenset(tags)) for (a, b, tags) in segments if a != b]
        cuts: list[set[Fraction]] = [
            {Fraction(0), Fraction(1)} for _ in segs]
        for i in range(len(segs)):
            a, b, _ = segs[i]
            for j in range(i + 1, len(segs)):
                c, d, _ = segs[j]
                for t in segment_hits(a, b, c, d):
                    cuts[i].add(t)
                for t in segment_hits(c, d, a, b):
                    cuts[j].add(t)

        # atomic edges with merged tags
        self.edge_tags: dict[tuple, frozenset] = {}
        adj: dict[Point, set[Point]] = {}
        for (a, b, tags), ts in zip(segs, cuts):
            ordered = sorted(ts)
            pts = [Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
                   for t in ordered]
            for p, q in zip(pts, pts[1:]):
                if p == q:
                    continue
                key = (p, q) if p < q else (q, p)
                self.edge_tags[key] = self.edge_tags.get(key, frozenset()) | tags
                adj.setdefault(p, set()).add(q)
                adj.setdefault(q, set()).add(p)

        # angular order of neighbors around each vertex
        self._next_nbr: dict[tuple[Point, Point], Point] = {}
        for v, nbrs in adj.items():
            ordered = sorted(nbrs, key=_angle_cmp_around(v))
            n = len(ordered)
            for i, w in enumerate(ordered):
                # clockwise predecessor in the ccw order
                self._next_nbr[(v, w)] = ordered[(i - 1) % n]

        # trace faces: next half-edge of (a -> b) starts at b toward the
        # clockwise predecessor of a around b (interior stays on the left)
        self.faces: list[Face] = []
        self.left_face: dict[tuple[Point, Point], int] = {}
        visited: set[tuple[Point, Point]] = set()
        for key in self.edge_tags:
            for start in (key, (key[1], key[0])):
                if start in visited:
                    continue
                cycle: list[tuple[Point, Point]] = []
                h = start
                while h not in visited:
                    visited.add(h)
                    cycle.append(h)
                    a, b = h
                    h = (b, self._next_nbr[(b, a)])
                if h != start:
                    raise AssertionError("face tracing entered a visited edge")
                ring = [a for (a, _) in cycle]
                keys = [((a, b) if a < b else (b, a)) for (a, b) in cycle]
                bounded = ring_signed_area2(ring) > 0
                face = Face(index=len(self.faces), ring=ring,
                            rep=None, bounded=bounded, edge_keys=keys)
                if bounded:
                    face.rep = _interior_point(ring)
                self.faces.append(face)
                for h2 in cycle:
                    self.left_face[h2] = face.index

    # --- queries ----------------------------------------------------------

    def bounded_faces(self) -> list[Face]:
        return [f for f in self.faces if f.bounded]

    def faces_of_edge(self, key: tuple) -> tuple[int, int]:
        a, b = key
        return self.left_face[(a, b)], self.left_face[(b, a)]

    def adjacency(self) -> list[list[tuple[int, frozenset]]]:
        """For each face, the neighboring faces across each atomic edge."""
        out: list[list[tuple[int, frozenset]]] = [[] for _ in self.faces]
        for key, tags in self.edge_tags.items():
            f1, f2 = self.faces_of_edge(key)
            out[f1].append((f2, tags))
            out[f2].append((f1, tags))
        return out

    def union_rings(self, keep: set[int]) -> list[list[tuple[Point, Point, frozenset]]]:
        """Boundary cycles of the union of the given bounded faces.

        Each cycle is a list of directed edges (a, b, tags) with the union
        interior on the left.
        """
        border: set[tuple[Point, Point]] = set()
        for key in self.edge_tags:
            f1, f2 = self.faces_of_edge(key)
            in1 = f1 in keep
            in2 = f2 in keep
            if in1 and not in2:
                border.add(key)
            elif in2 and not in1:
                border.add((key[1], key[0]))
        rings = []
        unused = set(border)
        while unused:
            start = min(unused)
            cycle = []
            h = start
            while True:
                unused.discard(h)
                a, b = h
                key = (a, b) if a < b else (b, a)
                cycle.append((a, b, self.edge_tags[key]))
                # continue from b: clockwise scan from the reverse direction
                nxt = self._next_nbr[(b, a)]
                while (b, nxt) not in border:
                    nxt = self._next_nbr[(b, nxt)]
                h = (b, nxt)
                if h == start:
                    break
            rings.append(cycle)
        return rings


def _interior_point(ring: list[Point]) -> Point:
    """An exact interior point of a simple (possibly degenerate) ccw ring:
    the centroid of one triangle of its triangulation."""
    if len(set(ring)) != len(ring):
        raise AssertionError("face ring repeats a vertex")
    tris = triangulate(Polygon(ring))
    i, j, k = tris[0]
    return triangle_centroid(ring[i], ring[j], ring[k])


def arrangement_of_polygon(P: Polygon, chords: Iterable[tuple[Point, Point, frozenset]]
                           ) -> Arrangement:
    """Arrangement of the polygon boundary plus interior chords; boundary
    edges are tagged 'boundary'."""
    segs: list[tuple[Point, Point, frozenset]] = []
    for (a, b) in P.edges():
        segs.append((a, b, frozenset({"boundary"})))
    segs.extend(chords)
    return Arrangement(segs)
