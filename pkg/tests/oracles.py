"""Independent reimplementations used as ground truth by the tests.

These deliberately do not share code paths with the library: point location
uses winding numbers, geodesics use Dijkstra over the visibility graph with
float weights, and pairwise visibility is re-derived from first principles.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction

from polyguard.geom import (Point, Polygon, cross, on_segment, orientation,
                            segment_param)


def winding_location(p: Point, P: Polygon) -> str:
    """interior/boundary/exterior via signed winding numbers."""
    for ring in P.rings():
        n = len(ring)
        for i in range(n):
            if on_segment(p, ring[i], ring[(i + 1) % n]):
                return "boundary"

    def winding(ring) -> int:
        w = 0
        n = len(ring)
        for i in range(n):
            a, b = ring[i], ring[(i + 1) % n]
            if a.y <= p.y:
                if b.y > p.y and orientation(a, b, p) == 1:
                    w += 1
            else:
                if b.y <= p.y and orientation(a, b, p) == -1:
                    w -= 1
        return w

    if winding(P.outer) == 0:
        return "exterior"
    for ring in P.holes:
        if winding(ring) != 0:
            return "exterior"
    return "interior"


def naive_visible(P: Polygon, p: Point, q: Point) -> bool:
    """Pairwise visibility from first principles: cut the sight segment at
    every boundary contact and demand no strictly-exterior piece."""
    if p == q:
        return True
    params = {Fraction(0), Fraction(1)}
    for (a, b) in P.edges():
        d1 = cross(a, b, p)
        d2 = cross(a, b, q)
        if d1 == 0 and d2 == 0:
            for v in (a, b):
                if on_segment(v, p, q):
                    params.add(segment_param(p, q, v))
            continue
        if (d1 <= 0 <= d2) or (d2 <= 0 <= d1):
            d3 = cross(p, q, a)
            d4 = cross(p, q, b)
            if (d3 <= 0 <= d4) or (d4 <= 0 <= d3):
                t = d1 / (d1 - d2)
                if 0 <= t <= 1:
                    params.add(t)
    cuts = sorted(params)
    for t0, t1 in zip(cuts, cuts[1:]):
        tm = (t0 + t1) / 2
        mid = Point(p.x + tm * (q.x - p.x), p.y + tm * (q.y - p.y))
        if winding_location(mid, P) == "exterior":
            return False
    if winding_location(p, P) == "exterior" or winding_location(q, P) == "exterior":
        return False
    return True


def naive_visibility_edges(P: Polygon) -> set[frozenset]:
    verts = P.all_vertices()
    out = set()
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if naive_visible(P, verts[i], verts[j]):
                out.add(frozenset((i, j)))
    return out


def dijkstra_geodesic(P: Polygon, src: int, dst: int) -> list[int]:
    """Geodesic vertex path via Dijkstra on the visibility graph with float
    weights; ties broken toward fewer vertices then lexicographic path."""
    verts = P.all_vertices()
    n = len(verts)
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if naive_visible(P, verts[i], verts[j]):
                w = math.dist((float(verts[i].x), float(verts[i].y)),
                              (float(verts[j].x), float(verts[j].y)))
                adj[i].append((j, w))
                adj[j].append((i, w))
    best: dict[int, tuple] = {src: (0.0, 0, ())}
    heap = [(0.0, 0, (src,), src)]
    while heap:
        d, hops, path, u = heapq.heappop(heap)
        if u == dst:
            return list(path)
        if best.get(u) != (d, hops, path[:-1]):
            continue
        for v, w in adj[u]:
            cand = (d + w, hops + 1, path)
            if v not in best or cand < best[v]:
                best[v] = cand
                heapq.heappush(heap, (d + w, hops + 1, path + (v,), v))
    raise AssertionError("disconnected visibility graph")


def chain_strictly_concave(points) -> bool:
    return all(orientation(a, b, c) != 0
               for a, b, c in zip(points, points[1:], points[2:]))
