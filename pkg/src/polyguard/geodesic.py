"""Euclidean shortest paths inside a simple polygon.

Paths are computed combinatorially: triangulate once, walk the dual tree
between the triangles containing the endpoints, and narrow a funnel along
the crossed diagonals.  Only exact orientation tests are used, so no
distances are ever compared numerically.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Optional

from .geom import (COLLINEAR, LEFT, RIGHT, Point, Polygon, orientation,
                   triangulate, _point_in_triangle_closed)


class TriangulatedPolygon:
    """A simple polygon with its triangulation and dual adjacency."""

    def __init__(self, P: Polygon):
        if P.holes:
            raise ValueError("geodesics require a simple polygon without holes")
        self.polygon = P
        self.pts = P.outer
        self.triangles = triangulate(P)
        self.neighbors: list[list[int]] = [[] for _ in self.triangles]
        self.shared_edge: dict[tuple[int, int], tuple[int, int]] = {}
        edge_owner: dict[tuple[int, int], int] = {}
        for ti, (a, b, c) in enumerate(self.triangles):
            for u, v in ((a, b), (b, c), (c, a)):
                key = (u, v) if u < v else (v, u)
                if key in edge_owner:
                    tj = edge_owner[key]
                    self.neighbors[ti].append(tj)
                    self.neighbors[tj].append(ti)
                    self.shared_edge[(ti, tj)] = key
                    self.shared_edge[(tj, ti)] = key
                else:
                    edge_owner[key] = ti

    def triangles_containing(self, p: Point) -> list[int]:
        out = []
        for ti, (a, b, c) in enumerate(self.triangles):
            if _point_in_triangle_closed(p, self.pts[a], self.pts[b], self.pts[c]):
                out.append(ti)
        return out


def _dual_path(tp: TriangulatedPolygon, sources: list[int],
               targets: set[int]) -> Optional[list[int]]:
    """Shortest triangle sequence from any source triangle to any target."""
    if not sources or not targets:
        return None
    prev: dict[int, int] = {t: -1 for t in sources}
    queue = deque(sources)
    hit = next((t for t in sources if t in targets), None)
    while queue and hit is None:
        cur = queue.popleft()
        for nxt in tp.neighbors[cur]:
            if nxt in prev:
                continue
            prev[nxt] = cur
            if nxt in targets:
                hit = nxt
                break
            queue.append(nxt)
    if hit is None:
        return None
    path = [hit]
    while prev[path[-1]] != -1:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def geodesic(tp: TriangulatedPolygon, src: Point, dst: Point) -> list[Point]:
    """The unique Euclidean shortest path from src to dst in the polygon.

    Endpoints may be any points of the closed region.  Interior vertices of
    the returned polyline are strictly turning polygon vertices; collinear
    pass-through vertices are omitted.
    """
    if src == dst:
        return [src]
    src_tris = tp.triangles_containing(src)
    dst_tris = set(tp.triangles_containing(dst))
    if not src_tris or not dst_tris:
        raise ValueError("geodesic endpoint lies outside the polygon")
    sleeve = _dual_path(tp, src_tris, dst_tris)
    if sleeve is None:
        raise ValueError("triangulation dual is disconnected")
    if len(sleeve) == 1:
        return [src, dst]

    diagonals: list[tuple[Point, Point]] = []
    for t0, t1 in zip(sleeve, sleeve[1:]):
        i, j = tp.shared_edge[(t0, t1)]
        diagonals.append((tp.pts[i], tp.pts[j]))

    path: list[Point] = [src]
    cusp = src
    funnel = deque([diagonals[0][0], cusp, diagonals[0][1]])
    if orientation(src, diagonals[0][0], diagonals[0][1]) == LEFT:
        funnel.reverse()

    # final pseudo-diagonal pulls the funnel onto the destination
    tail = (diagonals[-1][0], dst)

    for left, right in list(diagonals[1:]) + [tail]:
        if funnel[0] == right or funnel[-1] == left:
            left, right = right, left
        if left == funnel[0]:
            while funnel[-1] != cusp and orientation(funnel[-2], funnel[-1], right) == LEFT:
                funnel.pop()
            if funnel[-1] == cusp:
                while len(funnel) > 1 and orientation(funnel[-1], funnel[-2], right) == LEFT:
                    path.append(funnel.pop())
                cusp = funnel[-1]
            funnel.append(right)
        else:
            while funnel[0] != cusp and orientation(funnel[1], funnel[0], left) == RIGHT:
                funnel.popleft()
            if funnel[0] == cusp:
                while len(funnel) > 1 and orientation(funnel[0], funnel[1], left) == RIGHT:
                    path.append(funnel.popleft())
                cusp = funnel[0]
            funnel.appendleft(left)

    if funnel[0] == dst:
        while funnel[-1] != cusp:
            funnel.pop()
        while funnel:
            path.append(funnel.pop())
    elif funnel[-1] == dst:
        while funnel[0] != cusp:
            funnel.popleft()
        while funnel:
            path.append(funnel.popleft())
    else:
        path.append(cusp)
        path.append(dst)

    return _canonical(path)


def _canonical(path: list[Point]) -> list[Point]:
    """Drop repeated and collinear pass-through interior vertices."""
    out: list[Point] = []
    for p in path:
        if out and out[-1] == p:
            continue
        out.append(p)
    changed = True
    while changed:
        changed = False
        i = 1
        while i < len(out) - 1:
            if orientation(out[i - 1], out[i], out[i + 1]) == COLLINEAR:
                del out[i]
                changed = True
            else:
                i += 1
    return out


class ShortestPathTree:
    """Geodesic tree of a simple polygon rooted at one of its vertices.

    parent[v] is the predecessor of vertex v on the unique geodesic from
    the root; parent of the root is the root itself.  Interior vertices of
    every root-to-v geodesic are reflex.
    """

    def __init__(self, P: Polygon, root: int,
                 tp: Optional[TriangulatedPolygon] = None):
        n = len(P.outer)
        if not (0 <= root < n):
            raise IndexError(f"root index {root} out of range")
        self.polygon = P
        self.root = root
        self.tp = tp if tp is not None else TriangulatedPolygon(P)
        self.paths: list[list[int]] = []
        self.parent: list[int] = []
        index_of = {p: i for i, p in enumerate(P.outer)}
        src = P.outer[root]
        for v in range(n):
            if v == root:
                self.paths.append([root])
                self.parent.append(root)
                continue
            pts_path = geodesic(self.tp, src, P.outer[v])
            idx_path = [index_of[p] for p in pts_path]
            self.paths.append(idx_path)
            self.parent.append(idx_path[-2])

    def path(self, v: int) -> list[int]:
        """Vertex indices of the geodesic root -> v."""
        return self.paths[v]

    def children(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if v != self.root:
                out[p].append(v)
        return out

    def leaves(self) -> set[int]:
        kids = self.children()
        return {v for v in range(len(self.parent)) if not kids[v]}


def shortest_path_tree(P: Polygon, u: int,
                       tp: Optional[TriangulatedPolygon] = None) -> ShortestPathTree:
    return ShortestPathTree(P, u, tp)
