"""Funnels: tangent machinery, vertex-to-point guarding (simple and
optimal), and conflict-free chromatic guarding via the ruler sequence.

A funnel is a polygon with exactly three convex vertices: the two base
corners and the apex.  Chains are stored bottom-up; positions on a chain
are measured chain-parametrically (vertex index plus a fractional offset
along the next edge), which keeps every comparison exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
import heapq
from typing import Optional, Union

from .geom import (COLLINEAR, LEFT, RIGHT, InvalidPolygonError, Point,
                   Polygon, Segment, cross, orientation, segment_in_polygon,
                   validate)

APEX = ("A",)


class NotAFunnelError(ValueError):
    pass


@dataclass(frozen=True)
class ChainPos:
    """A point on a funnel chain: vertex index plus offset toward the next."""

    side: str       # 'L' or 'R'
    index: int      # chain vertex index (0-based, bottom-up)
    t: Fraction     # 0 <= t < 1 offset along edge (index, index+1)
    point: Point

    def pos(self) -> Fraction:
        return Fraction(self.index) + self.t


class Funnel:
    """Two concave chains over a base edge, sharing an apex."""

    def __init__(self, left, right):  # noqa: ANN001
        self.left: list[Point] = [p if isinstance(p, Point) else Point(*p)
                                  for p in left]
        self.right: list[Point] = [p if isinstance(p, Point) else Point(*p)
                                   for p in right]
        self._check()

    def _check(self) -> None:
        L, R = self.left, self.right
        if len(L) < 2 or len(R) < 2:
            raise NotAFunnelError("each chain needs at least two vertices")
        if L[-1] != R[-1]:
            raise NotAFunnelError("chains do not share an apex")
        for chain, reflex_turn in ((L, LEFT), (R, RIGHT)):
            for a, b, c in zip(chain, chain[1:], chain[2:]):
                turn = orientation(a, b, c)
                if turn not in (reflex_turn, COLLINEAR):
                    raise NotAFunnelError(
                        "chain is not concave toward the interior")
        if orientation(L[1], L[0], R[0]) != LEFT:
            raise NotAFunnelError("left base corner is not convex")
        if orientation(L[0], R[0], R[1]) != LEFT:
            raise NotAFunnelError("right base corner is not convex")
        if orientation(R[-2], R[-1], L[-2]) == RIGHT:
            raise NotAFunnelError("apex is not convex")
        diag = validate(self.to_polygon())
        if diag is not None:
            raise NotAFunnelError(f"chains do not bound a simple polygon ({diag})")

    @property
    def apex(self) -> Point:
        return self.left[-1]

    @property
    def k(self) -> int:
        return len(self.left)

    @property
    def m(self) -> int:
        return len(self.right)

    @property
    def n(self) -> int:
        return self.k + self.m - 1

    def to_polygon(self) -> Polygon:
        """CCW ring: l1, r1, ..., apex, ..., l2."""
        ring = [self.left[0]] + self.right + self.left[-2:0:-1]
        return Polygon(ring)

    def ring_index(self, ref: tuple) -> int:
        """Ring position in to_polygon() of a chain reference."""
        if ref == APEX:
            return 1 + (self.m - 1)
        side, i = ref
        if side == "L":
            if i == 0:
                return 0
            if i == self.k - 1:
                return self.m
            return self.m + (self.k - 1 - i)
        if i == self.m - 1:
            return self.m
        return 1 + i

    def chain(self, side: str) -> list[Point]:
        return self.left if side == "L" else self.right

    def ref_point(self, ref: tuple) -> Point:
        if ref == APEX:
            return self.apex
        side, i = ref
        return self.chain(side)[i]

    def mirror_ref(self, ref: tuple) -> tuple:
        """The reference with left and right chains swapped."""
        if ref == APEX:
            return APEX
        side, i = ref
        return ("R" if side == "L" else "L", i)

    def vertex_pos(self, side: str, i: int) -> ChainPos:
        return ChainPos(side, i, Fraction(0), self.chain(side)[i])

    def canonical_ref(self, side: str, i: int) -> tuple:
        chain = self.chain(side)
        if i == len(chain) - 1:
            return APEX
        return (side, i)


def funnel_from_polygon(P: Polygon) -> Funnel:
    """Recognize a funnel: exactly three convex vertices, two sharing the
    base edge; split the boundary into the two concave chains."""
    if P.holes:
        raise NotAFunnelError("funnels are simple polygons")
    diag = validate(P)
    if diag is not None:
        raise InvalidPolygonError(diag)
    ring = [p for _, p in P.ccw_outer()]
    n = len(ring)
    convex = [i for i in range(n)
              if orientation(ring[i - 1], ring[i], ring[(i + 1) % n]) == LEFT]
    if len(convex) != 3:
        raise NotAFunnelError(
            f"a funnel has exactly three convex vertices, found {len(convex)}")
    adjacent = [(a, b) for a in convex for b in convex
                if (a + 1) % n == b]
    if not adjacent:
        raise NotAFunnelError("no two convex vertices share an edge")
    a, b = min(adjacent)          # base edge a -> b in ccw order
    apex = next(i for i in convex if i not in (a, b))
    # ccw ring: base (a -> b), right chain b..apex, left chain apex..a
    right = []
    i = b
    while i != apex:
        right.append(ring[i])
        i = (i + 1) % n
    right.append(ring[apex])
    left = [ring[a]]
    i = (apex + 1) % n
    chunk = []
    while i != a:
        chunk.append(ring[i])
        i = (i + 1) % n
    left.extend(reversed(chunk))
    left.append(ring[apex])
    return Funnel(left=left, right=right)


# --- tangents --------------------------------------------------------------


def upseg(F: Funnel, side: str, i: int) -> "Chord":
    """The barrier segment induced by the upper tangent at chain vertex i.

    The tangent ray starts at vertex i through vertex i+1; the barrier runs
    from vertex i+1 to the ray's exact intersection with the opposite
    chain, clamped to the apex when the ray exits above it.
    """
    chain = F.chain(side)
    if i >= len(chain) - 1:
        raise ValueError("upseg is undefined at the apex")
    a, b = chain[i], chain[i + 1]
    other = F.right if side == "L" else F.left
    other_side = "R" if side == "L" else "L"
    hit: Optional[ChainPos] = None
    hit_t: Optional[Fraction] = None
    for j in range(len(other) - 1):
        c, d = other[j], other[j + 1]
        d1 = cross(a, b, c)
        d2 = cross(a, b, d)
        if d1 == d2:
            continue
        u = d1 / (d1 - d2)
        if not (0 <= u <= 1):
            continue
        p = Point(c.x + u * (d.x - c.x), c.y + u * (d.y - c.y))
        t = _ray_param(a, b, p)
        if t <= 0:
            continue
        if u == 1:
            cp = ChainPos(other_side, j + 1, Fraction(0), d)
        else:
            cp = ChainPos(other_side, j, u, p)
        if hit_t is None or t < hit_t:
            hit, hit_t = cp, t
    if hit is None:
        hit = ChainPos(other_side, len(other) - 1, Fraction(0), F.apex)
    if side == "L":
        left_end = ChainPos("L", i + 1, Fraction(0), b)
        return Chord(left=left_end, right=hit)
    right_end = ChainPos("R", i + 1, Fraction(0), b)
    return Chord(left=hit, right=right_end)


def _ray_param(a: Point, b: Point, p: Point) -> Fraction:
    d = b - a
    if d.x != 0:
        return (p.x - a.x) / d.x
    return (p.y - a.y) / d.y


@dataclass(frozen=True)
class Chord:
    """A straight barrier with one end on each chain."""

    left: ChainPos
    right: ChainPos

    def segments(self) -> list[tuple[Point, Point]]:
        if self.left.point == self.right.point:
            return []
        return [(self.left.point, self.right.point)]

    def reaches_apex(self, F: Funnel) -> bool:
        return self.left.point == F.apex or self.right.point == F.apex


@dataclass(frozen=True)
class Vee:
    """A two-segment barrier (the upper envelope of two crossing chords)."""

    left: ChainPos
    right: ChainPos
    valley: Point

    def segments(self) -> list[tuple[Point, Point]]:
        out = []
        if self.left.point != self.valley:
            out.append((self.left.point, self.valley))
        if self.right.point != self.valley:
            out.append((self.valley, self.right.point))
        return out

    def reaches_apex(self, F: Funnel) -> bool:
        return (self.left.point == F.apex or self.right.point == F.apex
                or self.valley == F.apex)


Barrier = Union[Chord, Vee]


def combine_upsegs(F: Funnel, c_left: Chord, c_right: Chord) -> Barrier:
    """Barrier covered jointly by a left-chain and a right-chain guard:
    the upper envelope of their upsegs (a vee if they cross)."""
    inter = _chord_intersection(c_left, c_right)
    if inter is not None:
        return Vee(left=c_right.left, right=c_left.right, valley=inter)
    # disjoint: one chord lies entirely above the other
    if (c_left.left.pos() >= c_right.left.pos()
            and c_left.right.pos() >= c_right.right.pos()):
        return c_left
    return c_right


def _chord_intersection(c1: Chord, c2: Chord) -> Optional[Point]:
    a, b = c1.left.point, c1.right.point
    c, d = c2.left.point, c2.right.point
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    if d1 == d2 or d3 == d4:
        return None
    t = d1 / (d1 - d2)
    u = d3 / (d3 - d4)
    if 0 <= t <= 1 and 0 <= u <= 1:
        return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
    return None


def sees_whole_barrier(F: Funnel, poly: Polygon, v: Point, s: Barrier) -> bool:
    """Whether vertex v sees every point of the barrier: each barrier
    segment must span a closed triangle with v inside the funnel."""
    for (a, b) in s.segments():
        if not _triangle_in_polygon(poly, v, a, b):
            return False
    segs = s.segments()
    if not segs:     # degenerate barrier collapsed to a point
        pt_ = s.left.point
        if v != pt_ and not segment_in_polygon(Segment(v, pt_), poly):
            return False
    return True


def _triangle_in_polygon(P: Polygon, a: Point, b: Point, c: Point) -> bool:
    from .geom import _point_in_triangle_closed
    if orientation(a, b, c) == COLLINEAR:
        corners = [p for p in (a, b, c)]
        lo = min(corners)
        hi = max(corners)
        if lo == hi:
            return True
        return segment_in_polygon(Segment(lo, hi), P)
    tri = (a, b, c) if orientation(a, b, c) == LEFT else (a, c, b)
    for (p, q) in ((a, b), (b, c), (c, a)):
        if p != q and not segment_in_polygon(Segment(p, q), P):
            return False
    for w in P.outer:
        if w in (a, b, c):
            continue
        if _strictly_in_triangle(w, *tri):
            return False
    return True


def _strictly_in_triangle(q: Point, a: Point, b: Point, c: Point) -> bool:
    return (orientation(a, b, q) == LEFT and orientation(b, c, q) == LEFT
            and orientation(c, a, q) == LEFT)


# --- the guarding digraph ---------------------------------------------------


XKEY = ("x",)
YKEY = ("y",)


class _GuardGraph:
    def __init__(self, F: Funnel, with_pairs: bool):
        self.F = F
        self.poly = F.to_polygon()
        self.with_pairs = with_pairs
        self.barriers: dict[tuple, Barrier] = {}
        self.edges: dict[tuple, list[tuple[tuple, int]]] = {}
        self._upseg_cache: dict[tuple[str, int], Chord] = {}
        self._build()

    def _upseg(self, side: str, i: int) -> Chord:
        key = (side, i)
        if key not in self._upseg_cache:
            self._upseg_cache[key] = upseg(self.F, side, i)
        return self._upseg_cache[key]

    def _barrier_of(self, key: tuple) -> Barrier:
        F = self.F
        if key == XKEY:
            return Chord(left=F.vertex_pos("L", 0), right=F.vertex_pos("R", 0))
        if key[0] == "P":
            _, i, j = key
            return combine_upsegs(F, self._upseg("L", i), self._upseg("R", j))
        if key == APEX:
            raise AssertionError("apex barrier is never expanded")
        side, i = key
        return self._upseg(side, i)

    def _candidate_single(self, side: str, s: Barrier) -> tuple:
        F = self.F
        end = s.left if side == "L" else s.right
        i = end.index
        chain = F.chain(side)
        top = len(chain) - 1
        if i + 1 <= top and sees_whole_barrier(F, self.poly, chain[i + 1], s):
            i2 = i + 1
        else:
            i2 = i
        return F.canonical_ref(side, i2)

    def _candidate_pair(self, s: Barrier) -> Optional[tuple]:
        F = self.F
        q, p = s.left, s.right
        i2 = self._topmost_strictly_below("L", self._extended_upseg(p))
        j2 = self._topmost_strictly_below("R", self._extended_upseg(q))
        if i2 is None or j2 is None:
            return None
        return ("P", i2, j2)

    def _extended_upseg(self, cp: ChainPos) -> Chord:
        """upseg extended to arbitrary chain points: interior points of an
        edge inherit the upseg of the edge's lower vertex."""
        return self._upseg(cp.side, cp.index)

    def _topmost_strictly_below(self, side: str, chord: Chord) -> Optional[int]:
        end = chord.left if side == "L" else chord.right
        if end.t > 0:
            i = end.index
        else:
            i = end.index - 1
        if i < 0:
            return None
        top = len(self.F.chain(side)) - 2   # the apex never joins a pair
        return min(i, top) if min(i, top) >= 0 else None

    def _build(self) -> None:
        F = self.F
        self.barriers[XKEY] = self._barrier_of(XKEY)
        queue = deque([XKEY])
        seen = {XKEY}
        while queue:
            t = queue.popleft()
            s = self.barriers[t]
            cands = []
            cands.append((self._candidate_single("L", s), 1))
            cands.append((self._candidate_single("R", s), 1))
            if self.with_pairs:
                pair = self._candidate_pair(s)
                if pair is not None:
                    cands.append((pair, 2))
            out = self.edges.setdefault(t, [])
            added = set()
            for key, w in cands:
                if key in added:
                    continue
                added.add(key)
                out.append((key, w))
                if key == APEX:
                    apex_out = self.edges.setdefault(key, [])
                    if (YKEY, 0) not in apex_out:
                        apex_out.append((YKEY, 0))
                    continue
                if key not in self.barriers:
                    self.barriers[key] = self._barrier_of(key)
                b = self.barriers[key]
                if b.reaches_apex(F):
                    self.edges.setdefault(key, [])
                    if (YKEY, 0) not in self.edges[key]:
                        self.edges[key].append((YKEY, 0))
                elif key not in seen:
                    seen.add(key)
                    queue.append(key)

    def _node_rank(self, key: tuple) -> tuple:
        """Tie-break rank: prefer higher guards (the greedy top-most rule),
        then the left chain.  Height is measured exactly as twice the area
        over the base edge, which is monotone in the canonical orientation."""
        F = self.F
        base_l, base_r = F.left[0], F.right[0]

        def h(p: Point) -> Fraction:
            return cross(base_l, base_r, p)

        if key == APEX:
            return (-h(F.apex), 0, 10 ** 9, -1)
        if key[0] == "P":
            _, i, j = key
            return (-min(h(F.left[i]), h(F.right[j])), 2, i, j)
        side, i = key
        p = F.chain(side)[i]
        return (-h(p), 0 if side == "L" else 1, i, -1)

    def shortest_path(self) -> list[tuple]:
        """Deterministic min-weight x->y path.  Ties between equal-weight
        paths go to the one whose guards sit higher in the funnel."""
        dist: dict[tuple, tuple] = {XKEY: (0, ())}
        ranked_path: dict[tuple, tuple] = {XKEY: ()}
        heap = [(0, (), (), XKEY)]
        while heap:
            d, rank, path, node = heapq.heappop(heap)
            if node == YKEY:
                return list(path)
            if dist.get(node) != (d, rank):
                continue
            for succ, w in self.edges.get(node, []):
                succ_rank = () if succ == YKEY else (self._node_rank(succ),)
                cand = (d + w, rank + succ_rank)
                if succ not in dist or cand < dist[succ]:
                    dist[succ] = cand
                    heapq.heappush(heap, (cand[0], cand[1],
                                          path + (succ,), succ))
        raise AssertionError("guard digraph has no x->y path")


def _expand_path(path: list[tuple]) -> list[tuple]:
    """Path nodes to guard references, expanding pair nodes."""
    guards: list[tuple] = []
    for key in path:
        if key == YKEY:
            continue
        if key[0] == "P":
            _, i, j = key
            guards.append(("L", i))
            guards.append(("R", j))
        else:
            guards.append(key)
    return guards


def guard_funnel_simple(F: Funnel) -> list[tuple]:
    """Bottom-up guard set covering every point of the funnel (may exceed
    the optimum by at most one guard)."""
    g = _GuardGraph(F, with_pairs=False)
    return _expand_path(g.shortest_path())


def guard_funnel_optimal(F: Funnel) -> list[tuple]:
    """Minimum-cardinality vertex guard set covering the funnel (single
    steps of weight 1, left+right pair steps of weight 2)."""
    g = _GuardGraph(F, with_pairs=True)
    return _expand_path(g.shortest_path())


# --- conflict-free coloring -------------------------------------------------


def ruler_color(t: int) -> list[int]:
    """First t terms of the ruler sequence: term i is the exponent of the
    largest power of two dividing 2i.  Every contiguous window of the
    sequence has a unique maximum."""
    if t < 0:
        raise ValueError("t must be non-negative")
    out = []
    for i in range(1, t + 1):
        v = 2 * i
        out.append((v & -v).bit_length() - 1)
    return out


def cf_color_funnel(F: Funnel) -> list[tuple[tuple, int]]:
    """Conflict-free chromatic guarding of a funnel: the simple guard set,
    colored bottom-up by the ruler sequence.  Uses at most OPT+4 colors."""
    guards = guard_funnel_simple(F)
    colors = ruler_color(len(guards))
    return list(zip(guards, colors))
