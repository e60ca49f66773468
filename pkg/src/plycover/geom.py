"""Geometric primitives shared by every solver.

Points, unit-height rectangles, unit disks, weighted intervals, closed-set
membership tests, and exact maximum-depth (ply) computations.  Rectangles
and intervals carry exact rational coordinates, so all their predicates are
exact sign tests; disks use float coordinates with a small containment
tolerance because their predicates involve square roots.  Every object is a
closed set: a point on the boundary belongs to the object.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Sequence

EPS_COVER = 1e-9
EPS_DISJOINT = 1e-9


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class Point:
    x: object
    y: object


@dataclass(frozen=True)
class UnitRect:
    """Closed axis-aligned rectangle of height exactly 1."""

    left: Fraction
    bottom: Fraction
    width: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "left", _frac(self.left))
        object.__setattr__(self, "bottom", _frac(self.bottom))
        object.__setattr__(self, "width", _frac(self.width))
        if self.width <= 0:
            raise ValueError("rectangle width must be positive")

    @property
    def right(self) -> Fraction:
        return self.left + self.width

    @property
    def top(self) -> Fraction:
        return self.bottom + 1

    def contains(self, p: Point) -> bool:
        return self.left <= p.x <= self.right and self.bottom <= p.y <= self.top


@dataclass(frozen=True)
class UnitDisk:
    """Closed disk of diameter 1."""

    center: Point

    def contains(self, p: Point, eps: float = EPS_COVER) -> bool:
        dx = p.x - self.center.x
        dy = p.y - self.center.y
        r = 0.5 + eps
        return dx * dx + dy * dy <= r * r


@dataclass(frozen=True)
class WeightedInterval:
    """Closed interval [lo, hi] on the line with a nonnegative weight."""

    lo: Fraction
    hi: Fraction
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        object.__setattr__(self, "weight", _frac(self.weight))
        if not self.lo < self.hi:
            raise ValueError("interval needs lo < hi")
        if self.weight < 0:
            raise ValueError("interval weight must be nonnegative")

    def contains(self, x) -> bool:
        if isinstance(x, Point):
            x = x.x
        return self.lo <= x <= self.hi


class EventClass(IntEnum):
    """Sweep order at one x: left sides first, then input points, then right sides."""

    LEFT_SIDE = 0
    INPUT_POINT = 1
    RIGHT_SIDE = 2


@dataclass(frozen=True, order=True)
class EventKey:
    """Lexicographic sweep key (x, class, y).

    Coinciding x-coordinates are resolved symbolically by the class and the
    y tiebreaker instead of any numeric perturbation.
    """

    x: object
    cls: int
    y: object


def _contains(obj, p, eps):
    if isinstance(obj, UnitDisk):
        return obj.contains(p, eps)
    return obj.contains(p)


def membership_at(p, objects: Sequence, weighted: bool = False,
                  eps: float = EPS_COVER):
    """Number (or weight sum) of objects containing p, closed containment."""
    kinds = {type(o) for o in objects}
    if len(kinds) > 1:
        names = sorted(k.__name__ for k in kinds)
        raise ValueError("mixed object kinds: %s" % ", ".join(names))
    total = Fraction(0) if weighted else 0
    for o in objects:
        if _contains(o, p, eps):
            total += getattr(o, "weight", 1) if weighted else 1
    return total


def verify_cover(points, chosen, eps: float = EPS_COVER) -> bool:
    """True iff every point is contained in at least one chosen object."""
    for p in points:
        if not any(_contains(o, p, eps) for o in chosen):
            return False
    return True


def _max_stab_closed(spans) -> int:
    # closed spans: a start sorts before an end at the same coordinate,
    # so abutting spans count as overlapping
    events = []
    for lo, hi in spans:
        events.append((lo, 0))
        events.append((hi, 1))
    events.sort()
    best = cur = 0
    for _, end in events:
        if end:
            cur -= 1
        else:
            cur += 1
            if cur > best:
                best = cur
    return best


def ply_rects(rects: Sequence[UnitRect]) -> int:
    """Exact maximum depth of the closed-rectangle arrangement.

    An x-sweep over the side events; at each event the active rectangles'
    y-spans are reduced to a 1-D maximum stabbing count.  The depth of a
    closed arrangement is attained at some side coordinate pair, so the
    sweep is exact.
    """
    if not rects:
        return 0
    xs = sorted({r.left for r in rects} | {r.right for r in rects})
    best = 0
    for x in xs:
        spans = [(r.bottom, r.top) for r in rects if r.left <= x <= r.right]
        if len(spans) > best:
            best = max(best, _max_stab_closed(spans))
    return best


def rect_depth_within(rects: Sequence[UnitRect], region: UnitRect) -> int:
    """Maximum depth of `rects` over the points of the closed `region`."""
    xs = {region.left, region.right}
    ys = {region.bottom, region.top}
    for r in rects:
        for v in (r.left, r.right):
            if region.left <= v <= region.right:
                xs.add(v)
        for v in (r.bottom, r.top):
            if region.bottom <= v <= region.top:
                ys.add(v)
    best = 0
    for x in xs:
        for y in ys:
            c = 0
            for r in rects:
                if r.left <= x <= r.right and r.bottom <= y <= r.top:
                    c += 1
            if c > best:
                best = c
    return best


def circle_intersections(a: UnitDisk, b: UnitDisk,
                         eps: float = EPS_COVER) -> list[Point]:
    """Intersection points of the two bounding circles (0, 1, or 2 points).

    Pairs within the eps-closed touching distance yield their midpoint, so
    candidate generation matches the eps-tolerant containment test.
    """
    dx = b.center.x - a.center.x
    dy = b.center.y - a.center.y
    d2 = dx * dx + dy * dy
    r = 1.0 + eps
    if d2 == 0.0 or d2 > r * r:
        return []
    d = math.sqrt(d2)
    mx = a.center.x + dx / 2.0
    my = a.center.y + dy / 2.0
    h2 = 0.25 - d2 / 4.0
    if h2 <= 0.0:
        return [Point(mx, my)]
    h = math.sqrt(h2)
    ux = -dy / d * h
    uy = dx / d * h
    return [Point(mx + ux, my + uy), Point(mx - ux, my - uy)]


def _max_membership_disks(disks, cands, eps) -> int:
    best = 0
    for p in cands:
        c = 0
        for d in disks:
            if d.contains(p, eps):
                c += 1
        if c > best:
            best = c
    return best


def ply_disks(disks: Sequence[UnitDisk], eps: float = EPS_COVER) -> int:
    """Maximum depth of the closed-disk arrangement.

    Evaluated at candidate points only: every disk center plus every
    pairwise circle-circle intersection.  The deepest cell is bounded
    either by an arc endpoint (a candidate) or by one full circle whose
    disk lies inside every other disk of the cell, in which case that
    disk's center attains the depth.
    """
    if not disks:
        return 0
    cands = [d.center for d in disks]
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            cands.extend(circle_intersections(disks[i], disks[j], eps))
    return _max_membership_disks(disks, cands, eps)


def disk_depth_within(disks: Sequence[UnitDisk], region: UnitDisk,
                      eps: float = EPS_COVER) -> int:
    """Maximum depth of `disks` over the points of the closed disk `region`."""
    cands = [d.center for d in disks if region.contains(d.center, eps)]
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            for p in circle_intersections(disks[i], disks[j], eps):
                if region.contains(p, eps):
                    cands.append(p)
    return _max_membership_disks(disks, cands, eps)


def disks_disjoint(a: UnitDisk, b: UnitDisk, eps: float = EPS_DISJOINT) -> bool:
    """True iff the closed disks share no point (touching disks overlap)."""
    dx = a.center.x - b.center.x
    dy = a.center.y - b.center.y
    r = 1.0 + eps
    return dx * dx + dy * dy > r * r
