"""Ply-budget cover search for unit disks inside one slab.

Same skeleton as the rectangle solver, with two changes: strips are cut at
the leftmost/rightmost points of disks, and the per-strip cap is 8*ell.
Every disk spanning a strip has its center inside a 1-by-3 box around the
strip's vertical line, and that box is coverable by eight unit disks, so a
ply-ell solution puts at most 8*ell disks across any strip.

Because disk extrema cannot be ordered symbolically the way rectangle
sides can, degenerate x-coordinates are removed up front by a global
rotation instead.
"""
from __future__ import annotations

import math
import random
from typing import Sequence

from .errors import DegenerateInstance
from .geom import (EPS_COVER, EventClass, Point, UnitDisk, disk_depth_within,
                   ply_disks)
from .stripdag import PlyCache, SideEvent, StripProblem, build_problem, search

PER_STRIP_FACTOR = 8

_ROTATION_SEED = 0x1D15C5


def rotate_point(p: Point, angle: float) -> Point:
    if angle == 0.0:
        return p
    c, s = math.cos(angle), math.sin(angle)
    return Point(p.x * c - p.y * s, p.x * s + p.y * c)


def rotate_instance(points, disks, angle: float):
    if angle == 0.0:
        return list(points), list(disks)
    return ([rotate_point(p, angle) for p in points],
            [UnitDisk(rotate_point(d.center, angle)) for d in disks])


def _extrema_xs(points, disks) -> list:
    xs = [x for x, _ in {(p.x, p.y) for p in points}]
    for cx, _ in {(d.center.x, d.center.y) for d in disks}:
        xs.append(cx - 0.5)
        xs.append(cx)
        xs.append(cx + 0.5)
    return xs


def _all_distinct(xs, tol: float) -> bool:
    xs = sorted(xs)
    return all(b - a > tol for a, b in zip(xs, xs[1:]))


def canonical_rotation(points, disks, eps: float = EPS_COVER) -> float:
    """Angle making every point, disk-center, and disk-extremum
    x-coordinate distinct.

    Returns 0 when the input (after collapsing exact duplicates) is already
    in general position; otherwise a deterministic pseudo-random angle in
    (0, pi/4), re-tested up to 32 times.
    """
    tol = 10 * eps
    if _all_distinct(_extrema_xs(points, disks), tol):
        return 0.0
    rng = random.Random(_ROTATION_SEED)
    for _ in range(32):
        angle = rng.uniform(1e-4, math.pi / 4 - 1e-4)
        pts, dks = rotate_instance(points, disks, angle)
        if _all_distinct(_extrema_xs(pts, dks), tol):
            return angle
    raise DegenerateInstance("no rotation separates the x-coordinates")


def disk_side_events(disks: Sequence[UnitDisk]) -> list[SideEvent]:
    """One event per disk extremum, in sweep order."""
    events = []
    for i, d in enumerate(disks):
        events.append(SideEvent(d.center.x - 0.5, EventClass.LEFT_SIDE,
                                d.center.y, i))
        events.append(SideEvent(d.center.x + 0.5, EventClass.RIGHT_SIDE,
                                d.center.y, i))
    events.sort()
    return events


def disk_slab_problem(points, disks, ell: int,
                      eps: float = EPS_COVER) -> StripProblem:
    disks = list(disks)

    def full(members):
        return ply_disks([disks[i] for i in members], eps)

    def added(members, q):
        return disk_depth_within([disks[i] for i in members], disks[q], eps)

    return build_problem(points, disk_side_events(disks),
                         lambda o, p: disks[o].contains(p, eps),
                         PlyCache(full, added), PER_STRIP_FACTOR * ell, ell)


def solve_slab_disks(points, disks, ell: int, eps: float = EPS_COVER):
    """Indices of a cover of the slab points with ply <= ell, or None."""
    return search(disk_slab_problem(points, disks, ell, eps))


def dedupe_disks(disks):
    """Collapse exact duplicates; returns (unique disks, original indices).

    A duplicate disk never helps a minimum-ply or 3-colorable cover, and
    exact coincidences cannot be separated by any rotation.
    """
    seen = set()
    uniq, orig = [], []
    for i, d in enumerate(disks):
        key = (d.center.x, d.center.y)
        if key in seen:
            continue
        seen.add(key)
        uniq.append(d)
        orig.append(i)
    return uniq, orig
