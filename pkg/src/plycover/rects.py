"""Ply-budget cover search for unit-height rectangles inside one slab.

No more than 3*ell rectangles of a ply-ell solution can intersect a single
strip: a vertical line through the strip meets the slab in a segment of
length 2, and every rectangle spanning the strip contains its top, middle,
or bottom point.
"""
from __future__ import annotations

from typing import Sequence

from .geom import EventClass, Point, UnitRect, ply_rects, rect_depth_within
from .stripdag import (PlyCache, SideEvent, StripProblem, StripState,
                       build_problem, search, successors)

__all__ = ["build_strips_rects", "rect_slab_problem", "solve_slab_rects",
           "successors", "StripState", "PER_STRIP_FACTOR"]

PER_STRIP_FACTOR = 3


def build_strips_rects(rects: Sequence[UnitRect]) -> list[SideEvent]:
    """Strip boundaries: one event per rectangle side, in sweep order."""
    events = []
    for i, r in enumerate(rects):
        events.append(SideEvent(r.left, EventClass.LEFT_SIDE, r.bottom, i))
        events.append(SideEvent(r.right, EventClass.RIGHT_SIDE, r.bottom, i))
    events.sort()
    return events


def rect_slab_problem(points: Sequence[Point], rects: Sequence[UnitRect],
                      ell: int) -> StripProblem:
    rects = list(rects)

    def full(members):
        return ply_rects([rects[i] for i in members])

    def added(members, q):
        return rect_depth_within([rects[i] for i in members], rects[q])

    return build_problem(points, build_strips_rects(rects),
                         lambda o, p: rects[o].contains(p),
                         PlyCache(full, added), PER_STRIP_FACTOR * ell, ell)


def solve_slab_rects(points: Sequence[Point], rects: Sequence[UnitRect],
                     ell: int):
    """Indices of a cover of the slab points with ply <= ell, or None."""
    return search(rect_slab_problem(points, rects, ell))
