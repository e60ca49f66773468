"""Independent exact solvers used to cross-check the production ones.

Branch-and-bound minimum ply cover, exhaustive 3-colorable cover search,
subset enumeration for weighted intervals, and a dense-grid depth sampler
for disks.  Size caps keep full test sweeps fast; instances above a cap
are refused rather than solved slowly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import Infeasible, InstanceTooLarge
from .geom import (EPS_COVER, EPS_DISJOINT, Point, UnitDisk,
                   disk_depth_within, disks_disjoint, ply_disks, ply_rects,
                   rect_depth_within)

MAX_MIN_PLY = 20
MAX_3COLOR = 12
MAX_INTERVALS = 12


def _as_x(p):
    return p.x if isinstance(p, Point) else p


def _cover_masks(points, objects, contains):
    masks = []
    for o in objects:
        m = 0
        for pi, p in enumerate(points):
            if contains(o, p):
                m |= 1 << pi
        masks.append(m)
    return masks


def _suffix_or(masks):
    out = [0] * (len(masks) + 1)
    for i in range(len(masks) - 1, -1, -1):
        out[i] = out[i + 1] | masks[i]
    return out


def exact_min_ply(points, objects, kind, eps: float = EPS_COVER):
    """Exact minimum ply cover by branch and bound: (opt, chosen indices).

    Prunes a branch once its partial ply reaches the incumbent (ply never
    decreases when objects are added) or once the remaining objects cannot
    complete the cover.
    """
    if kind not in ("rects", "disks"):
        raise ValueError("kind must be 'rects' or 'disks'")
    if len(objects) > MAX_MIN_PLY:
        raise InstanceTooLarge("at most %d objects" % MAX_MIN_PLY)
    points = list(points)
    objects = list(objects)
    if kind == "rects":
        def contains(o, p):
            return o.contains(p)

        def added_depth(objs, q):
            return rect_depth_within(objs, q)
    else:
        def contains(o, p):
            return o.contains(p, eps)

        def added_depth(objs, q):
            return disk_depth_within(objs, q, eps)

    n, m = len(points), len(objects)
    full = (1 << n) - 1
    masks = _cover_masks(points, objects, contains)
    union = 0
    for v in masks:
        union |= v
    if union != full:
        raise Infeasible("some point is covered by no object")
    suffix = _suffix_or(masks)

    best = [None, None]
    chosen: list[int] = []
    chosen_objs: list = []

    def rec(i, covered, cur_ply):
        if best[0] is not None and cur_ply >= best[0]:
            return
        if covered == full:
            best[0] = cur_ply
            best[1] = list(chosen)
            return
        if i == m or (covered | suffix[i]) != full:
            return
        obj = objects[i]
        new_ply = max(cur_ply, added_depth(chosen_objs + [obj], obj))
        if best[0] is None or new_ply < best[0]:
            chosen.append(i)
            chosen_objs.append(obj)
            rec(i + 1, covered | masks[i], new_ply)
            chosen.pop()
            chosen_objs.pop()
        rec(i + 1, covered, cur_ply)

    rec(0, 0, 0)
    return best[0], best[1]


def exhaustive_min_ply(points, objects, kind, eps: float = EPS_COVER):
    """Unpruned full enumeration; cross-check for exact_min_ply."""
    if len(objects) > 16:
        raise InstanceTooLarge("at most 16 objects for full enumeration")
    points = list(points)
    objects = list(objects)
    m = len(objects)
    if kind == "rects":
        def contains(o, p):
            return o.contains(p)

        def ply_of(objs):
            return ply_rects(objs)
    else:
        def contains(o, p):
            return o.contains(p, eps)

        def ply_of(objs):
            return ply_disks(objs, eps)

    n = len(points)
    full = (1 << n) - 1
    masks = _cover_masks(points, objects, contains)
    best = None
    for mask in range(1 << m):
        covered = 0
        for i in range(m):
            if mask >> i & 1:
                covered |= masks[i]
        if covered != full:
            continue
        subset = [i for i in range(m) if mask >> i & 1]
        cand = (ply_of([objects[i] for i in subset]), subset)
        if best is None or cand < best:
            best = cand
    if best is None:
        raise Infeasible("some point is covered by no object")
    return best


def exact_3color_cover(points, disks, eps_cover: float = EPS_COVER,
                       eps_disjoint: float = EPS_DISJOINT):
    """Covering subset split into three pairwise-disjoint classes, or None.

    Searches over covering subsets together with proper 3-colorings of
    their intersection graphs; extending a partial coloring can never fix
    a conflict, so conflicting branches are cut immediately.
    """
    if len(disks) > MAX_3COLOR:
        raise InstanceTooLarge("at most %d disks" % MAX_3COLOR)
    points = list(points)
    disks = list(disks)
    n, m = len(points), len(disks)
    full = (1 << n) - 1
    masks = _cover_masks(points, disks,
                         lambda o, p: o.contains(p, eps_cover))
    union = 0
    for v in masks:
        union |= v
    if union != full:
        return None
    conflict = [[not disks_disjoint(a, b, eps_disjoint) for b in disks]
                for a in disks]
    suffix = _suffix_or(masks)
    cols: tuple[list, list, list] = ([], [], [])
    out = [None]

    def rec(i, covered):
        if covered == full:
            out[0] = tuple(tuple(c) for c in cols)
            return True
        if i == m or (covered | suffix[i]) != full:
            return False
        row = conflict[i]
        seen_empty = False
        for a in range(3):
            c = cols[a]
            if not c:
                if seen_empty:
                    break
                seen_empty = True
            if all(not row[j] for j in c):
                c.append(i)
                if rec(i + 1, covered | masks[i]):
                    return True
                c.pop()
        return rec(i + 1, covered)

    rec(0, 0)
    return out[0]


def exact_intervals(points, intervals, mode: str = "mmsc"):
    """Exact optimum over all covering subsets: (objective, chosen indices).

    The membership objective is evaluated at the input points; the ply
    objective at every interval left endpoint, where the maximum depth of
    closed intervals is always attained.
    """
    if mode not in ("mmsc", "mpc"):
        raise ValueError("mode must be 'mmsc' or 'mpc'")
    if len(intervals) > MAX_INTERVALS:
        raise InstanceTooLarge("at most %d intervals" % MAX_INTERVALS)
    xs = [_as_x(p) for p in points]
    intervals = list(intervals)
    n, m = len(xs), len(intervals)
    full = (1 << n) - 1
    masks = _cover_masks(xs, intervals, lambda o, x: o.contains(x))
    union = 0
    for v in masks:
        union |= v
    if union != full:
        raise Infeasible("some point lies in no interval")
    suffix = _suffix_or(masks)

    eval_xs = xs if mode == "mmsc" else sorted({s.lo for s in intervals})
    incid = [[e for e, x in enumerate(eval_xs) if s.contains(x)]
             for s in intervals]

    memb = [Fraction(0)] * len(eval_xs)
    best = [None, None]
    chosen: list[int] = []

    def rec(i, covered, cur_obj):
        if best[0] is not None and cur_obj >= best[0]:
            return
        if covered == full:
            best[0] = cur_obj
            best[1] = list(chosen)
            return
        if i == m or (covered | suffix[i]) != full:
            return
        w = intervals[i].weight
        new_obj = cur_obj
        for e in incid[i]:
            memb[e] += w
            if memb[e] > new_obj:
                new_obj = memb[e]
        if best[0] is None or new_obj < best[0]:
            chosen.append(i)
            rec(i + 1, covered | masks[i], new_obj)
            chosen.pop()
        for e in incid[i]:
            memb[e] -= w
        rec(i + 1, covered, cur_obj)

    rec(0, 0, Fraction(0))
    if best[0] is None:
        raise Infeasible("some point lies in no interval")
    return best[0], best[1]


def grid_depth_disks(disks: Sequence[UnitDisk], pitch: float = 0.01,
                     eps: float = EPS_COVER) -> int:
    """Dense-grid depth sampler; never exceeds the true ply."""
    if not disks:
        return 0
    cx = [d.center.x for d in disks]
    cy = [d.center.y for d in disks]
    xs = np.arange(min(cx) - 0.5 - pitch, max(cx) + 0.5 + 2 * pitch, pitch)
    ys = np.arange(min(cy) - 0.5 - pitch, max(cy) + 0.5 + 2 * pitch, pitch)
    gx, gy = np.meshgrid(xs, ys)
    counts = np.zeros(gx.shape, dtype=np.int32)
    r2 = (0.5 + eps) ** 2
    for d in disks:
        counts += (gx - d.center.x) ** 2 + (gy - d.center.y) ** 2 <= r2
    return int(counts.max())
