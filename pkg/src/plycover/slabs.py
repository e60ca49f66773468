"""Height-2 slab decomposition and the global ply-budget iteration.

Points fall in exactly one slab and every unit-height object intersects at
most two consecutive slabs, so the union of per-slab covers at budget ell
has ply at most 2*ell.  Iterating ell upward and returning on the first
budget at which every slab succeeds gives a 2-approximation, since the
restriction of an optimal cover solves each slab at the optimum budget.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import disks as _disks
from . import rects as _rects
from .errors import BudgetExceeded, Infeasible
from .geom import EPS_COVER, membership_at, ply_disks, ply_rects

SLAB_HEIGHT = 2

_BOUNDARY_TOL = 1e-7  # float slack when testing extrema against boundaries


@dataclass(frozen=True)
class SlabInstance:
    index: int
    y_lo: object
    y_hi: object
    points: list
    objects: list  # indices into the global object list


@dataclass
class CoverSolution:
    chosen: list
    objective: object
    colors: Optional[dict] = None


def _critical_ys(points, objects, kind) -> list:
    ys = [p.y for p in points]
    if kind == "rects":
        for r in objects:
            ys.append(r.bottom)
            ys.append(r.top)
    else:
        for d in objects:
            ys.append(d.center.y - 0.5)
            ys.append(d.center.y + 0.5)
    return ys


def slab_offset(points, objects, kind):
    """Grid offset putting no point or object extremum on a slab boundary.

    Candidates sit just below the lowest critical y (shift k/(8(C+1)) for
    k = 1..C+1, all below 1/8), so any instance spanning less than 15/8
    stays in a single slab.  The C+1 candidates are pairwise distinct
    modulo the slab height and at most C residues are bad, so the smallest
    shift that works exists; it is returned.
    """
    ys = _critical_ys(points, objects, kind)
    exact = kind == "rects"
    if not ys:
        return Fraction(0) if exact else 0.0
    n = len(ys)
    base = min(ys)
    for k in range(1, n + 2):
        if exact:
            cand = base - Fraction(k, 8 * (n + 1))
            if all((y - cand) % 2 != 0 for y in ys):
                return cand
        else:
            cand = float(base) - k / (8.0 * (n + 1))
            ok = True
            for y in ys:
                r = (y - cand) % 2.0
                if r < _BOUNDARY_TOL or r > 2.0 - _BOUNDARY_TOL:
                    ok = False
                    break
            if ok:
                return cand
    raise AssertionError("no valid slab offset among %d candidates" % (n + 1))


def assign_slabs(points, objects, kind) -> list[SlabInstance]:
    """Partition points into height-2 slabs; attach the objects each slab
    intersects.  Only slabs containing at least one point are returned."""
    if kind not in ("rects", "disks"):
        raise ValueError("kind must be 'rects' or 'disks'")
    off = slab_offset(points, objects, kind)
    by_slab: dict[int, list] = {}
    for p in points:
        j = math.floor((p.y - off) / 2)
        by_slab.setdefault(j, []).append(p)
    spans = []
    for o in objects:
        if kind == "rects":
            spans.append((o.bottom, o.top))
        else:
            spans.append((o.center.y - 0.5, o.center.y + 0.5))
    out = []
    for j in sorted(by_slab):
        lo = off + SLAB_HEIGHT * j
        hi = off + SLAB_HEIGHT * (j + 1)
        idxs = [i for i, (ylo, yhi) in enumerate(spans)
                if yhi > lo and ylo < hi]
        out.append(SlabInstance(j, lo, hi, by_slab[j], idxs))
    return out


def solve_mpc(points, objects, kind, ell_max: Optional[int] = None,
              eps: float = EPS_COVER) -> CoverSolution:
    """2-approximate minimum ply cover for unit-height rectangles or disks.

    Raises Infeasible when some point is covered by no object, and
    BudgetExceeded when ell_max is hit first.  Without ell_max the
    iteration stops at the ply of the full object set, which always
    suffices once coverage holds.
    """
    if kind not in ("rects", "disks"):
        raise ValueError("kind must be 'rects' or 'disks'")
    points = list(points)
    objects = list(objects)
    if not points:
        return CoverSolution([], 0)
    for p in points:
        if membership_at(p, objects, eps=eps) == 0:
            raise Infeasible("point %r is covered by no object" % (p,))

    if kind == "rects":
        solve_points, solve_objects = points, objects
        orig = list(range(len(objects)))
        ply_fn = ply_rects

        def slab_solve(pts, objs, ell):
            return _rects.solve_slab_rects(pts, objs, ell)
    else:
        uniq, orig = _disks.dedupe_disks(objects)
        angle = _disks.canonical_rotation(points, uniq, eps)
        solve_points, solve_objects = _disks.rotate_instance(points, uniq, angle)

        def ply_fn(objs):
            return ply_disks(objs, eps)

        def slab_solve(pts, objs, ell):
            return _disks.solve_slab_disks(pts, objs, ell, eps)

    slabs = assign_slabs(solve_points, solve_objects, kind)
    base = objects if kind == "rects" else [objects[i] for i in orig]
    cap = ell_max if ell_max is not None else max(1, ply_fn(base))

    for ell in range(1, cap + 1):
        union: set[int] = set()
        for slab in slabs:
            objs = [solve_objects[i] for i in slab.objects]
            res = slab_solve(slab.points, objs, ell)
            if res is None:
                union = None
                break
            union.update(slab.objects[i] for i in res)
        if union is not None:
            chosen = sorted(orig[i] for i in union)
            return CoverSolution(chosen, ply_fn([objects[i] for i in chosen]))
    raise BudgetExceeded("no cover found within ply budget %d" % cap)
