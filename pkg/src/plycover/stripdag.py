"""Reachable-state search over the strip-transition graph inside one slab.

The plane restricted to a height-2 slab is cut into vertical strips by the
object side events.  A search state is (strip index, Q) where Q is the
sorted tuple of candidate object indices intersecting that strip.  Crossing
a boundary (exactly one side event) either keeps Q, drops the object whose
right side sits on the boundary, or adds the object whose left side does.
A successor survives only if it covers the next strip's points, keeps ply
within the budget, and respects the per-strip cardinality cap.  States are
memoized per strip, so only the reachable part of the graph is ever built.
"""
from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .geom import EventClass


class SideEvent(NamedTuple):
    x: object
    cls: int
    y: object
    obj: int


class StripState(NamedTuple):
    strip: int
    members: tuple


def merge_member(members: tuple, q: int) -> tuple:
    out = list(members)
    insort(out, q)
    return tuple(out)


class PlyCache:
    """Memoized exact ply per member tuple.

    Additions reuse the cached parent value: adding one object can create
    new depth only inside that object, so only that region is rechecked.
    Member sets first produced by a removal are computed in full on demand,
    because the parent's value is only an upper bound for them.
    """

    def __init__(self, full: Callable[[tuple], int],
                 added_depth: Callable[[tuple, int], int]):
        self._full = full
        self._added = added_depth
        self._vals = {(): 0}

    def value(self, members: tuple) -> int:
        v = self._vals.get(members)
        if v is None:
            v = self._vals[members] = self._full(members)
        return v

    def with_added(self, members: tuple, q: int) -> int:
        key = merge_member(members, q)
        v = self._vals.get(key)
        if v is None:
            v = max(self.value(members), self._added(key, q))
            self._vals[key] = v
        return v


@dataclass
class StripProblem:
    events: list                       # sorted SideEvents; k of them
    strip_points: list                 # k + 1 per-strip point lists
    covers: Callable                   # (object index, point) -> bool
    ply: PlyCache
    cap: int                           # max objects per strip (3*ell or 8*ell)
    ell: int


def locate_strip_points(points, events) -> list:
    """Group points into strips; strip i lies between events i-1 and i."""
    strip_points = [[] for _ in range(len(events) + 1)]
    for p in points:
        i = bisect_left(events, (p.x, EventClass.INPUT_POINT, p.y))
        strip_points[i].append(p)
    return strip_points


def build_problem(points, events, covers, ply, cap, ell) -> StripProblem:
    events = sorted(events)
    return StripProblem(events, locate_strip_points(points, events),
                        covers, ply, cap, ell)


def _covers_all(problem, members, pts) -> bool:
    covers = problem.covers
    for p in pts:
        for o in members:
            if covers(o, p):
                break
        else:
            return False
    return True


def successors(problem: StripProblem, state: StripState) -> list[StripState]:
    """Valid states one strip to the right of `state`."""
    ev = problem.events[state.strip]
    q = ev.obj
    members = state.members
    if ev.cls == EventClass.LEFT_SIDE:
        cands = [(members, False)]
        if len(members) < problem.cap:
            cands.append((merge_member(members, q), True))
    elif q in members:
        cands = [(tuple(m for m in members if m != q), False)]
    else:
        cands = [(members, False)]
    nxt = state.strip + 1
    pts = problem.strip_points[nxt]
    out = []
    for cand, added in cands:
        if pts and not _covers_all(problem, cand, pts):
            continue
        if added and problem.ply.with_added(members, q) > problem.ell:
            continue
        out.append(StripState(nxt, cand))
    return out


def _merge_union(union: tuple, members: tuple) -> tuple:
    if not members:
        return union
    s = set(union)
    s.update(members)
    if len(s) == len(union):
        return union
    return tuple(sorted(s))


def search(problem: StripProblem):
    """Forward search source -> sink; the chosen index union, or None.

    Among all state sequences the per-state union is propagated greedily
    keeping the lexicographically smallest candidate, which makes the
    output deterministic and biased toward small indices.
    """
    if problem.strip_points[0]:
        return None  # a point left of every object side is uncoverable here
    if not problem.events:
        return []
    states = {(): ()}
    for i in range(len(problem.events)):
        nxt = {}
        for members in sorted(states):
            union = states[members]
            for succ in successors(problem, StripState(i, members)):
                u = _merge_union(union, succ.members)
                cur = nxt.get(succ.members)
                if cur is None or u < cur:
                    nxt[succ.members] = u
        if not nxt:
            return None
        states = nxt
    union = states.get(())
    return None if union is None else list(union)
