"""Exact weighted-interval covering on a line in near-linear time.

Two objectives over the chosen intervals: minimum membership (largest
weight sum covering any input point) and minimum ply (largest weight sum
covering any point of the line).  Draw a vertical line through every
interval endpoint to cut the line into strips.  Some optimal solution has
no interval nested inside another and never stacks three intervals over
one strip, so a path can record how many chosen intervals span the current
strip: none (v0), one (v1), or an overlapping pair (v2).  The bottleneck
(minimax vertex weight) path from the leftmost to the rightmost strip is
an optimum; for the ply objective the v1/v2 weights simply apply whether
or not the strip holds a point.

The graph has at most 2m+1 v0, (2m-1)+4M v1, and M v2 vertices, with at
most two out-edges each, where M counts overlapping pairs.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import Infeasible, UnsortedInput
from .geom import EventClass, Point, WeightedInterval
from .slabs import CoverSolution
from .stripdag import SideEvent

MODES = ("mmsc", "mpc")

V0, V1, V2 = 0, 1, 2


def _as_x(p):
    return p.x if isinstance(p, Point) else p


@dataclass
class PreparedIntervals:
    intervals: list       # deduplicated, still sorted by right endpoint
    orig_idx: list        # input position of each kept interval
    events: list          # 2 * len(intervals) SideEvents in sweep order
    left_pos: list
    right_pos: list
    reps: list            # one representative point per occupied strip
    rep_strip: list

    @property
    def n_strips(self) -> int:
        return len(self.events) + 1


def prepare_instance(points, intervals) -> PreparedIntervals:
    """Strip layout plus per-strip point dedup.

    Requires points sorted by x and intervals sorted by right endpoint;
    exact duplicate intervals collapse to their minimum-weight copy.
    """
    xs = [_as_x(p) for p in points]
    for a, b in zip(xs, xs[1:]):
        if b < a:
            raise UnsortedInput("points must be sorted by x")
    his = [s.hi for s in intervals]
    for a, b in zip(his, his[1:]):
        if b < a:
            raise UnsortedInput("intervals must be sorted by right endpoint")

    best: dict[tuple, int] = {}
    for i, s in enumerate(intervals):
        key = (s.lo, s.hi)
        cur = best.get(key)
        if cur is None or s.weight < intervals[cur].weight:
            best[key] = i
    keep = sorted(best.values())
    kept = [intervals[i] for i in keep]

    events = []
    for li, s in enumerate(kept):
        events.append(SideEvent(s.lo, EventClass.LEFT_SIDE, 0, li))
        events.append(SideEvent(s.hi, EventClass.RIGHT_SIDE, 0, li))
    events.sort()
    left_pos = [0] * len(kept)
    right_pos = [0] * len(kept)
    for pos, ev in enumerate(events):
        if ev.cls == EventClass.LEFT_SIDE:
            left_pos[ev.obj] = pos
        else:
            right_pos[ev.obj] = pos

    reps, rep_strip = [], []
    last = -1
    for x in xs:
        i = bisect_left(events, (x, EventClass.INPUT_POINT, 0))
        if i != last:
            reps.append(x)
            rep_strip.append(i)
            last = i
    return PreparedIntervals(kept, keep, events, left_pos, right_pos,
                             reps, rep_strip)


@dataclass
class DagVertex:
    kind: int             # V0 / V1 / V2
    strip: int            # entry strip
    q: int = -1
    r: int = -1
    weight: Fraction = Fraction(0)

    @property
    def sort_id(self) -> tuple:
        return (self.strip, self.kind, self.q, self.r)


@dataclass
class IntervalDag:
    vertices: list
    adj: list
    source: Optional[int]
    sink: Optional[int]
    n_intervals: int      # intervals after dedup
    n_overlaps: int       # overlapping pairs among them


def build_dag(prep: PreparedIntervals, mode: str = "mmsc") -> IntervalDag:
    """Vertex-weighted strip graph whose bottleneck path is an optimum."""
    if mode not in MODES:
        raise ValueError("mode must be one of %r" % (MODES,))
    mpc = mode == "mpc"
    ivs = prep.intervals
    events = prep.events
    k = len(events)

    has_point = [False] * (k + 1)
    for i in prep.rep_strip:
        has_point[i] = True
    pref = [0] * (k + 2)
    for i in range(k + 1):
        pref[i + 1] = pref[i] + (1 if has_point[i] else 0)

    def pointed(a, b):  # any occupied strip with index in [a, b]
        return a <= b and pref[b + 1] - pref[a] > 0

    vertices: list[DagVertex] = []
    adj: list[list[int]] = []

    def new_vertex(kind, strip, q=-1, r=-1, weight=Fraction(0)):
        vertices.append(DagVertex(kind, strip, q, r, weight))
        adj.append([])
        return len(vertices) - 1

    n_overlaps = 0
    source = new_vertex(V0, 0) if not has_point[0] else None
    prev_v0 = source
    prev_v1: dict[int, int] = {}
    pending_v2: dict[int, list] = {}
    active: dict[int, None] = {}

    for b, ev in enumerate(events):
        i2 = b + 1
        q0 = ev.obj
        is_left = ev.cls == EventClass.LEFT_SIDE
        if is_left:
            n_overlaps += len(active)
            active[q0] = None
        else:
            del active[q0]

        cur_v0 = new_vertex(V0, i2) if not has_point[i2] else None
        cur_v1 = {}
        for q in active:
            w = ivs[q].weight if (mpc or has_point[i2]) else Fraction(0)
            cur_v1[q] = new_vertex(V1, i2, q=q, weight=w)
        created_v2 = {}
        if is_left:
            for q in active:
                # pair vertex only when q ends before q0 does (no nesting)
                if q != q0 and prep.right_pos[q] < prep.right_pos[q0]:
                    if mpc or pointed(i2, prep.right_pos[q]):
                        w = ivs[q].weight + ivs[q0].weight
                    else:
                        w = Fraction(0)
                    vid = new_vertex(V2, i2, q=q, r=q0, weight=w)
                    created_v2[q] = vid
                    pending_v2.setdefault(q, []).append((vid, q0))

        if is_left:
            if prev_v0 is not None:
                if cur_v0 is not None:
                    adj[prev_v0].append(cur_v0)
                adj[prev_v0].append(cur_v1[q0])
            for q, vid in prev_v1.items():
                adj[vid].append(cur_v1[q])
                pair = created_v2.get(q)
                if pair is not None:
                    adj[vid].append(pair)
        else:
            if prev_v0 is not None and cur_v0 is not None:
                adj[prev_v0].append(cur_v0)
            for q, vid in prev_v1.items():
                if q == q0:
                    if cur_v0 is not None:
                        adj[vid].append(cur_v0)
                else:
                    adj[vid].append(cur_v1[q])
            for vid, r in pending_v2.pop(q0, ()):
                adj[vid].append(cur_v1[r])
        prev_v0, prev_v1 = cur_v0, cur_v1

    sink = prev_v0 if k > 0 else source
    return IntervalDag(vertices, adj, source, sink, len(ivs), n_overlaps)


def bottleneck_path(dag: IntervalDag):
    """Minimax-weight source-to-sink path: (vertex index list, value), or
    None when the sink is unreachable.  Ties prefer the predecessor with
    the lexicographically smaller vertex id."""
    if dag.source is None or dag.sink is None:
        return None
    n = len(dag.vertices)
    best = [None] * n
    pred = [-1] * n
    best[dag.source] = dag.vertices[dag.source].weight
    for u in range(n):  # creation order is topological
        bu = best[u]
        if bu is None:
            continue
        uid = dag.vertices[u].sort_id
        for v in dag.adj[u]:
            w = dag.vertices[v].weight
            cand = bu if bu >= w else w
            bv = best[v]
            if bv is None or cand < bv or (
                    cand == bv and uid < dag.vertices[pred[v]].sort_id):
                best[v] = cand
                pred[v] = u
    if best[dag.sink] is None:
        return None
    path = [dag.sink]
    while path[-1] != dag.source:
        path.append(pred[path[-1]])
    path.reverse()
    return path, best[dag.sink]


def solve_intervals(points, intervals, mode: str = "mmsc") -> CoverSolution:
    """Exact optimum cover by weighted intervals for either objective."""
    prep = prepare_instance(points, intervals)
    dag = build_dag(prep, mode)
    res = bottleneck_path(dag)
    if res is None:
        raise Infeasible("some point lies in no interval")
    path, value = res
    chosen = set()
    for vi in path:
        v = dag.vertices[vi]
        if v.kind == V1:
            chosen.add(v.q)
        elif v.kind == V2:
            chosen.add(v.q)
            chosen.add(v.r)
    return CoverSolution(sorted(prep.orig_idx[q] for q in chosen), value)


def evaluate_objective(points, chosen: Sequence[WeightedInterval],
                       mode: str = "mmsc") -> Fraction:
    """Recompute an objective directly from a chosen set (no graph).

    mmsc: largest weight sum over the input points.  mpc: largest weight
    sum anywhere on the line, which is always attained at some chosen
    interval's left endpoint.
    """
    if mode not in MODES:
        raise ValueError("mode must be one of %r" % (MODES,))
    xs = [_as_x(p) for p in points] if mode == "mmsc" \
        else sorted({s.lo for s in chosen})
    best = Fraction(0)
    for x in xs:
        total = Fraction(0)
        for s in chosen:
            if s.lo <= x <= s.hi:
                total += s.weight
        if total > best:
            best = total
    return best


def count_overlapping_pairs(intervals) -> int:
    """Number of closed-overlap pairs (edges of the interval graph)."""
    events = []
    for i, s in enumerate(intervals):
        events.append((s.lo, EventClass.LEFT_SIDE, 0, i))
        events.append((s.hi, EventClass.RIGHT_SIDE, 0, i))
    events.sort()
    active = 0
    total = 0
    for _, cls, _, _ in events:
        if cls == EventClass.LEFT_SIDE:
            total += active
            active += 1
        else:
            active -= 1
    return total
