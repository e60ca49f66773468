"""Instance file format (line-delimited JSON) and seeded random generators.

Rational coordinates are serialized as "p/q" strings so files round-trip
losslessly; disk coordinates stay floats.  Generated points are covered by
construction unless explicitly allowed to be uncovered.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geom import Point, UnitDisk, UnitRect, WeightedInterval

KINDS = ("rects", "disks", "intervals")
DISTRIBUTIONS = ("uniform", "clustered", "slab-stress", "chain")


@dataclass
class Instance:
    kind: str
    points: list
    objects: list
    seed: Optional[int] = None
    meta: Optional[dict] = None


def _enc(v) -> str:
    return str(v if isinstance(v, Fraction) else Fraction(v))


def _jline(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps(inst: Instance) -> str:
    head = {"kind": inst.kind}
    if inst.seed is not None:
        head["seed"] = inst.seed
    if inst.meta:
        head["meta"] = inst.meta
    lines = [_jline(head)]
    for p in inst.points:
        if inst.kind == "intervals":
            lines.append(_jline({"p": [_enc(p)]}))
        elif inst.kind == "rects":
            lines.append(_jline({"p": [_enc(p.x), _enc(p.y)]}))
        else:
            lines.append(_jline({"p": [float(p.x), float(p.y)]}))
    for o in inst.objects:
        if inst.kind == "rects":
            lines.append(_jline({"r": [_enc(o.left), _enc(o.bottom),
                                       _enc(o.width)]}))
        elif inst.kind == "disks":
            lines.append(_jline({"d": [float(o.center.x), float(o.center.y)]}))
        else:
            lines.append(_jline({"i": [_enc(o.lo), _enc(o.hi),
                                       _enc(o.weight)]}))
    return "\n".join(lines) + "\n"


def loads(text: str) -> Instance:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty instance file")
    head = json.loads(lines[0])
    kind = head.get("kind")
    if kind not in KINDS:
        raise ValueError("unknown instance kind: %r" % (kind,))
    points, objects = [], []
    for ln in lines[1:]:
        rec = json.loads(ln)
        if "p" in rec:
            vals = rec["p"]
            if kind == "intervals":
                points.append(Fraction(vals[0]))
            elif kind == "rects":
                points.append(Point(Fraction(vals[0]), Fraction(vals[1])))
            else:
                points.append(Point(float(vals[0]), float(vals[1])))
        elif "r" in rec:
            l, b, w = rec["r"]
            objects.append(UnitRect(Fraction(l), Fraction(b), Fraction(w)))
        elif "d" in rec:
            cx, cy = rec["d"]
            objects.append(UnitDisk(Point(float(cx), float(cy))))
        elif "i" in rec:
            lo, hi, w = rec["i"]
            objects.append(WeightedInterval(Fraction(lo), Fraction(hi),
                                            Fraction(w)))
        else:
            raise ValueError("unrecognized record: %s" % ln)
    return Instance(kind, points, objects, head.get("seed"), head.get("meta"))


def save(inst: Instance, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(inst))


def load(path) -> Instance:
    with open(path) as fh:
        return loads(fh.read())


def _f8(rng, lo8: int, hi8: int) -> Fraction:
    return Fraction(rng.randint(lo8, hi8), 8)


def _gen_rects(rng, n, m, dist, allow_uncovered):
    rects = []
    span8 = 8 * max(3, m // 2)
    if dist == "uniform":
        for _ in range(m):
            rects.append(UnitRect(_f8(rng, 0, span8), _f8(rng, 0, 32),
                                  _f8(rng, 4, 16)))
        bases = rects
    elif dist == "clustered":
        ncl = max(1, m // 4)
        centers = [(_f8(rng, 0, span8), _f8(rng, 0, 32)) for _ in range(ncl)]
        for _ in range(m):
            cx, cy = centers[rng.randrange(ncl)]
            rects.append(UnitRect(cx + _f8(rng, -8, 8), cy + _f8(rng, -8, 8),
                                  _f8(rng, 4, 16)))
        bases = rects
    else:  # slab-stress: everything inside one height-2 band, with a
        # guaranteed ply-1 cover formed by disjoint base squares
        nbase = max(1, (m + 1) // 2)
        bases = [UnitRect(Fraction(9 * i, 8), _f8(rng, 1, 7)) for i in range(nbase)]
        rects = list(bases)
        hi8 = 9 * (nbase - 1) + 8
        for _ in range(m - nbase):
            rects.append(UnitRect(_f8(rng, 0, max(hi8, 8)), _f8(rng, 1, 7),
                                  _f8(rng, 4, 16)))
    points = []
    for _ in range(n):
        if allow_uncovered:
            points.append(Point(_f8(rng, -8, span8 + 8), _f8(rng, -8, 40)))
        else:
            r = bases[rng.randrange(len(bases))]
            points.append(Point(r.left + r.width * Fraction(rng.randint(0, 8), 8),
                                r.bottom + Fraction(rng.randint(0, 8), 8)))
    return points, rects


def _gen_disks(rng, n, m, dist, allow_uncovered):
    disks = []
    span = max(3.0, m / 2.0)
    if dist == "uniform":
        for _ in range(m):
            disks.append(UnitDisk(Point(round(rng.uniform(0, span), 4),
                                        round(rng.uniform(0, 3), 4))))
    elif dist == "clustered":
        ncl = max(1, m // 4)
        centers = [(rng.uniform(0, span), rng.uniform(0, 3))
                   for _ in range(ncl)]
        for _ in range(m):
            cx, cy = centers[rng.randrange(ncl)]
            disks.append(UnitDisk(Point(round(cx + rng.uniform(-0.8, 0.8), 4),
                                        round(cy + rng.uniform(-0.8, 0.8), 4))))
    else:  # slab-stress: extrema stay inside one height-2 band
        wide = max(2.0, 0.45 * m)
        for _ in range(m):
            disks.append(UnitDisk(Point(round(rng.uniform(0, wide), 4),
                                        round(rng.uniform(0.62, 1.38), 4))))
    points = []
    for _ in range(n):
        if allow_uncovered:
            points.append(Point(round(rng.uniform(-1, span + 1), 6),
                                round(rng.uniform(-1, 4), 6)))
        else:
            d = disks[rng.randrange(len(disks))]
            ang = rng.uniform(0, 2 * math.pi)
            rad = 0.45 * math.sqrt(rng.uniform(0, 1))
            points.append(Point(round(d.center.x + rad * math.cos(ang), 6),
                                round(d.center.y + rad * math.sin(ang), 6)))
    return points, disks


def _gen_intervals(rng, n, m, dist, allow_uncovered):
    ivs = []
    if dist == "chain":
        # consecutive overlaps only: the interval graph is a path
        for i in range(m):
            ivs.append(WeightedInterval(2 * i, 2 * i + 3,
                                        Fraction(rng.randint(1, 9))))
    elif dist == "uniform":
        span8 = 8 * max(4, m)
        for _ in range(m):
            lo = _f8(rng, 0, span8)
            ivs.append(WeightedInterval(lo, lo + _f8(rng, 4, 24),
                                        Fraction(rng.randint(1, 9))))
    else:  # clustered
        ncl = max(1, m // 4)
        centers = [_f8(rng, 0, 8 * max(4, m)) for _ in range(ncl)]
        for _ in range(m):
            c = centers[rng.randrange(ncl)]
            lo = c + _f8(rng, -12, 4)
            ivs.append(WeightedInterval(lo, lo + _f8(rng, 4, 24),
                                        Fraction(rng.randint(1, 9))))
    ivs.sort(key=lambda s: (s.hi, s.lo, s.weight))
    points = []
    for _ in range(n):
        if allow_uncovered:
            lo = min((s.lo for s in ivs), default=Fraction(0)) - 1
            hi = max((s.hi for s in ivs), default=Fraction(1)) + 1
            points.append(lo + (hi - lo) * Fraction(rng.randint(0, 64), 64))
        else:
            s = ivs[rng.randrange(len(ivs))]
            points.append(s.lo + (s.hi - s.lo) * Fraction(rng.randint(0, 16), 16))
    points.sort()
    return points, ivs


def generate(kind: str, n: int, m: int, distribution: str = "uniform",
             seed: int = 0, allow_uncovered: bool = False) -> Instance:
    """Deterministic random instance; every point covered by construction
    unless allow_uncovered is set."""
    if kind not in KINDS:
        raise ValueError("unknown kind: %r" % (kind,))
    if distribution not in DISTRIBUTIONS:
        raise ValueError("unknown distribution: %r" % (distribution,))
    if distribution == "chain" and kind != "intervals":
        raise ValueError("chain distribution is interval-only")
    if distribution == "slab-stress" and kind == "intervals":
        raise ValueError("slab-stress distribution needs a 2-D kind")
    if m <= 0:
        raise ValueError("need at least one object")
    rng = random.Random(seed)
    if kind == "rects":
        points, objects = _gen_rects(rng, n, m, distribution, allow_uncovered)
    elif kind == "disks":
        points, objects = _gen_disks(rng, n, m, distribution, allow_uncovered)
    else:
        points, objects = _gen_intervals(rng, n, m, distribution,
                                         allow_uncovered)
    meta = {"distribution": distribution, "n": n, "m": m}
    return Instance(kind, points, objects, seed=seed, meta=meta)
