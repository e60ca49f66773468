"""Command line interface: solve, oracle, gen, check, render, bench.

Exit codes: 0 success, 1 usage or IO error, 2 infeasible, 3 ply budget
exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import instances as inst_mod
from .errors import (BudgetExceeded, DegenerateInstance, Infeasible,
                     InstanceTooLarge, UnsortedInput)
from .geom import disks_disjoint, ply_disks, ply_rects
from .intervals import (count_overlapping_pairs, evaluate_objective,
                        solve_intervals)
from .oracle import exact_3color_cover, exact_intervals, exact_min_ply
from .slabs import solve_mpc
from .svg import render_svg
from .tricolor import solve_3color

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3

SOLVE_KINDS = ("rects", "disks", "3color", "intervals")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _enc_objective(v):
    return v if isinstance(v, int) else str(Fraction(v))


def _dec_objective(v):
    return v if isinstance(v, int) else Fraction(v)


def _jdump(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _load_instance(path, expect_kind):
    inst = inst_mod.load(path)
    want = "disks" if expect_kind == "3color" else expect_kind
    if inst.kind != want:
        raise _UsageError("instance kind is %r, expected %r" % (inst.kind, want))
    return inst


def _cmd_solve(args) -> int:
    if args.mode == "mmsc" and args.kind != "intervals":
        raise _UsageError("--mode mmsc is only valid for --kind intervals")
    inst = _load_instance(args.infile, args.kind)
    t0 = time.perf_counter()
    if args.kind == "intervals":
        sol = solve_intervals(inst.points, inst.objects, args.mode)
    elif args.kind == "3color":
        sol = solve_3color(inst.points, inst.objects, eps=args.eps)
    else:
        sol = solve_mpc(inst.points, inst.objects, args.kind,
                        ell_max=args.ell_max, eps=args.eps)
    ms = (time.perf_counter() - t0) * 1000.0
    payload = {"kind": args.kind, "chosen": list(sol.chosen),
               "objective": _enc_objective(sol.objective)}
    if args.kind == "intervals":
        payload["mode"] = args.mode
    if sol.colors is not None:
        payload["colors"] = {str(k): v for k, v in sorted(sol.colors.items())}
    if args.timing:
        payload["wallclock_ms"] = round(ms, 3)
    with open(args.outfile, "w") as fh:
        fh.write(_jdump(payload))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    if args.mode == "mmsc" and args.kind != "intervals":
        raise _UsageError("--mode mmsc is only valid for --kind intervals")
    inst = _load_instance(args.infile, args.kind)
    payload = {"kind": args.kind}
    if args.kind == "intervals":
        opt, chosen = exact_intervals(inst.points, inst.objects, args.mode)
        payload["mode"] = args.mode
        payload["chosen"] = chosen
        payload["objective"] = _enc_objective(opt)
    elif args.kind == "3color":
        witness = exact_3color_cover(inst.points, inst.objects,
                                     eps_cover=args.eps)
        if witness is None:
            raise Infeasible("no 3-colorable cover exists")
        colors = {}
        for a, cls in enumerate(witness):
            for i in cls:
                colors[i] = a + 1
        payload["chosen"] = sorted(colors)
        payload["colors"] = {str(k): v for k, v in sorted(colors.items())}
        payload["objective"] = ply_disks([inst.objects[i] for i in sorted(colors)],
                                         args.eps)
    else:
        opt, chosen = exact_min_ply(inst.points, inst.objects, args.kind,
                                    eps=args.eps)
        payload["chosen"] = chosen
        payload["objective"] = opt
    with open(args.outfile, "w") as fh:
        fh.write(_jdump(payload))
    return EXIT_OK


def _cmd_gen(args) -> int:
    inst = inst_mod.generate(args.kind, args.n, args.m, args.dist, args.seed,
                             allow_uncovered=args.allow_uncovered)
    inst_mod.save(inst, args.outfile)
    return EXIT_OK


def _check_colors(inst, sol, eps) -> str | None:
    colors = {int(k): int(v) for k, v in (sol.get("colors") or {}).items()}
    if sorted(colors) != sorted(sol["chosen"]):
        return "colors do not partition the chosen set"
    if any(not 1 <= c <= 6 for c in colors.values()):
        return "color out of range 1..6"
    by_class: dict[int, list] = {}
    for i, c in colors.items():
        by_class.setdefault(c, []).append(i)
    for c, members in sorted(by_class.items()):
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if not disks_disjoint(inst.objects[members[a]],
                                      inst.objects[members[b]], eps):
                    return "color class %d is not pairwise disjoint" % c
    return None


def _cmd_check(args) -> int:
    with open(args.solution) as fh:
        sol = json.loads(fh.read())
    kind = sol.get("kind")
    if kind not in SOLVE_KINDS:
        raise _UsageError("solution file has unknown kind %r" % (kind,))
    inst = _load_instance(args.infile, kind)
    chosen = sol.get("chosen", [])
    if any(not 0 <= i < len(inst.objects) for i in chosen):
        print("chosen index out of range", file=sys.stderr)
        return EXIT_USAGE
    objs = [inst.objects[i] for i in chosen]
    for pi, p in enumerate(inst.points):
        if kind == "intervals":
            hit = any(o.contains(p) for o in objs)
        elif kind == "rects":
            hit = any(o.contains(p) for o in objs)
        else:
            hit = any(o.contains(p, args.eps) for o in objs)
        if not hit:
            print("uncovered point at index %d" % pi, file=sys.stderr)
            return EXIT_USAGE
    if kind == "intervals":
        want = evaluate_objective(inst.points, objs, sol.get("mode", "mmsc"))
    elif kind == "rects":
        want = ply_rects(objs)
    else:
        want = ply_disks(objs, args.eps)
    if _dec_objective(sol["objective"]) != want:
        print("objective mismatch: file says %r, recomputed %r"
              % (sol["objective"], want), file=sys.stderr)
        return EXIT_USAGE
    if kind == "3color":
        err = _check_colors(inst, sol, args.eps)
        if err:
            print(err, file=sys.stderr)
            return EXIT_USAGE
    print("ok: %d objects, objective %s" % (len(chosen), sol["objective"]))
    return EXIT_OK


def _cmd_render(args) -> int:
    inst = inst_mod.load(args.infile)
    sol = None
    if args.solution:
        with open(args.solution) as fh:
            sol = json.loads(fh.read())
    with open(args.outfile, "w") as fh:
        fh.write(render_svg(inst, sol))
    return EXIT_OK


def _cmd_bench(args) -> int:
    if args.kind != "intervals":
        raise _UsageError("bench supports --kind intervals only")
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = ["kind,n,m,M,objective,wallclock_ms,seed"]
    for m in sizes:
        inst = inst_mod.generate("intervals", m, m, args.dist, args.seed)
        t0 = time.perf_counter()
        sol = solve_intervals(inst.points, inst.objects, "mmsc")
        ms = (time.perf_counter() - t0) * 1000.0
        overlaps = count_overlapping_pairs(inst.objects)
        rows.append("intervals,%d,%d,%d,%s,%.3f,%d"
                    % (len(inst.points), m, overlaps, sol.objective, ms,
                       args.seed))
    with open(args.outfile, "w") as fh:
        fh.write("\n".join(rows) + "\n")
    return EXIT_OK


def _build_parser() -> _Parser:
    p = _Parser(prog="plycover", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, kinds=SOLVE_KINDS):
        sp.add_argument("--kind", required=True, choices=kinds)
        sp.add_argument("--in", dest="infile", required=True)
        sp.add_argument("--out", dest="outfile", required=True)
        sp.add_argument("--mode", choices=("mpc", "mmsc"), default="mpc")
        sp.add_argument("--eps", type=float, default=1e-9)

    sp = sub.add_parser("solve", help="run the approximation/exact solver")
    common(sp)
    sp.add_argument("--ell-max", type=int, default=None)
    sp.add_argument("--timing", action="store_true",
                    help="record wallclock_ms in the solution file")
    sp.set_defaults(func=_cmd_solve)

    sp = sub.add_parser("oracle", help="run the exact brute-force solver")
    common(sp)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("gen", help="generate a random instance")
    sp.add_argument("--kind", required=True, choices=inst_mod.KINDS)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--dist", default="uniform",
                    choices=inst_mod.DISTRIBUTIONS)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", dest="outfile", required=True)
    sp.add_argument("--allow-uncovered", action="store_true")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("check", help="verify a solution file")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--solution", required=True)
    sp.add_argument("--eps", type=float, default=1e-9)
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("render", help="render an instance to SVG")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--solution", default=None)
    sp.add_argument("--out", dest="outfile", required=True)
    sp.set_defaults(func=_cmd_render)

    sp = sub.add_parser("bench", help="doubling experiment, CSV output")
    sp.add_argument("--kind", default="intervals")
    sp.add_argument("--dist", default="chain",
                    choices=inst_mod.DISTRIBUTIONS)
    sp.add_argument("--sizes", default="1024,2048,4096,8192")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", dest="outfile", required=True)
    sp.set_defaults(func=_cmd_bench)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except (UnsortedInput, InstanceTooLarge, DegenerateInstance,
            ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print("io error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except Infeasible as e:
        print("infeasible: %s" % e, file=sys.stderr)
        return EXIT_INFEASIBLE
    except BudgetExceeded as e:
        print("budget exceeded: %s" % e, file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
