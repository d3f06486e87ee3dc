"""Command-line front end.

Every subcommand reads a graph (``-g``) and one convexity (``--spec`` or
``--matrices``), prints a human-readable answer, or with ``--json`` a
deterministic payload::

    {"problem", "graph": {"n", "edges"}, "spec", "result", "witnesses"}

Exit codes: 0 success, 1 a "no" answer under ``--quiet`` (member,
hullmember), 2 usage error, 3 invalid input, 4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .convexity import LITERATURE_PRESETS, ConvexitySpec, abcd, load_matrix_spec, parse_spec, resolve_bounds
from .errors import InputError, SizeLimitExceeded
from .graph import Graph, read_graph
from .hull import convex_test, hull, hull_contains
from .oracle import (
    build_mcs_gadget,
    chordless_path_through,
    oracle_interval,
    random_connected_graph,
    random_constant_tuples,
)
from .paths import interval, interval_contains
from .solvers import convexity_number, hull_number, interval_number

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3, 4

COMMANDS = ("interval", "member", "convex", "hullmember", "hull", "cn", "in", "hn", "compare", "selfcheck")


@dataclass
class RunReport:
    command: list[str]
    graph_digest: str | None
    spec_digests: list[str]
    payload: dict
    text: list[str] = field(default_factory=list)
    wall_time: float = 0.0
    exit_code: int = EXIT_OK

    def payload_json(self) -> str:
        return json.dumps(self.payload, sort_keys=True, separators=(",", ":"))


def _fmt_set(S) -> str:
    return "{" + ",".join(map(str, sorted(S))) + "}"


def _fmt_path(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _parse_vertex_list(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise InputError(f"-S: {tok!r} is not a vertex number") from None
    return out


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--graph", metavar="FILE", help="graph file (edge list or DIMACS-like)")
    common.add_argument("--spec", action="append", default=[], metavar="STRING",
                        help="preset:<name> or abcd:<a>,<b>,<c>,<d> (repeatable for compare)")
    common.add_argument("--matrices", metavar="FILE", help="JSON length-matrix file")
    common.add_argument("-S", dest="S", metavar="LIST", help="comma-separated vertices")
    common.add_argument("-z", dest="z", type=int, metavar="VERTEX")
    common.add_argument("--bound", type=int, metavar="R", help="threshold for the decision version")
    common.add_argument("--json", action="store_true", help="emit the JSON payload")
    common.add_argument("--generic", action="store_true", help="force generic path enumeration")
    common.add_argument("--cap", type=int, metavar="N", help="solver / oracle vertex cap")
    common.add_argument("--seed", type=int, default=0, metavar="K", help="seed for randomized subcommands")
    common.add_argument("--quiet", action="store_true", help="member/hullmember: answer by exit code only")
    common.add_argument("--trials", type=int, default=20, metavar="T", help="selfcheck: random instances")

    parser = argparse.ArgumentParser(prog="pathconvex", description="Path convexities on graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "interval": "compute I(S) with witnesses",
        "member": "is z in I(S)?",
        "convex": "is S convex?",
        "hullmember": "is z in H(S)?",
        "hull": "compute H(S) and its stages",
        "cn": "convexity number c(G)",
        "in": "interval number i(G)",
        "hn": "hull number h(G)",
        "compare": "I(S), H(S) and convexity under several specs",
        "selfcheck": "differential check against the oracles",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def _load_inputs(parser, args, multi: bool = False) -> tuple[Graph, list[ConvexitySpec]]:
    if not args.graph:
        parser.error(f"{args.command}: -g FILE is required")
    if args.matrices and args.spec:
        parser.error("--spec and --matrices are mutually exclusive")
    if not args.matrices and not args.spec:
        parser.error(f"{args.command}: one of --spec or --matrices is required")
    if len(args.spec) > 1 and not multi:
        parser.error(f"{args.command}: --spec given {len(args.spec)} times; only compare accepts several")
    g = read_graph(args.graph)
    specs = [load_matrix_spec(args.matrices)] if args.matrices else [parse_spec(s) for s in args.spec]
    return g, specs


def _need(parser, args, *flags):
    for flag in flags:
        if getattr(args, flag) is None:
            parser.error(f"{args.command}: {'-' + flag if len(flag) == 1 else '--' + flag} is required")


def _witness_map(witnesses) -> dict[str, list[int]]:
    return {str(z): w.to_list() for z, w in sorted(witnesses.items())}


def _base_payload(command: str, g: Graph, spec) -> dict:
    return {
        "problem": command,
        "graph": {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]},
        "spec": spec,
        "result": {},
        "witnesses": {},
    }


def _run_selfcheck(args) -> RunReport:
    cap = args.cap if args.cap is not None else 7
    if cap < 4:
        raise InputError("--cap: selfcheck needs a cap of at least 4")
    rng = random.Random(args.seed)
    specs = [parse_spec("preset:" + p) for p in LITERATURE_PRESETS]
    specs += [abcd(*t) for t in random_constant_tuples(5, args.seed)]
    checked = mismatches = 0
    failures = []
    for trial in range(args.trials):
        n = rng.randint(4, min(cap, 9))
        p = rng.choice((0.2, 0.5, 0.8))
        g = random_connected_graph(n, p, rng.randrange(1 << 30))
        for spec in specs:
            rb = resolve_bounds(spec, g)
            S = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
            fast = interval(g, rb, S).members
            slow = interval(g, rb, S, generic=True).members
            ref = oracle_interval(g, rb, S)
            checked += 1
            if not fast == slow == ref:
                mismatches += 1
                failures.append(f"trial {trial} {spec.to_text()} S={_fmt_set(S)}")
    gadgets = gadget_bad = 0
    for _ in range(max(1, args.trials // 4)):
        n = rng.randint(3, min(cap, 6))
        h = random_connected_graph(n, rng.choice((0.3, 0.6)), rng.randrange(1 << 30))
        for i in h.vertices:
            for j in h.vertices:
                for z in h.vertices:
                    if len({i, j, z}) < 3:
                        continue
                    gi = build_mcs_gadget(h, i, j, z)
                    rb = resolve_bounds(gi.spec, gi.graph)
                    gadgets += 1
                    if (not convex_test(gi.graph, rb, gi.S).convex) != chordless_path_through(h, i, j, z):
                        gadget_bad += 1
                        failures.append(f"gadget n={n} i={i} j={j} z={z}")
    ok = mismatches == 0 and gadget_bad == 0
    payload = {
        "problem": "selfcheck",
        "graph": None,
        "spec": [s.to_text() for s in specs],
        "result": {
            "cap": cap, "seed": args.seed, "trials": args.trials,
            "interval_checks": checked, "interval_mismatches": mismatches,
            "gadget_checks": gadgets, "gadget_mismatches": gadget_bad, "ok": ok,
        },
        "witnesses": {},
    }
    text = [
        f"interval differential: {checked - mismatches}/{checked} agree",
        f"gadget equivalence:    {gadgets - gadget_bad}/{gadgets} agree",
    ] + [f"  MISMATCH {f}" for f in failures[:20]]
    text.append("selfcheck " + ("PASSED" if ok else "FAILED"))
    return RunReport([], None, [], payload, text, exit_code=EXIT_OK if ok else EXIT_NO)


def _execute(parser, args) -> RunReport:
    cmd = args.command
    if cmd == "selfcheck":
        return _run_selfcheck(args)
    g, specs = _load_inputs(parser, args, multi=(cmd == "compare"))
    spec = specs[0]
    rbs = [resolve_bounds(s, g) for s in specs]
    rb = rbs[0]
    generic = args.generic
    payload = _base_payload(cmd, g, [s.to_json_obj() for s in specs] if cmd == "compare" else spec.to_json_obj())
    res, text = payload["result"], []
    code = EXIT_OK

    if cmd in ("interval", "member", "convex", "hullmember", "hull", "compare"):
        _need(parser, args, "S")
        S = g.check_vertices(_parse_vertex_list(args.S), "-S vertex")
        res["S"] = sorted(S)
    if cmd in ("member", "hullmember"):
        _need(parser, args, "z")
        z = g.check_vertex(args.z, "-z vertex")
        res["z"] = z

    if cmd == "interval":
        ir = interval(g, rb, S, generic)
        res["members"] = sorted(ir.members)
        payload["witnesses"] = _witness_map(ir.witnesses)
        text.append(f"I(S) = {_fmt_set(ir.members)}   [strategy: {ir.strategy}]")
        text += [f"  {z}: {_fmt_path(w.path)}" for z, w in sorted(ir.witnesses.items())]
    elif cmd == "member":
        w = interval_contains(g, rb, S, z, generic)
        res["member"] = w is not None
        if w is not None and not w.is_seed:
            payload["witnesses"] = {str(z): w.to_list()}
        if w is None:
            text.append(f"no: {z} is not in I(S)")
        elif w.is_seed:
            text.append(f"yes: {z} is in S")
        else:
            text.append(f"yes: {z} lies on {_fmt_path(w.path)}")
        code = EXIT_OK if w is not None or not args.quiet else EXIT_NO
    elif cmd == "convex":
        cert = convex_test(g, rb, S, generic)
        res["convex"] = cert.convex
        res["augmenting"] = None if cert.convex else sorted(cert.augmenting)
        if cert.convex:
            text.append(f"S = {_fmt_set(S)} is convex")
        else:
            z = min(set(cert.augmenting) - S)
            payload["witnesses"] = {str(z): cert.witness.to_list()}
            text.append(f"S = {_fmt_set(S)} is not convex; augmenting set {_fmt_set(cert.augmenting)}")
            text.append(f"  {z}: {_fmt_path(cert.witness.path)}")
    elif cmd == "hullmember":
        yes = hull_contains(g, rb, S, z, generic)
        res["member"] = yes
        text.append(f"{'yes' if yes else 'no'}: {z} is {'' if yes else 'not '}in H(S)")
        code = EXIT_OK if yes or not args.quiet else EXIT_NO
    elif cmd == "hull":
        tr = hull(g, rb, S, generic)
        res["hull"] = sorted(tr.hull)
        res["stages"] = [sorted(s) for s in tr.stages]
        text.append(f"H(S) = {_fmt_set(tr.hull)} after {tr.steps} interval step(s)")
        text += [f"  I^{k}(S) = {_fmt_set(s)}" for k, s in enumerate(tr.stages)]
    elif cmd in ("cn", "in", "hn"):
        solver = {"cn": convexity_number, "in": interval_number, "hn": hull_number}[cmd]
        sr = solver(g, rb, cap=args.cap, generic=generic)
        res.update(value=sr.value, optimal_set=sorted(sr.optimal_set), explored=sr.explored,
                   capped=sr.capped, degenerate=sr.degenerate)
        label = {"cn": "c(G)", "in": "i(G)", "hn": "h(G)"}[cmd]
        text.append(f"{label} = {sr.value}, attained by {_fmt_set(sr.optimal_set)} ({sr.explored} sets examined)")
        if cmd == "in":
            payload["witnesses"] = _witness_map(interval(g, rb, sr.optimal_set, generic).witnesses)
        if args.bound is not None:
            r = args.bound
            decision = sr.value >= r if cmd == "cn" else sr.value <= r
            res["bound"] = r
            res["decision"] = decision
            op = ">=" if cmd == "cn" else "<="
            text.append(f"{label} {op} {r}? {'yes' if decision else 'no'}")
    elif cmd == "compare":
        rows = []
        for s, r_b in zip(specs, rbs):
            ir = interval(g, r_b, S, generic)
            tr = hull(g, r_b, S, generic)
            rows.append({"spec": s.to_text(), "interval": sorted(ir.members), "hull": sorted(tr.hull),
                         "convex": ir.members == S})
        res["rows"] = rows
        width = max(len(r["spec"]) for r in rows)
        text.append(f"{'spec':<{width}}  I(S)  |  H(S)  |  convex")
        for r in rows:
            text.append(f"{r['spec']:<{width}}  {_fmt_set(r['interval'])}  |  {_fmt_set(r['hull'])}  |  "
                        f"{'yes' if r['convex'] else 'no'}")
    return RunReport([], g.digest, [s.digest for s in specs], payload, text, exit_code=code)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        report = _execute(parser, args)
    except SystemExit as exc:  # parser.error inside _execute
        return int(exc.code or 0)
    except SizeLimitExceeded as exc:
        print(f"pathconvex: size limit exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InputError as exc:
        print(f"pathconvex: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report.command = argv
    report.wall_time = time.perf_counter() - start
    if args.quiet and args.command in ("member", "hullmember"):
        return report.exit_code
    if args.json:
        print(report.payload_json())
    else:
        print("\n".join(report.text))
    digests = " ".join(filter(None, [report.graph_digest] + report.spec_digests))
    print(f"# {args.command} {digests} wall={report.wall_time:.4f}s", file=sys.stderr)
    return report.exit_code


run_cli = main


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
