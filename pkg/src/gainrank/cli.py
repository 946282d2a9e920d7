"""Command-line front end.

Subcommands: rank, inertia, classify, cycle-type, catalog, verify.
Every subcommand accepts ``--json`` for a stable machine-readable object
with keys {command, input, tol, result, fragile, failures}.  Exit codes:
0 success (or claim passed), 1 computation failure or claim violation,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog_edges, catalog_graph
from .errors import GainRankError, UnknownClaim
from .fileformat import emit, parse, parse_gain_token
from .gaingraph import GainGraph, cycle_walk, is_connected
from .inertia import DEFAULT_TOL, graph_inertia
from .predictors import evaluate_table1, evaluate_table2, predict_rank
from .structure import bicyclic_base, classify_cycle, fundamental_cycles, reduce
from .structure import PendantPairDeletion
from .verify import TrialSpec, list_claims, verify_claim

#: One-off CLI computations cross-check both inertia routes up to here.
_DESK_CROSS_CHECK = 12


def _read_graph(path: str, stdin) -> GainGraph:
    if path == "-":
        return parse(stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _emit_json(out, command, source, tol, result, fragile=0, failures=()):
    obj = {
        "command": command,
        "input": source,
        "tol": tol,
        "result": result,
        "fragile": fragile,
        "failures": list(failures),
    }
    print(json.dumps(obj, sort_keys=True), file=out)


def _split_gain_tokens(text: str) -> list[str]:
    """Split a comma-separated gain list, keeping 'c:re,im' pairs intact."""
    parts = text.split(",")
    tokens: list[str] = []
    i = 0
    while i < len(parts):
        if parts[i].startswith("c:"):
            if i + 1 >= len(parts):
                raise GainRankError(f"dangling complex gain {parts[i]!r}")
            tokens.append(parts[i] + "," + parts[i + 1])
            i += 2
        else:
            tokens.append(parts[i])
            i += 1
    return tokens


def _cmd_rank(args, stdin, out) -> int:
    g = _read_graph(args.file, stdin)
    tri = graph_inertia(g, args.tol, cross_check=g.n <= _DESK_CROSS_CHECK)
    if args.json:
        _emit_json(out, "rank", args.file, args.tol, tri.rank)
    else:
        print(tri.rank, file=out)
    return 0


def _cmd_inertia(args, stdin, out) -> int:
    g = _read_graph(args.file, stdin)
    tri = graph_inertia(g, args.tol, cross_check=g.n <= _DESK_CROSS_CHECK)
    if args.json:
        result = {"pos": tri.pos, "neg": tri.neg, "zero": tri.zero}
        _emit_json(out, "inertia", args.file, args.tol, result)
    else:
        print(tri.pos, tri.neg, tri.zero, file=out)
    return 0


def _family(g: GainGraph) -> str:
    if not is_connected(g):
        return "disconnected"
    d = g.edge_count - g.n
    if d == -1:
        return "tree"
    if d == 0:
        return "unicyclic"
    if d == 1:
        return "bicyclic"
    return f"m-n={d}"


def _cmd_classify(args, stdin, out) -> int:
    g = _read_graph(args.file, stdin)
    tri = graph_inertia(g, args.tol, cross_check=g.n <= _DESK_CROSS_CHECK)
    family = _family(g)
    trace = reduce(g)
    steps = [
        {"kind": "pendant-pair", "pendant": s.pendant, "neighbor": s.neighbor}
        if isinstance(s, PendantPairDeletion)
        else {"kind": "twin", "vertex": s.vertex}
        for s in trace.steps
    ]
    result: dict = {
        "family": family,
        "n": g.n,
        "m": g.edge_count,
        "inertia": {"pos": tri.pos, "neg": tri.neg, "zero": tri.zero},
        "rank": tri.rank,
        "reduction": {
            "steps": steps,
            "rank_offset": trace.rank_offset,
            "residual_n": trace.residual.n,
            "residual_m": trace.residual.edge_count,
        },
        "base": None,
        "cycles": None,
        "catalog": None,
        "predicted": None,
    }
    fragile = 0
    if family == "bicyclic":
        ext = bicyclic_base(g)
        d = ext.descriptor
        result["base"] = {"kind": d.kind, "p": d.p, "l": d.l, "q": d.q}
        result["cycles"] = [list(w.vertices) for w in fundamental_cycles(g, ext)]
        for evaluate in (evaluate_table1, evaluate_table2):
            try:
                report = evaluate(g, args.tol)
            except GainRankError:
                continue
            result["catalog"] = report.to_dict()
            fragile += report.fragile
            break
        result["predicted"] = predict_rank(g, args.tol).to_dict()
    if args.json:
        _emit_json(out, "classify", args.file, args.tol, result, fragile)
        return 0
    print(f"family: {family} (n={g.n}, m={g.edge_count})", file=out)
    print(
        f"inertia: ({tri.pos}, {tri.neg}, {tri.zero})   rank: {tri.rank}",
        file=out,
    )
    print(
        f"reduction: {len(steps)} steps, rank offset {trace.rank_offset}, "
        f"residual n={trace.residual.n} m={trace.residual.edge_count}",
        file=out,
    )
    if result["base"]:
        b = result["base"]
        print(f"base: {b['kind']}({b['p']},{b['l']},{b['q']})", file=out)
        print(
            "cycles: "
            + "; ".join("-".join(map(str, c)) for c in result["cycles"]),
            file=out,
        )
    if result["catalog"]:
        rep = result["catalog"]
        verdict = (
            f"rank {rep['predicted_rank']}" if rep["satisfied"] else "no row satisfied"
        )
        print(f"catalog {rep['catalog']}: {verdict}", file=out)
        for c in rep["clauses"]:
            mark = "ok" if c["ok"] else "no"
            print(
                f"  [rank {c['row_rank']}] {c['description']}: "
                f"{c['observed']} ({mark})",
                file=out,
            )
    if result["predicted"]:
        p = result["predicted"]
        if p["kind"] == "exact":
            shown = str(p["lower"])
        elif p["kind"] == "bounds":
            shown = f"[{p['lower']}, {p['upper']}]"
        else:
            shown = f">= {p['lower']}"
        print(
            f"predicted rank: {shown} ({p['provenance']})   numeric: {tri.rank}",
            file=out,
        )
    return 0


def _cmd_cycle_type(args, stdin, out) -> int:
    g = _read_graph(args.file, stdin)
    try:
        vertices = [int(tok) for tok in args.cycle.split(",")]
    except ValueError:
        raise GainRankError(f"bad --cycle list {args.cycle!r}") from None
    cls = classify_cycle(cycle_walk(g, vertices), args.tol)
    if args.json:
        result = {
            "type": cls.kind.value,
            "residual": {"re": cls.residual.real, "im": cls.residual.imag},
            "margin": cls.margin,
        }
        _emit_json(
            out, "cycle-type", args.file, args.tol, result, int(cls.fragile)
        )
    else:
        print(
            f"{cls.kind.value} residual={cls.residual:.6g} margin={cls.margin:.3g}",
            file=out,
        )
    return 0


def _cmd_catalog(args, stdin, out) -> int:
    gains = None
    if args.gains:
        tokens = _split_gain_tokens(args.gains)
        gains = [parse_gain_token(tok) for tok in tokens]
        want = len(catalog_edges(args.id))
        if len(gains) != want:
            raise GainRankError(
                f"{args.id} has {want} edges, got {len(gains)} gains"
            )
    g = catalog_graph(args.id, gains)
    text = emit(g)
    if args.json:
        _emit_json(out, "catalog", args.id, args.tol, text)
    else:
        out.write(text)
    return 0


def _cmd_verify(args, stdin, out) -> int:
    spec = TrialSpec(args.claim, args.trials, args.seed, args.max_n)
    report = verify_claim(spec)
    if args.json:
        d = report.to_dict()
        _emit_json(
            out,
            "verify",
            args.claim,
            args.tol,
            {k: d[k] for k in ("claim", "trials", "seed", "passed")},
            report.fragile,
            d["failures"],
        )
    else:
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{report.claim}: {status} ({report.trials} trials, seed "
            f"{report.seed}, {len(report.failures)} failures, "
            f"{report.fragile} fragile)",
            file=out,
        )
        for f in report.failures[:5]:
            print(f"  expected: {f.expected}", file=out)
            print(f"  observed: {f.observed}", file=out)
            for line in f.input.splitlines():
                print(f"    {line}", file=out)
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gainrank",
        description="Rank, inertia and structure of complex unit gain graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_file=True):
        if with_file:
            p.add_argument(
                "file",
                nargs="?",
                default="-",
                help="gain-graph file ('-' or omitted: stdin)",
            )
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--json", action="store_true")

    common(sub.add_parser("rank", help="rank of the adjacency matrix"))
    common(sub.add_parser("inertia", help="(pos, neg, zero) eigenvalue counts"))
    common(sub.add_parser("classify", help="family, base, reductions, conditions"))
    p = sub.add_parser("cycle-type", help="Type A-E of one cycle")
    common(p)
    p.add_argument("--cycle", required=True, help="comma-separated vertex list")
    p = sub.add_parser("catalog", help="emit a catalog graph G1..G22")
    p.add_argument("id", help="catalog identifier, e.g. G9")
    p.add_argument("--gains", help="comma-separated gain tokens in edge order")
    common(p, with_file=False)
    p = sub.add_parser("verify", help="run a verification claim")
    p.add_argument("claim", help="claim name (see error message for the list)")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-n", type=int, default=None)
    common(p, with_file=False)
    return parser


_HANDLERS = {
    "rank": _cmd_rank,
    "inertia": _cmd_inertia,
    "classify": _cmd_classify,
    "cycle-type": _cmd_cycle_type,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
}


def run(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args, stdin, stdout)
    except UnknownClaim as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except GainRankError as exc:
        print(f"error: {exc}", file=stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
