"""Command-line front end.

Exit codes: 0 success, 1 usage or malformed input, 2 a mathematical finding
(an input that does not verify, a construction that fails, a property with
counterexamples).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from . import constructions as cons
from .errors import FindingError, InputError
from .findings import all_findings
from .graphs import Graph
from .matrix import COLUMN_WISE, ROW_WISE
from .oracle import OracleConfig, default_workers, oracle_enumerate
from .paths import catalan, enumerate_paths
from .properties import SUITES, run_suites
from .serialize import dumps, structures_from_csv, structures_from_json, structures_to_csv
from .structures import ArithStructure, verify
from .transfer import (build_state_space, build_transition_matrix, count_walks,
                       enumerate_walks, transfer_census)
from .validation import parse_int_list

OK, USAGE, FINDING = 0, 1, 2
BUILDERS = ("stack-symmetric", "stack-offset", "kronecker", "extend-column", "nonsymmetric",
            "shifted-check", "symmetric-to-path", "grid-column-constant", "delta")


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n\n{self.format_help()}")


def _graph_flags(p):
    p.add_argument("--graph", choices=("path", "cycle", "ladder", "grid"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--ordering", choices=("row", "column"), default=None)


def _io_flags(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", metavar="FILE")


def _input_flags(p):
    p.add_argument("--stdin", action="store_true", help="read structures from standard input")
    p.add_argument("--input", metavar="FILE")


def build_parser() -> Parser:
    parser = Parser(prog="arithlat", description="Arithmetical structures on paths, "
                    "cycles, ladders and grids.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all structures on a graph")
    _graph_flags(p)
    p.add_argument("--oracle", action="store_true", help="use the bounded brute-force search")
    p.add_argument("--bound", type=int, default=8)
    _io_flags(p)

    p = sub.add_parser("verify", help="check structures read from JSON or CSV")
    _input_flags(p)
    _io_flags(p)

    p = sub.add_parser("construct", help="apply a builder to input structure(s)")
    p.add_argument("--builder", choices=BUILDERS, required=True)
    _input_flags(p)
    p.add_argument("--n", type=int, help="rows for grid-column-constant")
    p.add_argument("--k", help="offset vector for stack-offset, e.g. 1,2,1")
    p.add_argument("--mode", choices=cons.EXTENSION_MODES, default="ones-ones")
    p.add_argument("--source", help="i,j source vertex for rij-one / one-rij")
    p.add_argument("--y", help="y1,y2 for free-y")
    p.add_argument("--a", help="top row for nonsymmetric")
    p.add_argument("--b", help="bottom row for nonsymmetric")
    p.add_argument("--r1", help="r1 for shifted-check")
    p.add_argument("--D1", help="diagonal D1 for shifted-check")
    p.add_argument("--D2", help="diagonal D2 for shifted-check")
    p.add_argument("--shift", type=int, default=0, help="k for shifted-check")
    _io_flags(p)

    p = sub.add_parser("transfer", help="transfer-matrix counts and census")
    p.add_argument("--paper-example", action="store_true",
                   help="use the four-state system {(2,1),(1,1),(1,2),(3,2)}")
    p.add_argument("--bound", type=int, help="build states from the C4 census up to this bound")
    p.add_argument("--n", type=int, default=2, help="column height (2 for ladders)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--census", action="store_true")
    p.add_argument("--walks", action="store_true", help="list every walk")
    _io_flags(p)

    p = sub.add_parser("count", help="count structures")
    _graph_flags(p)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--bound", type=int, default=8)
    _io_flags(p)

    p = sub.add_parser("properties", help="run property suites and finding reports")
    p.add_argument("--suite", action="append", choices=list(SUITES) + ["findings"],
                   help="repeatable; default runs everything")
    _io_flags(p)
    return parser


def _ordering(args, default=ROW_WISE) -> str:
    if args.ordering is None:
        return default
    return ROW_WISE if args.ordering == "row" else COLUMN_WISE


def _graph(args) -> Graph:
    if args.graph is None:
        raise UsageError("--graph is required")
    if args.graph in ("path", "cycle"):
        if args.n is None:
            raise UsageError(f"--graph {args.graph} needs --n")
        return Graph(args.graph, args.n)
    if args.m is None:
        raise UsageError(f"--graph {args.graph} needs --m")
    if args.graph == "ladder":
        return Graph.ladder(args.m, _ordering(args))
    if args.n is None:
        raise UsageError("--graph grid needs --n and --m")
    return Graph.grid(args.n, args.m, _ordering(args))


def _read_structures(args) -> list[ArithStructure]:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    elif args.stdin:
        text = sys.stdin.read()
    else:
        raise UsageError("give --stdin or --input FILE")
    stripped = text.lstrip()
    try:
        if stripped.startswith(("{", "[")):
            return structures_from_json(json.loads(text))
        return structures_from_csv(text)
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise InputError(f"malformed structure input: {e}") from None


def _render(payload: dict, fmt: str, structures=None) -> str:
    if fmt == "csv":
        header = "# " + json.dumps(payload.get("config", {}), sort_keys=True) + "\n"
        return header + structures_to_csv(structures or [])
    return dumps(payload)


def cmd_enumerate(args):
    graph = _graph(args)
    if graph.family == "path" and not args.oracle:
        structures = list(enumerate_paths(graph.n))
        config = {"command": "enumerate", "graph": graph.to_json(), "method": "subdivision"}
    else:
        oc = OracleConfig(graph, args.bound)
        structures = list(oracle_enumerate(oc))
        config = {"command": "enumerate", "method": "oracle", "oracle": oc.to_json()}
    payload = {"config": config, "count": str(len(structures)),
               "structures": [s.to_json() for s in structures]}
    return OK, _render(payload, args.format, structures)


def cmd_verify(args):
    structures = _read_structures(args)
    results = []
    failed = False
    for s in structures:
        res = verify(s.graph, s.d, s.r)
        failed |= not res.passed
        results.append({"structure": s.to_json(), "passed": res.passed,
                        "invariant": res.invariant, "vertex": res.vertex,
                        "message": res.message})
    payload = {"config": {"command": "verify", "count": len(structures)},
               "all_passed": not failed, "results": results}
    if args.format == "csv":
        payload["config"]["all_passed"] = not failed
    return (FINDING if failed else OK), _render(payload, args.format, structures)


def _pair(text, name):
    vals = parse_int_list(text, name)
    if len(vals) != 2:
        raise UsageError(f"--{name} needs two comma-separated integers")
    return vals


def cmd_construct(args):
    b = args.builder
    config = {"command": "construct", "builder": b}
    if b == "nonsymmetric":
        if not (args.a and args.b):
            raise UsageError("nonsymmetric needs --a and --b")
        config.update(a=args.a, b=args.b)
        out = cons.build_nonsymmetric(cons.NonSymSequences(parse_int_list(args.a, "a"),
                                                           parse_int_list(args.b, "b")))
    elif b == "shifted-check":
        if not (args.r1 and args.D1 and args.D2):
            raise UsageError("shifted-check needs --r1, --D1, --D2")
        config.update(r1=args.r1, D1=args.D1, D2=args.D2, k=args.shift)
        res = cons.shifted_symmetric_check(parse_int_list(args.r1, "r1"),
                                           parse_int_list(args.D1, "D1"),
                                           parse_int_list(args.D2, "D2"), args.shift)
        payload = {"config": config, "holds": res.holds, "determined_k": res.determined_k,
                   "witness": res.witness}
        return (OK if res.holds else FINDING), dumps(payload)
    else:
        inputs = _read_structures(args)
        need = 2 if b == "kronecker" else 1
        if len(inputs) != need:
            raise UsageError(f"{b} needs exactly {need} input structure(s)")
        s = inputs[0]
        if b == "stack-symmetric":
            out = cons.stack_symmetric(s)
        elif b == "stack-offset":
            if not args.k:
                raise UsageError("stack-offset needs --k")
            config["k"] = args.k
            out = cons.stack_with_offset(s, parse_int_list(args.k, "k"))
        elif b == "kronecker":
            out = cons.kronecker_structure(inputs[0], inputs[1])
        elif b == "extend-column":
            spec = cons.ColumnExtensionSpec(
                args.mode,
                source_index=_pair(args.source, "source") if args.source else None,
                y=_pair(args.y, "y") if args.y else None)
            config.update(mode=args.mode, source=args.source, y=args.y)
            out = cons.extend_column(s, spec)
        elif b == "symmetric-to-path":
            out = cons.symmetric_to_path(s)
        elif b == "grid-column-constant":
            if args.n is None:
                raise UsageError("grid-column-constant needs --n")
            config["n"] = args.n
            out = cons.grid_column_constant(s, args.n)
        else:
            res = cons.delta_identity_check(s)
            payload = {"config": config, "holds": res.holds, "delta": list(res.delta),
                       "lhs": list(res.lhs), "rhs": list(res.rhs)}
            return (OK if res.holds else FINDING), dumps(payload)
    payload = {"config": config, "structure": out.to_json()}
    return OK, _render(payload, args.format, [out])


def cmd_transfer(args):
    if args.paper_example == (args.bound is not None):
        raise UsageError("give exactly one of --paper-example or --bound")
    if args.paper_example:
        states = build_state_space("paper-example")
        source = {"source": "paper-example"}
    else:
        states = build_state_space("from-c4", args.bound, n=args.n)
        source = {"source": "from-c4", "bound": args.bound, "n": args.n}
    ts = build_transition_matrix(states)
    power = ts.matrix ** (args.m - 1)
    payload = {"config": dict(source, command="transfer", m=args.m, census=args.census),
               "system": ts.to_json(),
               "power": [[str(x) for x in row] for row in power.rows],
               "walk_count": str(count_walks(ts, args.m))}
    structures = []
    if args.walks:
        payload["walks"] = [list(w) for w in enumerate_walks(ts, args.m)]
    if args.census:
        census = transfer_census(ts, args.m)
        payload["census"] = census.to_json()
        structures = list(census.lift_successes)
    return OK, _render(payload, args.format, structures)


def cmd_count(args):
    graph = _graph(args)
    config = {"command": "count", "graph": graph.to_json()}
    payload = {"config": config}
    if graph.family == "path" and not args.oracle:
        payload["count"] = str(len(enumerate_paths(graph.n)))
        payload["catalan"] = str(catalan(graph.n - 1))
    else:
        oc = OracleConfig(graph, args.bound)
        config.update(method="oracle", oracle=oc.to_json())
        rep = oracle_enumerate(oc)
        payload["count"] = str(rep.count)
        if graph.family == "ladder":
            payload["symmetric_count"] = str(sum(1 for s in rep if s.is_row_symmetric()))
            payload["catalan"] = str(catalan(graph.m - 1))
    return OK, _render(payload, args.format)


def cmd_properties(args):
    names = args.suite or list(SUITES) + ["findings"]
    workers = default_workers()
    suites = run_suites([n for n in names if n != "findings"], workers)
    payload = {"config": {"command": "properties", "suites": names}, "suites": suites}
    failed = any(not s["passed"] for s in suites)
    if "findings" in names:
        reports = all_findings(workers)
        payload["findings"] = reports
        failed |= any(not r["consistent"] for r in reports)
    return (FINDING if failed else OK), dumps(payload)


COMMANDS = {"enumerate": cmd_enumerate, "verify": cmd_verify, "construct": cmd_construct,
            "transfer": cmd_transfer, "count": cmd_count, "properties": cmd_properties}


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code, text = COMMANDS[args.command](args)
    except UsageError as e:
        print(str(e), file=stderr)
        return USAGE
    except (InputError, ValueError, OSError) as e:
        print(f"error: {e}", file=stderr)
        return USAGE
    except FindingError as e:
        print(json.dumps({"finding": type(e).__name__, "message": str(e),
                          "vertices": list(getattr(e, "vertices", ()))}, sort_keys=True),
              file=stdout)
        return FINDING
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
