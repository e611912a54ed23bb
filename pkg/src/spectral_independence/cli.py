"""Command-line interface.

Exit codes: 0 success, 1 refusal (a hypothesis of the requested bound
fails), 2 parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import platform
import sys
import time
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np

from . import __version__
from .constructions import (
    join,
    join_bound_comparison,
    odd_bipartite_complete,
    pendant_graph,
)
from .errors import ParseError, Refusal
from .exact import (
    DEFAULT_ALPHA_CAP,
    DEFAULT_BUDGET,
    decode_tuple,
    exact_alpha,
    exact_alpha_t,
    power_graph,
)
from .graph import Graph, parse_graph, serialize_graph
from .graph_bounds import (
    BoundReport,
    RatioEqualityWitness,
    ThetaCertificate,
    all_graph_bounds,
    certify_theta,
    check_ratio_equality,
)
from .hypergraph import Hypergraph, parse_hypergraph, serialize_hypergraph
from .hypergraph_bounds import (
    HypBoundReport,
    OddTEqualityWitness,
    check_odd_t_equality,
    odd_t_bound,
    signed_even_t_bound,
)
from .tensor_eigen import DEFAULT_SEED, SolverConfig

EXIT_OK, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2


# -- JSON helpers ---------------------------------------------------------


def _num(x: Any) -> Any:
    """Plain Python number; non-finite floats become None so the output stays valid JSON."""
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    return x


def bound_to_dict(r: BoundReport | HypBoundReport) -> dict:
    if isinstance(r, HypBoundReport):
        return {
            "name": r.name,
            "value": _num(r.value),
            "tolerance": r.tolerance,
            "parameters": {
                "t": r.t, "k": r.k, "n": r.n, "m": r.m, "delta": r.delta,
                "lambda": _num(r.lam), "scaling": _num(r.scaling),
            },
            "lambda_source": r.lambda_source,
            "caveat": r.caveat,
            "signing": list(r.signing) if r.signing is not None else None,
        }
    return {
        "name": r.name,
        "value": _num(r.value),
        "tolerance": r.tolerance,
        "parameters": {k: _num(v) for k, v in r.parameters.items()},
        "notes": list(r.notes),
    }


def certificate_to_dict(c) -> dict:
    if isinstance(c, ThetaCertificate):
        return {
            "kind": "theta",
            "set": list(c.set),
            "certified": c.certified,
            "independent": c.independent,
            "value": len(c.set) if c.certified else None,
            "lambda_min": _num(c.lambda_min),
            "slack": _num(c.slack),
            "functional": _num(c.functional),
            "tolerance": c.tolerance,
        }
    if isinstance(c, (RatioEqualityWitness, OddTEqualityWitness)):
        rows = c.neighbor_counts if isinstance(c, RatioEqualityWitness) else c.dprime
        return {
            "kind": "equality",
            "set": list(c.set),
            "degree_ok": c.degree_ok,
            "all_match": c.all_match,
            "tolerance": c.tolerance,
            "rows": [{"vertex": i, "actual": a, "required": _num(r)} for i, a, r in rows],
        }
    raise TypeError(type(c))


def alpha_to_dict(res, key: str = "alpha") -> dict:
    return {
        f"{key}_exact": res.value if res.exact else None,
        f"{key}_best_found": res.value,
        f"{key}_status": res.status,
        f"{key}_witness": list(res.witness),
        "nodes_explored": res.nodes_explored,
    }


def new_report(args, source: str | None, parameters: dict) -> dict:
    return {
        "input": source,
        "parameters": parameters,
        "bounds": [],
        "certificates": [],
        "exact": {},
        "meta": {
            "seed": args.seed,
            "versions": {
                "spectral_independence": __version__,
                "numpy": np.__version__,
                "python": platform.python_version(),
            },
            "runtime_ms": None,
        },
    }


# -- text rendering -------------------------------------------------------


def _fmt(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.10g}"
    if isinstance(v, list):
        return ",".join(map(str, v)) if len(v) <= 24 else f"[{len(v)} items]"
    return str(v)


def render_text(report: dict) -> str:
    lines = []
    if report.get("input"):
        lines.append(f"input: {report['input']}")
    for k, v in report.get("parameters", {}).items():
        lines.append(f"  {k}: {_fmt(v)}")
    if report.get("bounds"):
        lines.append("")
        lines.append(f"{'bound':<28}{'value':>18}  lambda source")
        for b in report["bounds"]:
            src = b.get("lambda_source", "")
            lines.append(f"{b['name']:<28}{_fmt(b['value']):>18}  {src}")
            if b.get("caveat"):
                lines.append(f"  note: {b['caveat']}")
    for name, msg in report.get("refused", {}).items():
        lines.append(f"{name:<28}{'refused':>18}  {msg}")
    if "best_bound" in report and report["best_bound"] is not None:
        lines.append(f"{'best (minimum) bound':<28}{_fmt(report['best_bound']):>18}")
    for c in report.get("certificates", []):
        lines.append("")
        lines.append(f"{c['kind']} certificate")
        for k, v in c.items():
            if k not in ("kind", "rows"):
                lines.append(f"  {k}: {_fmt(v)}")
        for row in c.get("rows", []):
            mark = "ok" if abs(row["actual"] - row["required"]) <= c["tolerance"] else "MISMATCH"
            lines.append(f"  vertex {row['vertex']}: actual {row['actual']}, required {_fmt(row['required'])} {mark}")
    if report.get("exact"):
        lines.append("")
        for k, v in report["exact"].items():
            lines.append(f"{k}: {_fmt(v)}")
    if report.get("result"):
        lines.append("")
        for k, v in report["result"].items():
            lines.append(f"{k}: {_fmt(v)}")
    return "\n".join(lines) + "\n"


# -- input helpers --------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str, compact: bool = False) -> Graph:
    try:
        return parse_graph(_read(path), compact=compact)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def load_hypergraph(path: str) -> Hypergraph:
    try:
        return parse_hypergraph(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def parse_ids(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"vertex set must be integers separated by commas: {text!r}") from None


def _config(args) -> SolverConfig:
    return SolverConfig(starts=args.starts, seed=args.seed, residual_tol=args.tol)


def _budget(args) -> int:
    return args.budget if args.budget is not None else DEFAULT_BUDGET


# -- commands -------------------------------------------------------------


def graph_report(g: Graph, source: str | None, args) -> dict:
    report = new_report(args, source, {"n": g.n, "m": g.m, "min_degree": g.min_degree,
                                       "regular": g.is_regular()})
    reports, refused = all_graph_bounds(g)
    report["bounds"] = [bound_to_dict(r) for r in reports]
    report["values"] = {r.name: _num(r.value) for r in reports}
    report["refused"] = refused
    report["best_bound"] = _num(min((r.value for r in reports), default=math.inf))
    if args.budget is not None or g.n <= DEFAULT_ALPHA_CAP:
        report["exact"] = alpha_to_dict(exact_alpha(g, budget=args.budget))
    else:
        report["exact"] = {"alpha_status": f"skipped: n > {DEFAULT_ALPHA_CAP} and no --budget"}
    return report


def cmd_bounds_graph(args) -> tuple[Any, int]:
    if args.dir:
        root = Path(args.dir)
        if not root.is_dir():
            raise ParseError(f"not a directory: {args.dir}")
        out, code = [], EXIT_OK
        for path in sorted(root.glob(args.glob)):
            try:
                out.append(graph_report(load_graph(str(path), args.compact), path.name, args))
            except Refusal as exc:
                out.append({"input": path.name, "error": str(exc), "exit": EXIT_REFUSED})
                code = max(code, EXIT_REFUSED)
            except ValueError as exc:
                out.append({"input": path.name, "error": str(exc), "exit": EXIT_INPUT})
                code = max(code, EXIT_INPUT)
        return {"reports": out, "meta": new_report(args, None, {})["meta"]}, code
    if not args.file:
        raise ParseError("give a graph file or --dir")
    return graph_report(load_graph(args.file, args.compact), args.file, args), EXIT_OK


def cmd_bounds_hypergraph(args) -> tuple[dict, int]:
    h = load_hypergraph(args.file)
    t = args.t
    report = new_report(args, args.file, {"n": h.n, "k": h.k, "m": h.m, "t": t,
                                          "min_degree": h.min_degree})
    cfg = _config(args)
    members = parse_ids(args.set) if args.set else None
    res = None
    if args.budget is not None or h.n <= DEFAULT_ALPHA_CAP:
        res = exact_alpha_t(h, t, _budget(args))
        report["exact"] = alpha_to_dict(res, "alpha_t")
        if members is None and res.exact:
            members = list(res.witness)
    if t % 2:
        bound = odd_t_bound(h, t, args.lam, config=cfg)
        report["bounds"].append(bound_to_dict(bound))
        if members:
            witness = check_odd_t_equality(h, t, bound.lam, members)
            report["certificates"].append(certificate_to_dict(witness))
    else:
        bound = signed_even_t_bound(h, t, members, lam=args.lam, config=cfg, budget=_budget(args))
        report["bounds"].append(bound_to_dict(bound))
    report["best_bound"] = _num(bound.value)
    return report, EXIT_OK


def cmd_certify_theta(args) -> tuple[dict, int]:
    g = load_graph(args.file, args.compact)
    report = new_report(args, args.file, {"n": g.n, "m": g.m})
    cert = certify_theta(g, parse_ids(args.set))
    report["certificates"].append(certificate_to_dict(cert))
    return report, EXIT_OK


def cmd_check_equality(args) -> tuple[dict, int]:
    members = parse_ids(args.set)
    if args.t is None:
        g = load_graph(args.file, args.compact)
        report = new_report(args, args.file, {"n": g.n, "m": g.m})
        report["certificates"].append(certificate_to_dict(check_ratio_equality(g, members)))
        return report, EXIT_OK
    h = load_hypergraph(args.file)
    report = new_report(args, args.file, {"n": h.n, "k": h.k, "m": h.m, "t": args.t})
    bound = odd_t_bound(h, args.t, args.lam, config=_config(args))
    report["bounds"].append(bound_to_dict(bound))
    report["certificates"].append(certificate_to_dict(check_odd_t_equality(h, args.t, bound.lam, members)))
    return report, EXIT_OK


def cmd_exact_alpha(args) -> tuple[dict, int]:
    g = load_graph(args.file, args.compact)
    report = new_report(args, args.file, {"n": g.n, "m": g.m})
    report["exact"] = alpha_to_dict(exact_alpha(g, budget=args.budget))
    return report, EXIT_OK


def cmd_exact_alpha_t(args) -> tuple[dict, int]:
    h = load_hypergraph(args.file)
    report = new_report(args, args.file, {"n": h.n, "k": h.k, "m": h.m, "t": args.t})
    report["exact"] = alpha_to_dict(exact_alpha_t(h, args.t, _budget(args)), "alpha_t")
    return report, EXIT_OK


def cmd_exact_power_alpha(args) -> tuple[dict, int]:
    if args.k not in (1, 2):
        raise Refusal(f"only powers k <= 2 are supported (k={args.k})")
    g = load_graph(args.file, args.compact)
    gk = power_graph(g, args.k)
    res = exact_alpha(gk, budget=_budget(args))
    report = new_report(args, args.file, {"n": g.n, "m": g.m, "k": args.k, "power_n": gk.n})
    report["exact"] = alpha_to_dict(res)
    report["exact"]["alpha_witness_tuples"] = [list(decode_tuple(v, g.n, args.k)) for v in res.witness]
    report["exact"]["power_alpha_root"] = res.value ** (1.0 / args.k) if res.exact else None
    return report, EXIT_OK


def cmd_construct_odd_bipartite(args) -> tuple[Any, int]:
    inst = odd_bipartite_complete(args.k, args.t, args.a, args.b)
    if not args.json:
        header = f"# odd-bipartite k={args.k} t={args.t} a={args.a} b={args.b}"
        if inst.regular:
            header += f" regular d={inst.degree} lambda_min={inst.lambda_min:g}"
        return header + "\n" + serialize_hypergraph(inst.hypergraph), EXIT_OK
    report = new_report(args, None, {"k": args.k, "t": args.t, "a": args.a, "b": args.b})
    report["result"] = {
        "n": inst.hypergraph.n, "m": inst.hypergraph.m,
        "part1": list(inst.part1), "part2": list(inst.part2),
        "regular": inst.regular, "degree": inst.degree, "lambda_min": inst.lambda_min,
        "hypergraph": serialize_hypergraph(inst.hypergraph),
    }
    return report, EXIT_OK


def cmd_construct_pendant(args) -> tuple[Any, int]:
    g = load_graph(args.file, args.compact)
    inst = pendant_graph(g, parse_ids(args.p))
    if not args.json:
        header = f"# pendant graph from {args.file}, pendants {inst.pendants[0]}..{inst.pendants[-1]}"
        if inst.certificate is not None:
            header += f", certified alpha = {len(inst.pendants)}"
        return header + "\n" + serialize_graph(inst.graph), EXIT_OK
    report = new_report(args, args.file, {"p": parse_ids(args.p)})
    report["result"] = {"n": inst.graph.n, "m": inst.graph.m, "pendants": list(inst.pendants),
                        "feasible": inst.feasible, "graph": serialize_graph(inst.graph)}
    if inst.certificate is not None:
        report["certificates"].append(certificate_to_dict(inst.certificate))
    return report, EXIT_OK


def cmd_construct_join(args) -> tuple[Any, int]:
    g = join(load_graph(args.file1, args.compact), load_graph(args.file2, args.compact))
    if not args.json:
        return serialize_graph(g), EXIT_OK
    report = new_report(args, f"{args.file1} + {args.file2}", {})
    report["result"] = {"n": g.n, "m": g.m, "graph": serialize_graph(g)}
    return report, EXIT_OK


def cmd_construct_example46(args) -> tuple[dict, int]:
    c = join_bound_comparison(args.n1, args.r1, args.n2, args.r2)
    report = new_report(args, None, {"n1": args.n1, "r1": args.r1, "n2": args.n2, "r2": args.r2})
    report["bounds"] = [
        {"name": "beta1", "value": c.beta1, "tolerance": 1e-9},
        {"name": "haemers", "value": c.beta2, "tolerance": 1e-9},
        {"name": "laplacian", "value": c.beta3, "tolerance": 1e-9},
    ]
    report["result"] = {
        "join_n": c.n,
        "haemers_closed_form": c.beta2_closed,
        "laplacian_closed_form": c.beta3_closed,
        "mu_closed_form": c.mu_closed,
        "ordered": c.ordered,
    }
    return report, EXIT_OK


# -- parser ---------------------------------------------------------------


def _common(p: argparse.ArgumentParser, solver: bool = False) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON report instead of a table")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="solver seed")
    p.add_argument("--starts", type=int, default=SolverConfig.starts, help="solver starts")
    p.add_argument("--tol", type=float, default=SolverConfig.residual_tol,
                   help="solver residual tolerance")
    p.add_argument("--budget", type=int, default=None,
                   help="node budget for exact search (also lifts the size cap)")
    p.add_argument("--timing", action="store_true", help="record runtime_ms in the report")
    p.add_argument("--compact", action="store_true",
                   help="relabel sparse vertex ids of headerless graph files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-independence",
        description="Spectral upper bounds on independence numbers of graphs and hypergraphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    top = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = group.add_parser(name, help=help)
        _common(p)
        p.set_defaults(func=fn)
        return p

    bounds = top.add_parser("bounds", help="spectral bounds").add_subparsers(dest="kind", required=True)
    p = leaf(bounds, "graph", cmd_bounds_graph, "all applicable graph bounds and exact alpha")
    p.add_argument("file", nargs="?")
    p.add_argument("--dir", help="run on every matching file in a directory")
    p.add_argument("--glob", default="*.g", help="file pattern for --dir (default *.g)")
    p = leaf(bounds, "hypergraph", cmd_bounds_hypergraph, "bound on alpha_t of a hypergraph")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="minimum H-eigenvalue, taken as exact (skips the solver)")
    p.add_argument("--set", help="t-independent set for the equality test or the signing")

    certify = top.add_parser("certify", help="certificates").add_subparsers(dest="kind", required=True)
    p = leaf(certify, "theta", cmd_certify_theta, "certify alpha = Theta = theta = |S|")
    p.add_argument("file")
    p.add_argument("--set", required=True)

    check = top.add_parser("check", help="equality tests").add_subparsers(dest="kind", required=True)
    p = leaf(check, "equality", cmd_check_equality, "equality characterization for a set")
    p.add_argument("file")
    p.add_argument("--set", required=True)
    p.add_argument("--t", type=int, default=None, help="treat the file as a hypergraph")
    p.add_argument("--lambda", dest="lam", type=float, default=None)

    exact = top.add_parser("exact", help="exact values").add_subparsers(dest="kind", required=True)
    p = leaf(exact, "alpha", cmd_exact_alpha, "independence number")
    p.add_argument("file")
    p = leaf(exact, "alpha-t", cmd_exact_alpha_t, "t-independence number of a hypergraph")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p = leaf(exact, "power-alpha", cmd_exact_power_alpha, "alpha(G^k)^(1/k) for k <= 2")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=2)

    cons = top.add_parser("construct", help="instance generators").add_subparsers(dest="kind", required=True)
    p = leaf(cons, "odd-bipartite", cmd_construct_odd_bipartite, "complete odd-bipartite hypergraph")
    for name in ("k", "t", "a", "b"):
        p.add_argument(f"--{name}", type=int, required=True)
    p = leaf(cons, "pendant", cmd_construct_pendant, "attach pendant vertices")
    p.add_argument("file")
    p.add_argument("--p", required=True, help="pendant counts per vertex, comma separated")
    p = leaf(cons, "join", cmd_construct_join, "join of two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p = leaf(cons, "example46", cmd_construct_example46,
             "compare three bounds on the join of two regular graphs")
    for name in ("n1", "r1", "n2", "r2"):
        p.add_argument(f"--{name}", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        out, code = args.func(args)
    except Refusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(out, str):
        sys.stdout.write(out)
        return code
    if args.timing:
        out.setdefault("meta", {})["runtime_ms"] = round((time.perf_counter() - start) * 1e3, 3)
    if args.json:
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    elif "reports" in out:
        sys.stdout.write("\n".join(render_text(r) if "error" not in r else
                                   f"input: {r['input']}\nerror: {r['error']}\n"
                                   for r in out["reports"]))
    else:
        sys.stdout.write(render_text(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
