"""Command-line front end.

Every command prints one report. With ``--format json`` (the default) the
report is a JSON object::

    {"command": ..., "params": ..., "outcome": ..., "result": ...,
     "wall_time": ..., "version": ..., "input_sha256": ...}

``outcome`` is one of ``value``, ``certificate``, ``refutation``,
``budget-exceeded`` or ``error``. Exit codes: 0 success, 1 domain error or
failed verification, 2 budget exhausted, 3 I/O error.

Inputs are a file path, ``-`` for stdin, or inline JSON. A previous report
is accepted wherever its ``result`` would be, so commands chain.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time

from . import __version__
from ._budget import DEFAULT_NODES, DEFAULT_SECONDS, Budget
from .betti import betti_table, componentwise_linear_witness, linear_resolution_witness
from .constructions import from_family_spec
from .decomposable import VDCertificate, is_vertex_decomposable, seq_cm_proxy, validate_vertex_decomposition
from .errors import BudgetExceeded, CoverIdealError, FormatError
from .graph import (
    Graph,
    from_json as graph_from_json,
    induced_matching_number,
    matching_number,
    minimal_vertex_covers,
    to_json as graph_to_json,
)
from .ideal import (
    MonomialIdeal,
    alexander_dual,
    cover_ideal,
    edge_ideal,
    from_json as ideal_from_json,
    intersect,
    polarize,
    power,
    symbolic_power_cover,
    to_json as ideal_to_json,
)
from .quotients import LinearQuotientCertificate, linear_quotients_order, validate_linear_quotients
from .verify import ALIASES, CHECKS, resolve, run_check

log = logging.getLogger("coverideal")


class InputError(OSError):
    exit_code = 3


# -- input handling ----------------------------------------------------------


class Inputs:
    """Reads command inputs and hashes their raw bytes in order."""

    def __init__(self):
        self._hash = hashlib.sha256()

    def read(self, source: str):
        if source == "-":
            raw = sys.stdin.read()
        elif source.lstrip().startswith(("{", "[")):
            raw = source
        else:
            try:
                with open(source, encoding="utf-8") as fh:
                    raw = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read {source}: {exc.strerror}") from None
        self._hash.update(raw.encode())
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
        if isinstance(data, dict) and "outcome" in data and "result" in data:
            data = data["result"]
        return data

    @property
    def sha256(self) -> str:
        return self._hash.hexdigest()


def _as_graph(data) -> Graph:
    if isinstance(data, dict) and "family" in data:
        return from_family_spec(data)
    return graph_from_json(data)


def _is_ideal(data) -> bool:
    return isinstance(data, dict) and "generators" in data


def _target_ideal(data, k: int) -> MonomialIdeal:
    """An ideal as given, or ``J(G)^(k)`` for a graph."""
    if _is_ideal(data):
        return ideal_from_json(data)
    g = _as_graph(data)
    return symbolic_power_cover(g, k) if k > 1 else cover_ideal(g)


# -- commands ----------------------------------------------------------------
# each returns (outcome, result)


def cmd_graph_gen(args, inputs):
    return "value", graph_to_json(_as_graph(inputs.read(args.input)))


def cmd_graph_info(args, inputs):
    g = _as_graph(inputs.read(args.input))
    covers = minimal_vertex_covers(g)
    info = {
        "vertices": g.n,
        "edges": g.num_edges,
        "degrees": {x: g.degree(x) for x in g.labels},
        "minimal_vertex_covers": len(covers),
        "max_cover_size": max((bin(c).count("1") for c in covers), default=0),
    }
    if g.num_edges <= 24:
        m, im = matching_number(g), induced_matching_number(g)
        info.update(matching_number=m, induced_matching_number=im, cameron_walker=m == im)
    return "value", info


def cmd_ideal(args, inputs):
    op = args.op
    if op in ("cover", "edge", "symbolic-power"):
        g = _as_graph(inputs.read(args.input))
        if op == "cover":
            ideal = cover_ideal(g)
        elif op == "edge":
            ideal = edge_ideal(g)
        else:
            ideal = symbolic_power_cover(g, args.k)
        return "value", ideal_to_json(ideal)
    a = ideal_from_json(inputs.read(args.input))
    if op == "power":
        return "value", ideal_to_json(power(a, args.k))
    if op == "intersect":
        if args.other is None:
            raise FormatError("intersect needs a second ideal")
        return "value", ideal_to_json(intersect(a, ideal_from_json(inputs.read(args.other))))
    if op == "polarize":
        return "value", ideal_to_json(polarize(a)[0])
    if op == "dual":
        return "value", ideal_to_json(alexander_dual(a))
    raise FormatError(f"unknown ideal operation {op!r}")


def cmd_check(args, inputs):
    pred = args.pred
    data = inputs.read(args.input)
    budget = Budget(args.budget_nodes, args.budget_secs)
    if pred in ("vd", "seqcm"):
        g = _as_graph(data)
        if pred == "seqcm":
            return "value", {"sequentially_cm": seq_cm_proxy(g, args.field), "field": args.field}
        cert = is_vertex_decomposable(g, budget)
        return ("certificate" if cert.certified else "refutation"), cert.to_json()
    ideal = _target_ideal(data, args.k)
    if pred == "lq":
        if args.polarize:
            ideal = polarize(ideal)[0]
        cert = linear_quotients_order(ideal, budget)
        return ("certificate" if cert.certified else "refutation"), cert.to_json()
    if pred == "cwl":
        d = componentwise_linear_witness(ideal, args.field)
        return "value", {"componentwise_linear": d is None, "failing_degree": d, "field": args.field}
    if pred == "linres":
        w = linear_resolution_witness(ideal, args.field)
        return "value", {"linear_resolution": w is None, "witness": w and list(w), "field": args.field}
    raise FormatError(f"unknown predicate {pred!r}")


def cmd_betti(args, inputs):
    ideal = _target_ideal(inputs.read(args.input), args.k)
    table = betti_table(ideal, args.field, method=args.method, n_jobs=args.threads)
    out = table.to_json()
    out["text"] = table.render()
    return "value", out


def cmd_reg(args, inputs):
    ideal = _target_ideal(inputs.read(args.input), args.k)
    table = betti_table(ideal, args.field, n_jobs=args.threads)
    return "value", {"regularity": table.regularity(), "field": args.field}


def cmd_validate(args, inputs):
    data = inputs.read(args.input)
    budget = Budget(args.budget_nodes, args.budget_secs)
    kind = data.get("type") if isinstance(data, dict) else None
    if kind == "linear-quotients":
        ok = validate_linear_quotients(LinearQuotientCertificate.from_json(data), budget)
    elif kind == "vertex-decomposition":
        ok = validate_vertex_decomposition(VDCertificate.from_json(data), budget)
    else:
        raise FormatError(f"unknown certificate type {kind!r}")
    return "value", {"type": kind, "valid": ok}


def cmd_verify(args, inputs):
    keys = []
    for name in args.checks or ["all"]:
        try:
            keys += [k for k in resolve(name) if k not in keys]
        except KeyError as exc:
            raise FormatError(str(exc.args[0])) from None
    reverse = {v: k for k, v in ALIASES.items()}
    results = []
    for key in keys:
        res = run_check(key, args.budget_nodes, args.budget_secs)
        row = res.to_json()
        row["alias"] = reverse.get(key)
        results.append(row)
        log.info("%s %s (%.1fs)", "PASS" if res.passed else "FAIL", key, res.seconds)
    return "value", {"passed": all(r["passed"] for r in results), "checks": results}


# -- output ------------------------------------------------------------------


def _render_text(report: dict) -> str:
    result = report.get("result")
    head = f"{report['command']}: {report['outcome']}"
    if report["outcome"] == "error" or report["outcome"] == "budget-exceeded":
        return f"{head}: {report.get('message', '')}\n"
    if report["command"] == "verify":
        lines = [head]
        for r in result["checks"]:
            mark = "PASS" if r["passed"] else "FAIL"
            lines.append(f"{mark}  {r['alias'] or '-':<9} {r['key']:<24} {r['cases']:>6} cases  {r['seconds']:.2f}s")
            lines.extend(f"      {f}" for f in r["failures"])
            if r["details"]:
                lines.append("      " + json.dumps(r["details"], sort_keys=True))
        return "\n".join(lines) + "\n"
    if report["command"] == "betti":
        return head + "\n" + result["text"]
    return head + "\n" + json.dumps(result, indent=2) + "\n"


def _emit(report: dict, args) -> int:
    fmt = getattr(args, "format", "json")
    text = _render_text(report) if fmt == "text" else json.dumps(report, indent=2) + "\n"
    out = getattr(args, "out", None)
    if out:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            err = {**report, "outcome": "error", "result": None, "message": f"cannot write {out}: {exc.strerror}"}
            sys.stdout.write(json.dumps(err, indent=2) + "\n")
            return 3
    else:
        sys.stdout.write(text)
    return 0


COMMANDS = {
    "graph gen": cmd_graph_gen,
    "graph info": cmd_graph_info,
    "ideal": cmd_ideal,
    "check": cmd_check,
    "betti": cmd_betti,
    "reg": cmd_reg,
    "validate": cmd_validate,
    "verify": cmd_verify,
}


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=_positive(int), default=1, help="symbolic or ordinary power (default 1)")
    common.add_argument("--field", type=int, default=2, help="prime characteristic (default 2)")
    common.add_argument("--budget-nodes", type=_positive(int), default=DEFAULT_NODES)
    common.add_argument("--budget-secs", type=_positive(float), default=DEFAULT_SECONDS)
    common.add_argument("--threads", type=_positive(int), default=1, help="worker processes for Betti tables")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="coverideal", description="Cover ideals, symbolic powers and certificates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="build or describe graphs")
    gsub = graph.add_subparsers(dest="graph_cmd", required=True)
    for name, doc in (("gen", "build a graph from a family spec"), ("info", "basic invariants")):
        p = gsub.add_parser(name, parents=[common], help=doc)
        p.add_argument("input")

    ideal = sub.add_parser("ideal", parents=[common], help="monomial ideal operations")
    ideal.add_argument("op", choices=("cover", "edge", "symbolic-power", "power", "intersect", "polarize", "dual"))
    ideal.add_argument("input")
    ideal.add_argument("other", nargs="?", help="second ideal for intersect")

    check = sub.add_parser("check", parents=[common], help="decide a property")
    check.add_argument("pred", choices=("lq", "vd", "cwl", "linres", "seqcm"))
    check.add_argument("input", help="graph, family spec or ideal; graphs stand for J(G)^(k)")
    check.add_argument("--polarize", action="store_true", help="polarize the ideal before an lq search")

    betti = sub.add_parser("betti", parents=[common], help="graded Betti table")
    betti.add_argument("input")
    betti.add_argument("--method", choices=("koszul", "hochster"), default="koszul")

    reg = sub.add_parser("reg", parents=[common], help="regularity of the ideal")
    reg.add_argument("input")

    validate = sub.add_parser("validate", parents=[common], help="re-check a certificate")
    validate.add_argument("input")

    verify = sub.add_parser("verify", parents=[common], help="run the bundled check suites")
    verify.add_argument(
        "checks", nargs="*", metavar="CHECK",
        help="all (default), a check name or a numbered key: " + ", ".join(list(CHECKS) + list(ALIASES)),
    )
    return parser


def _params(args) -> dict:
    skip = {"command", "graph_cmd", "format", "out", "input", "other", "budget_nodes", "budget_secs", "threads"}
    out = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    if args.command in ("check", "validate", "verify"):
        out["budget"] = {"nodes": args.budget_nodes, "seconds": args.budget_secs}
    return out


def main(argv=None) -> int:
    level = os.environ.get("COVERIDEAL_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    name = f"graph {args.graph_cmd}" if args.command == "graph" else args.command
    label = {"ideal": f"ideal {getattr(args, 'op', '')}", "check": f"check {getattr(args, 'pred', '')}"}.get(name, name)
    inputs = Inputs()
    report = {"command": label, "params": _params(args), "version": __version__}
    start = time.monotonic()
    code = 0
    try:
        outcome, result = COMMANDS[name](args, inputs)
        report.update(outcome=outcome, result=result)
        if name == "verify" and not result["passed"]:
            code = 1
        if name == "validate" and not result["valid"]:
            code = 1
    except BudgetExceeded as exc:
        report.update(outcome="budget-exceeded", result=None, message=str(exc),
                      nodes=exc.nodes)
        code = 2
    except InputError as exc:
        report.update(outcome="error", result=None, message=str(exc))
        code = 3
    except (CoverIdealError, ValueError, KeyError, TypeError) as exc:
        report.update(outcome="error", result=None, message=f"{type(exc).__name__}: {exc}")
        code = 1
    report["wall_time"] = round(time.monotonic() - start, 6)
    report["input_sha256"] = inputs.sha256
    return _emit(report, args) or code


if __name__ == "__main__":
    sys.exit(main())
