"""Command-line front end.

Every subcommand writes one JSON document to stdout (or ``--output``);
progress goes to stderr. ``--table`` renders the same data as text.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import formulas, verify
from .distinguishability import DiagnosticModel
from .engine import brute_force_diagnosability, upper_bound_from_witness
from .errors import DiagLabError, InvalidInputError
from .fault_models import FaultModelSpec, m_connectivity
from .topology import TopologySpec
from .witnesses import ARRANGEMENT_SHAPES, arrangement_witness, hypercube_star_witness, nk_star_witness

FAULT_CHOICES = ("unrestricted", "conditional", "g-good-neighbor", "g-extra")


def _log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=("hypercube", "nk-star", "nk_star", "arrangement"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)


def _fault_args(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--fault", choices=FAULT_CHOICES, default=default)
    p.add_argument("--g", type=int, default=None, help="g for the good-neighbor/extra models")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", default=None, help="write JSON here instead of stdout")
    p.add_argument("--table", action="store_true", help="print a text table instead of JSON")


def _spec(args) -> TopologySpec:
    return TopologySpec(args.family, args.n, args.k)


def _fault(args) -> FaultModelSpec:
    kind = args.fault.replace("-", "_")
    if kind in ("g_good_neighbor", "g_extra"):
        if args.g is None:
            raise InvalidInputError(f"--fault {args.fault} needs --g")
        return FaultModelSpec(kind, args.g)
    if args.g:
        raise InvalidInputError(f"--fault {args.fault} takes no --g")
    return FaultModelSpec(kind)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diaglab", description="restricted diagnosability toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("topology", help="emit a generated graph as JSON")
    _graph_args(p)
    _common(p)

    p = sub.add_parser("diag", help="brute-force diagnosability")
    _graph_args(p)
    _fault_args(p, "unrestricted")
    p.add_argument("--model", required=True, help="pmc or mmstar")
    p.add_argument("--cap", type=int, default=None, help="largest pair size searched (default |V|/2)")
    p.add_argument("--workers", type=int, default=None)
    _common(p)

    p = sub.add_parser("kappa", help="brute-force M-connectivity")
    _graph_args(p)
    _fault_args(p, "unrestricted")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    _common(p)

    p = sub.add_parser("witness", help="build an upper-bound witness N(Y)")
    _graph_args(p)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--shape", choices=ARRANGEMENT_SHAPES, default=None, help="arrangement seed shape")
    _common(p)

    p = sub.add_parser("catalog", help="dump or evaluate the formula catalog")
    p.add_argument("--id", default=None, help="entry to evaluate")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--g", type=int, default=None)
    _common(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--pairs", type=int, default=100_000, help="random decider/oracle pairs per graph")
    _common(p)
    return parser


def cmd_topology(args) -> tuple[dict, int]:
    return _spec(args).build().to_dict(), 0


def cmd_diag(args) -> tuple[dict, int]:
    g = _spec(args).build()
    fault = _fault(args)
    model = DiagnosticModel.parse(args.model)
    res = brute_force_diagnosability(g, fault, model, args.cap, workers=args.workers, progress=_log)
    out = res.to_dict(g)
    out["topology"] = _spec(args).to_dict()
    return out, 0


def cmd_kappa(args) -> tuple[dict, int]:
    g = _spec(args).build()
    fault = _fault(args)
    res = m_connectivity(g, fault, args.cap, workers=args.workers)
    out = res.to_dict(g)
    out.update(topology=_spec(args).to_dict(), model=fault.to_dict(), cap=res.cap)
    return out, 0


def cmd_witness(args) -> tuple[dict, int]:
    spec = _spec(args)
    if spec.family == "hypercube":
        wp = hypercube_star_witness(spec.n, 0 if args.g is None else args.g)
    elif spec.family == "nk_star":
        wp = nk_star_witness(spec.n, spec.k, 1 if args.g is None else args.g)
    else:
        if args.shape is None:
            raise InvalidInputError("arrangement witnesses need --shape")
        wp = arrangement_witness(spec.n, spec.k, args.shape)
    out = wp.to_dict()
    try:
        bound = upper_bound_from_witness(wp.graph, wp.y, FaultModelSpec.extra(wp.g))
        out["upper_bound"] = bound.to_dict()
    except DiagLabError as exc:
        out["upper_bound"] = {"error": str(exc)}
    return out, 0


def cmd_catalog(args) -> tuple[object, int]:
    if args.id is None:
        return formulas.catalog_dump(), 0
    entry = formulas.get(args.id)
    value = entry.evaluate(args.n, args.k, args.g)
    return {"id": entry.id, "params": {"n": args.n, "k": args.k, "g": args.g}, "value": value}, 0


def cmd_verify(args) -> tuple[dict, int]:
    reports = verify.run_suite(args.suite, _log, args.seed, args.pairs)
    failed = [r for r in reports if not r.passed]
    out = {
        "suite": args.suite,
        "seed": args.seed,
        "passed": len(reports) - len(failed),
        "failed": len(failed),
        "checks": [r.to_dict() for r in reports],
    }
    return out, 0 if not failed else 1


COMMANDS = {
    "topology": cmd_topology,
    "diag": cmd_diag,
    "kappa": cmd_kappa,
    "witness": cmd_witness,
    "catalog": cmd_catalog,
    "verify": cmd_verify,
}


def render_table(data) -> str:
    if isinstance(data, dict) and "checks" in data:
        rows = [(c["status"].upper(), c["name"], "" if c["status"] == "pass" else f"{c['observed']!r}")
                for c in data["checks"]]
        w = max(len(r[1]) for r in rows) if rows else 0
        lines = [f"{s:<5} {name:<{w}}  {obs}".rstrip() for s, name, obs in rows]
        lines.append(f"{data['passed']} passed, {data['failed']} failed")
        return "\n".join(lines)
    if isinstance(data, list):
        rows = [(d["id"], d["quantity"], d["family"], d["diagnostic"] or "-", d["range"]) for d in data]
        widths = [max(len(str(r[i])) for r in rows) for i in range(4)]
        return "\n".join("  ".join(f"{str(c):<{widths[i]}}" for i, c in enumerate(r[:4])) + "  " + r[4]
                         for r in rows)
    return "\n".join(f"{key}: {json.dumps(val)}" for key, val in data.items())


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data, code = COMMANDS[args.command](args)
    except DiagLabError as exc:
        print(f"diaglab: error: {exc}", file=sys.stderr)
        return 2
    text = render_table(data) if args.table else json.dumps(data, indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
