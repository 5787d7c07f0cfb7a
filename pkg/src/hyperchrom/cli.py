"""Command-line front end.

Subcommands wire the library into reproducible runs: chromatic,
delta-cycles, nb, list-count, plk, verify, gen.  All outputs are
deterministic for a fixed config and seed; every numeric result is also
available as a structured JSON record via --json.

Exit codes: 0 success (and all verdicts hold), 1 verdict failure
(oracle or route mismatch, a failing bound), 2 input error, 3 budget
refusal, 4 generator failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .bounds import reports_to_csv, theorem_certify, verify_grids
from .chromatic import chromatic_polynomial, count_proper_colorings
from .cycles import enumerate_delta_cycles, nb_subsets
from .errors import BudgetExceededError, GeneratorError, HyperchromError, InputError
from .hypercore import Hypergraph, validate
from .listcolor import (
    ListAssignment,
    alpha,
    count_L_colorings,
    count_L_colorings_expansion,
    list_color_function_exact,
    list_color_function_search,
)
from . import generators

__all__ = ["RunConfig", "main", "build_parser"]


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, parsed and validated."""

    subcommand: str
    inputs: tuple[str, ...] = ()
    eta: tuple[int, ...] | None = None
    k: int | None = None
    seed: int = 0
    out: str | None = None
    as_json: bool = False
    oracle: bool = False
    contains: int | None = None
    size: int | None = None
    heuristic: bool = False
    iterations: int = 400
    grids: bool = False
    theorem: int | None = None
    effort: str = "auto"
    csv: str | None = None
    family: str | None = None
    index: int | None = None
    n: int | None = None
    m: int | None = None
    r: int | None = None
    rho_min: int | None = None


def _parse_eta(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"--eta wants comma-separated integers: {exc}") from exc


def _load_hypergraph(path: str) -> Hypergraph:
    H = Hypergraph.load(path)
    problems = validate(H)
    if problems:
        raise InputError(f"{path}: {problems[0]}")
    return H


def _load_assignment(path: str) -> ListAssignment:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return ListAssignment.from_json(text)


def _labels_text(labels) -> str:
    return "{" + ",".join(f"e{lab}" for lab in labels) + "}"


def cmd_chromatic(cfg: RunConfig) -> int:
    H = _load_hypergraph(cfg.inputs[0])
    poly = chromatic_polynomial(H, eta=cfg.eta)
    rc = 0
    record: dict = {"poly": poly.to_pairs(), "text": str(poly)}
    lines = [str(poly)]
    if cfg.k is not None:
        value = poly.eval(cfg.k)
        record["k"] = cfg.k
        record["eval"] = value
        if cfg.oracle:
            brute = count_proper_colorings(H, cfg.k)
            record["oracle"] = brute
            if brute == value:
                lines.append(f"{value} (oracle agrees)")
            else:
                lines.append(f"{value} (oracle disagrees: brute force counts {brute})")
                rc = 1
        else:
            lines.append(str(value))
    if cfg.as_json:
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(lines))
    return rc


def cmd_delta_cycles(cfg: RunConfig) -> int:
    H = _load_hypergraph(cfg.inputs[0])
    catalog = enumerate_delta_cycles(H)
    broken = catalog.broken_per_cycle(cfg.eta)
    if cfg.as_json:
        record = {
            "count": len(catalog.cycles),
            "cycles": [
                {
                    "edges": list(cyc.labels),
                    "size": cyc.size,
                    "broken": list(brk.labels),
                }
                for cyc, brk in zip(catalog.cycles, broken)
            ],
        }
        print(json.dumps(record, sort_keys=True))
        return 0
    count = len(catalog.cycles)
    print(f"{count} delta-cycle{'s' if count != 1 else ''}")
    for cyc, brk in zip(catalog.cycles, broken):
        print(f"size {cyc.size}: {_labels_text(cyc.labels)} broken: {_labels_text(brk.labels)}")
    return 0


def cmd_nb(cfg: RunConfig) -> int:
    H = _load_hypergraph(cfg.inputs[0])
    subsets = [
        A.labels
        for A in nb_subsets(H, eta=cfg.eta, must_contain=cfg.contains, size=cfg.size)
    ]
    if cfg.as_json:
        print(json.dumps({"count": len(subsets), "subsets": [list(s) for s in subsets]}))
        return 0
    for labels in subsets:
        print(_labels_text(labels))
    print(f"{len(subsets)} subsets")
    return 0


def cmd_list_count(cfg: RunConfig) -> int:
    H = _load_hypergraph(cfg.inputs[0])
    L = _load_assignment(cfg.inputs[1])
    brute = count_L_colorings(H, L)
    expansion = count_L_colorings_expansion(H, L, eta=cfg.eta)
    profile = alpha(H, L)
    rc = 0 if brute == expansion else 1
    if cfg.as_json:
        record = {
            "P_HL": brute,
            "alpha": profile.total,
            "alpha_per_edge": list(profile.per_edge),
            "brute": brute,
            "expansion": expansion,
            "routes_agree": brute == expansion,
        }
        print(json.dumps(record, sort_keys=True))
        return rc
    print(f"P(H,L)={brute}, alpha={profile.total}")
    print(f"routes: brute={brute} expansion={expansion}")
    print(f"alpha per edge: {','.join(str(a) for a in profile.per_edge)}")
    if rc:
        print("ROUTE MISMATCH")
    return rc


def cmd_plk(cfg: RunConfig) -> int:
    H = _load_hypergraph(cfg.inputs[0])
    if cfg.k is None:
        raise InputError("plk needs --k")
    try:
        p = chromatic_polynomial(H).eval(cfg.k)
    except BudgetExceededError:
        # expansion over the edge cap; the direct count may still fit
        p = count_proper_colorings(H, cfg.k)
    if cfg.heuristic:
        value, witness = list_color_function_search(
            H, cfg.k, iterations=cfg.iterations, seed=cfg.seed
        )
        if cfg.as_json:
            record = {
                "P_l_upper": value,
                "P": p,
                "exact": False,
                "witness": json.loads(witness.to_json()),
            }
            print(json.dumps(record, sort_keys=True))
            return 0
        print(f"P_l<={value} (heuristic upper bound); P={p}")
        print(f"witness: {witness.to_json()}")
        return 0
    try:
        value, witness = list_color_function_exact(H, cfg.k)
    except BudgetExceededError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        print("hint: rerun with --heuristic for a search-based upper bound", file=sys.stderr)
        return 3
    rc = 0
    relation = "=" if value == p else "<"
    if value > p:
        relation = ">"
        rc = 1
    suffix = (
        "; witness: constant lists"
        if witness.is_constant()
        else f"; witness: {witness.to_json()}"
    )
    if cfg.as_json:
        record = {
            "P_l": value,
            "P": p,
            "exact": True,
            "equal": value == p,
            "witness": json.loads(witness.to_json()),
        }
        print(json.dumps(record, sort_keys=True))
        return rc
    print(f"P_l={value} {relation} P{suffix}")
    print(f"P(H,k)={p}")
    return rc


def _expand_paths(paths: tuple[str, ...]) -> list[str]:
    out: list[str] = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            out.extend(str(q) for q in sorted(p.glob("*.json")))
        else:
            out.append(raw)
    return out


def _report_to_record(rep) -> dict:
    return {
        "name": rep.name,
        "inputs": {key: value for key, value in rep.inputs.items()},
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "relation": rep.relation,
        "verdict": rep.verdict,
        "applicability": list(rep.applicability),
        "details": rep.details,
    }


def cmd_verify(cfg: RunConfig) -> int:
    reports = []
    if cfg.grids:
        reports.extend(verify_grids())
    if cfg.theorem is not None:
        if cfg.k is None:
            raise InputError("--theorem needs --k")
        files = _expand_paths(cfg.inputs)
        if not files:
            raise InputError("--theorem needs at least one instance file or directory")
        for path in files:
            H = _load_hypergraph(path)
            rep = theorem_certify(H, cfg.k, cfg.theorem, effort=cfg.effort)
            rep.inputs["instance"] = path
            reports.append(rep)
    elif not cfg.grids:
        raise InputError("nothing to verify: pass --grids and/or --theorem")
    if cfg.csv:
        Path(cfg.csv).write_text(reports_to_csv(reports))
    if cfg.as_json:
        print(json.dumps([_report_to_record(r) for r in reports], sort_keys=True, default=float))
    else:
        for rep in reports:
            where = rep.inputs.get("instance")
            tag = f" {where}" if where else ""
            if rep.verdict == "not-applicable":
                why = "; ".join(rep.applicability)
                print(f"{rep.name}{tag}: not-applicable ({why})")
            else:
                print(
                    f"{rep.name}{tag}: {rep.verdict} "
                    f"(lhs={rep.lhs} {rep.relation} rhs={rep.rhs})"
                )
    return 1 if any(rep.verdict == "fails" for rep in reports) else 0


def _need(cfg: RunConfig, **fields) -> list:
    values = []
    for name, value in fields.items():
        if value is None:
            raise InputError(f"--family {cfg.family} needs --{name}")
        values.append(value)
    return values


def cmd_gen(cfg: RunConfig) -> int:
    family = cfg.family
    if family in ("random-linear", "random-linear-r-uniform"):
        n, m, r = _need(cfg, n=cfg.n, m=cfg.m, r=cfg.r)
        H = generators.random_linear_r_uniform(n, m, r, seed=cfg.seed)
    elif family in ("random-rho", "random-r-uniform-rho"):
        n, m, r, rho_min = _need(cfg, n=cfg.n, m=cfg.m, r=cfg.r, rho=cfg.rho_min)
        H = generators.random_r_uniform_rho(n, m, r, rho_min, seed=cfg.seed)
    elif family == "tight-path":
        n, r = _need(cfg, n=cfg.n, r=cfg.r)
        H = generators.tight_path(n, r)
    elif family == "sunflower-free":
        n, m, r = _need(cfg, n=cfg.n, m=cfg.m, r=cfg.r)
        H = generators.sunflower_free(n, m, r, seed=cfg.seed)
    elif family == "fig1":
        (index,) = _need(cfg, index=cfg.index)
        H = generators.fig1(index)
    else:
        raise InputError(f"unknown family {family!r}")
    text = H.to_json() + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        print(text, end="")
    return 0


_HANDLERS = {
    "chromatic": cmd_chromatic,
    "delta-cycles": cmd_delta_cycles,
    "nb": cmd_nb,
    "list-count": cmd_list_count,
    "plk": cmd_plk,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperchrom",
        description="Exact chromatic polynomials and list-color functions of hypergraphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("chromatic", help="chromatic polynomial of a hypergraph file")
    p.add_argument("input")
    p.add_argument("--eta", help="edge ordering as comma-separated labels")
    p.add_argument("--k", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("delta-cycles", help="enumerate the delta-cycle catalog")
    p.add_argument("input")
    p.add_argument("--eta")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("nb", help="stream the broken-free edge subsets")
    p.add_argument("input")
    p.add_argument("--eta")
    p.add_argument("--contains", type=int, help="only subsets containing this edge label")
    p.add_argument("--size", type=int, help="only subsets of exactly this many edges")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("list-count", help="count list colorings by both routes")
    p.add_argument("input")
    p.add_argument("assignment")
    p.add_argument("--eta")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("plk", help="list-color function at k")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--heuristic", action="store_true", help="search-based upper bound")
    p.add_argument("--iterations", type=int, default=400)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="grid checks and theorem certification")
    p.add_argument("inputs", nargs="*", help="instance files or directories")
    p.add_argument("--grids", action="store_true")
    p.add_argument("--theorem", type=int, choices=(1, 2, 3))
    p.add_argument("--k", type=int)
    p.add_argument("--effort", choices=("auto", "threshold", "exact"), default="auto")
    p.add_argument("--csv", help="write reports as CSV to this path")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "random-linear",
            "random-linear-r-uniform",
            "random-rho",
            "random-r-uniform-rho",
            "tight-path",
            "sunflower-free",
            "fig1",
        ),
    )
    p.add_argument("--index", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--rho", type=int, dest="rho_min")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default stdout)")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    inputs: tuple[str, ...] = ()
    if hasattr(args, "inputs"):
        inputs = tuple(args.inputs)
    elif hasattr(args, "input"):
        inputs = (args.input,)
        if hasattr(args, "assignment"):
            inputs += (args.assignment,)
    return RunConfig(
        subcommand=args.subcommand,
        inputs=inputs,
        eta=_parse_eta(getattr(args, "eta", None)),
        k=getattr(args, "k", None),
        seed=getattr(args, "seed", 0),
        out=getattr(args, "out", None),
        as_json=getattr(args, "json", False),
        oracle=getattr(args, "oracle", False),
        contains=getattr(args, "contains", None),
        size=getattr(args, "size", None),
        heuristic=getattr(args, "heuristic", False),
        iterations=getattr(args, "iterations", 400),
        grids=getattr(args, "grids", False),
        theorem=getattr(args, "theorem", None),
        effort=getattr(args, "effort", "auto"),
        csv=getattr(args, "csv", None),
        family=getattr(args, "family", None),
        index=getattr(args, "index", None),
        n=getattr(args, "n", None),
        m=getattr(args, "m", None),
        r=getattr(args, "r", None),
        rho_min=getattr(args, "rho_min", None),
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _HANDLERS[cfg.subcommand](cfg)
    except BudgetExceededError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return 3
    except GeneratorError as exc:
        print(f"generator failed: {exc}", file=sys.stderr)
        return 4
    except HyperchromError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
