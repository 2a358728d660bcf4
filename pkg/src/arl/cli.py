"""Command line front end.

Subcommands mirror the library: construct, color, check, solve, bounds,
verify-paper.  Every run is a pure function of its argument vector; the only
ambient input is ARL_DEFAULT_BUDGET ("NODES" or "NODES,SECONDS"), which fills
in budget flags that were not given explicitly.

Exit codes: 0 success, 1 verify-paper found a failing check, 2 bad
arguments, 3 budget exhausted where an exact answer was required.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from . import formats
from .bounds import bound_report
from .coloring import BudgetExhausted, is_rainbow_family_free, layered_coloring
from .constructions import (
    NAMED_DESCRIPTORS,
    blowup,
    expansion,
    minus_family,
    named_hypergraph,
    pendant_minus_family,
    special_blowup_graph,
    split_set,
    splitting_family,
    turan_hypergraph,
)
from .hypergraph import Family, Hypergraph, make_family
from .search import SearchBudget, exact_anti_ramsey, exact_turan
from .verify import DEFAULT_SEED, suite_counts, suite_to_text, verify_paper_suite

__all__ = ["main", "run_command"]


def _read_hypergraph(path: str) -> Hypergraph:
    text = Path(path).read_text()
    if path.endswith(".json"):
        import json

        return formats.hypergraph_from_json(json.loads(text))
    return formats.hypergraph_from_text(text)


def _patterns_from(args) -> list[Hypergraph]:
    pats: list[Hypergraph] = []
    if getattr(args, "family", None):
        for token in args.family.split(","):
            pats.append(named_hypergraph(token.strip()))
    if getattr(args, "infile", None):
        pats.append(_read_hypergraph(args.infile))
    if not pats:
        raise ValueError("need --family descriptor(s) or --in FILE")
    return pats


def _single_pattern(args) -> Hypergraph:
    pats = _patterns_from(args)
    if len(pats) != 1:
        raise ValueError("exactly one pattern expected here")
    return pats[0]


def _budget_from(args) -> Optional[SearchBudget]:
    nodes = getattr(args, "budget_nodes", None)
    secs = getattr(args, "budget_secs", None)
    if nodes is None and secs is None:
        env = os.environ.get("ARL_DEFAULT_BUDGET", "").strip()
        if env:
            parts = env.split(",")
            try:
                nodes = int(parts[0])
                secs = float(parts[1]) if len(parts) > 1 else None
            except ValueError as exc:
                raise ValueError(f"bad ARL_DEFAULT_BUDGET {env!r}") from exc
    if nodes is None and secs is None:
        return None
    return SearchBudget(max_nodes=nodes, max_seconds=secs)


def _emit(args, text: str, payload: dict) -> None:
    out = formats.dumps(payload) if args.format == "json" else text
    if getattr(args, "out", None):
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")


def _add_pattern_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--family",
        help="inline descriptor(s), comma separated: "
        + ", ".join(NAMED_DESCRIPTORS),
    )
    p.add_argument("--in", dest="infile", help="hypergraph file (text or .json)")


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="arl",
        description="constructions, rainbow colorings and exact extremal "
        "solvers for small uniform hypergraphs",
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a hypergraph or family")
    csub = c.add_subparsers(dest="what", required=True)

    p = csub.add_parser("expansion", help="pad each edge with fresh vertices")
    _add_pattern_flags(p)
    p.add_argument("--r", type=int, required=True)
    _add_io_flags(p)

    p = csub.add_parser("blowup", help="replace vertices by t-sets")
    _add_pattern_flags(p)
    p.add_argument("--t", type=int, required=True)
    _add_io_flags(p)

    p = csub.add_parser("split", help="split an independent vertex set")
    _add_pattern_flags(p)
    p.add_argument("--vertices", required=True, help="comma separated, e.g. 0,2")
    p.add_argument("--mode", choices=("weak", "strong"), default="weak")
    _add_io_flags(p)

    p = csub.add_parser("split-family", help="all splittings up to isomorphism")
    _add_pattern_flags(p)
    p.add_argument("--mode", choices=("weak", "strong"), default="weak")
    _add_io_flags(p)

    p = csub.add_parser("minus", help="single-edge deletions up to isomorphism")
    _add_pattern_flags(p)
    p.add_argument("--keep-isolated", action="store_true")
    _add_io_flags(p)

    p = csub.add_parser("pendant-minus", help="k-pendant edge deletions")
    _add_pattern_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--keep-isolated", action="store_true")
    _add_io_flags(p)

    p = csub.add_parser("turan", help="complete multipartite r-graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    _add_io_flags(p)

    p = csub.add_parser("special", help="blowup of K_ell with extra edges")
    p.add_argument("--kind", choices=("alpha", "beta", "gamma", "plus"), required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    _add_io_flags(p)

    col = sub.add_parser("color", help="build distinguished colorings")
    colsub = col.add_subparsers(dest="what", required=True)
    p = colsub.add_parser("layered", help="part-based triple coloring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    _add_io_flags(p)

    chk = sub.add_parser("check", help="decide properties of given objects")
    chksub = chk.add_subparsers(dest="what", required=True)
    p = chksub.add_parser("rainbow-free", help="is a coloring rainbow-free?")
    p.add_argument("--coloring", required=True, help="coloring file (text or .json)")
    _add_pattern_flags(p)
    p.add_argument("--budget-nodes", type=int, default=None)
    _add_io_flags(p)

    sol = sub.add_parser("solve", help="exact extremal solvers")
    solsub = sol.add_subparsers(dest="what", required=True)
    p = solsub.add_parser("ex", help="maximum pattern-free edge count")
    p.add_argument("--n", type=int, required=True)
    _add_pattern_flags(p)
    _add_budget_flags(p)
    p.add_argument("--root-symmetry", action="store_true")
    _add_io_flags(p)
    p = solsub.add_parser("ar", help="least color count forcing a rainbow copy")
    p.add_argument("--n", type=int, required=True)
    _add_pattern_flags(p)
    _add_budget_flags(p)
    _add_io_flags(p)

    b = sub.add_parser("bounds", help="bound templates at one (n, F)")
    b.add_argument("--n", type=int, required=True)
    _add_pattern_flags(b)
    b.add_argument("--r", type=int, default=None, help="expand the pattern to this uniformity")
    _add_budget_flags(b)
    _add_io_flags(b)

    v = sub.add_parser("verify-paper", help="run the named check suite")
    v.add_argument("--budget-nodes", type=int, default=None)
    v.add_argument("--budget-secs", type=float, default=None)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--only", default=None, help="run only matching check groups")
    _add_io_flags(v)

    return top


def _family_payload(fam: Family) -> dict:
    return {"members": [formats.hypergraph_to_json(m) for m in fam.members]}


def _family_text(fam: Family) -> str:
    parts = [f"{len(fam.members)} members"]
    for i, m in enumerate(fam.members):
        parts.append(f"# member {i}")
        parts.append(formats.hypergraph_to_text(m).rstrip("\n"))
    return "\n".join(parts) + "\n"


def _cmd_construct(args) -> int:
    if args.what == "turan":
        h = turan_hypergraph(args.n, args.ell, args.r)
    elif args.what == "special":
        h = special_blowup_graph(args.kind, args.ell, args.t)
    elif args.what == "expansion":
        h = expansion(_single_pattern(args), args.r)
    elif args.what == "blowup":
        h = blowup(_single_pattern(args), args.t)
    elif args.what == "split":
        verts = [int(tok) for tok in args.vertices.split(",") if tok.strip() != ""]
        h = split_set(_single_pattern(args), verts, args.mode)
    elif args.what == "split-family":
        fam = splitting_family(_single_pattern(args), args.mode)
        _emit(args, _family_text(fam), _family_payload(fam))
        return 0
    elif args.what == "minus":
        fam = minus_family(
            _single_pattern(args), drop_isolated=not args.keep_isolated
        )
        _emit(args, _family_text(fam), _family_payload(fam))
        return 0
    elif args.what == "pendant-minus":
        fam = pendant_minus_family(
            _single_pattern(args), args.k, drop_isolated=not args.keep_isolated
        )
        _emit(args, _family_text(fam), _family_payload(fam))
        return 0
    else:  # pragma: no cover - argparse guards
        raise ValueError(args.what)
    _emit(args, formats.hypergraph_to_text(h), formats.hypergraph_to_json(h))
    return 0


def _cmd_color(args) -> int:
    chi = layered_coloring(args.n, args.ell)
    _emit(args, formats.coloring_to_text(chi), formats.coloring_to_json(chi))
    return 0


def _read_coloring(path: str):
    text = Path(path).read_text()
    if path.endswith(".json"):
        import json

        return formats.coloring_from_json(json.loads(text))
    return formats.coloring_from_text(text)


def _cmd_check(args) -> int:
    chi = _read_coloring(args.coloring)
    fam = make_family(_patterns_from(args))
    try:
        rep = is_rainbow_family_free(chi, fam, limit=args.budget_nodes)
    except BudgetExhausted as exc:
        _emit(
            args,
            f"undecided: {exc}\n",
            {"free": None, "note": str(exc)},
        )
        return 3
    if rep.free:
        _emit(args, "rainbow-free: yes\n", {"free": True})
        return 0
    w = rep.witness
    assert w is not None
    text = ["rainbow-free: no", f"member: {rep.member_index}"]
    for edge, colr in w.edge_colors:
        text.append(f"  edge {' '.join(map(str, edge))} color {colr}")
    payload = {
        "free": False,
        "member_index": rep.member_index,
        "witness": {
            "images": list(w.embedding.images),
            "edges": [
                {"edge": list(edge), "color": colr} for edge, colr in w.edge_colors
            ],
        },
    }
    _emit(args, "\n".join(text) + "\n", payload)
    return 0


def _cmd_solve(args) -> int:
    budget = _budget_from(args)
    if args.what == "ex":
        fam = make_family(_patterns_from(args))
        rep = exact_turan(
            args.n,
            fam,
            budget=budget,
            root_symmetry=args.root_symmetry,
            threads=args.threads,
        )
    else:
        rep = exact_anti_ramsey(
            args.n, _single_pattern(args), budget=budget, threads=args.threads
        )
    _emit(args, formats.report_to_text(rep), formats.report_to_json(rep))
    return 3 if rep.status == "budget_exhausted" else 0


def _cmd_bounds(args) -> int:
    table = bound_report(
        args.n,
        _single_pattern(args),
        r=args.r,
        budget=_budget_from(args),
        threads=args.threads,
    )
    _emit(args, formats.bounds_to_text(table), formats.bounds_to_json(table))
    return 3 if table.ar_status == "budget_exhausted" else 0


def _cmd_verify(args) -> int:
    rows = verify_paper_suite(_budget_from(args), seed=args.seed, only=args.only)
    if args.only and not rows:
        # a filter that matches nothing is almost certainly a typo
        raise ValueError(f"--only {args.only!r} matches no check group")
    payload = {
        "rows": [
            {
                "name": r.name,
                "expected": r.expected,
                "got": r.got,
                "verdict": r.verdict,
                "note": r.note,
            }
            for r in rows
        ]
    }
    _emit(args, suite_to_text(rows), payload)
    _, nfail, _ = suite_counts(rows)
    return 1 if nfail else 0


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "construct":
            return _cmd_construct(args)
        if args.cmd == "color":
            return _cmd_color(args)
        if args.cmd == "check":
            return _cmd_check(args)
        if args.cmd == "solve":
            return _cmd_solve(args)
        if args.cmd == "bounds":
            return _cmd_bounds(args)
        if args.cmd == "verify-paper":
            return _cmd_verify(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
