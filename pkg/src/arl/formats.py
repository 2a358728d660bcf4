"""Text and JSON round-trip formats.

Text formats are line based and carry exactly the canonical object:

* hypergraph:  header "n r", then one edge per line, vertices ascending,
               lines in colex rank order.  '#' starts a comment line.
* coloring:    header "n r num_colors", then a single line with C(n,r)
               color ids in colex rank order.

JSON mirrors the same fields.  Parsing is strict: anything that would not
re-serialize to the same bytes (unsorted edges, gap in color ids, wrong
counts) is rejected rather than repaired, so round trips are exact.
"""

from __future__ import annotations

import json
from typing import Optional

from .bounds import BoundsTable
from .coloring import Coloring, make_coloring
from .hypergraph import Hypergraph, make_hypergraph
from .search import SearchReport

__all__ = [
    "hypergraph_to_text",
    "hypergraph_from_text",
    "hypergraph_to_json",
    "hypergraph_from_json",
    "coloring_to_text",
    "coloring_from_text",
    "coloring_to_json",
    "coloring_from_json",
    "report_to_json",
    "report_from_json",
    "report_to_text",
    "bounds_to_json",
    "bounds_to_text",
    "dumps",
]


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def hypergraph_to_text(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.r}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty hypergraph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n r', got {lines[0]!r}")
    n, r = int(head[0]), int(head[1])
    edges = []
    for line in lines[1:]:
        e = tuple(int(tok) for tok in line.split())
        # constructor would silently sort; text is canonical, so reject
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ValueError(f"edge line not strictly ascending: {line!r}")
        edges.append(e)
    h = make_hypergraph(n, r, edges)
    if h.edges != tuple(edges):
        raise ValueError("edge lines not in colex rank order")
    return h


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"n": h.n, "r": h.r, "edges": [list(e) for e in h.edges]}


def hypergraph_from_json(d: dict) -> Hypergraph:
    return make_hypergraph(d["n"], d["r"], [tuple(e) for e in d["edges"]])


def coloring_to_text(chi: Coloring) -> str:
    lines = [f"{chi.n} {chi.r} {chi.num_colors}"]
    if chi.colors:
        lines.append(" ".join(str(c) for c in chi.colors))
    return "\n".join(lines) + "\n"


def coloring_from_text(text: str) -> Coloring:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty coloring text")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"header must be 'n r num_colors', got {lines[0]!r}")
    n, r, m = (int(tok) for tok in head)
    ids: list[int] = []
    for line in lines[1:]:
        ids.extend(int(tok) for tok in line.split())
    chi = make_coloring(n, r, ids)
    if chi.num_colors != m:
        raise ValueError(f"header claims {m} colors, ids use {chi.num_colors}")
    return chi


def coloring_to_json(chi: Coloring) -> dict:
    return {
        "n": chi.n,
        "r": chi.r,
        "num_colors": chi.num_colors,
        "colors": list(chi.colors),
    }


def coloring_from_json(d: dict) -> Coloring:
    chi = make_coloring(d["n"], d["r"], d["colors"])
    if chi.num_colors != d["num_colors"]:
        raise ValueError(
            f"payload claims {d['num_colors']} colors, ids use {chi.num_colors}"
        )
    return chi


def _witness_to_json(w: object) -> Optional[dict]:
    if w is None:
        return None
    if isinstance(w, Hypergraph):
        return {"kind": "hypergraph", **hypergraph_to_json(w)}
    if isinstance(w, Coloring):
        return {"kind": "coloring", **coloring_to_json(w)}
    raise TypeError(f"unserializable witness {type(w).__name__}")


def report_to_json(rep: SearchReport) -> dict:
    out = {
        "instance": rep.instance,
        "value": rep.value,
        "status": rep.status,
        "witness": _witness_to_json(rep.witness),
        "nodes": rep.nodes,
        "elapsed_ms": rep.elapsed * 1000.0,
    }
    if rep.leaves is not None:
        out["leaves"] = rep.leaves
    return out


def report_from_json(d: dict) -> SearchReport:
    w = d.get("witness")
    witness: object = None
    if w is not None:
        if w["kind"] == "hypergraph":
            witness = hypergraph_from_json(w)
        elif w["kind"] == "coloring":
            witness = coloring_from_json(w)
        else:
            raise ValueError(f"unknown witness kind {w['kind']!r}")
    return SearchReport(
        value=d["value"],
        witness=witness,
        nodes=d["nodes"],
        elapsed=d["elapsed_ms"] / 1000.0,
        status=d["status"],
        instance=d["instance"],
        leaves=d.get("leaves"),
    )


def report_to_text(rep: SearchReport) -> str:
    inst = rep.instance
    lines = [
        f"problem: {inst['problem']}  n={inst['n']}  r={inst['r']}",
        f"status:  {rep.status}",
        f"value:   {rep.value if rep.value is not None else 'unknown'}",
        f"nodes:   {rep.nodes}   elapsed: {rep.elapsed:.3f}s",
    ]
    if rep.leaves is not None:
        lines.append(f"leaves:  {rep.leaves}")
    if isinstance(rep.witness, Hypergraph):
        lines.append("witness hypergraph:")
        lines.append(hypergraph_to_text(rep.witness).rstrip("\n"))
    elif isinstance(rep.witness, Coloring):
        lines.append("witness coloring:")
        lines.append(coloring_to_text(rep.witness).rstrip("\n"))
    else:
        lines.append("witness: none")
    return "\n".join(lines) + "\n"


def bounds_to_json(table: BoundsTable) -> dict:
    return {
        "n": table.n,
        "r": table.r,
        "base": hypergraph_to_json(table.base),
        "target": hypergraph_to_json(table.target),
        "ar_value": table.ar_value,
        "ar_status": table.ar_status,
        "hard_ok": table.hard_ok,
        "rows": [
            {
                "name": row.name,
                "lhs": row.lhs,
                "relation": row.relation,
                "rhs": row.rhs,
                "verdict": row.verdict,
                "hard": row.hard,
                "note": row.note,
            }
            for row in table.rows
        ],
    }


def bounds_to_text(table: BoundsTable) -> str:
    lines = [
        f"bounds at n={table.n}, r={table.r}, target edges={table.target.num_edges}",
        f"ar = {table.ar_value if table.ar_value is not None else 'unknown'}"
        f" ({table.ar_status})",
    ]
    for row in table.rows:
        lhs = "?" if row.lhs is None else row.lhs
        rhs = "?" if row.rhs is None else row.rhs
        kind = "hard" if row.hard else "soft"
        tail = f"  # {row.note}" if row.note else ""
        lines.append(
            f"  {row.name:<18} {lhs} {row.relation} {rhs}"
            f"  [{row.verdict}, {kind}]{tail}"
        )
    lines.append(f"hard bounds ok: {'yes' if table.hard_ok else 'NO'}")
    return "\n".join(lines) + "\n"


def dumps(obj: dict) -> str:
    """Deterministic JSON rendering shared by the CLI."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
