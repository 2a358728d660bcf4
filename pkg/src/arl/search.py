"""Exact branch-and-bound solvers for desk-scale extremal questions.

Two solvers share the same report shape:

* exact_turan:        largest number of edges of an n-vertex r-graph that
                      contains no copy of any forbidden pattern.
* exact_anti_ramsey:  smallest number of colors that forces a rainbow copy
                      of a pattern in K_n^r, computed as one plus the largest
                      color count of a rainbow-free coloring.

Both walk edges in colex rank order and prune through checks anchored at the
newest decision, so a feasible prefix is never re-tested against old edges.
Budgets cap nodes and wall time; a tripped budget yields an honest
"budget_exhausted" report instead of an unproven value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional, Union

from .coloring import Coloring, RainbowEmbedder, make_coloring
from .hypergraph import (
    Family,
    Hypergraph,
    colex_rank,
    has_copy,
    kn_edges,
    make_family,
    make_hypergraph,
)

__all__ = [
    "SearchBudget",
    "SearchReport",
    "exact_turan",
    "exact_anti_ramsey",
    "verify_feasibility",
]

_TIME_CHECK_MASK = 0x3FF  # look at the clock every 1024 nodes


@dataclass(frozen=True)
class SearchBudget:
    """Caps for one solver run; None means unlimited."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a solver run.

    status "exact" certifies value and witness; "budget_exhausted" leaves
    value None and carries the best feasible witness found so far, if any.
    """

    value: Optional[int]
    witness: object
    nodes: int
    elapsed: float
    status: str
    instance: dict
    leaves: Optional[int] = None


class _OutOfBudget(Exception):
    pass


class _Meter:
    """Node and wall-clock accounting shared by both solvers."""

    def __init__(self, budget: Optional[SearchBudget]):
        self.nodes = 0
        self.start = time.monotonic()
        self.max_nodes = budget.max_nodes if budget else None
        self.max_seconds = budget.max_seconds if budget else None

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _OutOfBudget
        if self.max_seconds is not None and (self.nodes & _TIME_CHECK_MASK) == 0:
            if time.monotonic() - self.start > self.max_seconds:
                raise _OutOfBudget

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.start


def _coerce_family(patterns: Union[Hypergraph, Family, Iterable[Hypergraph]]) -> Family:
    if isinstance(patterns, Hypergraph):
        return make_family([patterns])
    if isinstance(patterns, Family):
        return patterns
    return make_family(list(patterns))


def _check_threads(threads: int) -> None:
    # accepted for interface stability; the schedule is one deterministic
    # thread regardless, so results cannot depend on the value
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")


def _edges_payload(fam: Family) -> list:
    return [[list(e) for e in m.edges] for m in fam.members]


def _drop_redundant(fam: Family) -> list[Hypergraph]:
    """Keep only members minimal under the subgraph order.

    If pattern a embeds into pattern b, any host containing b contains a, so
    forbidding a already forbids b and b can be dropped.  Purely a speedup;
    the feasibility predicate is unchanged.
    """
    members = list(fam.members)
    keep = []
    for i, m in enumerate(members):
        dominated = False
        for j, other in enumerate(members):
            if i == j:
                continue
            if has_copy(other, m) and not (has_copy(m, other) and j > i):
                dominated = True
                break
        if not dominated:
            keep.append(m)
    return keep


def exact_turan(
    n: int,
    patterns: Union[Hypergraph, Family, Iterable[Hypergraph]],
    *,
    budget: Optional[SearchBudget] = None,
    root_symmetry: bool = False,
    threads: int = 1,
) -> SearchReport:
    """Maximum edge count of a pattern-free r-graph on n vertices.

    Branch and bound over the colex edge list, include branch first, so the
    first optimum reached is the colex-greedy one.  Including an edge is
    vetoed when it completes a copy of a forbidden pattern; the check is
    anchored at that edge, which keeps each node cheap.  root_symmetry
    additionally forces the rank-0 edge into the graph (sound because any
    nonempty optimum can be relabeled to contain it) and must never change
    the answer, only the node count.
    """
    fam = _coerce_family(patterns)
    _check_threads(threads)
    if n < 0:
        raise ValueError("n must be nonnegative")
    for m in fam.members:
        if m.num_edges == 0:
            raise ValueError("an edgeless pattern is contained in every graph")
    r = fam.r
    edges = kn_edges(n, r)
    M = len(edges)
    instance = {
        "problem": "turan",
        "n": n,
        "r": r,
        "patterns": _edges_payload(fam),
        "root_symmetry": root_symmetry,
    }

    members = _drop_redundant(fam)
    matchers = [RainbowEmbedder(n, m) for m in members]
    matchers.sort(key=lambda em: (em.f.num_edges, em.f.n))
    rank_of = {e: i for i, e in enumerate(edges)}
    present = bytearray(M)

    def colored(img: tuple[int, ...]) -> Optional[int]:
        # distinct present edges get distinct "colors", so a rainbow copy is
        # exactly a copy
        ri = rank_of[img]
        return ri if present[ri] else None

    meter = _Meter(budget)
    best = 0
    best_edges: tuple[tuple[int, ...], ...] = ()

    def completes_copy(j: int) -> bool:
        anchor = edges[j]
        for em in matchers:
            hit, _ = em.find(colored, anchor=anchor)
            if hit is not None:
                return True
        return False

    def dfs(j: int, count: int, chosen: list[tuple[int, ...]]) -> None:
        nonlocal best, best_edges
        meter.tick()
        if count + (M - j) <= best:
            return
        if j == M:
            best = count
            best_edges = tuple(chosen)
            return
        present[j] = 1
        if not completes_copy(j):
            chosen.append(edges[j])
            dfs(j + 1, count + 1, chosen)
            chosen.pop()
        present[j] = 0
        dfs(j + 1, count, chosen)

    status = "exact"
    try:
        if root_symmetry and M > 0:
            present[0] = 1
            if not completes_copy(0):
                dfs(1, 1, [edges[0]])
            present[0] = 0
        else:
            dfs(0, 0, [])
    except _OutOfBudget:
        status = "budget_exhausted"

    witness = make_hypergraph(n, r, best_edges)
    if status == "exact":
        return SearchReport(
            value=best,
            witness=witness,
            nodes=meter.nodes,
            elapsed=meter.elapsed,
            status=status,
            instance=instance,
        )
    return SearchReport(
        value=None,
        witness=witness,
        nodes=meter.nodes,
        elapsed=meter.elapsed,
        status=status,
        instance=instance,
    )


def exact_anti_ramsey(
    n: int,
    pattern: Hypergraph,
    *,
    budget: Optional[SearchBudget] = None,
    prune_bound: bool = True,
    count_leaves: bool = False,
    threads: int = 1,
) -> SearchReport:
    """Smallest color count forcing a rainbow copy of the pattern in K_n^r.

    Enumerates colorings as restricted-growth strings over the colex edge
    list, so each partition of the edge set is visited exactly once.  A
    branch dies as soon as the colored prefix holds a rainbow copy through
    its newest edge.  The answer is one more than the largest color count of
    a rainbow-free coloring; when no coloring at all is rainbow-free (single
    edge patterns) the answer is 1 and the witness is None.

    prune_bound=False disables the color-count bound so every rainbow-free
    partition becomes a leaf; with count_leaves=True the leaf count is
    reported, which gives an independent Bell-number cross-check on the
    enumeration when the pattern cannot embed at all.
    """
    _check_threads(threads)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if pattern.num_edges == 0:
        raise ValueError("an edgeless pattern is rainbow in every coloring")
    r = pattern.r
    edges = kn_edges(n, r)
    M = len(edges)
    instance = {
        "problem": "anti_ramsey",
        "n": n,
        "r": r,
        "patterns": _edges_payload(make_family([pattern])),
        "prune_bound": prune_bound,
    }

    engine = RainbowEmbedder(n, pattern)
    colors = [0] * M
    assigned = bytearray(M)

    def color_at(img: tuple[int, ...]) -> Optional[int]:
        ri = colex_rank(img)
        return colors[ri] if assigned[ri] else None

    meter = _Meter(budget)
    best = -1
    best_colors: Optional[tuple[int, ...]] = None
    leaves = 0

    def dfs(j: int, top: int) -> None:
        # top = number of colors used so far on edges < j
        nonlocal best, best_colors, leaves
        if j == M:
            leaves += 1
            if top > best:
                best = top
                best_colors = tuple(colors)
            return
        if prune_bound and top + (M - j) <= best:
            return
        assigned[j] = 1
        for c in range(top + 1):
            meter.tick()
            colors[j] = c
            hit, _ = engine.find(color_at, anchor=edges[j])
            if hit is None:
                dfs(j + 1, max(top, c + 1))
        assigned[j] = 0

    status = "exact"
    try:
        if M == 0:
            leaves = 1
            best = 0
            best_colors = ()
        else:
            dfs(0, 0)
    except _OutOfBudget:
        status = "budget_exhausted"

    witness: Optional[Coloring] = None
    if best_colors is not None:
        witness = make_coloring(n, r, best_colors)
    if status == "exact":
        return SearchReport(
            value=max(best, 0) + 1,
            witness=witness,
            nodes=meter.nodes,
            elapsed=meter.elapsed,
            status=status,
            instance=instance,
            leaves=leaves if count_leaves else None,
        )
    return SearchReport(
        value=None,
        witness=witness,
        nodes=meter.nodes,
        elapsed=meter.elapsed,
        status=status,
        instance=instance,
        leaves=leaves if count_leaves else None,
    )


def verify_feasibility(report: SearchReport) -> bool:
    """Re-check a report's witness along an independent path.

    Turan witnesses are re-tested with the unanchored copy enumerator;
    coloring witnesses with the from-scratch rainbow search.  Only feasibility
    is certified here (the witness attains the claimed value and satisfies
    the constraint), not optimality.
    """
    from .coloring import find_rainbow_copy

    inst = report.instance
    patterns = [
        make_hypergraph(max((v for e in pe for v in e), default=-1) + 1, inst["r"],
                        [tuple(e) for e in pe])
        for pe in inst["patterns"]
    ]
    if inst["problem"] == "turan":
        host = report.witness
        if not isinstance(host, Hypergraph) or host.n != inst["n"]:
            return False
        if report.value is not None and host.num_edges != report.value:
            return False
        return not any(has_copy(p, host) for p in patterns)
    if inst["problem"] == "anti_ramsey":
        chi = report.witness
        if chi is None:
            # claimed: even one color already forces a rainbow copy
            if report.value is not None and report.value != 1:
                return False
            mono = make_coloring(inst["n"], inst["r"], [0] * comb(inst["n"], inst["r"]))
            if mono.num_colors == 0:
                return report.value is None or report.value == 1
            return any(find_rainbow_copy(mono, p) is not None for p in patterns)
        if not isinstance(chi, Coloring) or chi.n != inst["n"]:
            return False
        if report.value is not None and chi.num_colors != report.value - 1:
            return False
        return all(find_rainbow_copy(chi, p) is None for p in patterns)
    raise ValueError(f"unknown problem kind {inst['problem']!r}")
