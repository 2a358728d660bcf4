"""Edge colorings of the complete host K_n^r and rainbow-copy detection.

A coloring assigns one color id to every r-subset of range(n), indexed by
colex rank.  Color ids are contiguous from 0 and every id occurs: surjectivity
is intrinsic, so "number of colors" always means num_colors.

A rainbow copy of a pattern F is an embedding of F's non-isolated vertices
into the host such that the image edges carry pairwise distinct colors.  The
detector is an exhaustive backtracking search; running out of budget raises
BudgetExhausted rather than ever reporting a false "no copy".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Callable, Iterable, Optional, Sequence

from .constructions import turan_partition
from .hypergraph import (
    Embedding,
    Family,
    Hypergraph,
    colex_rank,
    kn_edges,
    make_hypergraph,
)

__all__ = [
    "Coloring",
    "RainbowWitness",
    "RainbowFreeReport",
    "BudgetExhausted",
    "make_coloring",
    "layered_coloring",
    "find_rainbow_copy",
    "is_rainbow_family_free",
    "max_rainbow_subgraph",
    "merge_colors",
    "RainbowEmbedder",
]


class BudgetExhausted(RuntimeError):
    """A search hit its node budget; the question is left undecided."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class Coloring:
    """Surjective edge coloring of K_n^r with contiguous 0-based color ids."""

    n: int
    r: int
    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self) -> None:
        expect = comb(self.n, self.r)
        if len(self.colors) != expect:
            raise ValueError(
                f"expected {expect} = C({self.n},{self.r}) entries, got {len(self.colors)}"
            )
        seen = set(self.colors)
        if self.colors:
            if min(seen) < 0 or max(seen) != self.num_colors - 1:
                raise ValueError("color ids must be 0-based and contiguous at the top")
            if len(seen) != self.num_colors:
                raise ValueError("every color id below num_colors must occur")
        elif self.num_colors != 0:
            raise ValueError("empty edge set cannot use any color")

    def color_of(self, edge: Sequence[int]) -> int:
        e = tuple(sorted(edge))
        if len(e) != self.r or len(set(e)) != self.r:
            raise ValueError(f"{edge} is not an r-subset")
        if e[-1] >= self.n or e[0] < 0:
            raise ValueError(f"{edge} leaves the vertex range")
        return self.colors[colex_rank(e)]

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Edge ranks per color id, ascending inside each class."""
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for rank, c in enumerate(self.colors):
            out[c].append(rank)
        return tuple(tuple(x) for x in out)

    def __repr__(self) -> str:
        return f"Coloring(n={self.n}, r={self.r}, m={self.num_colors})"


def make_coloring(n: int, r: int, colors: Iterable[int]) -> Coloring:
    """Constructor that infers num_colors and validates contiguity."""
    cs = tuple(colors)
    m = max(cs) + 1 if cs else 0
    return Coloring(n=n, r=r, colors=cs, num_colors=m)


def layered_coloring(n: int, ell: int) -> Coloring:
    """The part-based coloring of K_n^3 over the balanced partition.

    Triples with two or more vertices in part i all share that part's color;
    every transversal triple gets its own fresh color, in colex order.  When
    each part has at least two vertices (n >= 2*ell) this uses exactly
    t_3(n, ell) + ell colors; smaller parts cannot contribute their color, so
    shallow hosts use fewer.  Color ids stay contiguous either way.
    """
    if not 2 <= ell <= n:
        raise ValueError(f"need n >= ell >= 2, got n={n}, ell={ell}")
    part = turan_partition(n, ell)
    part_of = part.part_of
    raw: list[tuple[int, int]] = []  # (kind 0 = part color, 1 = fresh), payload
    for e in kn_edges(n, 3):
        counts: dict[int, int] = {}
        heavy = -1
        for v in e:
            p = part_of[v]
            counts[p] = counts.get(p, 0) + 1
            if counts[p] >= 2:
                heavy = p
        raw.append((0, heavy) if heavy >= 0 else (1, 0))
    used_parts = sorted({p for kind, p in raw if kind == 0})
    part_color = {p: i for i, p in enumerate(used_parts)}
    nxt = len(used_parts)
    colors = []
    for kind, p in raw:
        if kind == 0:
            colors.append(part_color[p])
        else:
            colors.append(nxt)
            nxt += 1
    return make_coloring(n, 3, colors)


@dataclass(frozen=True)
class RainbowWitness:
    """A rainbow copy: the embedding plus the (image edge, color) pairs."""

    embedding: Embedding
    edge_colors: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self) -> None:
        cols = [c for _, c in self.edge_colors]
        if len(set(cols)) != len(cols):
            raise ValueError("witness edges are not rainbow")


@dataclass(frozen=True)
class RainbowFreeReport:
    """Outcome of a family-wide rainbow check."""

    free: bool
    member_index: Optional[int] = None
    witness: Optional[RainbowWitness] = None


class RainbowEmbedder:
    """Reusable search plans for rainbow copies of one pattern in K_n^r.

    The pattern's non-isolated vertices are embedded injectively; image edges
    must be colored (color_at returning None marks an edge unusable) with
    pairwise distinct colors.  Plans are precomputed so solvers can run the
    anchored variant millions of times cheaply.
    """

    def __init__(self, n: int, f: Hypergraph):
        self.n = n
        self.f = f
        self.verts = list(f.non_isolated)
        self.order = self._order(self.verts, seed=())
        self.schedule = self._schedule(self.order)
        # anchored plans: one per pattern edge
        self.anchored_plans = []
        for fe in f.edges:
            order = self._order(self.verts, seed=fe)
            self.anchored_plans.append((fe, order, self._schedule(order)))

    def _order(self, verts: Sequence[int], seed: Sequence[int]) -> list[int]:
        remaining = [v for v in verts if v not in seed]
        order = list(seed)
        placed = set(seed)
        f = self.f
        while remaining:
            nxt = max(
                remaining,
                key=lambda v: (
                    sum(1 for e in f.incident[v] if placed.intersection(e)),
                    f.degrees[v],
                    -v,
                ),
            )
            order.append(nxt)
            placed.add(nxt)
            remaining.remove(nxt)
        return order

    def _schedule(self, order: Sequence[int]) -> list[list[tuple[int, ...]]]:
        pos = {v: i for i, v in enumerate(order)}
        sched: list[list[tuple[int, ...]]] = [[] for _ in order]
        for e in self.f.edges:
            sched[max(pos[v] for v in e)].append(e)
        return sched

    def find(
        self,
        color_at: Callable[[tuple[int, ...]], Optional[int]],
        anchor: Optional[tuple[int, ...]] = None,
        max_nodes: Optional[int] = None,
    ) -> tuple[Optional[Embedding], int]:
        """First rainbow embedding in deterministic order, or None.

        With an anchor, only embeddings whose image includes the anchor edge
        are considered.  Returns (embedding, nodes).  Raises BudgetExhausted
        when max_nodes assignments were tried without settling the question.
        """
        f = self.f
        if len(self.verts) > self.n:
            return None, 0
        nodes = 0
        images: list[Optional[int]] = [None] * f.n
        used_v = [False] * self.n

        def dfs(order, sched, i, used_colors) -> Optional[Embedding]:
            nonlocal nodes
            if i == len(order):
                return Embedding(tuple(images))
            v = order[i]
            for cand in range(self.n):
                if used_v[cand]:
                    continue
                nodes += 1
                if max_nodes is not None and nodes > max_nodes:
                    raise BudgetExhausted(nodes)
                images[v] = cand
                added: list[int] = []
                ok = True
                for e in sched[i]:
                    img = tuple(sorted(images[u] for u in e))  # type: ignore[misc]
                    c = color_at(img)
                    if c is None or c in used_colors or c in added:
                        ok = False
                        break
                    added.append(c)
                if ok:
                    used_v[cand] = True
                    used_colors.update(added)
                    hit = dfs(order, sched, i + 1, used_colors)
                    used_v[cand] = False
                    used_colors.difference_update(added)
                    if hit is not None:
                        return hit
                images[v] = None
            return None

        if f.num_edges == 0:
            # the empty pattern embeds vacuously, but never through an anchor
            if anchor is not None:
                return None, 0
            return Embedding(tuple(images)), 0

        if anchor is None:
            hit = dfs(self.order, self.schedule, 0, set())
            return hit, nodes

        anchor = tuple(sorted(anchor))
        base = color_at(anchor)
        if base is None:
            return None, 0
        for fe, order, sched in self.anchored_plans:
            for assignment in itertools.permutations(anchor):
                nodes += 1
                if max_nodes is not None and nodes > max_nodes:
                    raise BudgetExhausted(nodes)
                for v, host in zip(fe, assignment):
                    images[v] = host
                    used_v[host] = True
                # the only edge completed by the seed is fe itself (distinct
                # edges are distinct r-sets), and its image is the anchor
                used_colors = {base}
                hit = dfs(order, sched, len(fe), used_colors)
                for v in fe:
                    host = images[v]
                    images[v] = None
                    if host is not None:
                        used_v[host] = False
                if hit is not None:
                    return hit, nodes
        return None, nodes


def _witness_from(
    chi_color: Callable[[tuple[int, ...]], Optional[int]],
    f: Hypergraph,
    emb: Embedding,
) -> RainbowWitness:
    pairs = []
    for e in f.edges:
        img = emb.image_edge(e)
        c = chi_color(img)
        assert c is not None
        pairs.append((img, c))
    return RainbowWitness(embedding=emb, edge_colors=tuple(pairs))


def find_rainbow_copy(
    chi: Coloring, f: Hypergraph, *, limit: Optional[int] = None
) -> Optional[RainbowWitness]:
    """Search K_n^r under chi for a rainbow copy of f.

    Exhaustive backtracking over partial embeddings, pruning as soon as two
    fully mapped edges collide in color.  limit caps the number of assignment
    nodes; exceeding it raises BudgetExhausted (an explicit "undecided",
    never a silent no).
    """
    if f.r != chi.r:
        raise ValueError(f"uniformity mismatch: pattern {f.r}, coloring {chi.r}")
    emb_engine = RainbowEmbedder(chi.n, f)
    color_at = lambda img: chi.colors[colex_rank(img)]
    emb, _ = emb_engine.find(color_at, max_nodes=limit)
    if emb is None:
        return None
    return _witness_from(color_at, f, emb)


def is_rainbow_family_free(
    chi: Coloring, fam: Family, *, limit: Optional[int] = None
) -> RainbowFreeReport:
    """True when no member has a rainbow copy; otherwise points at one that has.

    Budget exhaustion propagates as BudgetExhausted: an undecided check is
    never reported as free.
    """
    for i, member in enumerate(fam.members):
        w = find_rainbow_copy(chi, member, limit=limit)
        if w is not None:
            return RainbowFreeReport(free=False, member_index=i, witness=w)
    return RainbowFreeReport(free=True)


def max_rainbow_subgraph(chi: Coloring) -> Hypergraph:
    """One edge per color class: the colex-least representative.

    The result has exactly num_colors edges and is a maximum rainbow
    sub-hypergraph of the host under chi.
    """
    table = kn_edges(chi.n, chi.r)
    picks = [table[cls[0]] for cls in chi.classes]
    return make_hypergraph(chi.n, chi.r, picks)


def merge_colors(chi: Coloring, a: int, b: int) -> Coloring:
    """Recolor class b with color a, then renumber to stay contiguous.

    Merging can only destroy rainbow copies, never create them, which is why
    maximal rainbow-free colorings exist at every color count below the
    maximum.
    """
    m = chi.num_colors
    if not (0 <= a < m and 0 <= b < m):
        raise ValueError(f"color ids must lie in 0..{m - 1}")
    if a == b:
        raise ValueError("merge needs two distinct color ids")
    remap = {}
    nxt = 0
    for c in range(m):
        if c == b:
            continue
        remap[c] = nxt
        nxt += 1
    remap[b] = remap[a]
    return make_coloring(chi.n, chi.r, (remap[c] for c in chi.colors))
