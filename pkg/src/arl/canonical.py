"""Canonical relabeling for small hypergraphs.

The canonical form of H is the relabeling of H whose edge list, read as the
sorted tuple of colex ranks, is smallest among all vertex permutations.  Two
hypergraphs on the same number of vertices are isomorphic exactly when their
canonical forms are equal.

The search never enumerates all n! permutations.  It interleaves degree and
neighborhood refinement with individualization, and prunes sibling branches
that are equivalent under automorphisms discovered at earlier leaves (orbit
pruning, restricted to generators fixing the individualized prefix pointwise,
which keeps the pruning sound).  Intended for small instances only; the
vertex cap is a hard error, not a heuristic.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .hypergraph import Hypergraph, colex_rank, relabel

__all__ = [
    "TooLargeError",
    "DEFAULT_VERTEX_CAP",
    "canonical_form",
    "canonical_key",
    "are_isomorphic",
]

DEFAULT_VERTEX_CAP = 16


class TooLargeError(ValueError):
    """Raised when a hypergraph exceeds the canonicalization size cap."""


def _refine(h: Hypergraph, cells: list[list[int]]) -> list[list[int]]:
    """Stable refinement: split cells by the multiset of incident edge shapes.

    A vertex signature is its cell index plus the sorted multiset, over
    incident edges, of the sorted cell indices of the other endpoints.  The
    construction only uses isomorphism-invariant data, so isomorphic graphs
    refine to corresponding partitions.
    """
    while True:
        idx = [0] * h.n
        for i, cell in enumerate(cells):
            for v in cell:
                idx[v] = i
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                esig = sorted(
                    tuple(sorted(idx[u] for u in e if u != v)) for e in h.incident[v]
                )
                groups.setdefault(tuple(esig), []).append(v)
            for key in sorted(groups):
                new_cells.append(sorted(groups[key]))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _orbit_reps(n: int, gens: list[tuple[int, ...]], prefix: list[int]) -> list[int]:
    """Union-find orbits of the subgroup generated by generators that fix
    every prefix vertex pointwise.  Conservative: a subgroup of the true
    stabilizer, which is all orbit pruning needs to stay sound."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    fixed = set(prefix)
    for g in gens:
        if any(g[p] != p for p in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[a] = b
    return [find(v) for v in range(n)]


def _search(h: Hypergraph) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return (labeling, automorphism generators).

    labeling[v] is the canonical label of vertex v; applying it yields the
    minimum certificate.
    """
    n = h.n
    best_cert: Optional[tuple[int, ...]] = None
    best_lab: Optional[list[int]] = None
    best_inv: Optional[list[int]] = None
    gens: list[tuple[int, ...]] = []
    gen_seen: set[tuple[int, ...]] = set()

    def handle_leaf(cells: list[list[int]]) -> None:
        nonlocal best_cert, best_lab, best_inv
        lab = [0] * n
        for i, cell in enumerate(cells):
            lab[cell[0]] = i
        cert = tuple(sorted(colex_rank(sorted(lab[v] for v in e)) for e in h.edges))
        if best_cert is None or cert < best_cert:
            best_cert = cert
            best_lab = lab
            inv = [0] * n
            for v, l in enumerate(lab):
                inv[l] = v
            best_inv = inv
        elif cert == best_cert:
            assert best_inv is not None
            g = tuple(best_inv[lab[v]] for v in range(n))
            if g not in gen_seen and any(g[v] != v for v in range(n)):
                gen_seen.add(g)
                gens.append(g)

    def rec(cells: list[list[int]], prefix: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            handle_leaf(cells)
            return
        cell = cells[target]
        processed: list[int] = []
        for v in cell:
            if processed:
                reps = _orbit_reps(n, gens, prefix)
                if any(reps[v] == reps[w] for w in processed):
                    continue
            child = (
                cells[:target]
                + [[v], [u for u in cell if u != v]]
                + cells[target + 1 :]
            )
            rec(_refine(h, child), prefix + [v])
            processed.append(v)

    if n:
        rec(_refine(h, [list(range(n))]), [])
    assert best_lab is not None or n == 0
    return (best_lab or []), gens


def canonical_form(h: Hypergraph, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> Hypergraph:
    """The canonical representative of h's isomorphism class.

    Deterministic, idempotent, and invariant under relabeling.  Raises
    TooLargeError beyond the vertex cap (tunable via max_vertices).
    """
    if h.n > max_vertices:
        raise TooLargeError(
            f"canonical form limited to {max_vertices} vertices, got {h.n}; "
            f"pass max_vertices to raise the cap deliberately"
        )
    if h.n == 0:
        return h
    lab, _ = _search(h)
    return relabel(h, lab)


def canonical_key(
    h: Hypergraph, *, max_vertices: int = DEFAULT_VERTEX_CAP
) -> tuple[int, int, tuple[tuple[int, ...], ...]]:
    """Hashable isomorphism invariant: (n, r, canonical edge list)."""
    c = canonical_form(h, max_vertices=max_vertices)
    return (c.n, c.r, c.edges)


def are_isomorphic(
    a: Hypergraph, b: Hypergraph, *, max_vertices: int = DEFAULT_VERTEX_CAP
) -> bool:
    """Isomorphism test via canonical forms (isolated vertices count)."""
    if a.n != b.n or a.r != b.r or len(a.edges) != len(b.edges):
        return False
    if sorted(a.degrees) != sorted(b.degrees):
        return False
    return (
        canonical_form(a, max_vertices=max_vertices).edges
        == canonical_form(b, max_vertices=max_vertices).edges
    )
