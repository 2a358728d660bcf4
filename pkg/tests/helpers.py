"""Independent brute-force oracles.

Everything here is deliberately naive: permutations instead of backtracking,
full subset or partition enumeration instead of branch and bound.  The test
suite trusts these on tiny instances and measures the real implementations
against them.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator, Sequence

from arl.coloring import Coloring, make_coloring
from arl.hypergraph import Hypergraph, colex_rank, kn_edges, make_hypergraph


def naive_embeddings(f: Hypergraph, h: Hypergraph) -> list[dict[int, int]]:
    """All injective maps of f's non-isolated vertices that send edges to edges."""
    verts = f.non_isolated
    out = []
    for choice in itertools.permutations(range(h.n), len(verts)):
        phi = dict(zip(verts, choice))
        if all(
            tuple(sorted(phi[v] for v in e)) in h.edge_set for e in f.edges
        ):
            out.append(phi)
    return out


def naive_has_copy(f: Hypergraph, h: Hypergraph) -> bool:
    if f.num_edges == 0:
        return True
    return bool(naive_embeddings(f, h))


def naive_has_rainbow(chi: Coloring, f: Hypergraph) -> bool:
    host_edges = set(kn_edges(chi.n, chi.r))
    verts = f.non_isolated
    if f.num_edges == 0:
        return True
    for choice in itertools.permutations(range(chi.n), len(verts)):
        phi = dict(zip(verts, choice))
        imgs = [tuple(sorted(phi[v] for v in e)) for e in f.edges]
        if any(img not in host_edges for img in imgs):
            continue
        cols = [chi.colors[colex_rank(img)] for img in imgs]
        if len(set(cols)) == len(cols):
            return True
    return False


def brute_ex(n: int, patterns: Sequence[Hypergraph], r: int) -> int:
    """Maximum pattern-free edge count by full subset enumeration."""
    pool = kn_edges(n, r)
    best = -1
    for mask in range(1 << len(pool)):
        edges = [e for i, e in enumerate(pool) if mask >> i & 1]
        h = make_hypergraph(n, r, edges)
        if any(naive_has_copy(p, h) for p in patterns):
            continue
        best = max(best, len(edges))
    return best


def set_partitions(m: int) -> Iterator[list[int]]:
    """All restricted-growth strings of length m."""

    def rec(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == m:
            yield list(prefix)
            return
        for c in range(top + 1):
            prefix.append(c)
            yield from rec(prefix, max(top, c + 1))
            prefix.pop()

    if m == 0:
        yield []
        return
    yield from rec([], 0)


def brute_ar(n: int, f: Hypergraph) -> int:
    """One plus the max color count over rainbow-free colorings, by full
    partition enumeration.  Only sane for C(n,r) <= 8 or so."""
    M = comb(n, f.r)
    best = 0
    for rgs in set_partitions(M):
        chi = make_coloring(n, f.r, rgs)
        if not naive_has_rainbow(chi, f):
            best = max(best, chi.num_colors)
    return best + 1
