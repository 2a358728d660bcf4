"""Small uniform hypergraphs with a fixed edge enumeration order.

Edges are strictly increasing r-tuples over the vertex range 0..n-1, stored in
colexicographic order.  The same colex order indexes the complete host K_n^r
everywhere: coloring vectors, file formats and solver decision sequences all
agree on it.  Every type here is immutable; operations return new objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Hypergraph",
    "Embedding",
    "Family",
    "colex_key",
    "colex_rank",
    "kn_edges",
    "make_hypergraph",
    "make_family",
    "relabel",
    "remove_vertices",
    "degree",
    "link",
    "induced_multipartite",
    "induced_subgraph",
    "is_independent",
    "independent_sets",
    "enumerate_copies",
    "has_copy",
]


def colex_key(edge: Sequence[int]) -> tuple[int, ...]:
    """Sort key realising colexicographic order on sorted tuples."""
    return tuple(reversed(edge))


def colex_rank(edge: Sequence[int]) -> int:
    """Position of a sorted r-tuple in the colex enumeration of r-subsets.

    Combinatorial number system: rank = sum_i C(edge[i], i+1) for the edge
    sorted ascending.  Independent of n, so ranks agree across host sizes.
    """
    return sum(comb(v, i + 1) for i, v in enumerate(edge))


@lru_cache(maxsize=None)
def kn_edges(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """All r-subsets of range(n) as sorted tuples, in colex order.

    kn_edges(n, r)[colex_rank(e)] == e for every r-subset e of range(n).
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    return tuple(sorted(itertools.combinations(range(n), r), key=colex_key))


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on the vertex set {0, ..., n-1}.

    Invariants:
      * n >= 0 and r >= 1
      * every edge is a strictly increasing r-tuple inside range(n)
      * edges are pairwise distinct and stored in colex order
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"uniformity must be >= 1, got {self.r}")
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        prev_key: Optional[tuple[int, ...]] = None
        for e in self.edges:
            if len(e) != self.r:
                raise ValueError(f"edge {e} has arity {len(e)}, expected {self.r}")
            if any(v < 0 or v >= self.n for v in e):
                raise ValueError(f"edge {e} leaves vertex range 0..{self.n - 1}")
            if any(a >= b for a, b in zip(e, e[1:])):
                raise ValueError(f"edge {e} is not strictly increasing")
            key = colex_key(e)
            if prev_key is not None and key <= prev_key:
                raise ValueError("edges out of colex order or duplicated")
            prev_key = key

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        d = [0] * self.n
        for e in self.edges:
            for v in e:
                d[v] += 1
        return tuple(d)

    @cached_property
    def non_isolated(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.degrees[v] > 0)

    @cached_property
    def incident(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """Per-vertex tuple of incident edges."""
        inc: list[list[tuple[int, ...]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    def __repr__(self) -> str:  # compact, eval-unfriendly on purpose
        return f"Hypergraph(n={self.n}, r={self.r}, m={len(self.edges)})"


def make_hypergraph(n: int, r: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validating constructor; sorts each edge and the edge list.

    Rejects wrong arity, out-of-range vertices, a repeated vertex inside an
    edge, and duplicate edges.
    """
    normalized: list[tuple[int, ...]] = []
    for raw in edges:
        e = tuple(sorted(raw))
        if len(set(e)) != len(e):
            raise ValueError(f"edge {tuple(raw)} repeats a vertex")
        normalized.append(e)
    normalized.sort(key=colex_key)
    for a, b in zip(normalized, normalized[1:]):
        if a == b:
            raise ValueError(f"duplicate edge {a}")
    return Hypergraph(n=n, r=r, edges=tuple(normalized))


def relabel(h: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Rename vertices: vertex v becomes perm[v].  perm must be a bijection."""
    if len(perm) != h.n or sorted(perm) != list(range(h.n)):
        raise ValueError("perm must be a permutation of range(n)")
    return make_hypergraph(h.n, h.r, [[perm[v] for v in e] for e in h.edges])


def remove_vertices(h: Hypergraph, vs: Iterable[int]) -> Hypergraph:
    """Delete the given vertices and every incident edge, then compact labels.

    Remaining vertices keep their relative order.
    """
    drop = set(vs)
    if any(v < 0 or v >= h.n for v in drop):
        raise ValueError("vertex out of range")
    new_id = {}
    nxt = 0
    for v in range(h.n):
        if v not in drop:
            new_id[v] = nxt
            nxt += 1
    kept = [e for e in h.edges if not drop.intersection(e)]
    return make_hypergraph(nxt, h.r, [[new_id[v] for v in e] for e in kept])


def degree(h: Hypergraph, v: int) -> int:
    """Number of edges containing v."""
    if v < 0 or v >= h.n:
        raise ValueError(f"vertex {v} out of range")
    return h.degrees[v]


def link(h: Hypergraph, v: int) -> Hypergraph:
    """The (r-1)-graph on the same vertex set with edges {e : e + {v} in H}.

    Requires r >= 2.  Distinct edges stay distinct after removing v, so the
    link has exactly degree(h, v) edges.
    """
    if h.r < 2:
        raise ValueError("link requires uniformity >= 2")
    if v < 0 or v >= h.n:
        raise ValueError(f"vertex {v} out of range")
    shrunk = [tuple(u for u in e if u != v) for e in h.edges if v in e]
    return make_hypergraph(h.n, h.r - 1, shrunk)


def _check_parts(h: Hypergraph, parts: Sequence[Iterable[int]]) -> list[set[int]]:
    sets = [set(p) for p in parts]
    seen: set[int] = set()
    for p in sets:
        if any(v < 0 or v >= h.n for v in p):
            raise ValueError("part leaves the vertex range")
        if seen.intersection(p):
            raise ValueError("parts overlap")
        seen.update(p)
    return sets


def induced_multipartite(
    h: Hypergraph, parts: Sequence[Iterable[int]], *, single: bool = False
) -> Hypergraph:
    """Sub-hypergraph induced by disjoint vertex classes.

    Default: keep edges that lie inside the union of the parts and touch each
    part at most once.  With single=True exactly one part is expected and the
    plain induced sub-hypergraph on that set is returned.  The vertex set is
    unchanged; only edges are filtered.
    """
    sets = _check_parts(h, parts)
    if single:
        if len(sets) != 1:
            raise ValueError("single=True expects exactly one part")
        u = sets[0]
        kept = [e for e in h.edges if u.issuperset(e)]
        return Hypergraph(h.n, h.r, tuple(kept))
    union: set[int] = set().union(*sets) if sets else set()
    kept = []
    for e in h.edges:
        if not union.issuperset(e):
            continue
        if all(len(p.intersection(e)) <= 1 for p in sets):
            kept.append(e)
    return Hypergraph(h.n, h.r, tuple(kept))


def induced_subgraph(h: Hypergraph, vertices: Iterable[int]) -> Hypergraph:
    """Edges lying entirely inside the given vertex set (labels unchanged)."""
    return induced_multipartite(h, [vertices], single=True)


def is_independent(h: Hypergraph, vertices: Iterable[int], mode: str = "weak") -> bool:
    """Whether the set is independent.

    weak: no edge is fully contained in the set.
    strong: no edge meets the set in two or more vertices.
    The two notions coincide for r = 2.
    """
    s = set(vertices)
    if any(v < 0 or v >= h.n for v in s):
        raise ValueError("vertex out of range")
    if mode == "weak":
        return not any(s.issuperset(e) for e in h.edges)
    if mode == "strong":
        return not any(len(s.intersection(e)) >= 2 for e in h.edges)
    raise ValueError(f"unknown independence mode {mode!r}")


def independent_sets(
    h: Hypergraph, mode: str = "weak", max_size: Optional[int] = None
) -> list[tuple[int, ...]]:
    """All independent sets as sorted tuples, the empty set included.

    Both notions are closed under taking subsets, so a depth-first extension
    over vertices in increasing order enumerates each set exactly once.
    Output order is lexicographic.
    """
    if mode not in ("weak", "strong"):
        raise ValueError(f"unknown independence mode {mode!r}")
    cap = h.n if max_size is None else max_size
    out: list[tuple[int, ...]] = []
    current: list[int] = []
    in_set = [False] * h.n

    def extend_ok(v: int) -> bool:
        if mode == "weak":
            # only edges through v can become fully covered
            return not any(
                all(in_set[u] or u == v for u in e) for e in h.incident[v]
            )
        return not any(any(in_set[u] for u in e) for e in h.incident[v])

    def rec(start: int) -> None:
        out.append(tuple(current))
        if len(current) >= cap:
            return
        for v in range(start, h.n):
            if extend_ok(v):
                current.append(v)
                in_set[v] = True
                rec(v + 1)
                current.pop()
                in_set[v] = False

    rec(0)
    return out


@dataclass(frozen=True)
class Embedding:
    """Injective map from the vertices of a pattern F into a host.

    images[u] is the host vertex for pattern vertex u, or None when u is not
    part of the map (isolated pattern vertices by default).
    """

    images: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        hit = [v for v in self.images if v is not None]
        if len(set(hit)) != len(hit):
            raise ValueError("embedding is not injective")

    def image_edge(self, e: Sequence[int]) -> tuple[int, ...]:
        return tuple(sorted(self.images[u] for u in e))  # type: ignore[misc]

    def image_edges(self, f: Hypergraph) -> tuple[tuple[int, ...], ...]:
        return tuple(self.image_edge(e) for e in f.edges)


def _embed_order(f: Hypergraph, vertices: Sequence[int]) -> list[int]:
    """Static assignment order: grow along shared edges where possible."""
    remaining = list(vertices)
    if not remaining:
        return []
    order: list[int] = []
    placed: set[int] = set()

    def weight(v: int) -> tuple[int, int, int]:
        shared = sum(1 for e in f.incident[v] if placed.intersection(e))
        return (shared, f.degrees[v], -v)

    first = max(remaining, key=lambda v: (f.degrees[v], -v))
    order.append(first)
    placed.add(first)
    remaining.remove(first)
    while remaining:
        nxt = max(remaining, key=weight)
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)
    return order


def enumerate_copies(
    f: Hypergraph,
    h: Hypergraph,
    *,
    limit: Optional[int] = None,
    distinct: bool = False,
    include_isolated: bool = False,
) -> Iterator[Embedding]:
    """Yield embeddings of f into h in a fixed deterministic order.

    An embedding sends the non-isolated vertices of f (all vertices with
    include_isolated=True) injectively into h so that every edge of f lands on
    an edge of h.  With distinct=True only one representative per copy is
    yielded, where a copy is identified by its set of image edges.

    A pattern with no edges (and no vertices to place) yields exactly one
    empty embedding: every host contains it.
    """
    if f.r != h.r:
        raise ValueError(f"uniformity mismatch: pattern r={f.r}, host r={h.r}")
    verts = list(range(f.n)) if include_isolated else list(f.non_isolated)
    budget = limit if limit is not None else -1

    if len(verts) > h.n:
        return
    order = _embed_order(f, verts)
    pos_of = {v: i for i, v in enumerate(order)}
    # edges become fully mapped at the position of their latest vertex
    completed: list[list[tuple[int, ...]]] = [[] for _ in order]
    for e in f.edges:
        if all(v in pos_of for v in e):
            completed[max(pos_of[v] for v in e)].append(e)
    # edges touching unmapped (isolated is impossible, but guard) vertices
    if any(v not in pos_of for e in f.edges for v in e):
        raise AssertionError("edge through an unmapped vertex")

    images: list[Optional[int]] = [None] * f.n
    used = [False] * h.n
    seen_copies: set[frozenset[tuple[int, ...]]] = set()
    emitted = 0

    def leaves() -> Iterator[Embedding]:
        nonlocal emitted
        depth = len(order)

        def rec(i: int) -> Iterator[Embedding]:
            nonlocal emitted
            if i == depth:
                emb = Embedding(tuple(images))
                if distinct:
                    key = frozenset(emb.image_edges(f))
                    if key in seen_copies:
                        return
                    seen_copies.add(key)
                emitted += 1
                yield emb
                return
            v = order[i]
            for cand in range(h.n):
                if used[cand]:
                    continue
                images[v] = cand
                ok = True
                for e in completed[i]:
                    img = tuple(sorted(images[u] for u in e))  # type: ignore[misc]
                    if img not in h.edge_set:
                        ok = False
                        break
                if ok:
                    used[cand] = True
                    yield from rec(i + 1)
                    used[cand] = False
                if emitted == budget:
                    images[v] = None
                    return
            images[v] = None

        yield from rec(0)

    yield from leaves()


def has_copy(f: Hypergraph, h: Hypergraph) -> bool:
    """Whether h contains at least one copy of f."""
    return next(enumerate_copies(f, h, limit=1), None) is not None


@dataclass(frozen=True)
class Family:
    """A finite collection of hypergraphs sharing one uniformity.

    dedup=True records that members are pairwise non-isomorphic; producers
    are responsible for the claim (splitting and deletion builders honour it).
    """

    r: int
    members: tuple[Hypergraph, ...]
    dedup: bool = False

    def __post_init__(self) -> None:
        for m in self.members:
            if m.r != self.r:
                raise ValueError(
                    f"family uniformity {self.r} but member has r={m.r}"
                )

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Hypergraph]:
        return iter(self.members)


def make_family(
    members: Iterable[Hypergraph], *, r: Optional[int] = None, dedup: bool = False
) -> Family:
    ms = tuple(members)
    if r is None:
        if not ms:
            raise ValueError("empty family needs an explicit uniformity")
        r = ms[0].r
    return Family(r=r, members=ms, dedup=dedup)
