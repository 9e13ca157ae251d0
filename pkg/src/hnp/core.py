"""Sparse hypergraph data model.

Vertices are dense integer ids 0..n-1. Edges are distinct, nonempty,
duplicate-free vertex subsets stored as sorted tuples; edge identity is set
equality. After construction a hypergraph is immutable and safe for
concurrent reads.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Dict, Iterable, Optional, Tuple

__all__ = [
    "Hypergraph",
    "Graph",
    "two_section",
    "induced_strong",
    "induced_weak",
    "remove_isolated",
    "truncate",
    "profiles",
]


class Hypergraph:
    """Immutable hypergraph on vertex set {0, ..., n-1}.

    Edges passed to the constructor are normalized to sorted tuples and
    deduplicated as sets. An edge that is empty, contains a repeated vertex,
    or mentions an id outside 0..n-1 raises ValueError.
    """

    __slots__ = ("n", "edges", "incidence", "_edge_set", "_edge_index", "_neighbors")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        seen = set()
        for e in edges:
            t = tuple(sorted(e))
            if not t:
                raise ValueError("empty hyperedge")
            for a, b in zip(t, t[1:]):
                if a == b:
                    raise ValueError(f"repeated vertex {a} in hyperedge {t}")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"hyperedge {t} mentions a vertex outside 0..{n - 1}")
            seen.add(t)
        self.n: int = n
        self.edges: Tuple[Tuple[int, ...], ...] = tuple(
            sorted(seen, key=lambda t: (len(t), t))
        )
        inc = [[] for _ in range(n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        self.incidence: Tuple[Tuple[int, ...], ...] = tuple(tuple(x) for x in inc)
        self._edge_set: Optional[frozenset] = None
        self._edge_index: Optional[Dict[Tuple[int, ...], int]] = None
        self._neighbors: Dict[int, frozenset] = {}

    # -- basic accessors -------------------------------------------------

    def degree(self, v: int) -> int:
        """Number of hyperedges containing v."""
        return len(self.incidence[v])

    @property
    def edge_set(self) -> frozenset:
        """Edges as a frozenset of frozensets (cached)."""
        if self._edge_set is None:
            self._edge_set = frozenset(frozenset(e) for e in self.edges)
        return self._edge_set

    def edge_index(self, e: Iterable[int]) -> int:
        """Id of the edge equal (as a set) to e; KeyError if absent."""
        if self._edge_index is None:
            self._edge_index = {edge: i for i, edge in enumerate(self.edges)}
        return self._edge_index[tuple(sorted(e))]

    def neighbors(self, v: int) -> frozenset:
        """Vertices sharing at least one edge with v, excluding v (cached)."""
        cached = self._neighbors.get(v)
        if cached is None:
            acc = set()
            for i in self.incidence[v]:
                acc.update(self.edges[i])
            acc.discard(v)
            cached = frozenset(acc)
            self._neighbors[v] = cached
        return cached

    def size_counts(self) -> Counter:
        """Counter mapping edge size r to the number of edges of that size."""
        return Counter(len(e) for e in self.edges)

    def is_uniform(self, r: int) -> bool:
        return all(len(e) == r for e in self.edges)

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={len(self.edges)})"


class Graph(Hypergraph):
    """A hypergraph whose edges all have size 2."""

    __slots__ = ()

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()) -> None:
        super().__init__(n, edges)
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"graph edge {e} does not have size 2")


def two_section(h: Hypergraph) -> Graph:
    """Graph on the same vertices with {u,v} an edge iff some hyperedge
    contains both. Size-1 edges contribute nothing."""
    pairs = set()
    for e in h.edges:
        pairs.update(combinations(e, 2))
    return Graph(h.n, pairs)


def _mapping(s: Iterable[int], n: int) -> Tuple[Tuple[int, ...], Dict[int, int]]:
    kept = sorted(set(s))
    if kept and (kept[0] < 0 or kept[-1] >= n):
        raise ValueError(f"vertex subset not within 0..{n - 1}")
    return tuple(kept), {v: i for i, v in enumerate(kept)}


def induced_strong(
    h: Hypergraph, s: Iterable[int]
) -> Tuple[Hypergraph, Dict[int, int]]:
    """Substructure on s keeping exactly the edges fully inside s.

    Vertices are re-indexed in sorted order of s; the old->new id mapping is
    returned alongside.
    """
    kept, mapping = _mapping(s, h.n)
    sset = set(kept)
    cand = set()
    for v in kept:
        cand.update(h.incidence[v])
    edges = []
    for i in sorted(cand):
        e = h.edges[i]
        if all(v in sset for v in e):
            edges.append(tuple(mapping[v] for v in e))
    return Hypergraph(len(kept), edges), mapping


def induced_weak(h: Hypergraph, s: Iterable[int]) -> Tuple[Hypergraph, Dict[int, int]]:
    """Substructure on s whose edges are the distinct nonempty intersections
    e ∩ s over all edges e of h (empty edge dropped, duplicates merged)."""
    kept, mapping = _mapping(s, h.n)
    sset = set(kept)
    cand = set()
    for v in kept:
        cand.update(h.incidence[v])
    edges = set()
    for i in cand:
        inter = tuple(mapping[v] for v in h.edges[i] if v in sset)
        if inter:
            edges.add(inter)
    return Hypergraph(len(kept), edges), mapping


def remove_isolated(h: Hypergraph) -> Tuple[Hypergraph, Dict[int, int]]:
    """Drop vertices contained in no edge and compact ids."""
    kept = [v for v in range(h.n) if h.incidence[v]]
    mapping = {v: i for i, v in enumerate(kept)}
    edges = [tuple(mapping[v] for v in e) for e in h.edges]
    return Hypergraph(len(kept), edges), mapping


def truncate(h: Hypergraph, max_size: int) -> Tuple[Hypergraph, Dict[int, int]]:
    """Remove edges larger than max_size, then remove isolated vertices and
    compact ids. Idempotent at the same max_size."""
    if max_size < 1:
        raise ValueError(f"max_size must be >= 1, got {max_size}")
    filtered = Hypergraph(h.n, [e for e in h.edges if len(e) <= max_size])
    return remove_isolated(filtered)


def profiles(h: Hypergraph) -> Tuple[Counter, Counter]:
    """(degree histogram, edge-size histogram).

    The degree histogram maps degree -> number of vertices (isolated
    vertices appear under degree 0); the size histogram maps edge size ->
    number of edges.
    """
    degree_hist = Counter(len(inc) for inc in h.incidence)
    size_hist = Counter(len(e) for e in h.edges)
    return degree_hist, size_hist
