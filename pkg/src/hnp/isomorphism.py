"""Pattern containment in hypergraphs.

A strong copy maps every pattern edge onto a host edge; a weak copy maps
every pattern edge f onto the intersection of some host edge with the
*full* image of the pattern's vertex set (the induced-weak edge reading,
which is stricter than merely requiring a superset edge).

Copies are counted per unordered image modulo pattern automorphisms, so a
triangle found in a graph counts once; labelled embeddings divided by
aut(pattern) is always an integer.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .core import Hypergraph
from .errors import GuardError

__all__ = [
    "Embedding",
    "find_strong_copies",
    "find_weak_copies",
    "automorphism_count",
    "enumerate_strong_subgraphs",
    "canonical_form",
    "is_isomorphic",
]

MAX_PATTERN_VERTICES = 12
MAX_ENUM_VERTICES = 10
MAX_ENUM_EDGES = 16


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map of a pattern into a host.

    mapping[i] is the host vertex for pattern vertex i. For weak copies,
    witnesses[j] is a host edge id whose intersection with the image equals
    the image of pattern edge j (witnesses need not be distinct across
    pattern edges); None for strong copies.
    """

    mapping: Tuple[int, ...]
    witnesses: Optional[Tuple[int, ...]] = None


def _two_section_adj(h: Hypergraph) -> List[set]:
    adj: List[set] = [set() for _ in range(h.n)]
    for e in h.edges:
        for v in e:
            adj[v].update(e)
    for v in range(h.n):
        adj[v].discard(v)
    return adj


def _pattern_order(pattern: Hypergraph, adj: List[set]) -> List[int]:
    """Vertex order: high (degree, incident-size profile) first, preferring
    vertices adjacent to already-ordered ones."""
    profile = {
        v: (
            pattern.degree(v),
            tuple(sorted((len(pattern.edges[i]) for i in pattern.incidence[v]), reverse=True)),
        )
        for v in range(pattern.n)
    }
    order: List[int] = []
    placed = set()
    while len(order) < pattern.n:
        best = None
        best_key = None
        for v in range(pattern.n):
            if v in placed:
                continue
            anchored = len(adj[v] & placed)
            key = (anchored, profile[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    return order


def _embeddings(
    pattern: Hypergraph, host: Hypergraph, weak: bool
) -> Iterator[Embedding]:
    """All injective embeddings (labelled), in deterministic order."""
    if pattern.n == 0:
        raise GuardError("pattern must have at least one vertex")
    if pattern.n > MAX_PATTERN_VERTICES:
        raise GuardError(
            f"pattern has {pattern.n} vertices, guard is {MAX_PATTERN_VERTICES}"
        )
    if pattern.n > host.n:
        return

    pat_adj = _two_section_adj(pattern)
    host_adj = _two_section_adj(host)
    host_edge_sets = [set(e) for e in host.edges]

    order = _pattern_order(pattern, pat_adj)
    rank = {v: i for i, v in enumerate(order)}

    # pattern edges become checkable at the step assigning their last vertex
    edges_done_at: List[List[int]] = [[] for _ in range(pattern.n)]
    for fi, f in enumerate(pattern.edges):
        edges_done_at[max(rank[v] for v in f)].append(fi)

    # per-vertex compatibility by incident-size profile dominance
    def strong_profile(h: Hypergraph, v: int) -> Counter:
        return Counter(len(h.edges[i]) for i in h.incidence[v])

    def sizes_desc(h: Hypergraph, v: int) -> List[int]:
        return sorted((len(h.edges[i]) for i in h.incidence[v]), reverse=True)

    candidates: List[List[int]] = []
    for w in range(pattern.n):
        if weak:
            need = sizes_desc(pattern, w)
            cand = []
            for u in range(host.n):
                have = sizes_desc(host, u)
                if len(have) >= len(need) and all(a >= b for a, b in zip(have, need)):
                    cand.append(u)
        else:
            need_prof = strong_profile(pattern, w)
            cand = []
            for u in range(host.n):
                have_prof = strong_profile(host, u)
                if all(have_prof[s] >= c for s, c in need_prof.items()):
                    cand.append(u)
        candidates.append(cand)

    assigned: Dict[int, int] = {}
    used = set()
    image: List[int] = []

    def superset_edge_exists(img: tuple) -> bool:
        probe = min(img, key=lambda u: len(host.incidence[u]))
        s = set(img)
        return any(s <= host_edge_sets[ei] for ei in host.incidence[probe])

    def resolve_witnesses() -> Optional[Tuple[int, ...]]:
        s = set(assigned.values())
        out = []
        for f in pattern.edges:
            img = {assigned[v] for v in f}
            probe = min(img, key=lambda u: len(host.incidence[u]))
            hit = None
            for ei in host.incidence[probe]:
                if host_edge_sets[ei] & s == img:
                    hit = ei
                    break
            if hit is None:
                return None
            out.append(hit)
        return tuple(out)

    def backtrack(step: int) -> Iterator[Embedding]:
        if step == pattern.n:
            if weak:
                wit = resolve_witnesses()
                if wit is not None:
                    yield Embedding(tuple(assigned[v] for v in range(pattern.n)), wit)
            else:
                yield Embedding(tuple(assigned[v] for v in range(pattern.n)))
            return
        w = order[step]
        placed_nb = [w2 for w2 in pat_adj[w] if w2 in assigned]
        for u in candidates[w]:
            if u in used:
                continue
            if any(u not in host_adj[assigned[w2]] for w2 in placed_nb):
                continue
            assigned[w] = u
            used.add(u)
            ok = True
            for fi in edges_done_at[step]:
                img = tuple(sorted(assigned[v] for v in pattern.edges[fi]))
                if weak:
                    if not superset_edge_exists(img):
                        ok = False
                        break
                else:
                    if frozenset(img) not in host.edge_set:
                        ok = False
                        break
            if ok:
                yield from backtrack(step + 1)
            del assigned[w]
            used.discard(u)

    yield from backtrack(0)


def _dispatch(
    pattern: Hypergraph, host: Hypergraph, weak: bool, mode: str
) -> Union[bool, int, List[Embedding]]:
    if mode == "exists":
        return next(_embeddings(pattern, host, weak), None) is not None
    if mode == "list":
        return list(_embeddings(pattern, host, weak))
    if mode == "count":
        labelled = sum(1 for _ in _embeddings(pattern, host, weak))
        return labelled // automorphism_count(pattern)
    raise ValueError(f"mode must be exists/count/list, got {mode!r}")


def find_strong_copies(
    pattern: Hypergraph, host: Hypergraph, mode: str = "count"
) -> Union[bool, int, List[Embedding]]:
    """Strong copies of pattern in host: every pattern edge maps onto a host
    edge. count = labelled embeddings / aut(pattern)."""
    return _dispatch(pattern, host, weak=False, mode=mode)


def find_weak_copies(
    pattern: Hypergraph, host: Hypergraph, mode: str = "count"
) -> Union[bool, int, List[Embedding]]:
    """Weak copies of pattern in host: every pattern edge equals some host
    edge intersected with the image of the whole pattern vertex set."""
    return _dispatch(pattern, host, weak=True, mode=mode)


def automorphism_count(h: Hypergraph) -> int:
    """Number of vertex permutations mapping the edge set onto itself."""
    if h.n > MAX_PATTERN_VERTICES:
        raise GuardError(f"{h.n} vertices, guard is {MAX_PATTERN_VERTICES}")
    return sum(1 for _ in _embeddings(h, h, weak=False))


# -- canonical forms -----------------------------------------------------


def canonical_form(h: Hypergraph) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
    """Canonical key (n, relabelled edges): equal iff hypergraphs isomorphic.

    Brute force over vertex orderings restined to color classes from a short
    degree/size refinement; isolated vertices never need permuting.
    """
    active = [v for v in range(h.n) if h.incidence[v]]
    if not active:
        return (h.n, ())
    colors: Dict[int, tuple] = {
        v: (
            len(h.incidence[v]),
            tuple(sorted((len(h.edges[i]) for i in h.incidence[v]))),
        )
        for v in active
    }
    for _ in range(2):
        ranks = {c: i for i, c in enumerate(sorted(set(colors.values())))}
        refined = {
            v: (
                ranks[colors[v]],
                tuple(sorted(ranks[colors[u]] for u in h.neighbors(v))),
            )
            for v in active
        }
        if len(set(refined.values())) == len(set(colors.values())):
            colors = refined
            break
        colors = refined

    groups: Dict[tuple, List[int]] = {}
    for v in active:
        groups.setdefault(colors[v], []).append(v)
    ordered_groups = [groups[c] for c in sorted(groups)]

    best = None
    offsets = []
    pos = 0
    for g in ordered_groups:
        offsets.append(pos)
        pos += len(g)

    def assignments(gi: int, label: Dict[int, int]):
        if gi == len(ordered_groups):
            yield label
            return
        base = offsets[gi]
        for perm in permutations(ordered_groups[gi]):
            for i, v in enumerate(perm):
                label[v] = base + i
            yield from assignments(gi + 1, label)

    for label in assignments(0, {}):
        relabelled = tuple(
            sorted(
                (tuple(sorted(label[v] for v in e)) for e in h.edges),
                key=lambda t: (len(t), t),
            )
        )
        if best is None or relabelled < best:
            best = relabelled
    return (h.n, best)


def is_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    if h1.n != h2.n or len(h1.edges) != len(h2.edges):
        return False
    if h1.size_counts() != h2.size_counts():
        return False
    if sorted(len(i) for i in h1.incidence) != sorted(len(i) for i in h2.incidence):
        return False
    return canonical_form(h1) == canonical_form(h2)


def enumerate_strong_subgraphs(
    h: Hypergraph, require_edges: bool = False
) -> List[Hypergraph]:
    """All isomorphism classes of (vertex-subset, edge-subset) substructures
    with nonempty vertex set.

    With require_edges=True only classes with at least one edge and no
    isolated vertices are returned (the forms the threshold theorems need).
    """
    if h.n > MAX_ENUM_VERTICES:
        raise GuardError(f"{h.n} vertices, guard is {MAX_ENUM_VERTICES}")
    if len(h.edges) > MAX_ENUM_EDGES:
        raise GuardError(f"{len(h.edges)} edges, practical guard is {MAX_ENUM_EDGES}")
    classes: Dict[tuple, Hypergraph] = {}
    if not require_edges:
        for v in range(1, h.n + 1):
            classes[(v, ())] = Hypergraph(v)
    m = len(h.edges)
    for mask in range(1, 1 << m):
        chosen = [h.edges[i] for i in range(m) if mask >> i & 1]
        support = sorted(set().union(*chosen))
        remap = {v: i for i, v in enumerate(support)}
        base = Hypergraph(len(support), [tuple(remap[v] for v in e) for e in chosen])
        _, canon_edges = canonical_form(base)
        key = (len(support), canon_edges)
        if key not in classes:
            classes[key] = base
        if not require_edges:
            for extra in range(1, h.n - len(support) + 1):
                key2 = (len(support) + extra, canon_edges)
                if key2 not in classes:
                    classes[key2] = Hypergraph(len(support) + extra, base.edges)
    return [classes[k] for k in sorted(classes)]
