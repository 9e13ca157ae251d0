"""Brute-force oracles, independent of the library's search code."""

from collections import defaultdict
from itertools import combinations, permutations

from hnp import Hypergraph


def brute_aut(h: Hypergraph) -> int:
    edge_sets = set(frozenset(e) for e in h.edges)
    count = 0
    for perm in permutations(range(h.n)):
        if all(frozenset(perm[v] for v in e) in edge_sets for e in h.edges):
            count += 1
    return count


def brute_strong_labelled(pattern: Hypergraph, host: Hypergraph) -> int:
    edge_sets = set(frozenset(e) for e in host.edges)
    count = 0
    for img in permutations(range(host.n), pattern.n):
        if all(frozenset(img[v] for v in e) in edge_sets for e in pattern.edges):
            count += 1
    return count


def brute_weak_labelled(pattern: Hypergraph, host: Hypergraph) -> int:
    count = 0
    for img in permutations(range(host.n), pattern.n):
        s = set(img)
        weak_edges = set()
        for e in host.edges:
            inter = frozenset(v for v in e if v in s)
            if inter:
                weak_edges.add(inter)
        if all(frozenset(img[v] for v in f) in weak_edges for f in pattern.edges):
            count += 1
    return count


def brute_strong_count(pattern: Hypergraph, host: Hypergraph) -> int:
    return brute_strong_labelled(pattern, host) // brute_aut(pattern)


def brute_weak_count(pattern: Hypergraph, host: Hypergraph) -> int:
    return brute_weak_labelled(pattern, host) // brute_aut(pattern)


def brute_is_subedge(h1: Hypergraph, h2: Hypergraph) -> bool:
    """h1 embeds with each edge a subset of a distinct h2 edge."""
    if h1.n > h2.n or len(h1.edges) > len(h2.edges):
        return False
    h2_sets = [frozenset(e) for e in h2.edges]
    for vmap in permutations(range(h2.n), h1.n):
        imgs = [frozenset(vmap[v] for v in e) for e in h1.edges]
        for assign in permutations(range(len(h2_sets)), len(imgs)):
            if all(imgs[i] <= h2_sets[assign[i]] for i in range(len(imgs))):
                return True
    return False


def brute_subgraph_classes(h: Hypergraph):
    """Isomorphism classes of (vertex subset, edge subset) substructures."""

    def iso(a, b):
        (na, ea), (nb, eb) = a, b
        if na != nb or len(ea) != len(eb):
            return False
        target = set(frozenset(e) for e in eb)
        for perm in permutations(range(na)):
            if set(frozenset(perm[v] for v in e) for e in ea) == target:
                return True
        return False

    reps = []
    for size in range(1, h.n + 1):
        for vs in combinations(range(h.n), size):
            vset = set(vs)
            inside = [e for e in h.edges if set(e) <= vset]
            remap = {v: i for i, v in enumerate(vs)}
            for mask in range(1 << len(inside)):
                chosen = [inside[i] for i in range(len(inside)) if mask >> i & 1]
                cand = (size, [tuple(sorted(remap[v] for v in e)) for e in chosen])
                if not any(iso(cand, r) for r in reps):
                    reps.append(cand)
    return reps


def complete_hypergraph(n: int) -> Hypergraph:
    edges = []
    for r in range(1, n + 1):
        edges.extend(combinations(range(n), r))
    return Hypergraph(n, edges)


def random_hypergraph(rng, n, n_edges, min_size=1, max_size=4) -> Hypergraph:
    edges = set()
    for _ in range(n_edges):
        size = rng.randint(min_size, min(max_size, n))
        edges.add(tuple(sorted(rng.sample(range(n), size))))
    return Hypergraph(n, edges)


def oracle_graph_cc(g: Hypergraph):
    """Classical clustering coefficients by direct triangle counting."""
    adj = defaultdict(set)
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    tri_at = defaultdict(int)
    for a, b, c in combinations(range(g.n), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            tri_at[a] += 1
            tri_at[b] += 1
            tri_at[c] += 1
    eligible = [v for v in range(g.n) if len(adj[v]) >= 2]
    if not eligible:
        return None, None
    from math import comb

    local = [tri_at[v] / comb(len(adj[v]), 2) for v in eligible]
    c_avg = sum(local) / len(eligible)
    wedges = sum(comb(len(adj[v]), 2) for v in eligible)
    c_glob = sum(tri_at[v] for v in eligible) / wedges
    return c_avg, c_glob
