"""Asymptotic classification of pattern containment under power-law
probability sequences.

Exponents are exact Fractions throughout; None encodes -infinity (an edge
size whose probability is identically zero). Expected-count exponents
govern the verdicts: a pattern is a.a.s. absent when some strong subgraph
has negative exponent, a.a.s. present when all are positive, inconclusive
when the minimum is exactly zero (a Theta(1) expectation decides nothing;
power-law coefficients are carried but never decide a verdict).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .core import Graph, Hypergraph
from .errors import GuardError, InputError
from .isomorphism import canonical_form
from .model import ProbSequence

__all__ = [
    "AsymptoticClass",
    "ContainmentVerdict",
    "strong_exponent",
    "weak_exponent",
    "covering_weight_exponent",
    "strong_asymptotics",
    "weak_asymptotics",
    "classify_strong",
    "classify_weak",
    "classify_induced_weak",
    "pad_amount",
    "padded_pattern",
    "is_subedge_system",
    "minimal_two_section_covers",
    "classify_two_section",
]

Exponent = Optional[Fraction]  # None = -infinity

MAX_CLASSIFY_VERTICES = 10
MAX_CLASSIFY_EDGES = 16
MAX_SUBEDGE_VERTICES = 10
MAX_COVER_VERTICES = 7


def _lt(a: Exponent, b: Exponent) -> bool:
    """a < b with None as -infinity."""
    if a is None:
        return b is not None
    if b is None:
        return False
    return a < b


@dataclass(frozen=True)
class AsymptoticClass:
    """Limiting behaviour of the governing expected-count surrogate.

    verdict: tends_to_zero / tends_to_infinity / order_constant, by the sign
    of the governing rational exponent (None = -infinity, tends to zero).
    witness is the strong subgraph achieving the minimum exponent.
    """

    verdict: str
    exponent: Exponent
    witness: Hypergraph


@dataclass(frozen=True)
class ContainmentVerdict:
    outcome: str  # aas_present | aas_absent | inconclusive
    exponent: Exponent
    witness: Optional[Hypergraph] = None
    reason: str = ""


def _require_powerlaw(p: ProbSequence) -> None:
    if p.is_numeric:
        raise InputError("asymptotic classification requires a power-law sequence")


def strong_exponent(h: Hypergraph, p: ProbSequence) -> Exponent:
    """Exponent of the expected strong-copy count n^v * prod p_r^{e_r}:
    v(h) - sum_r alpha_r * e_r(h); None when some edge size has p_r = 0."""
    _require_powerlaw(p)
    total = Fraction(h.n)
    for e in h.edges:
        a = p.alpha(len(e)) if len(e) <= p.M else None
        if a is None:
            return None
        total -= a
    return total


def covering_weight_exponent(p: ProbSequence, r: int) -> Exponent:
    """Exact exponent of the covering-weight tail: max_i (i - alpha_{r+i}).

    Shared by the power-weighted and binomial-weighted tails, which have
    the same growth order.
    """
    _require_powerlaw(p)
    if not 1 <= r <= p.M:
        raise InputError(f"size {r} outside 1..M={p.M}")
    best: Exponent = None
    for i in range(p.M - r + 1):
        a = p.alpha(r + i)
        if a is None:
            continue
        val = Fraction(i) - a
        if _lt(best, val):
            best = val
    return best


def weak_exponent(h: Hypergraph, p: ProbSequence) -> Exponent:
    """Exponent of the expected weak-copy count (covering weights in place
    of edge probabilities)."""
    _require_powerlaw(p)
    total = Fraction(h.n)
    for e in h.edges:
        if len(e) > p.M:
            return None
        cw = covering_weight_exponent(p, len(e))
        if cw is None:
            return None
        total += cw
    return total


# -- family minimum over strong subgraphs ----------------------------------


def _family_minimum(
    h: Hypergraph, p: ProbSequence, weak: bool
) -> Tuple[Exponent, Hypergraph]:
    """Minimum exponent over all strong subgraphs of h, with a witness.

    Only subgraphs with >= 1 edge and no isolated vertices can achieve the
    minimum below 1 (padding with isolated vertices raises the exponent by
    one each; edgeless classes have exponent equal to their order), so the
    single-vertex class caps the search at exponent 1.
    """
    if h.n < 1:
        raise InputError("pattern must have at least one vertex")
    if h.n > MAX_CLASSIFY_VERTICES:
        raise GuardError(f"{h.n} vertices, guard is {MAX_CLASSIFY_VERTICES}")
    m = len(h.edges)
    if m > MAX_CLASSIFY_EDGES:
        raise GuardError(f"{m} edges, practical guard is {MAX_CLASSIFY_EDGES}")

    per_size: Dict[int, Exponent] = {}
    for r in set(len(e) for e in h.edges):
        if r > p.M:
            per_size[r] = None
        elif weak:
            per_size[r] = covering_weight_exponent(p, r)
        else:
            a = p.alpha(r)
            per_size[r] = None if a is None else -a

    best: Exponent = Fraction(1)
    best_wit = Hypergraph(1)
    for mask in range(1, 1 << m):
        chosen = [h.edges[i] for i in range(m) if mask >> i & 1]
        support = set().union(*chosen)
        val: Exponent = Fraction(len(support))
        for e in chosen:
            contrib = per_size[len(e)]
            if contrib is None:
                val = None
                break
            val += contrib
        if _lt(val, best):
            best = val
            sup = sorted(support)
            remap = {v: i for i, v in enumerate(sup)}
            best_wit = Hypergraph(len(sup), [tuple(remap[v] for v in e) for e in chosen])
    return best, best_wit


def _as_class(exponent: Exponent, witness: Hypergraph) -> AsymptoticClass:
    if exponent is None or exponent < 0:
        verdict = "tends_to_zero"
    elif exponent > 0:
        verdict = "tends_to_infinity"
    else:
        verdict = "order_constant"
    return AsymptoticClass(verdict, exponent, witness)


def strong_asymptotics(h: Hypergraph, p: ProbSequence) -> AsymptoticClass:
    """Governing (minimum) strong-copy exponent over the subgraph family."""
    _require_powerlaw(p)
    return _as_class(*_family_minimum(h, p, weak=False))


def weak_asymptotics(h: Hypergraph, p: ProbSequence) -> AsymptoticClass:
    """Governing (minimum) weak-copy exponent over the subgraph family."""
    _require_powerlaw(p)
    return _as_class(*_family_minimum(h, p, weak=True))


def _verdict_from(ac: AsymptoticClass, kind: str) -> ContainmentVerdict:
    if ac.verdict == "tends_to_zero":
        return ContainmentVerdict(
            "aas_absent",
            ac.exponent,
            ac.witness,
            reason=f"a subgraph's expected {kind}-copy count tends to 0",
        )
    if ac.verdict == "tends_to_infinity":
        return ContainmentVerdict(
            "aas_present",
            ac.exponent,
            ac.witness,
            reason=f"every subgraph's expected {kind}-copy count tends to infinity",
        )
    return ContainmentVerdict(
        "inconclusive",
        ac.exponent,
        ac.witness,
        reason=f"tightest subgraph has Theta(1) expected {kind}-copy count",
    )


def classify_strong(
    h: Hypergraph, p: ProbSequence, induced: bool = False
) -> ContainmentVerdict:
    """A.a.s. presence/absence of h as a strong subhypergraph of H(n, p).

    With induced=True the same verdict also applies to induced strong
    appearance, which requires every probability bounded away from 1; that
    holds automatically for alpha_r > 0 and is rejected for alpha_r = 0
    with c_r >= 1.
    """
    _require_powerlaw(p)
    if induced:
        for r in range(1, p.M + 1):
            a = p.alpha(r)
            if a is not None and a == 0 and p.coefficient(r) >= 1:
                raise InputError(
                    f"induced verdict needs p_{r} bounded away from 1 "
                    f"(alpha_{r}=0 with c_{r}>=1)"
                )
    return _verdict_from(strong_asymptotics(h, p), "strong")


def classify_weak(h: Hypergraph, p: ProbSequence) -> ContainmentVerdict:
    """A.a.s. presence/absence of h as a weak subhypergraph of H(n, p)."""
    return _verdict_from(weak_asymptotics(h, p), "weak")


# -- padding construction ---------------------------------------------------


def pad_amount(p: ProbSequence, r: int) -> int:
    """Number of fresh vertices to add to a size-r edge: the i maximizing
    the exponent of n^i p_{r+i} (ties broken toward smaller i)."""
    _require_powerlaw(p)
    if not 1 <= r <= p.M:
        raise InputError(f"size {r} outside 1..M={p.M}")
    best_i = None
    best: Exponent = None
    for i in range(p.M - r + 1):
        a = p.alpha(r + i)
        if a is None:
            continue
        val = Fraction(i) - a
        if best_i is None or _lt(best, val):
            best_i, best = i, val
    if best_i is None:
        raise InputError(f"no nonzero level at or above size {r}")
    return best_i


def padded_pattern(h: Hypergraph, p: ProbSequence) -> Hypergraph:
    """Pad every edge with fresh vertices up to its dominant witnessing
    size; strong appearance of the result certifies weak appearance of h."""
    _require_powerlaw(p)
    fresh = h.n
    edges = []
    for e in h.edges:
        i = pad_amount(p, len(e))
        edges.append(tuple(e) + tuple(range(fresh, fresh + i)))
        fresh += i
    return Hypergraph(fresh, edges)


def classify_induced_weak(h: Hypergraph, p: ProbSequence) -> ContainmentVerdict:
    """A.a.s. presence/absence of h as an induced weak subhypergraph.

    A non-edge of size r with positive covering-weight exponent forbids
    induced appearance; when the smallest non-edge size has bounded
    covering weight and a vanishing level probability, the plain weak
    verdict carries over; otherwise inconclusive.
    """
    _require_powerlaw(p)
    k = h.n
    if k > MAX_CLASSIFY_VERTICES:
        raise GuardError(f"{k} vertices, guard is {MAX_CLASSIFY_VERTICES}")
    counts = h.size_counts()
    nonedge_sizes = [r for r in range(1, k + 1) if counts.get(r, 0) < math.comb(k, r)]
    if not nonedge_sizes:
        return classify_weak(h, p)
    for r in nonedge_sizes:
        if r > p.M:
            continue
        e = covering_weight_exponent(p, r)
        if e is not None and e > 0:
            return ContainmentVerdict(
                "aas_absent",
                e,
                None,
                reason=(
                    f"non-edge of size {r}: covering weight grows like n^{e}, "
                    f"so every weak copy gets that set covered"
                ),
            )
    r0 = min(nonedge_sizes)
    e0 = covering_weight_exponent(p, r0) if r0 <= p.M else None
    a0 = p.alpha(r0) if r0 <= p.M else None
    if (e0 is None or e0 <= 0) and (a0 is None or a0 > 0):
        inner = classify_weak(h, p)
        return ContainmentVerdict(
            inner.outcome,
            inner.exponent,
            inner.witness,
            reason="weak verdict carries over to induced: " + inner.reason,
        )
    return ContainmentVerdict(
        "inconclusive",
        e0,
        None,
        reason=f"smallest non-edge size {r0} has borderline covering weight",
    )


# -- subedge systems and 2-section covers -----------------------------------


def is_subedge_system(h1: Hypergraph, h2: Hypergraph) -> bool:
    """True iff h1 embeds into h2 with each h1-edge a subset of a distinct
    h2-edge (shrink each h2-edge to at most one subset, then take a strong
    subgraph), up to injective vertex identification."""
    if h1.n > MAX_SUBEDGE_VERTICES or h2.n > MAX_SUBEDGE_VERTICES:
        raise GuardError(f"guard is {MAX_SUBEDGE_VERTICES} vertices")
    if h1.n > h2.n or len(h1.edges) > len(h2.edges):
        return False
    if not h1.edges:
        return True
    if max(len(e) for e in h1.edges) > max(len(e) for e in h2.edges):
        return False

    h2_edge_sets = [set(e) for e in h2.edges]
    h2_adj = [set() for _ in range(h2.n)]
    for e in h2.edges:
        for v in e:
            h2_adj[v].update(e)
    for v in range(h2.n):
        h2_adj[v].discard(v)
    h1_adj = [set() for _ in range(h1.n)]
    for e in h1.edges:
        for v in e:
            h1_adj[v].update(e)
    for v in range(h1.n):
        h1_adj[v].discard(v)

    def sizes_desc(h: Hypergraph, v: int) -> List[int]:
        return sorted((len(h.edges[i]) for i in h.incidence[v]), reverse=True)

    candidates = []
    for w in range(h1.n):
        need = sizes_desc(h1, w)
        cand = []
        for u in range(h2.n):
            have = sizes_desc(h2, u)
            if len(have) >= len(need) and all(a >= b for a, b in zip(have, need)):
                cand.append(u)
        candidates.append(cand)

    order = sorted(range(h1.n), key=lambda w: -h1.degree(w))
    edges_done_at: List[List[int]] = [[] for _ in range(h1.n)]
    rank = {v: i for i, v in enumerate(order)}
    for fi, f in enumerate(h1.edges):
        edges_done_at[max(rank[v] for v in f)].append(fi)

    assigned: Dict[int, int] = {}
    used = set()

    def matching_exists() -> bool:
        allowed = []
        for f in h1.edges:
            img = {assigned[v] for v in f}
            allowed.append([j for j, es in enumerate(h2_edge_sets) if img <= es])
        match_r: Dict[int, int] = {}

        def augment(i: int, visited: set) -> bool:
            for j in allowed[i]:
                if j in visited:
                    continue
                visited.add(j)
                if j not in match_r or augment(match_r[j], visited):
                    match_r[j] = i
                    return True
            return False

        return all(augment(i, set()) for i in range(len(h1.edges)))

    def backtrack(step: int) -> bool:
        if step == h1.n:
            return matching_exists()
        w = order[step]
        placed_nb = [w2 for w2 in h1_adj[w] if w2 in assigned]
        for u in candidates[w]:
            if u in used:
                continue
            if any(u not in h2_adj[assigned[w2]] for w2 in placed_nb):
                continue
            assigned[w] = u
            used.add(u)
            ok = True
            for fi in edges_done_at[step]:
                img = {assigned[v] for v in h1.edges[fi]}
                if not any(img <= es for es in h2_edge_sets):
                    ok = False
                    break
            if ok and backtrack(step + 1):
                return True
            del assigned[w]
            used.discard(u)
        return False

    return backtrack(0)


def minimal_two_section_covers(g: Graph) -> List[Hypergraph]:
    """Isomorphism classes of hypergraphs on V(g), minimal under the
    subedge-system order, whose 2-section contains every edge of g.

    Candidate hyperedges are the "closed" vertex subsets (equal to the
    union of the g-edges they contain); covers are enumerated by branching
    on the first uncovered g-edge, pruned to irredundant ones, reduced
    modulo isomorphism, and filtered by pairwise subedge domination.
    """
    if not g.is_uniform(2):
        raise InputError("2-section cover search needs a 2-uniform input")
    if g.n > MAX_COVER_VERTICES:
        raise GuardError(f"{g.n} vertices, guard is {MAX_COVER_VERTICES}")
    if any(not g.incidence[v] for v in range(g.n)):
        raise InputError("input graph must have no isolated vertices")
    pairs = [set(e) for e in g.edges]
    m = len(pairs)

    candidates: List[Tuple[frozenset, frozenset]] = []  # (vertex set, covered edge ids)
    verts = list(range(g.n))
    for size in range(2, g.n + 1):
        for sub in combinations(verts, size):
            s = set(sub)
            covered = frozenset(i for i, pr in enumerate(pairs) if pr <= s)
            if not covered:
                continue
            union = set()
            for i in covered:
                union |= pairs[i]
            if union == s:
                candidates.append((frozenset(sub), covered))

    all_edges = frozenset(range(m))
    covers: set = set()

    def rec(chosen: Tuple[int, ...], covered: frozenset) -> None:
        if covered == all_edges:
            covers.add(frozenset(chosen))
            return
        target = min(all_edges - covered)
        for ci, (s, cov) in enumerate(candidates):
            if target in cov and ci not in chosen:
                rec(chosen + (ci,), covered | cov)

    rec((), frozenset())

    reps: Dict[tuple, Hypergraph] = {}
    for cover in covers:
        cov_sets = [candidates[ci][1] for ci in cover]
        redundant = False
        for i, cs in enumerate(cov_sets):
            others = set().union(*(c for j, c in enumerate(cov_sets) if j != i)) if len(cov_sets) > 1 else set()
            if cs <= others:
                redundant = True
                break
        if redundant:
            continue
        hyp = Hypergraph(g.n, [tuple(sorted(candidates[ci][0])) for ci in cover])
        key = canonical_form(hyp)
        if key not in reps:
            reps[key] = hyp

    classes = list(reps.items())
    keep: List[Hypergraph] = []
    for key, hyp in classes:
        dominated = False
        for key2, hyp2 in classes:
            if key2 == key:
                continue
            if is_subedge_system(hyp2, hyp) and not is_subedge_system(hyp, hyp2):
                dominated = True
                break
        if not dominated:
            keep.append(hyp)
    keep.sort(key=canonical_form)
    return keep


def classify_two_section(g: Graph, p: ProbSequence) -> ContainmentVerdict:
    """A.a.s. presence/absence of g as a subgraph of the 2-section of
    H(n, p), decided through the minimal cover family."""
    _require_powerlaw(p)
    covers = minimal_two_section_covers(g)
    verdicts = [(H, classify_weak(H, p)) for H in covers]
    for H, v in verdicts:
        if v.outcome == "aas_present":
            return ContainmentVerdict(
                "aas_present",
                v.exponent,
                H,
                reason="a minimal cover appears weakly: " + v.reason,
            )
    if all(v.outcome == "aas_absent" for _, v in verdicts):
        H, v = verdicts[0]
        return ContainmentVerdict(
            "aas_absent",
            v.exponent,
            v.witness,
            reason="every minimal cover has a vanishing subgraph",
        )
    return ContainmentVerdict(
        "inconclusive",
        None,
        None,
        reason="no cover is conclusively present and not all are absent",
    )
