"""Edge-count signatures of hypergraphs whose 2-section is a complete graph,
and origination probabilities for cliques found in the 2-section.

The signature of a k-vertex hypergraph is the vector (e_2, ..., e_k) of
edge counts by size; size-1 edges are excluded throughout since they never
affect 2-section cliques. A signature is feasible when at least one
labelled hypergraph on [k] with those counts 2-sections to K_k.

Weights count labelled hypergraphs per signature by inclusion-exclusion
over the set of uncovered vertex pairs: a selection avoiding a pair set T
may only use subsets that are independent in the graph ([k], T), so the
covering count is sum_T (-1)^|T| prod_r C(indep_r(T), e_r).
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import numpy as np

from .errors import InputError
from .model import ProbSequence, covering_probability

__all__ = [
    "Signature",
    "OriginationTable",
    "lattice_size",
    "signature_lattice",
    "signature_weights",
    "enumerate_feasible",
    "labelled_weight",
    "labelled_total",
    "origination_distribution",
    "rank_signatures",
    "write_origination_csv",
]

Signature = Tuple[int, ...]

MIN_K = 2
MAX_K = 5

_memo: Dict[Tuple[int, str], Dict[Signature, int]] = {}


def _check_k(k: int) -> None:
    if not MIN_K <= k <= MAX_K:
        raise InputError(f"k must be in {MIN_K}..{MAX_K}, got {k}")


def _dims(k: int) -> List[int]:
    """Per-size subset counts C(k, r) for r = 2..k."""
    return [math.comb(k, r) for r in range(2, k + 1)]


def lattice_size(k: int) -> int:
    """Number of signature lattice points prod_r (C(k,r) + 1)."""
    _check_k(k)
    return math.prod(d + 1 for d in _dims(k))


def signature_lattice(k: int) -> Iterator[Signature]:
    """All signature vectors, feasible or not, in lexicographic order."""
    _check_k(k)
    yield from product(*(range(d + 1) for d in _dims(k)))


def _pair_bits(k: int) -> Dict[Tuple[int, int], int]:
    return {pr: i for i, pr in enumerate(combinations(range(k), 2))}


def _subsets_by_size(k: int) -> Dict[int, List[Tuple[Tuple[int, ...], int]]]:
    """For each r: list of (subset, pair mask)."""
    bits = _pair_bits(k)
    out: Dict[int, List[Tuple[Tuple[int, ...], int]]] = {}
    for r in range(2, k + 1):
        rows = []
        for sub in combinations(range(k), r):
            mask = 0
            for pr in combinations(sub, 2):
                mask |= 1 << bits[pr]
            rows.append((sub, mask))
        out[r] = rows
    return out


def _labelled_weights(k: int) -> Dict[Signature, int]:
    npairs = math.comb(k, 2)
    subsets = _subsets_by_size(k)
    nmask = 1 << npairs
    sizes = list(range(2, k + 1))

    signs = np.empty(nmask, dtype=np.int64)
    allowed = np.empty((nmask, len(sizes)), dtype=np.int64)
    masks_per_size = [np.array([m for _, m in subsets[r]], dtype=np.int64) for r in sizes]
    for t in range(nmask):
        signs[t] = -1 if bin(t).count("1") % 2 else 1
        for ri, mlist in enumerate(masks_per_size):
            allowed[t, ri] = int(np.count_nonzero((mlist & t) == 0))

    max_dim = max(_dims(k))
    comb_table = np.zeros((max_dim + 1, max_dim + 1), dtype=np.int64)
    for a in range(max_dim + 1):
        for e in range(a + 1):
            comb_table[a, e] = math.comb(a, e)

    weights: Dict[Signature, int] = {}
    for sig in signature_lattice(k):
        terms = signs.copy()
        for ri, e in enumerate(sig):
            terms *= comb_table[allowed[:, ri], e]
        w = int(terms.sum())
        if w > 0:
            weights[sig] = w
    return weights


# -- aut-literal weights (sum of aut(H) over the signature class) -----------


def _partitions(k: int, cap: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    top = k if cap is None else min(cap, k)
    for first in range(top, 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def _cycle_rep(parts: Tuple[int, ...]) -> List[int]:
    perm = list(range(sum(parts)))
    start = 0
    for ln in parts:
        for i in range(ln):
            perm[start + i] = start + (i + 1) % ln
        start += ln
    return perm


def _class_size(parts: Tuple[int, ...], k: int) -> int:
    mult: Dict[int, int] = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    denom = math.prod(j**m * math.factorial(m) for j, m in mult.items())
    return math.factorial(k) // denom


def _aut_weights(k: int) -> Dict[Signature, int]:
    """sum over labelled H in the signature class of aut(H), equal to
    k! times the number of isomorphism classes (each orbit contributes k!)."""
    npairs = math.comb(k, 2)
    subsets = _subsets_by_size(k)
    nmask = 1 << npairs
    sizes = list(range(2, k + 1))
    dims = _dims(k)
    bits = _pair_bits(k)

    total = np.zeros([d + 1 for d in dims], dtype=np.int64)
    for parts in _partitions(k):
        perm = _cycle_rep(parts)
        csize = _class_size(parts, k)
        # orbits of r-subsets under the representative permutation
        orbit_info: Dict[int, List[Tuple[int, int]]] = {}  # r -> [(orbit len, orbit pair mask)]
        for ri, r in enumerate(sizes):
            seen = set()
            orbits = []
            for sub, _ in subsets[r]:
                if sub in seen:
                    continue
                orbit = []
                cur = sub
                while cur not in seen:
                    seen.add(cur)
                    orbit.append(cur)
                    cur = tuple(sorted(perm[v] for v in cur))
                mask = 0
                for member in orbit:
                    for pr in combinations(member, 2):
                        mask |= 1 << bits[pr]
                orbits.append((len(orbit), mask))
            orbit_info[r] = orbits

        # per pair-set T: knapsack counts of orbit selections by total size
        polys = np.zeros((nmask, len(sizes), max(dims) + 1), dtype=np.int64)
        for t in range(nmask):
            for ri, r in enumerate(sizes):
                coeff = np.zeros(dims[ri] + 1, dtype=np.int64)
                coeff[0] = 1
                for olen, omask in orbit_info[r]:
                    if omask & t:
                        continue
                    nxt = coeff.copy()
                    nxt[olen:] += coeff[: dims[ri] + 1 - olen]
                    coeff = nxt
                polys[t, ri, : dims[ri] + 1] = coeff

        signs = np.array(
            [-1 if bin(t).count("1") % 2 else 1 for t in range(nmask)], dtype=np.int64
        )
        for sig in signature_lattice(k):
            terms = signs.copy()
            for ri, e in enumerate(sig):
                terms *= polys[:, ri, e]
            total[sig] += csize * int(terms.sum())
    return {sig: int(total[sig]) for sig in signature_lattice(k) if total[sig] > 0}


# -- caching ----------------------------------------------------------------


def _default_cache_dir() -> str:
    env = os.environ.get("HNP_CACHE_DIR")
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
    return os.path.join(base, "hnp")


def signature_weights(
    k: int, weight_mode: str = "labelled", cache_dir: Optional[str] = None
) -> Dict[Signature, int]:
    """Weights of all feasible signatures on k vertices.

    weight_mode "labelled" counts labelled hypergraphs (the default, and
    the weighting the origination distribution uses); "aut" sums aut(H)
    over the class instead. Results are cached to disk after the first
    computation.
    """
    _check_k(k)
    if weight_mode not in ("labelled", "aut"):
        raise InputError(f"weight_mode must be labelled or aut, got {weight_mode!r}")
    key = (k, weight_mode)
    if key in _memo:
        return _memo[key]
    cdir = cache_dir if cache_dir is not None else _default_cache_dir()
    path = os.path.join(cdir, f"signatures_k{k}_{weight_mode}.json")
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            weights = {tuple(row["signature"]): int(row["weight"]) for row in data}
            if weights:
                _memo[key] = weights
                return weights
        except (json.JSONDecodeError, KeyError, TypeError, ValueError):
            pass  # stale cache, recompute
    weights = _labelled_weights(k) if weight_mode == "labelled" else _aut_weights(k)
    _memo[key] = weights
    try:
        os.makedirs(cdir, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(
                [{"signature": list(s), "weight": w} for s, w in sorted(weights.items())],
                fh,
            )
    except OSError:
        pass  # cache is best-effort
    return weights


def enumerate_feasible(k: int) -> set:
    """Signatures admitting at least one labelled hypergraph on [k] whose
    2-section is exactly K_k."""
    return set(signature_weights(k))


def labelled_weight(sig: Signature) -> int:
    """Number of labelled hypergraphs on [k] with edge counts sig whose
    2-section is K_k; k is len(sig) + 1."""
    k = len(sig) + 1
    _check_k(k)
    for e, d in zip(sig, _dims(k)):
        if not 0 <= e <= d:
            raise InputError(f"signature {sig} outside the k={k} lattice")
    return signature_weights(k).get(tuple(sig), 0)


def labelled_total(sig: Signature) -> int:
    """Number of labelled hypergraphs with edge counts sig, 2-section
    unconstrained: prod_r C(C(k,r), e_r)."""
    k = len(sig) + 1
    _check_k(k)
    return math.prod(math.comb(d, e) for d, e in zip(_dims(k), sig))


# -- origination ------------------------------------------------------------


@dataclass(frozen=True)
class OriginationTable:
    """Per-signature origination weights and normalized probabilities for a
    clique found in the 2-section of H(n, p)."""

    k: int
    n: int
    weight_mode: str
    entries: Mapping[Signature, Tuple[int, float]]  # sig -> (weight, probability)

    def probability(self, sig: Signature) -> float:
        return self.entries[tuple(sig)][1]


def origination_distribution(
    k: int,
    p: ProbSequence,
    n: int,
    weight_mode: str = "labelled",
    cache_dir: Optional[str] = None,
) -> OriginationTable:
    """Distribution of the originating signature for a uniformly random
    K_k copy in the 2-section.

    Unnormalized mass per feasible signature e is
    weight(e) * prod_r q_r^{e_r} (1 - q_r)^{C(k,r) - e_r}, with q_r the
    probability that a fixed r-set extends to an edge; masses are computed
    in log space and normalized over all feasible signatures.
    """
    _check_k(k)
    if not p.is_numeric:
        raise InputError("origination needs a numeric probability sequence")
    if p.M < k:
        raise InputError(f"sequence is {p.M}-bounded but k={k} requires M >= k")
    q = {r: covering_probability(p, n, r) for r in range(2, k + 1)}
    if all(v == 0.0 for v in q.values()):
        raise InputError("all extension probabilities at sizes 2..k are zero; "
                         "origination distribution is undefined")
    weights = signature_weights(k, weight_mode, cache_dir)
    dims = _dims(k)
    logs: Dict[Signature, float] = {}
    for sig, w in weights.items():
        lw = math.log(w)
        dead = False
        for ri, e in enumerate(sig):
            qr = q[ri + 2]
            cap = dims[ri]
            if e:
                if qr == 0.0:
                    dead = True
                    break
                lw += e * math.log(qr)
            if cap - e:
                if qr >= 1.0:
                    dead = True
                    break
                lw += (cap - e) * math.log1p(-qr)
        if not dead:
            logs[sig] = lw
    if not logs:
        raise InputError("no feasible signature has positive mass")
    top = max(logs.values())
    norm = top + math.log(sum(math.exp(lv - top) for lv in logs.values()))
    entries = {
        sig: (weights[sig], math.exp(logs[sig] - norm) if sig in logs else 0.0)
        for sig in sorted(weights)
    }
    return OriginationTable(k=k, n=n, weight_mode=weight_mode, entries=entries)


def rank_signatures(table: OriginationTable) -> List[Tuple[Signature, int]]:
    """Signatures with 1-based ranks, descending probability; exact ties
    broken lexicographically on the signature vector."""
    ordered = sorted(table.entries.items(), key=lambda kv: (-kv[1][1], kv[0]))
    return [(sig, i + 1) for i, (sig, _) in enumerate(ordered)]


def write_origination_csv(table: OriginationTable, path: str) -> None:
    """CSV export: signature, weight, probability, rank."""
    import csv

    ranks = dict(rank_signatures(table))
    rows = sorted(table.entries.items(), key=lambda kv: ranks[kv[0]])
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["signature", "weight", "probability", "rank"])
        for sig, (w, prob) in rows:
            writer.writerow([",".join(map(str, sig)), w, f"{prob:.10e}", ranks[sig]])
