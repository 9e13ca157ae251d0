"""Command-line surface: ingestion, generation, threshold verdicts, clique
census, origination tables, clustering, and Monte Carlo threshold checks.

Every subcommand is deterministic given its inputs, flags, and seed. Exit
codes: 0 success, 2 input error, 3 guard/budget exceeded.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import statistics
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .census import (
    census,
    write_census_csv,
    write_census_json,
    write_scatter_csv,
)
from .clustering import clustering_report
from .core import Graph, Hypergraph, profiles
from .errors import GuardError, InputError
from .io import read_edge_list, write_edge_list
from .isomorphism import find_strong_copies, find_weak_copies
from .model import ProbSequence, from_edge_counts, sample
from .signatures import (
    origination_distribution,
    rank_signatures,
    write_origination_csv,
)
from .thresholds import (
    ContainmentVerdict,
    classify_induced_weak,
    classify_strong,
    classify_two_section,
    classify_weak,
)

__all__ = ["main"]


# -- shared helpers ----------------------------------------------------------


def _parse_counts(spec: str) -> Dict[int, int]:
    """Parse "2=5975,3=2128" into {2: 5975, 3: 2128}."""
    out: Dict[int, int] = {}
    try:
        for part in spec.split(","):
            r, m = part.split("=")
            out[int(r)] = int(m)
    except ValueError as exc:
        raise InputError(f"bad counts spec {spec!r} (want e.g. 2=5975,3=2128)") from exc
    if not out:
        raise InputError("empty counts spec")
    return out


def _parse_powerlaw(spec: str) -> ProbSequence:
    """Parse "1=3/5,2=9/10" (alpha per size, coefficient 1) or entries like
    "2=0.5@9/10" to set a coefficient."""
    levels: Dict[int, Tuple[float, Fraction]] = {}
    try:
        for part in spec.split(","):
            r, rest = part.split("=")
            if "@" in rest:
                c, alpha = rest.split("@")
                levels[int(r)] = (float(c), Fraction(alpha))
            else:
                levels[int(r)] = (1.0, Fraction(rest))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad power-law spec {spec!r} (want e.g. 2=3/4,3=5/2)") from exc
    if not levels:
        raise InputError("empty power-law spec")
    return ProbSequence(M=max(levels), powerlaw=levels)


def _numeric_sequence(args) -> Tuple[ProbSequence, Optional[Dict[int, int]]]:
    """Numeric probabilities from --counts (needs --n) or a --probs file."""
    if getattr(args, "counts", None):
        counts = _parse_counts(args.counts)
        if getattr(args, "n", None) is None:
            raise InputError("--counts requires --n")
        return from_edge_counts(args.n, counts), counts
    if getattr(args, "probs", None):
        with open(args.probs, "r", encoding="utf-8") as fh:
            p = ProbSequence.from_json(fh.read())
        if not p.is_numeric:
            raise InputError("this subcommand needs a numeric sequence")
        return p, None
    raise InputError("give --counts (with --n) or --probs FILE")


def _powerlaw_sequence(args) -> ProbSequence:
    if getattr(args, "powerlaw", None):
        return _parse_powerlaw(args.powerlaw)
    if getattr(args, "probs", None):
        with open(args.probs, "r", encoding="utf-8") as fh:
            p = ProbSequence.from_json(fh.read())
        if p.is_numeric:
            raise InputError("this subcommand needs a power-law sequence")
        return p
    raise InputError("give --powerlaw SPEC or --probs FILE")


def _read_pattern(path: str) -> Hypergraph:
    return read_edge_list(path).hypergraph


def _out_path(args, name: str) -> str:
    os.makedirs(args.out, exist_ok=True)
    return os.path.join(args.out, name)


def _write_json(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


def _exponent_str(e) -> Optional[str]:
    if e is None:
        return "-inf"
    return f"{e.numerator}/{e.denominator}"


def _verdict_dict(pattern: str, mode: str, v: ContainmentVerdict) -> dict:
    witness = None
    if v.witness is not None:
        witness = {"n": v.witness.n, "edges": [list(e) for e in v.witness.edges]}
    return {
        "pattern": pattern,
        "mode": mode,
        "verdict": v.outcome,
        "witness_subgraph": witness,
        "exponent": _exponent_str(v.exponent),
        "reason": v.reason,
    }


def _workers(args) -> int:
    w = getattr(args, "parallel", None)
    return w if w is not None else (os.cpu_count() or 1)


def _pmap(fn, items: list, workers: int) -> list:
    """Order-preserving map, optionally across processes; results are
    independent of the worker count."""
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
        chunk = max(1, len(items) // (workers * 4))
        return list(ex.map(fn, items, chunksize=chunk))


# -- subcommands -------------------------------------------------------------


def cmd_ingest(args) -> int:
    parsed = read_edge_list(args.input, max_edge_size=args.max_edge_size)
    h = parsed.hypergraph
    degree_hist, size_hist = profiles(h)
    stats = {
        "input": args.input,
        "n": h.n,
        "edges": len(h.edges),
        "m_by_size": {str(r): c for r, c in sorted(size_hist.items())},
        "duplicate_edges_dropped": parsed.duplicate_edges,
        "oversize_edges_dropped": parsed.dropped_oversize,
        "max_edge_size": args.max_edge_size,
        "degree_histogram": {str(d): c for d, c in sorted(degree_hist.items())},
        "size_histogram": {str(r): c for r, c in sorted(size_hist.items())},
    }
    _write_json(stats, _out_path(args, "stats.json"))
    _write_json(parsed.token_to_id, _out_path(args, "vertexmap.json"))
    write_edge_list(h, _out_path(args, "ingested.edges"))
    if parsed.duplicate_edges:
        print(
            f"warning: dropped {parsed.duplicate_edges} duplicate edge lines",
            file=sys.stderr,
        )
    print(json.dumps(stats))
    return 0


def cmd_generate(args) -> int:
    p, counts = _numeric_sequence(args)
    if args.n is None:
        raise InputError("generate requires --n")
    files = []
    for i in range(args.samples):
        seed_i = args.seed + i
        name = f"sample_{i:04d}.edges"
        h = sample(args.n, p, seed_i)
        write_edge_list(h, _out_path(args, name))
        files.append({"file": name, "seed": seed_i, "edges": len(h.edges)})
    manifest = {
        "n": args.n,
        "counts": {str(r): m for r, m in sorted(counts.items())} if counts else None,
        "probabilities": json.loads(p.to_json()),
        "seed": args.seed,
        "samples": args.samples,
        "files": files,
    }
    _write_json(manifest, _out_path(args, "manifest.json"))
    print(json.dumps({"samples": args.samples, "out": args.out}))
    return 0


def cmd_thresholds(args) -> int:
    p = _powerlaw_sequence(args)
    pattern = _read_pattern(args.pattern)
    if args.mode == "strong":
        v = classify_strong(pattern, p, induced=args.induced)
    elif args.mode == "weak":
        v = classify_weak(pattern, p)
    elif args.mode == "induced-weak":
        v = classify_induced_weak(pattern, p)
    elif args.mode == "2section":
        g = Graph(pattern.n, pattern.edges)
        v = classify_two_section(g, p)
    else:
        raise InputError(f"unknown mode {args.mode!r}")
    doc = _verdict_dict(args.pattern, args.mode, v)
    if args.out:
        _write_json(doc, _out_path(args, "verdict.json"))
    print(json.dumps(doc))
    return 0


def cmd_census(args) -> int:
    parsed = read_edge_list(args.input, max_edge_size=args.max_edge_size)
    h = parsed.hypergraph
    n_theory = args.n if args.n is not None else h.n
    if args.counts:
        p = from_edge_counts(n_theory, _parse_counts(args.counts))
    else:
        p, _ = _numeric_sequence(args)
    report = census(h, args.k, p, n=n_theory, cap=args.clique_cap)
    write_census_json(report, _out_path(args, "census.json"))
    if args.format == "csv":
        write_census_csv(
            report,
            _out_path(args, "census_theory.csv"),
            _out_path(args, "census_observed.csv"),
        )
    write_scatter_csv(report, _out_path(args, "scatter.csv"))
    print(
        json.dumps(
            {
                "k": report.k,
                "total_cliques": report.total_cliques,
                "observed_signatures": len(report.rows),
                "spearman": report.spearman,
            }
        )
    )
    return 0


def cmd_origination(args) -> int:
    p, _ = _numeric_sequence(args)
    if args.n is None:
        raise InputError("origination requires --n")
    table = origination_distribution(args.k, p, args.n, weight_mode=args.weight_mode)
    ranks = rank_signatures(table)
    if args.format == "csv":
        write_origination_csv(table, _out_path(args, "origination.csv"))
    doc = {
        "k": table.k,
        "n": table.n,
        "weight_mode": table.weight_mode,
        "entries": [
            {
                "signature": list(sig),
                "weight": table.entries[sig][0],
                "probability": table.entries[sig][1],
                "rank": rank,
            }
            for sig, rank in ranks
        ],
    }
    _write_json(doc, _out_path(args, "origination.json"))
    print(json.dumps(doc["entries"][:5]))
    return 0


def _clustering_worker(task) -> Tuple[float, int]:
    n, p, seed = task
    h = sample(n, p, seed)
    rep = clustering_report(h)
    return rep["hc_global"], rep["n_intersecting_pairs"]


def cmd_clustering(args) -> int:
    if args.input:
        parsed = read_edge_list(args.input, max_edge_size=args.max_edge_size)
        doc = clustering_report(parsed.hypergraph)
    else:
        if args.samples is None or args.seed is None:
            raise InputError("model clustering requires --samples and --seed")
        p, _ = _numeric_sequence(args)
        tasks = [(args.n, p, args.seed + i) for i in range(args.samples)]
        results = _pmap(_clustering_worker, tasks, _workers(args))
        values = [hc for hc, _ in results]
        doc = {
            "n": args.n,
            "samples": args.samples,
            "seed": args.seed,
            "hc_global_mean": statistics.fmean(values) if values else 0.0,
            "hc_global_stdev": statistics.stdev(values) if len(values) > 1 else 0.0,
            "per_sample": [
                {"seed": args.seed + i, "hc_global": hc, "n_intersecting_pairs": np_}
                for i, (hc, np_) in enumerate(results)
            ],
        }
    _write_json(doc, _out_path(args, "clustering.json"))
    print(json.dumps({k: v for k, v in doc.items() if not isinstance(v, list)}))
    return 0


def _mc_worker(task) -> bool:
    pattern, n, p, seed, weak = task
    h = sample(n, p, seed)
    finder = find_weak_copies if weak else find_strong_copies
    return bool(finder(pattern, h, mode="exists"))


def cmd_mc_threshold(args) -> int:
    pattern = _read_pattern(args.pattern)
    p_sym = None
    p_num = None
    if args.powerlaw:
        p_sym = _parse_powerlaw(args.powerlaw)
    elif args.probs:
        with open(args.probs, "r", encoding="utf-8") as fh:
            loaded = ProbSequence.from_json(fh.read())
        if loaded.is_numeric:
            p_num = loaded
        else:
            p_sym = loaded
    elif args.counts:
        p_num, _ = _numeric_sequence(args)
    else:
        raise InputError("give --powerlaw, --probs or --counts")
    symbolic = None
    if p_sym is not None:
        p_num = p_sym.at(args.n)
        v = classify_weak(pattern, p_sym) if args.mode == "weak" else classify_strong(
            pattern, p_sym
        )
        symbolic = {"verdict": v.outcome, "exponent": _exponent_str(v.exponent)}
    tasks = [
        (pattern, args.n, p_num, args.seed + i, args.mode == "weak")
        for i in range(args.trials)
    ]
    hits = _pmap(_mc_worker, tasks, _workers(args))
    freq = sum(hits) / len(hits) if hits else 0.0
    doc = {
        "pattern": args.pattern,
        "mode": args.mode,
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "presence_frequency": freq,
        "symbolic": symbolic,
    }
    if args.out:
        _write_json(doc, _out_path(args, "mc_threshold.json"))
    print(json.dumps(doc))
    return 0


# -- parser ------------------------------------------------------------------


def _max_edge_size(value: str) -> int:
    v = int(value)
    if v < 2:
        raise argparse.ArgumentTypeError("max edge size must be >= 2")
    return v


def _add_common(sp, *, seed=False, fmt=False, max_edge=False) -> None:
    sp.add_argument("--out", default=".", help="output directory")
    sp.add_argument("--parallel", type=int, default=None, help="worker cap")
    if seed:
        sp.add_argument("--seed", type=int, required=True, help="RNG seed (required)")
    if fmt:
        sp.add_argument("--format", choices=("csv", "json"), default="json")
    if max_edge:
        sp.add_argument(
            "--max-edge-size",
            type=_max_edge_size,
            default=None,
            help="drop larger edges (must be >= 2)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hnp", description="Non-uniform random hypergraph toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("ingest", help="parse an edge-list file, write stats")
    sp.add_argument("--input", required=True)
    _add_common(sp, max_edge=True)
    sp.set_defaults(func=cmd_ingest)

    sp = sub.add_parser("generate", help="sample model hypergraphs to files")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--counts", help="expected edge counts, e.g. 2=5975,3=2128")
    sp.add_argument("--probs", help="ProbSequence JSON file")
    sp.add_argument("--samples", type=int, default=1)
    _add_common(sp, seed=True)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("thresholds", help="asymptotic containment verdict")
    sp.add_argument("--pattern", required=True, help="pattern edge-list file")
    sp.add_argument("--powerlaw", help="e.g. 2=3/4,3=5/2 (alpha per size)")
    sp.add_argument("--probs", help="power-law ProbSequence JSON file")
    sp.add_argument(
        "--mode",
        choices=("strong", "weak", "induced-weak", "2section"),
        default="strong",
    )
    sp.add_argument(
        "--induced", action="store_true", help="strong verdict as induced (needs p_r < 1)"
    )
    sp.add_argument("--out", default=None)
    sp.add_argument("--parallel", type=int, default=None)
    sp.set_defaults(func=cmd_thresholds)

    sp = sub.add_parser("census", help="K_k census of an edge-list file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--counts", help="counts for the theory side")
    sp.add_argument("--probs")
    sp.add_argument("--n", type=int, default=None, help="theory n (default: input n)")
    sp.add_argument("--clique-cap", type=int, default=100_000_000)
    _add_common(sp, fmt=True, max_edge=True)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("origination", help="theoretical signature distribution")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--counts")
    sp.add_argument("--probs")
    sp.add_argument("--weight-mode", choices=("labelled", "aut"), default="labelled")
    _add_common(sp, fmt=True)
    sp.set_defaults(func=cmd_origination)

    sp = sub.add_parser("clustering", help="extra-overlap clustering coefficients")
    sp.add_argument("--input", help="edge-list file (else model mode)")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--counts")
    sp.add_argument("--probs")
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    _add_common(sp, max_edge=True)
    sp.set_defaults(func=cmd_clustering)

    sp = sub.add_parser("mc-threshold", help="Monte Carlo presence frequency")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--mode", choices=("strong", "weak"), default="strong")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--powerlaw")
    sp.add_argument("--probs")
    sp.add_argument("--counts")
    sp.add_argument("--out", default=None)
    sp.add_argument("--parallel", type=int, default=None)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_mc_threshold)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
