"""Edge-list ingestion and serialization.

File format: UTF-8 text, one hyperedge per line as whitespace-separated
vertex tokens. Lines starting with '#' and blank lines are ignored. A
repeated token within a line is an error; duplicate lines (as sets) are
dropped and counted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

from .core import Hypergraph
from .errors import InputError

__all__ = ["ParsedEdgeList", "read_edge_list", "write_edge_list"]


@dataclass
class ParsedEdgeList:
    """Result of parsing an edge-list file."""

    hypergraph: Hypergraph
    token_to_id: Dict[str, int]
    duplicate_edges: int
    line_count: int
    dropped_oversize: int = 0
    oversize_examples: List[int] = field(default_factory=list)


def read_edge_list(path: str, max_edge_size: int | None = None) -> ParsedEdgeList:
    """Parse an edge-list file into a hypergraph.

    Tokens are mapped to dense ids in first-seen order. With max_edge_size
    set, larger lines are dropped (counted, with their line numbers noted)
    before the hypergraph is built; isolated vertices left behind by the
    drop are not created since ids are assigned only for surviving lines.
    """
    token_to_id: Dict[str, int] = {}
    edges = set()
    duplicates = 0
    dropped = 0
    oversize_lines: List[int] = []
    line_count = 0
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            line_count += 1
            tokens = line.split()
            if len(set(tokens)) != len(tokens):
                seen = set()
                dup = next(t for t in tokens if t in seen or seen.add(t))
                raise InputError(f"{path}:{lineno}: repeated token {dup!r} in hyperedge")
            if max_edge_size is not None and len(tokens) > max_edge_size:
                dropped += 1
                oversize_lines.append(lineno)
                continue
            key = frozenset(tokens)
            if key in edges:
                duplicates += 1
                continue
            edges.add(key)
            for t in tokens:
                if t not in token_to_id:
                    token_to_id[t] = len(token_to_id)
    n = len(token_to_id)
    id_edges = [[token_to_id[t] for t in e] for e in edges]
    return ParsedEdgeList(
        hypergraph=Hypergraph(n, id_edges),
        token_to_id=token_to_id,
        duplicate_edges=duplicates,
        line_count=line_count,
        dropped_oversize=dropped,
        oversize_examples=oversize_lines[:20],
    )


def write_edge_list(h: Hypergraph, path: str) -> None:
    """Write edges in canonical order, ids as decimal tokens.

    Isolated vertices are not representable in this format.
    """
    with open(path, "w", encoding="utf-8") as fh:
        for e in h.edges:
            fh.write(" ".join(str(v) for v in e))
            fh.write("\n")
