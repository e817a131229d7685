"""Plain-text hypergraph files.

Header ``n k m`` followed by m lines of k ascending 0-based vertex indices.
Files are written in ascending colex order, so output is deterministic.
"""

from __future__ import annotations

import os
from typing import IO, Union

from .combinat import mask_of, rank_table
from .hcore import Hypergraph

PathOrFile = Union[str, os.PathLike, IO[str]]


class HypergraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise HypergraphFormatError(f"non-integer token in {text.strip()!r}", lineno) from None


def parse_hypergraph(text: str) -> Hypergraph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise HypergraphFormatError("empty input: expected header 'n k m'", 1)
    header = _ints(lines[0], 1)
    if len(header) != 3:
        raise HypergraphFormatError("header must be 'n k m'", 1)
    n, k, m = header
    if n < 0 or k < 1 or m < 0:
        raise HypergraphFormatError(f"invalid header values n={n} k={k} m={m}", 1)
    if len(lines) - 1 != m:
        raise HypergraphFormatError(f"header announces {m} edges, found {len(lines) - 1} lines", 1)
    table = rank_table(n, k)
    bits = 0
    seen: dict[int, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        verts = _ints(line, lineno)
        if len(verts) != k:
            raise HypergraphFormatError(f"expected {k} vertices, got {len(verts)}", lineno)
        for v in verts:
            if not 0 <= v < n:
                raise HypergraphFormatError(f"vertex {v} out of range 0..{n - 1}", lineno)
        if any(u >= v for u, v in zip(verts, verts[1:])):
            raise HypergraphFormatError("vertices must be strictly ascending", lineno)
        mask = mask_of(verts)
        if mask in seen:
            raise HypergraphFormatError(f"duplicate edge (first seen on line {seen[mask]})", lineno)
        seen[mask] = lineno
        bits |= 1 << table[mask]
    return Hypergraph(n, k, bits)


def format_hypergraph(H: Hypergraph) -> str:
    out = [f"{H.n} {H.k} {H.num_edges}\n"]
    out.extend(" ".join(map(str, e)) + "\n" for e in H.edges())
    return "".join(out)


def read_hypergraph(src: PathOrFile) -> Hypergraph:
    if hasattr(src, "read"):
        return parse_hypergraph(src.read())
    with open(src, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


def write_hypergraph(H: Hypergraph, dst: PathOrFile) -> None:
    text = format_hypergraph(H)
    if hasattr(dst, "write"):
        dst.write(text)
        return
    with open(dst, "w", encoding="utf-8") as fh:
        fh.write(text)
