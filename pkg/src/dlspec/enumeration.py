"""Isomorphism-free generation of unicyclic graphs (and small general graphs).

A unicyclic graph is its unique cycle ``c_0 .. c_{g-1}`` with a rooted tree
hanging at every cycle vertex, and two such graphs are isomorphic exactly
when their tree sequences agree up to rotation and reflection. The generator
walks all sequences of canonical rooted trees and keeps a sequence only if it
is the smallest in its dihedral orbit, so each class is produced once.
"""
from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .config import enumeration_ceiling
from .errors import TooLarge
from .graph import Graph, canonical_form, is_connected, is_unicyclic
from .graph6 import decode_graph6

# A rooted tree is encoded by the sorted tuple of its children's codes.
Code = tuple


def _with_leaf(code: Code) -> Iterator[Code]:
    yield tuple(sorted(code + ((),)))
    for i, child in enumerate(code):
        for grown in _with_leaf(child):
            yield tuple(sorted(code[:i] + (grown,) + code[i + 1 :]))


@lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[Code, ...]:
    """All unlabeled rooted trees with ``size`` vertices, as canonical codes."""
    if size < 1:
        raise ValueError("rooted trees need at least one vertex")
    if size == 1:
        return ((),)
    grown = {g for t in rooted_trees(size - 1) for g in _with_leaf(t)}
    return tuple(sorted(grown))


def _dihedral_min(seq: tuple) -> tuple:
    g = len(seq)
    best = seq
    rev = seq[::-1]
    for r in range(g):
        for cand in (seq[r:] + seq[:r], rev[r:] + rev[:r]):
            if cand < best:
                best = cand
    return best


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def graph_from_trees(trees: Sequence[Code]) -> Graph:
    """Cycle on ``len(trees)`` vertices with ``trees[i]`` rooted at vertex ``i``."""
    g = len(trees)
    edges = {(i, i + 1) for i in range(g - 1)} | {(0, g - 1)}
    nxt = g

    def hang(root: int, code: Code) -> None:
        nonlocal nxt
        for child in code:
            v = nxt
            nxt += 1
            edges.add((root, v))
            hang(v, child)

    for i, code in enumerate(trees):
        hang(i, code)
    return Graph(nxt, frozenset(edges))


def _check_order(n: int) -> None:
    if n < 3:
        raise ValueError(f"unicyclic graphs need n >= 3, got {n}")
    if n > enumeration_ceiling():
        raise TooLarge(f"n={n} exceeds enumeration ceiling {enumeration_ceiling()}")


def work_items(n: int) -> list[tuple[int, int]]:
    """Deterministic partition keys: (cycle length, size of the tree at c_0)."""
    return [(g, s) for g in range(3, n + 1) for s in range(1, n - g + 2)]


def _generate_item(n: int, g: int, first: int) -> list[bytes]:
    out = []
    for sizes in _compositions(n - first, g - 1):
        for first_tree in rooted_trees(first):
            for rest in itertools.product(*(rooted_trees(s) for s in sizes)):
                seq = (first_tree,) + rest
                if _dihedral_min(seq) == seq:
                    out.append(canonical_form(graph_from_trees(seq)))
    return out


def _run_shard(n: int, items: Sequence[tuple[int, int]]) -> list[bytes]:
    found: set[bytes] = set()
    for g, first in items:
        found.update(_generate_item(n, g, first))
    return sorted(found)


@dataclass
class EnumerationReport:
    n: int
    graphs: list[bytes]
    elapsed: float = 0.0
    shards: int = 1
    count: int = field(init=False)

    def __post_init__(self) -> None:
        self.count = len(self.graphs)

    def decoded(self) -> list[Graph]:
        return [decode_graph6(s) for s in self.graphs]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "count": self.count,
            "graphs": [s.decode("ascii") for s in self.graphs],
            "elapsed": self.elapsed,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def graph6_lines(self) -> bytes:
        return b"".join(s + b"\n" for s in self.graphs)


def partitioned_enumerate(n: int, shards: int = 1, workers: int = 1) -> EnumerationReport:
    """Enumerate with the work split into ``shards`` independent pieces.

    Items are dealt round-robin in a fixed order, each shard dedupes its own
    certificates, and the merge sorts and dedupes globally, so the output
    does not depend on ``shards`` or ``workers``.
    """
    if shards < 1:
        raise ValueError(f"shards must be >= 1, got {shards}")
    _check_order(n)
    start = time.perf_counter()
    items = work_items(n)
    parts = [items[i::shards] for i in range(shards)]
    if workers > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_shard, [n] * shards, parts))
    else:
        results = [_run_shard(n, p) for p in parts]
    merged = sorted(set(itertools.chain.from_iterable(results)))
    return EnumerationReport(n, merged, time.perf_counter() - start, shards)


def enumerate_unicyclic(n: int) -> EnumerationReport:
    return partitioned_enumerate(n, shards=1)


# -- general graphs (small n only) ---------------------------------------------


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[bytes, ...]:
    """Certificates of every graph on ``n`` vertices, one per isomorphism class.

    Each graph on n vertices arises from one on n-1 vertices by adding a
    vertex joined to some subset, so extending every class of order n-1 in
    every way and deduping is complete.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > min(8, enumeration_ceiling()):
        raise TooLarge(f"general graph enumeration is limited to n <= 8, got {n}")
    if n == 1:
        return (canonical_form(Graph.empty(1)),)
    found: set[bytes] = set()
    new = n - 1
    for cert in all_graphs(n - 1):
        base = decode_graph6(cert)
        for r in range(n):
            for nbrs in itertools.combinations(range(new), r):
                edges = base.edges | {(u, new) for u in nbrs}
                found.add(canonical_form(Graph(n, frozenset(edges))))
    return tuple(sorted(found))


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in map(decode_graph6, all_graphs(n)) if is_connected(g)]


def unicyclic_from_all_graphs(n: int) -> list[bytes]:
    """Slow cross-check route: filter every graph class down to the unicyclic ones."""
    return sorted(c for c in all_graphs(n) if is_unicyclic(decode_graph6(c)))
