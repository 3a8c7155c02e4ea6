"""Immutable simple graphs, edits, connectivity and exact canonical labeling."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .config import enumeration_ceiling
from .errors import EdgeAbsent, EdgeExists, SelfLoop, TooLarge, VertexOutOfRange

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as normalized pairs ``(u, v)`` with ``u < v``. Instances
    are values: every edit returns a new graph and labels are never compacted.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {(u, v)} is not normalized for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        normalized: set[Edge] = set()
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in normalized:
                raise EdgeExists(f"duplicate edge {e}")
            normalized.add(e)
        return cls(n, frozenset(normalized))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, frozenset())

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for v in range(n) for u in range(v)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(self.n, v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, frozenset(_norm(perm[u], perm[v]) for u, v in self.edges))

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            frozenset((u, v) for v in range(self.n) for u in range(v) if (u, v) not in self.edges),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _check_vertex(n: int, v: int) -> None:
    if not (0 <= v < n):
        raise VertexOutOfRange(f"vertex {v} outside 0..{n - 1}")


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise SelfLoop(f"self-loop at vertex {u}")
    e = _norm(u, v)
    if e in g.edges:
        raise EdgeExists(f"edge {e} already present")
    return Graph(g.n, g.edges | {e})


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    e = _norm(u, v)
    if e not in g.edges:
        raise EdgeAbsent(f"edge {e} not present")
    return Graph(g.n, g.edges - {e})


def add_vertices(g: Graph, count: int) -> Graph:
    """Append ``count`` isolated vertices labeled ``n..n+count-1``."""
    return Graph(g.n + count, g.edges)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def cycle_vertices(g: Graph) -> list[int]:
    """Vertices of the unique cycle of a unicyclic graph, in cyclic order.

    Leaves are peeled off repeatedly; what remains is the cycle.
    """
    if not is_unicyclic(g):
        raise ValueError("cycle_vertices needs a unicyclic graph")
    deg = list(g.degrees())
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    start = min(v for v in range(g.n) if alive[v])
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = min(w for w in g.adjacency[cur] if alive[w] and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > g.n:
            raise AssertionError("cycle walk did not close")
    return order


# -- canonical labeling -----------------------------------------------------
#
# Exact search: colour refinement with an isomorphism-invariant cell order,
# individualization of the first non-singleton cell, and the minimum
# adjacency bit-string over all discrete leaves. Vertices of the target cell
# that are twins (N(a) - {b} == N(b) - {a}) of an already tried vertex are
# skipped; the transposition swapping them is an automorphism fixing the
# current colouring, so their subtrees yield the same leaf set.


def _refine(adj: Sequence[frozenset[int]], colors: list[int]) -> list[int]:
    n = len(adj)
    ncls = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncls:
            return new
        colors, ncls = new, len(rank)


def _leaf_bits(adj: Sequence[frozenset[int]], colors: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    order = sorted(range(n), key=colors.__getitem__)
    bits = 0
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            bits = (bits << 1) | (order[i] in aj)
    return bits, order


def canonical_order(g: Graph) -> list[int]:
    """Vertex order ``order[pos] = v`` realizing the canonical labeling."""
    if g.n > enumeration_ceiling():
        raise TooLarge(f"n={g.n} exceeds enumeration ceiling {enumeration_ceiling()}")
    adj = g._adjsets
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        n_cls = max(colors) + 1
        if n_cls == g.n:
            bits, order = _leaf_bits(adj, colors)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, order
            return
        sizes = [0] * n_cls
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(n_cls) if sizes[c] > 1)
        cell = [v for v in range(g.n) if colors[v] == target]
        tried: list[int] = []
        for v in cell:
            if any(adj[v] - {w} == adj[w] - {v} for w in tried):
                continue
            tried.append(v)
            search([2 * c if u != v else 2 * c - 1 for u, c in enumerate(colors)])

    search([len(a) for a in adj])
    return best[1]


def canonical_relabel(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    """Certificate equal for two graphs iff they are isomorphic.

    The certificate is the graph6 encoding of the canonically relabeled graph.
    """
    from .graph6 import encode_graph6

    return encode_graph6(canonical_relabel(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
