"""Constructors for the named graph families, with vertex role maps.

Numbering convention: cycle vertices first, then pendant paths in role
order, each path listed from the attachment point outwards. For the tree
``H_n`` (no cycle) the branch vertex and its two short arms come first.

Role names follow the usual figure labels: in the kite the pendant path reads
``w_{n-4} ... w_1 - v_1 - u_1`` and the triangle is ``u_1 u_2 v_2``; in
``H_n`` the path ``w_{n-4} ... w_1`` branches at ``w_1`` into ``u_1 - u_2``
and ``v_1 - v_2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import BadOrder, BadParams, DegreeTooSmall, ParseError
from .graph import Graph, is_connected

RoleMap = Mapping[str, int]


def make_path(n: int) -> Graph:
    if n < 1:
        raise BadOrder(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise BadOrder(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)) | {(0, n - 1)})


def make_complete(n: int) -> Graph:
    if n < 1:
        raise BadOrder(f"complete graph needs n >= 1, got {n}")
    return Graph.complete(n)


def _grow_path(edges: set, start: int, anchor: int, length: int) -> list[int]:
    """Add vertices ``start..start+length-1`` as a path hanging from ``anchor``."""
    prev = anchor
    made = []
    for v in range(start, start + length):
        edges.add((min(prev, v), max(prev, v)))
        made.append(v)
        prev = v
    return made


def make_kite(n: int) -> tuple[Graph, dict[str, int]]:
    """Triangle joined by an edge to an end of a path on ``n - 3`` vertices.

    Roles: ``u1, u2, v2`` (triangle, ``u1`` the attachment vertex), ``v1``
    and ``w1..w{n-4}`` along the path. ``pendant`` aliases the far path end
    and ``cycle_deg2`` aliases ``u2``. ``n == 3`` gives the bare triangle.
    """
    if n < 3:
        raise BadOrder(f"kite needs n >= 3, got {n}")
    roles = {"u1": 0, "u2": 1, "v2": 2}
    edges = {(0, 1), (0, 2), (1, 2)}
    if n >= 4:
        path = _grow_path(edges, 3, 0, n - 3)
        roles["v1"] = path[0]
        for i, v in enumerate(path[1:], start=1):
            roles[f"w{i}"] = v
        roles["pendant"] = path[-1]
    roles["cycle_deg2"] = 1
    return Graph(n, frozenset(edges)), roles


def make_h_graph(n: int) -> tuple[Graph, dict[str, int]]:
    """The tree ``H_n``: path ``w_{n-4}..w_1`` with arms ``u1-u2``, ``v1-v2`` at ``w1``.

    ``H_n`` has ``n - 1`` edges; it is the graph whose spectral radius the
    kite is compared against, and it is what every unicyclic graph with a
    long cycle is reduced to after deleting a cycle edge.
    """
    if n < 6:
        raise BadOrder(f"H_n needs n >= 6, got {n}")
    roles = {"w1": 0, "u1": 1, "v1": 2, "u2": 3, "v2": 4}
    edges = {(0, 1), (0, 2), (1, 3), (2, 4)}
    for i, v in enumerate(_grow_path(edges, 5, 0, n - 5), start=2):
        roles[f"w{i}"] = v
    g = Graph(n, frozenset(edges))
    if __debug__:
        from .spectra import apsp

        tr = apsp(g).transmissions
        assert tr[roles[f"w{n - 4}"]] == (n * n - n - 8) // 2
        assert tr[roles["u1"]] == tr[roles["v1"]] == (n * n - 7 * n + 24) // 2
        assert tr[roles["u2"]] == tr[roles["v2"]] == (n * n - 5 * n + 20) // 2
        assert tr[roles["w1"]] == (n * n - 9 * n + 32) // 2
    return g, roles


_PATH_PREFIX = ("u", "v", "z", "y")


def make_c4_spider(l1: int, l2: int, l3: int, l4: int) -> tuple[Graph, dict[str, int]]:
    """4-cycle ``w1 w2 w3 w4`` with a pendant path of length ``l_i`` at ``w_i``.

    Path vertices are named ``u_j`` (at ``w1``), ``v_j`` (``w2``), ``z_j``
    (``w3``) and ``y_j`` (``w4``), ``j = 1`` nearest the cycle.
    """
    lengths = (l1, l2, l3, l4)
    if any(not isinstance(x, int) or x < 0 for x in lengths):
        raise BadParams(f"path lengths must be non-negative integers, got {lengths}")
    n = sum(lengths) + 4
    roles = {f"w{i + 1}": i for i in range(4)}
    edges = {(0, 1), (1, 2), (2, 3), (0, 3)}
    nxt = 4
    for i, length in enumerate(lengths):
        for j, v in enumerate(_grow_path(edges, nxt, i, length), start=1):
            roles[f"{_PATH_PREFIX[i]}{j}"] = v
        nxt += length
    return Graph(n, frozenset(edges)), roles


def attach_two_paths(g: Graph, u: int, k: int, l: int) -> Graph:
    """``G_u(k, l)``: pendant paths of lengths ``k`` and ``l`` at ``u`` (``l = 0`` allowed)."""
    if g.n < 2 or not is_connected(g):
        raise BadParams("base graph must be nontrivial and connected")
    if not 0 <= u < g.n:
        raise BadParams(f"vertex {u} outside 0..{g.n - 1}")
    if k < 1 or l < 0:
        raise BadParams(f"need k >= 1 and l >= 0, got k={k}, l={l}")
    edges = set(g.edges)
    _grow_path(edges, g.n, u, k)
    _grow_path(edges, g.n + k, u, l)
    return Graph(g.n + k + l, frozenset(edges))


def attach_at_two_vertices(g: Graph, u: int, v: int, k: int, l: int) -> Graph:
    """``G_{u,v}(k, l)``: a pendant path of length ``k`` at ``u`` and ``l`` at ``v``."""
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise BadParams(f"need two distinct vertices of the base graph, got {u}, {v}")
    if k < 1 or l < 0:
        raise BadParams(f"need k >= 1 and l >= 0, got k={k}, l={l}")
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise DegreeTooSmall(f"anchors need degree >= 2, got {g.degree(u)} and {g.degree(v)}")
    edges = set(g.edges)
    _grow_path(edges, g.n, u, k)
    _grow_path(edges, g.n + k, v, l)
    return Graph(g.n + k + l, frozenset(edges))


# -- text form ---------------------------------------------------------------

KINDS = ("path", "cycle", "complete", "kite", "h", "c4spider", "twopath", "twovertex")
_SHORT_BASE = re.compile(r"^([CKP])(\d+)$")


def parse_base(token: str) -> Graph:
    """Base graph token: ``C<n>``, ``K<n>``, ``P<n>`` or a graph6 string."""
    m = _SHORT_BASE.match(token)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return {"C": make_cycle, "K": make_complete, "P": make_path}[kind](n)
    from .graph6 import decode_graph6

    return decode_graph6(token)


@dataclass(frozen=True)
class FamilySpec:
    """A buildable family member, e.g. ``kite:n=7`` or ``c4spider:2,1,0,0``."""

    kind: str
    params: tuple[tuple[str, object], ...]

    @property
    def args(self) -> dict[str, object]:
        return dict(self.params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        if ":" not in text:
            raise ParseError(f"family spec {text!r} lacks ':'")
        kind, _, rest = text.strip().partition(":")
        kind = kind.strip().lower()
        if kind not in KINDS:
            raise ParseError(f"unknown family kind {kind!r}; expected one of {KINDS}")
        tokens = [t.strip() for t in rest.split(",") if t.strip()]
        try:
            if kind == "c4spider":
                values = [int(t.split("=", 1)[-1]) for t in tokens]
                if len(values) != 4:
                    raise ParseError("c4spider takes four lengths")
                params = tuple(zip(("l1", "l2", "l3", "l4"), values))
            elif kind in ("twopath", "twovertex"):
                kv = dict(t.split("=", 1) for t in tokens)
                keys = ("base", "u", "k", "l") if kind == "twopath" else ("base", "u", "v", "k", "l")
                if set(kv) != set(keys):
                    raise ParseError(f"{kind} needs keys {keys}")
                params = tuple((k, kv[k] if k == "base" else int(kv[k])) for k in keys)
            else:
                if len(tokens) != 1:
                    raise ParseError(f"{kind} takes a single order n")
                params = (("n", int(tokens[0].split("=", 1)[-1])),)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad parameters in {text!r}: {exc}") from exc
        return cls(kind, params)

    def __str__(self) -> str:
        a = self.args
        if self.kind == "c4spider":
            return "c4spider:" + ",".join(str(a[k]) for k in ("l1", "l2", "l3", "l4"))
        return f"{self.kind}:" + ",".join(f"{k}={v}" for k, v in self.params)

    def build(self) -> tuple[Graph, dict[str, int]]:
        a = self.args
        if self.kind == "path":
            g = make_path(a["n"])
        elif self.kind == "cycle":
            g = make_cycle(a["n"])
        elif self.kind == "complete":
            g = make_complete(a["n"])
        elif self.kind == "kite":
            return make_kite(a["n"])
        elif self.kind == "h":
            return make_h_graph(a["n"])
        elif self.kind == "c4spider":
            return make_c4_spider(a["l1"], a["l2"], a["l3"], a["l4"])
        elif self.kind == "twopath":
            g = attach_two_paths(parse_base(a["base"]), a["u"], a["k"], a["l"])
        else:
            g = attach_at_two_vertices(parse_base(a["base"]), a["u"], a["v"], a["k"], a["l"])
        return g, {}

    @property
    def order(self) -> int:
        """Vertex count implied by the parameters (without building)."""
        a = self.args
        if self.kind == "c4spider":
            return 4 + sum(a[k] for k in ("l1", "l2", "l3", "l4"))
        if self.kind in ("twopath", "twovertex"):
            return parse_base(a["base"]).n + a["k"] + a["l"]
        return a["n"]


def dihedral_images(lengths: tuple[int, int, int, int]) -> set[tuple[int, int, int, int]]:
    """All rotations and reflections of a 4-cycle parameter tuple."""
    out = set()
    seq = list(lengths)
    for r in range(4):
        rot = seq[r:] + seq[:r]
        out.add(tuple(rot))
        out.add(tuple(reversed(rot)))
    return out


def c4_compositions(n: int) -> list[tuple[int, int, int, int]]:
    """One representative (lexicographically largest) per dihedral class with sum ``n - 4``."""
    if n < 4:
        raise BadOrder(f"C_n(l1..l4) needs n >= 4, got {n}")
    total = n - 4
    reps = set()
    for a in range(total + 1):
        for b in range(total - a + 1):
            for c in range(total - a - b + 1):
                t = (a, b, c, total - a - b - c)
                reps.add(max(dihedral_images(t)))
    return sorted(reps, reverse=True)
