"""graph6 encoding and decoding (bit-exact with nauty's format)."""
from __future__ import annotations

from typing import Iterable

from .errors import MalformedGraph6
from .graph import Graph

_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    raise ValueError(f"graph6 does not cover n={n}")


def encode_graph6(g: Graph) -> bytes:
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER) :]
    if not data:
        raise MalformedGraph6("empty input")
    if any(not 63 <= b <= 126 for b in data):
        raise MalformedGraph6("byte outside the printable graph6 range")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise MalformedGraph6("unsupported or truncated size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 1:
        raise MalformedGraph6("graph6 for n=0 is not a valid graph here")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits: list[int] = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def write_graph6_lines(path, graphs: Iterable[Graph | bytes]) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write((g if isinstance(g, bytes) else encode_graph6(g)) + b"\n")


def read_graph6_lines(path) -> list[Graph]:
    with open(path, "rb") as fh:
        return [decode_graph6(line) for line in fh if line.strip()]
