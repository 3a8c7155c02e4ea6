"""Distance matrices, distance Laplacians and their spectra.

Distances come from BFS and stay integral, so the Laplacian is exact before
the eigensolver touches it. The eigensolver is a cyclic Jacobi iteration with
a fixed sweep order, which makes every decomposition bit-reproducible.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Sequence

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import BadOrder, DimensionMismatch, Disconnected, NoConvergence, ZeroVector
from .graph import Graph, bfs_distances


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    entries: np.ndarray  # int64, read-only
    transmissions: tuple[int, ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        return int(self.entries[uv])

    @property
    def max_transmission(self) -> int:
        return max(self.transmissions)


def apsp(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        d = bfs_distances(g, s)
        if min(d) < 0:
            raise Disconnected(f"vertex {d.index(-1)} unreachable from {s}")
        rows.append(d)
    entries = np.array(rows, dtype=np.int64)
    entries.setflags(write=False)
    return DistanceMatrix(g.n, entries, tuple(int(t) for t in entries.sum(axis=1)))


def distance_laplacian(g: Graph) -> np.ndarray:
    """``Tr(G) - D(G)`` as a float matrix with exact integer entries."""
    d = apsp(g).entries
    lap = np.diag(d.sum(axis=1)) - d
    return lap.astype(np.float64)


# -- eigensolver -------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order and matching orthonormal columns."""

    eigenvalues: np.ndarray
    vectors: np.ndarray
    matrix: np.ndarray
    sweeps: int = 0

    @property
    def radius(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def vector(self, i: int = 0) -> np.ndarray:
        return self.vectors[:, i]

    @property
    def residual(self) -> float:
        """max_i ||M x_i - lambda_i x_i||_inf over all eigenpairs."""
        r = self.matrix @ self.vectors - self.vectors * self.eigenvalues
        return float(np.max(np.abs(r))) if r.size else 0.0

    @property
    def orthogonality_error(self) -> float:
        v = self.vectors
        return float(np.max(np.abs(v.T @ v - np.eye(self.n))))

    def to_json(self) -> dict:
        return {
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "radius": self.radius,
            "residual": self.residual,
        }


def _symmetrize_upper(m) -> np.ndarray:
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"need a square matrix, got shape {a.shape}")
    upper = np.triu(a)
    return upper + np.triu(a, 1).T


def _off_norm(a: np.ndarray) -> float:
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def jacobi_eigh(m, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple[np.ndarray, np.ndarray, int]:
    """Cyclic Jacobi on a symmetric matrix (upper triangle authoritative).

    Returns unsorted ``(w, V, sweeps)`` with ``M V = V diag(w)``. Iteration
    stops once the off-diagonal Frobenius mass is below
    ``tol.jacobi_threshold`` times the Frobenius norm of ``M``.
    """
    a = _symmetrize_upper(m)
    n = a.shape[0]
    v = np.eye(n)
    scale = float(np.linalg.norm(a))
    target = tol.jacobi_threshold * scale
    sweeps = 0
    while _off_norm(a) > target:
        if sweeps >= tol.jacobi_max_sweeps:
            raise NoConvergence(f"Jacobi did not converge in {sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    return np.diag(a).copy(), v, sweeps


def eigen_decompose(m, tol: Tolerances = DEFAULT_TOLERANCES) -> Spectrum:
    """Full decomposition, sorted non-increasing, with a fixed sign per vector.

    Each eigenvector is flipped so that its first entry of largest absolute
    value is positive.
    """
    mat = _symmetrize_upper(m)
    w, v, sweeps = jacobi_eigh(mat, tol)
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    for i in range(v.shape[1]):
        j = int(np.argmax(np.abs(v[:, i])))
        if v[j, i] < 0:
            v[:, i] = -v[:, i]
    for arr in (w, v, mat):
        arr.setflags(write=False)
    return Spectrum(w, v, mat, sweeps)


@lru_cache(maxsize=8192)
def spectrum(g: Graph) -> Spectrum:
    """Distance Laplacian spectrum of a connected graph (memoized, read-only)."""
    return eigen_decompose(distance_laplacian(g))


def spectral_radius(g: Graph) -> float:
    return spectrum(g).radius


def _vector(g: Graph, x: Sequence[float]) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.shape != (g.n,):
        raise DimensionMismatch(f"vector of shape {arr.shape} for a graph with n={g.n}")
    return arr


def quadratic_form(g: Graph, x: Sequence[float]) -> float:
    """Sum over unordered pairs of ``d(u, v) * (x_u - x_v)**2``."""
    x = _vector(g, x)
    d = apsp(g).entries
    diff = x[:, None] - x[None, :]
    return float(np.sum(np.triu(d * diff * diff, 1)))


def eigen_residual(g: Graph, lam: float, x: Sequence[float]) -> float:
    """max_u | lam * x_u - sum_v d(u, v) (x_u - x_v) |."""
    x = _vector(g, x)
    if not np.any(x):
        raise ZeroVector("eigenvector candidate is zero")
    d = apsp(g).entries
    rhs = np.sum(d * (x[:, None] - x[None, :]), axis=1)
    return float(np.max(np.abs(lam * x - rhs)))


# -- closed forms --------------------------------------------------------------


def cycle_radius_closed_form(n: int) -> float:
    if n < 3:
        raise BadOrder(f"cycle needs n >= 3, got {n}")
    if n % 2 == 0:
        return n * n / 4 + 1.0 / math.sin(math.pi / n) ** 2
    return (n * n - 1) / 4 + 0.25 / math.sin(math.pi / (2 * n)) ** 2


def kite_submatrix_bound(n: int) -> float:
    """Largest eigenvalue of the 2x2 principal submatrix of L(Ki_{n,3}).

    The submatrix is indexed by the pendant vertex and a degree-2 triangle
    vertex; by interlacing it bounds the kite's spectral radius from below.
    """
    if n < 4:
        raise BadOrder(f"kite bound needs n >= 4, got {n}")
    return (n * n - 2 * n + 1 + math.sqrt((n - 3) ** 2 + 4 * (n - 2) ** 2)) / 2


def write_matrix_csv(m, fh: IO[str]) -> None:
    writer = csv.writer(fh)
    for row in np.asarray(m):
        writer.writerow([repr(float(x)) if not float(x).is_integer() else int(x) for x in row])
