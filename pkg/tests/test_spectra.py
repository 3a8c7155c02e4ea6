import json
import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dlspec.config import Tolerances
from dlspec.errors import BadOrder, DimensionMismatch, Disconnected, NoConvergence, ZeroVector
from dlspec.families import make_c4_spider, make_complete, make_cycle, make_h_graph, make_kite, make_path
from dlspec.graph import Graph
from dlspec.spectra import (
    apsp,
    cycle_radius_closed_form,
    distance_laplacian,
    eigen_decompose,
    eigen_residual,
    jacobi_eigh,
    kite_submatrix_bound,
    quadratic_form,
    spectral_radius,
    spectrum,
    write_matrix_csv,
)

from conftest import connected_graphs, to_nx
import networkx as nx


def test_apsp_examples():
    d = apsp(make_path(3))
    assert d[0, 2] == 2
    assert d.transmissions == (3, 2, 3)
    assert apsp(make_cycle(4)).transmissions == (4, 4, 4, 4)
    g, r = make_kite(6)
    assert apsp(g).transmissions[r["pendant"]] == 14


def test_apsp_disconnected():
    with pytest.raises(Disconnected):
        apsp(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(Disconnected):
        distance_laplacian(Graph.empty(2))


@given(connected_graphs(max_n=9))
def test_distance_matrix_metric_and_networkx(g):
    d = apsp(g).entries
    n = g.n
    assert np.all(np.diag(d) == 0)
    assert np.array_equal(d, d.T)
    assert np.all(d[~np.eye(n, dtype=bool)] >= 1)
    for k in range(n):
        assert np.all(d <= d[:, [k]] + d[[k], :])
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    assert all(d[u, v] == ref[u][v] for u in range(n) for v in range(n))


def test_distance_laplacian_examples():
    assert distance_laplacian(make_path(2)).tolist() == [[1, -1], [-1, 1]]
    k3 = distance_laplacian(make_complete(3))
    assert np.array_equal(k3, 3 * np.eye(3) - np.ones((3, 3)))
    assert np.all(distance_laplacian(make_kite(8)[0]).sum(axis=1) == 0)


def test_eigen_p2():
    s = eigen_decompose(distance_laplacian(make_path(2)))
    assert s.eigenvalues.tolist() == pytest.approx([2, 0], abs=1e-14)


def test_eigen_kite4_against_characteristic_polynomial():
    lap = distance_laplacian(make_kite(4)[0]).astype(int)
    x = sympy.symbols("x")
    roots = sympy.Matrix(lap.tolist()).charpoly(x).all_roots()
    assert sorted(roots, reverse=True) == [7, 5, 4, 0]
    s = spectrum(make_kite(4)[0])
    assert s.eigenvalues.tolist() == pytest.approx([7, 5, 4, 0], abs=1e-12)


def test_eigen_c4():
    assert spectral_radius(make_cycle(4)) == pytest.approx(6, abs=1e-12)


@pytest.mark.parametrize(
    "graph, value",
    [(make_h_graph(6)[0], 17.6056), (make_kite(9)[0], 45.5731), (make_cycle(5), 8.6180)],
)
def test_reference_radii(graph, value):
    assert abs(spectral_radius(graph) - value) <= 5e-4


@settings(max_examples=60)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_jacobi_matches_lapack(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) * rng.uniform(0.1, 100)
    a = a + a.T
    s = eigen_decompose(a)
    ref = np.linalg.eigvalsh(a)[::-1]
    assert np.allclose(s.eigenvalues, ref, atol=1e-10 * max(1.0, np.abs(ref).max()))
    assert s.orthogonality_error < 1e-12
    assert s.residual < 1e-10 * max(1.0, np.abs(ref).max())
    assert np.all(np.diff(s.eigenvalues) <= 0)


def test_eigen_uses_upper_triangle():
    a = np.array([[2.0, 1.0], [99.0, 2.0]])
    assert eigen_decompose(a).eigenvalues.tolist() == pytest.approx([3, 1])


def test_eigen_sign_convention():
    s = spectrum(make_kite(7)[0])
    for i in range(s.n):
        v = s.vector(i)
        assert v[int(np.argmax(np.abs(v)))] > 0


def test_eigen_deterministic_bits():
    lap = distance_laplacian(make_c4_spider(2, 1, 0, 3)[0])
    a, b = eigen_decompose(lap), eigen_decompose(lap.copy())
    assert a.eigenvalues.tobytes() == b.eigenvalues.tobytes()
    assert a.vectors.tobytes() == b.vectors.tobytes()


def test_eigen_no_convergence():
    a = np.random.default_rng(1).normal(size=(8, 8))
    with pytest.raises(NoConvergence):
        jacobi_eigh(a + a.T, Tolerances(jacobi_max_sweeps=1))


def test_spectrum_json():
    d = spectrum(make_path(2)).to_json()
    assert set(d) == {"eigenvalues", "radius", "residual"}
    assert json.loads(json.dumps(d))["radius"] == pytest.approx(2)


def test_write_matrix_csv(tmp_path):
    p = tmp_path / "m.csv"
    with open(p, "w", newline="") as fh:
        write_matrix_csv(distance_laplacian(make_path(3)), fh)
    assert p.read_text().splitlines() == ["3,-1,-2", "-1,2,-1", "-2,-1,3"]


# -- quadratic form and eigenequation -------------------------------------------


def test_quadratic_form_examples():
    assert quadratic_form(make_kite(6)[0], np.ones(6)) == 0
    assert quadratic_form(make_path(2), [1, -1]) == 4
    rng = np.random.default_rng(3)
    g = make_cycle(6)
    x = rng.normal(size=6)
    assert quadratic_form(g, x) == pytest.approx(x @ distance_laplacian(g) @ x, abs=1e-10)
    with pytest.raises(DimensionMismatch):
        quadratic_form(g, [1, 2])


@given(connected_graphs(max_n=9), st.data())
def test_quadratic_form_matches_matrix(g, data):
    x = np.array(data.draw(st.lists(st.floats(-10, 10), min_size=g.n, max_size=g.n)))
    lap = distance_laplacian(g)
    assert abs(quadratic_form(g, x) - x @ lap @ x) <= 1e-10 * max(1.0, x @ x) * g.n


def test_eigen_residual_examples():
    g = make_kite(7)[0]
    s = spectrum(g)
    assert eigen_residual(g, s.radius, s.vector(0)) <= 1e-8
    assert eigen_residual(g, 0.0, np.ones(7)) == 0
    c5 = make_cycle(5)
    s = spectrum(c5)
    x = s.vector(0)
    # shifting lambda by 1 leaves residual exactly |x|_inf, and |x|_inf >= 1/sqrt(5) for a unit vector
    r = eigen_residual(c5, s.radius + 1, x)
    assert r == pytest.approx(np.max(np.abs(x)), abs=1e-12)
    assert r >= 0.1
    with pytest.raises(ZeroVector):
        eigen_residual(c5, 1.0, np.zeros(5))
    with pytest.raises(DimensionMismatch):
        eigen_residual(c5, 1.0, np.ones(4))


@given(connected_graphs(min_n=2, max_n=9))
def test_laplacian_spectral_properties(g):
    s = spectrum(g)
    assert abs(s.eigenvalues[-1]) <= 1e-8
    assert np.all(s.eigenvalues >= -1e-8)
    assert s.radius >= apsp(g).max_transmission - 1e-8
    assert abs(s.vector(0).sum()) <= 1e-8
    assert eigen_residual(g, s.radius, s.vector(0)) <= 1e-8


# -- closed forms ------------------------------------------------------------------


def test_cycle_closed_form_examples():
    assert cycle_radius_closed_form(4) == pytest.approx(6, abs=1e-12)
    assert cycle_radius_closed_form(5) == pytest.approx(8.6180, abs=5e-4)
    assert cycle_radius_closed_form(3) == pytest.approx(3, abs=1e-12)
    with pytest.raises(BadOrder):
        cycle_radius_closed_form(2)


@pytest.mark.parametrize("n", range(3, 31))
def test_cycle_closed_form_matches_solver(n):
    assert abs(cycle_radius_closed_form(n) - spectral_radius(make_cycle(n))) <= 1e-8


def test_kite_submatrix_bound_n6():
    assert kite_submatrix_bound(6) == pytest.approx((25 + math.sqrt(73)) / 2)
    assert kite_submatrix_bound(6) == pytest.approx(16.772, abs=5e-4)
    assert kite_submatrix_bound(6) <= 18.7130
    with pytest.raises(BadOrder):
        kite_submatrix_bound(3)


@pytest.mark.parametrize("n", range(4, 13))
def test_kite_submatrix_bound_is_the_principal_submatrix(n):
    g, r = make_kite(n)
    idx = [r["pendant"], r["cycle_deg2"]]
    sub = distance_laplacian(g)[np.ix_(idx, idx)]
    assert kite_submatrix_bound(n) == pytest.approx(np.linalg.eigvalsh(sub)[-1], abs=1e-9)
    assert kite_submatrix_bound(n) <= spectral_radius(g) + 1e-12
    if n >= 6:
        assert kite_submatrix_bound(n) > cycle_radius_closed_form(n)
        assert kite_submatrix_bound(n) > n * n / 4 + 2 * n * n / math.pi**2
