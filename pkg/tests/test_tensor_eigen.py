from __future__ import annotations

import math

import numpy as np
import pytest

from spectral_independence.constructions import odd_bipartite_complete
from spectral_independence.errors import Refusal
from spectral_independence.graph import complete_graph, cycle_graph
from spectral_independence.hypergraph import Hypergraph, SignedHypergraph, axk, eigen_residual
from spectral_independence.tensor_eigen import (
    SolverConfig,
    exact_min_h_eigenvalue,
    min_h_eigenvalue,
    oracle_min_h,
    psd_probe,
)

EDGE4 = Hypergraph.from_edges(4, 4, [(0, 1, 2, 3)])
TWO_EDGES = Hypergraph.from_edges(8, 4, [(0, 1, 2, 3), (4, 5, 6, 7)])


def _check_pair(h, pair):
    x = pair.x
    assert abs(np.sum(x ** h.k) - 1.0) <= 1e-10
    assert abs(axk(h, x) - pair.lam) <= 1e-9
    if pair.converged:
        assert pair.residual <= 1e-8
        assert eigen_residual(h, pair.lam, x) == pytest.approx(pair.residual, abs=1e-12)


def test_single_edge():
    pair = min_h_eigenvalue(EDGE4)
    assert pair.lam == pytest.approx(-1.0, abs=1e-9)
    _check_pair(EDGE4, pair)
    # minimizer has the sign pattern of (1, 1, 1, -1) up to symmetry
    assert np.sum(pair.x < 0) % 2 == 1
    assert np.allclose(np.abs(pair.x), 4 ** -0.25, atol=1e-6)


def test_odd_bipartite_instance():
    inst = odd_bipartite_complete(4, 1, 2, 6)
    pair = min_h_eigenvalue(inst.hypergraph)
    assert pair.lam == pytest.approx(-20.0, abs=1e-4)
    _check_pair(inst.hypergraph, pair)


def test_graph_case_matches_matrix_eigenvalue():
    h = Hypergraph.from_graph(cycle_graph(5))
    pair = min_h_eigenvalue(h)
    assert pair.lam == pytest.approx(2 * math.cos(4 * math.pi / 5), abs=1e-9)
    assert exact_min_h_eigenvalue(h) == pytest.approx(pair.lam, abs=1e-9)


def test_deterministic_for_seed():
    h = Hypergraph.from_edges(6, 4, [(0, 1, 2, 3), (1, 2, 4, 5), (0, 3, 4, 5)])
    a = min_h_eigenvalue(h, SolverConfig(seed=3))
    b = min_h_eigenvalue(h, SolverConfig(seed=3))
    assert a.lam == b.lam and np.array_equal(a.x, b.x)


def test_refusals():
    with pytest.raises(Refusal, match="k even"):
        min_h_eigenvalue(Hypergraph.from_edges(3, 3, [(0, 1, 2)]))
    with pytest.raises(Refusal, match="edge"):
        min_h_eigenvalue(Hypergraph.from_edges(4, 4, []))
    with pytest.raises(Refusal):
        oracle_min_h(Hypergraph.from_edges(7, 4, [(0, 1, 2, 3)]))


def test_psd_probe():
    assert psd_probe(EDGE4, -1.0)[0] >= -1e-8
    value, x = psd_probe(EDGE4, -0.5)
    assert value < 0 and axk(EDGE4, x) < -0.5
    for h in (EDGE4, TWO_EDGES):
        assert psd_probe(h, -h.k * h.m)[0] >= 0


def test_oracle_examples():
    assert oracle_min_h(EDGE4) == pytest.approx(-1.0, abs=1e-3)
    assert oracle_min_h(Hypergraph.from_graph(complete_graph(3))) == pytest.approx(-1.0, abs=1e-3)
    one_component = Hypergraph.from_edges(4, 4, [TWO_EDGES.edges[0]])
    assert oracle_min_h(one_component) == pytest.approx(-1.0, abs=1e-3)
    assert min_h_eigenvalue(TWO_EDGES).lam == pytest.approx(-1.0, abs=1e-9)


def test_sign_symmetry_on_odd_bipartite_class():
    inst = odd_bipartite_complete(4, 1, 2, 6)
    h = inst.hypergraph
    pair = min_h_eigenvalue(h)
    flipped = pair.x.copy()
    flipped[list(inst.part1)] *= -1
    assert np.sum(flipped ** 4) == pytest.approx(1.0, abs=1e-10)
    # flipping one odd class negates the form, so it maps the minimizer to a maximizer
    assert axk(h, flipped) == pytest.approx(-pair.lam, abs=1e-8)
    assert eigen_residual(h, -pair.lam, flipped) <= 1e-8


def test_exact_known_cases():
    assert exact_min_h_eigenvalue(EDGE4) == -1.0
    assert exact_min_h_eigenvalue(odd_bipartite_complete(4, 1, 2, 6).hypergraph) == -20.0
    assert exact_min_h_eigenvalue(odd_bipartite_complete(4, 1, 2, 5).hypergraph) is None
    tri = Hypergraph.from_edges(6, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (2, 3, 4, 5)])
    assert exact_min_h_eigenvalue(tri) is None
    assert exact_min_h_eigenvalue(SignedHypergraph(tri, (-1, -1, -1))) == -2.0
    assert exact_min_h_eigenvalue(SignedHypergraph(tri, (1, -1, -1))) is None
    assert exact_min_h_eigenvalue(Hypergraph.from_edges(3, 3, [(0, 1, 2)])) is None


def test_exact_known_values_agree_with_oracle():
    tri = Hypergraph.from_edges(6, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (2, 3, 4, 5)])
    for h in (EDGE4, SignedHypergraph(tri, (-1, -1, -1)), SignedHypergraph(tri, (1, 1, -1)),
              SignedHypergraph(EDGE4, (-1,))):
        assert oracle_min_h(h) == pytest.approx(exact_min_h_eigenvalue(h), abs=1e-3)


def test_solver_never_below_oracle_on_random_instances():
    rng = np.random.default_rng(2)
    import itertools

    pool = list(itertools.combinations(range(6), 4))
    for _ in range(6):
        idx = rng.choice(len(pool), size=int(rng.integers(1, 8)), replace=False)
        h = Hypergraph.from_edges(6, 4, [pool[i] for i in idx])
        signs = tuple(int(s) for s in rng.choice([-1, 1], size=h.m))
        for inst in (h, SignedHypergraph(h, signs)):
            pair = min_h_eigenvalue(inst)
            _check_pair(inst, pair)
            assert oracle_min_h(inst) <= pair.lam + 1e-3
            assert abs(oracle_min_h(inst) - pair.lam) <= 1e-3
