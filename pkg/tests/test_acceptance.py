"""Acceptance run: one PASS/FAIL line per criterion, printed in the pytest summary."""

from __future__ import annotations

import itertools
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE
from corpus import connected_graphs, few_edge_hypergraphs, small_k4_hypergraphs
from spectral_independence.constructions import join_bound_comparison, odd_bipartite_complete, pendant_graph
from spectral_independence.errors import Refusal
from spectral_independence.exact import exact_alpha, exact_alpha_t, shannon_lower
from spectral_independence.graph import (
    adjacency_matrix,
    cycle_graph,
    petersen_graph,
    star_graph,
)
from spectral_independence.graph_bounds import (
    all_graph_bounds,
    certify_theta,
    haemers_bound,
    hoffman_bound,
    laplacian_bound,
    ratio_bound,
    theta_upper_group_inverse,
)
from spectral_independence.hypergraph import Hypergraph, check_t_set
from spectral_independence.hypergraph_bounds import (
    check_odd_t_equality,
    odd_t_bound,
    signed_even_t_bound,
    signing_search,
)
from spectral_independence.linalg import sym_eigen
from spectral_independence.tensor_eigen import (
    SolverConfig,
    exact_min_h_eigenvalue,
    min_h_eigenvalue,
    oracle_min_h,
)

EDGE4 = Hypergraph.from_edges(4, 4, [(0, 1, 2, 3)])


def record(number: int, checks: dict[str, bool], detail: str = "") -> None:
    failed = [name for name, ok in checks.items() if not ok]
    ok = not failed
    ACCEPTANCE[number] = (ok, detail if ok else f"{detail} failed: {', '.join(failed)}")
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {ACCEPTANCE[number][1]}")
    assert ok, failed


def close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol


def test_criterion_1_golden_values():
    start = time.perf_counter()
    p, c5, k13 = petersen_graph(), cycle_graph(5), star_graph(3)
    checks = {}
    for f in (hoffman_bound, haemers_bound, laplacian_bound, ratio_bound):
        checks[f"petersen {f.__name__}"] = close(f(p).value, 4.0, 1e-6)
    checks["petersen alpha"] = exact_alpha(p).value == 4
    for f in (hoffman_bound, ratio_bound):
        checks[f"c5 {f.__name__}"] = close(f(c5).value, math.sqrt(5), 1e-6)
    checks["c5 alpha"] = exact_alpha(c5).value == 2
    alpha = exact_alpha(k13).value
    checks["k13 alpha"] = alpha == 3
    for f in (ratio_bound, haemers_bound, laplacian_bound):
        checks[f"k13 {f.__name__}"] = close(f(k13).value, alpha, 1e-6)
    elapsed = time.perf_counter() - start
    checks["runtime < 1 s"] = elapsed < 1.0
    record(1, checks, f"({elapsed:.2f} s)")


def test_criterion_2_theta_certificates():
    cases = {
        "petersen": (petersen_graph(), exact_alpha(petersen_graph()).witness),
        "k13": (star_graph(3), (1, 2, 3)),
        "c4": (cycle_graph(4), (0, 2)),
    }
    checks = {}
    for name, (g, s) in cases.items():
        cert = certify_theta(g, s)
        checks[f"{name} certified"] = cert.certified
        checks[f"{name} functional"] = cert.functional is not None and close(cert.functional, len(s), 1e-6)
    record(2, checks)


def test_criterion_3_group_inverse_path_identity():
    start = time.perf_counter()
    worst, count = 0.0, 0
    for g in connected_graphs():
        if g.m == 0:
            continue
        a = adjacency_matrix(g)
        lam = sym_eigen(a).smallest
        m = a - lam * np.eye(g.n)
        got = theta_upper_group_inverse(m, m @ np.ones(g.n), g)
        worst = max(worst, abs(got - ratio_bound(g).value))
        count += 1
    elapsed = time.perf_counter() - start
    record(3, {"within 1e-6": worst <= 1e-6, "runtime < 2 min": elapsed < 120},
           f"({count} graphs, max gap {worst:.1e}, {elapsed:.1f} s)")


def test_criterion_4_odd_t_bound():
    checks = {}
    for t, expected in ((1, 1.0), (3, 3.0)):
        r = odd_t_bound(EDGE4, t)
        checks[f"edge t={t} value"] = close(r.value, expected, 1e-6)
        witness = tuple(range(t))
        checks[f"edge t={t} witness"] = check_odd_t_equality(EDGE4, t, r.lam, witness).all_match
    inst = odd_bipartite_complete(4, 1, 2, 6)
    h = inst.hypergraph
    pair = min_h_eigenvalue(h)
    checks["solver lambda"] = close(pair.lam, -20.0, 1e-4)
    bound = odd_t_bound(h, 1, -20.0).value
    checks["bound 2.0"] = close(bound, 2.0, 1e-6)
    checks["exact alpha_1"] = exact_alpha_t(h, 1).value == 2
    checks["solver bound"] = close(odd_t_bound(h, 1, pair).value, 2.0, 1e-4)
    checks["witness V1"] = check_odd_t_equality(h, 1, -20.0, inst.part1).all_match
    record(4, checks, f"(solver lambda {pair.lam:.9f})")


def _exhaustive_signing_violations() -> list[tuple[tuple, tuple, float, int]]:
    cfg = SolverConfig(starts=24)
    found = []
    for h in few_edge_hypergraphs():
        alpha = exact_alpha_t(h, 2).value
        for o in signing_search(h, 2, config=cfg):
            if o.value < alpha - 1e-6:
                found.append((h.edges, o.signs, o.value, alpha))
    return found


@pytest.mark.xfail(strict=True, reason=(
    "minimising the bound over all signings is not sound: the 3-edge hypergraph "
    "{0123, 0145, 2345} has alpha_2 = 3 but its all-positive signing has lambda = -1 "
    "and gives 2"))
def test_criterion_5_signed_even_t_bound():
    r = signed_even_t_bound(EDGE4, 2, (0, 1))
    checks = {
        "single edge bound 2.0": close(r.value, 2.0, 1e-6),
        "single edge exact alpha_2": exact_alpha_t(EDGE4, 2).value == 2,
        "single edge signing": r.signing == (-1,),
    }
    violations = _exhaustive_signing_violations()
    checks["exhaustive signings never undercut alpha_2"] = not violations
    detail = ""
    if violations:
        edges, signs, value, alpha = violations[0]
        detail = (f"({len(violations)} signings undercut; e.g. edges {edges} signs {signs} "
                  f"bound {value:.3f} < alpha_2 {alpha})")
    record(5, checks, detail)


def test_set_induced_signings_are_sound():
    # the sound form of the exhaustive property: the signing built from a
    # 2-independent set S gives a bound of at least |S|
    cfg = SolverConfig(starts=24)
    for h in few_edge_hypergraphs():
        best = exact_alpha_t(h, 2).witness
        assert check_t_set(h, best, 2).valid
        r = signed_even_t_bound(h, 2, best, config=cfg)
        assert r.value >= len(best) - 1e-6


def test_criterion_6_tensor_solver():
    start = time.perf_counter()
    gap4, res_worst, unconverged, count4 = 0.0, 0.0, 0, 0
    for h in small_k4_hypergraphs():
        pair = min_h_eigenvalue(h)
        gap4 = max(gap4, abs(pair.lam - oracle_min_h(h)))
        if pair.converged:
            res_worst = max(res_worst, pair.residual)
        else:
            unconverged += 1
        count4 += 1
    gap2, count2 = 0.0, 0
    cfg = SolverConfig(starts=16)
    for g in connected_graphs():
        if g.m == 0:
            continue
        pair = min_h_eigenvalue(Hypergraph.from_edges(g.n, 2, g.edges), cfg)
        gap2 = max(gap2, abs(pair.lam - sym_eigen(adjacency_matrix(g)).smallest))
        if pair.converged:
            res_worst = max(res_worst, pair.residual)
        count2 += 1
    elapsed = time.perf_counter() - start
    record(6, {
        "k=4 within 1e-3 of oracle": gap4 <= 1e-3,
        "residual <= 1e-8": res_worst <= 1e-8,
        "k=2 within 1e-6 of matrix": gap2 <= 1e-6,
    }, (f"(k=4: {count4} instances, gap {gap4:.1e}, {unconverged} unconverged; "
        f"k=2: {count2} graphs, gap {gap2:.1e}; residual {res_worst:.1e}; {elapsed:.0f} s)"))


def test_criterion_7_join_comparison():
    start = time.perf_counter()
    c = join_bound_comparison(200, 2, 3, 2)
    checks = {
        "beta3 closed form 198": c.beta3_closed == 198.0,
        "beta3 computed 198": close(c.beta3, 198.0, 1e-9),
        "beta2": close(c.beta2, 203 * 596 / 621, 1e-9),
        "ordering n1=200": c.beta1 < c.beta2 < c.beta3,
    }
    for n1 in (100, 400):
        other = join_bound_comparison(n1, 2, 3, 2)
        checks[f"ordering n1={n1}"] = other.beta1 < other.beta2 < other.beta3
    elapsed = time.perf_counter() - start
    checks["runtime < 5 s"] = elapsed < 5.0
    record(7, checks, f"(beta1 {c.beta1:.4f}, beta2 {c.beta2:.10f}, beta3 {c.beta3!r}; {elapsed:.2f} s)")


def test_criterion_8_pendant_c4():
    inst = pendant_graph(cycle_graph(4), (3, 3, 3, 3))
    cert = inst.certificate
    record(8, {
        "feasible": inst.feasible,
        "certified 12": cert is not None and cert.certified and len(cert.set) == 12,
        "functional 12": cert is not None and close(cert.functional, 12.0, 1e-6),
        "exact alpha 12": exact_alpha(inst.graph).value == 12,
    })


def test_criterion_9_shannon_lower():
    start = time.perf_counter()
    c5 = cycle_graph(5)
    s = shannon_lower(c5, 2)
    elapsed = time.perf_counter() - start
    record(9, {
        "alpha(C5^2) = 5": s.alpha_by_power.get(2) == 5,
        "lower bound sqrt 5": close(s.value, math.sqrt(5), 1e-12),
        "matches beta1": close(s.value, ratio_bound(c5).value, 1e-6),
        "runtime < 10 s": elapsed < 10.0,
    }, f"({elapsed:.2f} s)")


def test_criterion_10_sandwich():
    graph_violations, graph_checks = [], 0
    for g in connected_graphs():
        alpha = exact_alpha(g).value
        reports, _ = all_graph_bounds(g)
        for r in reports:
            graph_checks += 1
            if alpha > r.value + 1e-6:
                graph_violations.append((g.edges, r.name))
    hyp_violations, hyp_checks = [], 0
    for h in itertools.chain(small_k4_hypergraphs(), few_edge_hypergraphs()):
        lam = exact_min_h_eigenvalue(h)
        if lam is None:
            continue
        for t in (1, 3):
            try:
                bound = odd_t_bound(h, t, lam).value
            except Refusal:
                continue
            hyp_checks += 1
            if exact_alpha_t(h, t).value > bound + 1e-6:
                hyp_violations.append((h.edges, t))
    record(10, {
        "graph bounds dominate alpha": not graph_violations,
        "hypergraph bounds dominate alpha_t": not hyp_violations,
        "hypergraph cases exercised": hyp_checks > 0,
    }, f"({graph_checks} graph checks, {hyp_checks} hypergraph checks)")
