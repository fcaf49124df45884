"""
End-to-end acceptance suite. Each test covers one numbered criterion,
collects every sub-check before judging, and reports a single pass/fail
line in the terminal summary. Tolerances are pinned in each test body.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from c4free import graph6
from c4free.canon import canonical_form
from c4free.enumeration import enumerate_c4free_by_edges, enumerate_c4free_by_order
from c4free.graph import Graph, make_friendship, make_snk, make_star
from c4free.search import claim3_check, hill_climb, lemma1_test, random_c4free_graph
from c4free.spectral import (
    max_entry_ok,
    snk_bound_identity,
    snk_mu,
    spectral_radius,
    to_numpy,
)
from c4free.verify import (
    srg_table_check,
    verify_conjecture,
    verify_in3,
    verify_small_m,
    verify_theorem1,
)
from conftest import ACCEPTANCE_LINES, random_connected_graph
from test_enumeration import oracle_count_by_edges, oracle_count_by_order

WORKERS = 8


def _verdict(num: int, label: str, failures: list[str]) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {num} ({label}): {status}"
    if failures:
        line += " [" + "; ".join(failures) + "]"
    ACCEPTANCE_LINES.append(line)
    assert not failures, line


def _check(cond: bool, msg: str, failures: list[str]) -> None:
    if not cond:
        failures.append(msg)


def _grid():
    for n in range(2, 61):
        for k in range(0, (n - 1) // 2 + 1):
            yield n, k


def test_criterion_1_exhaustive_bound_m9_to_m11():
    failures: list[str] = []
    expected = {
        9: {canonical_form(make_star(10)), canonical_form(make_snk(9, 1))},
        10: {canonical_form(make_star(11))},
        11: {canonical_form(make_star(12))},
    }
    for m in (9, 10, 11):
        s = verify_theorem1(m, workers=WORKERS)
        _check(not s.violations, f"m={m}: bound violated", failures)
        _check(
            abs(s.max_mu - math.sqrt(m)) <= 1e-9,
            f"m={m}: max mu {s.max_mu!r} != sqrt({m})",
            failures,
        )
        forms = {
            canonical_form(graph6.decode(r.graph_id).strip_isolated())
            for r in s.equalities
        }
        _check(
            forms == expected[m],
            f"m={m}: {len(forms)} equality classes, expected {len(expected[m])}",
            failures,
        )
    _verdict(1, "exhaustive max mu = sqrt(m) for m = 9..11", failures)


def test_criterion_2_small_m_witnesses():
    failures: list[str] = []
    for m in range(4, 9):
        s = verify_small_m(m)
        target = canonical_form(make_snk(m, 1))
        hits = [
            r
            for r in s.equalities
            if canonical_form(graph6.decode(r.graph_id)) == target
        ]
        _check(bool(hits), f"m={m}: S_{{{m},1}} missing from witness set", failures)
        if hits:
            _check(
                abs(hits[0].mu - snk_mu(m, 1)) <= 1e-9,
                f"m={m}: witness mu off closed form",
                failures,
            )
        _check(s.max_mu > math.sqrt(m), f"m={m}: no mu above sqrt(m)", failures)
    _check(not verify_small_m(9).equalities, "m=9: witness set not empty", failures)
    _verdict(2, "mu > sqrt(m) witnesses for m = 4..8, none at 9", failures)


def test_criterion_3_cubic_oracle_grid():
    failures: list[str] = []
    start = time.perf_counter()
    worst = 0.0
    for n, k in _grid():
        mu = snk_mu(n, k)
        oracle = float(np.max(np.linalg.eigvalsh(to_numpy(make_snk(n, k)))))
        worst = max(worst, abs(mu - oracle))
    elapsed = time.perf_counter() - start
    _check(worst <= 1e-8, f"worst cubic/eigensolver gap {worst:.2e}", failures)
    _check(elapsed < 30.0, f"grid took {elapsed:.1f}s", failures)
    _verdict(3, "closed-form mu vs eigensolver on n <= 60 grid", failures)


def test_criterion_4_snk_boundary_and_identity():
    failures: list[str] = []
    for n, k in _grid():
        m = n - 1 + k
        if m >= 9 and snk_mu(n, k) > math.sqrt(m) + 1e-9:
            failures.append(f"S_{{{n},{k}}} above sqrt({m})")
        lhs, rhs = snk_bound_identity(n, k)
        if abs(lhs - rhs) > 1e-9:
            failures.append(f"identity gap {abs(lhs - rhs):.2e} at ({n},{k})")
    _verdict(4, "S_nk stays below sqrt(m) for m >= 9 plus cubic identity", failures)


def test_criterion_5_quadratic_bound_and_friendship():
    failures: list[str] = []
    for n in range(3, 9):
        s = verify_in3(n)
        _check(not s.violations, f"n={n}: mu^2 - mu bound violated", failures)
        if n % 2 == 1:
            forms = {
                canonical_form(graph6.decode(r.graph_id)) for r in s.equalities
            }
            _check(
                forms == {canonical_form(make_friendship((n - 1) // 2))},
                f"n={n}: equality set is not exactly F_{(n - 1) // 2}",
                failures,
            )
        else:
            _check(not s.equalities, f"n={n}: unexpected equality", failures)
    for k in range(1, 26):
        mu = spectral_radius(make_friendship(k)).mu
        if abs(mu * mu - mu - 2 * k) > 1e-8:
            failures.append(f"F_{k} identity gap")
    _verdict(5, "mu^2 - mu <= n - 1 with friendship equality", failures)


def test_criterion_6_cubic_conjecture_even_n():
    failures: list[str] = []
    for n in (4, 6, 8):
        s = verify_conjecture(n)
        _check(not s.violations, f"n={n}: cubic bound violated", failures)
        forms = {canonical_form(graph6.decode(r.graph_id)) for r in s.equalities}
        _check(
            forms == {canonical_form(make_snk(n, n // 2 - 1))},
            f"n={n}: equality set is not exactly S_{{{n},{n // 2 - 1}}}",
            failures,
        )
    _verdict(6, "cubic bound holds exhaustively for n = 4, 6, 8", failures)


def test_criterion_7_srg_table():
    failures: list[str] = []
    rows = srg_table_check()
    _check(len(rows) == 5, f"{len(rows)} rows, expected 5", failures)
    for row in rows:
        _check(row["ok"], f"row k={row['k']} fails mu^2 - mu = k(n-1)", failures)
    _verdict(7, "strongly regular parameter table, exact integers", failures)


def test_criterion_8_property_suites():
    failures: list[str] = []
    rng = random.Random(8)

    bad_entry = 0
    for _ in range(1000):
        g = random_connected_graph(rng, rng.randint(2, 30), extra=rng.randint(0, 5))
        if not max_entry_ok(spectral_radius(g)):
            bad_entry += 1
    _check(bad_entry == 0, f"{bad_entry} max-entry failures", failures)

    positives = bad_lemma = checked = 0
    while checked < 500:
        g = random_connected_graph(rng, rng.randint(3, 9), extra=rng.randint(0, 3))
        u = rng.randrange(g.n)
        absent = [v for v in range(g.n) if v != u and not g.has_edge(u, v)]
        if not absent:
            continue
        g_prime = g.add_edge(u, rng.choice(absent))
        if lemma1_test(g, g_prime, u):
            positives += 1
            if spectral_radius(g_prime).mu <= spectral_radius(g).mu + 1e-10:
                bad_lemma += 1
        checked += 1
    _check(positives > 0, "no positive containment instances seen", failures)
    _check(bad_lemma == 0, f"{bad_lemma} non-strict increases", failures)

    bad_claim = checked = 0
    while checked < 200:
        g = random_c4free_graph(rng.randint(3, 12), rng)
        r = spectral_radius(g)
        edges = list(g.edges())
        u, v = edges[rng.randrange(len(edges))]
        if float(r.vec[u] * r.vec[v]) > 1.0 / (4.0 * r.mu):
            continue
        if not claim3_check(g, u, v):
            bad_claim += 1
        checked += 1
    _check(bad_claim == 0, f"{bad_claim} light-edge deletion failures", failures)

    for m in range(1, 7):
        got = len(list(enumerate_c4free_by_edges(m)))
        _check(
            got == oracle_count_by_edges(m),
            f"by-edges m={m}: {got} != oracle",
            failures,
        )
    for n in range(1, 7):
        got = len(list(enumerate_c4free_by_order(n)))
        _check(
            got == oracle_count_by_order(n),
            f"by-order n={n}: {got} != oracle",
            failures,
        )
    _verdict(8, "randomized property suites and oracle counts", failures)


def _seed_mu(args: tuple[int, int]) -> float:
    m, seed = args
    return hill_climb(m, restarts=1, seed=seed).mu


def test_criterion_9_search_consistency():
    failures: list[str] = []
    jobs = [(m, seed) for m in range(9, 17) for seed in range(20)]
    with ProcessPoolExecutor(max_workers=WORKERS) as pool:
        mus = list(pool.map(_seed_mu, jobs))
    for m in range(9, 17):
        per_m = [mu for (mm, _), mu in zip(jobs, mus) if mm == m]
        over = [mu for mu in per_m if mu > math.sqrt(m) + 1e-9]
        _check(not over, f"m={m}: {len(over)} seeds exceed sqrt(m)", failures)
        _check(
            any(abs(mu - math.sqrt(m)) <= 1e-9 for mu in per_m),
            f"m={m}: no seed reaches sqrt(m)",
            failures,
        )
    _verdict(9, "hill climb over 20 seeds per m = 9..16", failures)
