from __future__ import annotations

import math
import random

import pytest

from c4free.canon import canonical_form
from c4free.graph import Graph, GraphError, make_snk, make_star
from c4free.search import (
    claim1_check,
    claim2_check,
    claim3_check,
    hill_climb,
    lemma1_test,
    propose_moves,
    random_c4free_graph,
)
from c4free.spectral import snk_mu, spectral_radius
from conftest import random_connected_graph


def _claim1_instance(n_star: int) -> Graph:
    """S_{n_star,1} with a 2-edge pendant path hung off a plain leaf; the
    path edge joins two degree-2 vertices."""
    g = make_snk(n_star, 1)
    g = Graph(n_star + 2, g.rows + (0, 0))
    return g.add_edge(3, n_star).add_edge(n_star, n_star + 1)


def _claim2_instance() -> Graph:
    # K_{1,15} with a chain leaf-u-v-w-leaf' and a pendant at v: degrees
    # along u-v-w are (2, 3, 2), m = 20, C4-free, connected
    h = make_star(16)
    h = Graph(20, h.rows + (0,) * 4)
    return (
        h.add_edge(1, 16)
        .add_edge(16, 17)
        .add_edge(17, 18)
        .add_edge(18, 2)
        .add_edge(17, 19)
    )


class TestLemma1:
    def test_leaf_relocation(self):
        # move a leaf from a light vertex to the heaviest one
        g = make_snk(8, 1)
        g = Graph(9, g.rows + (0,))
        g = g.add_edge(3, 8)  # pendant at a plain leaf
        x = spectral_radius(g).vec
        assert x[0] == max(x)
        g_prime = g.remove_edge(3, 8).add_edge(0, 8)
        assert lemma1_test(g, g_prime, 0)
        assert spectral_radius(g_prime).mu > spectral_radius(g).mu + 1e-10

    def test_identity_rejected(self):
        g = make_star(5)
        with pytest.raises(GraphError):
            lemma1_test(g, g, 0)

    def test_shrinking_neighborhood_rejected(self):
        g = make_star(5)
        with pytest.raises(GraphError):
            lemma1_test(g, g.remove_edge(0, 1), 0)

    def test_positive_implies_strict_increase(self, rng):
        checked = 0
        while checked < 500:
            g = random_connected_graph(rng, rng.randint(3, 9), extra=rng.randint(0, 3))
            u = rng.randrange(g.n)
            absent = [v for v in range(g.n) if v != u and not g.has_edge(u, v)]
            if not absent:
                continue
            g_prime = g.add_edge(u, rng.choice(absent))
            # removing some other edge keeps it a genuine rewire half the time
            if rng.random() < 0.5:
                others = [
                    e for e in g_prime.edges() if u not in e
                ]
                if others:
                    g_prime = g_prime.remove_edge(*rng.choice(others))
            if lemma1_test(g, g_prime, u):
                assert (
                    spectral_radius(g_prime).mu > spectral_radius(g).mu + 1e-10
                )
            checked += 1


class TestProposeMoves:
    def test_star_has_no_beneficial_move(self):
        g = make_star(13)  # m = 12, the global maximum
        x = spectral_radius(g).vec
        moves = propose_moves(g, x)
        mu = spectral_radius(g).mu
        for mv in moves[:40]:
            assert spectral_radius(mv.apply(g)).mu <= mu + 1e-12

    def test_p5_improves(self):
        p5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        x = spectral_radius(p5).vec
        moves = propose_moves(p5, x)
        assert moves
        mu = spectral_radius(p5).mu
        assert any(spectral_radius(mv.apply(p5)).mu > mu + 1e-10 for mv in moves)

    def test_paw_is_local_maximum(self):
        # triangle + pendant edge is S_{4,1}, the m = 4 optimum: no rewire
        # improves it
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        mu = spectral_radius(g).mu
        x = spectral_radius(g).vec
        for mv in propose_moves(g, x):
            assert spectral_radius(mv.apply(g)).mu <= mu + 1e-12

    def test_triangle_plus_disjoint_edge_improves(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
        x = spectral_radius(g).vec
        moves = propose_moves(g, x)
        mu = spectral_radius(g).mu
        assert any(spectral_radius(mv.apply(g)).mu > mu + 1e-10 for mv in moves)

    def test_moves_preserve_edge_count_and_c4freeness(self, rng):
        for _ in range(20):
            g = random_c4free_graph(8, rng)
            x = spectral_radius(g).vec
            for mv in propose_moves(g, x)[:30]:
                h = mv.apply(g)
                assert h.m == g.m
                assert not h.has_c4()


class TestRandomStart:
    def test_edge_count_and_c4free(self, rng):
        for m in (1, 4, 9, 13):
            g = random_c4free_graph(m, rng)
            assert g.m == m
            assert not g.has_c4()
            assert g.n == m + 1


class TestHillClimb:
    def test_m12_reaches_star(self):
        st = hill_climb(12, restarts=4, seed=11)
        assert st.mu == pytest.approx(math.sqrt(12), abs=1e-9)

    def test_m5_reaches_s51(self):
        st = hill_climb(5, restarts=4, seed=5)
        assert st.mu == pytest.approx(snk_mu(5, 1), abs=1e-9)
        assert canonical_form(st.current.strip_isolated()) == canonical_form(
            make_snk(5, 1)
        )

    def test_m9_reaches_three(self):
        st = hill_climb(9, restarts=4, seed=9)
        assert st.mu == pytest.approx(3.0, abs=1e-9)

    def test_deterministic(self):
        a = hill_climb(7, restarts=2, seed=3)
        b = hill_climb(7, restarts=2, seed=3)
        assert a.mu == b.mu and a.moves == b.moves

    def test_move_log_strictly_increasing(self):
        st = hill_climb(10, restarts=3, seed=1)
        for mv in st.moves:
            assert mv["mu_after"] > mv["mu_before"] + 1e-12


class TestClaims:
    def test_claim1_on_pendant_path(self):
        g = _claim1_instance(12)
        assert g.m == 14
        assert claim1_check(g, 3, 12)

    def test_claim1_stronger_regime(self):
        # mu >= 2 + sqrt(3) here, the regime the weight bound relies on
        g = _claim1_instance(20)
        assert g.m == 22
        assert claim1_check(g, 3, 20)
        assert claim1_check(g, 1, 2)  # the matched leaf pair

    def test_claim1_precondition_errors(self):
        g = _claim1_instance(12)
        with pytest.raises(GraphError):
            claim1_check(g, 0, 1)  # hub degree != 2
        with pytest.raises(GraphError):
            claim1_check(make_snk(6, 1), 1, 2)  # m < 14

    def test_claim2(self):
        g = _claim2_instance()
        assert g.m == 20
        assert claim2_check(g, 16, 17, 18)

    def test_claim2_preconditions(self):
        g = _claim2_instance()
        with pytest.raises(GraphError):
            claim2_check(g, 16, 17, 19)  # w has degree 1

    def test_claim3_zero_weight_edge(self):
        # K_2 + K_3: the Perron vector sits on the triangle, the K_2 edge
        # has zero weight, and deleting it keeps mu = 2
        g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
        assert claim3_check(g, 0, 1)
        assert spectral_radius(g.remove_edge(0, 1)).mu == pytest.approx(2.0, abs=1e-10)

    def test_claim3_hypothesis_rejected(self):
        # K_2 alone: x_u x_v = 1/2 > 1/(4 mu) = 1/4
        with pytest.raises(GraphError):
            claim3_check(Graph.from_edges(2, [(0, 1)]), 0, 1)

    def test_claim3_random_instances(self, rng):
        checked = 0
        while checked < 200:
            g = random_c4free_graph(rng.randint(3, 12), rng)
            r = spectral_radius(g)
            edges = list(g.edges())
            u, v = edges[rng.randrange(len(edges))]
            if float(r.vec[u] * r.vec[v]) > 1.0 / (4.0 * r.mu):
                continue
            assert claim3_check(g, u, v)
            checked += 1
