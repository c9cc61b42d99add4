import random

import networkx as nx
import pytest

from ramsey_descent import colouring as col
from ramsey_descent.bfs import OddCycleCertificate
from ramsey_descent.errors import BudgetExceeded
from ramsey_descent.graph import Graph, dumps_graph, loads_graph
from ramsey_descent.oracle import (efrs_check, enumerate_colourings, find_mono_odd_cycle,
                                   has_cycle_of_length, verify_certificate)
from tests.oracles import shortest_mono_odd_naive
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


class TestVerifyCertificate:
    def test_triangle(self):
        assert verify_certificate(col.new_complete(3, 1), OddCycleCertificate(1, (0, 1, 2)))

    def test_repeat(self):
        assert not verify_certificate(col.new_complete(3, 1), OddCycleCertificate(1, (0, 1, 1)))

    def test_two_colours(self):
        ec = col.new_complete(5, 1)
        ec.set_colour(3, 4, 2)
        assert not verify_certificate(ec, OddCycleCertificate(1, (0, 1, 2, 3, 4)))

    def test_even_and_short(self):
        ec = col.new_complete(4, 1)
        assert not verify_certificate(ec, OddCycleCertificate(1, (0, 1, 2, 3)))
        assert not verify_certificate(ec, OddCycleCertificate(1, (0, 1)))
        assert not verify_certificate(ec, OddCycleCertificate(1, (0, 1, 7)))


class TestFindMonoOddCycle:
    def test_doubling(self):
        assert find_mono_odd_cycle(col.generate_doubling(1, 2), 3) is None

    def test_mono_k3(self):
        cert = find_mono_odd_cycle(col.new_complete(3, 1), 3)
        assert cert.length == 3

    def test_shortest_against_naive(self):
        rng = random.Random(5)
        for _ in range(150):
            n = rng.randint(3, 8)
            ec = col.generate_random(n, rng.randint(2, 4), rng.randrange(10**6))
            got = find_mono_odd_cycle(ec, 9)
            expect = shortest_mono_odd_naive(ec, min(9, n if n % 2 else n - 1))
            assert (got.length if got else None) == expect
            if got:
                assert verify_certificate(ec, got)

    def test_two_pentagons(self):
        # the triangle-free 2-colouring of K_5: shortest monochromatic odd cycle is 5
        ec = col.new_complete(5, 2)
        for i in range(5):
            ec.set_colour(i, (i + 1) % 5, 1)
        assert find_mono_odd_cycle(ec, 3) is None
        got = find_mono_odd_cycle(ec, 5)
        assert got.length == 5 and verify_certificate(ec, got)
        assert shortest_mono_odd_naive(ec, 5) == 5

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            find_mono_odd_cycle(col.new_complete(20, 1), 3, max_vertices=14)

    def test_k6_sweep_sample(self):
        for i, ec in enumerate(enumerate_colourings(6, 2)):
            if i % 997 == 0:
                assert find_mono_odd_cycle(ec, 3) is not None


class TestHasCycle:
    def test_c5(self):
        cyc = has_cycle_of_length(Graph.cycle(5), 5)
        assert sorted(cyc) == [0, 1, 2, 3, 4]
        assert has_cycle_of_length(Graph.cycle(5), 3) is None

    def test_petersen(self):
        g = loads_graph((FIXTURES / "petersen.graph").read_text())
        assert nx.is_isomorphic(nx.Graph(g.edges()), nx.petersen_graph())
        cyc = has_cycle_of_length(g, 5)
        assert len(cyc) == 5 and all(g.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))
        assert has_cycle_of_length(g, 3) is None and has_cycle_of_length(g, 4) is None

    def test_against_networkx(self):
        rng = random.Random(2)
        for _ in range(60):
            n = rng.randint(3, 8)
            h = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1000))
            g = Graph(h.nodes, h.edges)
            lengths = {len(c) for c in nx.simple_cycles(h.to_directed()) if len(c) >= 3}
            for L in range(3, n + 1):
                assert (has_cycle_of_length(g, L) is not None) == (L in lengths)


class TestEfrs:
    def test_bipartite(self):
        g = Graph.cycle(8)
        for l in (1, 2, 3):
            assert efrs_check(g, l)

    def test_petersen_rejected(self):
        g = loads_graph((FIXTURES / "petersen.graph").read_text())
        with pytest.raises(ValueError):
            efrs_check(g, 2)

    def test_c7_free_samples(self):
        rng = random.Random(7)
        accepted = 0
        while accepted < 40:
            h = nx.gnp_random_graph(rng.randint(4, 10), rng.uniform(0.1, 0.4), seed=rng.randrange(10**6))
            g = Graph(h.nodes, h.edges)
            if has_cycle_of_length(g, 7) is not None:
                continue
            assert efrs_check(g, 3)
            accepted += 1

    def test_counterexample_report_shape(self):
        # C_5 is not C_3-free-violating for l = 1 (no triangle): layers independent
        assert efrs_check(Graph.cycle(5), 1)


def test_graph_file_round_trip():
    g = Graph.cycle(6)
    assert loads_graph(dumps_graph(g)).edges() == g.edges()


def test_enumerate_count():
    assert sum(1 for _ in enumerate_colourings(4, 2)) == 64
