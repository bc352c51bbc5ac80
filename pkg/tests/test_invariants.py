import random
from fractions import Fraction

import pytest

from graphlaplace.graphs import (
    DirectedGraph,
    GuardError,
    UndirectedGraph,
    enumerate_directed,
    enumerate_undirected,
    strip_loops,
    subgraphs,
    unrank,
)
from graphlaplace.invariants import (
    bernardi,
    bernardi_eval,
    chi_geq,
    chi_gt,
    coloring_stats,
    full_chromatic,
    potts,
    potts_sokal,
)
from graphlaplace.poly import MultiPoly, eval_at, partial_eval, scale, shift_yz, swap_yz, truncate_top

from oracles import brute_bernardi, brute_full_chromatic, coloring_counts

V3 = ("q", "y", "z")
q, y, z = (MultiPoly.var(V3, s) for s in V3)
Q, V = MultiPoly.var(("q", "v"), "q"), MultiPoly.var(("q", "v"), "v")
qq = MultiPoly.var(("q",), "q")
half = Fraction(1, 2)


def D(n, *edges):
    return DirectedGraph(n, edges)


def U(n, *edges):
    return UndirectedGraph(n, edges)


class TestColoringCounts:
    @pytest.mark.parametrize("n,k", [(2, 2), (3, 2)])
    @pytest.mark.parametrize("qv", [1, 2, 3])
    def test_odometer_matches_brute_force(self, n, k, qv):
        for g in enumerate_directed(n, k):
            assert coloring_stats(g, qv).counts == dict(coloring_counts(n, g.edges, qv))
        for g in enumerate_undirected(n, k):
            assert coloring_stats(g, qv).counts == dict(coloring_counts(n, g.edges, qv, directed=False))

    def test_total_is_q_to_n(self):
        s = coloring_stats(D(3, (1, 2), (3, 3)), 4)
        assert s.total == 64
        assert all(i + j <= 2 for i, j in s.counts)


class TestBernardi:
    def test_single_edge_eval(self):
        Y, Z = MultiPoly.var(("y", "z"), "y"), MultiPoly.var(("y", "z"), "z")
        assert bernardi_eval(D(2, (1, 2)), 2) == 2 + Y + Z

    def test_loop_and_edgeless_eval(self):
        for qv in (1, 2, 5):
            assert bernardi_eval(D(1, (1, 1)), qv) == MultiPoly.constant(("y", "z"), qv)
        assert bernardi_eval(DirectedGraph(2), 3) == MultiPoly.constant(("y", "z"), 9)

    def test_single_edge(self):
        expected = brute_bernardi(2, [(1, 2)])
        assert expected == q + scale(q * q - q, half) * (y + z)
        assert bernardi(D(2, (1, 2))) == expected

    def test_only_loops(self):
        assert bernardi(D(2, (1, 1), (2, 2))) == q * q

    @pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (2, 3)])
    def test_against_sympy_oracle(self, n, k):
        for g in enumerate_directed(n, k):
            assert bernardi(g) == brute_bernardi(n, g.edges)

    def test_reversal_swaps_y_z(self):
        assert bernardi(D(2, (2, 1))) == swap_yz(bernardi(D(2, (1, 2))))
        for g in enumerate_directed(3, 2):
            assert bernardi(g.reverse()) == swap_yz(bernardi(g))

    def test_loop_invariance(self):
        for n in (2, 3):
            for g in enumerate_directed(n, 2):
                assert bernardi(g) == bernardi(strip_loops(g)[0])

    def test_truncation_vanishes_iff_loop(self):
        for g in enumerate_directed(3, 2):
            assert truncate_top(bernardi(g), 2).is_zero() == g.has_loop()

    def test_interpolation_witness_random(self):
        rng = random.Random(1234)
        for _ in range(200):
            n, k = rng.randint(1, 4), rng.randint(0, 4)
            g = unrank(rng.randrange((n * n) ** k), n, k)
            assert partial_eval(bernardi(g), "q", 7) == bernardi_eval(g, 7)

    def test_guard(self):
        with pytest.raises(GuardError):
            bernardi(DirectedGraph(6), max_steps=1000)

    def test_coupling_identity(self):
        # sum over spanning subgraphs of the shifted top truncation rebuilds B_G
        for g in enumerate_directed(3, 2):
            if g.has_loop():
                continue
            total = MultiPoly.zero(V3)
            for mask, h in subgraphs(g):
                total = total + shift_yz(truncate_top(bernardi(h), h.k))
            assert total == bernardi(g)

    def test_subgraphs_keep_vertices(self):
        # the empty subgraph of [1,2] on 3 vertices contributes q^3, not q^2
        g = D(3, (1, 2))
        assert bernardi(dict(subgraphs(g))[0]) == q**3


class TestChromatic:
    def test_single_edge(self):
        C = full_chromatic(U(2, (1, 2)))
        assert C == brute_full_chromatic(2, [(1, 2)])
        assert C == MultiPoly(("q", "y"), {(1, 0): 1, (2, 1): 1, (1, 1): -1})

    def test_loops_only(self):
        assert full_chromatic(U(3, (2, 2), (1, 1))) == MultiPoly(("q", "y"), {(3, 0): 1})

    def test_y_one_gives_all_colorings(self):
        for g in enumerate_undirected(3, 2):
            assert partial_eval(full_chromatic(g), "y", 1) == qq**3

    def test_against_oracle(self):
        for g in enumerate_undirected(3, 2):
            assert full_chromatic(g) == brute_full_chromatic(3, g.edges)


class TestPotts:
    def test_examples(self):
        assert potts(U(2, (1, 2))) == Q * Q + Q * V
        assert potts(UndirectedGraph(3)) == Q**3
        assert potts(U(1, (1, 1))) == Q * (V + 1)

    def test_sokal_examples(self):
        assert potts_sokal(U(2, (1, 2))) == Q * Q + Q * V
        assert potts_sokal(UndirectedGraph(2)) == Q * Q
        assert potts_sokal(U(2, (1, 2), (1, 2))) == Q * Q + 2 * Q * V + Q * V * V

    def test_loop_relation(self):
        for g in enumerate_undirected(3, 2):
            stripped, loops = strip_loops(g)
            assert potts(g) == (V + 1) ** loops * potts(stripped)

    def test_oracle_equivalence(self):
        for g in enumerate_undirected(3, 2):
            assert potts(g) == potts_sokal(g)
        rng = random.Random(99)
        for _ in range(100):
            g = unrank(rng.randrange(10**3), 4, 3, oriented=False)
            assert potts(g) == potts_sokal(g)


class TestChi:
    def test_single_edge(self):
        g = D(2, (1, 2))
        assert chi_geq(g) == qq + scale(qq * qq - qq, half)
        assert chi_gt(g) == scale(qq * qq - qq, half)

    def test_two_cycle(self):
        assert chi_geq(D(2, (1, 2), (2, 1))) == qq

    def test_loop_kills_strict(self):
        assert chi_gt(D(2, (1, 2), (2, 2))).is_zero()

    def test_strict_chain(self):
        # strictly decreasing maps along 1 -> 2 -> 3: choose 3 distinct colors
        chi = chi_gt(D(3, (1, 2), (2, 3)))
        assert chi == scale(qq * (qq - 1) * (qq - 2), Fraction(1, 6))
        assert eval_at(chi, q=-1) == -1

    def test_counting_meaning(self):
        # chi_geq(q) counts f with f(a) >= f(b) on every edge [a, b]
        import itertools
        for g in enumerate_directed(3, 2):
            for qv in (1, 2, 3, 4):
                weak = sum(all(f[a - 1] >= f[b - 1] for a, b in g.edges)
                           for f in itertools.product(range(qv), repeat=3))
                strict = sum(all(f[a - 1] > f[b - 1] for a, b in g.edges)
                             for f in itertools.product(range(qv), repeat=3))
                assert eval_at(chi_geq(g), q=qv) == weak
                assert eval_at(chi_gt(g), q=qv) == strict

    def test_wrong_orientation(self):
        with pytest.raises(TypeError):
            bernardi(U(2, (1, 2)))
