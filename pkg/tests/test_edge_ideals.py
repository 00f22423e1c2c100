import itertools

import pytest

from binedge.algebra import (
    chain_of_cliques_order,
    conjecture_probe,
    depth_and_cm,
    edge_betti,
    ini_depth,
    complement_chordality_check,
    upper_bipartite_complement,
)
from binedge.graph import Graph, is_perfect_elimination_order, parse_graph


class TestDepth:
    def test_path(self):
        rep = depth_and_cm(Graph.path(4))
        assert (rep.depth, rep.dim, rep.cm) == (5, 5, True)

    def test_claw(self):
        rep = depth_and_cm(Graph.star(3))
        assert (rep.depth, rep.dim, rep.cm) == (5, 6, False)

    def test_unmixed_not_cm(self, unmixed_not_cm):
        rep = depth_and_cm(unmixed_not_cm)
        assert (rep.depth, rep.dim, rep.cm, rep.verified) == (5, 6, False, True)

    def test_inconclusive(self):
        table = edge_betti(Graph.complete(4), cap=3)
        rep = depth_and_cm(Graph.complete(4), table=table)
        assert rep.cm is None and rep.depth is None

    def test_initial_ideal_depth(self):
        assert ini_depth(Graph.path(3)) == 4


class TestComplementChordality:
    def test_n2_by_brute_force(self):
        g = upper_bipartite_complement(2)
        assert any(is_perfect_elimination_order(g, o) for o in itertools.permutations(g.vertices))
        assert complement_chordality_check(2)

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_small(self, n):
        assert complement_chordality_check(n)

    def test_construction(self):
        g = upper_bipartite_complement(2)
        # x1-y1, x1-y2 and x2-y2 are removed; x2-y1 survives
        assert g.has_edge(2, 3) and not g.has_edge(1, 3) and not g.has_edge(1, 4) and not g.has_edge(2, 4)
        assert g.has_edge(1, 2) and g.has_edge(3, 4)


class TestChains:
    def test_closed_graph_is_chain(self):
        assert chain_of_cliques_order(parse_graph("5; 1-2,1-3,2-3,3-4,3-5,4-5")) is not None

    def test_cycle_is_not(self):
        assert chain_of_cliques_order(Graph.cycle(4)) is None

    def test_claw_is_not(self):
        # three edges all meet at the centre: no unique branch
        assert chain_of_cliques_order(Graph.star(3)) is None

    def test_triangle_fan(self, triangle_fan):
        rep = conjecture_probe(triangle_fan, engine=False)
        assert rep.chain_of_cliques and not rep.closed
        assert rep.to_dict()["note"].startswith("evidence only")

    def test_probe_closed_cm(self):
        rep = conjecture_probe(Graph.path(4))
        assert rep.conclusive and rep.betti_equal and rep.extremal_equal


def test_probe_remark_for_non_closed_chain():
    rep = conjecture_probe(parse_graph("5; 1-2,1-3,1-4,1-5,2-3,2-4"))
    assert rep.chain_of_cliques and not rep.closed
    assert rep.betti_equal is False and rep.extremal_equal
    assert "degrees [3]" in rep.remark
