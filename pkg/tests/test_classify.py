import math

import pytest

from binedge import classify as cls
from binedge.graph import Graph, parse_graph
from binedge.primes import ClosedCMStructure


class TestSpecialChordal:
    def test_unmixed_not_cm_outside(self, unmixed_not_cm):
        with pytest.raises(cls.OutsideClass):
            cls.classify_special_chordal(unmixed_not_cm)

    def test_claw(self):
        rep = cls.classify_special_chordal(Graph.star(3))
        assert rep.depth == 5 and rep.cm is False

    def test_triangle_with_pendant(self):
        rep = cls.classify_special_chordal(parse_graph("4; 1-2,1-3,2-3,3-4"))
        assert rep.cm and rep.depth == 5 and rep.unmixed


class TestForest:
    def test_path(self):
        rep = cls.classify_forest(Graph.path(4))
        assert rep.cm and rep.complete_intersection and rep.gorenstein
        assert rep.initial_ideal == ["x1*y2", "x2*y3", "x3*y4"]
        assert rep.hilbert_numerator == [1, 3, 3, 1]

    def test_two_paths(self):
        rep = cls.classify_forest(parse_graph("5; 1-2,3-4,4-5"))
        assert rep.depth == 7 and rep.cm

    def test_star_not_cm(self):
        rep = cls.classify_forest(Graph.star(3))
        assert not rep.cm and not rep.complete_intersection

    def test_cycle_outside(self):
        with pytest.raises(cls.OutsideClass):
            cls.classify_forest(Graph.cycle(3))


class TestClosed:
    def test_complete_graph(self):
        rep = cls.classify_closed(Graph.complete(4))
        assert rep.cm and rep.cm_type == 3 and not rep.gorenstein
        assert rep.multiplicity == 4 and rep.a_invariant == 1 - 4 - 1
        assert rep.hilbert_numerator == [1, 3]

    def test_path_gorenstein(self):
        rep = cls.classify_closed(Graph.path(5))
        assert rep.gorenstein and rep.cm_type == 1

    def test_closed_not_cm(self):
        # two triangles glued along an edge: closed, not unmixed
        rep = cls.classify_closed(parse_graph("4; 1-2,1-3,2-3,2-4,3-4"))
        assert rep.cm is False
        assert set(rep.conditions.values()) == {False}

    def test_relabeled_input(self):
        g = parse_graph("5; 5-3,3-1,1-4,4-2")
        rep = cls.classify_closed(g)
        assert rep.cm and rep.structure["clique_sizes"] == [2, 2, 2, 2]

    def test_claw_outside(self):
        with pytest.raises(cls.OutsideClass):
            cls.classify_closed(Graph.star(3))

    def test_invariants(self):
        st = ClosedCMStructure.from_clique_sizes([3, 2, 4])
        rep = cls.closed_cm_invariants(st)
        assert rep.multiplicity == 24 and rep.cm_type == 2 * 1 * 3
        assert rep.a_invariant == 3 - 7 - 1
        assert rep.hilbert_numerator == [1, 6, 11, 6]


def test_dispatch(unmixed_not_cm):
    assert cls.classify(Graph.path(3)).class_tag == "forest"
    assert cls.classify(Graph.complete(3)).class_tag == "closed"
    assert cls.classify(unmixed_not_cm).class_tag == "outside"
    assert cls.classify(Graph.cycle(4)).class_tag == "outside"


class TestIdentities:
    @pytest.mark.parametrize("b", [[1], [2, 3], [1, 1, 1], [4, 2, 1, 3]])
    def test_multiplicity(self, b):
        ok, lhs, rhs = cls.verify_multiplicity_identity(b)
        assert ok and lhs == math.prod(x + 1 for x in b)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            cls.verify_multiplicity_identity([0, 2])

    def test_power_r3(self):
        res = cls.verify_power_identity(3)
        assert (res.lhs, res.compositions_rhs, res.partitions_rhs) == (8, 8, 6)

    def test_power_r12(self):
        res = cls.verify_power_identity(12)
        assert res.holds and res.lhs == 4096

    def test_partitions_and_compositions(self):
        assert sorted(cls.compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
        assert sorted(cls.partitions(4, 2)) == [(2, 2), (3, 1)]
