import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from binedge.graph import (
    Graph,
    GraphFormatError,
    Labeling,
    clique_complex,
    closed_labeling_bruteforce,
    components_of_complement,
    connected_components,
    count_components,
    facets_by_minimum,
    find_closed_labeling,
    is_chordal,
    is_closed_wrt,
    is_forest,
    is_leaf_order,
    is_path_graph,
    is_perfect_elimination_order,
    leaf_order,
    maximal_cliques,
    parse_graph,
    restrict,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def brute_cliques(g):
    cl = [frozenset(s) for r in range(1, g.n + 1) for s in itertools.combinations(g.vertices, r) if g.is_clique(s)]
    return {c for c in cl if not any(c < d for d in cl)}


def brute_chordal(g):
    return any(is_perfect_elimination_order(g, o) for o in itertools.permutations(g.vertices))


class TestParse:
    def test_header_format(self, unmixed_not_cm):
        assert unmixed_not_cm.n == 5 and len(unmixed_not_cm.edges) == 7

    def test_line_format(self):
        g = parse_graph("n=4\n# a path\n1 2\n2-3\n3,4\n")
        assert g == Graph.path(4)

    def test_json_format(self):
        g = parse_graph(json.dumps({"n": 3, "edges": [[1, 2], [2, 3]]}))
        assert g == Graph.path(3)

    def test_isolated_vertices_kept(self):
        assert parse_graph("4; 1-2").n == 4

    @pytest.mark.parametrize("bad", ["3; 1-1", "3; 1-4", "0; ", "3; 1-x", "{\"n\": 2}"])
    def test_malformed(self, bad):
        with pytest.raises(GraphFormatError):
            parse_graph(bad)

    def test_roundtrip(self, unmixed_not_cm):
        assert parse_graph(unmixed_not_cm.to_text()) == unmixed_not_cm


def test_components_after_removal(unmixed_not_cm):
    assert count_components(unmixed_not_cm) == 1
    assert count_components(unmixed_not_cm, {2, 3}) == 3
    assert sorted(map(sorted, components_of_complement(unmixed_not_cm, {2, 3}))) == [[1], [4], [5]]
    h = restrict(unmixed_not_cm, {2, 3})
    assert h.n == 3 and not h.edges


@given(graphs())
def test_components_partition(g):
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(g.vertices)
    for a, b in itertools.combinations(comps, 2):
        assert not any(g.has_edge(u, w) for u in a for w in b)


def test_maximal_cliques_triangles_on_an_edge(unmixed_not_cm):
    assert sorted(map(sorted, maximal_cliques(unmixed_not_cm))) == [[1, 2, 3], [2, 3, 4], [2, 3, 5]]


@settings(max_examples=150, deadline=None)
@given(graphs(6))
def test_cliques_and_chordality_against_brute_force(g):
    assert set(maximal_cliques(g)) == brute_cliques(g)
    peo = is_chordal(g)
    assert (peo is not None) == brute_chordal(g)
    if peo is not None:
        assert is_perfect_elimination_order(g, peo.order)
        assert leaf_order(clique_complex(g)) is not None


def test_cycle_not_chordal():
    assert is_chordal(Graph.cycle(4)) is None
    assert leaf_order(clique_complex(Graph.cycle(5))) is None


def test_forest_and_path():
    assert is_forest(Graph.star(3)) and not is_path_graph(Graph.star(3))
    assert is_path_graph(Graph.path(5))
    assert not is_forest(Graph.cycle(3))


class TestClosed:
    def test_unmixed_not_cm_not_closed(self, unmixed_not_cm):
        assert find_closed_labeling(unmixed_not_cm) is None
        assert closed_labeling_bruteforce(unmixed_not_cm) is None

    def test_claw_not_closed(self):
        assert find_closed_labeling(Graph.star(3)) is None

    def test_path_closed_naturally(self):
        assert is_closed_wrt(Graph.path(4), Labeling.identity(4))

    def test_path_bad_labeling(self):
        assert not is_closed_wrt(Graph.path(3), Labeling((2, 1, 3)))

    def test_facets_are_intervals(self):
        g = parse_graph("5; 1-3,1-5,3-5,3-2,5-2,2-4")
        lab = find_closed_labeling(g)
        fs = facets_by_minimum(g, lab)
        assert all(f == list(range(f[0], f[-1] + 1)) for f in fs)
        facets = [frozenset(f) for f in fs]
        assert is_leaf_order(facets, list(range(len(facets))))

    @settings(max_examples=150, deadline=None)
    @given(graphs(6))
    def test_search_matches_brute_force(self, g):
        lab = find_closed_labeling(g)
        assert (lab is not None) == (closed_labeling_bruteforce(g) is not None)
        if lab is not None:
            assert is_closed_wrt(g, lab)


def test_labeling_validation():
    with pytest.raises(ValueError):
        Labeling((1, 1, 2))
    lab = Labeling.from_order([3, 1, 2])
    assert lab(3) == 1 and lab.order == [3, 1, 2]


def _nx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=200, deadline=None)
@given(graphs(8))
def test_against_networkx(g):
    import networkx as nx

    h = _nx(g)
    assert (is_chordal(g) is not None) == nx.is_chordal(h)
    assert set(maximal_cliques(g)) == {frozenset(c) for c in nx.find_cliques(h)}
    assert len(connected_components(g)) == nx.number_connected_components(h)
