"""Binomial edge ideals and engine-side checks built on the algebra kernel."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import (
    Graph,
    Labeling,
    clique_complex,
    find_closed_labeling,
    is_chordal,
    branches,
)
from ..primes import cut_sets
from .betti import BettiTable, _monomial_gb, betti_table
from .groebner import GroebnerBasis, buchberger
from .poly import DEFAULT_PRIME, Polynomial, Ring


def binomial_edge_ideal(g: Graph, lab: Labeling | None = None, p: int = DEFAULT_PRIME) -> list[Polynomial]:
    """Generators ``x_i y_j - x_j y_i`` (i < j after relabeling), one per edge."""
    ring = Ring.for_graph(g.n, p)
    h = g if lab is None else g.relabel(lab)
    n = g.n
    gens = []
    for i, j in h.sorted_edges():
        a = [0] * (2 * n)
        b = [0] * (2 * n)
        a[i - 1] = 1
        a[n + j - 1] = 1
        b[j - 1] = 1
        b[n + i - 1] = 1
        gens.append(Polynomial(ring, {tuple(a): 1, tuple(b): -1}))
    return gens


def edge_ideal_gb(g: Graph, lab: Labeling | None = None, p: int = DEFAULT_PRIME) -> GroebnerBasis:
    ring = Ring.for_graph(g.n, p)
    return buchberger(binomial_edge_ideal(g, lab, p), ring, source=f"J_G for {g.to_text()}")


def is_quadratic_gb(g: Graph, lab: Labeling | None = None, p: int = DEFAULT_PRIME) -> bool:
    return edge_ideal_gb(g, lab, p).is_quadratic()


def initial_ideal_gens(gb: GroebnerBasis) -> list[Polynomial]:
    return [Polynomial._raw(gb.ring, {m: 1}) for m in gb.leading_monomials]


def edge_betti(g: Graph, p: int = DEFAULT_PRIME, lab: Labeling | None = None, **kw) -> BettiTable:
    ring = Ring.for_graph(g.n, p)
    gens = binomial_edge_ideal(g, lab, p)
    gb = buchberger(gens, ring, source=f"J_G for {g.to_text()}")
    return betti_table(gens, ring=ring, gb=gb, **kw)


def initial_betti(g: Graph, p: int = DEFAULT_PRIME, lab: Labeling | None = None, **kw) -> BettiTable:
    ring = Ring.for_graph(g.n, p)
    gb = edge_ideal_gb(g, lab, p)
    mono = _monomial_gb(ring, gb.leading_monomials)
    return betti_table(initial_ideal_gens(gb), ring=ring, gb=mono, **kw)


@dataclass(frozen=True)
class DepthReport:
    depth: int | None
    dim: int
    cm: bool | None
    verified: bool

    def to_dict(self) -> dict:
        return {"depth": self.depth, "dim": self.dim, "cm": self.cm, "verified": self.verified}


def depth_and_cm(g: Graph, p: int = DEFAULT_PRIME, table: BettiTable | None = None) -> DepthReport:
    """Depth by Auslander-Buchsbaum, dimension from the cut sets.

    An unverified Betti table makes the result inconclusive (``cm=None``).
    """
    if table is None:
        table = edge_betti(g, p)
    dim = cut_sets(g).krull_dim
    if not table.verified:
        return DepthReport(None, dim, None, False)
    return DepthReport(table.depth, dim, table.depth == dim, True)


def ini_depth(g: Graph, p: int = DEFAULT_PRIME, table: BettiTable | None = None) -> int | None:
    if table is None:
        table = initial_betti(g, p)
    return table.depth if table.verified else None


def upper_bipartite_complement(n: int) -> Graph:
    """Complement of the bipartite graph x_i -- y_j (i <= j).

    Vertices 1..n stand for x_1..x_n and n+1..2n for y_1..y_n.
    """
    edges = []
    for a in range(1, 2 * n + 1):
        for b in range(a + 1, 2 * n + 1):
            if a <= n < b and a <= b - n:
                continue
            edges.append((a, b))
    return Graph.from_edges(2 * n, edges)


def complement_chordality_check(n: int) -> bool:
    return is_chordal(upper_bipartite_complement(n)) is not None


# ------------------------------------------------------------ chains of cliques


def chain_of_cliques_order(g: Graph) -> list[int] | None:
    """Leaf order in which each facet's unique branch is its predecessor.

    Returns facet indices into ``clique_complex(g).facets`` or None.
    """
    if is_chordal(g) is None:
        return None
    facets = list(clique_complex(g).facets)
    r = len(facets)
    if r <= 1:
        return list(range(r))

    def grow(order: list[int]) -> list[int] | None:
        if len(order) == r:
            return order
        for k in range(r):
            if k in order:
                continue
            seq = [facets[t] for t in order + [k]]
            if branches(seq, len(seq) - 1) == [len(seq) - 2]:
                res = grow(order + [k])
                if res is not None:
                    return res
        return None

    for start in range(r):
        res = grow([start])
        if res is not None:
            return res
    return None


@dataclass
class ConjectureProbe:
    graph: Graph
    chain_of_cliques: bool
    closed: bool
    betti_equal: bool | None
    extremal_equal: bool | None
    conclusive: bool
    ideal_table: BettiTable | None = None
    initial_table: BettiTable | None = None

    @property
    def remark(self) -> str | None:
        if self.betti_equal is False and self.initial_table is not None:
            high = sorted({j for (i, j) in self.initial_table.nonzero() if i == 0 and j > 2})
            if high:
                return f"in(J_G) has minimal generators in degrees {high}; J_G is generated by quadrics"
        return None

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "remark": self.remark,
            "chain_of_cliques": self.chain_of_cliques,
            "closed": self.closed,
            "betti_equal": self.betti_equal,
            "extremal_equal": self.extremal_equal,
            "conclusive": self.conclusive,
            "ideal_betti": None if self.ideal_table is None else self.ideal_table.to_dict(),
            "initial_betti": None if self.initial_table is None else self.initial_table.to_dict(),
            "note": "evidence only; nothing is asserted",
        }


def conjecture_probe(g: Graph, p: int = DEFAULT_PRIME, engine: bool = True) -> ConjectureProbe:
    """Record Betti-number evidence comparing J_G with its initial ideal."""
    chain = chain_of_cliques_order(g) is not None
    closed = find_closed_labeling(g) is not None
    if not engine:
        return ConjectureProbe(g, chain, closed, None, None, False)
    tj = edge_betti(g, p)
    ti = initial_betti(g, p)
    conclusive = tj.verified and ti.verified
    return ConjectureProbe(
        g,
        chain,
        closed,
        tj.same_numbers(ti) if conclusive else None,
        tj.extremal() == ti.extremal() if conclusive else None,
        conclusive,
        tj,
        ti,
    )
