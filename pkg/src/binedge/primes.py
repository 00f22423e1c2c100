"""Minimal primes of binomial edge ideals, indexed by cut sets.

For ``S`` a subset of [n], let ``c(S)`` be the number of components of the graph
induced on ``[n] \\ S``.  The prime attached to ``S`` is minimal iff ``S`` is
empty or every ``i`` in ``S`` satisfies ``c(S - {i}) < c(S)``; its height is
``n + |S| - c(S)``.  The quotient by it has multiplicity equal to the product
of the component sizes (each component contributes a generic 2 x m
determinantal ring, which has degree m).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .graph import Graph, components_of_complement, count_components


@dataclass(frozen=True)
class CutSetRecord:
    s: tuple[int, ...]
    c: int
    height: int
    minimal: bool
    multiplicity: int

    def to_dict(self) -> dict:
        return {
            "S": list(self.s),
            "c": self.c,
            "height": self.height,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class PrimeDecomposition:
    n: int
    records: tuple[CutSetRecord, ...]
    krull_dim: int
    unmixed: bool

    @property
    def sets(self) -> list[tuple[int, ...]]:
        return [r.s for r in self.records]

    @property
    def multiplicity(self) -> int:
        """Associativity formula over the top-dimensional minimal primes.

        Binomial edge ideals are radical, so every localized length is 1.
        """
        top = 2 * self.n - self.krull_dim
        return sum(r.multiplicity for r in self.records if r.height == top)

    def to_dict(self) -> dict:
        return {
            "minimal_primes": [r.to_dict() for r in self.records],
            "dim": self.krull_dim,
            "unmixed": self.unmixed,
        }


def _record(g: Graph, s: tuple[int, ...], minimal: bool) -> CutSetRecord:
    comps = components_of_complement(g, s)
    c = len(comps)
    return CutSetRecord(
        s=s,
        c=c,
        height=g.n + len(s) - c,
        minimal=minimal,
        multiplicity=math.prod(len(k) for k in comps),
    )


def is_cut_set(g: Graph, s) -> bool:
    """Minimality criterion for the prime attached to ``s``."""
    s = set(s)
    if not s:
        return True
    c = count_components(g, s)
    return all(count_components(g, s - {i}) < c for i in s)


def _separating_candidates(g: Graph) -> list[int]:
    # a vertex whose neighbourhood is a clique can never join two components
    return [v for v in g.vertices if not g.is_clique(g.neighbors(v))]


def cut_sets(g: Graph) -> PrimeDecomposition:
    """All sets ``S`` whose prime is minimal, with heights and multiplicities."""
    pool = _separating_candidates(g)
    found = []
    for size in range(len(pool) + 1):
        for s in itertools.combinations(pool, size):
            if is_cut_set(g, s):
                found.append(_record(g, s, True))
    return _decomposition(g, found)


def cut_sets_bruteforce(g: Graph) -> PrimeDecomposition:
    """Same as :func:`cut_sets` but over all ``2**n`` subsets, no pruning."""
    found = []
    for size in range(g.n + 1):
        for s in itertools.combinations(g.vertices, size):
            if is_cut_set(g, s):
                found.append(_record(g, s, True))
    return _decomposition(g, found)


def _decomposition(g: Graph, found: list[CutSetRecord]) -> PrimeDecomposition:
    found.sort(key=lambda r: (len(r.s), r.s))
    heights = {r.height for r in found}
    return PrimeDecomposition(
        n=g.n,
        records=tuple(found),
        krull_dim=2 * g.n - min(heights),
        unmixed=len(heights) == 1,
    )


def krull_dim_bruteforce(g: Graph) -> int:
    """max over every subset S of (n - |S|) + c(S)."""
    return max(
        g.n - len(s) + count_components(g, s)
        for size in range(g.n + 1)
        for s in itertools.combinations(g.vertices, size)
    )


# -------------------------------------------------- closed CM structures


@dataclass(frozen=True)
class ClosedCMStructure:
    """Breakpoints ``1 = a_1 < ... < a_{r+1} = n``; facet i is ``[a_i, a_{i+1}]``."""

    n: int
    breakpoints: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.breakpoints)
        object.__setattr__(self, "breakpoints", a)
        if self.n == 1 and a == (1,):
            return
        if len(a) < 2 or a[0] != 1 or a[-1] != self.n:
            raise ValueError(f"breakpoints must run from 1 to n={self.n}: {a}")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError(f"breakpoints not strictly increasing: {a}")

    @classmethod
    def from_clique_sizes(cls, sizes) -> "ClosedCMStructure":
        a = [1]
        for k in sizes:
            if k < 2:
                raise ValueError("clique sizes must be at least 2")
            a.append(a[-1] + k - 1)
        return cls(a[-1], tuple(a))

    @property
    def r(self) -> int:
        return len(self.breakpoints) - 1

    @property
    def clique_sizes(self) -> list[int]:
        a = self.breakpoints
        return [a[i + 1] - a[i] + 1 for i in range(self.r)]

    @property
    def facets(self) -> list[list[int]]:
        a = self.breakpoints
        return [list(range(a[i], a[i + 1] + 1)) for i in range(self.r)]

    def graph(self) -> Graph:
        edges = set()
        for f in self.facets:
            edges.update(itertools.combinations(f, 2))
        return Graph.from_edges(self.n, edges)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "breakpoints": list(self.breakpoints),
            "clique_sizes": self.clique_sizes,
        }


def cm_closed_primes(st: ClosedCMStructure) -> list[tuple[tuple[int, ...], int]]:
    """Minimal primes of a Cohen-Macaulay closed graph from its breakpoints.

    Returns ``(S, e(S/P_S))`` pairs: S ranges over subsets of the interior
    breakpoints ``a_2..a_r`` in which consecutive chosen breakpoints differ by
    at least 2.
    """
    a = st.breakpoints
    n = st.n
    out = [((), n)]
    interior = a[1:-1]
    for size in range(1, len(interior) + 1):
        for chosen in itertools.combinations(interior, size):
            if any(y - x < 2 for x, y in zip(chosen, chosen[1:])):
                continue
            mult = chosen[0] - 1
            for x, y in zip(chosen, chosen[1:]):
                mult *= y - x - 1
            mult *= n - chosen[-1]
            out.append((chosen, mult))
    return out


def multiplicity_via_associativity(st: ClosedCMStructure) -> int:
    return sum(m for _, m in cm_closed_primes(st))
