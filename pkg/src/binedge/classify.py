"""Theorem-level classification of binomial edge ideals.

Three graph classes have closed-form answers:

* chordal graphs whose maximal cliques pairwise meet in at most one vertex
  (depth n + c; unmixed, CM and "every vertex in at most two maximal
  cliques" coincide),
* forests (CM iff complete intersection iff every component is a path),
* closed graphs (CM iff the facets form a chain of intervals glued at single
  vertices; then Hilbert series, multiplicity, a-invariant and CM type are
  explicit in the clique sizes).

Everything here is combinatorial; the engine in :mod:`binedge.algebra` is
only used by callers that want an independent check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field

from .graph import (
    Graph,
    Labeling,
    connected_components,
    find_closed_labeling,
    induced,
    is_chordal,
    is_forest,
    is_path_graph,
    maximal_cliques,
)
from .primes import ClosedCMStructure, cut_sets, cm_closed_primes, multiplicity_via_associativity

__all__ = [
    "ClassificationReport",
    "ClosedCMStructure",
    "OutsideClass",
    "classify",
    "classify_closed",
    "classify_forest",
    "classify_special_chordal",
    "closed_cm_invariants",
    "cm_closed_primes",
    "condition_d",
    "extract_structure",
    "multiplicity_via_associativity",
    "verify_multiplicity_identity",
    "verify_power_identity",
]


class OutsideClass(ValueError):
    """The graph does not satisfy the hypotheses of the requested classifier."""


@dataclass
class ClassificationReport:
    class_tag: str
    n: int
    components: int
    dim: int
    depth: int | None = None
    depth_source: str = "theorem"
    unmixed: bool | None = None
    cm: bool | None = None
    complete_intersection: bool | None = None
    gorenstein: bool | None = None
    hilbert_numerator: list[int] | None = None
    multiplicity: int | None = None
    a_invariant: int | None = None
    cm_type: int | None = None
    conditions: dict[str, bool] = field(default_factory=dict)
    structure: dict | None = None
    labeling: list[int] | None = None
    initial_ideal: list[str] | None = None
    explain: list[str] = field(default_factory=list)

    def to_dict(self, explain: bool = False) -> dict:
        d = asdict(self)
        if not explain:
            d.pop("explain")
        return {k: v for k, v in d.items() if v is not None and v != {}}

    def check_invariants(self) -> None:
        if self.cm and self.unmixed is False:
            raise AssertionError("Cohen-Macaulay but mixed")
        if self.gorenstein and not self.cm:
            raise AssertionError("Gorenstein but not Cohen-Macaulay")


# ------------------------------------------------------------ special chordal


def in_special_chordal_class(g: Graph) -> bool:
    if is_chordal(g) is None:
        return False
    facets = maximal_cliques(g)
    return all(len(a & b) <= 1 for a, b in itertools.combinations(facets, 2))


def cliques_per_vertex(g: Graph) -> dict[int, int]:
    counts = {v: 0 for v in g.vertices}
    for f in maximal_cliques(g):
        for v in f:
            counts[v] += 1
    return counts


def classify_special_chordal(g: Graph) -> ClassificationReport:
    """Depth and CM test for chordal graphs with clique intersections of size <= 1."""
    if is_chordal(g) is None:
        raise OutsideClass("graph is not chordal")
    facets = maximal_cliques(g)
    for a, b in itertools.combinations(facets, 2):
        if len(a & b) > 1:
            raise OutsideClass(f"maximal cliques {sorted(a)} and {sorted(b)} share {len(a & b)} vertices")
    c = len(connected_components(g))
    pd = cut_sets(g)
    counts = cliques_per_vertex(g)
    crowded = sorted(v for v, k in counts.items() if k > 2)
    cond_c = not crowded
    rep = ClassificationReport(
        class_tag="special-chordal",
        n=g.n,
        components=c,
        dim=pd.krull_dim,
        depth=g.n + c,
        unmixed=pd.unmixed,
        cm=cond_c,
        multiplicity=pd.multiplicity,
        conditions={"unmixed": pd.unmixed, "at_most_two_cliques": cond_c},
    )
    rep.explain.append(
        f"chordal, maximal cliques meet in <= 1 vertex: depth = n + c = {g.n} + {c}"
    )
    if crowded:
        rep.explain.append(f"vertices {crowded} lie in 3 or more maximal cliques: not CM")
    else:
        rep.explain.append("every vertex lies in at most two maximal cliques: CM")
    if pd.unmixed != cond_c:
        raise AssertionError("cut-set unmixedness disagrees with the clique-count condition")
    if cond_c and pd.krull_dim != g.n + c:
        raise AssertionError("CM graph whose dimension is not n + c")
    rep.check_invariants()
    return rep


# ------------------------------------------------------------ forests


def path_order(g: Graph, comp) -> list[int]:
    """Vertices of a path component from one end to the other."""
    comp = set(comp)
    if len(comp) == 1:
        return list(comp)
    ends = sorted(v for v in comp if g.degree(v) == 1)
    order = [ends[0]]
    prev = None
    while len(order) < len(comp):
        cur = order[-1]
        nxt = [w for w in g.neighbors(cur) if w != prev]
        prev = cur
        order.append(nxt[0])
    return order


def classify_forest(g: Graph) -> ClassificationReport:
    """Forests: depth n + c; CM iff complete intersection iff all components are paths."""
    if not is_forest(g):
        raise OutsideClass("graph has a cycle")
    comps = connected_components(g)
    c = len(comps)
    pd = cut_sets(g)
    paths = all(is_path_graph(induced(g, comp)) for comp in comps)
    rep = ClassificationReport(
        class_tag="forest",
        n=g.n,
        components=c,
        dim=pd.krull_dim,
        depth=g.n + c,
        unmixed=pd.unmixed,
        cm=paths,
        complete_intersection=paths,
        gorenstein=paths,
        multiplicity=pd.multiplicity,
        conditions={"unmixed": pd.unmixed, "all_components_paths": paths},
    )
    rep.explain.append(f"forest: depth = n + c = {g.n} + {c}")
    if paths:
        order = [v for comp in comps for v in path_order(g, comp)]
        lab = Labeling.from_order(order)
        rep.labeling = list(lab.perm)
        n = g.n
        gens = []
        h = g.relabel(lab)
        for i, j in h.sorted_edges():
            gens.append(f"x{i}*y{j}")
        rep.initial_ideal = gens
        rep.cm_type = 1
        ks = [2] * len(g.edges)
        rep.hilbert_numerator = _poly_of_sizes(ks)
        rep.a_invariant = len(g.edges) - (n + c)
        rep.explain.append("every component is a path: the quadrics form a regular sequence")
    else:
        bad = sorted(v for v in g.vertices if g.degree(v) > 2)
        rep.explain.append(f"vertices {bad} have degree >= 3: not unmixed")
    if pd.unmixed != paths:
        raise AssertionError("forest unmixedness disagrees with the path test")
    rep.check_invariants()
    return rep


# ------------------------------------------------------------ closed graphs


def condition_d(g: Graph) -> bool:
    """{i, j+1} and {j, k+1} edges with i < j < k force {i, k+1}."""
    n = g.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if j + 1 > n or not g.has_edge(i, j + 1):
                continue
            for k in range(j + 1, n):
                if g.has_edge(j, k + 1) and not g.has_edge(i, k + 1):
                    return False
    return True


def extract_structure(g: Graph) -> ClosedCMStructure | None:
    """Breakpoints of a connected graph whose facets (as labeled) chain at single vertices."""
    facets = sorted((sorted(f) for f in maximal_cliques(g)), key=lambda f: f[0])
    if g.n == 1:
        return ClosedCMStructure(1, (1,))
    for f in facets:
        if f != list(range(f[0], f[-1] + 1)):
            return None
    if facets[0][0] != 1 or facets[-1][-1] != g.n:
        return None
    a = [1]
    for f, nxt in zip(facets, facets[1:]):
        if nxt[0] != f[-1]:
            return None
    a.extend(f[-1] for f in facets)
    try:
        return ClosedCMStructure(g.n, tuple(a))
    except ValueError:
        return None


def _poly_of_sizes(ks: list[int]) -> list[int]:
    out = [1]
    for k in ks:
        nxt = [0] * (len(out) + 1)
        for d, c in enumerate(out):
            nxt[d] += c
            nxt[d + 1] += c * (k - 1)
        out = nxt
    return out


def closed_cm_invariants(st: ClosedCMStructure) -> ClassificationReport:
    """Hilbert numerator, multiplicity, a-invariant and CM type from the clique sizes."""
    ks = st.clique_sizes
    r = st.r
    n = st.n
    num = _poly_of_sizes(ks)
    rep = ClassificationReport(
        class_tag="closed",
        n=n,
        components=1,
        dim=n + 1,
        depth=n + 1,
        unmixed=True,
        cm=True,
        gorenstein=all(k == 2 for k in ks),
        hilbert_numerator=num,
        multiplicity=math.prod(ks),
        a_invariant=r - n - 1,
        cm_type=math.prod(k - 1 for k in ks),
        structure=st.to_dict(),
    )
    rep.complete_intersection = rep.gorenstein
    rep.explain.append(
        f"clique sizes {ks}: H(t) = prod((k_i - 1) t + 1) / (1 - t)^{n + 1}"
    )
    return rep


def _component_report(g: Graph) -> tuple[dict[str, bool], ClosedCMStructure | None]:
    pd = cut_sets(g)
    st = extract_structure(g)
    flags = {"a_unmixed": pd.unmixed, "d_edge_condition": condition_d(g), "e_interval_chain": st is not None}
    return flags, st


def classify_closed(g: Graph) -> ClassificationReport:
    """Evaluate conditions (a), (d), (e) on each component in a closed labeling."""
    lab = find_closed_labeling(g)
    if lab is None:
        raise OutsideClass("no labeling makes every maximal clique an interval")
    h = g.relabel(lab)
    comps = connected_components(h)
    pd_all = cut_sets(g)
    flags_all = {"a_unmixed": True, "d_edge_condition": True, "e_interval_chain": True}
    structures = []
    explain = []
    for comp in comps:
        sub = induced(h, comp)
        flags, st = _component_report(sub)
        if len(set(flags.values())) != 1:
            raise AssertionError(f"conditions disagree on component {sorted(comp)}: {flags}")
        for k, v in flags.items():
            flags_all[k] = flags_all[k] and v
        structures.append(st)
        if st is None:
            explain.append(f"component {sorted(comp)}: consecutive facets overlap in more than one vertex")
    cm = all(flags_all.values())
    c = len(comps)
    rep = ClassificationReport(
        class_tag="closed",
        n=g.n,
        components=c,
        dim=pd_all.krull_dim,
        unmixed=pd_all.unmixed,
        cm=cm,
        multiplicity=pd_all.multiplicity,
        conditions=flags_all,
        labeling=list(lab.perm),
    )
    rep.explain.append(f"closed; labeling {list(lab.perm)} makes every maximal clique an interval")
    rep.explain.extend(explain)
    if cm:
        ks = [k for st in structures for k in st.clique_sizes]
        r = sum(st.r for st in structures)
        rep.depth = g.n + c
        rep.hilbert_numerator = _poly_of_sizes(ks)
        rep.multiplicity = math.prod(ks)
        rep.a_invariant = r - g.n - c
        rep.cm_type = math.prod(k - 1 for k in ks)
        rep.gorenstein = all(k == 2 for k in ks)
        rep.complete_intersection = rep.gorenstein
        if c == 1:
            rep.structure = structures[0].to_dict()
        else:
            rep.structure = {"components": [st.to_dict() for st in structures]}
        rep.explain.append(f"facets chain at single vertices; clique sizes {ks}")
    else:
        rep.depth_source = "unknown"
    rep.check_invariants()
    return rep


def classify(g: Graph) -> ClassificationReport:
    """First applicable theorem among forest, closed, special chordal."""
    for fn in (classify_forest, classify_closed, classify_special_chordal):
        try:
            return fn(g)
        except OutsideClass:
            continue
    pd = cut_sets(g)
    rep = ClassificationReport(
        class_tag="outside",
        n=g.n,
        components=len(connected_components(g)),
        dim=pd.krull_dim,
        unmixed=pd.unmixed,
        multiplicity=pd.multiplicity,
        depth_source="unknown",
    )
    if not pd.unmixed:
        rep.cm = False
        rep.explain.append("mixed minimal primes: not CM")
    rep.explain.append("no theorem applies; depth needs the engine")
    return rep


# ------------------------------------------------------------ identities


def verify_multiplicity_identity(b: list[int]) -> tuple[bool, int, int]:
    """prod(b_i + 1) against the sum of segment products over index tuples."""
    if not b or any(x < 1 for x in b):
        raise ValueError("b must be a non-empty list of integers >= 1")
    r = len(b)
    lhs = math.prod(x + 1 for x in b)
    pre = [0]
    for x in b:
        pre.append(pre[-1] + x)

    def seg(lo: int, hi: int) -> int:
        # b_lo + ... + b_hi (1-based, inclusive)
        return pre[hi] - pre[lo - 1]

    rhs = 1 + sum(b)
    for s in range(1, r):
        for js in itertools.combinations(range(1, r), s):
            term = seg(1, js[0])
            for a, c in zip(js, js[1:]):
                term *= seg(a + 1, c) - 1
            term *= seg(js[-1] + 1, r)
            rhs += term
    return lhs == rhs, lhs, rhs


def compositions(total: int, parts: int):
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts <= 0 or total < parts:
        return
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[k + 1] - bounds[k] for k in range(parts))


def partitions(total: int, parts: int):
    """Non-increasing tuples of ``parts`` positive integers summing to ``total``."""
    for c in compositions(total, parts):
        if all(x >= y for x, y in zip(c, c[1:])):
            yield c


@dataclass(frozen=True)
class PowerIdentityResult:
    r: int
    lhs: int
    compositions_rhs: int
    partitions_rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.compositions_rhs

    @property
    def partitions_hold(self) -> bool:
        return self.lhs == self.partitions_rhs

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "lhs": self.lhs,
            "rhs_compositions": self.compositions_rhs,
            "rhs_partitions": self.partitions_rhs,
            "equal": self.holds,
            "equal_under_partitions": self.partitions_hold,
        }


def verify_power_identity(r: int) -> PowerIdentityResult:
    """2**r against sums of part products, read as compositions and as partitions."""
    if r < 1:
        raise ValueError("r must be positive")
    comp = part = 0
    for s in range(r // 2 + 1):
        for x in compositions(r - s + 1, s + 1):
            comp += math.prod(x)
        for x in partitions(r - s + 1, s + 1):
            part += math.prod(x)
    return PowerIdentityResult(r, 2**r, comp, part)
