"""Exhaustive cross-checking of every classifier on small connected graphs.

Connected graphs on n vertices are produced by attaching a new vertex to a
non-empty neighbour set of each stored graph on n - 1 vertices (every
connected graph has a vertex whose removal keeps it connected, so nothing is
missed).  Duplicates are merged by a relabeled-copy signature: two graphs
share a signature only if one is a relabeling of the other, so merging is
sound, but isomorphic graphs may keep distinct signatures and be checked
twice.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .graph import (
    Graph,
    Labeling,
    closed_labeling_bruteforce,
    clique_complex,
    connected_components,
    find_closed_labeling,
    is_chordal,
    is_closed_wrt,
    is_forest,
    is_leaf_order,
    leaf_order,
    maximal_cliques,
)
from .primes import ClosedCMStructure, cm_closed_primes, cut_sets, cut_sets_bruteforce, krull_dim_bruteforce
from .classify import (
    classify_forest,
    classify_special_chordal,
    condition_d,
    extract_structure,
    in_special_chordal_class,
    path_order,
)

COMBINATORIAL_MAX_N = 7
ENGINE_MAX_N = 6
BRUTE_LABELING_MAX_N = 6


class CensusLimitError(ValueError):
    pass


# ------------------------------------------------------------ enumeration


def _refined_keys(g: Graph) -> dict[int, tuple]:
    key = {v: (g.degree(v),) for v in g.vertices}
    for _ in range(g.n):
        new = {v: (key[v], tuple(sorted(key[w] for w in g.neighbors(v)))) for v in g.vertices}
        ranks = {k: r for r, k in enumerate(sorted(set(new.values())))}
        new = {v: (ranks[new[v]],) for v in g.vertices}
        if len(set(new.values())) == len(set(key.values())):
            key = new
            break
        key = new
    return key


def signature(g: Graph, budget: int = 720) -> tuple:
    """A relabeled copy of ``g`` used as a dedup key."""
    key = _refined_keys(g)
    groups: dict[tuple, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(key[v], []).append(v)
    classes = [groups[k] for k in sorted(groups)]
    sizes = [len(c) for c in classes]

    def edges_for(order: list[int]) -> tuple:
        pos = {v: k for k, v in enumerate(order, start=1)}
        return tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in g.edges))

    if math.prod(math.factorial(s) for s in sizes) <= budget:
        best = None
        for perms in itertools.product(*(itertools.permutations(c) for c in classes)):
            cand = edges_for([v for block in perms for v in block])
            if best is None or cand < best:
                best = cand
        return (g.n, best)
    return (g.n, edges_for([v for c in classes for v in c]))


def connected_graphs(max_n: int) -> Iterator[Graph]:
    """Connected graphs with 1..max_n vertices, deduplicated by :func:`signature`."""
    level = [Graph(1, frozenset())]
    yield level[0]
    for n in range(2, max_n + 1):
        seen: dict[tuple, Graph] = {}
        for h in level:
            for size in range(1, n):
                for nb in itertools.combinations(range(1, n), size):
                    g = Graph(n, h.edges | {(v, n) for v in nb})
                    sig = signature(g)
                    if sig not in seen:
                        seen[sig] = g
        level = [seen[k] for k in sorted(seen)]
        yield from level


def all_labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on exactly [n] (no dedup; each labeling is its own graph)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
        if len(connected_components(g)) == 1:
            yield g


def forests(max_n: int) -> Iterator[Graph]:
    """Forests on 1..max_n vertices, deduplicated by :func:`signature`."""
    for n in range(1, max_n + 1):
        seen: dict[tuple, Graph] = {}
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for m in range(n):
            for es in itertools.combinations(pairs, m):
                g = Graph(n, frozenset(es))
                if not is_forest(g):
                    continue
                sig = signature(g)
                seen.setdefault(sig, g)
        yield from (seen[k] for k in sorted(seen))


def closed_cm_structures(max_n: int) -> Iterator[ClosedCMStructure]:
    """Every breakpoint structure with 2 <= n <= max_n (one per composition of n - 1)."""
    for n in range(2, max_n + 1):
        for r in range(1, n):
            for cuts in itertools.combinations(range(2, n), r - 1):
                yield ClosedCMStructure(n, (1,) + cuts + (n,))


# ------------------------------------------------------------ per-graph record


@dataclass
class CensusRecord:
    graph: Graph
    flags: dict = field(default_factory=dict)
    engine: dict = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return all(v is not False for v in self.verdicts.values())

    def to_dict(self, full: bool = False) -> dict:
        d = {
            "graph": self.graph.to_text(),
            "n": self.graph.n,
            "agrees": self.agrees,
            "verdicts": dict(sorted(self.verdicts.items())),
        }
        if full or not self.agrees:
            d["flags"] = self.flags
            d["engine"] = self.engine
            d["evidence"] = self.evidence
        return d


def _depth_ok(rep_depth: int, engine_depth):
    return engine_depth is not None and rep_depth == engine_depth


def check_graph(g: Graph, prime: int = 32003, engine: bool = True, brute_max: int = BRUTE_LABELING_MAX_N) -> CensusRecord:
    """Run every applicable classifier (and optionally the engine) on ``g``."""
    rec = CensusRecord(g)
    v = rec.verdicts
    comps = connected_components(g)
    c = len(comps)
    peo = is_chordal(g)
    lab = find_closed_labeling(g)
    cc = clique_complex(g)
    pdec = cut_sets(g)
    rec.flags = {
        "chordal": peo is not None,
        "closed": lab is not None,
        "forest": is_forest(g),
        "special_chordal": in_special_chordal_class(g),
        "dim": pdec.krull_dim,
        "unmixed": pdec.unmixed,
        "cut_sets": [list(s) for s in pdec.sets],
    }

    # graph_core oracles
    if g.n <= brute_max:
        v["closed_labeling_oracle"] = (lab is not None) == (closed_labeling_bruteforce(g) is not None)
    if peo is not None:
        v["chordal_has_leaf_order"] = leaf_order(cc) is not None
    if lab is not None:
        v["closed_implies_chordal"] = peo is not None
        h = g.relabel(lab)
        facets = sorted(maximal_cliques(h), key=min)
        v["leaf_order_by_minima"] = is_leaf_order(facets, list(range(len(facets))))
    if g.n <= 6:
        brute = cut_sets_bruteforce(g)
        v["cut_sets_oracle"] = brute.sets == pdec.sets and krull_dim_bruteforce(g) == pdec.krull_dim

    tables = {}
    if engine:
        from .algebra import edge_betti, edge_ideal_gb, initial_betti, hilbert_series_monomial

        # initial ideals depend on the labeling; closed graphs use a closed one
        work = g if lab is None else g.relabel(lab)
        tj = edge_betti(work, prime)
        ti = initial_betti(work, prime)
        tables = {"J": tj, "ini": ti}
        gb = edge_ideal_gb(work, p=prime)
        hs = hilbert_series_monomial(gb.leading_monomials, 2 * g.n)
        ok = tj.verified and ti.verified
        rec.engine = {
            "verified": ok,
            "depth": tj.depth if ok else None,
            "ini_depth": ti.depth if ok else None,
            "dim": hs.dim,
            "cm": (tj.depth == pdec.krull_dim) if ok else None,
            "ini_cm": (ti.depth == pdec.krull_dim) if ok else None,
            "betti_J": tj.to_dict()["entries"],
            "betti_ini": ti.to_dict()["entries"],
            "multiplicity": hs.multiplicity,
            "labeling": None if lab is None else list(lab.perm),
        }
        v["engine_verified"] = ok
        v["dim_engine_vs_cut_sets"] = hs.dim == pdec.krull_dim
        if pdec.unmixed:
            v["associativity_multiplicity"] = hs.multiplicity == pdec.multiplicity
        ident = Labeling.identity(g.n)
        v["gb_criterion"] = edge_ideal_gb(g, p=prime).is_quadratic() == is_closed_wrt(g, ident)

    eng = rec.engine

    # depth formula for chordal graphs with thin clique intersections
    if rec.flags["special_chordal"]:
        rep = classify_special_chordal(g)
        cond = rep.conditions["at_most_two_cliques"]
        v["thin_chordal_unmixed_iff_c"] = pdec.unmixed == cond
        if engine:
            v["thin_chordal_depth"] = _depth_ok(g.n + c, eng["depth"])
            v["thin_chordal_cm_iff_c"] = eng["cm"] == cond

    if rec.flags["forest"]:
        rep = classify_forest(g)
        paths = rep.conditions["all_components_paths"]
        v["forest_unmixed_iff_paths"] = pdec.unmixed == paths
        v["forest_matches_chordal"] = classify_special_chordal(g).depth == rep.depth
        if engine:
            v["forest_depth"] = _depth_ok(rep.depth, eng["depth"])
            v["forest_cm_iff_paths"] = eng["cm"] == paths
        if paths and c == 1:
            v["path_initial_ideal"] = _path_gb_check(g, prime)

    if lab is not None and c == 1:
        h = g.relabel(lab)
        st = extract_structure(h)
        flags = {
            "a": pdec.unmixed,
            "d": condition_d(h),
            "e": st is not None,
        }
        if engine:
            flags["b"] = eng["cm"]
            flags["c"] = eng["ini_cm"]
        rec.flags["classification"] = flags
        v["classification_equivalence"] = len(set(flags.values())) == 1
        if st is not None:
            _closed_cm_checks(rec, g, h, lab, st, tables, prime)

    if engine and peo is not None:
        from .algebra import chain_of_cliques_order

        if chain_of_cliques_order(g) is not None and ok:
            rec.evidence["chain_of_cliques"] = True
            rec.evidence["betti_equal"] = tables["J"].same_numbers(tables["ini"])
            rec.evidence["extremal_equal"] = tables["J"].extremal() == tables["ini"].extremal()
    return rec


def _path_gb_check(g: Graph, prime: int) -> bool:
    from .algebra import binomial_edge_ideal, edge_ideal_gb

    order = path_order(g, g.vertices)
    lab = Labeling.from_order(order)
    gb = edge_ideal_gb(g, lab, prime)
    gens = {f.monic() for f in binomial_edge_ideal(g, lab, prime)}
    n = g.n
    want = []
    for i in range(1, n):
        m = [0] * (2 * n)
        m[i - 1] = 1
        m[n + i] = 1
        want.append(tuple(m))
    return set(gb.polys) == gens and sorted(gb.leading_monomials) == sorted(want)


def _closed_cm_checks(rec, g, h, lab, st, tables, prime) -> None:
    v = rec.verdicts
    ks = st.clique_sizes
    # structural primes live in closed labels; translate back before comparing
    back = {lab(u): u for u in g.vertices}
    structural = sorted(tuple(sorted(back[x] for x in s)) for s, _ in cm_closed_primes(st))
    pdec = cut_sets(g)
    v["cm_closed_primes_sets"] = structural == sorted(pdec.sets)
    v["cm_closed_primes_sum"] = sum(m for _, m in cm_closed_primes(st)) == math.prod(ks)
    if tables:
        from .algebra import edge_ideal_gb, hilbert_series_monomial
        from .classify import closed_cm_invariants

        inv = closed_cm_invariants(st)
        gb = edge_ideal_gb(g, p=prime)
        hs = hilbert_series_monomial(gb.leading_monomials, 2 * g.n)
        v["hilbert_series"] = (
            list(hs.reduced) == inv.hilbert_numerator
            and hs.dim == g.n + 1
            and hs.multiplicity == inv.multiplicity
            and hs.a_invariant == inv.a_invariant
        )
        tj, ti = tables["J"], tables["ini"]
        if tj.verified and ti.verified:
            v["cm_closed_betti_equal"] = tj.same_numbers(ti)
            v["cm_closed_type"] = tj.last_total == inv.cm_type


# ------------------------------------------------------------ driver


def _check_star(args):
    g, prime, engine = args
    return check_graph(g, prime, engine)


def census(max_n: int, prime: int = 32003, engine: bool = True, jobs: int = 1,
           engine_max_n: int = ENGINE_MAX_N, max_n_limit: int = COMBINATORIAL_MAX_N) -> Iterator[CensusRecord]:
    """Records for every connected graph up to ``max_n`` vertices, in a fixed order."""
    if max_n > max_n_limit:
        raise CensusLimitError(f"max_n={max_n} exceeds the safety bound {max_n_limit}")
    graphs = list(connected_graphs(max_n))
    work = [(g, prime, engine and g.n <= engine_max_n) for g in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map() yields in submission order, so output is deterministic
            yield from pool.map(_check_star, work, chunksize=4)
    else:
        for item in work:
            yield _check_star(item)
