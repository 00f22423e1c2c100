"""Graphs on [n], ingestion, and combinatorial recognizers.

Vertices are the integers 1..n.  Edges are stored as sorted pairs ``(i, j)``
with ``i < j``.  Everything here is immutable and side-effect free.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when a graph document cannot be parsed."""


Edge = tuple[int, int]


def _norm_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    # origin[k-1] is the name of vertex k in the graph this one was cut from
    origin: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        clean = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop edge at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {e} has an endpoint outside 1..{self.n}")
            clean.add(_norm_edge(i, j))
        object.__setattr__(self, "edges", frozenset(clean))
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in clean:
            nbrs[i].add(j)
            nbrs[j].add(i)
        adj = {v: frozenset(s) for v, s in nbrs.items()}
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(_norm_edge(int(a), int(b)) for a, b in edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, itertools.combinations(range(1, n + 1), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, ((1, k) for k in range(2, leaves + 2)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge(i, j) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in itertools.combinations(vs, 2))

    def relabel(self, lab: "Labeling") -> "Graph":
        """Return the graph with every vertex ``v`` renamed to ``lab(v)``."""
        return Graph(self.n, frozenset(_norm_edge(lab(i), lab(j)) for i, j in self.edges))

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def to_text(self) -> str:
        return f"{self.n}; " + ",".join(f"{i}-{j}" for i, j in self.sorted_edges())


@dataclass(frozen=True)
class Labeling:
    """A relabeling ``v -> perm[v-1]`` of the vertex set [n]."""

    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(perm)}: {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "Labeling":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Labeling":
        """Labeling that gives ``order[k]`` the label ``k + 1``."""
        perm = [0] * len(order)
        for pos, v in enumerate(order, start=1):
            perm[v - 1] = pos
        return cls(tuple(perm))

    def __call__(self, v: int) -> int:
        return self.perm[v - 1]

    @property
    def order(self) -> list[int]:
        """Vertices listed by increasing new label."""
        out = [0] * len(self.perm)
        for v, lab in enumerate(self.perm, start=1):
            out[lab - 1] = v
        return out


@dataclass(frozen=True)
class CliqueComplex:
    facets: tuple[frozenset[int], ...]
    leaf_order: tuple[int, ...] | None = None

    def sorted_facets(self) -> list[list[int]]:
        return [sorted(f) for f in self.facets]


# ---------------------------------------------------------------- parsing

_EDGE_RE = re.compile(r"^\s*(-?\d+)\s*[-\s,]\s*(-?\d+)\s*$")


def _build(n: int | None, pairs: list[tuple[int, int]]) -> Graph:
    top = max((max(p) for p in pairs), default=0)
    if n is None:
        n = top
    for i, j in pairs:
        if i == j:
            raise GraphFormatError(f"loop edge {i}-{j}")
        if min(i, j) < 1 or max(i, j) > n:
            raise GraphFormatError(f"edge {i}-{j} out of range 1..{n}")
    return Graph.from_edges(n, pairs)


def _parse_pair(tok: str) -> tuple[int, int]:
    m = _EDGE_RE.match(tok)
    if not m:
        raise GraphFormatError(f"malformed edge {tok!r}")
    return int(m.group(1)), int(m.group(2))


def parse_graph(text: str) -> Graph:
    """Parse a graph from one of the accepted text formats.

    * header form: ``"5; 1-2,1-3,2-3"`` (the edge list may be empty)
    * line form: one ``i-j`` (or ``i j``) edge per line, optional ``n=5`` /
      ``n 5`` first line, ``#`` comments
    * JSON: ``{"n": 5, "edges": [[1, 2], ...]}``

    Without a declared count, n is the largest endpoint.
    """
    stripped = text.strip()
    if not stripped:
        raise GraphFormatError("empty graph document")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"bad JSON: {exc}") from exc
        if not isinstance(doc, dict) or "edges" not in doc:
            raise GraphFormatError("JSON graph needs an 'edges' field")
        try:
            pairs = [(int(a), int(b)) for a, b in doc["edges"]]
        except (TypeError, ValueError) as exc:
            raise GraphFormatError(f"bad edge entry: {exc}") from exc
        n = doc.get("n")
        return _build(None if n is None else int(n), pairs)

    lines = [ln.split("#", 1)[0].strip() for ln in stripped.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) == 1 and ";" in lines[0]:
        head, _, body = lines[0].partition(";")
        try:
            n = int(head)
        except ValueError as exc:
            raise GraphFormatError(f"bad vertex count {head!r}") from exc
        if n < 1:
            raise GraphFormatError("vertex count must be positive")
        toks = [t for t in body.split(",") if t.strip()]
        return _build(n, [_parse_pair(t) for t in toks])

    n = None
    m = re.match(r"^n\s*[=\s:]\s*(\d+)$", lines[0])
    if m:
        n = int(m.group(1))
        lines = lines[1:]
    return _build(n, [_parse_pair(ln) for ln in lines])


# ---------------------------------------------------------------- structure


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen: set[int] = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def count_components(g: Graph, removed: Iterable[int] = ()) -> int:
    """Number of components of the graph induced on ``[n] \\ removed``."""
    removed = set(removed)
    seen = set(removed)
    c = 0
    for v in g.vertices:
        if v in seen:
            continue
        c += 1
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return c


def components_of_complement(g: Graph, removed: Iterable[int]) -> list[frozenset[int]]:
    """Components of the graph induced on ``[n] \\ removed``, in original names."""
    h = restrict(g, removed)
    if h.origin is None:
        return connected_components(h)
    return [frozenset(h.origin[v - 1] for v in comp) for comp in connected_components(h)]


def restrict(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on ``[n] \\ s``, relabeled 1..n-|s| in increasing order.

    ``origin`` of the result maps the new vertex names back to the old ones.
    """
    s = set(s)
    bad = [v for v in s if not 1 <= v <= g.n]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} out of range 1..{g.n}")
    if not s:
        return g
    keep = [v for v in g.vertices if v not in s]
    new = {v: k for k, v in enumerate(keep, start=1)}
    edges = frozenset(
        (new[i], new[j]) for i, j in g.edges if i in new and j in new
    )
    return Graph(len(keep), edges, origin=tuple(keep))


def induced(g: Graph, vs: Iterable[int]) -> Graph:
    vs = set(vs)
    return restrict(g, [v for v in g.vertices if v not in vs])


def is_forest(g: Graph) -> bool:
    return len(g.edges) == g.n - len(connected_components(g))


def is_path_graph(g: Graph) -> bool:
    """True for a connected graph whose vertices can be lined up as a path."""
    if len(connected_components(g)) != 1:
        return False
    return is_forest(g) and all(g.degree(v) <= 2 for v in g.vertices)


# ---------------------------------------------------------------- chordality


def _mcs_order(g: Graph) -> list[int]:
    weight = {v: 0 for v in g.vertices}
    order = []
    left = set(g.vertices)
    while left:
        # smallest vertex among the heaviest keeps the order deterministic
        v = max(left, key=lambda u: (weight[u], -u))
        left.remove(v)
        order.append(v)
        for w in g.neighbors(v):
            if w in left:
                weight[w] += 1
    return order


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    """Check that each vertex's earlier neighbours form a clique."""
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.neighbors(v) if pos[w] < pos[v]]
        if not g.is_clique(earlier):
            return False
    return True


def is_chordal(g: Graph) -> Labeling | None:
    """Perfect elimination order (earlier neighbours form a clique) or None.

    Maximum cardinality search produces the candidate; the order is then
    checked directly.
    """
    order = _mcs_order(g)
    if is_perfect_elimination_order(g, order):
        return Labeling.from_order(order)
    return None


# ---------------------------------------------------------------- cliques


def _bron_kerbosch(g: Graph) -> list[frozenset[int]]:
    out: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(g.neighbors(u) & p))
        for v in sorted(p - g.neighbors(pivot)):
            nb = g.neighbors(v)
            expand(r | {v}, p & nb, x & nb)
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    return out


def _facet_key(f: frozenset[int]) -> tuple:
    return tuple(sorted(f))


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    peo = is_chordal(g)
    if peo is None:
        cliques = _bron_kerbosch(g)
    else:
        order = peo.order
        pos = {v: k for k, v in enumerate(order)}
        cand = {
            frozenset({v} | {w for w in g.neighbors(v) if pos[w] < pos[v]})
            for v in order
        }
        cliques = [c for c in cand if not any(c < d for d in cand)]
    return sorted(cliques, key=_facet_key)


def clique_complex(g: Graph) -> CliqueComplex:
    """Facets of the clique complex; isolated vertices give one-point facets."""
    return CliqueComplex(tuple(maximal_cliques(g)))


def branches(facets: Sequence[frozenset[int]], idx: int) -> list[int]:
    """Indices of all branches of ``facets[idx]`` within ``facets``."""
    f = facets[idx]
    others = [k for k in range(len(facets)) if k != idx]
    out = []
    for b in others:
        meet = facets[b] & f
        if all(facets[h] & f <= meet for h in others):
            out.append(b)
    return out


def leaf_order(cc: CliqueComplex) -> list[int] | None:
    """A leaf order of the facets (as indices into ``cc.facets``), or None.

    Leaves are peeled off the end; a remaining-set memo makes the
    backtracking polynomial in practice.
    """
    facets = list(cc.facets)
    if not facets:
        return []
    dead: set[frozenset[int]] = set()

    def peel(remaining: frozenset[int]) -> list[int] | None:
        if len(remaining) == 1:
            return list(remaining)
        if remaining in dead:
            return None
        idxs = sorted(remaining)
        sub = [facets[k] for k in idxs]
        for pos in reversed(range(len(idxs))):
            if branches(sub, pos):
                rest = peel(remaining - {idxs[pos]})
                if rest is not None:
                    return rest + [idxs[pos]]
        dead.add(remaining)
        return None

    return peel(frozenset(range(len(facets))))


def is_leaf_order(facets: Sequence[frozenset[int]], order: Sequence[int]) -> bool:
    seq = [facets[k] for k in order]
    for i in range(1, len(seq)):
        if not branches(seq[: i + 1], i):
            return False
    return True


# ---------------------------------------------------------------- closedness


def is_closed_wrt(g: Graph, lab: Labeling) -> bool:
    """Closed condition on the relabeled edge set."""
    h = g.relabel(lab)
    by_low: dict[int, list[int]] = {}
    by_high: dict[int, list[int]] = {}
    for i, j in h.edges:
        by_low.setdefault(i, []).append(j)
        by_high.setdefault(j, []).append(i)
    for group in itertools.chain(by_low.values(), by_high.values()):
        for a, b in itertools.combinations(group, 2):
            if not h.has_edge(a, b):
                return False
    return True


def _interval_order(g: Graph, comp: frozenset[int], facets: list[frozenset[int]]) -> list[int] | None:
    """Order ``comp`` so that every facet inside it is consecutive."""
    facets = [f for f in facets if f <= comp]
    member: dict[int, list[int]] = {v: [] for v in comp}
    for k, f in enumerate(facets):
        for v in f:
            member[v].append(k)
    dead: set[frozenset[int]] = set()

    def extend(order: list[int], placed: frozenset[int]) -> list[int] | None:
        if len(order) == len(comp):
            return order
        if placed in dead:
            return None
        # open facets have started but not finished; the next vertex must lie
        # in all of them or one of them stops being an interval
        open_f = [k for k, f in enumerate(facets) if f & placed and not f <= placed]
        if open_f:
            cand = set(facets[open_f[0]])
            for k in open_f[1:]:
                cand &= facets[k]
            cand -= placed
        else:
            cand = set(comp) - placed
        for v in sorted(cand):
            res = extend(order + [v], placed | {v})
            if res is not None:
                return res
        dead.add(placed)
        return None

    return extend([], frozenset())


def find_closed_labeling(g: Graph) -> Labeling | None:
    """A labeling making every maximal clique an interval, or None.

    Components are laid out one after another, so a disconnected graph is
    closed exactly when each component is.
    """
    facets = maximal_cliques(g)
    order: list[int] = []
    for comp in connected_components(g):
        part = _interval_order(g, comp, facets)
        if part is None:
            return None
        order.extend(part)
    lab = Labeling.from_order(order)
    if not is_closed_wrt(g, lab):
        raise AssertionError("interval labeling failed the closed-condition check")
    return lab


def closed_labeling_bruteforce(g: Graph) -> Labeling | None:
    for perm in itertools.permutations(range(1, g.n + 1)):
        lab = Labeling(perm)
        if is_closed_wrt(g, lab):
            return lab
    return None


def facets_by_minimum(g: Graph, lab: Labeling) -> list[list[int]]:
    """Facets of the relabeled graph as sorted label lists, ordered by minimum."""
    h = g.relabel(lab)
    return sorted((sorted(f) for f in maximal_cliques(h)), key=lambda f: f[0])
