"""Buchberger's algorithm for the lexicographic order over GF(p)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .poly import (
    Monomial,
    Polynomial,
    Ring,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
)


def normal_form(f: Polynomial, basis: list[Polynomial]) -> Polynomial:
    """Fully reduce ``f`` modulo ``basis`` (basis elements need not be monic)."""
    ring = f.ring
    p = ring.p
    leads = [(g.lead_monomial, pow(g.lead_coeff, -1, p), g) for g in basis if not g.is_zero()]
    work = dict(f.terms)
    rem: dict[Monomial, int] = {}
    while work:
        m = max(work)
        c = work.pop(m)
        for lm, inv, g in leads:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                factor = c * inv % p
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = (work.get(t, 0) - factor * gc) % p
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
    return Polynomial._raw(ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.lead_monomial, g.lead_monomial
    lcm = mono_lcm(lf, lg)
    p = f.ring.p
    a = f.mul_term(mono_div(lcm, lf), pow(f.lead_coeff, -1, p))
    b = g.mul_term(mono_div(lcm, lg), pow(g.lead_coeff, -1, p))
    return a - b


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    polys: tuple[Polynomial, ...]
    order: str = "lex"
    source: str = ""
    _nf_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.lead_monomial for g in self.polys]

    def initial_ideal(self) -> list[Monomial]:
        """Minimal generators of the initial ideal (leads of a reduced basis)."""
        return self.leading_monomials

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, list(self.polys))

    def reduce_monomial(self, m: Monomial) -> dict[Monomial, int]:
        """Normal form of a single monomial, as a term dict (memoized)."""
        hit = self._nf_cache.get(m)
        if hit is None:
            hit = normal_form(Polynomial._raw(self.ring, {m: 1}), list(self.polys)).terms
            self._nf_cache[m] = hit
        return hit

    def max_degree(self) -> int:
        return max((g.degree() for g in self.polys), default=0)

    def is_quadratic(self) -> bool:
        return all(g.degree() <= 2 for g in self.polys)

    def check_spairs(self) -> bool:
        """Every S-polynomial reduces to zero."""
        basis = list(self.polys)
        for f, g in itertools.combinations(basis, 2):
            if not normal_form(s_polynomial(f, g), basis).is_zero():
                return False
        return True

    def is_reduced(self) -> bool:
        for k, g in enumerate(self.polys):
            if g.lead_coeff != 1:
                return False
            others = [h.lead_monomial for j, h in enumerate(self.polys) if j != k]
            if any(mono_divides(lm, m) for m in g.terms for lm in others):
                return False
        return True

    def format(self) -> list[str]:
        return [str(g) for g in self.polys]


def _pair_key(lcm: Monomial, i: int, j: int) -> tuple:
    # normal strategy: lowest degree first, then the lex-smaller lcm
    return (mono_deg(lcm), lcm, i, j)


def buchberger(gens: list[Polynomial], ring: Ring | None = None, source: str = "") -> GroebnerBasis:
    """Reduced lex Groebner basis of the ideal generated by ``gens``.

    Pairs are processed in order of (lcm degree, lcm); the product criterion
    and Buchberger's chain criterion discard redundant pairs.
    """
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    basis: list[Polynomial] = []
    for f in gens:
        if not f.is_zero():
            basis.append(f.monic())
    pending: dict[tuple[int, int], Monomial] = {}
    for j in range(len(basis)):
        for i in range(j):
            pending[(i, j)] = mono_lcm(basis[i].lead_monomial, basis[j].lead_monomial)

    while pending:
        (i, j), lcm = min(pending.items(), key=lambda kv: _pair_key(kv[1], *kv[0]))
        del pending[(i, j)]
        fi, fj = basis[i], basis[j]
        if _coprime(fi.lead_monomial, fj.lead_monomial):
            continue
        if _chain_redundant(basis, pending, i, j, lcm):
            continue
        h = normal_form(s_polynomial(fi, fj), basis)
        if h.is_zero():
            continue
        h = h.monic()
        k = len(basis)
        basis.append(h)
        for t in range(k):
            pending[(t, k)] = mono_lcm(basis[t].lead_monomial, h.lead_monomial)

    return GroebnerBasis(ring, tuple(_reduce_basis(basis)), "lex", source)


def _chain_redundant(basis, pending, i, j, lcm) -> bool:
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if not mono_divides(basis[k].lead_monomial, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduce_basis(basis: list[Polynomial]) -> list[Polynomial]:
    minimal: list[Polynomial] = []
    for g in sorted(basis, key=lambda f: f.lead_monomial):
        lm = g.lead_monomial
        if any(mono_divides(h.lead_monomial, lm) for h in minimal):
            continue
        minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        rest = minimal[:k] + minimal[k + 1:]
        out.append(normal_form(g, rest).monic())
    out.sort(key=lambda f: f.lead_monomial, reverse=True)
    return out
