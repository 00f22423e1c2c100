"""Koszul homology of a graded quotient ``S/I`` over GF(p).

``beta_{i,D}(S/I) = dim H_i(K(z_1..z_N) (x) S/I)_D``.  The complex is assembled
one multidegree ``D`` at a time: a chain is ``e_T (x) m`` with ``T`` a set of
variables and ``m`` a standard monomial (not in the initial ideal) such that
``deg(T) + deg(m) = D``.  Basis convention: ``e_T = e_{t_1} ^ ... ^ e_{t_k}``
with ``t_1 < ... < t_k`` and

    d(e_T (x) m) = sum_s (-1)**s e_{T - t_s} (x) NF(z_{t_s} * m).

Signs do not affect ranks but are kept so that ``d * d = 0`` can be asserted.
"""

from __future__ import annotations

from functools import lru_cache

from .groebner import GroebnerBasis
from .linalg import sparse_rank
from .poly import Monomial, weight_of


class KoszulEngine:
    def __init__(self, gb: GroebnerBasis, weights: list[tuple[int, ...]]):
        self.gb = gb
        self.ring = gb.ring
        self.p = gb.ring.p
        self.weights = [tuple(w) for w in weights]
        self.g = len(self.weights[0])
        nv = self.ring.nvars
        if len(self.weights) != nv:
            raise ValueError("need one weight vector per variable")
        if any(not any(w) for w in self.weights) or any(c < 0 for w in self.weights for c in w):
            raise ValueError("weights must be non-negative and nonzero")
        self._leads = [
            tuple((k, e) for k, e in enumerate(lm) if e) for lm in gb.leading_monomials
        ]
        # components that variables k.. can still contribute to
        self._reach = []
        acc = [False] * self.g
        for k in reversed(range(nv)):
            acc = [a or c > 0 for a, c in zip(acc, self.weights[k])]
            self._reach.append(tuple(acc))
        self._reach.reverse()
        self._reach.append((False,) * self.g)
        self.basis = lru_cache(maxsize=None)(self._basis)
        self._nf: dict[tuple[int, Monomial], dict[Monomial, int]] = {}

    def is_standard(self, m: Monomial) -> bool:
        for lead in self._leads:
            if all(m[k] >= e for k, e in lead):
                return False
        return True

    def _monomials(self, degree: tuple[int, ...]) -> list[Monomial]:
        nv = self.ring.nvars
        out: list[Monomial] = []
        exps = [0] * nv

        def rec(k: int, rem: list[int]) -> None:
            if not any(rem):
                out.append(tuple(exps[:k]) + (0,) * (nv - k))
                return
            if k == nv:
                return
            reach = self._reach[k]
            if any(r > 0 and not reach[c] for c, r in enumerate(rem)):
                return
            w = self.weights[k]
            e = 0
            cur = list(rem)
            while all(x >= 0 for x in cur):
                exps[k] = e
                rec(k + 1, cur)
                e += 1
                cur = [x - y for x, y in zip(cur, w)]
            exps[k] = 0

        rec(0, list(degree))
        return out

    def _basis(self, degree: tuple[int, ...]) -> tuple[Monomial, ...]:
        if any(c < 0 for c in degree):
            return ()
        return tuple(sorted(m for m in self._monomials(degree) if self.is_standard(m)))

    def times_var(self, k: int, m: Monomial) -> dict[Monomial, int]:
        key = (k, m)
        hit = self._nf.get(key)
        if hit is None:
            vm = m[:k] + (m[k] + 1,) + m[k + 1:]
            hit = {vm: 1} if self.is_standard(vm) else self.gb.reduce_monomial(vm)
            self._nf[key] = hit
        return hit

    def _subsets(self, degree: tuple[int, ...]) -> list[tuple[int, ...]]:
        nv = self.ring.nvars
        out: list[tuple[int, ...]] = []

        def rec(k: int, chosen: list[int], rem: list[int]) -> None:
            if k == nv:
                out.append(tuple(chosen))
                return
            rec(k + 1, chosen, rem)
            w = self.weights[k]
            nxt = [x - y for x, y in zip(rem, w)]
            if all(x >= 0 for x in nxt):
                chosen.append(k)
                rec(k + 1, chosen, nxt)
                chosen.pop()

        rec(0, [], list(degree))
        return out

    def chains(self, degree: tuple[int, ...]) -> dict[int, list[tuple[tuple[int, ...], Monomial]]]:
        """Chain bases ``C_i`` in the given multidegree, keyed by homological degree."""
        out: dict[int, list] = {}
        for t in self._subsets(degree):
            wt = [0] * self.g
            for k in t:
                wt = [a + b for a, b in zip(wt, self.weights[k])]
            rest = tuple(a - b for a, b in zip(degree, wt))
            for m in self.basis(rest):
                out.setdefault(len(t), []).append((t, m))
        return out

    def differential(self, source, target) -> list[dict[int, int]]:
        """Columns of ``d: C_i -> C_{i-1}`` as sparse vectors over ``target``."""
        index = {c: r for r, c in enumerate(target)}
        p = self.p
        cols = []
        for t, m in source:
            col: dict[int, int] = {}
            for s, k in enumerate(t):
                face = t[:s] + t[s + 1:]
                sign = -1 if s % 2 else 1
                for mm, c in self.times_var(k, m).items():
                    r = index[(face, mm)]
                    v = (col.get(r, 0) + sign * c) % p
                    if v:
                        col[r] = v
                    else:
                        col.pop(r, None)
            cols.append(col)
        return cols

    def betti_at(self, degree: tuple[int, ...], only=None) -> dict[int, int]:
        """Nonzero ``beta_i`` of ``S/I`` in one multidegree.

        ``only`` restricts the homological positions computed; ranks that
        no requested position needs are skipped.
        """
        ch = self.chains(degree)
        if not ch:
            return {}
        top = max(ch)
        want = set(ch) if only is None else set(only) & set(ch)
        ranks = {}
        for i in sorted({k for j in want for k in (j, j + 1)}):
            if i < 1 or i > top:
                continue
            src, tgt = ch.get(i, []), ch.get(i - 1, [])
            ranks[i] = sparse_rank(self.differential(src, tgt), self.p) if src and tgt else 0
        out = {}
        for i in want:
            b = len(ch[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if b:
                out[i] = b
        return out


def degree_of(m: Monomial, weights) -> tuple[int, ...]:
    return weight_of(m, weights)
