"""Hilbert series of monomial quotients by pivot recursion.

For a monomial ideal ``I`` and a variable ``v``,

    K(S/I) = K(S/(I + (v))) + t * K(S/(I : v))

where ``K`` is the numerator of the Hilbert series over ``(1 - t)**nvars``.
Once the generators have pairwise disjoint supports the numerator is the
product of ``1 - t**deg(m)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Monomial, mono_divides


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] += c
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a: list[int]) -> list[int]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def minimalize(gens) -> list[Monomial]:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in gens:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _disjoint(gens: list[Monomial]) -> bool:
    used: set[int] = set()
    for m in gens:
        supp = {k for k, e in enumerate(m) if e}
        if supp & used:
            return False
        used |= supp
    return True


def _pivot_var(gens: list[Monomial]) -> int:
    counts: dict[int, int] = {}
    for m in gens:
        for k, e in enumerate(m):
            if e:
                counts[k] = counts.get(k, 0) + 1
    return max(sorted(counts), key=lambda k: counts[k])


def k_polynomial(gens) -> list[int]:
    """Numerator of the Hilbert series of ``S/I`` over ``(1 - t)**nvars``."""
    gens = minimalize(gens)
    return _trim(_kpoly(gens))


def _kpoly(gens: list[Monomial]) -> list[int]:
    if not gens:
        return [1]
    if any(sum(m) == 0 for m in gens):
        return [0]
    if _disjoint(gens):
        out = [1]
        for m in gens:
            d = sum(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    v = _pivot_var(gens)
    nv = len(gens[0])
    var = tuple(1 if k == v else 0 for k in range(nv))
    plus = minimalize([m for m in gens if not m[v]] + [var])
    colon = minimalize([m[:v] + (max(m[v] - 1, 0),) + m[v + 1:] for m in gens])
    return _poly_add(_kpoly(plus), [0] + _kpoly(colon))


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator / (1 - t)**nvars`` and its reduced form ``h(t) / (1 - t)**dim``."""

    nvars: int
    numerator: tuple[int, ...]
    reduced: tuple[int, ...]
    dim: int

    @property
    def multiplicity(self) -> int:
        return sum(self.reduced)

    @property
    def a_invariant(self) -> int:
        return len(self.reduced) - 1 - self.dim

    def coefficients(self, upto: int) -> list[int]:
        """Hilbert function values ``H(0..upto)`` from the reduced form."""
        from math import comb

        out = []
        for d in range(upto + 1):
            if self.dim == 0:
                out.append(self.reduced[d] if d < len(self.reduced) else 0)
                continue
            out.append(
                sum(c * comb(d - k + self.dim - 1, self.dim - 1) for k, c in enumerate(self.reduced) if k <= d)
            )
        return out

    def to_dict(self) -> dict:
        return {
            "numerator": list(self.numerator),
            "reduced_numerator": list(self.reduced),
            "dim": self.dim,
            "multiplicity": self.multiplicity,
            "a_invariant": self.a_invariant,
        }


def reduce_series(numerator: list[int], nvars: int) -> tuple[list[int], int]:
    """Divide out factors of ``1 - t``; returns (h, dim)."""
    h = _trim(numerator)
    dim = nvars
    while dim > 0 and sum(h) == 0 and any(h):
        # synthetic division by (1 - t): q_k = sum_{i<=k} h_i
        q, acc = [], 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = _trim(q)
        dim -= 1
    return h, dim


def hilbert_series_monomial(gens, nvars: int | None = None) -> HilbertSeries:
    gens = [tuple(m) for m in gens]
    if nvars is None:
        if not gens:
            raise ValueError("nvars needed for the zero ideal")
        nvars = len(gens[0])
    num = k_polynomial(gens) if gens else [1]
    red, dim = reduce_series(num, nvars)
    return HilbertSeries(nvars, tuple(num), tuple(red), dim)
