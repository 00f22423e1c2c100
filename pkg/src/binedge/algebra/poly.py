"""Sparse polynomials over GF(p) under the lexicographic order.

A monomial is a tuple of exponents.  Comparing two exponent tuples with the
builtin tuple ordering is exactly lex with variable 0 largest, so for the ring
``K[x_1..x_n, y_1..y_n]`` (x's first) the order is
``x_1 > ... > x_n > y_1 > ... > y_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Monomial = tuple[int, ...]

DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class Ring:
    nvars: int
    p: int = DEFAULT_PRIME
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(f"z{k + 1}" for k in range(self.nvars)))
        if len(self.names) != self.nvars:
            raise ValueError("need one name per variable")

    @classmethod
    def for_graph(cls, n: int, p: int = DEFAULT_PRIME) -> "Ring":
        """``K[x_1..x_n, y_1..y_n]`` with x's first."""
        names = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1))
        return cls(2 * n, p, names)

    def one(self) -> Monomial:
        return (0,) * self.nvars

    def var(self, k: int) -> Monomial:
        e = [0] * self.nvars
        e[k] = 1
        return tuple(e)

    def with_prime(self, p: int) -> "Ring":
        return Ring(self.nvars, p, self.names)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse_monomial(self, text: str) -> Monomial:
        idx = {name: k for k, name in enumerate(self.names)}
        e = [0] * self.nvars
        text = text.strip()
        if text in ("", "1"):
            return tuple(e)
        for factor in text.split("*"):
            name, _, power = factor.strip().partition("^")
            if name not in idx:
                raise ValueError(f"unknown variable {name!r}")
            e[idx[name]] += int(power) if power else 1
        return tuple(e)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


class Polynomial:
    """Immutable map monomial -> nonzero coefficient in GF(p)."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        p = ring.p
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if len(m) != ring.nvars:
                raise ValueError(f"monomial {m} has wrong length for {ring.nvars} variables")
            c = (acc.get(m, 0) + c) % p
            if c:
                acc[m] = c
            else:
                acc.pop(m, None)
        self.ring = ring
        self.terms = acc
        self._lead = max(acc) if acc else None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict[Monomial, int]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._lead = max(terms) if terms else None
        return obj

    @classmethod
    def monomial(cls, ring: Ring, m: Monomial, c: int = 1) -> "Polynomial":
        return cls(ring, {m: c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lead_monomial(self) -> Monomial:
        if self._lead is None:
            raise ValueError("zero polynomial has no leading monomial")
        return self._lead

    @property
    def lead_coeff(self) -> int:
        return self.terms[self.lead_monomial]

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, weights: list[tuple[int, ...]] | None = None) -> bool:
        degs = {weight_of(m, weights) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = pow(self.lead_coeff, -1, self.ring.p)
        return self.scale(inv)

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if not c:
            return Polynomial._raw(self.ring, {})
        return Polynomial._raw(self.ring, {m: v * c % p for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: int) -> "Polynomial":
        p = self.ring.p
        return Polynomial._raw(
            self.ring, {mono_mul(m, mono): v * c % p for m, v in self.terms.items()}
        )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        p = self.ring.p
        acc = dict(self.terms)
        for m, c in other.terms.items():
            v = (acc.get(m, 0) + c) % p
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Polynomial._raw(self.ring, acc)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = Polynomial._raw(self.ring, {})
        for m, c in other.terms.items():
            out = out + self.mul_term(m, c)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        p = self.ring.p
        out = []
        for m, c in self.sorted_terms():
            sign = "+"
            if c > p // 2:
                sign, c = "-", p - c
            body = self.ring.format_monomial(m)
            if c != 1:
                body = f"{c}*{body}" if body != "1" else str(c)
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


def weight_of(m: Monomial, weights) -> tuple[int, ...]:
    """Degree of ``m`` under a grading given as one weight vector per variable."""
    if weights is None:
        return (sum(m),)
    g = len(weights[0])
    return tuple(sum(e * w[k] for e, w in zip(m, weights)) for k in range(g))
