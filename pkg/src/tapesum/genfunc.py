"""Sparse generating functions: G(x) = prod(1 + x**a) with exact coefficients.

The coefficient of ``x**b`` in the expanded product counts the subsets that
sum to ``b``.  The constant term also carries the empty subset, which
:func:`coefficient` strips when reading sum 0 off a subset-sum product.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .core import Instance, promote
from .errors import NegativeExponentPresent, SizeLimitExceeded

DEFAULT_TERM_CAP = 2**22


@dataclass(frozen=True, eq=False)
class SparsePoly:
    """Immutable exponent -> coefficient map with no stored zeros.

    ``with_empty`` marks products built from subset-sum factors, whose
    constant term includes one contribution from the empty subset.
    """

    terms: dict = field(default_factory=dict)
    with_empty: bool = False

    def __post_init__(self):
        object.__setattr__(self, "terms", {e: c for e, c in self.terms.items() if c})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "SparsePoly":
        return cls({exp: coeff})

    def __getitem__(self, exp: int) -> int:
        return self.terms.get(exp, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "SparsePoly(0)"
        parts = [f"{c}*x^{e}" for e, c in sorted(self.terms.items())]
        return "SparsePoly(" + " + ".join(parts) + ")"

    @property
    def degree(self) -> int:
        return max(self.terms, default=0)

    @property
    def min_exponent(self) -> int:
        return min(self.terms, default=0)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(out, self.with_empty and other.with_empty)

    def shift(self, t: int) -> "SparsePoly":
        """Multiply by x**t (t may be negative)."""
        return SparsePoly({e + t: c for e, c in self.terms.items()}, self.with_empty)

    def derivative(self, n: int = 1) -> "SparsePoly":
        """n-th formal derivative, term by term via falling factorials."""
        if self.min_exponent < 0:
            raise NegativeExponentPresent("formal derivative needs non-negative exponents")
        return SparsePoly({e - n: c * math.perm(e, n)
                           for e, c in self.terms.items() if e >= n})

    def at_zero(self) -> int:
        return self.terms.get(0, 0)

    def to_json(self) -> dict:
        return {str(e): str(c) for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, d: dict, with_empty: bool = False) -> "SparsePoly":
        return cls({int(e): int(c) for e, c in d.items()}, with_empty)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class TapeInteger:
    value: int

    def __contains__(self, j: int) -> bool:
        return j >= 0 and bool(self.value >> j & 1)


def expand(inst: Instance, cap: int = DEFAULT_TERM_CAP) -> SparsePoly:
    """Fully expand prod(1 + x**a), multiplying the factors in input order."""
    inst = promote(inst)
    terms = {0: 1}
    for a in inst.values:
        nxt = dict(terms)
        for e, c in terms.items():
            nxt[e + a] = nxt.get(e + a, 0) + c
        if len(nxt) > cap:
            raise SizeLimitExceeded(f"expansion exceeds {cap} terms")
        terms = nxt
    return SparsePoly(terms, with_empty=True)


def factor(a: int) -> SparsePoly:
    """The single factor 1 + x**a."""
    if a == 0:
        return SparsePoly({0: 2}, with_empty=True)
    return SparsePoly({0: 1, a: 1}, with_empty=True)


def coefficient(p: SparsePoly, target: int) -> int:
    """Number of nonempty subsets summing to ``target`` (plain coefficient for non subset-sum polys)."""
    c = p[target]
    if target == 0 and p.with_empty:
        c -= 1
    return c


def derivative_read(p: SparsePoly, n: int) -> int:
    """Coefficient of x**n recovered as (d^n p / dx^n)(0) / n!."""
    if n < 0:
        raise ValueError("derivative order must be non-negative")
    value_at_zero = p.derivative(n).at_zero()
    q, r = divmod(value_at_zero, math.factorial(n))
    assert r == 0
    return q


def to_tape_integer(p: SparsePoly) -> TapeInteger:
    if p.min_exponent < 0:
        raise NegativeExponentPresent("binary tape encoding needs non-negative exponents")
    v = 0
    for e, c in p.terms.items():
        if e >= 1 and c > 0:
            v |= 1 << e
    return TapeInteger(v)


def nonempty_counts(p: SparsePoly) -> dict:
    """Multiplicity map {sum: count} over nonempty subsets."""
    out = {e: coefficient(p, e) for e in p.terms}
    return {e: c for e, c in out.items() if c}
