"""Derived, lower central and upper central series; radical and semisimplicity.

In finite dimension every series stabilises at a finite index, so the
transfinite stages (g^(omega), the hypercenter) are the stabilised terms.
Stabilisation is detected by structural equality of canonical subspaces.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (LeibnizAlgebra, center, is_ideal, leib, quotient,
                   subspace_product)
from .exactla import Subspace, nullspace, subspace_sum


class SeriesKind(str, enum.Enum):
    DERIVED = "Derived"
    LOWER_CENTRAL = "LowerCentral"
    UPPER_CENTRAL = "UpperCentral"


@dataclass(frozen=True)
class SeriesReport:
    kind: SeriesKind
    terms: tuple            # distinct terms up to and including the stable one
    stabilized_at: int

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    @property
    def limit(self) -> Subspace:
        return self.terms[-1]

    def term(self, k: int) -> Subspace:
        """k-th term; past ``stabilized_at`` the series is constant."""
        return self.terms[min(k, self.stabilized_at)]


def _iterate(kind, start, step) -> SeriesReport:
    terms = [start]
    while True:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return SeriesReport(kind, tuple(terms), len(terms) - 1)
        terms.append(nxt)


def derived_series(g: LeibnizAlgebra) -> SeriesReport:
    return _iterate(SeriesKind.DERIVED, g.whole, lambda U: subspace_product(g, U, U))


def lower_central_series(g: LeibnizAlgebra) -> SeriesReport:
    W = g.whole
    return _iterate(SeriesKind.LOWER_CENTRAL, W,
                    lambda C: subspace_sum(subspace_product(g, W, C), subspace_product(g, C, W)))


def upper_central_series(g: LeibnizAlgebra) -> SeriesReport:
    def step(zeta):
        q = quotient(g, zeta)
        return q.preimage(center(q.algebra))
    return _iterate(SeriesKind.UPPER_CENTRAL, g.zero, step)


def is_solvable(g: LeibnizAlgebra) -> bool:
    return derived_series(g).limit.is_zero()


def derived_length(g: LeibnizAlgebra) -> int | None:
    """First k with g^(k) = 0, or None if g is not solvable."""
    s = derived_series(g)
    return s.stabilized_at if s.limit.is_zero() else None


def is_nilpotent(g: LeibnizAlgebra) -> bool:
    return lower_central_series(g).limit.is_zero()


def nilpotency_class(g: LeibnizAlgebra) -> int | None:
    """First k with C^k = 0 (C^0 = g), or None if g is not nilpotent."""
    s = lower_central_series(g)
    return s.stabilized_at if s.limit.is_zero() else None


def hypercenter(g: LeibnizAlgebra) -> Subspace:
    return upper_central_series(g).limit


def is_hypercentral(g: LeibnizAlgebra) -> bool:
    return hypercenter(g).is_full()


def subspace_derived_length(g: LeibnizAlgebra, U: Subspace, limit: int = 64) -> int | None:
    """Derived length of the subalgebra U, computed inside g."""
    term = U
    for k in range(limit):
        if term.is_zero():
            return k
        nxt = subspace_product(g, term, term)
        if nxt == term:
            return None
        term = nxt
    return None


# ---------------------------------------------------------------------------
# solvable radical
# ---------------------------------------------------------------------------

def killing_matrix(g: LeibnizAlgebra) -> list[list]:
    """``tr(ad e_i ad e_j)`` with ``ad x = [x, -]``."""
    n, F, T = g.dim, g.field, g.table
    # ad(e_i) as a matrix: column j is [e_i, e_j]
    ad = [[[T[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
    K = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            A, B = ad[i], ad[j]
            K[i][j] = F.reduce(sum(A[r][s] * B[s][r] for r in range(n) for s in range(n)))
    return K


def _lie_radical_char0(L: LeibnizAlgebra) -> Subspace:
    """Radical of a char-0 Lie algebra: the Killing-orthogonal of [L, L]."""
    W = L.whole
    LL = subspace_product(L, W, W)
    K = killing_matrix(L)
    n = L.dim
    eqs = [[sum(K[i][j] * y[j] for j in range(n)) for i in range(n)] for y in LL.basis]
    return nullspace(eqs, L.field, n)


def solvable_radical(g: LeibnizAlgebra, guard: int | None = None) -> Subspace:
    """Largest solvable two-sided ideal.

    Over Q: preimage of the Lie radical of g/Leib(g).  Over GF(p): sum of the
    solvable members of the enumerated ideal lattice.
    """
    g.require_convention()
    if g.field.char == 0:
        q = quotient(g, leib(g))
        return q.preimage(_lie_radical_char0(q.algebra))
    from .primes import enumerate_ideals

    lattice = enumerate_ideals(g, guard=guard)
    rad = g.zero
    for I in lattice.ideals:
        if subspace_derived_length(g, I) is not None:
            rad = subspace_sum(rad, I)
    return rad


def is_semisimple(g: LeibnizAlgebra, guard: int | None = None) -> bool:
    return solvable_radical(g, guard=guard) == leib(g)


def series_terms_are_ideals(g: LeibnizAlgebra, report: SeriesReport) -> bool:
    return all(is_ideal(g, t) for t in report.terms)
