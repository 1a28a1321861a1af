"""Ideal lattices over GF(p), prime/semiprime/maximal predicates, prime radicals.

The prime predicates quantify over all ideals, so they are decided only
against a fully enumerated lattice; over Q everything here refuses with
``NotFiniteField``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .core import LeibnizAlgebra, ideal_closure, is_ideal, leib, subspace_product
from .errors import EnumerationTooLarge, NotAnIdeal, NotFiniteField, NotProper
from .exactla import Subspace, all_subspaces, projective_points, subspace_sum

DEFAULT_GUARD = 10**6
GUARD_ENV = "LEIBQA_GUARD"


@dataclass(frozen=True)
class EnumerationConfig:
    """``guard`` caps ``p**dim``, the number of principal closures an enumeration may need."""

    guard: int = DEFAULT_GUARD

    @classmethod
    def from_env(cls, override: int | None = None) -> "EnumerationConfig":
        if override is not None:
            return cls(override)
        env = os.environ.get(GUARD_ENV)
        return cls(int(env)) if env else cls()


def _sort_key(U: Subspace):
    return (U.dim, U.basis)


@dataclass(frozen=True, eq=False)
class IdealLattice:
    algebra: LeibnizAlgebra
    ideals: tuple              # canonical order: by dimension, then RREF matrix
    generated_by: str          # "PrincipalJoinClosure" | "ExhaustiveSubspaceFilter"
    principal: tuple = ()      # nonzero principal ideals (principal-join route only)

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __contains__(self, U):
        return U in self._index

    @cached_property
    def _index(self):
        return {U: k for k, U in enumerate(self.ideals)}

    @cached_property
    def generators(self) -> tuple:
        """Ideals sufficient for the prime tests: every ideal is a sum of principal ones."""
        return self.principal if self.principal else tuple(U for U in self.ideals if not U.is_zero())

    @cached_property
    def _products(self):
        gens = self.generators
        g = self.algebra
        return {(a, b): subspace_product(g, A, B)
                for a, A in enumerate(gens) for b, B in enumerate(gens)}

    def product(self, a: int, b: int) -> Subspace:
        return self._products[(a, b)]

    @cached_property
    def primes(self) -> tuple:
        return tuple(K for K in self.ideals if not K.is_full() and _prime_against(self, K))

    def require_member(self, U: Subspace):
        if U not in self:
            raise NotAnIdeal(msg=f"{U!r} is not a two-sided ideal of {self.algebra.name}")


def _require_finite(g: LeibnizAlgebra):
    if not g.field.is_finite:
        raise NotFiniteField(f"{g.name} is over {g.field}; ideal enumeration needs GF(p)")


def principal_ideals(g: LeibnizAlgebra) -> list[Subspace]:
    seen = {}
    for v in projective_points(g.field, g.dim):
        U = ideal_closure(g, [v])
        seen.setdefault(U, None)
    return sorted(seen, key=_sort_key)


def enumerate_ideals(g: LeibnizAlgebra, guard: int | None = None) -> IdealLattice:
    """All two-sided ideals: principal closures, then closure under pairwise sums."""
    _require_finite(g)
    cfg = EnumerationConfig.from_env(guard)
    work = g.field.char ** g.dim
    if work > cfg.guard:
        raise EnumerationTooLarge(work, cfg.guard)
    principal = principal_ideals(g)
    found = {g.zero, *principal}
    frontier = list(principal)
    while frontier:
        new = []
        snapshot = list(found)
        for A in frontier:
            for B in snapshot:
                S = subspace_sum(A, B)
                if S not in found:
                    found.add(S)
                    new.append(S)
        frontier = new
    found.add(g.whole)
    return IdealLattice(g, tuple(sorted(found, key=_sort_key)), "PrincipalJoinClosure", tuple(principal))


def enumerate_ideals_exhaustive(g: LeibnizAlgebra) -> IdealLattice:
    """Oracle: filter every subspace of GF(p)^n.  Only sensible for tiny p**n."""
    _require_finite(g)
    ideals = [U for U in all_subspaces(g.field, g.dim) if is_ideal(g, U)]
    return IdealLattice(g, tuple(sorted(ideals, key=_sort_key)), "ExhaustiveSubspaceFilter")


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def _proper(lattice: IdealLattice, K: Subspace):
    lattice.require_member(K)
    if K.is_full():
        raise NotProper(f"{K!r} is the whole algebra")


def _prime_against(lattice: IdealLattice, K: Subspace) -> bool:
    gens = lattice.generators
    outside = [a for a, A in enumerate(gens) if not A <= K]
    return not any(lattice.product(a, b) <= K for a in outside for b in outside)


def is_prime_ideal(g: LeibnizAlgebra, lattice: IdealLattice, K: Subspace) -> bool:
    """Proper K with [h1, h2] ⊆ K forcing h1 ⊆ K or h2 ⊆ K over all ideals h1, h2.

    Checking principal ideals suffices: if h1, h2 ⊄ K pick x ∈ h1 \\ K,
    y ∈ h2 \\ K; then [(x), (y)] ⊆ [h1, h2].
    """
    _proper(lattice, K)
    return _prime_against(lattice, K)


def is_semiprime_ideal(g: LeibnizAlgebra, lattice: IdealLattice, I: Subspace) -> bool:
    _proper(lattice, I)
    gens = lattice.generators
    return not any(lattice.product(a, a) <= I for a, A in enumerate(gens) if not A <= I)


def is_maximal_ideal(g: LeibnizAlgebra, lattice: IdealLattice, J: Subspace) -> bool:
    """No ideal strictly between J and g.  J = g is rejected (returns False)."""
    lattice.require_member(J)
    if J.is_full():
        return False
    return not any(J < U < lattice.algebra.whole for U in lattice.ideals)


def is_prime_algebra(g: LeibnizAlgebra, lattice: IdealLattice) -> bool:
    """[h1, h2] ⊆ Leib(g) forces h1 ⊆ Leib(g) or h2 ⊆ Leib(g)."""
    return _prime_against(lattice, leib(g))


def is_semiprime_algebra(g: LeibnizAlgebra, lattice: IdealLattice) -> bool:
    L = leib(g)
    gens = lattice.generators
    return not any(lattice.product(a, a) <= L for a, A in enumerate(gens) if not A <= L)


def prime_ideals(g: LeibnizAlgebra, lattice: IdealLattice) -> list[Subspace]:
    return list(lattice.primes)


def minimal_primes_over(g: LeibnizAlgebra, lattice: IdealLattice, H: Subspace) -> list[Subspace]:
    lattice.require_member(H)
    over = [P for P in prime_ideals(g, lattice) if H <= P]
    return [P for P in over if not any(Q < P for Q in over)]


def _meet(g: LeibnizAlgebra, spaces: Sequence[Subspace]) -> Subspace:
    out = g.whole
    for P in spaces:
        out = out & P
    return out


def prime_radical(g: LeibnizAlgebra, lattice: IdealLattice, H: Subspace | None = None) -> Subspace:
    """Intersection of the minimal primes over H (default 0); g when there are none."""
    H = g.zero if H is None else H
    return _meet(g, minimal_primes_over(g, lattice, H))


def prime_radical_all(g: LeibnizAlgebra, lattice: IdealLattice, H: Subspace | None = None) -> Subspace:
    """Intersection of every prime containing H; must agree with :func:`prime_radical`."""
    H = g.zero if H is None else H
    lattice.require_member(H)
    return _meet(g, [P for P in prime_ideals(g, lattice) if H <= P])


def lattice_closure_violations(lattice: IdealLattice) -> list[tuple]:
    """Pairs whose sum or intersection falls outside the lattice (should be empty)."""
    bad = []
    ids = lattice.ideals
    for a in range(len(ids)):
        for b in range(a, len(ids)):
            A, B = ids[a], ids[b]
            if subspace_sum(A, B) not in lattice or (A & B) not in lattice:
                bad.append((a, b))
    return bad
