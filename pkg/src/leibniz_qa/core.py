"""Finite-dimensional Leibniz algebras given by structure constants.

Basis indices are 0-based internally; ``build_algebra`` takes the 1-based
indices used by the input grammar.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (AmbientMismatch, DuplicateBracket, FieldMismatch,
                     IndexOutOfRange, NoConvention, NotAnIdeal)
from .exactla import (Field, QuotientMap, Subspace, nullspace,
                      quotient_coordinates, subspace_sum, sum_all)


class Convention(str, enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"
    BOTH = "Both"
    NEITHER = "Neither"


@dataclass(frozen=True)
class IdentityAudit:
    left_ok: bool
    right_ok: bool
    # (side, (i, j, k), residual vector), 0-based indices
    failing_triples: tuple = ()

    @property
    def convention(self) -> Convention:
        if self.left_ok and self.right_ok:
            return Convention.BOTH
        if self.left_ok:
            return Convention.LEFT
        if self.right_ok:
            return Convention.RIGHT
        return Convention.NEITHER


@dataclass(frozen=True, eq=False)
class LeibnizAlgebra:
    """Structure-constant algebra.  ``table[i][j]`` is ``[e_i, e_j]`` as a tuple."""

    name: str
    field: Field
    dim: int
    table: tuple
    audit: IdentityAudit = dc_field(repr=False, default=None)

    @property
    def convention(self) -> Convention:
        return self.audit.convention

    @cached_property
    def _nonzero(self):
        # sparse view: for each i, list of (j, [(k, c_ijk)])
        rows = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                v = self.table[i][j]
                nz = [(k, c) for k, c in enumerate(v) if c != 0]
                if nz:
                    row.append((j, nz))
            rows.append(row)
        return rows

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise AmbientMismatch(f"vectors of length {len(x)}, {len(y)} in a {n}-dim algebra")
        p = self.field.char
        out = [self.field.zero] * n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, nz in self._nonzero[i]:
                yj = y[j]
                if yj == 0:
                    continue
                c = xi * yj
                for k, t in nz:
                    out[k] += c * t
        if p:
            out = [v % p for v in out]
        return tuple(out)

    def e(self, i: int) -> tuple:
        """Basis vector e_i, 1-based."""
        return self.field.unit_vector(self.dim, i - 1)

    def vec(self, coeffs: Mapping[int, object]) -> tuple:
        """Vector from a 1-based ``{index: coefficient}`` mapping."""
        v = [self.field.zero] * self.dim
        for i, c in coeffs.items():
            v[i - 1] = self.field(c)
        return tuple(v)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def span_e(self, *indices: int) -> Subspace:
        """``span{e_i}`` for 1-based indices."""
        return self.span(self.e(i) for i in indices)

    @property
    def whole(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    @property
    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def is_antisymmetric(self) -> bool:
        F = self.field
        return all(F.reduce(a + b) == 0
                   for i in range(self.dim) for j in range(i, self.dim)
                   for a, b in zip(self.table[i][j], self.table[j][i]))

    def is_abelian(self) -> bool:
        return all(c == 0 for row in self.table for v in row for c in v)

    def require_convention(self):
        if self.convention is Convention.NEITHER:
            raise NoConvention(f"{self.name} satisfies neither Leibniz identity")

    def __repr__(self):
        return f"LeibnizAlgebra({self.name!r}, {self.field}, dim={self.dim}, {self.convention.value})"


def _table_from_entries(dim, F, entries):
    table = [[F.zero_vector(dim) for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for i, j, value in entries:
        for idx in (i, j):
            if not 1 <= idx <= dim:
                raise IndexOutOfRange(f"basis index {idx} outside [1, {dim}]")
        if (i, j) in seen:
            raise DuplicateBracket(f"bracket [e{i}, e{j}] given twice")
        seen.add((i, j))
        if isinstance(value, Mapping):
            v = [F.zero] * dim
            for k, c in value.items():
                if not 1 <= k <= dim:
                    raise IndexOutOfRange(f"basis index {k} outside [1, {dim}]")
                v[k - 1] = F.reduce(v[k - 1] + F(c))
            value = v
        elif len(value) != dim:
            raise AmbientMismatch(f"bracket value of length {len(value)} in dimension {dim}")
        table[i - 1][j - 1] = tuple(F(c) for c in value)
    return tuple(tuple(row) for row in table)


def identity_audit(g: LeibnizAlgebra, cap: int = 20) -> IdentityAudit:
    """Check both Leibniz identities on all basis triples.

    left:  [x,[y,z]] = [[x,y],z] + [y,[x,z]]
    right: [[x,y],z] = [[x,z],y] + [x,[y,z]]
    """
    n, F = g.dim, g.field
    T = g.table
    br = g.bracket
    units = [F.unit_vector(n, i) for i in range(n)]
    nz = [[any(v) for v in row] for row in T]
    fails = []
    left_ok = right_ok = True
    p = F.char
    for i in range(n):
        for j in range(n):
            xy = T[i][j]
            for k in range(n):
                yz, xz = T[j][k], T[i][k]
                x_yz = br(units[i], yz) if nz[j][k] else None
                xy_z = br(xy, units[k]) if nz[i][j] else None
                xz_y = br(xz, units[j]) if nz[i][k] else None
                y_xz = br(units[j], xz) if nz[i][k] else None
                if x_yz is None and xy_z is None and xz_y is None and y_xz is None:
                    continue
                if left_ok or len(fails) < cap:
                    res = _combine(n, F, p, x_yz, (xy_z, -1), (y_xz, -1))
                    if any(res):
                        left_ok = False
                        if len(fails) < cap:
                            fails.append(("left", (i, j, k), res))
                if right_ok or len(fails) < cap:
                    res = _combine(n, F, p, xy_z, (xz_y, -1), (x_yz, -1))
                    if any(res):
                        right_ok = False
                        if len(fails) < cap:
                            fails.append(("right", (i, j, k), res))
    return IdentityAudit(left_ok, right_ok, tuple(fails))


def _combine(n, F, p, first, *rest):
    out = list(first) if first is not None else [F.zero] * n
    for v, s in rest:
        if v is not None:
            out = [a + s * b for a, b in zip(out, v)]
    if p:
        out = [a % p for a in out]
    return tuple(out)


def build_algebra(dim: int, field: Field, entries: Iterable = (), name: str = "g",
                  allow_char_two: bool = False) -> LeibnizAlgebra:
    """Algebra from 1-based ``(i, j, value)`` entries; ``value`` is a full vector
    or a 1-based ``{k: coefficient}`` mapping.  Unlisted pairs bracket to zero.

    The identity audit runs here and fixes the stored convention.  Building
    succeeds even when neither identity holds so that audits can report it.
    ``allow_char_two`` exists only for linear-algebra oracles over GF(2).
    """
    if dim < 0:
        raise ValueError("dim must be non-negative")
    if not allow_char_two:
        field.require_odd()
    table = _table_from_entries(dim, field, entries)
    return _from_table(name, field, dim, table)


def _from_table(name, field, dim, table) -> LeibnizAlgebra:
    g = LeibnizAlgebra(name, field, dim, table)
    object.__setattr__(g, "audit", identity_audit(g))
    return g


def algebra_entries(g: LeibnizAlgebra):
    """Nonzero 1-based ``(i, j, vector)`` entries, the inverse of ``build_algebra``."""
    return [(i + 1, j + 1, g.table[i][j])
            for i in range(g.dim) for j in range(g.dim) if any(g.table[i][j])]


def bracket(g: LeibnizAlgebra, x, y) -> tuple:
    return g.bracket(x, y)


def subspace_product(g: LeibnizAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """``[A, B]``: span of brackets of basis pairs."""
    for S in (A, B):
        if S.field != g.field or S.ambient_dim != g.dim:
            raise AmbientMismatch(f"subspace of {S.field}^{S.ambient_dim} in {g!r}")
    vecs = [g.bracket(a, b) for a in A.basis for b in B.basis]
    return g.span(vecs)


@dataclass(frozen=True)
class IdealFlags:
    left: bool
    right: bool

    @property
    def two_sided(self) -> bool:
        return self.left and self.right


def ideal_flags(g: LeibnizAlgebra, U: Subspace) -> IdealFlags:
    """left: [g, U] ⊆ U; right: [U, g] ⊆ U."""
    W = g.whole
    return IdealFlags(subspace_product(g, W, U) <= U, subspace_product(g, U, W) <= U)


def is_ideal(g: LeibnizAlgebra, U: Subspace) -> bool:
    n = g.dim
    F = g.field
    for u in U.basis:
        for i in range(n):
            e = F.unit_vector(n, i)
            if not U.contains(g.bracket(e, u)) or not U.contains(g.bracket(u, e)):
                return False
    return True


def ideal_closure(g: LeibnizAlgebra, vectors: Iterable[Sequence]) -> Subspace:
    """Smallest two-sided ideal containing ``vectors``, as a fixpoint."""
    n, F = g.dim, g.field
    U = g.span(vectors)
    frontier = list(U.basis)
    basis_vecs = [F.unit_vector(n, i) for i in range(n)]
    while frontier:
        new = []
        for u in frontier:
            for e in basis_vecs:
                for w in (g.bracket(e, u), g.bracket(u, e)):
                    if any(w) and not U.contains(w):
                        U = subspace_sum(U, g.span([w]))
                        new.append(w)
        frontier = new
    return U


def leib(g: LeibnizAlgebra) -> Subspace:
    """``Leib(g) = span{[x, x]}``, by polarisation (needs char != 2)."""
    g.require_convention()
    g.field.require_odd()
    F, T = g.field, g.table
    vecs = [T[i][i] for i in range(g.dim)]
    vecs += [tuple(F.reduce(a + b) for a, b in zip(T[i][j], T[j][i]))
             for i in range(g.dim) for j in range(i + 1, g.dim)]
    return g.span(vecs)


@dataclass(frozen=True)
class Centers:
    left: Subspace   # {x : [x, y] = 0 for all y}
    right: Subspace  # {x : [y, x] = 0 for all y}

    @property
    def center(self) -> Subspace:
        return self.left & self.right


def centers(g: LeibnizAlgebra) -> Centers:
    n, T = g.dim, g.table
    # right: sum_j x_j [e_i, e_j] = 0 for each i; coordinate k gives one equation
    right_eqs = [[T[i][j][k] for j in range(n)] for i in range(n) for k in range(n)]
    left_eqs = [[T[j][i][k] for j in range(n)] for i in range(n) for k in range(n)]
    return Centers(nullspace(left_eqs, g.field, n), nullspace(right_eqs, g.field, n))


def center(g: LeibnizAlgebra) -> Subspace:
    return centers(g).center


@dataclass(frozen=True)
class AlgebraMorphismData:
    source_dim: int
    target_dim: int
    matrix: tuple  # target_dim rows × source_dim columns
    kind: str      # "QuotientProjection" | "DirectSumInclusion"


@dataclass(frozen=True, eq=False)
class Quotient:
    """g/I with its projection.  ``map`` does the coordinate bookkeeping."""

    algebra: LeibnizAlgebra
    map: QuotientMap
    morphism: AlgebraMorphismData

    def project(self, v) -> tuple:
        return self.map.project(v)

    def image(self, U: Subspace) -> Subspace:
        return self.map.image(U)

    def preimage(self, W: Subspace) -> Subspace:
        return self.map.preimage(W)


def quotient(g: LeibnizAlgebra, I: Subspace, name: str | None = None) -> Quotient:
    if not is_ideal(g, I):
        raise NotAnIdeal(msg=f"{I!r} is not a two-sided ideal of {g.name}")
    q = quotient_coordinates(I)
    sec = q.section
    m = q.dim
    table = tuple(tuple(q.project(g.bracket(sec[a], sec[b])) for b in range(m)) for a in range(m))
    qa = _from_table(name or f"{g.name}/I", g.field, m, table)
    return Quotient(qa, q, AlgebraMorphismData(g.dim, m, q.projection, "QuotientProjection"))


def subalgebra(g: LeibnizAlgebra, U: Subspace, name: str | None = None) -> LeibnizAlgebra:
    """The bracket restricted to ``U``, in the coordinates of U's RREF basis."""
    B = U.basis
    table = []
    for a in B:
        row = []
        for b in B:
            w = g.bracket(a, b)
            if not U.contains(w):
                raise ValueError(f"{U!r} is not closed under the bracket")
            row.append(U.coordinates(w))
        table.append(tuple(row))
    return _from_table(name or f"{g.name}|U", g.field, U.dim, tuple(table))


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra, name: str | None = None) -> LeibnizAlgebra:
    if a.field != b.field:
        raise FieldMismatch(f"{a.name} is over {a.field}, {b.name} over {b.field}")
    F = a.field
    n = a.dim + b.dim
    z = F.zero_vector(n)
    table = [[z] * n for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            table[i][j] = tuple(a.table[i][j]) + F.zero_vector(b.dim)
    for i in range(b.dim):
        for j in range(b.dim):
            table[a.dim + i][a.dim + j] = F.zero_vector(a.dim) + tuple(b.table[i][j])
    return _from_table(name or f"{a.name}+{b.name}", F, n, tuple(tuple(r) for r in table))


def inclusions(a: LeibnizAlgebra, b: LeibnizAlgebra) -> tuple[AlgebraMorphismData, AlgebraMorphismData]:
    F = a.field
    n = a.dim + b.dim
    ia = tuple(tuple(F.one if r == c else F.zero for c in range(a.dim)) for r in range(n))
    ib = tuple(tuple(F.one if r == a.dim + c else F.zero for c in range(b.dim)) for r in range(n))
    return (AlgebraMorphismData(a.dim, n, ia, "DirectSumInclusion"),
            AlgebraMorphismData(b.dim, n, ib, "DirectSumInclusion"))


def embed_blocks(a_dim: int, b_dim: int, A: Subspace, B: Subspace) -> Subspace:
    """``A ⊕ B`` inside the direct sum of ambient spaces."""
    F = A.field
    rows = [tuple(r) + F.zero_vector(b_dim) for r in A.basis]
    rows += [F.zero_vector(a_dim) + tuple(r) for r in B.basis]
    return Subspace.span(F, a_dim + b_dim, rows)


# ---------------------------------------------------------------------------
# simplicity (the two readings)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicityVerdict:
    definition: str          # "lie_simple" | "leibniz_simple"
    holds: bool | None       # None: no counterexample among candidates, no full lattice
    witness: Subspace | None
    reason: str


def candidate_ideals(g: LeibnizAlgebra) -> list[Subspace]:
    """Cheap ideals to try as simplicity counterexamples when the lattice is unavailable."""
    n = g.dim
    cands = [ideal_closure(g, [g.field.unit_vector(n, i)]) for i in range(n)]
    W = g.whole
    cands.append(subspace_product(g, W, W))
    c = centers(g)
    cands += [c.center]
    cands += [U for U in (c.left, c.right) if is_ideal(g, U)]
    if g.convention is not Convention.NEITHER and g.field.char != 2:
        cands.append(leib(g))
    out = []
    for U in cands:
        if U not in out:
            out.append(U)
    return out


def simplicity(g: LeibnizAlgebra, definition: str, ideals: Sequence[Subspace] | None = None) -> SimplicityVerdict:
    """lie_simple: only ideals 0 and g, and [g, g] != 0.
    leibniz_simple: only ideals 0, Leib(g), g, and [g, g] != Leib(g).

    With ``ideals`` (the full lattice) the verdict is exact; otherwise a
    counterexample is searched among :func:`candidate_ideals`.
    """
    W, Z = g.whole, g.zero
    gg = subspace_product(g, W, W)
    if definition == "lie_simple":
        allowed = {Z, W}
        if gg.is_zero():
            return SimplicityVerdict(definition, False, Z, "[g, g] = 0")
    elif definition == "leibniz_simple":
        L = leib(g)
        allowed = {Z, L, W}
        if gg == L:
            return SimplicityVerdict(definition, False, L, "[g, g] = Leib(g)")
    else:
        raise ValueError(f"unknown simplicity definition {definition!r}")
    pool = list(ideals) if ideals is not None else candidate_ideals(g)
    for U in pool:
        if U not in allowed:
            return SimplicityVerdict(definition, False, U, "proper nonzero ideal outside the allowed set")
    if ideals is not None:
        return SimplicityVerdict(definition, True, None, "checked against the full ideal lattice")
    return SimplicityVerdict(definition, None, None, "no counterexample among candidate ideals")


def ideal_generated_by_basis(g: LeibnizAlgebra, *indices: int) -> Subspace:
    return ideal_closure(g, [g.e(i) for i in indices])


__all__ = [
    "Convention", "IdentityAudit", "LeibnizAlgebra", "IdealFlags", "Centers",
    "AlgebraMorphismData", "Quotient", "SimplicityVerdict",
    "build_algebra", "identity_audit", "bracket", "subspace_product", "ideal_flags",
    "is_ideal", "ideal_closure", "leib", "centers", "center", "quotient", "subalgebra",
    "direct_sum", "inclusions", "embed_blocks", "simplicity", "candidate_ideals",
    "algebra_entries", "sum_all",
]
