"""Exact scalars over Q and GF(p) and canonical subspace linear algebra.

Vectors are plain tuples of raw field values: ``Fraction`` for the
rationals, ``int`` residues in ``[0, p)`` for prime fields.  A ``Field``
object owns normalisation, inversion and rendering of those raw values, so
the hot loops never pay for a wrapper object per coefficient.  ``Scalar``
is the checked public wrapper used where scalars from different fields
could meet.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import AmbientMismatch, EmptyAmbient, FieldCharTwo, MixedFields


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Q (``char == 0``) or GF(p).

    GF(2) is constructible because the linear-algebra oracles run over it;
    algebra construction calls :meth:`require_odd` to enforce the
    characteristic-not-two hypothesis.
    """

    char: int

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.char}")

    @property
    def kind(self) -> str:
        return "Rationals" if self.char == 0 else "PrimeField"

    @property
    def is_finite(self) -> bool:
        return self.char != 0

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def require_odd(self) -> "Field":
        if self.char == 2:
            raise FieldCharTwo()
        return self

    def __call__(self, value):
        """Coerce an int, Fraction or string like ``"-3/4"`` into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise MixedFields(f"{value!r} is not an element of {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.char == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.char == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.char})")
            return value.numerator * pow(value.denominator, -1, self.char) % self.char
        return int(value) % self.char

    def reduce(self, x):
        return x if self.char == 0 else x % self.char

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.char == 0:
            return 1 / x
        return pow(x, -1, self.char)

    def render(self, x) -> str:
        if self.char == 0:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return f"{x % self.char} mod {self.char}"

    def elements(self):
        if self.char == 0:
            raise ValueError("Q is infinite")
        return range(self.char)

    def vector(self, values: Iterable) -> tuple:
        return tuple(self(v) for v in values)

    def zero_vector(self, n: int) -> tuple:
        return (self.zero,) * n

    def unit_vector(self, n: int, i: int) -> tuple:
        v = [self.zero] * n
        v[i] = self.one
        return tuple(v)

    def __str__(self):
        return "Q" if self.char == 0 else f"GF({self.char})"

    def __repr__(self):
        return f"Field({self.char})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


@dataclass(frozen=True)
class Scalar:
    """A field element that remembers its field.  Arithmetic across fields raises."""

    value: object
    field: Field = QQ

    def __post_init__(self):
        object.__setattr__(self, "value", self.field(self.value))

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other.value
        return self.field(other)

    def __add__(self, other):
        return Scalar(self.field.reduce(self.value + self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.reduce(self.value - self._other(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.reduce(self._other(other) - self.value), self.field)

    def __mul__(self, other):
        return Scalar(self.field.reduce(self.value * self._other(other)), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field.reduce(-self.value), self.field)

    def __truediv__(self, other):
        return Scalar(self.field.reduce(self.value * self.field.inv(self._other(other))), self.field)

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.render(self.value)


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

def _field_of_rows(rows: Sequence[Sequence], field: Field | None) -> Field:
    seen = {x.field for row in rows for x in row if isinstance(x, Scalar)}
    if len(seen) > 1:
        raise MixedFields(f"rows mix fields {sorted(map(str, seen))}")
    if seen:
        (found,) = seen
        if field is not None and field != found:
            raise MixedFields(f"rows are over {found}, expected {field}")
        return found
    return QQ if field is None else field


def _rref_raw(rows: list[list], ncols: int, F: Field) -> tuple[list[tuple], list[int]]:
    """In-place Gauss-Jordan on raw rows.  Returns (nonzero rows, pivots)."""
    p = F.char
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        if p:
            rows[r] = [x * inv % p for x in rows[r]]
        else:
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    if p:
                        rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
                    else:
                        rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in rows[:r]], pivots


@dataclass(frozen=True, eq=False)
class Subspace:
    """Span of the rows of ``basis``, kept in canonical reduced row echelon form.

    Two subspaces are equal iff their RREF matrices are identical, so ``==``
    and ``hash`` are structural.  ``A <= B`` tests containment.
    """

    field: Field
    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = dc_field(default=(), repr=False)

    # construction goes through rref(); this keeps direct calls honest
    @classmethod
    def _from_reduced(cls, field, n, rows, pivots):
        return cls(field, n, tuple(rows), tuple(pivots))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, tuple(field.unit_vector(n, i) for i in range(n)), tuple(range(n)))

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        vectors = [list(field(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        rows, piv = _rref_raw(vectors, n, field)
        return cls._from_reduced(field, n, rows, piv)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def _check(self, other: "Subspace"):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(
                f"{self.field}^{self.ambient_dim} vs {other.field}^{other.ambient_dim}")

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of ``v`` after clearing every pivot column."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        p = self.field.char
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f != 0:
                if p:
                    v = [(a - f * b) % p for a, b in zip(v, row)]
                else:
                    v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        if self.dim > other.dim:
            return False
        return all(other.contains(row) for row in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the RREF basis (the entries at the pivot columns)."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(self.field(v[c]) for c in self.pivots)

    def elements(self):
        """Every vector of a subspace over a finite field."""
        p = self.field.char
        if not p:
            raise ValueError("infinite subspace")
        n = self.ambient_dim
        for coeffs in itertools.product(range(p), repeat=self.dim):
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, row)]
            yield tuple(v)

    def render(self) -> list[list[str]]:
        return [[self.field.render(x) for x in row] for row in self.basis]

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(self.field.render(x) for x in r) + ")" for r in self.basis)
        return f"Subspace({self.field}^{self.ambient_dim}: [{rows}])"


def rref(rows: Sequence[Sequence], field: Field | None = None, ambient_dim: int | None = None) -> Subspace:
    """Canonical subspace spanned by ``rows``.

    Rows may hold :class:`Scalar` values (the field is inferred and must be
    unique) or raw values with an explicit ``field``.
    """
    F = _field_of_rows(rows, field)
    lengths = {len(r) for r in rows}
    if len(lengths) > 1:
        raise AmbientMismatch(f"rows of unequal length {sorted(lengths)}")
    n = lengths.pop() if lengths else ambient_dim
    if not n:
        raise EmptyAmbient("row length is 0")
    if ambient_dim is not None and n != ambient_dim:
        raise AmbientMismatch(f"rows of length {n} in ambient dimension {ambient_dim}")
    return Subspace.span(F, n, rows)


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    A._check(B)
    if B.dim == 0 or B <= A:
        return A
    if A.dim == 0:
        return B
    rows, piv = _rref_raw([list(r) for r in A.basis + B.basis], A.ambient_dim, A.field)
    return Subspace._from_reduced(A.field, A.ambient_dim, rows, piv)


def sum_all(spaces: Iterable[Subspace], field: Field, n: int) -> Subspace:
    rows = [list(r) for S in spaces for r in S.basis]
    out, piv = _rref_raw(rows, n, field)
    return Subspace._from_reduced(field, n, out, piv)


def subspace_intersect(A: Subspace, B: Subspace) -> Subspace:
    """Zassenhaus: reduce [[a, a], [b, 0]]; rows with a zero left half span A ∩ B."""
    A._check(B)
    F, n = A.field, A.ambient_dim
    if A.dim == 0 or B.dim == 0:
        return Subspace.zero(F, n)
    if A <= B:
        return A
    if B <= A:
        return B
    z = F.zero_vector(n)
    rows = [list(a) + list(a) for a in A.basis] + [list(b) + list(z) for b in B.basis]
    red, piv = _rref_raw(rows, 2 * n, F)
    inter = [row[n:] for row, c in zip(red, piv) if c >= n]
    return Subspace.span(F, n, inter)


def subspace_contains(A: Subspace, v: Sequence) -> bool:
    return A.contains(v)


def nullspace(equations: Sequence[Sequence], field: Field, n: int) -> Subspace:
    """Solutions x of ``row · x = 0`` for every row of ``equations``."""
    rows = [list(r) for r in equations]
    red, piv = _rref_raw(rows, n, field) if rows else ([], [])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [field.zero] * n
        x[f] = field.one
        for row, c in zip(red, piv):
            x[c] = field.reduce(-row[f])
        basis.append(x)
    return Subspace.span(field, n, basis)


@dataclass(frozen=True)
class QuotientMap:
    """Coordinates on V/A via the non-pivot standard basis vectors of A's complement.

    ``projection`` is the (codim × n) matrix of the projection, ``section``
    the chosen complement basis, as rows.
    """

    kernel: Subspace

    @cached_property
    def complement_indices(self) -> tuple:
        piv = set(self.kernel.pivots)
        return tuple(c for c in range(self.kernel.ambient_dim) if c not in piv)

    @property
    def field(self) -> Field:
        return self.kernel.field

    @property
    def dim(self) -> int:
        return len(self.complement_indices)

    def project(self, v: Sequence) -> tuple:
        r = self.kernel.reduce(v)
        return tuple(r[c] for c in self.complement_indices)

    def lift(self, w: Sequence) -> tuple:
        n = self.kernel.ambient_dim
        v = [self.field.zero] * n
        for c, x in zip(self.complement_indices, w):
            v[c] = x
        return tuple(v)

    @cached_property
    def section(self) -> tuple:
        n = self.kernel.ambient_dim
        return tuple(self.field.unit_vector(n, c) for c in self.complement_indices)

    @cached_property
    def projection(self) -> tuple:
        n = self.kernel.ambient_dim
        cols = [self.project(self.field.unit_vector(n, j)) for j in range(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(self.dim))

    def image(self, U: Subspace) -> Subspace:
        return Subspace.span(self.field, self.dim, [self.project(u) for u in U.basis])

    def preimage(self, W: Subspace) -> Subspace:
        return subspace_sum(self.kernel, Subspace.span(
            self.field, self.kernel.ambient_dim, [self.lift(w) for w in W.basis]))


def quotient_coordinates(A: Subspace) -> QuotientMap:
    return QuotientMap(A)


# ---------------------------------------------------------------------------
# enumeration helpers (finite fields only)
# ---------------------------------------------------------------------------

def all_vectors(field: Field, n: int):
    return itertools.product(range(field.char), repeat=n)


def projective_points(field: Field, n: int):
    """One nonzero vector per 1-dimensional subspace (leading coefficient 1)."""
    p = field.char
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def all_subspaces(field: Field, n: int):
    """Every subspace of GF(p)^n, generated directly as RREF matrices."""
    p = field.char
    if not p:
        raise ValueError("Q has infinitely many subspaces")
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free_slots = [(r, c) for r, pc in enumerate(pivots)
                          for c in range(pc + 1, n) if c not in pivots]
            for values in itertools.product(range(p), repeat=len(free_slots)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), x in zip(free_slots, values):
                    rows[r][c] = x
                yield Subspace._from_reduced(field, n, [tuple(r) for r in rows], pivots)
