"""Descending chains of ideals and quasi-Artinian witnesses.

Chains are 0-indexed: ``I_0 ⊇ I_1 ⊇ ...``.  A finite list of terms stands
for the eventually constant chain that repeats its last term; a rule chain
``k -> I_k`` is only ever known up to its exploration depth, so negative
findings about it are bounded evidence, never theorems.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field, replace
from typing import Callable, Sequence

from .core import LeibnizAlgebra, ideal_closure, is_ideal, subspace_product
from .errors import NotAnIdeal, NotDescending
from .exactla import Subspace
from .series import derived_series


@dataclass(frozen=True, eq=False)
class ChainSpec:
    algebra: LeibnizAlgebra
    terms: tuple = ()
    rule: Callable[[int], Subspace] | None = dc_field(default=None, repr=False)
    depth: int = 0
    validated: bool = False
    description: str = ""

    @property
    def is_rule(self) -> bool:
        return self.rule is not None

    def explored(self) -> tuple:
        if self.rule is None:
            return self.terms
        cached = self.__dict__.get("_explored")
        if cached is None:
            cached = tuple(self.rule(k) for k in range(self.depth))
            self.__dict__["_explored"] = cached
        return cached

    def term(self, k: int) -> Subspace | None:
        """I_k, or None when a rule chain has not been explored that far."""
        ex = self.explored()
        if k < len(ex):
            return ex[k]
        return None if self.is_rule else ex[-1]


def chain(g: LeibnizAlgebra, terms: Sequence[Subspace], description: str = "") -> ChainSpec:
    return ChainSpec(g, tuple(terms), description=description)


def rule_chain(g: LeibnizAlgebra, rule: Callable[[int], Subspace], depth: int,
               description: str = "") -> ChainSpec:
    return ChainSpec(g, rule=rule, depth=depth, description=description)


def validate_chain(spec: ChainSpec) -> ChainSpec:
    g = spec.algebra
    terms = spec.explored()
    if not terms:
        raise ValueError("a chain needs at least one term")
    for k, I in enumerate(terms):
        if not is_ideal(g, I):
            raise NotAnIdeal(k)
        if k and not I <= terms[k - 1]:
            raise NotDescending(k)
    return replace(spec, validated=True) if not spec.is_rule else _revalidated(spec)


def _revalidated(spec: ChainSpec) -> ChainSpec:
    out = replace(spec, validated=True)
    out.__dict__["_explored"] = spec.explored()
    return out


def _require_validated(spec: ChainSpec):
    if not spec.validated:
        raise ValueError("chain must be validated first")


def chain_intersection(spec: ChainSpec) -> Subspace:
    """Intersection of the explored terms (the last one, for a descending chain)."""
    _require_validated(spec)
    terms = spec.explored()
    out = terms[0]
    for I in terms[1:]:
        out = out & I
    return out


def stabilization_index(spec: ChainSpec) -> int | None:
    """Smallest k with I_k = I_{k+1} = ... within the explored depth."""
    _require_validated(spec)
    terms = spec.explored()
    if spec.is_rule and (len(terms) < 2 or terms[-1] != terms[-2]):
        return None
    k = len(terms) - 1
    while k > 0 and terms[k - 1] == terms[-1]:
        k -= 1
    return k


@dataclass(frozen=True)
class WitnessReport:
    witness_m: int | None          # smallest m good on both sides
    side: str | None               # "Both", "Left", "Right" or None: strongest side found
    left_m: int | None             # [g^(m), I_m] ⊆ ∩ I_i
    right_m: int | None            # [I_m, g^(m)] ⊆ ∩ I_i
    intersection: Subspace
    stabilization_index: int | None
    search_depth: int


def witness_holds(spec: ChainSpec, m: int, side: str = "Both", intersection: Subspace | None = None) -> bool | None:
    """Re-check the product inclusions for a given m (None if I_m is unexplored)."""
    g = spec.algebra
    cap = chain_intersection(spec) if intersection is None else intersection
    I = spec.term(m)
    if I is None:
        return None
    D = derived_series(g).term(m)
    ok = True
    if side in ("Both", "Left"):
        ok = ok and subspace_product(g, D, I) <= cap
    if side in ("Both", "Right"):
        ok = ok and subspace_product(g, I, D) <= cap
    return ok


def qa_witness(spec: ChainSpec, max_m: int = 16) -> WitnessReport:
    """Smallest m in 0..max_m with [g^(m), I_m] and [I_m, g^(m)] inside ∩ I_i.

    A missing witness means only "none found up to max_m" (or up to the
    explored depth of a rule chain).
    """
    _require_validated(spec)
    g = spec.algebra
    cap = chain_intersection(spec)
    ds = derived_series(g)
    left = right = None
    searched = 0
    for m in range(max_m + 1):
        I = spec.term(m)
        if I is None:
            break
        searched = m
        D = ds.term(m)
        if left is None and subspace_product(g, D, I) <= cap:
            left = m
        if right is None and subspace_product(g, I, D) <= cap:
            right = m
        if left is not None and right is not None:
            break
    both = None if left is None or right is None else max(left, right)
    side = "Both" if both is not None else "Left" if left is not None else "Right" if right is not None else None
    return WitnessReport(both, side, left, right, cap, stabilization_index(spec), searched)


# ---------------------------------------------------------------------------
# Artinian evidence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArtinianReport:
    status: str             # "Artinian" | "NotArtinianUpToDepth"
    evidence: str
    bound: int | None = None
    chain_dims: tuple = ()
    depth: int | None = None

    @property
    def artinian(self) -> bool | None:
        return True if self.status == "Artinian" else None


def artinian_report(g: LeibnizAlgebra, chains: Sequence[ChainSpec] = ()) -> ArtinianReport:
    """Finite dimension settles it; the chains are checked but cannot change the verdict."""
    for c in chains:
        validate_chain(c)
    return ArtinianReport("Artinian",
                          f"dim {g.dim}: a strictly descending chain of ideals has at most {g.dim + 1} terms",
                          bound=g.dim + 1)


def strictly_descending_evidence(spec: ChainSpec, depth: int) -> ArtinianReport | None:
    """Bounded evidence against the Artinian property from an explored rule chain."""
    spec = validate_chain(spec) if not spec.validated else spec
    terms = [t for t in spec.explored() if not t.is_zero()]
    if any(not b < a for a, b in zip(terms, terms[1:])):
        return None
    return ArtinianReport("NotArtinianUpToDepth",
                          f"strictly descending chain of {len(terms)} nonzero ideals exhibited; "
                          f"not Artinian up to depth {depth}",
                          chain_dims=tuple(t.dim for t in terms), depth=depth)


# ---------------------------------------------------------------------------
# random chains (seeded), used by the property checks and the CLI
# ---------------------------------------------------------------------------

def random_vector(g: LeibnizAlgebra, rng: random.Random) -> tuple:
    F = g.field
    if F.char:
        return tuple(rng.randrange(F.char) for _ in range(g.dim))
    return tuple(F(rng.randint(-2, 2)) for _ in range(g.dim))


def random_chain(g: LeibnizAlgebra, rng: random.Random, length: int = 4) -> ChainSpec:
    """Descending chain I_0 = closure(v_0), I_k = I_{k-1} ∩ closure(v_k); sometimes starts at g."""
    terms = [g.whole] if rng.random() < 0.3 else []
    while len(terms) < length:
        J = ideal_closure(g, [random_vector(g, rng) for _ in range(rng.randint(1, 2))])
        terms.append(J if not terms else terms[-1] & J)
    return validate_chain(chain(g, terms, "random"))


def pullback_chain(q, spec: ChainSpec, g: LeibnizAlgebra) -> ChainSpec:
    """Preimages along the projection of ``q`` (a :class:`core.Quotient` of g)."""
    return validate_chain(chain(g, [q.preimage(I) for I in spec.explored()], "pullback"))
