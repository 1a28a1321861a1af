"""Rule-based algebras with a countable basis, their finite snapshots, and claim audits.

Three families are registered:

``example2``
    basis e_1, e_2, ...; [e_1, e_2] = e_1 and [e_i, e_3] = e_{i+1} for i >= 4.
    Truncation at N is the quotient by the tail ideal span{e_i : i > N}
    (exact).
``remark-sl2``
    basis x_alpha plus operator generators a, b, c acting by
    a: x_alpha -> x_{alpha+1}, b: x_alpha -> (alpha-1) x_{alpha-1},
    c: x_alpha -> 2 alpha x_alpha, with [x, v] = v(x), [v, x] = 0 and
    [u, v] = u∘v - v∘u.  The commutator [a, b] is -id, which is not in
    span{a, b, c}; the identity operator is therefore carried as a fourth
    generator ``id`` so the bracket is total.  a(x_{-1}) = x_0, so the index
    domain is all of Q.  Truncation restricts to a finite grid of alphas and
    records every product that escapes it (approximate, not a quotient).
``sum-simple``
    countably many copies S_1, S_2, ... of a finite simple summand
    (default sl2 over Q), bracketed blockwise.  Truncation keeps the first N
    copies (exact).

Audits never repair a statement: each claim comes back Confirmed,
FailedWithCounterexample (with a replayable witness) or BoundedEvidenceOnly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb
from typing import Callable, Hashable, Iterable

from .chains import (ChainSpec, qa_witness, rule_chain,
                     strictly_descending_evidence, validate_chain)
from .core import (Convention, LeibnizAlgebra, build_algebra, is_ideal,
                   quotient, simplicity, subalgebra, subspace_product)
from .errors import BadDepth, BadParams, UnknownFamily, UnknownRule
from .exactla import QQ, Field, Subspace
from .series import derived_series, killing_matrix, subspace_derived_length

FAMILIES = ("example2", "remark-sl2", "sum-simple")


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class LazyElement:
    """Finitely supported ``index -> coefficient`` map with zeros removed."""

    __slots__ = ("_c", "field")

    def __init__(self, coeffs=None, field: Field = QQ):
        self.field = field
        c = {}
        for k, v in (coeffs or {}).items():
            v = field(v)
            if v != 0:
                c[k] = v
        self._c = c

    @classmethod
    def basis(cls, index, field: Field = QQ) -> "LazyElement":
        return cls({index: 1}, field)

    def items(self):
        return self._c.items()

    @property
    def support(self) -> frozenset:
        return frozenset(self._c)

    def coeff(self, index):
        return self._c.get(index, self.field.zero)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, LazyElement):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def _merge(self, other, sign):
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = self.field.reduce(out.get(k, 0) + sign * v)
        return LazyElement(out, self.field)

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s) -> "LazyElement":
        s = self.field(s)
        return LazyElement({k: self.field.reduce(v * s) for k, v in self._c.items()}, self.field)

    __rmul__ = lambda self, s: self.scale(s)  # noqa: E731

    def render(self, fmt: Callable[[Hashable], str] = str, key=None) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, key=key):
            v = self._c[k]
            c = self.field.render(v)
            parts.append(fmt(k) if c == "1" else f"{c}*{fmt(k)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LazyElement({self.render()})"


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LazyChainRule:
    rule_id: str
    description: str
    first: int                                   # first index of the chain, e.g. k = 4
    member: Callable[[int, Hashable], bool]      # (chain index, basis index) -> in term?


@dataclass(frozen=True, eq=False)
class LazyFamily:
    name: str
    field: Field
    index_description: str
    basis_bracket: Callable[[Hashable, Hashable], LazyElement] = dc_field(repr=False)
    format_index: Callable[[Hashable], str] = dc_field(repr=False)
    sort_key: Callable = dc_field(repr=False)
    chain_rules: dict = dc_field(default_factory=dict, repr=False)
    claims: tuple = ()
    params: dict = dc_field(default_factory=dict)

    def e(self, index) -> LazyElement:
        return LazyElement.basis(index, self.field)

    def bracket(self, x: LazyElement, y: LazyElement) -> LazyElement:
        return lazy_bracket(self, x, y)

    def render(self, x: LazyElement) -> str:
        return x.render(self.format_index, self.sort_key)


def lazy_bracket(F: LazyFamily, x: LazyElement, y: LazyElement) -> LazyElement:
    out = LazyElement({}, F.field)
    for i, a in x.items():
        for j, b in y.items():
            r = F.basis_bracket(i, j)
            if r:
                out = out + r.scale(F.field.reduce(a * b))
    return out


# -- example2 ---------------------------------------------------------------

def _ex2_bracket(i: int, j: int) -> LazyElement:
    if (i, j) == (1, 2):
        return LazyElement.basis(1)
    if j == 3 and i >= 4:
        return LazyElement.basis(i + 1)
    return LazyElement()


def _example2(params) -> LazyFamily:
    if params:
        raise BadParams(f"example2 takes no parameters, got {sorted(params)}")
    rules = {"tail": LazyChainRule("tail", "T_k = span{e_i : i >= k}, k >= 4", 4,
                                   lambda k, i: i >= k)}
    claims = ("I-ideal", "J-ideal", "I-simple-lie", "I-simple-leibniz", "quotient-iso-J",
              "J-solvable", "leibniz-left", "leibniz-right", "not-artinian", "quasi-artinian")
    return LazyFamily("example2", QQ, "positive integers i, basis e_i", _ex2_bracket,
                      lambda i: f"e{i}", lambda i: i, rules, claims)


# -- remark-sl2 -------------------------------------------------------------
# operators x_alpha -> p(alpha) x_{alpha+s} are stored as {s: polynomial},
# polynomials as coefficient tuples, lowest degree first.

OPS = ("a", "b", "c", "id")


def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_add(p, q):
    n = max(len(p), len(q))
    return _poly_trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _poly_trim(out)


def _poly_shift(p, s):
    """p(alpha + s)."""
    out = [Fraction(0)] * len(p)
    for d, a in enumerate(p):
        for k in range(d + 1):
            out[k] += a * comb(d, k) * Fraction(s) ** (d - k)
    return _poly_trim(out)


def _poly_eval(p, x):
    return sum((a * x ** d for d, a in enumerate(p)), Fraction(0))


OP_ACTION = {
    "a": {1: (Fraction(1),)},
    "b": {-1: (Fraction(-1), Fraction(1))},
    "c": {0: (Fraction(0), Fraction(2))},
    "id": {0: (Fraction(1),)},
}


def op_compose(u: dict, v: dict) -> dict:
    """u∘v: apply v first."""
    out = {}
    for sv, pv in v.items():
        for su, pu in u.items():
            s = su + sv
            out[s] = _poly_add(out.get(s, ()), _poly_mul(pv, _poly_shift(pu, sv)))
    return {s: p for s, p in out.items() if p}


def op_sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for s, p in v.items():
        out[s] = _poly_add(out.get(s, ()), tuple(-a for a in p))
    return {s: p for s, p in out.items() if p}


def op_from_element(x: LazyElement) -> dict:
    out = {}
    for k, v in x.items():
        for s, p in OP_ACTION[k].items():
            out[s] = _poly_add(out.get(s, ()), tuple(v * a for a in p))
    return {s: p for s, p in out.items() if p}


def op_apply(op: dict, alpha) -> LazyElement:
    alpha = Fraction(alpha)
    out = {}
    for s, p in op.items():
        k = ("x", alpha + s)
        out[k] = out.get(k, 0) + _poly_eval(p, alpha)
    return LazyElement(out)


def op_to_element(op: dict) -> LazyElement:
    """Express an operator in span{a, b, c, id}; ValueError if impossible."""
    out = {}
    for s, p in op.items():
        if s == 1 and len(p) <= 1:
            out["a"] = p[0]
        elif s == -1 and len(p) == 2 and p[0] == -p[1]:
            out["b"] = p[1]
        elif s == 0 and len(p) <= 2:
            out["id"] = p[0]
            if len(p) == 2:
                out["c"] = p[1] / 2
        else:
            raise ValueError(f"operator {op} is not in span{{a, b, c, id}}")
    return LazyElement(out)


def op_commutator(u: str, v: str) -> dict:
    U, V = OP_ACTION[u], OP_ACTION[v]
    return op_sub(op_compose(U, V), op_compose(V, U))


def _sl2_bracket(i, j) -> LazyElement:
    xi, xj = isinstance(i, tuple), isinstance(j, tuple)
    if xi and xj:
        return LazyElement()
    if xi:
        return op_apply(OP_ACTION[j], i[1])
    if xj:
        return LazyElement()
    return op_to_element(op_commutator(i, j))


def x(alpha) -> tuple:
    return ("x", Fraction(alpha))


def _fmt_sl2(k) -> str:
    if isinstance(k, tuple):
        return f"x[{k[1]}]"
    return k


def _key_sl2(k):
    return (0, k[1], "") if isinstance(k, tuple) else (1, Fraction(0), k)


def _remark_sl2(params) -> LazyFamily:
    extra = set(params) - {"max_den"}
    if extra:
        raise BadParams(f"remark-sl2 does not take {sorted(extra)}")
    max_den = params.get("max_den", 2)
    if not isinstance(max_den, int) or not 1 <= max_den <= 12:
        raise BadParams(f"max_den must be an integer in [1, 12], got {max_den!r}")
    rules = {"H": LazyChainRule("H", "H_n = span{x_alpha : alpha < 1/n}, n >= 1", 1,
                                lambda n, k: isinstance(k, tuple) and k[1] < Fraction(1, n))}
    claims = ("H-ideal", "Hn-ideal", "Hn-descending", "ab-minus-id", "ca-2a", "cb-minus-2b",
              "K-closed", "derived-equals-g", "leibniz-left", "leibniz-right")
    return LazyFamily("remark-sl2", QQ,
                      "x_alpha for alpha in Q (alpha = 0 reachable via a(x_{-1})), operators a, b, c, id",
                      _sl2_bracket, _fmt_sl2, _key_sl2, rules, claims, {"max_den": max_den})


# -- sum-simple -------------------------------------------------------------

def sl2(field: Field = QQ, name: str = "sl2") -> LeibnizAlgebra:
    """Basis h, e, f as e1, e2, e3: [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return build_algebra(3, field, [
        (1, 2, {2: 2}), (2, 1, {2: -2}),
        (1, 3, {3: -2}), (3, 1, {3: 2}),
        (2, 3, {1: 1}), (3, 2, {1: -1}),
    ], name=name)


def _sum_simple(params) -> LazyFamily:
    extra = set(params) - {"summand"}
    if extra:
        raise BadParams(f"sum-simple does not take {sorted(extra)}")
    S = params.get("summand") or sl2()
    if not isinstance(S, LeibnizAlgebra):
        raise BadParams("summand must be a LeibnizAlgebra")
    if S.is_abelian() or S.dim == 0:
        raise BadParams(f"summand {S.name} is abelian")
    if S.convention is Convention.NEITHER:
        raise BadParams(f"summand {S.name} satisfies neither Leibniz identity")
    F = S.field
    n = S.dim

    def br(i, j):
        if i[0] != j[0]:
            return LazyElement({}, F)
        v = S.table[i[1] - 1][j[1] - 1]
        return LazyElement({(i[0], k + 1): c for k, c in enumerate(v) if c != 0}, F)

    rules = {
        "tail": LazyChainRule("tail", "T_s = direct sum of S_i for i > s, s >= 1", 1, lambda s, k: k[0] > s),
        "displayed": LazyChainRule("displayed", "J_s = direct sum of S_i for i <= s, s >= 1", 1,
                                   lambda s, k: k[0] <= s),
    }
    claims = ("summand-simple", "displayed-chain-decreasing", "tail-chain-decreasing",
              "not-artinian", "quotient-by-block")
    return LazyFamily("sum-simple", F, f"pairs (i, j): copy i >= 1, summand basis j in 1..{n}",
                      br, lambda k: f"S{k[0]}.e{k[1]}", lambda k: k, rules, claims, {"summand": S})


_BUILDERS = {"example2": _example2, "remark-sl2": _remark_sl2, "sum-simple": _sum_simple}


def instantiate(name: str, params: dict | None = None) -> LazyFamily:
    if name not in _BUILDERS:
        raise UnknownFamily(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    return _BUILDERS[name](dict(params or {}))


# ---------------------------------------------------------------------------
# truncation
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Truncation:
    family: LazyFamily
    N: int
    algebra: LeibnizAlgebra
    indices: tuple            # basis index of snapshot coordinate k
    exact: bool
    semantics: str
    escapes: tuple = ()       # (i, j, escaped indices) for approximate snapshots

    @property
    def position(self) -> dict:
        return {k: p for p, k in enumerate(self.indices)}

    def vector(self, x: LazyElement) -> tuple:
        """Coordinates of x; indices outside the snapshot are dropped."""
        F = self.algebra.field
        v = [F.zero] * len(self.indices)
        pos = self.position
        for k, c in x.items():
            if k in pos:
                v[pos[k]] = c
        return tuple(v)

    def element(self, v) -> LazyElement:
        return LazyElement({k: c for k, c in zip(self.indices, v) if c != 0}, self.algebra.field)

    def span_where(self, pred: Callable[[Hashable], bool]) -> Subspace:
        g = self.algebra
        return g.span(g.field.unit_vector(g.dim, p) for p, k in enumerate(self.indices) if pred(k))


def _snapshot(F: LazyFamily, indices, name, exact, semantics, keep_escapes) -> Truncation:
    pos = {k: p for p, k in enumerate(indices)}
    entries, escapes = [], []
    for i in indices:
        for j in indices:
            r = F.basis_bracket(i, j)
            if not r:
                continue
            out = {pos[k] + 1: c for k, c in r.items() if k in pos}
            lost = tuple(sorted((k for k in r.support if k not in pos), key=F.sort_key))
            if lost and keep_escapes:
                escapes.append((i, j, lost))
            if out:
                entries.append((pos[i] + 1, pos[j] + 1, out))
    g = build_algebra(len(indices), F.field, entries, name=name)
    return Truncation(F, 0, g, tuple(indices), exact, semantics, tuple(escapes))


def _example2_tail_is_ideal(N: int) -> bool:
    # the rule is uniform in i >= 4, so a few tail indices past N suffice
    tail = range(N + 1, N + 5)
    head = range(1, N + 1)
    for t in tail:
        for h in list(head) + list(tail):
            for r in (_ex2_bracket(t, h), _ex2_bracket(h, t)):
                if any(k <= N for k in r.support):
                    return False
    return True


def sl2_grid(N: int, max_den: int) -> list:
    alphas = {Fraction(k, d) for d in range(1, max_den + 1) for k in range(-N * d, N * d + 1)}
    alphas.discard(Fraction(0))
    return sorted(alphas)


def truncate(F: LazyFamily, N: int) -> Truncation:
    if F.name == "example2":
        if not 3 <= N <= 400:
            raise BadDepth(f"example2 truncation needs 3 <= N <= 400, got {N}")
        if not _example2_tail_is_ideal(N):
            raise BadDepth(f"tail span{{e_i : i > {N}}} is not an ideal")
        t = _snapshot(F, list(range(1, N + 1)), f"example2_N{N}", True,
                      "quotient by the tail ideal span{e_i : i > N}", False)
    elif F.name == "remark-sl2":
        if not 1 <= N <= 40:
            raise BadDepth(f"remark-sl2 window needs 1 <= N <= 40, got {N}")
        idx = [x(a) for a in sl2_grid(N, F.params["max_den"])] + list(OPS)
        t = _snapshot(F, idx, f"remark-sl2_N{N}", False,
                      "restriction to the grid |alpha| <= N with bounded denominators; "
                      "escaping products are dropped, the snapshot is not a quotient", True)
    elif F.name == "sum-simple":
        if not 1 <= N <= 60:
            raise BadDepth(f"sum-simple truncation needs 1 <= N <= 60, got {N}")
        n = F.params["summand"].dim
        t = _snapshot(F, [(i, j) for i in range(1, N + 1) for j in range(1, n + 1)],
                      f"sum-simple_N{N}", True, "direct sum of the first N copies", False)
    else:  # pragma: no cover - instantiate() guards the name
        raise UnknownFamily(F.name)
    return Truncation(F, N, t.algebra, t.indices, t.exact, t.semantics, t.escapes)


# ---------------------------------------------------------------------------
# chains
# ---------------------------------------------------------------------------

def chain_rule(F: LazyFamily, rule_id: str) -> LazyChainRule:
    if rule_id not in F.chain_rules:
        raise UnknownRule(f"{F.name} has no chain rule {rule_id!r}; known: {', '.join(F.chain_rules)}")
    return F.chain_rules[rule_id]


def lazy_chain(F: LazyFamily, rule_id: str, depth: int | None = None,
               truncation: int | Truncation | None = None) -> ChainSpec:
    """The rule chain, realised in a snapshot, in generator form.

    Chain index n maps to the family's term ``first + n``.  Without an
    explicit truncation the snapshot is sized so the explored terms are
    nonzero: N = depth + 3 for example2, depth + 1 for sum-simple.
    """
    rule = chain_rule(F, rule_id)
    if isinstance(truncation, Truncation):
        tr = truncation
    else:
        N = truncation
        if N is None:
            d = 20 if depth is None else depth
            N = {"example2": d + 3, "sum-simple": d + 1, "remark-sl2": 4}[F.name]
        tr = truncate(F, N)
    if depth is None:
        depth = {"example2": tr.N - 3, "sum-simple": tr.N, "remark-sl2": 3}[F.name]
    if depth < 1:
        raise BadDepth(f"depth must be positive, got {depth}")
    spec = rule_chain(tr.algebra, lambda n: tr.span_where(lambda k: rule.member(rule.first + n, k)),
                      depth, f"{F.name}:{rule_id} in N={tr.N}")
    spec.__dict__["truncation"] = tr
    return spec


def lazy_artinian_report(F: LazyFamily, depth: int):
    """Exhibit a strictly descending chain in the depth-``depth`` snapshot."""
    if F.name == "example2":
        spec = lazy_chain(F, "tail", truncation=depth, depth=max(depth - 3, 1))
    elif F.name == "sum-simple":
        spec = lazy_chain(F, "tail", truncation=depth + 1, depth=depth)
    else:
        raise UnknownRule("no exact ideal chain is available for remark-sl2 (its H_n are not ideals)")
    return strictly_descending_evidence(spec, depth)


# ---------------------------------------------------------------------------
# claim audits
# ---------------------------------------------------------------------------

CONFIRMED = "Confirmed"
FAILED = "FailedWithCounterexample"
BOUNDED = "BoundedEvidenceOnly"


@dataclass(frozen=True, eq=False)
class Counterexample:
    products: tuple                                 # ((x, y, [x, y]), ...)
    detail: str
    check: Callable[[LazyFamily], bool] = dc_field(repr=False)
    elements: tuple = ()

    def to_json(self, F: LazyFamily) -> dict:
        return {
            "detail": self.detail,
            "elements": [F.render(e) for e in self.elements],
            "products": [{"x": F.render(a), "y": F.render(b), "bracket": F.render(c)}
                         for a, b, c in self.products],
        }


def replay(F: LazyFamily, cx: Counterexample) -> bool:
    """Recompute every recorded product and re-run the violation check."""
    if any(lazy_bracket(F, a, b) != c for a, b, c in cx.products):
        return False
    return cx.check(F)


@dataclass(frozen=True, eq=False)
class ClaimAuditReport:
    claim_id: str
    statement: str
    status: str
    depth: int
    evidence: str = ""
    counterexample: Counterexample | None = None

    def to_json(self, F: LazyFamily) -> dict:
        out = {"claim": self.claim_id, "statement": self.statement, "status": self.status,
               "depth": self.depth, "evidence": self.evidence}
        out["counterexample"] = self.counterexample.to_json(F) if self.counterexample else None
        return out


def _prod(F, a, b):
    return (a, b, lazy_bracket(F, a, b))


def _identity_residual(F, side, a, b, c) -> LazyElement:
    br = lambda u, v: lazy_bracket(F, u, v)  # noqa: E731
    if side == "left":
        return br(a, br(b, c)) - br(br(a, b), c) - br(b, br(a, c))
    return br(br(a, b), c) - br(br(a, c), b) - br(a, br(b, c))


def _identity_counterexample(F, side, a, b, c) -> Counterexample:
    prods = [_prod(F, a, b), _prod(F, b, c), _prod(F, a, c)]
    ab, bc, ac = (p[2] for p in prods)
    prods += [_prod(F, a, bc), _prod(F, ab, c), _prod(F, b, ac), _prod(F, ac, b)]
    res = _identity_residual(F, side, a, b, c)
    return Counterexample(tuple(prods), f"{side} Leibniz identity fails at "
                          f"({F.render(a)}, {F.render(b)}, {F.render(c)}); residual {F.render(res)}",
                          lambda FF: bool(_identity_residual(FF, side, a, b, c)), (a, b, c))


def _audit_example2(F: LazyFamily, depth: int) -> list[ClaimAuditReport]:
    if depth < 6:
        raise BadDepth(f"example2 audits need depth >= 6, got {depth}")
    tr = truncate(F, depth)
    g = tr.algebra
    e = F.e
    I = g.span_e(1, 2)
    J = g.span_e(*range(3, depth + 1))
    out = []

    ok = is_ideal(g, I) and all(
        lazy_bracket(F, e(i), e(k)).support <= {1, 2} and lazy_bracket(F, e(k), e(i)).support <= {1, 2}
        for i in (1, 2) for k in range(1, depth + 5))
    out.append(ClaimAuditReport("I-ideal", "I = span{e1, e2} is a two-sided ideal",
                                CONFIRMED if ok else FAILED, depth,
                                "only [e1, e2] = e1 involves e1 or e2, so the check is exact"))

    ok = is_ideal(g, J) and _example2_tail_is_ideal(depth)
    out.append(ClaimAuditReport("J-ideal", "J = span{e3, e4, ...} is a two-sided ideal",
                                CONFIRMED if ok else FAILED, depth,
                                "the rule sends J-indices to J-indices uniformly in i"))

    Ialg = subalgebra(g, I, "I")
    for definition in ("lie_simple", "leibniz_simple"):
        v = simplicity(Ialg, definition)
        cid = "I-simple-lie" if definition == "lie_simple" else "I-simple-leibniz"
        stmt = f"I is simple ({definition})"
        if v.holds is False:
            cx = _simplicity_counterexample(F, definition)
            out.append(ClaimAuditReport(cid, stmt, FAILED, depth, v.reason, cx))
        else:
            out.append(ClaimAuditReport(cid, stmt, CONFIRMED if v.holds else BOUNDED, depth, v.reason))

    q = quotient(g, I, "g/I")
    Jalg = subalgebra(g, J, "J")
    same = q.algebra.table == Jalg.table
    out.append(ClaimAuditReport("quotient-iso-J", "g/I is isomorphic to J",
                                CONFIRMED if same else FAILED, depth,
                                "quotient table equals J's induced table under f_k <-> e_{k+2}"))

    dl = subspace_derived_length(g, J)
    out.append(ClaimAuditReport("J-solvable", "J is solvable",
                                CONFIRMED if dl is not None else FAILED, depth,
                                f"J^({dl}) = 0; the bracket rule is uniform past the snapshot"))

    out.append(_identity_claim(F, "left", [e(i) for i in range(1, 7)], depth, g.audit.left_ok))
    out.append(_identity_claim(F, "right", [e(i) for i in range(1, 7)], depth, g.audit.right_ok))

    ev = lazy_artinian_report(F, depth)
    out.append(ClaimAuditReport("not-artinian", "g is not Artinian", BOUNDED, depth, ev.evidence))

    spec = validate_chain(lazy_chain(F, "tail", truncation=tr))
    w = qa_witness(spec, max_m=depth)
    out.append(ClaimAuditReport("quasi-artinian", "g is quasi-Artinian", BOUNDED, depth,
                                f"tail chain in the snapshot has witness m = {w.witness_m}"))
    return out


def _simplicity_counterexample(F: LazyFamily, definition: str) -> Counterexample:
    e = F.e
    pairs = [_prod(F, e(i), e(j)) for i in (1, 2) for j in (1, 2)]
    if definition == "lie_simple":
        def check(FF):
            # span{e1} is closed under brackets with e1, e2 on both sides
            return all(lazy_bracket(FF, a, b).support <= {1}
                       for a, b in [(e(1), e(1)), (e(1), e(2)), (e(2), e(1))])
        detail = "span{e1} is a proper nonzero ideal of I"
    else:
        def check(FF):
            sq = [lazy_bracket(FF, e(1), e(1)), lazy_bracket(FF, e(2), e(2)),
                  lazy_bracket(FF, e(1), e(2)) + lazy_bracket(FF, e(2), e(1))]
            allp = [lazy_bracket(FF, e(i), e(j)) for i in (1, 2) for j in (1, 2)]
            support = lambda vs: frozenset().union(*(v.support for v in vs))  # noqa: E731
            return support(sq) == support(allp) == {1}
        detail = "[I, I] = Leib(I) = span{e1}"
    return Counterexample(tuple(pairs), detail, check, (e(1),))


def _identity_claim(F, side, pool, depth, snapshot_ok) -> ClaimAuditReport:
    cid = f"leibniz-{side}"
    stmt = f"the {side} Leibniz identity holds"
    for a in pool:
        for b in pool:
            for c in pool:
                if _identity_residual(F, side, a, b, c):
                    return ClaimAuditReport(cid, stmt, FAILED, depth, "",
                                            _identity_counterexample(F, side, a, b, c))
    if snapshot_ok is False:
        return ClaimAuditReport(cid, stmt, BOUNDED, depth, "fails in the snapshot but not on the sampled pool")
    return ClaimAuditReport(cid, stmt, BOUNDED, depth,
                            f"holds on all {len(pool) ** 3} sampled triples and in the snapshot")


def _first_escape(F, n: int) -> Counterexample:
    """x_{1/(2n)} lies in H_n but [x_{1/(2n)}, a] = x_{1 + 1/(2n)} does not."""
    alpha = Fraction(1, 2 * n)
    xa, a = F.e(x(alpha)), F.e("a")
    member = chain_rule(F, "H").member

    def check(FF):
        prod = lazy_bracket(FF, xa, a)
        return member(n, x(alpha)) and any(not member(n, k) for k in prod.support)
    return Counterexample((_prod(F, xa, a),), f"x[{alpha}] is in H_{n} but [x[{alpha}], a] is not", check, (xa,))


def _audit_remark_sl2(F: LazyFamily, depth: int, seed: int) -> list[ClaimAuditReport]:
    if not 1 <= depth <= 40:
        raise BadDepth(f"remark-sl2 audits need 1 <= depth <= 40, got {depth}")
    rng = random.Random(seed)
    out = []
    e = F.e

    xm1, a = e(x(-1)), e("a")

    def h_escape(FF):
        return x(0) in lazy_bracket(FF, xm1, a).support
    out.append(ClaimAuditReport("H-ideal", "H = span{x_alpha : alpha != 0} is an ideal of g", FAILED, depth,
                                "a(x_{-1}) = x_0 and 0 is excluded from the index set",
                                Counterexample((_prod(F, xm1, a),), "[x[-1], a] = x[0] is not in H",
                                               h_escape, (xm1,))))

    for n in range(1, min(depth, 3) + 1):
        out.append(ClaimAuditReport("Hn-ideal" if n == 1 else f"Hn-ideal[{n}]",
                                    f"H_{n} = span{{x_alpha : alpha < 1/{n}}} is an ideal of g",
                                    FAILED, depth, "right multiplication by a raises alpha by 1",
                                    _first_escape(F, n)))

    member = chain_rule(F, "H").member
    grid = sl2_grid(depth, F.params["max_den"])
    ok = all(member(n, x(al)) <= member(n - 1, x(al)) for n in range(2, depth + 2) for al in grid)
    out.append(ClaimAuditReport("Hn-descending", "H_1 ⊇ H_2 ⊇ ...", CONFIRMED if ok else FAILED, depth,
                                "alpha < 1/n implies alpha < 1/(n-1)"))

    samples = _sample_alphas(rng, 50, depth)
    for cid, (u, v), expect, stmt in [
        ("ab-minus-id", ("a", "b"), LazyElement({"id": -1}), "[a, b] = a∘b - b∘a acts as -id"),
        ("ca-2a", ("c", "a"), LazyElement({"a": 2}), "[c, a] acts as 2a"),
        ("cb-minus-2b", ("c", "b"), LazyElement({"b": -2}), "[c, b] acts as -2b"),
    ]:
        ok, bad = _operator_consistency(F, u, v, expect, samples)
        out.append(ClaimAuditReport(cid, stmt, CONFIRMED if ok else FAILED, depth,
                                    f"checked symbolically and on {len(samples)} sampled alphas"
                                    + ("" if ok else f"; mismatch at alpha = {bad}")))

    ab = _prod(F, e("a"), e("b"))

    def not_closed(FF):
        return "id" in lazy_bracket(FF, e("a"), e("b")).support
    out.append(ClaimAuditReport("K-closed", "K = span{a, b, c} is closed under [u, v] = u∘v - v∘u",
                                FAILED, depth, "",
                                Counterexample((ab,), "[a, b] = -id is not in span{a, b, c}", not_closed)))

    op_pairs = tuple(_prod(F, e(u), e(v)) for u in OPS for v in OPS)
    probe = [x(al) for al in samples[:10]]

    def c_missing(FF):
        # K-components of all basis brackets avoid c; [x, v] and [v, x] land in span{x_alpha}
        ops_ok = all(lazy_bracket(FF, e(u), e(v)).coeff("c") == 0 for u in OPS for v in OPS)
        xs_ok = all(all(isinstance(k, tuple) for k in lazy_bracket(FF, e(p), e(v)).support)
                    and not lazy_bracket(FF, e(v), e(p))
                    for p in probe for v in OPS)
        return ops_ok and xs_ok
    out.append(ClaimAuditReport("derived-equals-g", "g^(m) = g for some positive m", FAILED, depth,
                                "c is not in g^(1) ⊇ g^(m), m >= 1",
                                Counterexample(op_pairs, "no basis bracket has a c-component", c_missing,
                                               (e("c"),))))

    pool = [e(x(al)) for al in (Fraction(1, 2), Fraction(-1), Fraction(2))] + [e(o) for o in OPS]
    out.append(_identity_claim(F, "left", pool, depth, None))
    out.append(_identity_claim(F, "right", pool, depth, None))
    return out


def _sample_alphas(rng: random.Random, count: int, window: int) -> list:
    seen = []
    while len(seen) < count:
        al = Fraction(rng.randint(-4 * window, 4 * window), rng.randint(1, 4))
        if al != 0 and al not in seen:
            seen.append(al)
    return seen


def _operator_consistency(F, u, v, expect: LazyElement, alphas):
    """Compare lazy_bracket(u, v) with direct composition of the rules on x_alpha."""
    br = lazy_bracket(F, F.e(u), F.e(v))
    if br != expect:
        return False, None
    for al in alphas:
        xa = F.e(x(al))
        # right multiplication: [x, w] = w(x); composition u∘v means v first
        uv = lazy_bracket(F, lazy_bracket(F, xa, F.e(v)), F.e(u))
        vu = lazy_bracket(F, lazy_bracket(F, xa, F.e(u)), F.e(v))
        if lazy_bracket(F, xa, br) != uv - vu:
            return False, al
    return True, None


def _audit_sum_simple(F: LazyFamily, depth: int) -> list[ClaimAuditReport]:
    if not 2 <= depth <= 40:
        raise BadDepth(f"sum-simple audits need 2 <= depth <= 40, got {depth}")
    S = F.params["summand"]
    out = []

    if S.field.is_finite:
        from .primes import enumerate_ideals
        v = simplicity(S, "lie_simple", enumerate_ideals(S).ideals)
        status, ev = (CONFIRMED if v.holds else FAILED), v.reason
    elif S.is_antisymmetric():
        K = killing_matrix(S)
        nondeg = S.span(K).dim == S.dim
        status = CONFIRMED if nondeg and S.dim == 3 else BOUNDED
        ev = ("Killing form nondegenerate and dim 3, so semisimple hence simple"
              if status == CONFIRMED else "no exact simplicity test available over Q")
    else:
        status, ev = BOUNDED, "no exact simplicity test available over Q"
    out.append(ClaimAuditReport("summand-simple", f"the summand {S.name} is simple and non-abelian",
                                status, depth, ev))

    disp = chain_rule(F, "displayed").member
    el = F.e((2, 1))

    def not_desc(FF):
        return disp(2, (2, 1)) and not disp(1, (2, 1))
    out.append(ClaimAuditReport("displayed-chain-decreasing", "J_s = S_1 ⊕ ... ⊕ S_s is decreasing",
                                FAILED, depth, "J_1 ⊊ J_2: the displayed sequence increases",
                                Counterexample((), f"{F.render(el)} is in J_2 but not in J_1", not_desc, (el,))))

    tr = truncate(F, depth + 1)
    spec = lazy_chain(F, "tail", truncation=tr, depth=depth)
    terms = spec.explored()
    strict = all(b < a for a, b in zip(terms, terms[1:]))
    ideals = all(is_ideal(tr.algebra, t) for t in terms)
    out.append(ClaimAuditReport("tail-chain-decreasing", "T_s = ⊕_{i>s} S_i is a strictly decreasing chain of ideals",
                                CONFIRMED if strict and ideals else FAILED, depth,
                                f"{len(terms)} terms explored in the N = {depth + 1} snapshot"))

    ev = lazy_artinian_report(F, depth)
    out.append(ClaimAuditReport("not-artinian", "g is not Artinian", BOUNDED, depth, ev.evidence))

    big, small = truncate(F, depth), truncate(F, depth - 1)
    block = big.span_where(lambda k: k[0] == 1)
    q = quotient(big.algebra, block)
    out.append(ClaimAuditReport("quotient-by-block", "g / S_1 ≅ ⊕_{i>1} S_i",
                                CONFIRMED if q.algebra.table == small.algebra.table else FAILED, depth,
                                "quotient table equals the (N-1)-copy table under the index shift"))
    return out


def audit_claims(F: LazyFamily, depth: int, seed: int = 0) -> list[ClaimAuditReport]:
    if F.name == "example2":
        return _audit_example2(F, depth)
    if F.name == "remark-sl2":
        return _audit_remark_sl2(F, depth, seed)
    return _audit_sum_simple(F, depth)


def snapshot_summary(tr: Truncation) -> dict:
    g = tr.algebra
    ds = derived_series(g)
    return {
        "dim": g.dim,
        "exact": tr.exact,
        "semantics": tr.semantics,
        "left_ok": g.audit.left_ok,
        "right_ok": g.audit.right_ok,
        "derived_dims": ds.dims,
        "escapes": len(tr.escapes),
    }


def basis_pairs(F: LazyFamily, indices: Iterable) -> list:
    return [(i, j, F.basis_bracket(i, j)) for i in indices for j in indices]


__all__ = [
    "LazyElement", "LazyFamily", "LazyChainRule", "Truncation", "Counterexample", "ClaimAuditReport",
    "instantiate", "lazy_bracket", "truncate", "lazy_chain", "chain_rule", "audit_claims", "replay",
    "lazy_artinian_report", "sl2", "x", "FAMILIES", "CONFIRMED", "FAILED", "BOUNDED",
    "op_commutator", "op_to_element", "subspace_product",
]
