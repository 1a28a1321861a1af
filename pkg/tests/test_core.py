from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leibniz_qa.core import (Convention, build_algebra, center, centers, direct_sum, embed_blocks,
                             ideal_closure, ideal_flags, is_ideal, leib, quotient, simplicity, subalgebra,
                             subspace_product)
from leibniz_qa.errors import (AmbientMismatch, FieldCharTwo, FieldMismatch, IndexOutOfRange,
                               NoConvention, NotAnIdeal)
from leibniz_qa.exactla import GF, QQ, Field

from conftest import EX1
from oracles import naive_identity_failures, table_dict


@pytest.fixture(scope="module")
def ex1():
    return build_algebra(6, QQ, EX1, name="ex1")


def test_ex1_identity_audit_matches_oracle(ex1):
    left, right = naive_identity_failures(6, table_dict(6, EX1))
    assert right == [] and (3, 3, 3) in left
    assert ex1.audit.right_ok and not ex1.audit.left_ok
    assert ex1.convention is Convention.RIGHT
    side, triple, _ = ex1.audit.failing_triples[0]
    assert side == "left" and triple == (2, 2, 2)        # (e3, e3, e3), 0-based
    assert {t for s, t, _ in ex1.audit.failing_triples if s == "left"} <= {
        tuple(i - 1 for i in t) for t in left}


def test_ex1_structure(ex1):
    assert leib(ex1) == ex1.span_e(1, 4, 5, 6)
    c = centers(ex1)
    assert c.left == ex1.span_e(1, 6)
    assert c.right == ex1.span_e(1, 4, 5, 6)
    assert center(ex1) == ex1.span_e(1, 6)
    assert ideal_closure(ex1, [ex1.e(3)]) == ex1.span_e(3, 4, 5, 6)


def test_ex1_ideals_quotient_and_simplicity(ex1):
    I, J = ex1.span_e(1, 2), ex1.span_e(3, 4, 5, 6)
    assert is_ideal(ex1, I) and is_ideal(ex1, J)
    q = quotient(ex1, I)
    assert q.algebra.table == subalgebra(ex1, J).table
    Ialg = subalgebra(ex1, I)
    for d in ("lie_simple", "leibniz_simple"):
        v = simplicity(Ialg, d)
        assert v.holds is False and v.witness == Ialg.span_e(1)


def test_one_sided_ideal_flags():
    g = build_algebra(2, QQ, [(1, 2, {1: 1})])
    U = g.span_e(2)
    f = ideal_flags(g, U)
    # [g, e2] = span{e1} leaves U; [e2, g] = 0 stays
    assert f.right and not f.left and not f.two_sided
    with pytest.raises(NotAnIdeal):
        quotient(g, U)


def test_two_dim_toy():
    g = build_algebra(2, QQ, [(1, 2, {1: 1})])
    assert g.convention is Convention.RIGHT
    assert g.audit.failing_triples[0][:2] == ("left", (0, 1, 1))


def test_build_errors():
    with pytest.raises(FieldCharTwo):
        build_algebra(2, Field(2), [])
    with pytest.raises(IndexOutOfRange):
        build_algebra(2, QQ, [(1, 3, {1: 1})])
    with pytest.raises(AmbientMismatch):
        build_algebra(2, QQ, [(1, 2, (1, 0, 0))])
    neither = build_algebra(2, GF(3), [(1, 1, {2: 1}), (1, 2, {1: 1})])
    assert neither.convention is Convention.NEITHER
    with pytest.raises(NoConvention):
        leib(neither)


def test_direct_sum(corpus):
    a, b = corpus["sl2"], corpus["toy2"]
    s = direct_sum(a, b)
    assert s.dim == 5 and s.convention is Convention.RIGHT
    assert leib(s) == embed_blocks(3, 2, leib(a), leib(b))
    with pytest.raises(FieldMismatch):
        direct_sum(a, corpus["sl2_gf5"])


def test_leib_is_abelian_ideal_and_quotient_is_lie(corpus):
    for g in corpus.values():
        if g.convention is Convention.NEITHER:
            continue
        L = leib(g)
        assert is_ideal(g, L)
        assert subspace_product(g, L, L).is_zero()
        assert quotient(g, L).algebra.is_antisymmetric()


def test_centers_are_annihilators(corpus):
    for g in corpus.values():
        c = centers(g)
        W = g.whole
        assert subspace_product(g, c.left, W).is_zero()
        assert subspace_product(g, W, c.right).is_zero()
        assert c.center == c.left & c.right


# --- random algebras over GF(3) --------------------------------------------------

@st.composite
def gf3_tables(draw):
    n = draw(st.integers(1, 3))
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if draw(st.booleans()):
                entries.append((i, j, {k: draw(st.integers(0, 2)) for k in range(1, n + 1)}))
    return n, entries


@given(gf3_tables())
def test_audit_matches_naive_oracle_gf3(data):
    n, entries = data
    g = build_algebra(n, GF(3), entries)
    left, right = naive_identity_failures(n, table_dict(n, entries, 3), 3)
    assert g.audit.left_ok == (not left)
    assert g.audit.right_ok == (not right)


@given(gf3_tables(), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), max_size=2))
def test_closure_is_smallest_ideal(data, gens):
    n, entries = data
    g = build_algebra(n, GF(3), entries)
    gens = [v[:n] for v in gens]
    U = ideal_closure(g, gens)
    assert is_ideal(g, U)
    assert all(U.contains(v) for v in gens)
    for V in (g.whole, g.span(gens)):
        if is_ideal(g, V) and all(V.contains(v) for v in gens):
            assert U <= V


def test_bracket_bilinear_q(ex1):
    x = ex1.vec({2: Fraction(1, 2), 3: 2})
    y = ex1.vec({2: 3, 3: -1})
    # [x, y] = 3/2 e1 + (-2) e4
    assert ex1.bracket(x, y) == ex1.vec({1: Fraction(3, 2), 4: -2})
