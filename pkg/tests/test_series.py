import pytest

from leibniz_qa.core import Convention, build_algebra, center, is_ideal, leib, quotient
from leibniz_qa.exactla import QQ
from leibniz_qa.lazy import instantiate, truncate
from leibniz_qa.series import (derived_length, derived_series, hypercenter, is_hypercentral,
                               is_nilpotent, is_semisimple, is_solvable, lower_central_series,
                               nilpotency_class, series_terms_are_ideals, solvable_radical,
                               subspace_derived_length, upper_central_series)

from conftest import EX1


@pytest.fixture(scope="module")
def ex1():
    return build_algebra(6, QQ, EX1, name="ex1")


def test_ex1_series(ex1):
    assert derived_series(ex1).dims == [6, 4, 0]
    assert lower_central_series(ex1).dims == [6, 4, 2, 1, 0]
    up = upper_central_series(ex1)
    assert up.dims == [0, 2, 4, 5, 6]
    assert up.terms[4].is_full() and is_hypercentral(ex1)
    assert derived_length(ex1) == 2
    assert nilpotency_class(ex1) == 4


def test_series_report_term_is_constant_past_stabilisation(ex1):
    s = derived_series(ex1)
    assert s.term(10) == s.term(2) == ex1.zero


def test_example2_truncation_series():
    g = truncate(instantiate("example2"), 12).algebra
    assert derived_series(g).dims == [12, 9, 0]
    assert g.audit.right_ok and not g.audit.left_ok
    # [e1, e2] = e1 repeats forever, so the lower central series stalls at span{e1}
    assert not is_nilpotent(g)
    assert lower_central_series(g).limit == g.span_e(1)


def test_sl2_and_toy(corpus):
    sl2 = corpus["sl2"]
    assert derived_series(sl2).dims == [3]
    assert not is_solvable(sl2)
    assert solvable_radical(sl2).is_zero() and is_semisimple(sl2)
    toy = corpus["toy2"]
    assert derived_series(toy).dims == [2, 1, 0]
    assert solvable_radical(toy).is_full() and not is_semisimple(toy)
    assert hypercenter(toy).is_zero()


def test_radical_over_gf_matches_expectations(corpus):
    assert solvable_radical(corpus["sl2_gf5"]).is_zero()
    g = corpus["sl2v_gf5"]
    assert g.convention is Convention.LEFT
    assert solvable_radical(g) == leib(g) == g.span_e(4, 5)
    assert is_semisimple(g)
    assert solvable_radical(corpus["ex1_gf3"]).is_full()


def test_radical_char0_agrees_with_lattice_route(corpus):
    # Q and GF(p) copies with the same integral table: both solvable or both with radical Leib
    for q, p in [("ex1", "ex1_gf5"), ("heis", "heis_gf3"), ("toy2", "toy2_gf3"), ("sl2", "sl2_gf5")]:
        assert solvable_radical(corpus[q]).dim == solvable_radical(corpus[p]).dim


def test_every_series_term_is_an_ideal(corpus):
    for g in corpus.values():
        for fn in (derived_series, lower_central_series, upper_central_series):
            assert series_terms_are_ideals(g, fn(g)), (g.name, fn.__name__)


def test_nilpotent_implies_solvable_and_hypercentral(corpus):
    for g in corpus.values():
        if is_nilpotent(g):
            assert is_solvable(g)
            assert is_hypercentral(g)


def test_upper_central_first_term_is_center(corpus):
    for g in corpus.values():
        assert upper_central_series(g).term(1) == center(g)


def test_derived_length_of_ideal(ex1):
    assert subspace_derived_length(ex1, ex1.span_e(3, 4, 5, 6)) == 2
    assert subspace_derived_length(ex1, ex1.span_e(1, 2)) == 2


def test_radical_is_solvable_ideal_containing_leib(corpus):
    for g in corpus.values():
        if g.field.char and g.field.char ** g.dim > 10**5:
            continue
        R = solvable_radical(g)
        assert is_ideal(g, R)
        assert subspace_derived_length(g, R) is not None
        assert leib(g) <= R
        # g/Rad has zero radical
        assert solvable_radical(quotient(g, R).algebra).is_zero()
