import pytest

from leibniz_qa.core import Convention, algebra_entries, leib, quotient
from leibniz_qa.errors import EnumerationTooLarge, NotAnIdeal, NotFiniteField, NotProper
from leibniz_qa.primes import (GUARD_ENV, EnumerationConfig, enumerate_ideals, enumerate_ideals_exhaustive,
                               is_maximal_ideal, is_prime_algebra, is_prime_ideal, is_semiprime_algebra,
                               is_semiprime_ideal, lattice_closure_violations, minimal_primes_over,
                               prime_ideals, prime_radical, prime_radical_all)
from leibniz_qa.series import is_semisimple

from oracles import brute_ideals, to_set

SMALL_GF = ["sl2a_gf3", "toy2_gf3", "sl2_gf3", "sl2_gf5", "abelian2_gf3", "abelian3_gf5", "heis_gf3", "cyclic3_gf3"]


def _entries(g):
    return [(i, j, {k + 1: c for k, c in enumerate(v) if c}) for i, j, v in algebra_entries(g)]


def _oracle_table(g):
    return {(i, j): v for i, j, v in _entries(g)}


@pytest.mark.parametrize("name", SMALL_GF)
def test_lattice_matches_brute_oracle(corpus, name):
    g = corpus[name]
    if g.field.char ** g.dim > 125:
        pytest.skip("oracle too slow")
    lat = enumerate_ideals(g)
    oracle = set(brute_ideals(g.field.char, g.dim, _oracle_table(g)))
    assert {to_set(U) for U in lat} == oracle


@pytest.mark.parametrize("name", SMALL_GF)
def test_principal_join_agrees_with_subspace_filter(corpus, name):
    g = corpus[name]
    a, b = enumerate_ideals(g), enumerate_ideals_exhaustive(g)
    assert a.ideals == b.ideals
    assert a.generated_by == "PrincipalJoinClosure" and b.generated_by == "ExhaustiveSubspaceFilter"
    assert lattice_closure_violations(a) == []


def test_sl2_gf5():
    from leibniz_qa.lazy import sl2
    from leibniz_qa.exactla import GF
    g = sl2(GF(5))
    lat = enumerate_ideals(g)
    assert lat.ideals == (g.zero, g.whole)
    assert is_prime_ideal(g, lat, g.zero)
    assert prime_radical(g, lat) == g.zero == leib(g)
    assert is_semisimple(g)
    assert is_prime_algebra(g, lat) and is_semiprime_algebra(g, lat)
    assert is_maximal_ideal(g, lat, g.zero) and not is_maximal_ideal(g, lat, g.whole)


def test_heisenberg_primes(corpus):
    g = corpus["heis_gf3"]
    lat = enumerate_ideals(g)
    assert len(lat) == 7
    # every proper K misses some h with [h, h] = 0 (e.g. span{e2, e3} or span{e1, e3}),
    # so nilpotent algebras have no primes and the prime radical is g
    assert prime_ideals(g, lat) == []
    assert prime_radical(g, lat).is_full()
    assert not is_semiprime_ideal(g, lat, g.zero)
    assert is_semiprime_ideal(g, lat, g.span_e(1, 3)) is False


def test_errors(corpus):
    with pytest.raises(NotFiniteField):
        enumerate_ideals(corpus["ex1"])
    with pytest.raises(EnumerationTooLarge):
        enumerate_ideals(corpus["ex1_gf5"], guard=100)
    g = corpus["toy2_gf3"]
    lat = enumerate_ideals(g)
    with pytest.raises(NotProper):
        is_prime_ideal(g, lat, g.whole)
    with pytest.raises(NotAnIdeal):
        is_prime_ideal(g, lat, g.span_e(2))


def test_guard_env(monkeypatch):
    monkeypatch.setenv(GUARD_ENV, "12")
    assert EnumerationConfig.from_env().guard == 12
    assert EnumerationConfig.from_env(50).guard == 50
    monkeypatch.delenv(GUARD_ENV)
    assert EnumerationConfig.from_env().guard == 10**6


def prime_check_naive(lat, K):
    """Definition verbatim: every pair of ideals, not just principal ones."""
    g = lat.algebra
    from leibniz_qa.core import subspace_product
    for A in lat.ideals:
        for B in lat.ideals:
            if subspace_product(g, A, B) <= K and not (A <= K or B <= K):
                return False
    return True


@pytest.mark.parametrize("name", SMALL_GF + ["ex1_gf3"])
def test_principal_reduction_matches_definition(corpus, name):
    g = corpus[name]
    lat = enumerate_ideals(g)
    for K in lat.ideals:
        if not K.is_full():
            assert is_prime_ideal(g, lat, K) == prime_check_naive(lat, K)


@pytest.mark.parametrize("name", SMALL_GF + ["ex1_gf3"])
def test_prime_radical_identities(corpus, name):
    g = corpus[name]
    lat = enumerate_ideals(g)
    rad = {H: prime_radical(g, lat, H) for H in lat.ideals}
    for H in lat.ideals:
        R = rad[H]
        assert H <= R
        assert R == prime_radical_all(g, lat, H)
        assert rad[R] == R                                     # idempotence
        for K in lat.ideals:
            assert rad[H & K] == R & rad[K]
        if not R.is_full():
            q = quotient(g, R)
            ql = enumerate_ideals(q.algebra)
            assert prime_radical(q.algebra, ql).is_zero()


def test_minimal_primes_are_minimal(corpus):
    g = corpus["ex1_gf3"]
    lat = enumerate_ideals(g)
    mins = minimal_primes_over(g, lat, g.zero)
    ps = prime_ideals(g, lat)
    for P in mins:
        assert not any(Q < P for Q in ps)
    assert all(any(M <= P for M in mins) for P in ps)


def test_left_convention_algebra(corpus):
    g = corpus["sl2v_gf5"]
    assert g.convention is Convention.LEFT
    lat = enumerate_ideals(g)
    assert prime_radical(g, lat) == leib(g)


def test_sl2_plus_line(corpus):
    g = corpus["sl2a_gf3"]
    lat = enumerate_ideals(g)
    assert len(lat) == 4
    # K = span{e4} is the only prime: g/K = sl2, while [e4-line, e4-line] = 0 rules out sl2
    assert prime_ideals(g, lat) == [g.span_e(4)]
    assert prime_radical(g, lat) == g.span_e(4)
    assert not is_prime_algebra(g, lat)
