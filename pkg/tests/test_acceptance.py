"""Acceptance criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary, and then asserts.  Tolerances are exact: every quantity
here is an integer, a subspace or a byte string.
"""
import random

from leibniz_qa.chains import (pullback_chain, qa_witness, random_chain, validate_chain, witness_holds)
from leibniz_qa.cli import corpus_text, run
from leibniz_qa.core import build_algebra, centers, is_ideal, leib, quotient, simplicity, subalgebra
from leibniz_qa.exactla import QQ, Field, Subspace
from leibniz_qa.grammar import parse_algebra_file
from leibniz_qa.lazy import (CONFIRMED, FAILED, audit_claims, instantiate, lazy_artinian_report,
                             lazy_chain, replay, truncate, x)
from leibniz_qa.primes import (enumerate_ideals, enumerate_ideals_exhaustive, is_prime_ideal,
                               prime_radical)
from leibniz_qa.series import (derived_length, derived_series, is_semisimple, is_solvable,
                               lower_central_series, upper_central_series)

from conftest import ACCEPTANCE_LINES, EX1
from oracles import brute_span, naive_identity_failures, set_dim, set_sum, table_dict, to_set

SEED = 20240601


def record(n, title, failures):
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {n}: {title}"
    if failures:
        line += " | " + "; ".join(failures[:4])
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def _corpus():
    return {b.name: b.build() for b in parse_algebra_file(corpus_text()).blocks}


def test_criterion_1_identity_audit_ex1():
    fails = []
    g = build_algebra(6, QQ, EX1, name="ex1")
    left, right = naive_identity_failures(6, table_dict(6, EX1))
    if right:
        fails.append(f"oracle: right identity fails at {right[0]}")
    if (3, 3, 3) not in left:
        fails.append("oracle: (e3,e3,e3) not a left failure")
    if not g.audit.right_ok:
        fails.append("right identity reported failing")
    if g.audit.left_ok:
        fails.append("left identity reported holding")
    reported = [t for s, t, _ in g.audit.failing_triples if s == "left"]
    if (2, 2, 2) not in reported:
        fails.append(f"(e3,e3,e3) not reported; got {reported[:3]}")
    record(1, "ex1: right identity on all 216 triples, left fails at (e3,e3,e3)", fails)


def test_criterion_2_ex1_structure():
    fails = []
    g = build_algebra(6, QQ, EX1, name="ex1")

    def want(label, got, expected):
        if got != expected:
            fails.append(f"{label}: got {got!r}")
    want("Leib", leib(g), g.span_e(1, 4, 5, 6))
    c = centers(g)
    want("Z_left", c.left, g.span_e(1, 6))
    want("Z_right", c.right, g.span_e(1, 4, 5, 6))
    want("derived dims", derived_series(g).dims, [6, 4, 0])
    want("lower dims", lower_central_series(g).dims, [6, 4, 2, 1, 0])
    up = upper_central_series(g)
    want("upper dims", up.dims, [0, 2, 4, 5, 6])
    want("zeta_4 = g", up.terms[4].is_full(), True)
    I, J = g.span_e(1, 2), g.span_e(3, 4, 5, 6)
    want("I two-sided", is_ideal(g, I), True)
    want("g/I table = J table", quotient(g, I).algebra.table == subalgebra(g, J).table, True)
    Ialg = subalgebra(g, I)
    for d in ("lie_simple", "leibniz_simple"):
        v = simplicity(Ialg, d)
        want(f"I simple ({d}) fails", v.holds, False)
        want(f"I simple ({d}) witness", v.witness, Ialg.span_e(1))
    record(2, "ex1 structure suite (Leib, centers, series, I, g/I, simplicity)", fails)


def test_criterion_3_example2_truncation():
    fails = []
    F = instantiate("example2")
    g = truncate(F, 12).algebra
    if not g.audit.right_ok:
        fails.append("right identity fails")
    lefts = [t for s, t, _ in g.audit.failing_triples if s == "left"]
    if g.audit.left_ok or lefts[:1] != [(0, 1, 1)]:
        fails.append(f"left failure not at (e1,e2,e2): {lefts[:1]}")
    if derived_series(g).dims != [12, 9, 0]:
        fails.append(f"derived dims {derived_series(g).dims}")
    spec = validate_chain(lazy_chain(F, "tail", truncation=12))
    dims = [t.dim for t in spec.explored()]
    if any(not b < a for a, b in zip(spec.explored(), spec.explored()[1:])):
        fails.append(f"tail chain not strictly descending: {dims}")
    ev = lazy_artinian_report(F, 12)
    if ev is None or ev.status != "NotArtinianUpToDepth":
        fails.append("no not-Artinian evidence at depth 12")
    w = qa_witness(spec)
    if w.witness_m != 2:
        fails.append(f"qa_witness = {w.witness_m} (left {w.left_m}, right {w.right_m}), expected 2")
    record(3, "example2 N=12: identities, derived dims, tail chain, not-Artinian evidence, witness 2", fails)


def test_criterion_4_solvable_witnesses():
    fails = []
    rng = random.Random(SEED)
    count = 0
    for name, g in sorted(_corpus().items()):
        if not is_solvable(g):
            continue
        d = derived_length(g)
        for k in range(25):
            spec = random_chain(g, rng, length=rng.randint(1, 5))
            w = qa_witness(spec)
            count += 1
            if w.witness_m is None or w.witness_m > d:
                fails.append(f"{name} chain {k}: witness {w.witness_m} vs derived length {d}")
    record(4, f"solvable corpus: witness <= derived length on {count} seeded chains", fails)


def test_criterion_5_pullback_witness():
    fails = []
    rng = random.Random(SEED)
    count = 0
    for name, g in sorted(_corpus().items()):
        if not g.field.is_finite:
            continue
        for J in enumerate_ideals(g):
            if J.is_full():
                continue
            q = quotient(g, J)
            for k in range(10):
                c = random_chain(q.algebra, rng, length=rng.randint(1, 4))
                up = pullback_chain(q, c, g)
                w = qa_witness(up)
                count += 1
                if w.witness_m is None or not witness_holds(c, w.witness_m):
                    fails.append(f"{name} / {J!r} chain {k}: witness {w.witness_m} does not project")
    record(5, f"pulled-back witnesses project to g/J ({count} chains)", fails)


def test_criterion_6_prime_radicals():
    fails = []
    C = _corpus()
    names = [n for n, g in sorted(C.items()) if g.field.char in (3, 5) and g.dim <= 4]
    assert "sl2_gf5" in names
    pairs = 0
    for name in names:
        g = C[name]
        lat = enumerate_ideals(g)
        if g.field.char <= 3 and g.dim <= 4:
            if lat.ideals != enumerate_ideals_exhaustive(g).ideals:
                fails.append(f"{name}: lattice disagrees with the exhaustive filter")
        rad = {H: prime_radical(g, lat, H) for H in lat.ideals}
        for H in lat.ideals:
            R = rad[H]
            if rad[R] != R:
                fails.append(f"{name}: Rad_P not idempotent at {H!r}")
            for K in lat.ideals:
                pairs += 1
                if rad[H & K] != R & rad[K]:
                    fails.append(f"{name}: Rad_P(H∩K) != Rad_P(H)∩Rad_P(K)")
        R0 = rad[g.zero]
        if not R0.is_full():
            q = quotient(g, R0).algebra
            if not prime_radical(q, enumerate_ideals(q)).is_zero():
                fails.append(f"{name}: Rad_P(g/Rad_P(g)) != 0")
    g = C["sl2_gf5"]
    lat = enumerate_ideals(g)
    if lat.ideals != (g.zero, g.whole):
        fails.append("sl2/GF(5) lattice is not {0, g}")
    if not is_prime_ideal(g, lat, g.zero):
        fails.append("0 not prime in sl2/GF(5)")
    if not (prime_radical(g, lat) == g.zero == leib(g)):
        fails.append("Rad_P(sl2/GF(5)) != 0 = Leib")
    if not is_semisimple(g):
        fails.append("sl2/GF(5) not semisimple")
    record(6, f"prime radical identities on {pairs} ideal pairs over {len(names)} algebras; sl2/GF(5)", fails)


def test_criterion_7_remark_sl2_audit():
    fails = []
    F = instantiate("remark-sl2")
    reports = {r.claim_id: r for r in audit_claims(F, 6, seed=SEED)}
    h1 = reports["Hn-ideal"]
    if h1.status != FAILED:
        fails.append(f"H_1 ideal claim: {h1.status}")
    else:
        (u, v, w), = h1.counterexample.products
        if (u, v, w) != (F.e(x("1/2")), F.e("a"), F.e(x("3/2"))):
            fails.append(f"H_1 counterexample is {h1.counterexample.detail}")
    ab = reports["ab-minus-id"]
    if ab.status != CONFIRMED or "50 sampled" not in ab.evidence:
        fails.append(f"[a,b] = -id: {ab.status} ({ab.evidence})")
    for r in reports.values():
        if r.status == FAILED and not replay(F, r.counterexample):
            fails.append(f"{r.claim_id} does not replay")
    record(7, "remark-sl2: H_1 fails at (x_1/2, a), [a,b] = -id on 50 samples, all replays hold", fails)


def test_criterion_8_gf2_linear_algebra():
    fails = []
    rng = random.Random(SEED)
    F2 = Field(2)
    for k in range(500):
        n = rng.randint(1, 4)
        a = [tuple(rng.randrange(2) for _ in range(n)) for _ in range(rng.randint(0, 4))]
        b = [tuple(rng.randrange(2) for _ in range(n)) for _ in range(rng.randint(0, 4))]
        A, B = Subspace.span(F2, n, a), Subspace.span(F2, n, b)
        SA, SB = brute_span(2, n, a), brute_span(2, n, b)
        ok = (to_set(A) == SA and to_set(B) == SB and to_set(A + B) == set_sum(2, n, SA, SB)
              and to_set(A & B) == (SA & SB) and (A <= B) == (SA <= SB) and A.dim == set_dim(2, SA)
              and (A + B).dim + (A & B).dim == A.dim + B.dim)
        if not ok:
            fails.append(f"instance {k}: n={n} a={a} b={b}")
    record(8, "GF(2) subspace operations agree with enumeration on 500 instances", fails)


def _command_matrix():
    C = _corpus()
    cmds = []
    for name, g in sorted(C.items()):
        base = ["@corpus", "-a", name]
        cmds += [["check", *base], ["leib", *base], ["centers", *base], ["radical", *base],
                 ["semisimple", *base], ["quotient", *base, "--by", "e1"],
                 ["chain", *base, "--terms", "g", "e1", "0"], ["dsum", "@corpus", "-a", name, "-a", name]]
        cmds += [["series", *base, "--kind", k] for k in ("derived", "lower", "upper")]
        if g.field.is_finite and g.field.char ** g.dim <= 5 ** 5:
            cmds += [["ideals", *base], ["primes", *base, "--ideal", "0"], ["prime-radical", *base]]
    for fam, depth in (("example2", "12"), ("remark-sl2", "4"), ("sum-simple", "4")):
        cmds += [["lazy", fam, "--depth", depth], ["lazy", fam, "--depth", depth, "--audit"]]
    return [c + ["--format", "json", "--seed", "7"] for c in cmds]


def test_criterion_9_cli_determinism():
    fails = []
    matrix = _command_matrix()
    first = [run(argv)[0].to_json() for argv in matrix]
    second = [run(argv)[0].to_json() for argv in matrix]
    for argv, a, b in zip(matrix, first, second):
        if a != b:
            fails.append(" ".join(argv))
    record(9, f"CLI reports byte-identical across two runs ({len(matrix)} commands)", fails)
