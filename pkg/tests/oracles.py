"""Independent reference implementations used as test oracles.

Nothing here calls into the package's linear algebra: brackets are expanded
from dict tables with plain loops and subspaces over GF(p) are explicit sets
of vectors.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


def table_dict(n, entries, p=0):
    """1-based entries ``(i, j, {k: c})`` -> {(i, j): {k: c}} with reduced coefficients."""
    t = {}
    for i, j, v in entries:
        t[(i, j)] = {k: (Fraction(c) if not p else int(c) % p) for k, c in v.items()}
    return t


def naive_bracket(t, x, y, p=0):
    """x, y: dicts {index: coeff} (1-based)."""
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in t.get((i, j), {}).items():
                out[k] = out.get(k, 0) + a * b * c
    if p:
        out = {k: v % p for k, v in out.items()}
    return {k: v for k, v in out.items() if v != 0}


def _sub(x, y, p=0):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) - v
    if p:
        out = {k: v % p for k, v in out.items()}
    return {k: v for k, v in out.items() if v != 0}


def naive_identity_failures(n, t, p=0):
    """Lists of failing basis triples (1-based) for the left and right identities."""
    left, right = [], []
    e = lambda i: {i: 1}  # noqa: E731
    br = lambda a, b: naive_bracket(t, a, b, p)  # noqa: E731
    for i, j, k in itertools.product(range(1, n + 1), repeat=3):
        x, y, z = e(i), e(j), e(k)
        lhs = br(x, br(y, z))
        rhs1, rhs2 = br(br(x, y), z), br(y, br(x, z))
        if _sub(_sub(lhs, rhs1, p), rhs2, p):
            left.append((i, j, k))
        lhs = br(br(x, y), z)
        rhs1, rhs2 = br(br(x, z), y), br(x, br(y, z))
        if _sub(_sub(lhs, rhs1, p), rhs2, p):
            right.append((i, j, k))
    return left, right


# --- GF(p) subspaces as explicit vector sets -------------------------------

def all_vectors(p, n):
    return list(itertools.product(range(p), repeat=n))


def brute_span(p, n, vectors):
    vectors = [tuple(v) for v in vectors]
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        w = [0] * n
        for c, v in zip(coeffs, vectors):
            for k in range(n):
                w[k] = (w[k] + c * v[k]) % p
        out.add(tuple(w))
    if not vectors:
        out.add((0,) * n)
    return frozenset(out)


def set_dim(p, S):
    d = 0
    while p ** d < len(S):
        d += 1
    assert p ** d == len(S)
    return d


def set_sum(p, n, A, B):
    return frozenset(tuple((a[k] + b[k]) % p for k in range(n)) for a in A for b in B)


def to_set(U):
    """Package Subspace -> explicit vector set (via its own elements())."""
    return frozenset(U.elements())


def brute_subspaces(p, n):
    """Every subspace of GF(p)^n, grown one vector at a time."""
    zero = frozenset([(0,) * n])
    found = {zero}
    frontier = [zero]
    vecs = all_vectors(p, n)
    while frontier:
        nxt = []
        for S in frontier:
            for v in vecs:
                if v in S:
                    continue
                T = frozenset(set_sum(p, n, S, brute_span(p, n, [v])))
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    return found


def vec_bracket(t, p, n, x, y):
    d = naive_bracket(t, {i + 1: c for i, c in enumerate(x) if c}, {i + 1: c for i, c in enumerate(y) if c}, p)
    return tuple(d.get(k + 1, 0) for k in range(n))


def brute_ideals(p, n, t):
    """Two-sided ideals as vector sets, by checking every vector pair against the basis."""
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    out = []
    for S in brute_subspaces(p, n):
        if all(vec_bracket(t, p, n, b, s) in S and vec_bracket(t, p, n, s, b) in S for s in S for b in basis):
            out.append(S)
    return out
