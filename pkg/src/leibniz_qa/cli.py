"""``leibqa``: command-line surface over the algebra kernel.

Exit codes: 0 success, 1 input error, 2 enumeration guard exceeded,
3 an audit found failed claims (the report is still written).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from importlib.resources import files
from pathlib import Path

from . import chains as ch
from . import core, lazy, primes, series
from .errors import EnumerationTooLarge, LeibnizError
from .grammar import (AlgebraFile, format_algebra, format_block, parse_algebra_file,
                      parse_terms)
from .report import Report, digest, subspace_json, subspace_label, vector_json

CORPUS = "@corpus"
EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_FAILED_CLAIMS = 0, 1, 2, 3


class InputError(Exception):
    """Bad command-line input that is not a kernel error."""


def corpus_text() -> str:
    return files("leibniz_qa").joinpath("data/corpus.alg").read_text(encoding="utf-8")


def load_file(path: str) -> AlgebraFile:
    if path == CORPUS:
        return parse_algebra_file(corpus_text())
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra_file(text)


def parse_spec(g: core.LeibnizAlgebra, spec: str) -> list[tuple]:
    """Generator list ``e1,e2+e3`` (or ``0`` / ``g``) as vectors of g."""
    spec = spec.strip()
    if spec == "g":
        return [g.field.unit_vector(g.dim, i) for i in range(g.dim)]
    if spec == "0":
        return []
    out = []
    for item in spec.split(","):
        terms = parse_terms(item, 0, g.dim)
        out.append(g.vec({k: g.field(c) for k, c in terms}))
    return out


def closed_ideal(g, spec: str):
    return core.ideal_closure(g, parse_spec(g, spec))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _algebra(args, ctx, which=0):
    names = args.algebra or []
    if len(names) > 1 and args.command != "dsum":
        raise InputError(f"{args.command} takes one algebra, got -a {' -a '.join(names)}")
    name = names[which] if names else None
    try:
        block = ctx["file"].block(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    ctx["blocks"].append(format_block(block))
    return block.build()


def cmd_check(args, ctx, rep):
    g = _algebra(args, ctx)
    a = g.audit
    fails = [{"side": side, "triple": [f"e{i + 1}" for i in t], "residual": vector_json(g.field, r)}
             for side, t, r in a.failing_triples]
    rep.payload = {"algebra": g.name, "dim": g.dim, "field": str(g.field),
                   "left_ok": a.left_ok, "right_ok": a.right_ok, "convention": a.convention.value,
                   "triples_checked": g.dim ** 3, "failing_triples": fails}
    hint = ctx["file"].block(g.name).convention
    if hint:
        rep.payload["convention_hint"] = hint
        rep.payload["convention_hint_matches"] = _hint_ok(hint, a)
    rep.text += [f"{g.name} over {g.field}, dim {g.dim}",
                 f"left identity:  {'holds' if a.left_ok else 'fails'}",
                 f"right identity: {'holds' if a.right_ok else 'fails'}",
                 f"convention: {a.convention.value}"]
    for f in fails[:5]:
        rep.text.append(f"  {f['side']} fails at ({', '.join(f['triple'])})")


def _hint_ok(hint, audit) -> bool:
    return {"left": audit.left_ok, "right": audit.right_ok, "both": audit.left_ok and audit.right_ok,
            "neither": not (audit.left_ok or audit.right_ok)}[hint]


def cmd_series(args, ctx, rep):
    g = _algebra(args, ctx)
    fn = {"derived": series.derived_series, "lower": series.lower_central_series,
          "upper": series.upper_central_series}[args.kind]
    s = fn(g)
    rep.payload = {"algebra": g.name, "kind": s.kind.value, "dims": s.dims, "stabilized_at": s.stabilized_at,
                   "terms": [subspace_json(t) for t in s.terms]}
    if args.kind == "derived":
        rep.payload["solvable"] = s.limit.is_zero()
        rep.payload["derived_length"] = series.derived_length(g)
    elif args.kind == "lower":
        rep.payload["nilpotent"] = s.limit.is_zero()
        rep.payload["nilpotency_class"] = series.nilpotency_class(g)
    else:
        rep.payload["hypercentral"] = s.limit.is_full()
    rep.text += [f"{s.kind.value} series of {g.name}: dims {s.dims}"]
    rep.text += [f"  term {k}: {subspace_label(t)}" for k, t in enumerate(s.terms)]


def cmd_leib(args, ctx, rep):
    g = _algebra(args, ctx)
    L = core.leib(g)
    rep.payload = {"algebra": g.name, "leib": subspace_json(L)}
    rep.text.append(f"Leib({g.name}) = {subspace_label(L)} (dim {L.dim})")


def cmd_centers(args, ctx, rep):
    g = _algebra(args, ctx)
    c = core.centers(g)
    rep.payload = {"algebra": g.name, "left": subspace_json(c.left), "right": subspace_json(c.right),
                   "center": subspace_json(c.center)}
    rep.text += [f"left center:  {subspace_label(c.left)}", f"right center: {subspace_label(c.right)}",
                 f"center:       {subspace_label(c.center)}"]


def cmd_radical(args, ctx, rep):
    g = _algebra(args, ctx)
    R = series.solvable_radical(g, guard=args.guard)
    rep.payload = {"algebra": g.name, "radical": subspace_json(R), "leib": subspace_json(core.leib(g))}
    rep.text.append(f"Rad({g.name}) = {subspace_label(R)} (dim {R.dim})")


def cmd_semisimple(args, ctx, rep):
    g = _algebra(args, ctx)
    R, L = series.solvable_radical(g, guard=args.guard), core.leib(g)
    rep.payload = {"algebra": g.name, "semisimple": R == L, "radical": subspace_json(R), "leib": subspace_json(L)}
    rep.text.append(f"{g.name} is {'' if R == L else 'not '}semisimple: Rad = {subspace_label(R)}, "
                    f"Leib = {subspace_label(L)}")


def _lattice(g, args):
    return primes.enumerate_ideals(g, guard=args.guard)


def cmd_ideals(args, ctx, rep):
    g = _algebra(args, ctx)
    lat = _lattice(g, args)
    rep.payload = {"algebra": g.name, "count": len(lat), "generated_by": lat.generated_by,
                   "ideals": [subspace_json(U) for U in lat]}
    rep.text.append(f"{len(lat)} two-sided ideals of {g.name}")
    rep.text += [f"  {subspace_label(U)}" for U in lat]


def cmd_primes(args, ctx, rep):
    g = _algebra(args, ctx)
    lat = _lattice(g, args)
    K = closed_ideal(g, args.ideal)
    ps = primes.prime_ideals(g, lat)
    out = {"algebra": g.name, "ideal": subspace_json(K), "ideal_spec": args.ideal,
           "primes": [subspace_json(P) for P in ps],
           "prime_algebra": primes.is_prime_algebra(g, lat),
           "semiprime_algebra": primes.is_semiprime_algebra(g, lat)}
    if K.is_full():
        out.update(is_prime=False, is_semiprime=False, is_maximal=False, proper=False)
    else:
        out.update(is_prime=primes.is_prime_ideal(g, lat, K), is_semiprime=primes.is_semiprime_ideal(g, lat, K),
                   is_maximal=primes.is_maximal_ideal(g, lat, K), proper=True)
    rep.payload = out
    rep.text += [f"ideal {subspace_label(K)} (closure of {args.ideal}): prime={out['is_prime']} "
                 f"semiprime={out['is_semiprime']} maximal={out['is_maximal']}",
                 f"{len(ps)} prime ideals:"] + [f"  {subspace_label(P)}" for P in ps]


def cmd_prime_radical(args, ctx, rep):
    g = _algebra(args, ctx)
    lat = _lattice(g, args)
    H = closed_ideal(g, args.ideal)
    mins = primes.minimal_primes_over(g, lat, H)
    R = primes.prime_radical(g, lat, H)
    R_all = primes.prime_radical_all(g, lat, H)
    rep.payload = {"algebra": g.name, "ideal": subspace_json(H), "ideal_spec": args.ideal,
                   "minimal_primes": [subspace_json(P) for P in mins], "prime_radical": subspace_json(R),
                   "all_primes_agree": R == R_all}
    rep.text += [f"Rad_P({subspace_label(H)}) = {subspace_label(R)}",
                 f"{len(mins)} minimal primes over it"] + [f"  {subspace_label(P)}" for P in mins]


def cmd_chain(args, ctx, rep):
    g = _algebra(args, ctx)
    terms = [closed_ideal(g, s) for s in args.terms]
    spec = ch.validate_chain(ch.chain(g, terms, "cli"))
    w = ch.qa_witness(spec, max_m=args.max_m)
    rep.payload = {
        "algebra": g.name,
        "terms": [{"spec": s, "closure": subspace_json(t)} for s, t in zip(args.terms, terms)],
        "dims": [t.dim for t in terms],
        "stabilization_index": w.stabilization_index,
        "intersection": subspace_json(w.intersection),
        "qa_witness": {"witness_m": w.witness_m, "side": w.side, "left_m": w.left_m, "right_m": w.right_m,
                       "search_depth": w.search_depth},
        "derived_dims": series.derived_series(g).dims,
    }
    rep.text += [f"chain in {g.name}: dims {rep.payload['dims']} (generators closed to ideals)"]
    rep.text += [f"  I_{k} = {subspace_label(t)}" for k, t in enumerate(terms)]
    rep.text.append(f"quasi-Artinian witness m = {w.witness_m} (left {w.left_m}, right {w.right_m})")


def cmd_lazy(args, ctx, rep):
    params = {}
    if args.summand:
        if args.family != "sum-simple":
            raise InputError("--summand only applies to sum-simple")
        params["summand"] = parse_algebra_file(corpus_text()).block(args.summand).build()
        ctx["blocks"].append(format_algebra(params["summand"]))
    if args.max_den is not None:
        params["max_den"] = args.max_den
    F = lazy.instantiate(args.family, params)
    ctx["blocks"].append(f"lazy {F.name}")
    out = {"family": F.name, "index_domain": F.index_description, "depth": args.depth,
           "chain_rules": {k: r.description for k, r in sorted(F.chain_rules.items())}}
    rep.text.append(f"family {F.name}: {F.index_description}")
    if args.audit:
        reports = lazy.audit_claims(F, args.depth, seed=args.seed)
        out["claims"] = [r.to_json(F) for r in reports]
        out["replays"] = {r.claim_id: lazy.replay(F, r.counterexample) for r in reports if r.counterexample}
        failed = [r.claim_id for r in reports if r.status == lazy.FAILED]
        out["failed_claims"] = failed
        if failed:
            rep.status = "failed_claims"
        for r in reports:
            rep.text.append(f"  [{r.status}] {r.claim_id}: {r.statement}")
            if r.counterexample:
                rep.text.append(f"      counterexample: {r.counterexample.detail}")
    else:
        tr = lazy.truncate(F, args.depth)
        out["truncation"] = lazy.snapshot_summary(tr)
        out["escapes"] = [{"x": F.format_index(i), "y": F.format_index(j), "lost": [F.format_index(k) for k in lost]}
                          for i, j, lost in tr.escapes]
        s = out["truncation"]
        rep.text.append(f"snapshot N={args.depth}: dim {s['dim']}, exact={s['exact']} ({s['semantics']})")
        rep.text.append(f"  left_ok={s['left_ok']} right_ok={s['right_ok']} derived dims {s['derived_dims']}")
        if F.name != "remark-sl2":
            ev = lazy.lazy_artinian_report(F, args.depth)
            out["artinian"] = {"status": ev.status, "evidence": ev.evidence, "chain_dims": list(ev.chain_dims)}
            rep.text.append(f"  {ev.evidence}")
        else:
            rep.text.append(f"  {len(tr.escapes)} products escape the grid")
    rep.payload = out


def cmd_quotient(args, ctx, rep):
    g = _algebra(args, ctx)
    I = closed_ideal(g, args.by)
    q = core.quotient(g, I, f"{g.name}_mod")
    Q = q.algebra
    rep.payload = {"algebra": g.name, "ideal": subspace_json(I), "ideal_spec": args.by, "dim": Q.dim,
                   "kept_basis": [f"e{k + 1}" for k in q.map.complement_indices],
                   "left_ok": Q.audit.left_ok, "right_ok": Q.audit.right_ok,
                   "algebra_text": format_algebra(Q)}
    rep.text += [f"{g.name} / {subspace_label(I)}: dim {Q.dim}, basis images of "
                 f"{', '.join(rep.payload['kept_basis']) or '(none)'}", format_algebra(Q).rstrip()]


def cmd_dsum(args, ctx, rep):
    if not args.algebra or len(args.algebra) != 2:
        raise InputError("dsum needs exactly two algebras: -a A -a B")
    a, b = _algebra(args, ctx, 0), _algebra(args, ctx, 1)
    s = core.direct_sum(a, b, f"{a.name}_plus_{b.name}")
    rep.payload = {"summands": [a.name, b.name], "dim": s.dim, "left_ok": s.audit.left_ok,
                   "right_ok": s.audit.right_ok, "algebra_text": format_algebra(s)}
    rep.text += [f"{a.name} ⊕ {b.name}: dim {s.dim}", format_algebra(s).rstrip()]


COMMANDS = {
    "check": cmd_check, "series": cmd_series, "leib": cmd_leib, "centers": cmd_centers,
    "radical": cmd_radical, "semisimple": cmd_semisimple, "ideals": cmd_ideals, "primes": cmd_primes,
    "prime-radical": cmd_prime_radical, "chain": cmd_chain, "lazy": cmd_lazy, "quotient": cmd_quotient,
    "dsum": cmd_dsum,
}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--guard", type=int, default=None,
                        help="cap on p**dim for ideal enumeration (env LEIBQA_GUARD)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="print elapsed time on stderr")

    p = argparse.ArgumentParser(prog="leibqa", description="Exact computations with Leibniz algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file", help=f"algebra file, or {CORPUS} for the bundled corpus")
        sp.add_argument("-a", "--algebra", action="append", help="algebra name inside the file")
        return sp

    with_file("check", "audit both Leibniz identities")
    with_file("series", "derived / lower / upper central series").add_argument(
        "--kind", choices=("derived", "lower", "upper"), default="derived")
    with_file("leib", "span of the squares")
    with_file("centers", "left, right and two-sided centers")
    with_file("radical", "solvable radical")
    with_file("semisimple", "Rad = Leib?")
    with_file("ideals", "enumerate two-sided ideals (GF(p) only)")
    with_file("primes", "prime ideals and tests for one ideal").add_argument("--ideal", default="0")
    with_file("prime-radical", "intersection of minimal primes over an ideal").add_argument("--ideal", default="0")
    sp = with_file("chain", "validate a descending chain and search a quasi-Artinian witness")
    sp.add_argument("--terms", nargs="+", required=True, help="generator lists, e.g. e1,e2")
    sp.add_argument("--max-m", type=int, default=16)
    with_file("quotient", "quotient by the ideal generated by SPEC").add_argument("--by", required=True)
    with_file("dsum", "direct sum of two algebras")

    sp = sub.add_parser("lazy", parents=[common], help="rule-based infinite families")
    sp.add_argument("family", choices=lazy.FAMILIES)
    sp.add_argument("--depth", type=int, default=12)
    sp.add_argument("--audit", action="store_true")
    sp.add_argument("--summand", help="corpus algebra used as the sum-simple summand")
    sp.add_argument("--max-den", type=int, default=None, help="remark-sl2 grid denominator bound")
    return p


def _echo(args) -> dict:
    # the algebra enters the digest through its canonical text, not its file path
    skip = {"format", "timing", "file", "algebra"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def run(argv: list[str]) -> tuple[Report, int, str]:
    """Parse and execute; returns (report, exit code, error message or "")."""
    args = build_parser().parse_args(argv)
    ctx = {"blocks": []}
    rep = Report(args.command, list(argv), "")
    code, err = EXIT_OK, ""
    try:
        if hasattr(args, "file"):
            ctx["file"] = load_file(args.file)
        COMMANDS[args.command](args, ctx, rep)
        if rep.status == "failed_claims":
            code = EXIT_FAILED_CLAIMS
    except EnumerationTooLarge as exc:
        code, err = EXIT_GUARD, str(exc)
    except (LeibnizError, InputError) as exc:
        code, err = EXIT_INPUT, f"{type(exc).__name__}: {exc}"
    if err:
        rep.status = "error"
        rep.payload = {"error": err, "exit_code": code}
        rep.text = [f"error: {err}"]
    rep.inputs_digest = digest(*ctx["blocks"], json.dumps(_echo(args), sort_keys=True))
    return rep, code, err


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    t0 = time.perf_counter()
    rep, code, err = run(argv)
    fmt = "json" if "--format" in argv and argv[argv.index("--format") + 1:][:1] == ["json"] else "text"
    if err:
        print(f"leibqa: {err}", file=sys.stderr)
    if fmt == "json":
        sys.stdout.write(rep.to_json())
    elif not err:
        sys.stdout.write(rep.to_text())
    if "--timing" in argv:
        print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
