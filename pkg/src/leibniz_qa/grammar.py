"""Line-oriented algebra files.

::

    algebra <ident>
      field Q | GF <odd-prime>
      dim <n>
      convention left|right|both|neither      # optional hint
      bracket e<i> e<j> = <term> { (+|-) <term> }
    end

``term := [<coeff>*]e<k>``, ``coeff := integer | integer/integer``.  A
leading sign is accepted, and ``= 0`` records an explicit zero.  ``#``
starts a comment.  Unlisted pairs bracket to zero.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import LeibnizAlgebra, algebra_entries, build_algebra
from .errors import (AlgebraSyntaxError, DuplicateBracket, DuplicateName,
                     FieldCharTwo, IndexOutOfRange)
from .exactla import QQ, Field, _is_prime

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*")
_TERM = r"(?:(\d+(?:/\d+)?)\s*\*\s*)?e(\d+)"
_SUM = re.compile(rf"\s*([+-]?)\s*{_TERM}((?:\s*[+-]\s*{_TERM})*)\s*")
_NEXT = re.compile(rf"\s*([+-])\s*{_TERM}")
_BRACKET = re.compile(r"bracket\s+e(\d+)\s+e(\d+)\s*=\s*(.*)")
CONVENTIONS = ("left", "right", "both", "neither")


@dataclass(frozen=True)
class AlgebraBlock:
    name: str
    field: Field
    dim: int
    brackets: tuple             # ((i, j, ((k, Fraction), ...)), ...) in file order, k ascending
    convention: str | None = None

    def build(self) -> LeibnizAlgebra:
        entries = [(i, j, {k: self.field(c) for k, c in terms}) for i, j, terms in self.brackets]
        return build_algebra(self.dim, self.field, entries, name=self.name)


@dataclass(frozen=True)
class AlgebraFile:
    blocks: tuple

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.blocks]

    def block(self, name: str | None) -> AlgebraBlock:
        if name is None:
            if len(self.blocks) != 1:
                raise KeyError(f"file holds {len(self.blocks)} algebras ({', '.join(self.names)}); pick one with -a")
            return self.blocks[0]
        for b in self.blocks:
            if b.name == name:
                return b
        raise KeyError(f"no algebra named {name!r}; available: {', '.join(self.names)}")


def parse_terms(text: str, lineno: int = 0, dim: int | None = None) -> tuple:
    """``1/2*e1 - e3`` -> ((1, 1/2), (3, -1)), merged and sorted by index."""
    text = text.strip()
    if text == "0":
        return ()
    m = _SUM.fullmatch(text)
    if not m:
        raise AlgebraSyntaxError(lineno, f"cannot parse linear combination {text!r}")
    raw = [(m.group(1) or "+", m.group(2), m.group(3))]
    raw += [(s, c, k) for s, c, k in _NEXT.findall(m.group(4))]
    acc: dict[int, Fraction] = {}
    for sign, coeff, k in raw:
        k = int(k)
        if dim is not None and not 1 <= k <= dim:
            raise IndexOutOfRange(f"line {lineno}: e{k} outside [1, {dim}]")
        try:
            c = Fraction(coeff) if coeff else Fraction(1)
        except ZeroDivisionError:
            raise AlgebraSyntaxError(lineno, f"zero denominator in {coeff!r}") from None
        acc[k] = acc.get(k, Fraction(0)) + (c if sign == "+" else -c)
    return tuple((k, c) for k, c in sorted(acc.items()) if c != 0)


def _parse_field(words, lineno) -> Field:
    if words == ["Q"]:
        return QQ
    if len(words) == 2 and words[0] == "GF" and words[1].isdigit():
        p = int(words[1])
        if p == 2:
            raise FieldCharTwo(f"line {lineno}: GF 2 has characteristic two")
        if not _is_prime(p):
            raise AlgebraSyntaxError(lineno, f"GF {p}: {p} is not prime")
        return Field(p)
    raise AlgebraSyntaxError(lineno, f"expected 'field Q' or 'field GF <odd-prime>', got {' '.join(['field'] + words)!r}")


def parse_algebra_file(text: str) -> AlgebraFile:
    blocks = []
    names = set()
    cur = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if cur is None:
            if head != "algebra" or len(words) != 2 or not IDENT.fullmatch(words[1]):
                raise AlgebraSyntaxError(lineno, f"expected 'algebra <ident>', got {line!r}")
            if words[1] in names:
                raise DuplicateName(f"line {lineno}: algebra {words[1]!r} defined twice")
            names.add(words[1])
            cur = {"name": words[1], "field": None, "dim": None, "conv": None,
                   "brackets": [], "seen": set(), "line": lineno}
            continue
        if head == "field":
            if cur["field"] is not None or cur["brackets"]:
                raise AlgebraSyntaxError(lineno, "field must appear once, before any bracket")
            cur["field"] = _parse_field(words[1:], lineno)
        elif head == "dim":
            if cur["dim"] is not None or cur["brackets"]:
                raise AlgebraSyntaxError(lineno, "dim must appear once, before any bracket")
            if len(words) != 2 or not words[1].isdigit() or int(words[1]) < 1:
                raise AlgebraSyntaxError(lineno, f"expected 'dim <n>' with n >= 1, got {line!r}")
            cur["dim"] = int(words[1])
        elif head == "convention":
            if len(words) != 2 or words[1].lower() not in CONVENTIONS or cur["conv"] is not None:
                raise AlgebraSyntaxError(lineno, f"expected 'convention {'|'.join(CONVENTIONS)}', got {line!r}")
            cur["conv"] = words[1].lower()
        elif head == "bracket":
            if cur["field"] is None or cur["dim"] is None:
                raise AlgebraSyntaxError(lineno, "field and dim must precede brackets")
            m = _BRACKET.fullmatch(line)
            if not m:
                raise AlgebraSyntaxError(lineno, f"expected 'bracket e<i> e<j> = ...', got {line!r}")
            i, j, n = int(m.group(1)), int(m.group(2)), cur["dim"]
            for idx in (i, j):
                if not 1 <= idx <= n:
                    raise IndexOutOfRange(f"line {lineno}: e{idx} outside [1, {n}]")
            if (i, j) in cur["seen"]:
                raise DuplicateBracket(f"line {lineno}: [e{i}, e{j}] given twice")
            cur["seen"].add((i, j))
            terms = parse_terms(m.group(3), lineno, n)
            F = cur["field"]
            for _, c in terms:
                if F.char and c.denominator % F.char == 0:
                    raise AlgebraSyntaxError(lineno, f"coefficient {c} has no image in {F}")
            cur["brackets"].append((i, j, terms))
        elif head == "end":
            if len(words) != 1:
                raise AlgebraSyntaxError(lineno, f"unexpected text after 'end': {line!r}")
            if cur["field"] is None or cur["dim"] is None:
                raise AlgebraSyntaxError(lineno, f"algebra {cur['name']!r} lacks field or dim")
            blocks.append(AlgebraBlock(cur["name"], cur["field"], cur["dim"],
                                       tuple(cur["brackets"]), cur["conv"]))
            cur = None
        else:
            raise AlgebraSyntaxError(lineno, f"unknown directive {head!r}")
    if cur is not None:
        raise AlgebraSyntaxError(cur["line"], f"algebra {cur['name']!r} is missing 'end'")
    return AlgebraFile(tuple(blocks))


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms) -> str:
    if not terms:
        return "0"
    out = []
    for n, (k, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = f"e{k}" if a == 1 else f"{_fmt_coeff(a)}*e{k}"
        if n == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def format_block(b: AlgebraBlock) -> str:
    lines = [f"algebra {b.name}", f"  field {'Q' if b.field.char == 0 else f'GF {b.field.char}'}",
             f"  dim {b.dim}"]
    if b.convention:
        lines.append(f"  convention {b.convention}")
    lines += [f"  bracket e{i} e{j} = {format_terms(t)}" for i, j, t in b.brackets]
    lines.append("end")
    return "\n".join(lines) + "\n"


def format_algebra_file(f: AlgebraFile) -> str:
    return "\n".join(format_block(b) for b in f.blocks)


def block_from_algebra(g: LeibnizAlgebra, name: str | None = None) -> AlgebraBlock:
    """Canonical block for an algebra; GF(p) coefficients are written as residues."""
    brackets = []
    for i, j, v in algebra_entries(g):
        brackets.append((i, j, tuple((k + 1, Fraction(c)) for k, c in enumerate(v) if c != 0)))
    return AlgebraBlock(name or g.name, g.field, g.dim, tuple(brackets))


def format_algebra(g: LeibnizAlgebra, name: str | None = None) -> str:
    return format_block(block_from_algebra(g, name))
