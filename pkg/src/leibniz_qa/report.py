"""Deterministic reports.

A report is a JSON object with sorted keys::

    {
      "schema_version": 1,
      "tool": {"name": "leibqa", "version": "..."},
      "command": {"name": ..., "argv": [...]},
      "inputs_digest": "<sha256 hex>",
      "status": "ok" | "failed_claims" | "error",
      "payload": {...}
    }

Scalars render as ``"p/q"`` (lowest terms) over Q and ``"k mod p"`` over
GF(p).  Subspaces render as ``{"dim": d, "basis": [[...], ...]}`` using the
canonical RREF rows.  Timing never enters the report; ``--timing`` prints it
on stderr so two runs stay byte-identical.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field

from .exactla import Subspace

SCHEMA_VERSION = 1
TOOL_NAME = "leibqa"
TOOL_VERSION = "0.1.0"


def subspace_json(U: Subspace) -> dict:
    return {"dim": U.dim, "basis": U.render()}


def subspace_label(U: Subspace) -> str:
    """``span{e1, e4 + 2*e5}`` style label for text output."""
    if U.is_zero():
        return "0"
    F = U.field
    rows = []
    for row in U.basis:
        parts = []
        for k, c in enumerate(row):
            if c == 0:
                continue
            r = F.render(c).replace(f" mod {F.char}", "") if F.char else F.render(c)
            parts.append(f"e{k + 1}" if r == "1" else f"{r}*e{k + 1}")
        rows.append(" + ".join(parts))
    return "span{" + ", ".join(rows) + "}"


def vector_json(F, v) -> list[str]:
    return [F.render(x) for x in v]


def digest(*parts: str) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode("utf-8"))
        h.update(b"\0")
    return h.hexdigest()


@dataclass
class Report:
    command: str
    argv: list
    inputs_digest: str
    payload: dict = dc_field(default_factory=dict)
    status: str = "ok"
    text: list = dc_field(default_factory=list)      # human-ordered lines

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
            "command": {"name": self.command, "argv": list(self.argv)},
            "inputs_digest": self.inputs_digest,
            "status": self.status,
            "payload": self.payload,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        return "\n".join(self.text) + "\n" if self.text else ""
