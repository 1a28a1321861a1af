"""Audit the claims attached to each lazy family and print a status table.

Every failed claim is replayed from its stored products before printing.
"""
import argparse
from dataclasses import dataclass

from leibniz_qa.lazy import FAILED, audit_claims, instantiate, replay


@dataclass(frozen=True)
class AuditConfig:
    depths: tuple = (("example2", 12), ("remark-sl2", 6), ("sum-simple", 5))
    seed: int = 0


def run(cfg: AuditConfig) -> None:
    for name, depth in cfg.depths:
        F = instantiate(name)
        print(f"== {name} (depth {depth}, seed {cfg.seed})")
        for r in audit_claims(F, depth, seed=cfg.seed):
            mark = ""
            if r.status == FAILED:
                mark = "  replay ok" if replay(F, r.counterexample) else "  REPLAY MISMATCH"
            print(f"  {r.claim_id:28s} {r.status:26s}{mark}")
            if r.counterexample is not None:
                print(f"      {r.counterexample.detail}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    run(AuditConfig(seed=ap.parse_args().seed))
