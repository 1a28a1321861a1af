"""Ideal lattice census over the GF(p) members of the bundled corpus.

For each algebra: number of ideals, primes, maximal ideals, the prime
radical of 0, and whether the principal-join lattice is closed.
"""
import argparse
from dataclasses import dataclass

from leibniz_qa.cli import corpus_text
from leibniz_qa.core import leib
from leibniz_qa.grammar import parse_algebra_file
from leibniz_qa.primes import (enumerate_ideals, is_maximal_ideal, lattice_closure_violations,
                               prime_ideals, prime_radical)
from leibniz_qa.report import subspace_label


@dataclass(frozen=True)
class CensusConfig:
    max_vectors: int = 5 ** 5


def run(cfg: CensusConfig) -> None:
    print(f"{'algebra':14s} {'p^n':>6s} {'ideals':>6s} {'primes':>6s} {'max':>4s} {'closed':>6s}  Rad_P(0) / Leib")
    for block in parse_algebra_file(corpus_text()).blocks:
        g = block.build()
        if not g.field.is_finite or g.field.char ** g.dim > cfg.max_vectors:
            continue
        lat = enumerate_ideals(g)
        primes = prime_ideals(g, lat)
        maximal = [J for J in lat.ideals if is_maximal_ideal(g, lat, J)]
        closed = not lattice_closure_violations(lat)
        R = prime_radical(g, lat)
        print(f"{g.name:14s} {g.field.char ** g.dim:6d} {len(lat.ideals):6d} {len(primes):6d} "
              f"{len(maximal):4d} {str(closed):>6s}  {subspace_label(R)} / {subspace_label(leib(g))}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vectors", type=int, default=CensusConfig.max_vectors)
    run(CensusConfig(ap.parse_args().max_vectors))
