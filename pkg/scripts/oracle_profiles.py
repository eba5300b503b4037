#!/usr/bin/env python3
"""Tabulate graded dimensions of every rank-2 diagonal braiding over Q(i).

Up to twist a rank-2 braiding matrix is fixed by (q11, q22, q12*q21), so 4^3
triples (modulo swapping the two generators) cover all cases.  Each row puts
the classifier verdict next to the symmetrizer oracle.
"""

from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from q8nichols.braidlin import braiding_matrix, diagonal_braiding
from q8nichols.classify import classify_diagonal
from q8nichols.cyclo import CycNum, cyc_format
from q8nichols.nichols import hilbert_prefix
from q8nichols.report import confront


@dataclass
class ProfileConfig:
    max_degree: int = 5
    budget: int = 10**9


def profiles(cfg: ProfileConfig):
    i = CycNum.zeta(4)
    seen = set()
    for a, b, p in itertools.product(range(4), repeat=3):
        if (b, a, p) in seen:
            continue
        seen.add((a, b, p))
        Q = braiding_matrix([[i**a, i**p], [CycNum.one(4), i**b]], 4)
        v = classify_diagonal(Q)
        hp = hilbert_prefix(diagonal_braiding(Q), cfg.max_degree, cfg.budget)
        yield (a, b, p), v, hp, confront(v, hp)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=ProfileConfig.max_degree)
    cfg = ProfileConfig(ap.parse_args(argv).max_degree)
    bad = 0
    print(f"{'q11':>5} {'q22':>5} {'q12q21':>6}  {'type':<22} {'dim':>8} {'GKdim':>8}  oracle")
    for (a, b, p), v, hp, problems in profiles(cfg):
        q = lambda k: cyc_format(CycNum.zeta(4, k))
        print(f"{q(a):>5} {q(b):>5} {q(p):>6}  {v.type_tag:<22} {v.dim!s:>8} {v.gkdim!s:>8}  {hp.dims}")
        for msg in problems:
            bad += 1
            print(f"    contradiction: {msg}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
