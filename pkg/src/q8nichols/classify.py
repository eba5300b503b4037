"""Verdicts on Nichols algebras of diagonal braidings.

The cascade: trivial (all q_ii = 1 and q_ij q_ji = 1), quantum linear space,
rank-two Cartan type by kind of the generalized Cartan matrix, inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Union

from .braidlin import BraidingMatrix
from .cyclo import CycNum, cyc_format, root_order

INFINITE = "infinite"
UNKNOWN = "unknown"
FINITE = "finite"  # finite, exact value not determined

Size = Union[int, str]

TRIVIAL_ALL_ONES = "trivial_all_ones"
QUANTUM_LINEAR_SPACE = "quantum_linear_space"
CARTAN_FINITE = "cartan_finite"
CARTAN_AFFINE = "cartan_affine"
CARTAN_INDEFINITE = "cartan_indefinite"
INCONCLUSIVE = "inconclusive"

# Off-diagonal Cartan entries (a12, a21) of rank two.
FINITE_KINDS = {
    (0, 0): "A1xA1",
    (-1, -1): "A2",
    (-1, -2): "B2",
    (-2, -1): "B2",
    (-1, -3): "G2",
    (-3, -1): "G2",
}
AFFINE_KINDS = {
    (-2, -2): "A1(1)",
    (-1, -4): "A2(2)",
    (-4, -1): "A2(2)",
}


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    type_tag: str
    dim: Size
    gkdim: Size
    cartan: tuple[tuple[int, ...], ...] | None = None
    evidence: tuple[str, ...] = field(default=(), compare=False)

    @property
    def finite_dimensional(self) -> bool:
        return isinstance(self.dim, int) or self.dim == FINITE

    @property
    def finite_gkdim(self) -> bool:
        return isinstance(self.gkdim, int)

    def to_json(self) -> dict:
        return {
            "type": self.type_tag,
            "dim": self.dim,
            "gkdim": self.gkdim,
            "cartan": [list(r) for r in self.cartan] if self.cartan is not None else None,
            "evidence": list(self.evidence),
        }

    @classmethod
    def from_json(cls, data: dict) -> Verdict:
        cartan = data.get("cartan")
        return cls(
            data["type"],
            data["dim"],
            data["gkdim"],
            tuple(tuple(r) for r in cartan) if cartan is not None else None,
            tuple(data.get("evidence", ())),
        )


def classify_rank1(q11: CycNum) -> Verdict:
    if not q11:
        raise ValueError("braiding scalar must be nonzero")
    if q11 == 1:
        return Verdict(TRIVIAL_ALL_ONES, INFINITE, 1, evidence=("q = 1: polynomial algebra in one variable",))
    N = root_order(q11)
    if N is None:
        return Verdict(
            QUANTUM_LINEAR_SPACE,
            INFINITE,
            1,
            evidence=(f"q = {cyc_format(q11)} is not a root of unity: polynomial growth of degree 1",),
        )
    return Verdict(
        QUANTUM_LINEAR_SPACE,
        N,
        0,
        evidence=(f"q = {cyc_format(q11)} has order {N}: truncated polynomial algebra k[x]/(x^{N})",),
    )


def cartan_exponents(Q: BraidingMatrix):
    """a_ij in {0, -1, ..., -(ord q_ii - 1)} with q_ii^a_ij = q_ij q_ji, or None."""
    n = Q.rank
    orders = []
    for i in range(n):
        N = root_order(Q[i, i])
        if N is None or N == 1:
            raise ValueError(f"q_{i + 1}{i + 1} = {cyc_format(Q[i, i])} is not a root of unity of order > 1")
        orders.append(N)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        inv = Q[i, i].inverse()
        for j in range(n):
            if i == j:
                continue
            target = Q[i, j] * Q[j, i]
            p = CycNum.one(Q.m)
            for k in range(orders[i]):
                if p == target:
                    a[i][j] = -k
                    break
                p = p * inv
            else:
                return None
    return tuple(tuple(r) for r in a)


def _pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def classify_diagonal(Q: BraidingMatrix) -> Verdict:
    n = Q.rank
    diag = [Q[i, i] for i in range(n)]
    evidence: list[str] = []
    products = {(i, j): Q[i, j] * Q[j, i] for i, j in _pairs(n)}

    # (a) twist-equivalent to the all-ones matrix
    if all(q == 1 for q in diag) and all(p == 1 for p in products.values()):
        evidence.append("all q_ii = 1 and q_ij q_ji = 1: symmetric algebra of the flip")
        evidence.append(f"polynomial algebra in {n} variables")
        return Verdict(TRIVIAL_ALL_ONES, INFINITE, n, evidence=tuple(evidence))
    evidence.append("not trivial: some q_ii or q_ij q_ji differs from 1")

    # (b) quantum linear space
    if all(p == 1 for p in products.values()):
        evidence.append("q_ij q_ji = 1 for all i != j: quantum linear space")
        orders = [root_order(q) for q in diag]
        free = [i for i, (q, N) in enumerate(zip(diag, orders)) if q == 1 or N is None]
        for i, (q, N) in enumerate(zip(diag, orders)):
            if i in free:
                evidence.append(f"x{i + 1}: q = {cyc_format(q)} gives a polynomial factor (GKdim 1)")
            else:
                evidence.append(f"x{i + 1}: q of order {N} gives a truncated factor of dim {N}")
        if free:
            if len(free) < n:
                evidence.append("mixed factors: GKdim counts the polynomial factors")
            return Verdict(QUANTUM_LINEAR_SPACE, INFINITE, len(free), evidence=tuple(evidence))
        return Verdict(QUANTUM_LINEAR_SPACE, prod(orders), 0, evidence=tuple(evidence))
    evidence.append("not a quantum linear space")

    # (c) Cartan type
    orders = [root_order(q) for q in diag]
    if all(N is not None and N > 1 for N in orders):
        cartan = cartan_exponents(Q)
        if cartan is not None:
            if n > 2:
                raise ClassificationError(f"Cartan-type analysis is implemented for rank <= 2, got rank {n}")
            evidence.append(f"Cartan type with matrix {[list(r) for r in cartan]}")
            pair = (cartan[0][1], cartan[1][0])
            if pair in FINITE_KINDS:
                evidence.append(f"finite kind {FINITE_KINDS[pair]}")
                return Verdict(CARTAN_FINITE, FINITE, 0, cartan, tuple(evidence))
            if pair in AFFINE_KINDS:
                evidence.append(f"affine kind {AFFINE_KINDS[pair]}: GKdim is infinite")
                return Verdict(CARTAN_AFFINE, INFINITE, INFINITE, cartan, tuple(evidence))
            evidence.append("indefinite kind in rank 2: infinite Weyl groupoid, GKdim is infinite")
            return Verdict(CARTAN_INDEFINITE, INFINITE, INFINITE, cartan, tuple(evidence))
        evidence.append("no Cartan exponents: some q_ij q_ji is not a power of q_ii")
    else:
        evidence.append("Cartan test needs every q_ii to be a root of unity of order > 1")
    evidence.append("no rule applies")
    return Verdict(INCONCLUSIVE, UNKNOWN, UNKNOWN, None, tuple(evidence))
