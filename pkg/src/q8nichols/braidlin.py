"""Braid equation checks and diagonal-type detection for braidings on V (x) V."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cyclo import CycNum, cyc_format, cyc_parse
from .linalg import SparseOp
from .ydmod import BraidOp, CheckResult


@dataclass(frozen=True)
class BraidingMatrix:
    rank: int
    entries: tuple[tuple[CycNum, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rank or any(len(r) != self.rank for r in self.entries):
            raise ValueError(f"braiding matrix must be {self.rank}x{self.rank}")
        if any(not q for r in self.entries for q in r):
            raise ValueError("braiding matrix entries must be nonzero")
        if len({q.m for r in self.entries for q in r}) > 1:
            raise ValueError("braiding matrix entries live in different cyclotomic fields")

    @property
    def m(self) -> int:
        return self.entries[0][0].m

    def __getitem__(self, ij) -> CycNum:
        i, j = ij
        return self.entries[i][j]

    def to_json(self) -> dict:
        return {"rank": self.rank, "entries": [[cyc_format(q) for q in row] for row in self.entries]}


def braiding_matrix(rows: Sequence[Sequence], m: int) -> BraidingMatrix:
    entries = tuple(tuple(q if isinstance(q, CycNum) else CycNum.rational(m, q) for q in row) for row in rows)
    return BraidingMatrix(len(entries), entries)


def braiding_matrix_from_json(data: dict, m: int | None = None) -> BraidingMatrix:
    if "entries" not in data:
        raise ValueError("braiding matrix file is missing 'entries'")
    rows = data["entries"]
    if m is None:
        m = data.get("modulus") or _infer_modulus(rows)
    entries = [[cyc_parse(str(q), m) for q in row] for row in rows]
    rank = data.get("rank", len(entries))
    if rank != len(entries):
        raise ValueError(f"rank {rank} does not match a {len(entries)}-row matrix")
    return braiding_matrix(entries, m)


def _infer_modulus(rows) -> int:
    import re

    mods = {int(mm) for row in rows for q in row for mm in re.findall(r"z(\d+)\^", str(q))}
    if len(mods) > 1:
        raise ValueError(f"entries mix cyclotomic moduli {sorted(mods)}")
    return mods.pop() if mods else 2


def _elementary(c: BraidOp, pos: int, n: int) -> SparseOp:
    """id^(pos) (x) c (x) id^(n - pos - 2) on V^(x n)."""
    d = c.dim
    op = c.op
    if pos:
        op = op.kron_left(d**pos)
    if n - pos - 2:
        op = op.kron_right(d ** (n - pos - 2))
    return op


def check_braid_equation(c: BraidOp) -> CheckResult:
    """(c(x)id)(id(x)c)(c(x)id) == (id(x)c)(c(x)id)(id(x)c); witness is a basis triple."""
    c1 = _elementary(c, 0, 3)
    c2 = _elementary(c, 1, 3)
    lhs = c1 @ c2 @ c1
    rhs = c2 @ c1 @ c2
    j = lhs.first_difference(rhs)
    if j is None:
        return CheckResult(True)
    d = c.dim
    return CheckResult(False, (j // (d * d), (j // d) % d, j % d))


def detect_diagonal(c: BraidOp) -> BraidingMatrix | None:
    """Return (q_ij) if c(b_i (x) b_j) = q_ij b_j (x) b_i for all i, j in the given basis."""
    d = c.dim
    entries = []
    for i in range(d):
        row = []
        for j in range(d):
            col = c.op.cols[i * d + j]
            target = j * d + i
            if len(col) != 1 or target not in col:
                return None
            row.append(col[target])
        entries.append(tuple(row))
    return BraidingMatrix(d, tuple(entries))


def diagonal_braiding(Q: BraidingMatrix) -> BraidOp:
    """The braiding c(b_i (x) b_j) = q_ij b_j (x) b_i."""
    d = Q.rank
    cols = [{j * d + i: Q.entries[i][j]} for i in range(d) for j in range(d)]
    return BraidOp(d, SparseOp(d * d, Q.m, cols))


def flip(d: int, m: int) -> BraidOp:
    return diagonal_braiding(braiding_matrix([[1] * d for _ in range(d)], m))
