"""Exact matrices over Q(zeta_m).

Small dense matrices (representation images) are tuples of row tuples.
Operators on tensor powers use `SparseOp`, a column-sparse square matrix,
since braidings of diagonal type are monomial and stay sparse under products.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .cyclo import CycNum

Matrix = tuple  # tuple[tuple[CycNum, ...], ...]


def identity(n: int, m: int) -> Matrix:
    one, zero = CycNum.one(m), CycNum.zero(m)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def as_matrix(rows: Iterable[Iterable], m: int) -> Matrix:
    out = []
    for row in rows:
        out.append(tuple(v if isinstance(v, CycNum) else CycNum.rational(m, v) for v in row))
    return tuple(out)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    m = a[0][0].m
    zero = CycNum.zero(m)
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def matvec(a: Matrix, v: Sequence[CycNum]) -> tuple:
    if len(a[0]) != len(v):
        raise ValueError(f"dimension mismatch: {len(a[0])}-column matrix applied to length-{len(v)} vector")
    m = a[0][0].m
    zero = CycNum.zero(m)
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def trace(a: Matrix) -> CycNum:
    acc = CycNum.zero(a[0][0].m)
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def rank(rows: Sequence[Sequence[CycNum]]) -> int:
    """Rank by fraction-free (Bareiss) elimination; exact."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    m = work[0][0].m
    ncols = len(work[0])
    prev = CycNum.one(m)
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][col]
        prow = work[r]
        for i in range(r + 1, len(work)):
            row = work[i]
            f = row[col]
            if f:
                for j in range(col + 1, ncols):
                    v = p * row[j]
                    if prow[j]:
                        v = v - f * prow[j]
                    row[j] = v / prev if v else v
            else:
                for j in range(col + 1, ncols):
                    if row[j]:
                        row[j] = p * row[j] / prev
            row[col] = CycNum.zero(m)
        prev = p
        r += 1
        if r == len(work):
            break
    return r


class SparseOp:
    """Square n x n matrix stored as a list of columns {row: value}."""

    __slots__ = ("n", "m", "cols")

    def __init__(self, n: int, m: int, cols):
        self.n = n
        self.m = m
        self.cols = tuple(cols)

    @classmethod
    def identity(cls, n: int, m: int) -> SparseOp:
        one = CycNum.one(m)
        return cls(n, m, ({j: one} for j in range(n)))

    @classmethod
    def zero(cls, n: int, m: int) -> SparseOp:
        return cls(n, m, ({} for _ in range(n)))

    @classmethod
    def from_dense(cls, rows: Matrix) -> SparseOp:
        n = len(rows)
        m = rows[0][0].m
        cols = [{i: rows[i][j] for i in range(n) if rows[i][j]} for j in range(n)]
        return cls(n, m, cols)

    def to_dense(self) -> Matrix:
        zero = CycNum.zero(self.m)
        rows = [[zero] * self.n for _ in range(self.n)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return tuple(tuple(r) for r in rows)

    def __getitem__(self, ij) -> CycNum:
        i, j = ij
        return self.cols[j].get(i, CycNum.zero(self.m))

    def apply_basis(self, j: int) -> dict:
        return self.cols[j]

    def _check(self, other: SparseOp):
        if self.n != other.n or self.m != other.m:
            raise ValueError("operator shape or field mismatch")

    def __matmul__(self, other: SparseOp) -> SparseOp:
        self._check(other)
        out = []
        for bcol in other.cols:
            acc: dict = {}
            for k, bv in bcol.items():
                for i, av in self.cols[k].items():
                    v = acc.get(i)
                    acc[i] = av * bv if v is None else v + av * bv
            out.append({i: v for i, v in acc.items() if v})
        return SparseOp(self.n, self.m, out)

    def __add__(self, other: SparseOp) -> SparseOp:
        self._check(other)
        out = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            for i, v in b.items():
                w = col.get(i)
                col[i] = v if w is None else w + v
            out.append({i: v for i, v in col.items() if v})
        return SparseOp(self.n, self.m, out)

    def __eq__(self, other):
        if not isinstance(other, SparseOp):
            return NotImplemented
        return self.n == other.n and self.m == other.m and self.cols == other.cols

    __hash__ = None

    def first_difference(self, other: SparseOp):
        """Index of the first column where self and other differ, or None."""
        self._check(other)
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                return j
        return None

    def kron_left(self, d: int) -> SparseOp:
        """I_d (x) self."""
        n = self.n
        cols = []
        for a in range(d):
            off = a * n
            for col in self.cols:
                cols.append({off + i: v for i, v in col.items()})
        return SparseOp(d * n, self.m, cols)

    def kron_right(self, d: int) -> SparseOp:
        """self (x) I_d."""
        cols = []
        for col in self.cols:
            for b in range(d):
                cols.append({i * d + b: v for i, v in col.items()})
        return SparseOp(self.n * d, self.m, cols)

    def rank(self) -> int:
        return rank(self.to_dense())

    def is_monomial(self) -> bool:
        return all(len(c) == 1 for c in self.cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def __repr__(self):
        return f"SparseOp(n={self.n}, m={self.m}, nnz={self.nnz()})"
