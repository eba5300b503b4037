"""Graded dimensions of Nichols algebras from quantum symmetrizers.

The degree-n part of B(V) is the image of S_n = sum over w in S_n of the
braid lift of w acting on V^(x n).  Permutations are tuples in one-line
notation with (u o v)[k] = u[v[k]]; s_i swaps positions i and i+1, and its
lift is c acting on tensor factors i, i+1.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .braidlin import _elementary, check_braid_equation
from .linalg import SparseOp
from .ydmod import BraidOp

DEFAULT_CUTOFF = 6
DEFAULT_BUDGET = 50_000_000


class NicholsError(ValueError):
    pass


class BudgetExceeded(NicholsError):
    pass


def budget_limit() -> int:
    raw = os.environ.get("Q8N_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        raise NicholsError(f"Q8N_BUDGET must be a number, got {raw!r}") from None


def work_estimate(d: int, n: int) -> int:
    return math.factorial(n) * d ** (2 * n)


def _guard(d: int, n: int, budget: int | None):
    budget = budget_limit() if budget is None else budget
    cost = work_estimate(d, n)
    if cost > budget:
        raise BudgetExceeded(
            f"degree {n} on a {d}-dimensional space needs {n}!*{d}^{2 * n} = {cost} > budget {budget}"
        )


# permutations -------------------------------------------------------------

def compose(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(u[k] for k in v)


def transposition(n: int, i: int) -> tuple[int, ...]:
    w = list(range(n))
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def inversions(w: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def word_product(word: Sequence[int], n: int) -> tuple[int, ...]:
    w = tuple(range(n))
    for i in word:
        w = compose(w, transposition(n, i))
    return w


def reduced_word_bubble(w: Sequence[int]) -> list[int]:
    """Strip the leftmost right descent until sorted; w = s_{i1} ... s_{ik}."""
    w = list(w)
    stripped = []
    while True:
        i = next((k for k in range(len(w) - 1) if w[k] > w[k + 1]), None)
        if i is None:
            break
        w[i], w[i + 1] = w[i + 1], w[i]
        stripped.append(i)
    return stripped[::-1]


def reduced_word_lehmer(w: Sequence[int]) -> list[int]:
    """Insert values 0, 1, ... into place by leftward adjacent moves.

    Value k travels past exactly the larger values to its left, i.e. its
    entry in the Lehmer code of w^-1.
    """
    w = list(w)
    applied = []
    for k in range(len(w)):
        p = w.index(k)
        for i in range(p - 1, k - 1, -1):
            w[i], w[i + 1] = w[i + 1], w[i]
            applied.append(i)
    return applied[::-1]


WORD_STRATEGIES = {"bubble": reduced_word_bubble, "lehmer": reduced_word_lehmer}


# lifts --------------------------------------------------------------------

def _require_braid(c: BraidOp):
    ok = getattr(c, "_braid_ok", None)
    if ok is None:
        ok = bool(check_braid_equation(c))
        object.__setattr__(c, "_braid_ok", ok)
    if not ok:
        raise NicholsError("c does not satisfy the braid equation; its lift to S_n is ill-defined")


def elementary_braidings(c: BraidOp, n: int) -> list[SparseOp]:
    return [_elementary(c, i, n) for i in range(n - 1)]


def lift_permutation(c: BraidOp, w: Sequence[int], strategy: str = "bubble") -> SparseOp:
    """Product of c_i along a reduced word of w."""
    _require_braid(c)
    n = len(w)
    word = WORD_STRATEGIES[strategy](w)
    out = SparseOp.identity(c.dim**n, c.m)
    if not word:
        return out
    cs = elementary_braidings(c, n)
    for i in word:
        out = out @ cs[i]
    return out


def symmetrizer_sum(c: BraidOp, n: int, budget: int | None = None, strategy: str = "bubble") -> SparseOp:
    """S_n as the literal sum of all n! lifted permutations."""
    _guard(c.dim, n, budget)
    _require_braid(c)
    total = SparseOp.zero(c.dim**n, c.m)
    for w in itertools.permutations(range(n)):
        total = total + lift_permutation(c, w, strategy)
    return total


def _left_coset_sum(cs: list[SparseOp], size: int, m: int) -> SparseOp:
    # id + c_1 + c_2 c_1 + ... + c_{n-1} ... c_1  (1-indexed)
    term = SparseOp.identity(size, m)
    total = term
    for ck in cs:
        term = ck @ term
        total = total + term
    return total


def _right_coset_sum(cs: list[SparseOp], size: int, m: int) -> SparseOp:
    # id + c_{n-1} + c_{n-1} c_{n-2} + ... + c_{n-1} ... c_1  (1-indexed)
    term = SparseOp.identity(size, m)
    total = term
    for ck in reversed(cs):
        term = term @ ck
        total = total + term
    return total


def symmetrizers(c: BraidOp, N: int, budget: int | None = None) -> Iterator[SparseOp]:
    """Yield S_0, ..., S_N using S_n = (sum of left coset lifts) (id (x) S_{n-1})."""
    _require_braid(c)
    d, m = c.dim, c.m
    S = SparseOp.identity(1, m)
    yield S
    for n in range(1, N + 1):
        _guard(d, n, budget)
        if n == 1:
            S = SparseOp.identity(d, m)
        else:
            T = _left_coset_sum(elementary_braidings(c, n), d**n, m)
            S = T @ S.kron_left(d)
        yield S


def symmetrizer(c: BraidOp, n: int, budget: int | None = None) -> SparseOp:
    if n < 0:
        raise ValueError("degree must be non-negative")
    _guard(c.dim, n, budget)
    for k, S in enumerate(symmetrizers(c, n, budget)):
        if k == n:
            return S
    raise AssertionError("unreachable")


def symmetrizer_right_factored(c: BraidOp, S_prev: SparseOp, n: int) -> SparseOp:
    """S_n = (S_{n-1} (x) id)(sum of right coset lifts), from a given S_{n-1}."""
    d = c.dim
    T = _right_coset_sum(elementary_braidings(c, n), d**n, c.m)
    return S_prev.kron_right(d) @ T


@dataclass(frozen=True)
class HilbertPrefix:
    cutoff: int
    dims: tuple[int, ...]
    terminated: bool

    @property
    def partial_sum(self) -> int:
        return sum(self.dims)

    @property
    def total(self) -> int | None:
        return self.partial_sum if self.terminated else None

    def to_json(self) -> dict:
        return {
            "cutoff": self.cutoff,
            "dims": list(self.dims),
            "terminated": self.terminated,
            "total": self.partial_sum if self.terminated else f"≥ {self.partial_sum}",
        }

    @classmethod
    def from_json(cls, data: dict) -> HilbertPrefix:
        return cls(data["cutoff"], tuple(data["dims"]), data["terminated"])

    def summary(self) -> str:
        dims = ",".join(map(str, self.dims))
        if self.terminated:
            return f"({dims}) total {self.partial_sum}"
        return f"({dims}) no finite-dimension evidence up to degree {self.cutoff}"


def hilbert_prefix(c: BraidOp, N: int = DEFAULT_CUTOFF, budget: int | None = None, stop_at_zero: bool = True) -> HilbertPrefix:
    """dims[n] = rank S_n for n <= N.

    After the first zero every later S_n vanishes, since S_n factors through
    S_{n-1} (x) id; with stop_at_zero the remaining ranks are filled in as 0.
    """
    if N < 1:
        raise ValueError("cutoff must be positive")
    _guard(c.dim, N, budget)
    dims: list[int] = []
    for S in symmetrizers(c, N, budget):
        r = S.rank()
        dims.append(r)
        if r == 0 and stop_at_zero:
            break
    terminated = 0 in dims
    dims += [0] * (N + 1 - len(dims))
    return HilbertPrefix(N, tuple(dims), terminated)
