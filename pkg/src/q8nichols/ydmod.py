"""Induced Yetter-Drinfeld modules M(g, V) = kG (x)_{kG^g} V over a group algebra.

The basis is ordered coset-major: (h_0 (x) v_0, h_0 (x) v_1, ..., h_1 (x) v_0, ...)
with coset representatives h_i from `coset_reps` (identity first).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .cyclo import CycNum, cyc_format
from .groups import CosetDecomposition, Group, Subgroup, centralizer, conjugate, coset_reps
from .linalg import Matrix, SparseOp
from .reps import Representation


class YDError(ValueError):
    pass


class CheckResult(NamedTuple):
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class YDModule:
    group: Group
    base_point: int
    rep: Representation
    cosets: CosetDecomposition
    dim: int
    action: tuple  # one dim x dim Matrix per group element
    degree: tuple[int, ...]  # group element per basis vector
    m: int

    @property
    def subgroup(self) -> Subgroup:
        return self.cosets.subgroup

    def basis_labels(self) -> list[str]:
        G = self.group
        return [f"{G.label(r)}⊗u{j}" for r in self.cosets.reps for j in range(self.rep.dim)]

    def act(self, h, vec):
        from .linalg import matvec

        return matvec(self.action[self.group.index(h)], vec)


@dataclass(frozen=True, eq=False)
class BraidOp:
    """A linear map on V (x) V in the basis b_i (x) b_j -> index i*dim + j."""

    dim: int
    op: SparseOp

    @property
    def m(self) -> int:
        return self.op.m

    def __eq__(self, other):
        if not isinstance(other, BraidOp):
            return NotImplemented
        return self.dim == other.dim and self.op == other.op

    __hash__ = None


def induce_yd(G: Group, g, rep: Representation) -> YDModule:
    """Build M(g, V) from a representation of the centralizer of g."""
    g = G.index(g)
    H = centralizer(G, g)
    if rep.group != H.as_group:
        raise YDError(
            f"representation is defined on {rep.group.name}, not on the centralizer "
            f"of {G.label(g)} ({', '.join(G.label(h) for h in H.members)})"
        )
    cos = coset_reps(G, H)
    d = rep.dim
    nc = len(cos.reps)
    dim = nc * d
    zero = CycNum.zero(rep.m)
    action = []
    for h in G:
        mat = [[zero] * dim for _ in range(dim)]
        for i in range(nc):
            k, gamma = cos.factor[h][i]
            block = rep.matrices[H.from_parent(gamma)]
            # h . (h_i (x) v) = h_k (x) rho(gamma) v
            for a in range(d):
                for b in range(d):
                    mat[k * d + a][i * d + b] = block[a][b]
        action.append(tuple(tuple(r) for r in mat))
    degree = tuple(conjugate(G, r, g) for r in cos.reps for _ in range(d))
    return YDModule(G, g, rep, cos, dim, tuple(action), degree, rep.m)


def braiding_operator(M: YDModule) -> BraidOp:
    """c(b_i (x) b_j) = (deg(b_i) . b_j) (x) b_i."""
    d = M.dim
    cols = []
    for i in range(d):
        act = M.action[M.degree[i]]
        for j in range(d):
            cols.append({k * d + i: act[k][j] for k in range(d) if act[k][j]})
    return BraidOp(d, SparseOp(d * d, M.m, cols))


def check_yd_compat(M: YDModule) -> CheckResult:
    """h . M_s must lie in M_{h s h^-1}; witness is (h, basis index)."""
    G = M.group
    for h in G:
        mat = M.action[h]
        for b in range(M.dim):
            target = conjugate(G, h, M.degree[b])
            for k in range(M.dim):
                if mat[k][b] and M.degree[k] != target:
                    return CheckResult(False, (h, b))
    return CheckResult(True)


def check_module(M: YDModule) -> CheckResult:
    """The action matrices form a representation of G; witness is a failing pair."""
    from .linalg import identity, matmul

    G = M.group
    if M.action[G.identity] != identity(M.dim, M.m):
        return CheckResult(False, (G.identity, G.identity))
    for a in G:
        for b in G:
            if matmul(M.action[a], M.action[b]) != M.action[G.mul(a, b)]:
                return CheckResult(False, (a, b))
    return CheckResult(True)


def yd_to_json(M: YDModule, braiding: BraidOp | None = None) -> dict:
    G = M.group
    c = braiding if braiding is not None else braiding_operator(M)
    return {
        "group": G.name,
        "base_point": G.label(M.base_point),
        "irrep": M.rep.label,
        "dim": M.dim,
        "basis": M.basis_labels(),
        "degrees": [G.label(s) for s in M.degree],
        "action": {G.label(h): _dense_json(M.action[h]) for h in G},
        "braiding": _dense_json(c.op.to_dense()),
    }


def _dense_json(mat: Matrix) -> list:
    return [[cyc_format(v) for v in row] for row in mat]
