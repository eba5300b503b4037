"""Matrix representations over Q(zeta_m) and their characters."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .cyclo import CycNum, cyc_format, cyc_parse
from .groups import ConjClass, Group, conjugacy_classes, quaternion_group
from .linalg import Matrix, as_matrix, identity, matmul, matvec, rank, trace


class RepError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    group: Group
    dim: int
    m: int
    matrices: tuple  # one Matrix per group element, by index
    label: str = ""

    def __call__(self, g) -> Matrix:
        return self.matrices[self.group.index(g)]

    def is_trivial(self) -> bool:
        ident = identity(self.dim, self.m)
        return all(mat == ident for mat in self.matrices)


def _greedy_generators(G: Group) -> list[int]:
    gens: list[int] = []
    span = {G.identity}
    for g in G:
        if g not in span:
            gens.append(g)
            span = set(G.generated(gens))
    return gens


def rep_from_matrices(group: Group, generator_images: Mapping, m: int | None = None, label: str = "") -> Representation:
    """Extend generator images to a representation, validating every relation."""
    if not generator_images:
        if group.order != 1:
            raise RepError("no generator images given for a non-trivial group")
        if m is None:
            raise RepError("field modulus required when no generator images are given")
        return Representation(group, 1, m, (identity(1, m),), label)

    gens: list[tuple[int, Matrix]] = []
    for key, mat in generator_images.items():
        g = group.index(key)
        rows = [list(r) for r in mat]
        if m is None:
            m = next((v.m for r in rows for v in r if isinstance(v, CycNum)), None)
        gens.append((g, rows))
    if m is None:
        raise RepError("cannot infer field modulus from purely rational matrices; pass m")
    gens = [(g, as_matrix(rows, m)) for g, rows in gens]

    dim = len(gens[0][1])
    for g, mat in gens:
        if len(mat) != dim or any(len(r) != dim for r in mat):
            raise RepError(f"image of {group.label(g)} is not {dim}x{dim}")
        if rank(mat) != dim:
            raise RepError(f"image of {group.label(g)} is singular")

    images: dict[int, Matrix] = {group.identity: identity(dim, m)}
    words: dict[int, tuple[str, ...]] = {group.identity: ()}
    queue = deque([group.identity])

    def word_str(w):
        return "*".join(w) or "1"

    while queue:
        h = queue.popleft()
        for s, mat in gens:
            hs = group.mul(h, s)
            img = matmul(images[h], mat)
            if hs not in images:
                images[hs] = img
                words[hs] = words[h] + (group.label(s),)
                queue.append(hs)
            elif images[hs] != img:
                lhs = word_str(words[h] + (group.label(s),))
                raise RepError(
                    f"relation violated: {lhs} = {word_str(words[hs])} = {group.label(hs)} "
                    f"but the images differ"
                )
    if len(images) != group.order:
        missing = [group.label(g) for g in group if g not in images]
        raise RepError(f"generators do not generate the group (missing {', '.join(missing)})")

    matrices = tuple(images[g] for g in group)
    rep = Representation(group, dim, m, matrices, label)
    check_homomorphism(rep)
    return rep


def check_homomorphism(rep: Representation) -> None:
    G = rep.group
    if rep.matrices[G.identity] != identity(rep.dim, rep.m):
        raise RepError("identity does not map to the identity matrix")
    for a in G:
        for b in G:
            if matmul(rep.matrices[a], rep.matrices[b]) != rep.matrices[G.mul(a, b)]:
                raise RepError(
                    f"relation violated: rho({G.label(a)}) rho({G.label(b)}) != rho({G.label(G.mul(a, b))})"
                )


def rep_apply(rep: Representation, g, v: Sequence[CycNum]) -> tuple:
    if len(v) != rep.dim:
        raise ValueError(f"vector of length {len(v)} for a {rep.dim}-dimensional representation")
    return matvec(rep(g), v)


def cyclic_irreps(n: int, m: int | None = None, group: Group | None = None, generator=None) -> list[Representation]:
    """The n characters phi_t: generator -> zeta_n^t of a cyclic group of order n.

    Defaults to Z_n with generator g^1; pass `group` and `generator` for any
    cyclic group (e.g. a centralizer).
    """
    from .groups import cyclic_group

    if n < 1:
        raise ValueError("n must be positive")
    m = n if m is None else m
    if m % n:
        raise ValueError(f"zeta_{n} does not lie in Q(zeta_{m})")
    if group is None:
        group = cyclic_group(n)
        generator = 1 % n
    if group.order != n:
        raise ValueError(f"group of order {group.order} given for Z_{n} characters")
    gen = group.index(generator)
    if group.element_order(gen) != n:
        raise ValueError(f"{group.label(gen)} does not generate {group.name}")
    reps = []
    for t in range(n):
        mats = [None] * n
        for k in range(n):
            mats[group.power(gen, k)] = ((CycNum.zeta(m, (m // n) * t * k),),)
        reps.append(Representation(group, 1, m, tuple(mats), f"phi{t}"))
    return reps


def find_q8_generators(G: Group) -> tuple[int, int] | None:
    """Least (a, b) with a^4 = 1 != a^2, b^2 = a^2, ab = ba^-1 generating G of order 8."""
    if G.order != 8:
        return None
    for a in G:
        if G.element_order(a) != 4:
            continue
        a2 = G.mul(a, a)
        for b in G:
            if G.mul(b, b) != a2:
                continue
            if G.mul(a, b) != G.mul(b, G.inv(a)):
                continue
            if len(G.generated([a, b])) == 8:
                return a, b
    return None


def q8_irreps(G: Group | None = None, m: int = 4) -> list[Representation]:
    """rho1..rho4 (one-dimensional) and rho5 (two-dimensional) of Q8.

    rho5 sends x to diag(i, -i) and y to [[0, -1], [1, 0]] in the basis (v1, v2).
    """
    if G is None:
        G = quaternion_group()
    found = find_q8_generators(G)
    if found is None:
        raise RepError(f"{G.name} is not isomorphic to Q8")
    if m % 4:
        raise RepError("Q8 irreps need i in the field (m divisible by 4)")
    x, y = found
    i = CycNum.zeta(m, m // 4)
    signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    reps = []
    for k, (sx, sy) in enumerate(signs, start=1):
        reps.append(rep_from_matrices(G, {x: [[sx]], y: [[sy]]}, m=m, label=f"rho{k}"))
    rho5 = rep_from_matrices(G, {x: [[i, 0], [0, -i]], y: [[0, -1], [1, 0]]}, m=m, label="rho5")
    reps.append(rho5)
    return reps


@dataclass(frozen=True)
class Character:
    group: Group
    classes: tuple[ConjClass, ...]
    values: tuple[CycNum, ...]  # one per class

    def __call__(self, g) -> CycNum:
        g = self.group.index(g)
        for c, v in zip(self.classes, self.values):
            if g in c.members:
                return v
        raise KeyError(g)


def character(rep: Representation) -> Character:
    classes = tuple(conjugacy_classes(rep.group))
    return Character(rep.group, classes, tuple(trace(rep.matrices[c.representative]) for c in classes))


def inner_product(chi: Character, psi: Character) -> CycNum:
    if chi.group != psi.group:
        raise ValueError("characters of different groups")
    acc = chi.values[0] * 0
    for c, a, b in zip(chi.classes, chi.values, psi.values):
        acc = acc + a * b.conjugate() * len(c)
    return acc / Fraction(chi.group.order)


def is_irreducible(rep: Representation) -> bool:
    chi = character(rep)
    return inner_product(chi, chi) == 1


# JSON -----------------------------------------------------------------

def rep_to_json(rep: Representation, generators: Sequence | None = None) -> dict:
    G = rep.group
    gens = [G.index(g) for g in generators] if generators is not None else _greedy_generators(G)
    return {
        "group": G.name,
        "dim": rep.dim,
        "generators": {G.label(g): [[cyc_format(v) for v in row] for row in rep.matrices[g]] for g in gens},
    }


def rep_from_json(data: Mapping, group: Group, m: int, label: str = "") -> Representation:
    for key in ("dim", "generators"):
        if key not in data:
            raise RepError(f"rep file is missing {key!r}")
    dim = data["dim"]
    images = {}
    for lab, rows in data["generators"].items():
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise RepError(f"image of {lab} is not {dim}x{dim}")
        images[lab] = [[cyc_parse(str(v), m) for v in row] for row in rows]
    if not images and dim != 1:
        raise RepError("rep file lists no generators")
    return rep_from_matrices(group, images, m=m, label=label)


def load_rep_file(path, group: Group, m: int, label: str = "") -> Representation:
    with open(path) as fh:
        return rep_from_json(json.load(fh), group, m, label)
