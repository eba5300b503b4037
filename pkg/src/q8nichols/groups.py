"""Finite groups given by multiplication tables.

Elements are identified by their index in the table; labels are cosmetic.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

FULL_ASSOC_LIMIT = 64
SAMPLED_TRIPLES = 10_000


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Group:
    name: str
    labels: tuple[str, ...]
    mult: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    _index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(range(len(self.labels)))

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return self.labels == other.labels and self.mult == other.mult

    def __hash__(self):
        return hash((self.labels, self.mult))

    def index(self, element) -> int:
        """Index of an element given as index or label."""
        if isinstance(element, int):
            if not 0 <= element < self.order:
                raise GroupError(f"element index {element} out of range for {self.name}")
            return element
        try:
            return self._index[element]
        except KeyError:
            raise GroupError(f"no element labelled {element!r} in {self.name}") from None

    def label(self, g: int) -> str:
        return self.labels[g]

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        r = self.identity
        for _ in range(k):
            r = self.mult[r][a]
        return r

    def element_order(self, a: int) -> int:
        k, r = 1, a
        while r != self.identity:
            r = self.mult[r][a]
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm

        e = 1
        for g in self:
            e = lcm(e, self.element_order(g))
        return e

    def is_abelian(self) -> bool:
        return all(self.mult[a][b] == self.mult[b][a] for a in self for b in self)

    def generated(self, gens: Sequence[int]) -> list[int]:
        """Sorted members of the subgroup generated by gens."""
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for h in frontier:
                for s in gens:
                    k = self.mult[h][s]
                    if k not in seen:
                        seen.add(k)
                        nxt.append(k)
            frontier = nxt
        return sorted(seen)

    def to_json(self) -> dict:
        return {"name": self.name, "labels": list(self.labels), "mult": [list(r) for r in self.mult]}


def group_from_table(labels: Sequence[str], mult: Sequence[Sequence[int]], name: str = "G") -> Group:
    """Validate a multiplication table and build a Group."""
    n = len(labels)
    if n == 0:
        raise GroupError("empty table")
    if len(set(labels)) != n:
        raise GroupError("labels are not distinct")
    if len(mult) != n or any(len(row) != n for row in mult):
        raise GroupError(f"multiplication table is not {n}x{n}")
    rows = tuple(tuple(int(v) for v in row) for row in mult)
    full = set(range(n))
    for a, row in enumerate(rows):
        if set(row) != full:
            raise GroupError(f"not a Latin square: row {labels[a]} is not a permutation")
    for b in range(n):
        if {rows[a][b] for a in range(n)} != full:
            raise GroupError(f"not a Latin square: column {labels[b]} is not a permutation")

    e = next((a for a in range(n) if all(rows[a][b] == b == rows[b][a] for b in range(n))), None)
    if e is None:
        raise GroupError("no identity element")
    inverse = []
    for a in range(n):
        inv = next((b for b in range(n) if rows[a][b] == e and rows[b][a] == e), None)
        if inv is None:
            raise GroupError(f"element {labels[a]} has no two-sided inverse")
        inverse.append(inv)

    if n <= FULL_ASSOC_LIMIT:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(SAMPLED_TRIPLES))
    for a, b, c in triples:
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise GroupError(f"associativity fails on ({labels[a]}, {labels[b]}, {labels[c]})")

    labels = tuple(labels)
    return Group(name, labels, rows, e, tuple(inverse), {lab: i for i, lab in enumerate(labels)})


def group_from_json(data: dict) -> Group:
    for key in ("labels", "mult"):
        if key not in data:
            raise GroupError(f"group file is missing {key!r}")
    return group_from_table(data["labels"], data["mult"], name=data.get("name", "G"))


def load_group_file(path) -> Group:
    with open(path) as fh:
        return group_from_json(json.load(fh))


Q8_LABELS = ("1", "x", "x2", "x3", "y", "xy", "x2y", "x3y")


def _q8_label(a: int, b: int) -> str:
    xs = {0: "", 1: "x", 2: "x2", 3: "x3"}[a]
    if b == 0:
        return xs or "1"
    return xs + "y"


def quaternion_group() -> Group:
    """Q8 = <x, y | x^4 = 1, y^2 = x^2, xy = yx^-1> on normal forms x^a y^b."""
    forms = [(a, b) for b in (0, 1) for a in range(4)]
    index = {f: i for i, f in enumerate(forms)}
    labels = [_q8_label(a, b) for a, b in forms]
    assert tuple(labels) == Q8_LABELS

    def mul(f, g):
        (a, b), (c, d) = f, g
        # y x^c = x^-c y, and y^2 = x^2
        a2 = a + (c if b == 0 else -c)
        if b + d == 2:
            a2 += 2
        return (a2 % 4, (b + d) % 2)

    table = [[index[mul(f, g)] for g in forms] for f in forms]
    return group_from_table(labels, table, name="Q8")


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    labels = [f"g^{k}" for k in range(n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(labels, table, name=f"Z{n}")


def conjugate(G: Group, g, h) -> int:
    """g |> h = g h g^-1."""
    g, h = G.index(g), G.index(h)
    return G.mul(G.mul(g, h), G.inv(g))


@dataclass(frozen=True)
class ConjClass:
    representative: int
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)


def conjugacy_classes(G: Group) -> list[ConjClass]:
    seen: set[int] = set()
    classes = []
    for g in G:
        if g in seen:
            continue
        orbit = sorted({conjugate(G, h, g) for h in G})
        seen.update(orbit)
        classes.append(ConjClass(orbit[0], tuple(orbit)))
    return classes


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: Group
    members: tuple[int, ...]
    as_group: Group

    def __contains__(self, g: int) -> bool:
        return g in self._member_set

    @property
    def _member_set(self) -> frozenset:
        return frozenset(self.members)

    def to_parent(self, k: int) -> int:
        return self.members[k]

    def from_parent(self, g: int) -> int:
        return self.members.index(g)

    @property
    def order(self) -> int:
        return len(self.members)

    def is_cyclic(self) -> bool:
        return any(self.as_group.element_order(k) == self.order for k in self.as_group)


def subgroup(G: Group, members: Sequence[int], name: str | None = None) -> Subgroup:
    members = tuple(sorted(set(members)))
    mset = set(members)
    if G.identity not in mset:
        raise GroupError("subgroup must contain the identity")
    for a in members:
        if G.inv(a) not in mset:
            raise GroupError(f"not closed under inverses at {G.label(a)}")
        for b in members:
            if G.mul(a, b) not in mset:
                raise GroupError(f"not closed under multiplication at ({G.label(a)}, {G.label(b)})")
    pos = {g: k for k, g in enumerate(members)}
    table = [[pos[G.mul(a, b)] for b in members] for a in members]
    sub = group_from_table([G.label(g) for g in members], table, name=name or f"sub({G.name})")
    return Subgroup(G, members, sub)


def centralizer(G: Group, g) -> Subgroup:
    g = G.index(g)
    members = [h for h in G if G.mul(h, g) == G.mul(g, h)]
    return subgroup(G, members, name=f"C_{G.name}({G.label(g)})")


@dataclass(frozen=True)
class CosetDecomposition:
    subgroup: Subgroup
    reps: tuple[int, ...]
    # factor[h][i] = (k, gamma): h * reps[i] = reps[k] * gamma, gamma a parent index in the subgroup
    factor: tuple[tuple[tuple[int, int], ...], ...]

    def coset_of(self, g: int) -> int:
        G = self.subgroup.parent
        for i, r in enumerate(self.reps):
            if G.mul(G.inv(r), g) in self.subgroup:
                return i
        raise GroupError("element in no coset")


def coset_reps(G: Group, H: Subgroup) -> CosetDecomposition:
    """Left cosets rH with reps chosen greedily by least index (identity first)."""
    covered: set[int] = set()
    reps = []
    for g in G:
        if g in covered:
            continue
        reps.append(g)
        covered.update(G.mul(g, h) for h in H.members)
    hset = set(H.members)
    factor = []
    for h in G:
        row = []
        for r in reps:
            t = G.mul(h, r)
            for k, rk in enumerate(reps):
                gamma = G.mul(G.inv(rk), t)
                if gamma in hset:
                    row.append((k, gamma))
                    break
        factor.append(tuple(row))
    return CosetDecomposition(H, tuple(reps), tuple(factor))
