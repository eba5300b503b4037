import itertools
import json

import numpy as np
import pytest

from q8nichols.groups import (
    Q8_LABELS,
    GroupError,
    centralizer,
    conjugacy_classes,
    conjugate,
    coset_reps,
    cyclic_group,
    group_from_json,
    group_from_table,
    quaternion_group,
    subgroup,
)


def labels_of(G, idxs):
    return [G.label(i) for i in idxs]


def quaternion_matrices():
    """x^a y^b as 2x2 complex matrices with x = diag(i, -i), y = [[0, -1], [1, 0]]."""
    x = np.array([[1j, 0], [0, -1j]])
    y = np.array([[0, -1], [1, 0]], dtype=complex)
    return [np.linalg.matrix_power(x, a) @ np.linalg.matrix_power(y, b) for b in (0, 1) for a in range(4)]


def test_q8_table_matches_matrix_model(Q8):
    mats = quaternion_matrices()

    def find(mat):
        (k,) = [k for k, cand in enumerate(mats) if np.allclose(cand, mat)]
        return k

    table = [[find(a @ b) for b in mats] for a in mats]
    assert [list(r) for r in Q8.mult] == table


def test_q8_presentation(Q8):
    x, y = Q8.index("x"), Q8.index("y")
    assert Q8.labels == Q8_LABELS
    assert Q8.power(x, 4) == Q8.identity
    assert Q8.power(y, 2) == Q8.power(x, 2)
    assert Q8.mul(x, y) == Q8.mul(y, Q8.inv(x))
    assert Q8.label(Q8.mul(x, y)) == "xy"


def test_q8_inverses(Q8):
    assert Q8.label(Q8.inv(Q8.index("y"))) == "x2y"
    assert Q8.label(Q8.inv(Q8.index("xy"))) == "x3y"
    assert Q8.label(Q8.inv(Q8.index("x"))) == "x3"
    assert Q8.label(Q8.inv(Q8.index("x2"))) == "x2"


def test_trivial_and_z2():
    G = group_from_table(["e"], [[0]])
    assert G.order == 1 and G.identity == 0
    Z2 = group_from_table(["e", "s"], [[0, 1], [1, 0]])
    assert Z2.order == 2 and Z2.inv(1) == 1


def test_cyclic_group():
    for n in (1, 4, 7):
        Z = cyclic_group(n)
        assert Z.label(Z.identity) == "g^0"
        assert Z.mul(Z.index(f"g^{1 % n}"), Z.index(f"g^{n - 1}")) == Z.identity
        assert Z.element_order(1 % n) == n


def test_conjugacy_classes_q8(Q8):
    classes = [labels_of(Q8, c.members) for c in conjugacy_classes(Q8)]
    assert classes == [["1"], ["x", "x3"], ["x2"], ["y", "x2y"], ["xy", "x3y"]]
    assert [Q8.label(c.representative) for c in conjugacy_classes(Q8)] == ["1", "x", "x2", "y", "xy"]


def test_conjugacy_classes_small():
    assert len(conjugacy_classes(group_from_table(["e"], [[0]]))) == 1
    assert [len(c) for c in conjugacy_classes(cyclic_group(4))] == [1, 1, 1, 1]


@pytest.mark.parametrize(
    "g,members",
    [
        ("x", ["1", "x", "x2", "x3"]),
        ("x2", list(Q8_LABELS)),
        ("xy", ["1", "x2", "xy", "x3y"]),
        ("y", ["1", "x2", "y", "x2y"]),
        ("1", list(Q8_LABELS)),
    ],
)
def test_centralizers(Q8, g, members):
    H = centralizer(Q8, Q8.index(g))
    assert labels_of(Q8, H.members) == members
    if len(members) == 4:
        assert H.is_cyclic()


def test_orbit_stabilizer(Q8):
    for G in (Q8, cyclic_group(6)):
        classes = conjugacy_classes(G)
        assert sum(len(c) for c in classes) == G.order
        assert sorted(itertools.chain.from_iterable(c.members for c in classes)) == list(G)
        for c in classes:
            for g in c.members:
                assert len(c) * centralizer(G, g).order == G.order


def test_center_of_q8(Q8):
    center = [g for g in Q8 if centralizer(Q8, g).order == 8]
    assert labels_of(Q8, center) == ["1", "x2"]
    singletons = [c.members for c in conjugacy_classes(Q8) if len(c) == 1]
    assert [labels_of(Q8, s) for s in singletons] == [["1"], ["x2"]]


@pytest.mark.parametrize("g,reps", [("x", ["1", "y"]), ("y", ["1", "x"]), ("xy", ["1", "x"]), ("1", ["1"])])
def test_coset_reps(Q8, g, reps):
    dec = coset_reps(Q8, centralizer(Q8, Q8.index(g)))
    assert labels_of(Q8, dec.reps) == reps
    assert len(dec.reps) * dec.subgroup.order == Q8.order


def test_coset_factorization_reassembles(Q8):
    for g in Q8:
        H = centralizer(Q8, g)
        dec = coset_reps(Q8, H)
        for h in Q8:
            for i, r in enumerate(dec.reps):
                k, gamma = dec.factor[h][i]
                assert gamma in H.members
                assert Q8.mul(h, r) == Q8.mul(dec.reps[k], gamma)


def test_conjugate(Q8):
    assert Q8.label(conjugate(Q8, "y", "x")) == "x3"
    assert all(conjugate(Q8, Q8.identity, h) == h for h in Q8)
    # brute force from the table: x (xy) x^-1
    x, xy = Q8.index("x"), Q8.index("xy")
    assert Q8.label(Q8.mult[Q8.mult[x][xy]][Q8.inv(x)]) == "x3y"
    assert Q8.label(conjugate(Q8, "x", "xy")) == "x3y"


def test_rejects_non_latin():
    with pytest.raises(GroupError, match="Latin"):
        group_from_table(["a", "b"], [[0, 1], [0, 1]])


def test_rejects_non_associative_loop():
    # the order-5 loop with every element an involution
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupError, match="associativity"):
        group_from_table(list("abcde"), loop)


def test_rejects_missing_identity():
    # x o y = -x - y mod 3 is a quasigroup without identity
    table = [[(-a - b) % 3 for b in range(3)] for a in range(3)]
    with pytest.raises(GroupError, match="identity"):
        group_from_table(["a", "b", "c"], table)


def test_rejects_bad_shape():
    with pytest.raises(GroupError):
        group_from_table(["a", "b"], [[0, 1]])


def test_large_group_uses_sampling():
    G = cyclic_group(70)
    assert G.order == 70 and G.exponent() == 70


def test_subgroup_validation(Q8):
    with pytest.raises(GroupError):
        subgroup(Q8, [Q8.index("1"), Q8.index("x")])


def test_json_round_trip(Q8):
    G = group_from_json(json.loads(json.dumps(Q8.to_json())))
    assert G == Q8 and G.name == "Q8"


def test_label_lookup_errors(Q8):
    with pytest.raises(GroupError):
        Q8.index("z")
    with pytest.raises(GroupError):
        Q8.index(9)
