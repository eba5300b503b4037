from dataclasses import replace

import pytest

from q8nichols.cyclo import CycNum
from q8nichols.groups import centralizer, conjugacy_classes, cyclic_group, group_from_table
from q8nichols.linalg import rank
from q8nichols.reps import cyclic_irreps, q8_irreps
from q8nichols.ydmod import (
    YDError,
    braiding_operator,
    check_module,
    check_yd_compat,
    induce_yd,
    yd_to_json,
)

I = CycNum.zeta(4)
ONE, ZERO = CycNum.one(4), CycNum.zero(4)
V1 = (ONE, ZERO)
V2 = (ZERO, ONE)


def test_module_count_per_class(q8_modules):
    counts = {}
    for cls, _ in q8_modules:
        counts[cls] = counts.get(cls, 0) + 1
    assert counts == {"1": 5, "x": 4, "x2": 5, "y": 4, "xy": 4}


def test_dimensions(q8_modules, Q8):
    for (cls, _), M in q8_modules.items():
        g = Q8.index(cls)
        orbit = next(len(c) for c in conjugacy_classes(Q8) if g in c.members)
        assert M.dim == orbit * M.rep.dim
    dims = {k: M.dim for k, M in q8_modules.items()}
    assert dims[("1", "rho5")] == 2 and dims[("x2", "rho1")] == 1 and dims[("x", "phi0")] == 2


def test_ox_phi0_action(q8_modules):
    M = q8_modules[("x", "phi0")]
    assert M.basis_labels() == ["1⊗u0", "y⊗u0"]
    assert M.act("y", V1) == V2
    assert M.act("x", V2) == V2
    assert M.act("y", V2) == V1


def test_o1_rho2_action(q8_modules, Q8):
    M = q8_modules[("1", "rho2")]
    assert M.act("y", (ONE,)) == (-ONE,)
    assert M.degree == (Q8.index("1"),)


def test_oy_phi1_action(q8_modules):
    M = q8_modules[("y", "phi1")]
    assert M.act("y", V2) == (ZERO, I**3)
    assert M.act("x", V1) == V2
    assert M.act("x", V2) == (-ONE, ZERO)


def test_ox2_one_dimensional_actions_follow_characters(q8_modules):
    # y acts on rho3 by +1 and on rho4 by -1 (character table, columns y)
    assert q8_modules[("x2", "rho3")].act("y", (ONE,)) == (ONE,)
    assert q8_modules[("x2", "rho4")].act("y", (ONE,)) == (-ONE,)
    assert q8_modules[("x2", "rho3")].act("x", (ONE,)) == (-ONE,)


def test_degrees(q8_modules, Q8):
    M = q8_modules[("x", "phi1")]
    assert [Q8.label(s) for s in M.degree] == ["x", "x3"]
    M = q8_modules[("xy", "phi2")]
    assert [Q8.label(s) for s in M.degree] == ["xy", "x3y"]
    M = q8_modules[("x2", "rho5")]
    assert [Q8.label(s) for s in M.degree] == ["x2", "x2"]


def test_braiding_examples(q8_modules):
    c = braiding_operator(q8_modules[("x", "phi1")])
    d = 2
    # c(v1 (x) v2) = q^3 v2 (x) v1
    assert c.op.cols[0 * d + 1] == {1 * d + 0: I**3}
    c = braiding_operator(q8_modules[("1", "rho1")])
    assert c.op.cols[0] == {0: ONE}
    c = braiding_operator(q8_modules[("x2", "rho5")])
    # c(w5 (x) w6) = -w6 (x) w5
    assert c.op.cols[1] == {2: -ONE}


def test_yd_compat_everywhere(q8_modules):
    for M in q8_modules.values():
        assert check_yd_compat(M)
        assert check_module(M)


def test_braiding_invertible(q8_modules):
    for M in q8_modules.values():
        c = braiding_operator(M)
        assert rank(c.op.to_dense()) == M.dim**2


def test_corrupted_action_fails_compat(q8_modules, Q8):
    M = q8_modules[("x", "phi2")]
    action = list(M.action)
    x = Q8.index("x")
    # x should fix the grading components; make it swap v1 and v2 instead
    action[x] = ((ZERO, ONE), (ONE, ZERO))
    bad = replace(M, action=tuple(action))
    result = check_yd_compat(bad)
    assert not result
    h, b = result.witness
    assert h == x and b == 0


def test_trivial_group_module():
    G = group_from_table(["e"], [[0]])
    H = centralizer(G, 0)
    (phi,) = cyclic_irreps(1, 4, H.as_group, 0)
    M = induce_yd(G, 0, phi)
    assert M.dim == 1 and check_yd_compat(M)


def test_abelian_group_modules():
    Z4 = cyclic_group(4)
    for g in Z4:
        for phi in cyclic_irreps(4, 4, centralizer(Z4, g).as_group, 1):
            M = induce_yd(Z4, g, phi)
            assert M.dim == 1 and check_yd_compat(M)


def test_rep_must_live_on_centralizer(Q8):
    rho = q8_irreps()[0]
    with pytest.raises(YDError, match="centralizer"):
        induce_yd(Q8, Q8.index("x"), rho)


def test_json_dump(q8_modules):
    doc = yd_to_json(q8_modules[("x", "phi1")])
    assert doc["basis"] == ["1⊗u0", "y⊗u0"]
    assert doc["degrees"] == ["x", "x3"]
    assert len(doc["braiding"]) == 4 and doc["braiding"][2][1] == "z4^3"
