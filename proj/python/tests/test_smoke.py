import json

import pytest

import linkage_lab as ll


@pytest.fixture
def node():
    return ll.Ring("QQ", ["x", "y"], ["x*y"])


def test_ring_invariants(node):
    assert node.dim == 1
    assert node.depth == 1
    assert node.is_gorenstein
    s = ll.Ring("QQ", ["x", "y"])
    assert (s.dim, s.depth) == (2, 2)


def test_koszul_betti_numbers():
    s = ll.Ring("QQ", ["x", "y", "z"])
    k = ll.Module.cyclic(s, ["x", "y", "z"])
    table = ll.betti(k, 3)
    assert [sum(r for _, r in row) for row in table] == [1, 3, 3, 1]
    assert ll.depth(k) == 0


def test_hilbert_series_of_double_line():
    s = ll.Ring("QQ", ["x", "y"])
    m = ll.Module.cyclic(s, ["x^2"])
    low, coefs, d = ll.hilbert_series(m)
    assert (low, coefs, d) == (0, [1, 1], 1)


def test_classical_linked_pair(node):
    rx = ll.Module.cyclic(node, ["x"])
    ry = ll.Module.cyclic(node, ["y"])
    assert ll.is_horizontally_linked(rx)
    assert ll.is_isomorphic(ll.link(rx), ry) is True
    assert ll.is_isomorphic(ll.link(ry), rx) is True


def test_theorem_check(node):
    assert "THM_MS" in ll.theorem_ids()
    rep = ll.check("THM_MS", m=ll.Module.cyclic(node, ["x"]))
    assert rep["verdict"] == "Verified"
    assert rep["hypothesis_status"]


def test_run_script_exit_codes():
    ok = ll.run_script(
        "ring S = poly(QQ, x, y);\nring R = quotient(S, [x*y]);\n"
        "module M = coker(R, twists=[0], matrix=[[x]]);\nassert is_horizontally_linked(M);\n"
    )
    assert ok["exit_code"] == 0
    assert json.loads(ok["json"]) == ok["report"]
    bad = ll.run_script(
        "ring S = poly(QQ, x, y);\nmodule k = coker(S, twists=[0], matrix=[[x, y]]);\nassert depth(k) == 1;\n"
    )
    assert bad["exit_code"] == 1
    assert bad["report"]["results"][0]["detail"] == "depth = 0"


def test_script_error_position():
    with pytest.raises(ll.ScriptError) as info:
        ll.parse_script("ring R = poly(QQ, x);\nmodule M = coker(R, twists=[0], matrix=[[x + 1]]);")
    assert info.value.line == 2
    assert info.value.column == 42


def test_errors_map_to_python_exceptions():
    s = ll.Ring("QQ", ["x", "y"])
    with pytest.raises(ll.PolyParseError):
        ll.Module.cyclic(s, ["x +"])
    with pytest.raises(ValueError):
        ll.Module.coker(s, [0, 0], [["x"], ["y^2"]])
