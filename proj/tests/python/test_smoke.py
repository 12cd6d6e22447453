import json

import pytest

import ulrich_scroll as u


def test_line_cohomology():
    s = u.Scroll([2, 1])
    assert s.degrees == [1, 2]
    assert s.n == 1 and s.c == 3
    assert u.line_cohomology(s, *u.from_pair(2, 2)) == [12, 0, 0]


def test_classify_and_enumerate():
    s = u.Scroll([1, 2])
    assert u.classify_type(s, [1, 1]) == [1, 1]
    info = u.describe_type(s, [1, 1])
    assert info["h0"] == 6 and info["slope"] == "2/1"
    assert [t["type"] for t in u.enumerate_types(s, 1)] == [[0, 1], [1, 0]]


def test_beilinson_block_columns():
    s = u.Scroll([1, 1, 2])
    table = u.beilinson_table(s, [0, 1, 0])
    assert table[2][2] == 1
    assert sum(map(sum, table)) == 1


def test_hom_and_segre():
    s = u.Scroll([1, 1, 1, 1])
    assert u.segre_ext1(s, 3, 0) == 8
    bounds = u.hom_bounds(s, 3, *u.from_pair(2, 3), 0, *u.from_pair(-1, 0))
    assert bounds[1] == (8, 8)
    ok, checks, failures = u.verify(u.Scroll([1, 2, 3]), "homvanish")
    assert ok and checks > 0 and failures == []


def test_veronese():
    assert u.veronese_table(2, 1, 1) == [[0, 0, 0], [0, 1, 0], [0, 0, 0]]
    assert u.pn_omega_cohomology(2, 1, 0) == [0, 1, 0]


def test_errors():
    with pytest.raises(u.InvalidInput):
        u.Scroll([0, 1])
    with pytest.raises(u.NotUlrich):
        u.classify_type(u.Scroll([1, 2]), [0, 0])
    with pytest.raises(u.Error):
        u.segre_ext1(u.Scroll([1, 2]), 1, 0)


def test_cli_passthrough():
    code, out, err = u.run_cli(["classify", "--scroll", "1,2", "--type", "1,1"])
    assert code == 0 and err == ""
    assert json.loads(out)["result"]["h0"] == 6
    code, _, err = u.run_cli(["line-coh", "--scroll", "1,2"])
    assert code == 1 and "divisor" in err
