import os
from pathlib import Path

import pytest

import hlc

ROOT = Path(os.environ.get("HLC_SOURCE_DIR", Path(__file__).resolve().parents[2]))
FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="module")
def table():
    return dict(hlc.read_diagrams(str(FIXTURES / "table1.hlc")))


def test_plane_graph_counts():
    assert hlc.plane_graph_counts(0) == {1: 1}
    assert sum(hlc.plane_graph_counts(4).values()) == 10


def test_free_group_counts():
    assert hlc.free_hom_classes("a4", 3) == 178
    assert hlc.free_hom_classes("a5", 3) == 3675


def test_fixture_values(table):
    d = table["6_9"]
    assert d.crossings == 6
    assert d.components == 3
    assert d.ks("a4") == 310
    assert d.ks("a5") == 1841


def test_code_round_trip(table):
    for d in table.values():
        assert hlc.Diagram(d.code) == d


def test_peripheral_counts_swap_under_mirror(table):
    d = table["6_3"]
    (c,) = d.circles()
    n, rn = d.peripheral(c, "a5")
    assert (n, rn) == (77, 111)
    assert d.mirror().peripheral(c, "a5") == (rn, n)


def test_irreducibility():
    ok, _, _ = hlc.irreducibility(326, None, 3, 4)
    assert ok
    ok, reason, conds = hlc.irreducibility(310, 1841, 3, 4)
    assert not ok
    assert conds["link2(p=0)"]


def test_hopf_closure_is_nonsplit():
    hopf = hlc.braid_closure(2, [1, 1])
    assert hopf.components == 2
    assert hopf.nonsplit_certificate() is not None


def test_bad_code_raises():
    with pytest.raises(Exception):
        hlc.Diagram("X(1,2")


def test_stored_report_verifies():
    ok, diffs, notes = hlc.verify_report(str(FIXTURES / "census_report.jsonl"))
    assert ok, diffs
    assert len(notes) == 4
