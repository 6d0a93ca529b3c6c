from __future__ import annotations

import pytest

from symtree.campaigns import REGISTRY, list_checks, run_campaign
from symtree.errors import SymtreeError

QUICK = {
    "fd-2": 9,
    "fd-D": 9,
    "spider-cap": 9,
    "oracle-eq": 8,
    "rho-props": 7,
    "univ-T": 8,
    "ecc-bounds": 9,
    "ecc-props": 9,
    "lesniak": 9,
    "leaf-fix": 9,
}


def test_registry_listing():
    names = [n for n, _ in list_checks()]
    assert names == list(REGISTRY)
    assert set(QUICK) | {"univ-U"} == set(names)


@pytest.mark.parametrize("name", sorted(QUICK))
def test_small_campaigns_are_clean(name):
    report = run_campaign(name, QUICK[name], jobs=1)
    assert report.ok, [str(v) for v in report.violations]
    assert report.instances > 0


def test_univ_U_small_orders_are_clean():
    # the double-star fixture shows up only in the fixture rows
    report = run_campaign("univ-U", 9, jobs=1)
    tree_rows = [v for v in report.violations if v.code != "fixture"]
    assert not tree_rows


def test_jobs_do_not_change_results():
    a = run_campaign("fd-2", 10, jobs=1)
    b = run_campaign("fd-2", 10, jobs=3)
    assert a.to_csv(timing=False) == b.to_csv(timing=False)
    assert [str(v) for v in a.violations] == [str(v) for v in b.violations]


def test_csv_layout():
    text = run_campaign("leaf-fix", 4, jobs=1).to_csv(timing=False)
    lines = text.splitlines()
    assert lines[0] == "check,n,instances,violations,seconds"
    assert lines[1:] == [f"leaf-fix,{n},{c},0,0" for n, c in zip(range(1, 5), (1, 1, 1, 2))]


def test_bad_requests():
    with pytest.raises(SymtreeError):
        run_campaign("nope")
    with pytest.raises(SymtreeError):
        run_campaign("oracle-eq", 13)
    with pytest.raises(SymtreeError):
        run_campaign("fd-2", 0)
