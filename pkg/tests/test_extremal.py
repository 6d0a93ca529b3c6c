from __future__ import annotations

import pytest

from symtree.brute import automorphisms, brute_fixing_number
from symtree.eccentric import EccentricSequence, eccentric_sequence_of
from symtree.errors import SymtreeError
from symtree.extremal import (
    CONSTRUCTION_IDS,
    broom,
    construct,
    default_gk_base,
    fig2_spider,
    gk,
    gk_certificates,
    gk_twin,
    path,
    prop55,
    sharpness_chain,
    spider,
    star,
    tk_family,
)
from symtree.graph import Tree
from symtree.params import fixing_number


def test_basic_shapes():
    assert path(4).edges == ((0, 1), (1, 2), (2, 3))
    assert star(3).degree(0) == 3
    assert spider([2, 1]).edge_set == {(0, 1), (1, 2), (0, 3)}
    assert broom(3, 2).n == 6 and broom(3, 2).degree(0) == 3
    assert fig2_spider().n == 11
    assert sharpness_chain(3).n == 33 and isinstance(sharpness_chain(3), Tree)
    assert tk_family(2, 3).n == 8


@pytest.mark.parametrize("r", range(1, 7))
def test_fixing_one_family(r):
    for k in range(2, r + 2):
        t = prop55(r, k)
        want = EccentricSequence(((r, 1),) + tuple((i, k) for i in range(r + 1, 2 * r + 1)))
        assert eccentric_sequence_of(t) == want
        assert fixing_number(t)[0] == 1
        if t.n <= 12:
            assert brute_fixing_number(t)[0] == 1


def test_fixing_one_family_range():
    with pytest.raises(SymtreeError):
        prop55(2, 4)


def test_gk_layout():
    g = gk(7, 2)
    assert g.n == 7 + 2 * 127
    assert set(g.adj[gk_twin(7, 2, 0b101, 1)]) == {0, 2}
    assert len(automorphisms(default_gk_base(7))) == 1
    assert len(automorphisms(default_gk_base(6))) == 2


def test_gk_small_base_fixing_number():
    # brute check on a tiny instance with an asymmetric one-vertex base
    g = gk(1, 2, base=Tree(1))
    assert brute_fixing_number(g)[0] == 1


def test_gk_certificates():
    cert = gk_certificates(7, 2)
    assert cert.ok and cert.swaps_checked == 127 == cert.swaps_valid
    assert cert.lower_bound == 127 and not cert.upper_bound_verified
    d = gk_certificates(7, 3).as_dict()
    assert d["swaps_checked"] == 381 and d["lower_bound"] == 254 and d["ok"]
    with pytest.raises(SymtreeError):
        gk_certificates(6, 2)


def test_construct_dispatch():
    assert set(CONSTRUCTION_IDS) >= {"fig2-spider", "tk-family", "sharpness-chain", "t-x", "prop55", "gk"}
    assert construct("tk-family", k="2", D="3").n == 8
    assert construct("t-x", X="2^(1) 3^(2) 4^(2)").n == 5
    assert construct("spider", legs="1,1,2").n == 5
    with pytest.raises(SymtreeError):
        construct("nope")
    with pytest.raises(SymtreeError):
        construct("path", k=3)
    with pytest.raises(SymtreeError):
        construct("path", n="x")
    with pytest.raises(SymtreeError):
        construct("tk-family", k=1)
