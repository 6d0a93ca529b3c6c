"""Exact tree algorithms for distinguishing and fixing numbers.

Both parameters reduce to recursions over canonical codes. A colored
rooted tree has no nontrivial color-preserving rooted automorphism exactly
when every child subtree is such a tree and isomorphic children carry
pairwise inequivalent colorings; counting those gives ``count_rigid``.
Fixing a rooted tree means fixing each copy of every child class, except
that copies of an asymmetric class only need all but one pinned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Mapping

from symtree.canon import child_classes, code_rooted_at, subtree_code
from symtree.errors import NotASpiderError, SymtreeError
from symtree.graph import RootedTree, Tree, center, pendent_spider_decomposition


@lru_cache(maxsize=None)
def count_rigid(code: str, d: int) -> int:
    """N(B, d): colored copies of the rooted tree ``code`` with d colors that
    admit no nontrivial rooted automorphism, counted up to isomorphism."""
    if d < 1:
        raise SymtreeError("number of colors must be at least 1")
    total = d
    for child, mult in child_classes(code):
        total *= comb(count_rigid(child, d), mult)
        if not total:
            return 0
    return total


def count_rigid_colorings(r: RootedTree, d: int) -> int:
    if d < 1:
        raise SymtreeError("number of colors must be at least 1")
    return count_rigid(code_rooted_at(r.tree, r.root), d)


def _halves(t: Tree) -> tuple[str, str, int, int] | None:
    """Codes of the two sides of the central edge, or None if unicentral."""
    cs = center(t)
    if len(cs) == 1:
        return None
    a, b = cs
    return subtree_code(t, a, b), subtree_code(t, b, a), a, b


def distinguishing_number(t: Tree) -> int:
    if t.n == 1:
        return 1
    if t.n == 2:
        return 2
    halves = _halves(t)
    for d in range(1, t.max_degree + 1):
        if halves is None:
            if count_rigid(code_rooted_at(t, center(t)[0]), d) >= 1:
                return d
        else:
            c1, c2 = halves[0], halves[1]
            n1 = count_rigid(c1, d)
            if c1 == c2:
                if n1 >= 2:
                    return d
            elif n1 >= 1 and count_rigid(c2, d) >= 1:
                return d
    raise AssertionError("D(T) exceeded the maximum degree")


@lru_cache(maxsize=None)
def rooted_fixing(code: str) -> int:
    """Fewest vertices whose pointwise stabilizer in the rooted automorphism group is trivial."""
    total = 0
    for child, mult in child_classes(code):
        f = rooted_fixing(child)
        total += mult * f if f else mult - 1
    return total


def _rooted_witness(t: Tree, root: int, parent: int) -> list[int]:
    """Leaf-only minimum fixing set of the subtree at ``root`` (root held fixed)."""
    groups: dict[str, list[int]] = {}
    for w in t.adj[root]:
        if w != parent:
            groups.setdefault(subtree_code(t, w, root), []).append(w)
    out: list[int] = []
    for code in sorted(groups):
        tops = sorted(groups[code])
        if rooted_fixing(code):
            for w in tops:
                out += _rooted_witness(t, w, root)
        else:
            for w in tops[1:]:
                out.append(_some_leaf(t, w, root))
    return out


def _some_leaf(t: Tree, top: int, parent: int) -> int:
    """Smallest-id leaf of ``t`` inside the subtree hanging off ``top``."""
    best = None
    stack = [(top, parent)]
    while stack:
        v, p = stack.pop()
        kids = [w for w in t.adj[v] if w != p]
        if not kids and (best is None or v < best):
            best = v
        stack += [(w, v) for w in kids]
    return best


def fixing_number(t: Tree) -> tuple[int, tuple[int, ...]]:
    """F(T) and a minimum fixing set made of leaves."""
    if t.n == 1:
        return 0, ()
    halves = _halves(t)
    if halves is None:
        c = center(t)[0]
        wit = _rooted_witness(t, c, -1)
        return rooted_fixing(code_rooted_at(t, c)), tuple(sorted(wit))
    c1, c2, a, b = halves
    f1, f2 = rooted_fixing(c1), rooted_fixing(c2)
    if c1 == c2 and f1 == 0:
        return 1, (_some_leaf(t, a, b),)
    wit = _rooted_witness(t, a, b) + _rooted_witness(t, b, a)
    return f1 + f2, tuple(sorted(wit))


def fixing_density(t: Tree) -> Fraction:
    return Fraction(fixing_number(t)[0], t.n)


# ---------------------------------------------------------------------------
# spiders


@dataclass(frozen=True)
class SpiderProfile:
    """Leg-length histogram ``k -> n_k`` of a spider at its hub."""

    counts: tuple[tuple[int, int], ...]

    def __init__(self, counts: Mapping[int, int] | tuple[tuple[int, int], ...] = ()) -> None:
        items = dict(counts)
        for k, m in items.items():
            if k < 1 or m < 0:
                raise SymtreeError(f"invalid profile entry {k}: {m}")
        object.__setattr__(self, "counts", tuple(sorted((k, m) for k, m in items.items() if m > 0)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def order(self) -> int:
        return 1 + sum(k * m for k, m in self.counts)

    @property
    def legs(self) -> list[int]:
        return [k for k, m in self.counts for _ in range(m)]

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}:{m}" for k, m in self.counts) + "}"


def is_spider(t: Tree) -> bool:
    return sum(1 for a in t.adj if len(a) >= 3) <= 1


def spider_hub(t: Tree) -> int:
    """The high-degree vertex, or the smallest path endpoint for a path."""
    high = [v for v in range(t.n) if len(t.adj[v]) >= 3]
    if len(high) > 1:
        raise NotASpiderError(f"{len(high)} vertices of degree at least 3")
    if high:
        return high[0]
    return min(t.leaves) if t.n > 1 else 0


def spider_profile(t: Tree) -> SpiderProfile:
    hub = spider_hub(t)
    counts: dict[int, int] = {}
    for w in t.adj[hub]:
        length, prev, cur = 1, hub, w
        while len(t.adj[cur]) == 2:
            prev, cur = cur, next(x for x in t.adj[cur] if x != prev)
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return SpiderProfile(counts)


def spider_fixing_density(p: SpiderProfile) -> Fraction:
    if not p.counts:
        raise SymtreeError("empty spider profile")
    return Fraction(sum(max(0, m - 1) for _, m in p.counts), p.order)


def extremal_spider_profile(d: int, k_max: int, *, verify: bool = True) -> SpiderProfile:
    """Densest profile with every n_k in {0, d^k} for k <= k_max.

    With ``verify`` set and a small search space, also checks that no profile
    with arbitrary ``0 <= n_k <= d^k`` is denser.
    """
    if d < 2 or k_max < 1:
        raise SymtreeError("need d >= 2 and k_max >= 1")
    best: tuple[Fraction, int, SpiderProfile] | None = None
    for mask in range(1, 1 << k_max):
        prof = SpiderProfile({k: d**k for k in range(1, k_max + 1) if mask >> (k - 1) & 1})
        key = (spider_fixing_density(prof), -prof.order)
        if best is None or key > best[:2]:
            best = (key[0], key[1], prof)
    assert best is not None
    space = 1
    for k in range(1, k_max + 1):
        space *= d**k + 1
    if verify and space <= 200_000:
        for ns in product(*(range(d**k + 1) for k in range(1, k_max + 1))):
            prof = SpiderProfile({k + 1: m for k, m in enumerate(ns)})
            if prof.counts and spider_fixing_density(prof) > best[0]:
                raise AssertionError(f"profile {prof} beats the all-or-nothing optimum")
    return best[2]


# ---------------------------------------------------------------------------
# constructive fixing set from pendent spiders


def construct_bound_fixing_set(t: Tree) -> tuple[int, ...]:
    """Leaf fixing set assembled piece by piece over the pendent spiders.

    Two-vertex pieces contribute nothing. Every other piece contributes a
    minimum leaf fixing set of itself with the hub held fixed, or a single
    leaf when that set is empty.
    """
    if t.n < 3:
        raise SymtreeError("needs at least 3 vertices")
    chosen: list[int] = []
    for piece in pendent_spider_decomposition(t):
        if piece.n == 2:
            continue
        local = _rooted_witness(piece.tree, piece.root, -1)
        if not local:
            local = [min(v for v in piece.tree.leaves if v != piece.root)]
        chosen += [piece.global_id(v) for v in local]
    return tuple(sorted(chosen))


def bound_for(d: int) -> Fraction:
    """Largest fixing density allowed for a tree with distinguishing number d."""
    if d <= 1:
        return Fraction(0)
    if d == 2:
        return Fraction(4, 11)
    return Fraction(d - 1, d + 1)


__all__ = [
    "SpiderProfile",
    "bound_for",
    "construct_bound_fixing_set",
    "count_rigid",
    "count_rigid_colorings",
    "distinguishing_number",
    "extremal_spider_profile",
    "fixing_density",
    "fixing_number",
    "is_spider",
    "rooted_fixing",
    "spider_fixing_density",
    "spider_hub",
    "spider_profile",
]
