"""Eccentric sequences of trees and the symmetry bounds derived from them."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from symtree.canon import path_code, subtree_code
from symtree.errors import SymtreeError
from symtree.graph import Tree, center, eccentricities


@dataclass(frozen=True)
class EccentricSequence:
    """Run-length pairs ``(i, m_i)`` for consecutive i = r..d."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(i), int(m)) for i, m in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise SymtreeError("empty eccentric sequence")
        for k, (i, m) in enumerate(pairs):
            if m < 1:
                raise SymtreeError(f"multiplicity of {i} must be positive")
            if i != pairs[0][0] + k:
                raise SymtreeError("eccentricities must be consecutive")
        if pairs[0][0] < 0:
            raise SymtreeError("eccentricities must be nonnegative")

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "EccentricSequence":
        lo, hi = min(counts), max(counts)
        return cls(tuple((i, counts.get(i, 0)) for i in range(lo, hi + 1)))

    @classmethod
    def parse(cls, text: str) -> "EccentricSequence":
        """Read ``"2^(1) 3^(4) 4^(2)"``; a bare ``i`` means multiplicity 1."""
        pairs = []
        for tok in re.split(r"[\s,]+", text.strip().strip("()")):
            if not tok:
                continue
            m = re.fullmatch(r"(\d+)(?:\^\(?(\d+)\)?)?", tok)
            if not m:
                raise SymtreeError(f"bad eccentric sequence token {tok!r}")
            pairs.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(pairs))

    @property
    def r(self) -> int:
        return self.pairs[0][0]

    @property
    def d(self) -> int:
        return self.pairs[-1][0]

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    def m(self, i: int) -> int:
        """m_i, zero outside r..d."""
        if self.r <= i <= self.d:
            return self.pairs[i - self.r][1]
        return 0

    def __str__(self) -> str:
        return " ".join(f"{i}^({m})" for i, m in self.pairs)

    def as_lists(self) -> list[list[int]]:
        return [[i, m] for i, m in self.pairs]


def eccentric_sequence_of(t: Tree) -> EccentricSequence:
    return EccentricSequence.from_counts(Counter(e for _, e in eccentricities(t)))


def lesniak_realizable(x: EccentricSequence) -> bool:
    r, d = x.r, x.d
    if any(x.m(i) < 2 for i in range(r + 1, d + 1)):
        return False
    return (d == 2 * r and x.m(r) == 1) or (d == 2 * r - 1 and x.m(r) == 2)


def realizable_sequences(max_order: int) -> Iterator[EccentricSequence]:
    """Every realizable sequence with total multiplicity at most ``max_order``,
    ordered by radius, then diameter, then multiplicities."""
    r = 0
    while True:
        any_r = False
        for d, mr in ((2 * r - 1, 2), (2 * r, 1)):
            if d < r or mr > max_order:
                continue
            rest = d - r
            if mr + 2 * rest > max_order:
                continue
            any_r = True
            for tail in _tails(rest, max_order - mr):
                yield EccentricSequence(((r, mr),) + tuple((r + 1 + k, m) for k, m in enumerate(tail)))
        if not any_r and r > max_order:
            return
        r += 1


def _tails(length: int, budget: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(2, budget - 2 * (length - 1) + 1):
        for rest in _tails(length - 1, budget - first):
            yield (first,) + rest


def distinguishing_bound_M(x: EccentricSequence) -> int:
    inner = [x.m(i) - 2 for i in range(x.r, x.d)]
    return max([x.m(x.d) - 1] + inner)


def fixing_bound(x: EccentricSequence) -> int:
    return x.m(x.d) - 2 + sum(max(x.m(i) - 3, 0) for i in range(x.r, x.d))


def prop53_lower_bound(x: EccentricSequence) -> int:
    best = 0
    for i in range(2, x.d + 1):
        best = max(best, x.m(i) - x.m(i - 1) - x.m(i + 1))
    return best


def prop54_not_asymmetric(x: EccentricSequence) -> bool:
    j = x.d
    while j - 1 >= x.r and x.m(j - 1) == x.m(x.d):
        j -= 1
    s = j - 1
    return s >= x.r and x.m(s) < x.m(x.d)


# ---------------------------------------------------------------------------
# exceptional families


def _is_path(t: Tree) -> bool:
    return t.max_degree <= 2


def _is_star(t: Tree) -> bool:
    return t.n >= 2 and any(len(a) == t.n - 1 for a in t.adj)


def _leg_lengths(t: Tree, hub: int) -> list[int] | None:
    """Leg lengths at ``hub`` if every branch there is a bare path."""
    legs = []
    for w in t.adj[hub]:
        length, prev, cur = 1, hub, w
        while len(t.adj[cur]) == 2:
            prev, cur = cur, next(x for x in t.adj[cur] if x != prev)
            length += 1
        if len(t.adj[cur]) != 1:
            return None
        legs.append(length)
    return sorted(legs)


def in_family_D(t: Tree) -> bool:
    if _is_path(t) or _is_star(t):
        return True
    hubs = [v for v in range(t.n) if len(t.adj[v]) >= 3]
    if len(hubs) != 1 or len(t.adj[hubs[0]]) != 3:
        return False
    k, a, b = _leg_lengths(t, hubs[0])
    return a == b and 1 <= k < a


def _broom_chain(t: Tree, top: int, parent: int) -> int | None:
    """Diameter of the branch at ``top`` read as a broom ending at ``parent``.

    The branch must be a chain of single children ending at a vertex whose
    children are all leaves (possibly none).
    """
    length, prev, cur = 1, parent, top
    while True:
        kids = [w for w in t.adj[cur] if w != prev]
        if not kids:
            return length
        if len(kids) == 1 and len(t.adj[kids[0]]) > 1:
            prev, cur = cur, kids[0]
            length += 1
            continue
        if all(len(t.adj[w]) == 1 for w in kids):
            return length + 1
        return None


def in_family_F(t: Tree) -> bool:
    if in_family_D(t):
        return True
    cs = center(t)
    if len(cs) != 1:
        return False
    c = cs[0]
    r = max(e for _, e in eccentricities(t)) // 2
    leg = path_code(r)
    branches = sorted((subtree_code(t, w, c), w) for w in t.adj[c])
    long_legs = [w for code, w in branches if code == leg]
    if len(long_legs) < 2:
        return False
    rest = [w for code, w in branches if w not in long_legs[:2]]
    if not rest:
        return True
    if all(len(t.adj[w]) == 1 for w in rest):
        return True
    if len(rest) == 1:
        diam = _broom_chain(t, rest[0], c)
        return diam is not None and diam <= r
    return False


__all__ = [
    "EccentricSequence",
    "distinguishing_bound_M",
    "eccentric_sequence_of",
    "fixing_bound",
    "in_family_D",
    "in_family_F",
    "lesniak_realizable",
    "prop53_lower_bound",
    "prop54_not_asymmetric",
    "realizable_sequences",
]

