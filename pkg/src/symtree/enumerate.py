"""Free-tree generation.

Rooted trees are produced as canonical level sequences by the
Beyer-Hedetniemi successor rule (each rooted isomorphism class exactly
once). A rooted tree is kept when its root is a center and, for bicentral
trees, when its code is the smaller of the two center-rooted codes, which
leaves exactly one representative per free tree.
"""

from __future__ import annotations

from typing import Iterator

from symtree.canon import code_rooted_at
from symtree.errors import SymtreeError
from symtree.graph import Tree

MAX_N = 16


def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """Level sequences (root at level 0) of all rooted trees on n vertices."""
    if n < 1:
        return
    levels = list(range(n))
    while True:
        yield levels
        p = n - 1
        while p > 0 and levels[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, n):
            levels[i] = levels[i - shift]


def _parents(levels: list[int]) -> list[int]:
    parents = [-1] * len(levels)
    last_at: dict[int, int] = {}
    for i, lv in enumerate(levels):
        if lv:
            parents[i] = last_at[lv - 1]
        last_at[lv] = i
    return parents


def enumerate_free_trees(n: int, *, max_n: int = MAX_N) -> Iterator[Tree]:
    """One tree per isomorphism class on n vertices, in a fixed order."""
    if not 1 <= n <= max_n:
        raise SymtreeError(f"n must be in 1..{max_n}, got {n}")
    for levels in rooted_level_sequences(n):
        if n <= 2:
            yield Tree.from_parents(_parents(levels))
            continue
        # heights of the two deepest branches at the root
        h1 = h2 = 0
        cur = 0
        top = -1
        deepest_top = -1
        for i in range(1, n + 1):
            if i == n or levels[i] == 1:
                if top >= 0:
                    if cur > h1:
                        h1, h2, deepest_top = cur, h1, top
                    elif cur > h2:
                        h2 = cur
                if i < n:
                    top, cur = i, 1
            else:
                cur = max(cur, levels[i])
        if h1 == h2:
            yield Tree.from_parents(_parents(levels))
        elif h1 == h2 + 1:
            tree = Tree.from_parents(_parents(levels))
            if code_rooted_at(tree, 0) <= code_rooted_at(tree, deepest_top):
                yield tree


def count_free_trees(n: int) -> int:
    return sum(1 for _ in enumerate_free_trees(n))
