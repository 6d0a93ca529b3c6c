"""AHU-style canonical codes for rooted and free trees.

A code is a balanced parenthesis string: a leaf is ``()`` and an internal
vertex wraps the ascending-sorted codes of its children. Two rooted trees
share a code exactly when they are rooted-isomorphic; the free-tree code is
the smaller of the codes rooted at the (one or two) centers.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from symtree.errors import SymtreeError
from symtree.graph import RootedTree, Tree, center

LEAF = "()"


def _code_at(adj: Sequence[Sequence[int]], root: int, banned: int = -1) -> str:
    """Code of the component of ``root`` hung from ``root``, not entering ``banned``."""
    order = [root]
    parent = {root: banned}
    for v in order:
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    kids: dict[int, list[str]] = {}
    code = ""
    for v in reversed(order):
        parts = kids.pop(v, [])
        parts.sort()
        code = "(" + "".join(parts) + ")"
        p = parent[v]
        if p != banned:
            kids.setdefault(p, []).append(code)
    return code


def rooted_canonical_code(r: RootedTree) -> str:
    return _code_at(r.tree.adj, r.root)


def code_rooted_at(t: Tree, root: int) -> str:
    return _code_at(t.adj, root)


def free_canonical_code(t: Tree) -> str:
    return min(_code_at(t.adj, c) for c in center(t))


def tree_isomorphic(t1: Tree, t2: Tree) -> bool:
    if t1.n != t2.n or sorted(map(len, t1.adj)) != sorted(map(len, t2.adj)):
        return False
    return free_canonical_code(t1) == free_canonical_code(t2)


def subtree_code(t: Tree, top: int, parent: int) -> str:
    """Code of the subtree hanging off ``top`` away from ``parent``."""
    return _code_at(t.adj, top, parent)


def branch_multiset(r: RootedTree) -> dict[str, int]:
    """Branch types at the root, each a neighbour's subtree rooted at that neighbour."""
    adj = r.tree.adj
    if not adj[r.root]:
        raise SymtreeError("root has degree 0; it has no branches")
    counts = Counter(_code_at(adj, w, r.root) for w in adj[r.root])
    return dict(sorted(counts.items()))


@lru_cache(maxsize=None)
def split_code(code: str) -> tuple[str, ...]:
    """Child codes of the root, in stored (ascending) order."""
    out = []
    depth = 0
    start = 1
    for i in range(1, len(code) - 1):
        depth += 1 if code[i] == "(" else -1
        if depth == 0:
            out.append(code[start : i + 1])
            start = i + 1
    return tuple(out)


def child_classes(code: str) -> list[tuple[str, int]]:
    """``(child code, multiplicity)`` pairs in ascending code order."""
    return sorted(Counter(split_code(code)).items())


def code_order(code: str) -> int:
    return len(code) // 2


@lru_cache(maxsize=None)
def code_height(code: str) -> int:
    depth = best = 0
    for ch in code:
        depth += 1 if ch == "(" else -1
        best = max(best, depth)
    return best - 1


def join_code(children: Sequence[str]) -> str:
    return "(" + "".join(sorted(children)) + ")"


def tree_from_code(code: str) -> RootedTree:
    """Materialize a code as a RootedTree with preorder ids, root 0."""
    if not is_valid_code(code):
        raise SymtreeError(f"not a canonical tree code: {code!r}")
    parents: list[int] = []
    stack: list[int] = []
    for ch in code:
        if ch == "(":
            parents.append(stack[-1] if stack else -1)
            stack.append(len(parents) - 1)
        else:
            stack.pop()
    return RootedTree(Tree.from_parents(parents), 0)


def is_valid_code(code: str) -> bool:
    if len(code) < 2 or set(code) - {"(", ")"}:
        return False
    depth = 0
    for i, ch in enumerate(code):
        depth += 1 if ch == "(" else -1
        if depth < 0 or (depth == 0 and i != len(code) - 1):
            return False
    return depth == 0


def spider_code(legs: Sequence[int]) -> str:
    """Code of the spider with the given leg lengths, rooted at its hub."""
    return join_code([path_code(k) for k in legs if k > 0])


def path_code(k: int) -> str:
    """Code of a path with ``k`` vertices rooted at one end."""
    return "(" * k + ")" * k
