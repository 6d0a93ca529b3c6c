"""Exhaustive ground truth for small graphs.

Everything here works on arbitrary simple graphs and knows nothing about
trees. Automorphism questions are answered by individualization-refinement
backtracking; coloring questions by enumerating colorings in lexicographic
order, skipping any coloring that a known automorphism maps to a smaller
one (only orbit representatives survive) and any partial coloring already
preserved by a known automorphism.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from symtree.errors import LimitExceeded, SymtreeError
from symtree.graph import Coloring, Graph

Perm = tuple[int, ...]

ENV_VAR = "SYMTREE_BRUTE_LIMIT"


@dataclass(frozen=True)
class BruteLimits:
    group: int = 12
    spectrum: int = 10
    colors: int = 5


def current_limits() -> BruteLimits:
    """Defaults, overridden by ``SYMTREE_BRUTE_LIMIT=N`` or ``N,T``."""
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return BruteLimits()
    try:
        parts = [int(p) for p in raw.split(",")]
    except ValueError:
        raise SymtreeError(f"{ENV_VAR} must be 'N' or 'N,T', got {raw!r}") from None
    n = parts[0]
    t = parts[1] if len(parts) > 1 else BruteLimits.colors
    return BruteLimits(group=n, spectrum=n, colors=t)


def _check_n(g: Graph, limit: int | None, default: int, what: str) -> None:
    cap = default if limit is None else limit
    if g.n > cap:
        raise LimitExceeded(f"{what}: n={g.n} exceeds brute limit {cap}; raise it with {ENV_VAR}")


# ---------------------------------------------------------------------------
# refinement and isomorphism search


def _refine(adj: Sequence[Sequence[int]], labels: Sequence[int]) -> list[int]:
    """Coarsest equitable refinement; output labels are isomorphism-invariant."""
    cur = list(labels)
    ncls = len(set(cur))
    n = len(adj)
    while True:
        sigs = [(cur[v], tuple(sorted([cur[u] for u in adj[v]]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncls:
            return new
        cur, ncls = new, len(ranks)


class _Searcher:
    """Isomorphism search between two colorings of the same graph.

    Both colorings live on the disjoint union of two copies of the graph so
    that one refinement pass labels them consistently.
    """

    def __init__(self, g: Graph) -> None:
        self.n = n = g.n
        self.adj = g.adj
        self.nbrs = [frozenset(a) for a in g.adj]
        self.adj2 = list(g.adj) + [tuple(u + n for u in a) for a in g.adj]

    def iso(self, a: Sequence[int], b: Sequence[int]) -> Perm | None:
        return next(self._isos(list(a) + list(b), first=True), None)

    def all_isos(self, a: Sequence[int], b: Sequence[int]) -> Iterator[Perm]:
        return self._isos(list(a) + list(b), first=False)

    def _isos(self, labels: list[int], first: bool) -> Iterator[Perm]:
        n = self.n
        lab = _refine(self.adj2, labels)
        side_a = Counter(lab[:n])
        if side_a != Counter(lab[n:]):
            return
        if len(side_a) == n:
            where = {lab[n + w]: w for w in range(n)}
            perm = tuple(where[lab[v]] for v in range(n))
            if all(perm[u] in self.nbrs[perm[v]] for v in range(n) for u in self.adj[v]):
                yield perm
            return
        target = min((size, l) for l, size in side_a.items() if size > 1)[1]
        v = min(x for x in range(n) if lab[x] == target)
        cand = [w for w in range(n) if lab[n + w] == target]
        if v in cand:
            cand.remove(v)
            cand.insert(0, v)
        fresh = max(lab) + 1
        for w in cand:
            nxt = lab.copy()
            nxt[v] = fresh
            nxt[n + w] = fresh
            for perm in self._isos(nxt, first):
                yield perm
                if first:
                    return

    def nontrivial(self, colors: Sequence[int]) -> Perm | None:
        """Some non-identity automorphism preserving ``colors``, or None."""
        n = self.n
        lab = _refine(self.adj, colors)
        while len(set(lab)) < n:
            sizes = Counter(lab)
            target = min((size, l) for l, size in sizes.items() if size > 1)[1]
            cell = [x for x in range(n) if lab[x] == target]
            v = cell[0]
            fresh = max(lab) + 1
            for w in cell[1:]:
                a = lab.copy()
                a[v] = fresh
                b = lab.copy()
                b[w] = fresh
                perm = self.iso(a, b)
                if perm is not None:
                    return perm
            lab[v] = fresh
            lab = _refine(self.adj, lab)
        return None

    def transversal(self, colors: Sequence[int]) -> list[Perm]:
        """For each base point i (in order 0..n-1) and each w in the orbit of i
        under the stabilizer of 0..i-1, one automorphism fixing 0..i-1 with i -> w.
        Together they generate the color-preserving group."""
        n = self.n
        out: list[Perm] = []
        lab = _refine(self.adj, colors)
        for i in range(n):
            if len(set(lab)) == n:
                break
            fresh = max(lab) + 1
            for w in range(i + 1, n):
                if lab[w] != lab[i]:
                    continue
                a = lab.copy()
                a[i] = fresh
                b = lab.copy()
                b[w] = fresh
                perm = self.iso(a, b)
                if perm is not None:
                    out.append(perm)
            lab[i] = fresh
            lab = _refine(self.adj, lab)
        return out


def _colors_of(g: Graph, c: Coloring | Sequence[int] | None) -> list[int]:
    if c is None:
        return [0] * g.n
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n:
        raise SymtreeError(f"coloring has length {len(colors)}, graph has {g.n} vertices")
    return list(colors)


def _orbit_min(n: int, gens: Sequence[Perm]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


# ---------------------------------------------------------------------------
# public operations


def automorphisms(g: Graph, *, limit: int | None = None) -> list[Perm]:
    """The whole automorphism group, identity first, in lexicographic order."""
    _check_n(g, limit, current_limits().group, "automorphisms")
    if g.n == 0:
        return [()]
    s = _Searcher(g)
    base = [0] * g.n
    return sorted(s.all_isos(base, base))


def nontrivial_automorphism(
    g: Graph, coloring: Coloring | Sequence[int] | None = None, *, limit: int | None = None
) -> Perm | None:
    """A non-identity automorphism preserving every color class, if any."""
    _check_n(g, limit, current_limits().group, "automorphism search")
    return _Searcher(g).nontrivial(_colors_of(g, coloring))


def is_distinguishing(g: Graph, c: Coloring | Sequence[int], *, limit: int | None = None) -> bool:
    _check_n(g, limit, current_limits().group, "is_distinguishing")
    return _Searcher(g).nontrivial(_colors_of(g, c)) is None


def is_fixing_set(g: Graph, vertices: Sequence[int], *, limit: int | None = None) -> bool:
    """Whether the pointwise stabilizer of ``vertices`` is trivial."""
    return is_distinguishing(g, Coloring.individualizing(g.n, vertices), limit=limit)


class _ColoringSearch:
    """Lexicographic search over orbit representatives of t-colorings."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.n = g.n
        self.searcher = _Searcher(g)
        self.perms = self.searcher.transversal([0] * g.n)
        self.supports = [tuple(v for v in range(g.n) if p[v] != v) for p in self.perms]
        self.by_vertex: list[list[int]] = [[] for _ in range(g.n)]
        for k, supp in enumerate(self.supports):
            for v in supp:
                self.by_vertex[v].append(k)

    def _ok(self, c: list[int], x: int) -> bool:
        for k in self.by_vertex[x]:
            p = self.perms[k]
            for pos in self.supports[k]:
                a = c[pos]
                b = c[p[pos]]
                if a == 0 or b == 0:
                    break
                if a < b:
                    break
                if a > b:
                    return False
            else:
                # every moved vertex colored and preserved: p fixes the coloring
                return False
        return True

    def find(self, t: int, budget: int | None = None) -> list[int] | None:
        """Smallest distinguishing t-coloring (among orbit representatives)
        with at most ``budget`` vertices outside color 1."""
        n = self.n
        c = [0] * n

        def rec(x: int, spent: int) -> bool:
            if x == n:
                return self.searcher.nontrivial(c) is None
            for col in range(1, t + 1):
                cost = spent + (col != 1)
                if budget is not None and cost > budget:
                    break
                c[x] = col
                if self._ok(c, x) and rec(x + 1, cost):
                    return True
            c[x] = 0
            return False

        if n == 0:
            return []
        return list(c) if rec(0, 0) else None


def find_distinguishing_coloring(g: Graph, t: int, *, limit: int | None = None) -> Coloring | None:
    _check_n(g, limit, current_limits().group, "distinguishing search")
    found = _ColoringSearch(g).find(t)
    return None if found is None else Coloring(tuple(found), t)


def brute_distinguishing_coloring(g: Graph, *, limit: int | None = None) -> Coloring:
    """A distinguishing coloring with the fewest colors, lexicographically first."""
    _check_n(g, limit, current_limits().group, "brute_distinguishing_number")
    if g.n == 0:
        return Coloring((), 1)
    search = _ColoringSearch(g)
    for t in range(1, g.n + 1):
        found = search.find(t)
        if found is not None:
            return Coloring(tuple(found), t)
    raise AssertionError("a rainbow coloring always distinguishes")


def brute_distinguishing_number(g: Graph, *, limit: int | None = None) -> int:
    return brute_distinguishing_coloring(g, limit=limit).t


def brute_fixing_number(g: Graph, *, limit: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Minimum fixing set size and the lexicographically first minimum set.

    Subsets whose smallest vertex is not the smallest of its orbit are
    skipped; every orbit of subsets keeps its lexicographically first member.
    """
    _check_n(g, limit, current_limits().group, "brute_fixing_number")
    n = g.n
    s = _Searcher(g)
    omin = _orbit_min(n, s.transversal([0] * n))
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            if k and omin[subset[0]] != subset[0]:
                continue
            if s.nontrivial(Coloring.individualizing(n, subset).colors) is None:
                return k, subset
    raise AssertionError("the full vertex set always fixes")


def _spectrum_checks(g: Graph, t: int, limit: int | None, max_colors: int | None) -> None:
    lim = current_limits()
    _check_n(g, limit, lim.spectrum, "paint cost")
    cap = lim.colors if max_colors is None else max_colors
    if t > cap:
        raise LimitExceeded(f"paint cost: t={t} exceeds color limit {cap}")


def brute_paint_cost_coloring(
    g: Graph, t: int, *, limit: int | None = None, max_colors: int | None = None
) -> Coloring:
    """A distinguishing t-coloring minimizing n minus its largest class."""
    _spectrum_checks(g, t, limit, max_colors)
    if t < 1:
        raise SymtreeError("t must be positive")
    search = _ColoringSearch(g)
    if search.find(t) is None:
        raise SymtreeError(f"t={t} is below the distinguishing number")
    for k in range(g.n + 1):
        found = search.find(t, budget=k)
        if found is not None:
            return Coloring(tuple(found), t)
    raise AssertionError("unreachable: some distinguishing t-coloring exists")


def brute_paint_cost(g: Graph, t: int, *, limit: int | None = None, max_colors: int | None = None) -> int:
    return brute_paint_cost_coloring(g, t, limit=limit, max_colors=max_colors).cost()


@dataclass(frozen=True)
class PaintCostSpectrum:
    D: int
    costs: tuple[int, ...]

    @property
    def F(self) -> int:
        return self.costs[-1]

    def is_constant(self) -> bool:
        return len(set(self.costs)) == 1


def paint_cost_spectrum(g: Graph, *, limit: int | None = None, max_colors: int | None = None) -> PaintCostSpectrum:
    """``(D; rho^D, ..., rho^(F+1))``."""
    lim = current_limits()
    _check_n(g, limit, lim.spectrum, "paint_cost_spectrum")
    # the spectrum cap already bounds n, so the group cap must not bite
    d = brute_distinguishing_number(g, limit=g.n)
    f, _ = brute_fixing_number(g, limit=g.n)
    cap = lim.colors if max_colors is None else max_colors
    if f + 1 > cap:
        raise LimitExceeded(f"paint cost spectrum needs t up to {f + 1}, color limit is {cap}")
    costs = tuple(brute_paint_cost(g, t, limit=limit, max_colors=cap) for t in range(d, f + 2))
    return PaintCostSpectrum(d, costs)
