"""Universal trees for D-distinguishable trees of bounded radius.

Every universal tree is described by a catalog: the rooted types that may
hang off the root, each with the largest number of copies allowed. The
explicit tree is only materialized on request and under a vertex budget.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Iterator, Mapping

from symtree.canon import LEAF, child_classes, code_height, code_order, code_rooted_at, join_code, path_code, spider_code
from symtree.errors import BudgetExceeded, SymtreeError, UnsupportedError
from symtree.graph import RootedTree, Tree, center, radius
from symtree.params import count_rigid, rooted_fixing

PLAIN = "T"
PAINT = "U"
DEFAULT_BUDGET = 10**6
DEFAULT_CATALOG_BUDGET = 10**6


@dataclass(frozen=True)
class UniversalSpec:
    r: int
    D: int
    kind: str = PLAIN

    def __post_init__(self) -> None:
        if self.r < 1:
            raise SymtreeError(f"radius must be at least 1, got {self.r}")
        if self.D < 2:
            raise SymtreeError(f"D must be at least 2, got {self.D}")
        if self.kind not in (PLAIN, PAINT):
            raise SymtreeError(f"kind must be {PLAIN!r} or {PAINT!r}, got {self.kind!r}")

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.r}^{self.D}"


@dataclass(frozen=True)
class BranchCatalog:
    """Root branch types (ascending code order) with their capacities."""

    entries: tuple[tuple[str, int], ...]

    @classmethod
    def from_mapping(cls, caps: Mapping[str, int]) -> "BranchCatalog":
        return cls(tuple(sorted(caps.items())))

    def as_dict(self) -> dict[str, int]:
        return dict(self.entries)

    def capacity(self, code: str) -> int:
        return self.as_dict().get(code, 0)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def root_degree(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def tree_order(self) -> int:
        return 1 + sum(c * code_order(code) for code, c in self.entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["canonical_code", "height", "order", "capacity"])
        for code, cap in self.entries:
            w.writerow([code, code_height(code), code_order(code), cap])
        return buf.getvalue()


@dataclass(frozen=True)
class UniversalTree:
    spec: UniversalSpec
    catalog: BranchCatalog
    tree: RootedTree | None  # None in catalog-only mode
    experimental: bool = False

    @property
    def order(self) -> int:
        return self.catalog.tree_order


def _submultisets(caps: Mapping[str, int], budget: int) -> Iterator[str]:
    """Codes of every rooted tree whose root children form a sub-multiset of ``caps``."""
    items = sorted(caps.items())
    size = prod(c + 1 for _, c in items)
    if size > budget:
        raise BudgetExceeded(f"catalog would have {size} branch types (budget {budget})")
    for counts in product(*(range(c + 1) for _, c in items)):
        kids: list[str] = []
        for (code, _), m in zip(items, counts):
            kids += [code] * m
        yield join_code(kids)


def plain_catalog(r: int, D: int, *, budget: int = DEFAULT_CATALOG_BUDGET) -> BranchCatalog:
    UniversalSpec(r, D)
    caps = {LEAF: D}
    for _ in range(2, r + 1):
        caps = {code: count_rigid(code, D) for code in _submultisets(caps, budget)}
    return BranchCatalog.from_mapping(caps)


def paint_catalog(r: int, D: int, *, experimental: bool = False,
                  budget: int = DEFAULT_CATALOG_BUDGET) -> BranchCatalog:
    UniversalSpec(r, D, PAINT)
    if r == 1:
        return BranchCatalog.from_mapping({LEAF: D})
    if r == 2:
        caps = {LEAF: D, path_code(2): 2 * D - 1}
        for i in range(2, D + 1):
            caps[spider_code([1] * i)] = comb(D - 1, i - 1)
        return BranchCatalog.from_mapping(caps)
    if not experimental:
        raise UnsupportedError(
            "exact U catalogs exist only for r <= 2; enable the experimental search mode (--experimental) for more"
        )
    caps = paint_catalog(2, D).as_dict()
    for _ in range(3, r + 1):
        caps = {code: paint_capacity(code, D) for code in _submultisets(caps, budget)}
        caps = {c: v for c, v in caps.items() if v > 0}
    return BranchCatalog.from_mapping(caps)


# Cost-weighted rigid colorings. Color 1 is the neutral color; a polynomial
# maps cost (number of non-neutral vertices) to a count.
Poly = dict[int, int]


def _mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return out


def _choose_distinct(g: Poly, m: int) -> Poly:
    """Cost polynomial of m-element sets drawn from a pool described by ``g``."""
    # coefficient of y^m in prod_c (1 + y x^c)^{g[c]}
    layers: list[Poly] = [{0: 1}] + [{} for _ in range(m)]
    for c, count in sorted(g.items()):
        new = [dict(p) for p in layers]
        for j in range(1, m + 1):
            coeff = comb(count, j)
            if not coeff:
                break
            for k in range(m - j + 1):
                for deg, val in layers[k].items():
                    tgt = new[k + j]
                    tgt[deg + c * j] = tgt.get(deg + c * j, 0) + val * coeff
        layers = new
    return layers[m]


@lru_cache(maxsize=None)
def _rigid_cost_poly(code: str, D: int) -> tuple[tuple[int, int], ...]:
    poly: Poly = {0: 1, 1: D - 1} if D > 1 else {0: 1}
    for child, m in child_classes(code):
        poly = _mul(poly, _choose_distinct(dict(_rigid_cost_poly(child, D)), m))
        if not poly:
            break
    return tuple(sorted((k, v) for k, v in poly.items() if v))


def rigid_cost_counts(code: str, D: int) -> dict[int, int]:
    """Rigid D-colorings of a rooted type grouped by their number of non-neutral vertices."""
    return dict(_rigid_cost_poly(code, D))


def paint_capacity(code: str, D: int) -> int:
    """Experimental capacity of a branch type in the paint-cost universal tree."""
    f = rooted_fixing(code)
    counts = rigid_cost_counts(code, D)
    if f >= 1:
        return counts.get(f, 0)
    return 1 + counts.get(1, 0)


def _materialize(catalog: BranchCatalog) -> RootedTree:
    parents = [-1]
    for code, cap in catalog.entries:
        for _ in range(cap):
            base = len(parents)
            stack: list[int] = []
            for ch in code:
                if ch == "(":
                    parents.append(stack[-1] if stack else 0)
                    stack.append(len(parents) - 1)
                else:
                    stack.pop()
            assert parents[base] == 0
    return RootedTree(Tree.from_parents(parents), 0)


def _build(spec: UniversalSpec, catalog: BranchCatalog, catalog_only: bool, budget: int,
           experimental: bool = False) -> UniversalTree:
    if catalog_only:
        return UniversalTree(spec, catalog, None, experimental)
    if catalog.tree_order > budget:
        raise BudgetExceeded(
            f"{spec.name} has {catalog.tree_order} vertices (budget {budget}); use --catalog-only or raise --budget"
        )
    return UniversalTree(spec, catalog, _materialize(catalog), experimental)


def build_universal_T(r: int, D: int, *, catalog_only: bool = False, budget: int = DEFAULT_BUDGET,
                      catalog_budget: int = DEFAULT_CATALOG_BUDGET) -> UniversalTree:
    spec = UniversalSpec(r, D, PLAIN)
    return _build(spec, plain_catalog(r, D, budget=catalog_budget), catalog_only, budget)


def build_universal_U(r: int, D: int, *, catalog_only: bool = False, budget: int = DEFAULT_BUDGET,
                      experimental: bool = False,
                      catalog_budget: int = DEFAULT_CATALOG_BUDGET) -> UniversalTree:
    spec = UniversalSpec(r, D, PAINT)
    cat = paint_catalog(r, D, experimental=experimental, budget=catalog_budget)
    return _build(spec, cat, catalog_only, budget, experimental=r >= 3)


def build_universal(spec: UniversalSpec, **kw) -> UniversalTree:
    if spec.kind == PLAIN:
        kw.pop("experimental", None)
        return build_universal_T(spec.r, spec.D, **kw)
    return build_universal_U(spec.r, spec.D, **kw)


# ---------------------------------------------------------------------------
# membership


def _fits_plain(code: str, r: int, D: int) -> bool:
    """Whether ``code`` is a root branch type of T_r^D (capacity checked by caller)."""
    if r == 1:
        return code == LEAF
    for child, m in child_classes(code):
        if not _fits_plain(child, r - 1, D) or m > count_rigid(child, D):
            return False
    return True


def _root_fits(code: str, spec: UniversalSpec, catalog: BranchCatalog | None) -> bool:
    for child, m in child_classes(code):
        if catalog is not None:
            if m > catalog.capacity(child):
                return False
        elif not _fits_plain(child, spec.r, spec.D) or m > count_rigid(child, spec.D):
            return False
    return True


def is_branched_subgraph_of_universal(t: Tree, spec: UniversalSpec, *,
                                      catalog: BranchCatalog | None = None,
                                      experimental: bool = False) -> bool:
    """Whether ``t`` embeds as a branched subgraph with a center at the root.

    For the plain kind the capacities are evaluated lazily from the counting
    recursion, so no catalog needs to be built; a catalog may still be given.
    """
    if radius(t) > spec.r:
        raise SymtreeError(f"tree radius {radius(t)} exceeds {spec.r}")
    if t.n == 1:
        return True
    if catalog is None and spec.kind == PAINT:
        catalog = paint_catalog(spec.r, spec.D, experimental=experimental)
    return any(_root_fits(code_rooted_at(t, c), spec, catalog) for c in center(t))


def branched_subgraphs(catalog: BranchCatalog, *, limit: int = 10**5) -> Iterator[tuple[tuple[int, ...], RootedTree]]:
    """Every branched subgraph of the universal tree as (multiplicity vector, tree).

    The zero vector gives the single root.
    """
    total = prod(c + 1 for _, c in catalog.entries)
    if total > limit:
        raise BudgetExceeded(f"{total} branched subgraphs exceed the limit {limit}")
    for counts in product(*(range(c + 1) for _, c in catalog.entries)):
        sub = BranchCatalog(tuple((code, m) for (code, _), m in zip(catalog.entries, counts)))
        yield counts, _materialize(sub)
