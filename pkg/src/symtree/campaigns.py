"""Exhaustive verification campaigns over all small trees.

A campaign runs one registered check over every free tree up to a given
order. Per-tree work may be split across processes; each worker enumerates
the trees of one order and keeps those whose index falls in its residue
class, and the parts are merged in a fixed order so reports do not depend
on the worker count.
"""

from __future__ import annotations

import csv
import io
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from symtree import brute
from symtree.canon import free_canonical_code, tree_isomorphic
from symtree.eccentric import (
    EccentricSequence,
    distinguishing_bound_M,
    eccentric_sequence_of,
    fixing_bound,
    in_family_D,
    in_family_F,
    lesniak_realizable,
    prop53_lower_bound,
    prop54_not_asymmetric,
    realizable_sequences,
)
from symtree.enumerate import enumerate_free_trees
from symtree.errors import SymtreeError
from symtree.extremal import fig2_spider, prop55, sharpness_chain
from symtree.graph import Tree, radius
from symtree.params import (
    bound_for,
    distinguishing_number,
    fixing_number,
    is_spider,
    spider_profile,
)
from symtree.universal import (
    PAINT,
    UniversalSpec,
    branched_subgraphs,
    is_branched_subgraph_of_universal,
    paint_catalog,
    plain_catalog,
)

# A tree check returns None to skip the tree, or a list of violation messages.
TreeCheck = Callable[[Tree], "list[str] | None"]


@dataclass
class Violation:
    n: int
    code: str
    message: str

    def __str__(self) -> str:
        return f"n={self.n} {self.code}: {self.message}"


@dataclass
class CampaignRow:
    n: int
    instances: int = 0
    violations: int = 0
    seconds: float = 0.0


@dataclass
class CampaignReport:
    check: str
    n_max: int
    rows: list[CampaignRow] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def instances(self) -> int:
        return sum(r.instances for r in self.rows)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def seconds(self) -> float:
        return sum(r.seconds for r in self.rows)

    def to_csv(self, timing: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "n", "instances", "violations", "seconds"])
        for r in self.rows:
            w.writerow([self.check, r.n, r.instances, r.violations, f"{r.seconds:.3f}" if timing else "0"])
        return buf.getvalue()


# ---------------------------------------------------------------------------
# per-tree checks

FOUR_ELEVENTHS = Fraction(4, 11)


def _fd2(t: Tree) -> list[str] | None:
    if t.n < 3 or distinguishing_number(t) != 2:
        return None
    f = fixing_number(t)[0]
    dens = Fraction(f, t.n)
    if dens > FOUR_ELEVENTHS:
        return [f"density {dens} exceeds 4/11"]
    if dens == FOUR_ELEVENTHS:
        if is_spider(t):
            if not tree_isomorphic(t, fig2_spider()):
                return [f"spider {spider_profile(t)} attains 4/11"]
        elif not (t.n % 11 == 0 and tree_isomorphic(t, sharpness_chain(t.n // 11))):
            return ["non-chain tree attains 4/11"]
    return []


def _fdD(t: Tree) -> list[str] | None:
    d = distinguishing_number(t)
    if d < 3:
        return None
    dens = Fraction(fixing_number(t)[0], t.n)
    if dens > bound_for(d):
        return [f"D={d} density {dens} exceeds {bound_for(d)}"]
    return []


def _spider_cap(t: Tree) -> list[str] | None:
    if t.n < 2 or not is_spider(t):
        return None
    d = distinguishing_number(t)
    return [f"n_{k}={m} > {d}^{k}" for k, m in spider_profile(t).counts if m > d**k]


def _oracle_eq(t: Tree) -> list[str] | None:
    out = []
    d, (f, wit) = distinguishing_number(t), fixing_number(t)
    bd = brute.brute_distinguishing_number(t, limit=t.n)
    bf, _ = brute.brute_fixing_number(t, limit=t.n)
    if d != bd:
        out.append(f"D fast {d} brute {bd}")
    if f != bf:
        out.append(f"F fast {f} brute {bf}")
    if len(wit) != f or not brute.is_fixing_set(t, wit, limit=t.n):
        out.append(f"witness {wit} is not a minimum fixing set")
    return out


def _rho_props(t: Tree) -> list[str] | None:
    spec = brute.paint_cost_spectrum(t, max_colors=t.n)
    d, costs, f = spec.D, spec.costs, spec.F
    out = []
    if any(a < b for a, b in zip(costs, costs[1:])):
        out.append(f"spectrum {costs} not monotone")
    if costs[-1] != f or f != fixing_number(t)[0]:
        out.append(f"last cost {costs[-1]} differs from F")
    if d > f + 1:
        out.append(f"D={d} > F+1={f + 1}")
    if f * d > (d - 1) * t.n:
        out.append(f"F={f} exceeds (D-1)n/D")
    return out


def _univ_T(t: Tree) -> list[str] | None:
    if radius(t) > 2:
        return None
    d = distinguishing_number(t)
    out = []
    for D in (2, 3):
        if is_branched_subgraph_of_universal(t, UniversalSpec(2, D)) != (d <= D):
            out.append(f"membership in T_2^{D} disagrees with D={d}")
    return out


def _univ_U(t: Tree) -> list[str] | None:
    if radius(t) > 2 or distinguishing_number(t) > 2:
        return None
    f = fixing_number(t)[0]
    if t.n > 1 and brute.brute_paint_cost(t, 2, limit=t.n) != f:
        return []
    if not is_branched_subgraph_of_universal(t, UniversalSpec(2, 2, PAINT)):
        return ["rho^2 = F but not a branched subgraph of U_2^2"]
    return []


def _ecc_bounds(t: Tree) -> list[str] | None:
    x = eccentric_sequence_of(t)
    out = []
    if not in_family_D(t):
        d, m = distinguishing_number(t), distinguishing_bound_M(x)
        if d > m:
            out.append(f"D={d} > M={m} for {x}")
    if not in_family_F(t):
        f, b = fixing_number(t)[0], fixing_bound(x)
        if f > b:
            out.append(f"F={f} > bound {b} for {x}")
    return out


def _ecc_props(t: Tree) -> list[str] | None:
    x = eccentric_sequence_of(t)
    f = fixing_number(t)[0]
    out = []
    if f < prop53_lower_bound(x):
        out.append(f"F={f} below lower bound {prop53_lower_bound(x)} for {x}")
    if prop54_not_asymmetric(x) and f == 0:
        out.append(f"asymmetric tree with eventually constant tail {x}")
    return out


def _lesniak(t: Tree) -> list[str] | None:
    x = eccentric_sequence_of(t)
    return [] if lesniak_realizable(x) else [f"sequence {x} fails the realizability test"]


def _leaf_fix(t: Tree) -> list[str] | None:
    f, wit = fixing_number(t)
    out = []
    if not set(wit) <= t.leaves:
        out.append(f"witness {wit} uses non-leaves")
    if len(wit) != f:
        out.append(f"witness size {len(wit)} differs from F={f}")
    if t.n <= brute.current_limits().group and not brute.is_fixing_set(t, wit):
        out.append(f"witness {wit} does not fix the tree")
    return out


# ---------------------------------------------------------------------------
# fixture checks that do not follow the tree enumeration; each yields
# (order, violation messages) per instance.


def _univ_T_fixtures() -> Iterator[tuple[int, list[str]]]:
    for D in (2, 3):
        for _, rt in branched_subgraphs(plain_catalog(2, D)):
            t = rt.tree
            if t.n == 1 or radius(t) != 2:
                continue
            if D == 2:
                d = brute.brute_distinguishing_number(t, limit=t.n)
            else:
                # up to 61 vertices; the counting recursion stands in for brute force
                d = distinguishing_number(t)
            yield t.n, ([] if d <= D else [f"branched subgraph of T_2^{D} has D={d}"])


def _univ_U_fixtures() -> Iterator[tuple[int, list[str]]]:
    for _, rt in branched_subgraphs(paint_catalog(2, 2)):
        t = rt.tree
        if t.n == 1 or radius(t) != 2:
            continue
        d = brute.brute_distinguishing_number(t, limit=t.n)
        out = []
        if d > 2:
            out.append(f"branched subgraph of U_2^2 has D={d}")
        else:
            rho, f = brute.brute_paint_cost(t, 2, limit=t.n), fixing_number(t)[0]
            if rho != f:
                out.append(f"branched subgraph of U_2^2 has rho^2={rho} but F={f}")
        yield t.n, out


def _ecc_props_fixtures() -> Iterator[tuple[int, list[str]]]:
    for r in range(1, 7):
        for k in range(2, r + 2):
            t = prop55(r, k)
            want = EccentricSequence(((r, 1),) + tuple((i, k) for i in range(r + 1, 2 * r + 1)))
            out = []
            if eccentric_sequence_of(t) != want:
                out.append(f"prop55({r},{k}) has sequence {eccentric_sequence_of(t)}")
            if fixing_number(t)[0] != 1:
                out.append(f"prop55({r},{k}) has F={fixing_number(t)[0]}")
            yield t.n, out


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    tree_check: TreeCheck
    default_max_n: int
    hard_max_n: int = 16
    fixtures: Callable[[], Iterable[tuple[int, list[str]]]] | None = None
    per_order: Callable[[int, list[Tree]], list[str]] | None = None


def _lesniak_complete(n: int, trees: list[Tree]) -> list[str]:
    seen = {eccentric_sequence_of(t) for t in trees}
    return [f"realizable sequence {x} has no tree" for x in realizable_sequences(n)
            if x.order == n and x not in seen]


REGISTRY: dict[str, Check] = {
    c.name: c
    for c in (
        Check("fd-2", "F/n <= 4/11 when D = 2; equality only at the order-11 spider and its chains", _fd2, 14),
        Check("fd-D", "F/n <= (D-1)/(D+1) when D >= 3", _fdD, 12),
        Check("spider-cap", "n_k <= D^k for spiders", _spider_cap, 12),
        Check("oracle-eq", "fast D and F equal brute-force values", _oracle_eq, 12, hard_max_n=12),
        Check("rho-props", "paint cost spectrum properties", _rho_props, 9, hard_max_n=10),
        Check("univ-T", "T_2^D membership matches D(T) <= D; radius-2 branched subgraphs are D-distinguishable",
              _univ_T, 12, fixtures=_univ_T_fixtures),
        Check("univ-U", "U_2^2 holds every tree with rho^2 = F; its radius-2 branched subgraphs have rho^2 = F",
              _univ_U, 12, hard_max_n=12, fixtures=_univ_U_fixtures),
        Check("ecc-bounds", "eccentric-sequence bounds on D and F outside the exceptional families", _ecc_bounds, 12),
        Check("ecc-props", "eccentric-sequence lower bound, nontriviality, and fixing-number-1 fixtures",
              _ecc_props, 12, fixtures=_ecc_props_fixtures),
        Check("lesniak", "tree sequences are realizable and every realizable sequence is realized",
              _lesniak, 12, per_order=_lesniak_complete),
        Check("leaf-fix", "fixing witnesses consist of leaves", _leaf_fix, 12),
    )
}


def _run_part(name: str, n: int, part: int, parts: int) -> tuple[int, list[tuple[str, str]], float]:
    check = REGISTRY[name]
    start = time.perf_counter()
    count = 0
    bad: list[tuple[str, str]] = []
    trees = list(enumerate_free_trees(n)) if check.per_order else None
    source = trees if trees is not None else enumerate_free_trees(n)
    for idx, t in enumerate(source):
        if idx % parts != part:
            continue
        msgs = check.tree_check(t)
        if msgs is None:
            continue
        count += 1
        if msgs:
            bad.append((free_canonical_code(t), "; ".join(msgs)))
    if check.per_order and part == 0:
        extra = check.per_order(n, trees)
        count += 1
        bad += [("-", m) for m in extra]
    return count, bad, time.perf_counter() - start


def run_campaign(name: str, n_max: int | None = None, *, jobs: int | None = None,
                 n_min: int = 1, progress: Callable[[str], None] | None = None) -> CampaignReport:
    if name not in REGISTRY:
        raise SymtreeError(f"unknown check {name!r}; choose from {', '.join(REGISTRY)}")
    check = REGISTRY[name]
    n_max = check.default_max_n if n_max is None else n_max
    if not 1 <= n_max <= check.hard_max_n:
        raise SymtreeError(f"{name} supports --max-n between 1 and {check.hard_max_n}, got {n_max}")
    jobs = max(1, jobs or os.cpu_count() or 1)
    report = CampaignReport(name, n_max)
    orders = list(range(n_min, n_max + 1))
    results: dict[tuple[int, int], tuple[int, list[tuple[str, str]], float]] = {}
    if jobs == 1:
        for n in orders:
            results[(n, 0)] = _run_part(name, n, 0, 1)
            if progress:
                progress(f"{name}: n={n} done")
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = {(n, p): pool.submit(_run_part, name, n, p, jobs) for n in orders for p in range(jobs)}
            for key in sorted(futs):
                results[key] = futs[key].result()
    rows: dict[int, CampaignRow] = {}
    for n in orders:
        row = rows.setdefault(n, CampaignRow(n))
        bad: list[tuple[str, str]] = []
        for p in range(jobs if jobs > 1 else 1):
            count, part_bad, secs = results[(n, p)]
            row.instances += count
            row.seconds += secs
            bad += part_bad
        for code, msg in sorted(bad):
            report.violations.append(Violation(n, code, msg))
        row.violations = len(bad)
    if check.fixtures:
        start = time.perf_counter()
        for order, msgs in check.fixtures():
            row = rows.setdefault(order, CampaignRow(order))
            row.instances += 1
            row.violations += len(msgs)
            report.violations += [Violation(order, "fixture", m) for m in msgs]
        spent = time.perf_counter() - start
        report.notes.append(f"fixture instances took {spent:.3f}s")
    report.rows = [rows[n] for n in sorted(rows)]
    report.violations.sort(key=lambda v: (v.n, v.code, v.message))
    return report


def list_checks() -> list[tuple[str, str]]:
    return [(c.name, c.description) for c in REGISTRY.values()]
