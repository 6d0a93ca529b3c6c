"""Named trees and graphs used as fixtures and sharpness witnesses.

All constructors label vertices deterministically; ``construct`` dispatches
by identifier and validates parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Sequence

from symtree.brute import automorphisms, current_limits
from symtree.eccentric import EccentricSequence, lesniak_realizable
from symtree.errors import SymtreeError
from symtree.graph import Graph, Tree

FIG2_LEGS = (1, 1, 2, 2, 2, 2)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise SymtreeError(msg)


def path(n: int) -> Tree:
    _need(n >= 1, "path needs n >= 1")
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Tree:
    _need(leaves >= 1, "star needs at least one leaf")
    return Tree(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def spider(legs: Sequence[int]) -> Tree:
    """Hub 0; each leg numbered outward from the hub, legs in the given order."""
    _need(len(legs) >= 1 and all(k >= 1 for k in legs), "spider legs must be positive")
    edges = []
    nxt = 1
    for k in legs:
        prev = 0
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def broom(k: int, leaves: int) -> Tree:
    """S_{k,1,...,1}; vertex ``k`` on the long leg is the end."""
    _need(k >= 1 and leaves >= 1, "broom needs k >= 1 and at least one short leg")
    return spider([k] + [1] * leaves)


def fig2_spider() -> Tree:
    return spider(FIG2_LEGS)


def tk_family(k: int, D: int) -> Tree:
    """Path v_0..v_{k-1} (ids 0..k-1) with D leaves on every path vertex."""
    _need(k >= 1 and D >= 2, "tk-family needs k >= 1 and D >= 2")
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i in range(k):
        for _ in range(D):
            edges.append((i, nxt))
            nxt += 1
    return Tree(nxt, tuple(edges))


def sharpness_chain(k: int) -> Tree:
    """k copies of the order-11 spider with their hubs joined into a path."""
    _need(k >= 1, "sharpness-chain needs k >= 1")
    base = fig2_spider()
    edges = []
    for c in range(k):
        off = 11 * c
        edges += [(u + off, v + off) for u, v in base.edges]
        if c:
            edges.append((off - 11, off))
    return Tree(11 * k, tuple(edges))


def t_x(x: EccentricSequence | str) -> Tree:
    """Path v_0..v_d with m_i - 2 pendants on v_{i-1} for i = r+1..d."""
    if isinstance(x, str):
        x = EccentricSequence.parse(x)
    _need(lesniak_realizable(x), f"sequence {x} is not realizable by a tree")
    d = x.d
    edges = [(i, i + 1) for i in range(d)]
    nxt = d + 1
    for i in range(x.r + 1, d + 1):
        for _ in range(x.m(i) - 2):
            edges.append((i - 1, nxt))
            nxt += 1
    return Tree(nxt, tuple(edges))


def prop55(r: int, k: int) -> Tree:
    """Path v_0..v_{2r} with pendent paths: length j at v_j for 1 <= j <= k-2,
    and lengths r-1, ..., r-k+2 at v_r."""
    _need(r >= 1 and 2 <= k <= r + 1, "prop55 needs 2 <= k <= r+1")
    edges = [(i, i + 1) for i in range(2 * r)]
    nxt = 2 * r + 1

    def hang(at: int, length: int) -> None:
        nonlocal nxt
        prev = at
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1

    for j in range(1, k - 1):
        hang(j, j)
    for length in range(r - 1, r - k + 1, -1):
        hang(r, length)
    return Tree(nxt, tuple(edges))


def default_gk_base(k: int) -> Graph:
    """Path v_1..v_{k-1} (ids 0..k-2) plus a pendant (id k-1) on v_3."""
    _need(k >= 4, "default base needs k >= 4")
    edges = [(i, i + 1) for i in range(k - 2)] + [(2, k - 1)]
    return Tree(k, tuple(edges))


def gk(k: int, D: int = 2, base: Graph | None = None) -> Graph:
    """Base graph on ids 0..k-1 plus D twins per nonempty subset U.

    The twins of the subset with bitmask ``mask`` get ids
    ``k + (mask - 1) * D + j`` for j = 0..D-1, each adjacent to exactly U.
    """
    _need(D >= 2, "gk needs D >= 2")
    h = base if base is not None else default_gk_base(k)
    _need(h.n == k, f"base graph has {h.n} vertices, expected {k}")
    edges = list(h.edges)
    for mask in range(1, 1 << k):
        members = [i for i in range(k) if mask >> i & 1]
        for j in range(D):
            tw = gk_twin(k, D, mask, j)
            edges += [(u, tw) for u in members]
    return Graph(k + D * ((1 << k) - 1), tuple(edges))


def gk_twin(k: int, D: int, mask: int, j: int) -> int:
    return k + (mask - 1) * D + j


def _is_asymmetric(h: Graph) -> bool:
    if isinstance(h, Tree) and h.n > current_limits().group:
        from symtree.params import fixing_number

        return fixing_number(h)[0] == 0
    return len(automorphisms(h, limit=max(h.n, current_limits().group))) == 1


@dataclass
class GkCertificate:
    k: int
    D: int
    n: int
    base_asymmetric: bool
    degree_separated: bool
    swaps_checked: int
    swaps_valid: int
    coloring_breaks_all: bool
    lower_bound: int
    upper_bound_verified: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.base_asymmetric and self.degree_separated
                and self.swaps_valid == self.swaps_checked and self.coloring_breaks_all)

    def as_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "D": self.D,
            "n": self.n,
            "base_asymmetric": self.base_asymmetric,
            "degree_separated": self.degree_separated,
            "swaps_checked": self.swaps_checked,
            "swaps_valid": self.swaps_valid,
            "coloring_breaks_all": self.coloring_breaks_all,
            "lower_bound": self.lower_bound,
            "upper_bound_verified": self.upper_bound_verified,
            "ok": self.ok,
        }


def gk_certificates(k: int, D: int = 2, base: Graph | None = None) -> GkCertificate:
    """Generator-level checks for the subset-twin graph.

    Every automorphism fixes the base setwise (degree separation) and hence
    pointwise (base asymmetric); what remains permutes twins of equal
    neighbourhood, so the twin transpositions generate the group.
    """
    _need(D >= 2, "D must be at least 2")
    if base is None:
        _need(k >= 7, "the default base is asymmetric only for k >= 7")
        base = default_gk_base(k)
    asym = _is_asymmetric(base)
    if not asym:
        raise SymtreeError(f"base graph on {k} vertices is not asymmetric")
    g = gk(k, D, base)
    adj = g.adj
    edge_set = g.edge_set
    degree_separated = min(len(adj[v]) for v in range(k)) > max(len(adj[v]) for v in range(k, g.n))
    colors = [1] * k + [j + 1 for _ in range(1, 1 << k) for j in range(D)]

    checked = valid = 0
    breaks = True
    for mask in range(1, 1 << k):
        twins = [gk_twin(k, D, mask, j) for j in range(D)]
        for a, b in combinations(twins, 2):
            checked += 1
            if _swap_is_automorphism(adj, edge_set, a, b):
                valid += 1
            if colors[a] == colors[b]:
                breaks = False
    return GkCertificate(
        k=k,
        D=D,
        n=g.n,
        base_asymmetric=asym,
        degree_separated=degree_separated,
        swaps_checked=checked,
        swaps_valid=valid,
        coloring_breaks_all=breaks,
        lower_bound=(D - 1) * ((1 << k) - 1),
    )


def _swap_is_automorphism(adj, edge_set, a: int, b: int) -> bool:
    def img(x: int) -> int:
        return b if x == a else a if x == b else x

    for x in (a, b):
        for y in adj[x]:
            e = (min(img(x), img(y)), max(img(x), img(y)))
            if e not in edge_set:
                return False
    return True


# ---------------------------------------------------------------------------
# dispatch


def _ints(v: Any) -> list[int]:
    if isinstance(v, str):
        return [int(p) for p in v.replace(";", ",").split(",") if p.strip()]
    return [int(p) for p in v]


_BUILDERS: dict[str, tuple[Callable[..., Graph], dict[str, Callable[[Any], Any]]]] = {
    "fig2-spider": (fig2_spider, {}),
    "tk-family": (tk_family, {"k": int, "D": int}),
    "sharpness-chain": (sharpness_chain, {"k": int}),
    "t-x": (t_x, {"x": lambda v: v if isinstance(v, EccentricSequence) else EccentricSequence.parse(v)}),
    "prop55": (prop55, {"r": int, "k": int}),
    "gk": (gk, {"k": int, "D": int}),
    "spider": (spider, {"legs": _ints}),
    "broom": (broom, {"k": int, "leaves": int}),
    "path": (path, {"n": int}),
    "star": (star, {"leaves": int}),
}

CONSTRUCTION_IDS = tuple(_BUILDERS)


def construct(cid: str, **params: Any) -> Graph:
    if cid not in _BUILDERS:
        raise SymtreeError(f"unknown construction {cid!r}; choose from {', '.join(CONSTRUCTION_IDS)}")
    fn, schema = _BUILDERS[cid]
    params = {("x" if k == "X" else k): v for k, v in params.items()}
    unknown = set(params) - set(schema)
    if unknown:
        raise SymtreeError(f"{cid} takes parameters {sorted(schema) or 'none'}, got {sorted(unknown)}")
    try:
        args = {k: schema[k](v) for k, v in params.items()}
        return fn(**args)
    except TypeError as exc:
        raise SymtreeError(f"{cid}: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, SymtreeError):
            raise
        raise SymtreeError(f"{cid}: bad parameter value ({exc})") from None
