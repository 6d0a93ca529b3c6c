"""Graph and tree containers, distance metrics and text formats.

Vertices are dense integers ``0..n-1``. Every container here is immutable;
derived data (adjacency, leaves, parents) is computed lazily and cached.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from symtree.errors import (
    CycleError,
    DisconnectedError,
    DuplicateEdgeError,
    MalformedLineError,
    NonContiguousError,
    SelfLoopError,
    SymtreeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise SymtreeError("vertex count must be non-negative")
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise SymtreeError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise SymtreeError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise SymtreeError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self.adj, 0)) == self.n


@dataclass(frozen=True)
class Tree(Graph):
    """Connected acyclic graph. The one-vertex tree is allowed."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.n < 1:
            raise SymtreeError("a tree needs at least one vertex")
        if len(self.edges) != self.n - 1 or not self.is_connected():
            raise SymtreeError("edges do not form a tree")

    @cached_property
    def leaves(self) -> frozenset[int]:
        if self.n == 1:
            return frozenset()
        return frozenset(v for v in range(self.n) if len(self.adj[v]) == 1)

    def parents(self, root: int) -> list[int]:
        """Parent array for the tree hung from ``root``; the root maps to -1."""
        par = [-2] * self.n
        par[root] = -1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if par[w] == -2:
                    par[w] = v
                    queue.append(w)
        return par

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "Tree":
        return cls(len(parents), tuple((p, v) for v, p in enumerate(parents) if p >= 0))


@dataclass(frozen=True)
class RootedTree:
    """A tree with a distinguished root.

    ``origin`` optionally maps local vertex ids back to the ids of a larger
    tree the piece was cut from.
    """

    tree: Tree
    root: int = 0
    origin: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.tree.n:
            raise SymtreeError(f"root {self.root} not a vertex")

    @property
    def n(self) -> int:
        return self.tree.n

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        par = self.tree.parents(self.root)
        kids: list[list[int]] = [[] for _ in range(self.tree.n)]
        for v, p in enumerate(par):
            if p >= 0:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    def global_id(self, v: int) -> int:
        return v if self.origin is None else self.origin[v]


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in ``1..t``."""

    colors: tuple[int, ...]
    t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.t < 1:
            raise SymtreeError("palette size must be at least 1")
        bad = [c for c in self.colors if not 1 <= c <= self.t]
        if bad:
            raise SymtreeError(f"color {bad[0]} outside 1..{self.t}")

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out

    def cost(self) -> int:
        """Number of vertices outside a largest color class."""
        if not self.colors:
            return 0
        return len(self.colors) - max(len(c) for c in self.classes().values())

    @classmethod
    def individualizing(cls, n: int, vertices: Iterable[int]) -> "Coloring":
        """Distinct colors 2, 3, ... on ``vertices``; color 1 everywhere else."""
        colors = [1] * n
        for i, v in enumerate(sorted(vertices)):
            colors[v] = i + 2
        return cls(tuple(colors), max(colors, default=1))


# ---------------------------------------------------------------------------
# distances


def bfs_distances(adj: Sequence[Sequence[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _dist_list(t: Tree, source: int) -> list[int]:
    d = bfs_distances(t.adj, source)
    return [d[v] for v in range(t.n)]


def eccentricities(t: Tree) -> list[tuple[int, int]]:
    """``(vertex, eccentricity)`` for every vertex, in vertex order.

    Uses the two ends of one longest path: in a tree the eccentricity of any
    vertex is its distance to the farther of the two.
    """
    if t.n == 1:
        return [(0, 0)]
    d0 = _dist_list(t, 0)
    a = max(range(t.n), key=lambda v: (d0[v], -v))
    da = _dist_list(t, a)
    b = max(range(t.n), key=lambda v: (da[v], -v))
    db = _dist_list(t, b)
    return [(v, max(da[v], db[v])) for v in range(t.n)]


def radius(t: Tree) -> int:
    return min(e for _, e in eccentricities(t))


def diameter(t: Tree) -> int:
    return max(e for _, e in eccentricities(t))


def center(t: Tree) -> tuple[int, ...]:
    ecc = eccentricities(t)
    r = min(e for _, e in ecc)
    return tuple(v for v, e in ecc if e == r)


def pendent_spider_decomposition(t: Tree) -> list[RootedTree]:
    """Split off, for each high-degree vertex ``u`` ending a pendent path, the
    piece ``S_u`` made of ``u`` and all pendent paths leaving it.

    A path is returned whole as one piece rooted at its smallest endpoint.
    Pieces are ordered by hub id and carry ``origin`` maps into ``t``.
    """
    if t.n < 2:
        raise SymtreeError("pendent spider decomposition needs at least 2 vertices")
    adj = t.adj
    if t.max_degree <= 2:
        end = min(t.leaves)
        order = [end]
        prev, cur = -1, end
        while len(order) < t.n:
            nxt = next(w for w in adj[cur] if w != prev)
            order.append(nxt)
            prev, cur = cur, nxt
        return [_piece(t, order[0], order)]
    members: dict[int, list[int]] = {}
    for leaf in sorted(t.leaves):
        path = [leaf]
        prev, cur = -1, leaf
        while True:
            nxt = next(w for w in adj[cur] if w != prev)
            if len(adj[nxt]) >= 3:
                break
            path.append(nxt)
            prev, cur = cur, nxt
        members.setdefault(nxt, [nxt]).extend(path)
    return [_piece(t, u, members[u]) for u in sorted(members)]


def _piece(t: Tree, root: int, vertices: Iterable[int]) -> RootedTree:
    verts = sorted(set(vertices))
    local = {v: i for i, v in enumerate(verts)}
    edges = [(local[u], local[v]) for u, v in t.edges if u in local and v in local]
    return RootedTree(Tree(len(verts), tuple(edges)), local[root], tuple(verts))


def induced_tree(t: Tree, vertices: Iterable[int], root: int) -> RootedTree:
    """Rooted view of the subtree induced by a connected vertex set."""
    return _piece(t, root, vertices)


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str, *, tree: bool = False) -> Graph:
    """Parse ``u v`` lines into a Graph, or a Tree when ``tree`` is set.

    Lines starting with ``#`` and blank lines are skipped. A line holding a
    single id declares that vertex, which is how the one-vertex tree is
    written.
    """
    seen: dict[Edge, int] = {}
    declared: set[int] = set()
    uf: dict[int, int] = {}

    def find(x: int) -> int:
        while uf.setdefault(x, x) != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = lineno
        parts = line.split()
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise MalformedLineError(f"expected integers, got {line!r}", lineno) from None
        if len(ids) not in (1, 2) or any(i < 0 for i in ids):
            raise MalformedLineError(f"expected 'u v' with non-negative ids, got {line!r}", lineno)
        if len(ids) == 1:
            declared.add(ids[0])
            continue
        u, v = ids
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"edge {u}-{v} repeats line {seen[key]}", lineno)
        seen[key] = lineno
        declared.update(key)
        if tree:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise CycleError(f"cycle detected at edge {u}-{v}", lineno)
            uf[ru] = rv
    n = max(declared) + 1 if declared else 0
    missing = sorted(set(range(n)) - declared)
    if missing:
        raise NonContiguousError(f"vertex ids must be contiguous from 0; missing {missing[0]}", last_line)
    edges = tuple(seen)
    if tree:
        if n == 0:
            raise DisconnectedError("empty input is not a tree", 0)
        if len(edges) != n - 1:
            raise DisconnectedError(f"{n} vertices but {len(edges)} edges; graph is disconnected", 0)
        return Tree(n, edges)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    if g.n == 1 and not g.edges:
        return "0\n"
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def to_dot(g: Graph, coloring: Coloring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = [f'label="{v}"']
        if coloring is not None:
            c = coloring.colors[v]
            hue = (c - 1) / max(coloring.t, 1)
            attrs += ["style=filled", f'fillcolor="{hue:.3f} 0.600 0.950"', f'color_id="{c}"']
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ecc_record(t: Tree) -> dict:
    """JSON-ready record with keys n, radius, diameter, eccentric_sequence."""
    from symtree.eccentric import eccentric_sequence_of

    seq = eccentric_sequence_of(t)
    return {
        "n": t.n,
        "radius": seq.r,
        "diameter": seq.d,
        "eccentric_sequence": [[i, m] for i, m in seq.pairs],
    }


def ecc_record_json(t: Tree) -> str:
    return json.dumps(ecc_record(t))
