from __future__ import annotations

import random

from hypothesis import HealthCheck, settings, strategies as st

from symtree.graph import Graph, Tree

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12) -> Tree:
    """Random labelled tree: random parent array, then a random relabelling."""
    n = draw(st.integers(min_n, max_n))
    parents = [-1] + [draw(st.integers(0, i - 1)) for i in range(1, n)]
    perm = draw(st.permutations(range(n)))
    edges = tuple((perm[p], perm[v]) for v, p in enumerate(parents) if p >= 0)
    return Tree(n, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


def relabel(t: Tree, seed: int) -> Tree:
    perm = list(range(t.n))
    random.Random(seed).shuffle(perm)
    return Tree(t.n, tuple((perm[u], perm[v]) for u, v in t.edges))


def prufer_decode(seq: list[int], n: int) -> Tree:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Tree(n, tuple(edges))
