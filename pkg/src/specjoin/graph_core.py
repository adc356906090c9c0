"""Explicit graph construction and predicates.

Graphs are simple, undirected, immutable, with vertices labeled 0..order-1.
The joined union materializer lays component blocks out consecutively in
outer-vertex order; that fixed labeling is relied on elsewhere (block i of
the joined union occupies offsets sum(n_k for k < i) .. + n_i).
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Iterable, Sequence

import numpy as np


class Graph:
    """Undirected simple graph: vertex count plus a set of unordered edges."""

    __slots__ = ("order", "edges", "adjacency")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u},{v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.order = order
        self.edges = frozenset(seen)
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.order, self.order))
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.order, self.edges))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def make_complete(m: int) -> Graph:
    if m < 1:
        raise ValueError("complete graph needs m >= 1")
    return Graph(m, [(u, v) for u in range(m) for v in range(u + 1, m)])


def make_empty(m: int) -> Graph:
    if m < 1:
        raise ValueError("empty graph needs m >= 1")
    return Graph(m)


def make_cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycle needs m >= 3")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def make_star(m: int) -> Graph:
    """Star on m vertices; vertex 0 is the center."""
    if m < 1:
        raise ValueError("star needs m >= 1")
    return Graph(m, [(0, i) for i in range(1, m)])


def from_edge_list(order: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(order, pairs)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format: first line N, then lines "u v".

    Blank lines are ignored; loops and duplicate edges are rejected.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        order = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v', got {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return Graph(order, pairs)


def load_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph) -> str:
    lines = [str(g.order)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def joined_union(outer: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex i of ``outer`` by ``parts[i]`` and join blocks i, j
    completely whenever i ~ j in ``outer``.

    Block i occupies the consecutive label range starting at
    sum(parts[k].order for k < i); two calls with equal inputs produce
    identical edge sets.
    """
    if len(parts) != outer.order:
        raise ValueError(f"need {outer.order} parts, got {len(parts)}")
    offsets = [0]
    for p in parts:
        if p.order < 1:
            raise ValueError("every part must have order >= 1")
        offsets.append(offsets[-1] + p.order)
    edges = []
    for i, p in enumerate(parts):
        base = offsets[i]
        edges.extend((base + u, base + v) for u, v in p.edges)
    for i, j in outer.edges:
        for u in range(offsets[i], offsets[i + 1]):
            for v in range(offsets[j], offsets[j + 1]):
                edges.append((u, v))
    return Graph(offsets[-1], edges)


def degrees(g: Graph) -> list[int]:
    return [len(nbrs) for nbrs in g.adjacency]


def is_regular(g: Graph) -> int | None:
    """The common degree if g is regular, else None."""
    degs = degrees(g)
    if not degs:
        return None
    return degs[0] if all(d == degs[0] for d in degs) else None


def _component_labels(g: Graph) -> list[int]:
    label = [-1] * g.order
    current = 0
    for start in range(g.order):
        if label[start] >= 0:
            continue
        label[start] = current
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if label[v] < 0:
                    label[v] = current
                    queue.append(v)
        current += 1
    return label


def components(g: Graph) -> int:
    labels = _component_labels(g)
    return max(labels) + 1 if labels else 0


def is_connected(g: Graph) -> bool:
    return components(g) <= 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.order
    for start in range(g.order):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def random_regular(order: int, degree: int, rng: random.Random, max_tries: int = 500) -> Graph:
    """Random d-regular graph via the pairing model with rejection.

    Intended for small orders (test corpora); raises if order*degree is odd
    or degree >= order, or if no simple pairing is found within max_tries.
    """
    if degree < 0 or degree >= order:
        raise ValueError(f"degree {degree} infeasible for order {order}")
    if (order * degree) % 2 != 0:
        raise ValueError("order * degree must be even")
    if degree == 0:
        return make_empty(order)
    if degree == order - 1:
        return make_complete(order)
    stubs_template = [v for v in range(order) for _ in range(degree)]
    for _ in range(max_tries):
        stubs = stubs_template[:]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        keys = set()
        ok = True
        for u, v in pairs:
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in keys:
                ok = False
                break
            keys.add(key)
        if ok:
            return Graph(order, pairs)
    raise ValueError(f"no simple {degree}-regular pairing found for order {order}")
