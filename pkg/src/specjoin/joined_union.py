"""Structural spectra of joined unions of regular graphs.

The joined union G[G_1,...,G_n] replaces vertex i of the outer graph G by a
regular graph G_i and joins blocks completely along outer edges.  Its
normalized Laplacian spectrum splits into:

- for every component i, the values 1 - lambda/(r_i + alpha_i) over the
  non-Perron adjacency eigenvalues lambda of G_i (one copy of r_i dropped),
  where alpha_i is the total order of the components on outer-neighbors of
  vertex i, so r_i + alpha_i is the common degree of block i;
- the n eigenvalues of a small quotient matrix over the block partition
  (which is equitable, so these are exact eigenvalues, not estimates).

This module computes both parts without materializing the big graph.  The
materializer is still available for oracle cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IsolatedVertexError, NonRegularComponentError
from .graph_core import Graph, is_regular, joined_union, make_complete, make_cycle, make_empty
from .spectra import (
    SymMatrix,
    Spectrum,
    adjacency_spectrum_closed,
    eigenvalues_symmetric,
)

_PERRON_TOL = 1e-9


@dataclass(frozen=True)
class Component:
    """A regular component: order, regularity, and an adjacency-spectrum source.

    ``kind`` is one of "complete", "empty", "cycle" (closed-form spectra),
    "explicit" (an actual graph, eigensolved on demand) or "spectrum" (the
    full adjacency eigenvalue list supplied directly).
    """

    order: int
    regularity: int
    kind: str
    graph: Graph | None = None
    adjacency_eigenvalues: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("component order must be >= 1")
        if not 0 <= self.regularity <= self.order - 1:
            raise ValueError(
                f"regularity {self.regularity} out of range for order {self.order}"
            )

    @classmethod
    def complete(cls, m: int) -> Component:
        return cls(m, m - 1, "complete")

    @classmethod
    def empty(cls, m: int) -> Component:
        return cls(m, 0, "empty")

    @classmethod
    def cycle(cls, m: int) -> Component:
        if m < 3:
            raise ValueError("cycle needs m >= 3")
        return cls(m, 2, "cycle")

    @classmethod
    def explicit(cls, g: Graph) -> Component:
        r = is_regular(g)
        if r is None:
            raise NonRegularComponentError(
                f"component graph of order {g.order} is not regular"
            )
        return cls(g.order, r, "explicit", graph=g)

    @classmethod
    def from_spectrum(cls, order: int, regularity: int, eigenvalues) -> Component:
        vals = tuple(sorted(float(v) for v in eigenvalues))
        if len(vals) != order:
            raise ValueError(f"need {order} adjacency eigenvalues, got {len(vals)}")
        if abs(vals[-1] - regularity) > _PERRON_TOL:
            raise ValueError(
                f"largest adjacency eigenvalue {vals[-1]} does not match regularity {regularity}"
            )
        return cls(order, regularity, "spectrum", adjacency_eigenvalues=vals)

    def non_perron_eigenvalues(self) -> np.ndarray:
        """Adjacency eigenvalues with one copy of the regularity removed."""
        if self.kind in ("complete", "empty", "cycle"):
            full = adjacency_spectrum_closed(self.kind, self.order).flatten()
        elif self.kind == "explicit":
            full = eigenvalues_symmetric(SymMatrix(self.graph.adjacency_matrix()))
        elif self.kind == "spectrum":
            full = np.array(self.adjacency_eigenvalues)
        else:
            raise ValueError(f"unknown component kind {self.kind!r}")
        if abs(full[-1] - self.regularity) > 1e-8:
            raise NonRegularComponentError(
                f"largest adjacency eigenvalue {full[-1]} != regularity {self.regularity}"
            )
        return full[:-1]

    def materialize(self) -> Graph:
        if self.kind == "complete":
            return make_complete(self.order)
        if self.kind == "empty":
            return make_empty(self.order)
        if self.kind == "cycle":
            return make_cycle(self.order)
        if self.kind == "explicit":
            return self.graph
        raise ValueError(f"component kind {self.kind!r} cannot be materialized")


@dataclass(frozen=True)
class JoinedUnionSpec:
    """Outer graph of order n plus the n component descriptors."""

    outer: Graph
    components: tuple[Component, ...]

    def __post_init__(self):
        if len(self.components) != self.outer.order:
            raise ValueError(
                f"need {self.outer.order} components, got {len(self.components)}"
            )

    @property
    def total_order(self) -> int:
        return sum(c.order for c in self.components)


def alphas(spec: JoinedUnionSpec) -> list[int]:
    """alpha_i = total order of the components attached to outer-neighbors of i."""
    orders = [c.order for c in spec.components]
    return [
        sum(orders[j] for j in spec.outer.adjacency[i])
        for i in range(spec.outer.order)
    ]


def block_degrees(spec: JoinedUnionSpec) -> list[int]:
    """Common degree r_i + alpha_i of every vertex in block i."""
    return [c.regularity + a for c, a in zip(spec.components, alphas(spec))]


@dataclass(frozen=True)
class QuotientMatrix:
    """The n x n quotient over the block partition, plus the block sizes
    needed to symmetrize it by a diagonal similarity."""

    order: int
    entries: np.ndarray
    block_sizes: tuple[int, ...]

    def __post_init__(self):
        d = np.sqrt(np.array(self.block_sizes, dtype=np.float64))
        s = self.entries * np.outer(d, 1.0 / d)
        if self.order and np.abs(s - s.T).max() > 1e-12:
            raise ValueError("diagonal similarity of quotient is not symmetric to 1e-12")

    def symmetrized(self) -> SymMatrix:
        d = np.sqrt(np.array(self.block_sizes, dtype=np.float64))
        s = self.entries * np.outer(d, 1.0 / d)
        return SymMatrix((s + s.T) / 2.0)


def quotient_matrix(spec: JoinedUnionSpec) -> QuotientMatrix:
    """Entries: diagonal alpha_i/(alpha_i+r_i); off-diagonal
    -n_j/sqrt((r_i+alpha_i)(r_j+alpha_j)) on outer edges, 0 elsewhere."""
    n = spec.outer.order
    alph = alphas(spec)
    deg = block_degrees(spec)
    for i, d in enumerate(deg):
        if d == 0:
            raise IsolatedVertexError(i)
    orders = [c.order for c in spec.components]
    m = np.zeros((n, n))
    for i in range(n):
        m[i, i] = alph[i] / deg[i]
        for j in spec.outer.adjacency[i]:
            m[i, j] = -orders[j] / math.sqrt(deg[i] * deg[j])
    return QuotientMatrix(n, m, tuple(orders))


def quotient_eigenvalues(q: QuotientMatrix) -> np.ndarray:
    """Eigenvalues of the (generally nonsymmetric) quotient, ascending.

    The diagonal similarity D^{1/2} M D^{-1/2} with D = diag(block sizes) is
    symmetric, so the Jacobi solver applies and all eigenvalues are real.
    """
    return eigenvalues_symmetric(q.symmetrized())


def structural_spectrum(spec: JoinedUnionSpec) -> Spectrum:
    """Full normalized Laplacian spectrum of the joined union.

    Component contributions are tagged "structural", the quotient's
    eigenvalues "quotient"; the totals always add up to the realized order.
    """
    deg = block_degrees(spec)
    for i, d in enumerate(deg):
        if d == 0:
            raise IsolatedVertexError(i)
    pairs = []
    for i, comp in enumerate(spec.components):
        scale = 1.0 / deg[i]
        for lam in comp.non_perron_eigenvalues():
            pairs.append((1.0 - scale * lam, 1, "structural"))
    for v in quotient_eigenvalues(quotient_matrix(spec)):
        pairs.append((float(v), 1, "quotient"))
    return Spectrum.from_pairs(pairs)


def materialize(spec: JoinedUnionSpec) -> Graph:
    """Oracle-side object: the explicit joined-union graph."""
    return joined_union(spec.outer, [c.materialize() for c in spec.components])
