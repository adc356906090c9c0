"""Dense symmetric linear algebra and spectrum bookkeeping.

This module is the oracle side of the toolkit: normalized Laplacian
assembly, a self-contained cyclic Jacobi eigensolver, closed-form adjacency
spectra of the standard regular families, and multiset comparison of
spectra.  Every structural formula elsewhere is validated against this
path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import jacobi_sweeps
from .errors import IsolatedVertexError, NoConvergenceError, TotalMismatchError
from .graph_core import Graph, degrees

SYMMETRY_TOL = 1e-12
JACOBI_TOL_FACTOR = 1e-12
JACOBI_MAX_SWEEPS = 100

#: default tolerance for presentation-layer multiplicity grouping
GROUP_TOL = 1e-7
#: default tolerance for spectrum comparisons
COMPARE_TOL = 1e-8

SOURCES = ("structural", "quotient", "closed_form", "oracle")


class SymMatrix:
    """Square real matrix, checked symmetric at construction."""

    __slots__ = ("order", "entries")

    def __init__(self, entries):
        a = np.array(entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"need a square matrix, got shape {a.shape}")
        if a.size and np.abs(a - a.T).max() > SYMMETRY_TOL:
            raise ValueError("matrix is not symmetric to 1e-12")
        a = (a + a.T) / 2.0
        a.setflags(write=False)
        self.order = a.shape[0]
        self.entries = a


@dataclass(frozen=True)
class SpectralLine:
    value: float
    multiplicity: int
    source: str


@dataclass(frozen=True)
class Spectrum:
    """Multiset of real eigenvalues with multiplicities and provenance tags.

    Lines are sorted by value; lines with bit-equal values and the same
    source are merged, while equal values from different sources (a
    structural value can tie a quotient value exactly) stay separate.
    """

    lines: tuple[SpectralLine, ...]

    def __post_init__(self):
        prev = None
        for line in self.lines:
            if line.multiplicity < 1:
                raise ValueError("multiplicities must be >= 1")
            if line.source not in SOURCES:
                raise ValueError(f"unknown source {line.source!r}")
            if prev is not None:
                if line.value < prev.value:
                    raise ValueError("lines must be sorted by value")
                if line.value == prev.value and line.source == prev.source:
                    raise ValueError("equal-value lines with one source must be merged")
            prev = line

    @classmethod
    def from_pairs(cls, pairs) -> Spectrum:
        """Build from (value, multiplicity, source) triples, merging exact ties."""
        ordered = sorted(((float(v), int(m), str(src)) for v, m, src in pairs), key=lambda x: (x[0], x[2]))
        merged: list[list] = []
        for v, m, src in ordered:
            if merged and merged[-1][0] == v and merged[-1][2] == src:
                merged[-1][1] += m
            else:
                merged.append([v, m, src])
        return cls(tuple(SpectralLine(v, m, src) for v, m, src in merged))

    @classmethod
    def from_values(cls, values, source: str) -> Spectrum:
        return cls.from_pairs((v, 1, source) for v in values)

    @property
    def total(self) -> int:
        return sum(line.multiplicity for line in self.lines)

    def flatten(self) -> np.ndarray:
        """Values repeated by multiplicity, ascending."""
        return np.repeat(
            [line.value for line in self.lines],
            [line.multiplicity for line in self.lines],
        )

    @property
    def min_value(self) -> float:
        return self.lines[0].value

    @property
    def max_value(self) -> float:
        return self.lines[-1].value

    def count_near(self, x: float, tol: float = GROUP_TOL) -> int:
        return sum(line.multiplicity for line in self.lines if abs(line.value - x) <= tol)

    def retag(self, source: str) -> Spectrum:
        return Spectrum.from_pairs((l.value, l.multiplicity, source) for l in self.lines)

    def merged_with(self, other: Spectrum) -> Spectrum:
        return Spectrum.from_pairs(
            [(l.value, l.multiplicity, l.source) for l in self.lines]
            + [(l.value, l.multiplicity, l.source) for l in other.lines]
        )


def normalized_laplacian(g: Graph) -> SymMatrix:
    """D^{-1/2} (D - A) D^{-1/2}: unit diagonal, -1/sqrt(d_i d_j) on edges.

    Undefined at isolated vertices; those raise rather than picking a
    convention.
    """
    degs = degrees(g)
    for v, d in enumerate(degs):
        if d == 0:
            raise IsolatedVertexError(v)
    dinv = 1.0 / np.sqrt(np.array(degs, dtype=np.float64))
    a = g.adjacency_matrix()
    lap = -a * np.outer(dinv, dinv)
    np.fill_diagonal(lap, 1.0)
    return SymMatrix(lap)


def eigenvalues_symmetric(m: SymMatrix) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi.

    Sweeps run until the off-diagonal Frobenius norm drops below
    1e-12 * (diagonal norm + 1), capped at 100 sweeps; hitting the cap
    raises NoConvergenceError (a numerics bug, never expected for
    symmetric input).
    """
    a = np.array(m.entries, dtype=np.float64)
    sweeps = jacobi_sweeps(a, JACOBI_MAX_SWEEPS, JACOBI_TOL_FACTOR)
    if sweeps < 0:
        raise NoConvergenceError(
            f"Jacobi did not converge within {JACOBI_MAX_SWEEPS} sweeps (order {m.order})"
        )
    return np.sort(np.diag(a))


def laplacian_spectrum(g: Graph) -> np.ndarray:
    """Oracle route: materialized normalized Laplacian through Jacobi."""
    return eigenvalues_symmetric(normalized_laplacian(g))


def _cycle_adjacency_pairs(m: int):
    """Adjacency eigenvalues 2cos(2*pi*k/m) of the m-cycle with exact
    multiplicity pairing (k and m-k coincide)."""
    pairs = [(2.0, 1)]
    for k in range(1, (m - 1) // 2 + 1):
        pairs.append((2.0 * math.cos(2.0 * math.pi * k / m), 2))
    if m % 2 == 0:
        pairs.append((-2.0, 1))
    return pairs


def adjacency_spectrum_closed(kind: str, m: int) -> Spectrum:
    """Closed-form adjacency spectrum of K_m, the empty graph, or C_m."""
    if m < 1:
        raise ValueError("order must be >= 1")
    if kind == "complete":
        pairs = [(float(m - 1), 1)]
        if m > 1:
            pairs.append((-1.0, m - 1))
    elif kind == "empty":
        pairs = [(0.0, m)]
    elif kind == "cycle":
        if m < 3:
            raise ValueError("cycle needs m >= 3")
        pairs = _cycle_adjacency_pairs(m)
    else:
        raise ValueError(f"unsupported kind {kind!r}")
    return Spectrum.from_pairs((v, mult, "closed_form") for v, mult in pairs)


def group_multiplicities(values, tol: float = GROUP_TOL, source: str = "oracle") -> Spectrum:
    """Cluster an ascending value list into (value, multiplicity) lines.

    Greedy: a value joins the current cluster when its gap to the cluster
    representative (the running mean) is at most tol.  Presentation-layer
    only; comparisons always use flattened lists.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    vals = list(values)
    if any(b < a for a, b in zip(vals, vals[1:])):
        raise ValueError("values must be ascending")
    pairs = []
    cluster_sum = 0.0
    cluster_count = 0
    for v in vals:
        if cluster_count and abs(v - cluster_sum / cluster_count) <= tol:
            cluster_sum += v
            cluster_count += 1
        else:
            if cluster_count:
                pairs.append((cluster_sum / cluster_count, cluster_count))
            cluster_sum = float(v)
            cluster_count = 1
    if cluster_count:
        pairs.append((cluster_sum / cluster_count, cluster_count))
    return Spectrum.from_pairs((v, m, source) for v, m in pairs)


@dataclass(frozen=True)
class ComparisonReport:
    max_deviation: float
    tol: float
    passed: bool
    total: int


def compare_spectra(a: Spectrum, b: Spectrum, tol: float = COMPARE_TOL) -> ComparisonReport:
    """Elementwise max deviation of the two flattened sorted value lists."""
    if a.total != b.total:
        raise TotalMismatchError(f"totals differ: {a.total} vs {b.total}")
    if a.total == 0:
        return ComparisonReport(0.0, tol, True, 0)
    dev = float(np.abs(a.flatten() - b.flatten()).max())
    return ComparisonReport(dev, tol, dev <= tol, a.total)


def compare_value_lists(a, b, tol: float = COMPARE_TOL) -> ComparisonReport:
    """compare_spectra for raw sorted arrays."""
    av = np.sort(np.asarray(a, dtype=np.float64))
    bv = np.sort(np.asarray(b, dtype=np.float64))
    if av.shape != bv.shape:
        raise TotalMismatchError(f"totals differ: {av.size} vs {bv.size}")
    dev = float(np.abs(av - bv).max()) if av.size else 0.0
    return ComparisonReport(dev, tol, dev <= tol, int(av.size))
