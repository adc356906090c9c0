"""Closed-form graph families built on the joined-union engine.

Every family spectrum is derived by running the general structural engine
on the family's joined-union description - a single source of truth - and
retagging the result as closed form.  The *_printed companions return the
literal published constants for each family so the verify suite can report
where those printed lists disagree with the engine and the oracle (several
do: the complete-split largest value, the cone/wheel/multi-step index
ranges and omitted lines).
"""

from __future__ import annotations

import math

from .graph_core import Graph, make_complete, make_star
from .joined_union import Component, JoinedUnionSpec, structural_spectrum
from .spectra import Spectrum


def _k2_outer() -> Graph:
    return make_complete(2)


def multipartite_spec(part_sizes) -> JoinedUnionSpec:
    """Complete multipartite K_{n1,...,np} as K_p over empty parts."""
    sizes = [int(s) for s in part_sizes]
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ValueError("need at least two parts, each of order >= 1")
    return JoinedUnionSpec(
        make_complete(len(sizes)), tuple(Component.empty(s) for s in sizes)
    )


def equal_multipartite_spec(p: int, t: int) -> JoinedUnionSpec:
    if p < 2 or t < 1:
        raise ValueError("need p >= 2 parts of size t >= 1")
    return multipartite_spec([t] * p)


def join_spec(c1: Component, c2: Component) -> JoinedUnionSpec:
    """The usual join of two regular graphs as a two-block joined union."""
    return JoinedUnionSpec(_k2_outer(), (c1, c2))


def complete_bipartite_spec(a: int, b: int) -> JoinedUnionSpec:
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    return join_spec(Component.empty(a), Component.empty(b))


def complete_split_spec(omega: int, n: int) -> JoinedUnionSpec:
    """Clique of size omega joined to an independent set of size n - omega."""
    if omega < 1 or n < omega + 1:
        raise ValueError("need omega >= 1 and n >= omega + 1")
    return join_spec(Component.complete(omega), Component.empty(n - omega))


def cone_spec(a: int, b: int) -> JoinedUnionSpec:
    """Cycle C_a joined to an independent set of size b."""
    if a < 3 or b < 1:
        raise ValueError("need a >= 3 and b >= 1")
    return join_spec(Component.cycle(a), Component.empty(b))


def wheel_spec(n: int) -> JoinedUnionSpec:
    """Wheel on n vertices: C_{n-1} joined to a single hub."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    return join_spec(Component.cycle(n - 1), Component.empty(1))


def friendship_spec(n: int) -> JoinedUnionSpec:
    """n triangles sharing one vertex: star outer, K_1 center, K_2 leaves."""
    if n < 1:
        raise ValueError("friendship needs n >= 1")
    comps = (Component.empty(1),) + tuple(Component.complete(2) for _ in range(n))
    return JoinedUnionSpec(make_star(n + 1), comps)


def firefly_spec(p: int, n: int) -> JoinedUnionSpec:
    """Friendship graph with p of the n triangles degraded to pendant edges."""
    if n < 1 or not 0 <= p <= n:
        raise ValueError("need n >= 1 and 0 <= p <= n")
    comps = (
        (Component.empty(1),)
        + tuple(Component.empty(1) for _ in range(p))
        + tuple(Component.complete(2) for _ in range(n - p))
    )
    return JoinedUnionSpec(make_star(n + 1), comps)


def multistep_wheel_spec(a: int, b: int) -> JoinedUnionSpec:
    """a disjoint b-cycles all joined to one hub."""
    if a < 1 or b < 3:
        raise ValueError("need a >= 1 cycles of length b >= 3")
    comps = (Component.empty(1),) + tuple(Component.cycle(b) for _ in range(a))
    return JoinedUnionSpec(make_star(a + 1), comps)


def family_spectrum(spec: JoinedUnionSpec) -> Spectrum:
    return structural_spectrum(spec).retag("closed_form")


def multipartite_spectrum(part_sizes) -> Spectrum:
    return family_spectrum(multipartite_spec(part_sizes))


def equal_multipartite_spectrum(p: int, t: int) -> Spectrum:
    return family_spectrum(equal_multipartite_spec(p, t))


def join_two_regular(n1: int, r1: int, n2: int, r2: int, eigs1, eigs2) -> Spectrum:
    """Join spectrum from orders, regularities and full adjacency eigenvalue
    lists of the two parts."""
    return family_spectrum(
        join_spec(
            Component.from_spectrum(n1, r1, eigs1),
            Component.from_spectrum(n2, r2, eigs2),
        )
    )


def complete_bipartite(a: int, b: int) -> Spectrum:
    return family_spectrum(complete_bipartite_spec(a, b))


def complete_split(omega: int, n: int) -> Spectrum:
    return family_spectrum(complete_split_spec(omega, n))


def cone(a: int, b: int) -> Spectrum:
    return family_spectrum(cone_spec(a, b))


def wheel(n: int) -> Spectrum:
    return family_spectrum(wheel_spec(n))


def friendship(n: int) -> Spectrum:
    return family_spectrum(friendship_spec(n))


def firefly(p: int, n: int) -> Spectrum:
    return family_spectrum(firefly_spec(p, n))


def multistep_wheel(a: int, b: int) -> Spectrum:
    return family_spectrum(multistep_wheel_spec(a, b))


# ---------------------------------------------------------------------------
# Printed forms: the published constants, verbatim, for discrepancy reports.
# Each returns (value, multiplicity) pairs; totals may disagree with the
# graph order where the published list is incomplete - that is the point.
# ---------------------------------------------------------------------------


def complete_bipartite_printed(a: int, b: int) -> list[tuple[float, int]]:
    return [(0.0, 1), (1.0, a + b - 2), (2.0, 1)]


def equal_multipartite_printed(p: int, t: int) -> list[tuple[float, int]]:
    return [(0.0, 1), (1.0, p * t - p), (p / (p - 1), p - 1)]


def complete_split_printed(omega: int, n: int) -> list[tuple[float, int]]:
    """Published list; its largest value (2n-omega+1)/(n-1) exceeds the
    engine/oracle largest by 2/(n-1) and the eigenvalue 1 lines are absent."""
    pairs = [(0.0, 1)]
    if omega > 1:
        pairs.append((n / (n - 1), omega - 1))
    pairs.append(((2 * n - omega + 1) / (n - 1), 1))
    return pairs


def cone_printed(a: int, b: int) -> list[tuple[float, int]]:
    """Published list with its literal index range k = 2..a-1; the k = 1
    cycle line and the eigenvalue 1 lines are absent."""
    pairs = [(1.0 - 2.0 * math.cos(2.0 * math.pi * k / a) / (2 + b), 1) for k in range(2, a)]
    pairs.append((0.0, 1))
    pairs.append(((2.0 * b + 2.0) / (b + 2.0), 1))
    return pairs


def wheel_printed(n: int) -> list[tuple[float, int]]:
    m = n - 1
    pairs = [(1.0 - (2.0 / 3.0) * math.cos(2.0 * math.pi * k / m), 1) for k in range(2, n - 1)]
    pairs.extend([(0.0, 1), (4.0 / 3.0, 1)])
    return pairs


def friendship_printed(n: int) -> list[tuple[float, int]]:
    pairs = [(0.0, 1)]
    if n > 1:
        pairs.append((0.5, n - 1))
    pairs.append((1.5, n + 1))
    return pairs


def firefly_printed(p: int, n: int) -> list[tuple[float, int]]:
    if p < 1 or n - p < 1:
        raise ValueError("published firefly list needs 1 <= p <= n - 1")
    root = math.sqrt(2 * n - p)
    disc = math.sqrt(2 * n + 7 * p)
    pairs = [(0.0, 1)]
    if n - p > 1:
        pairs.append((0.5, n - p - 1))
    if p > 1:
        pairs.append((1.0, p - 1))
    pairs.append((1.5, n - p))
    pairs.append(((5 * root - disc) / (4 * root), 1))
    pairs.append(((5 * root + disc) / (4 * root), 1))
    return pairs


def multistep_wheel_printed(a: int, b: int) -> list[tuple[float, int]]:
    """Published list: hub-family values once each (k = 2..b), no a-fold
    multiplicity and no 1/3 quotient lines."""
    pairs = [(0.0, 1), (4.0 / 3.0, 1)]
    pairs.extend(
        (1.0 - (2.0 / 3.0) * math.cos(2.0 * math.pi * k / b), 1) for k in range(2, b + 1)
    )
    return pairs


# ---------------------------------------------------------------------------
# Registry for the name:param1,param2 descriptor grammar.
# ---------------------------------------------------------------------------

FAMILY_BUILDERS = {
    "complete_bipartite": (2, lambda a, b: complete_bipartite_spec(a, b)),
    "multipartite": (None, lambda *sizes: multipartite_spec(sizes)),
    "equal_multipartite": (2, lambda p, t: equal_multipartite_spec(p, t)),
    "complete_split": (2, lambda omega, n: complete_split_spec(omega, n)),
    "cone": (2, lambda a, b: cone_spec(a, b)),
    "wheel": (1, lambda n: wheel_spec(n)),
    "friendship": (1, lambda n: friendship_spec(n)),
    "firefly": (2, lambda p, n: firefly_spec(p, n)),
    "multistep_wheel": (2, lambda a, b: multistep_wheel_spec(a, b)),
}


def parse_family(descriptor: str) -> tuple[str, JoinedUnionSpec]:
    """Resolve a "name:p1,p2" descriptor to its joined-union description."""
    name, _, params = descriptor.partition(":")
    name = name.strip()
    if name not in FAMILY_BUILDERS:
        known = ", ".join(sorted(FAMILY_BUILDERS))
        raise ValueError(f"unknown family {name!r}; known: {known}")
    arity, builder = FAMILY_BUILDERS[name]
    if not params.strip():
        raise ValueError(f"family {name!r} needs parameters, e.g. {name}:3,2")
    try:
        args = [int(x) for x in params.split(",")]
    except ValueError:
        raise ValueError(f"family parameters must be integers, got {params!r}")
    if arity is not None and len(args) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameters, got {len(args)}")
    spec = builder(*args)
    canonical = f"{name}:{','.join(str(a) for a in args)}"
    return canonical, spec
