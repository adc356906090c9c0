"""Service layer: spectrum documents and verification suites.

Both the HTTP API and the CLI call into this module, so an offline CLI run
and a service request produce identical documents.  Verification is
deterministic: randomized cases come from a seeded generator and the
assembled report is sorted, so identical requests yield identical reports.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

import numpy as np

from . import __version__
from . import families as fam
from .errors import OracleSizeError
from .graph_core import Graph, make_empty, parse_edge_list, random_regular
from .joined_union import (
    Component,
    JoinedUnionSpec,
    materialize,
    quotient_eigenvalues,
    quotient_matrix,
    structural_spectrum,
)
from .power_graph import (
    POWER_FAMILIES,
    GENERAL_DISCREPANCY_NOTES,
    family_report,
    isomorphism_check,
    multiplicity_floor_check,
    oracle_cutoff,
    power_graph_direct,
    power_spectrum,
)
from .numtheory import factorize
from .schemas import (
    DeviationReport,
    EigenvalueEntry,
    SpectrumDocument,
    SpectrumRequest,
    Tolerances,
    VerifyCase,
    VerifyReport,
    VerifyRequest,
)
from .spectra import (
    GROUP_TOL,
    Spectrum,
    compare_value_lists,
    group_multiplicities,
    laplacian_spectrum,
)

_SOURCE_ORDER = {"structural": 0, "quotient": 1, "closed_form": 2, "oracle": 3}


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def present_spectrum(spectrum: Spectrum, group_tol: float = GROUP_TOL) -> list[EigenvalueEntry]:
    """Group near-equal values per source for display; totals are preserved."""
    entries: list[EigenvalueEntry] = []
    for source in sorted({line.source for line in spectrum.lines}, key=_SOURCE_ORDER.get):
        values = np.repeat(
            [l.value for l in spectrum.lines if l.source == source],
            [l.multiplicity for l in spectrum.lines if l.source == source],
        )
        for line in group_multiplicities(values, group_tol, source).lines:
            entries.append(
                EigenvalueEntry(value=line.value, multiplicity=line.multiplicity, source=source)
            )
    entries.sort(key=lambda e: (e.value, _SOURCE_ORDER[e.source]))
    return entries


def _resolve_request(req: SpectrumRequest):
    """Resolve a request to (descriptor, structural thunk, graph thunk, order).

    Both sides stay lazy so a structural-only request never materializes
    the graph and an oracle-only request never runs the engine (which would
    reject irregular edge-list inputs).
    """
    if req.power_n is not None:
        n = req.power_n
        descriptor = req.descriptor or f"power:{n}"
        structural = lambda: power_spectrum(n)
        graph = lambda: power_graph_direct(n)
        order = n
        return descriptor, structural, graph, order
    if req.family is not None:
        canonical, spec = fam.parse_family(req.family)
        descriptor = req.descriptor or canonical
        structural = lambda: fam.family_spectrum(spec)
        graph = lambda: materialize(spec)
        return descriptor, structural, graph, spec.total_order
    g = parse_edge_list(req.edges)
    descriptor = req.descriptor or f"edges:order={g.order},size={g.size}"

    def structural():
        spec = JoinedUnionSpec(make_empty(1), (Component.explicit(g),))
        return structural_spectrum(spec)

    return descriptor, structural, (lambda: g), g.order


def build_document(req: SpectrumRequest, timestamp: bool = False) -> SpectrumDocument:
    """Compute the requested spectrum document.

    For method "both" the document carries the structural eigenvalues plus
    the measured deviation against the dense oracle; exceeding the tolerance
    does not raise (callers decide how to signal it).
    """
    descriptor, structural_fn, graph_fn, order = _resolve_request(req)
    cutoff = oracle_cutoff()
    deviations = None
    if req.method in ("oracle", "both") and order > cutoff:
        raise OracleSizeError(
            f"order {order} exceeds the dense-oracle cutoff {cutoff} "
            "(set SPECJOIN_ORACLE_MAX to raise it)"
        )
    if req.method == "oracle":
        values = laplacian_spectrum(graph_fn())
        eigenvalues = [
            EigenvalueEntry(value=l.value, multiplicity=l.multiplicity, source="oracle")
            for l in group_multiplicities(values, GROUP_TOL, "oracle").lines
        ]
    else:
        spectrum = structural_fn()
        eigenvalues = present_spectrum(spectrum)
        if req.method == "both":
            oracle_values = laplacian_spectrum(graph_fn())
            cmp = compare_value_lists(spectrum.flatten(), oracle_values, req.tol)
            deviations = DeviationReport(
                max_deviation=cmp.max_deviation, tol=req.tol, passed=cmp.passed
            )
    return SpectrumDocument(
        descriptor=descriptor,
        order=order,
        method=req.method,
        eigenvalues=eigenvalues,
        deviations=deviations,
        version=__version__,
        tolerances=Tolerances(compare=req.tol, group=GROUP_TOL),
        timestamp=_now() if timestamp else None,
    )


# ---------------------------------------------------------------------------
# Verification suites.
# ---------------------------------------------------------------------------


def _random_component(rng: random.Random) -> Component:
    order = rng.randint(1, 6)
    kinds = ["complete", "empty"]
    if order >= 3:
        kinds.append("cycle")
    feasible = [d for d in range(1, order) if (d * order) % 2 == 0]
    if feasible:
        kinds.append("regular")
    kind = rng.choice(kinds)
    if kind == "complete":
        return Component.complete(order)
    if kind == "empty":
        return Component.empty(order)
    if kind == "cycle":
        return Component.cycle(order)
    return Component.explicit(random_regular(order, rng.choice(feasible), rng))


def _random_spec(rng: random.Random) -> JoinedUnionSpec:
    """Random joined-union description with no isolated block (resampled)."""
    while True:
        outer_order = rng.randint(1, 8)
        edges = [
            (i, j)
            for i in range(outer_order)
            for j in range(i + 1, outer_order)
            if rng.random() < 0.5
        ]
        outer = Graph(outer_order, edges)
        comps = tuple(_random_component(rng) for _ in range(outer_order))
        spec = JoinedUnionSpec(outer, comps)
        degs = [
            c.regularity + sum(comps[j].order for j in outer.adjacency[i])
            for i, c in enumerate(comps)
        ]
        if all(d >= 1 for d in degs):
            return spec


def _joined_union_suite(req: VerifyRequest) -> list[VerifyCase]:
    rng = random.Random(req.seed)
    cases = []
    for i in range(req.cases):
        spec = _random_spec(rng)
        n = spec.total_order
        s = structural_spectrum(spec)
        o = laplacian_spectrum(materialize(spec))
        cmp = compare_value_lists(s.flatten(), o, req.tol)
        trace_gap = abs(float(s.flatten().sum()) - n)
        in_range = s.min_value >= -1e-9 and s.max_value <= 2.0 + 1e-9
        ok = cmp.passed and trace_gap <= 1e-9 * n and in_range
        cases.append(
            VerifyCase(
                name=f"joined-union/random-{i:03d}",
                status="PASS" if ok else "FAIL",
                deviation=cmp.max_deviation,
                detail=f"order={n} trace_gap={trace_gap:.2e} range_ok={in_range}",
            )
        )
    # join extremes over clique/empty parts: the two quotient eigenvalues
    # bracket the spectrum for these components
    extremes_rng = random.Random(req.seed + 1)
    worst = 0.0
    ok = True
    for _ in range(50):
        c1 = (
            Component.complete(extremes_rng.randint(1, 6))
            if extremes_rng.random() < 0.5
            else Component.empty(extremes_rng.randint(1, 6))
        )
        c2 = (
            Component.complete(extremes_rng.randint(1, 6))
            if extremes_rng.random() < 0.5
            else Component.empty(extremes_rng.randint(1, 6))
        )
        spec = fam.join_spec(c1, c2)
        full = structural_spectrum(spec).flatten()
        q = quotient_eigenvalues(quotient_matrix(spec))
        gap = max(abs(full.min() - q.min()), abs(full.max() - q.max()))
        worst = max(worst, gap)
        ok = ok and gap <= req.tol
    cases.append(
        VerifyCase(
            name="joined-union/join-extremes",
            status="PASS" if ok else "FAIL",
            deviation=worst,
            detail="two-block joins of cliques/independent sets, 50 draws",
        )
    )
    # the published claim that the two-block quotient always carries the
    # extremes does not survive components with eigenvalues below -1
    wspec = fam.wheel_spec(7)
    full = structural_spectrum(wspec).flatten()
    q = quotient_eigenvalues(quotient_matrix(wspec))
    gap = abs(full.max() - q.max())
    cases.append(
        VerifyCase(
            name="joined-union/published/join-extremes-scope",
            status="WARN",
            deviation=float(gap),
            detail=(
                "published extremes claim fails beyond clique/independent "
                f"parts: hub-and-6-cycle max {full.max():.6f} vs quotient max "
                f"{q.max():.6f}"
            ),
        )
    )
    return cases


def _power_case(n: int, tol: float, oracle) -> VerifyCase:
    s = power_spectrum(n)
    problems = []
    dev = None
    if s.total != n:
        problems.append(f"total {s.total} != {n}")
    cmp = compare_value_lists(s.flatten(), oracle(n), tol)
    dev = cmp.max_deviation
    if not cmp.passed:
        problems.append(f"oracle deviation {dev:.3e}")
    if not isomorphism_check(n):
        problems.append("decomposition not isomorphic")
    floor = multiplicity_floor_check(n)
    if not floor.floor_holds:
        problems.append(f"multiplicity {floor.multiplicity} < phi {floor.totient}")
    return VerifyCase(
        name=f"power/n={n}",
        status="PASS" if not problems else "FAIL",
        deviation=dev,
        detail="; ".join(problems) or f"mult({n}/{n-1})={floor.multiplicity}, phi={floor.totient}",
    )


def _power_suite(req: VerifyRequest) -> list[VerifyCase]:
    cutoff = oracle_cutoff()
    memo: dict[int, np.ndarray] = {}

    def oracle(n: int) -> np.ndarray:
        if n not in memo:
            memo[n] = laplacian_spectrum(power_graph_direct(n))
        return memo[n]

    ns = list(range(3, min(req.max_n, cutoff) + 1))
    if req.jobs > 1:
        with ThreadPoolExecutor(max_workers=req.jobs) as pool:
            cases = list(pool.map(lambda n: _power_case(n, req.tol, oracle), ns))
    else:
        cases = [_power_case(n, req.tol, oracle) for n in ns]

    # where the multiplicity floor is met with equality
    equality, expected = [], []
    for n in ns:
        fac = factorize(n)
        if multiplicity_floor_check(n).equality:
            equality.append(n)
        if fac.is_prime() or fac.is_squarefree_semiprime():
            expected.append(n)
    extra = sorted(set(equality) - set(expected))
    missing = sorted(set(expected) - set(equality))
    if extra or missing:
        head = ", ".join(str(n) for n in extra[:8])
        cases.append(
            VerifyCase(
                name="power/published/equality-characterization",
                status="WARN",
                deviation=None,
                detail=(
                    "published equality cases are primes and squarefree "
                    f"semiprimes; also observed at {len(extra)} further n "
                    f"({head}{', ...' if len(extra) > 8 else ''}); strict "
                    "excess only at higher prime powers in range"
                    + (f"; missing at {missing}" if missing else "")
                ),
            )
        )
    else:
        cases.append(
            VerifyCase(
                name="power/equality-characterization",
                status="PASS",
                detail="equality exactly at primes and squarefree semiprimes",
            )
        )

    for family in POWER_FAMILIES:
        report = family_report(family, req.max_n, req.tol, oracle_provider=oracle)
        for case in report.cases:
            detail_bits = [f"total={case.total}"]
            if case.oracle_deviation is not None:
                detail_bits.append(f"oracle_dev={case.oracle_deviation:.2e}")
            if case.closed_deviation is not None:
                detail_bits.append(f"closed_dev={case.closed_deviation:.2e}")
            cases.append(
                VerifyCase(
                    name=f"power/{family}/n={case.n}",
                    status="PASS" if case.passed else "FAIL",
                    deviation=case.oracle_deviation,
                    detail=" ".join(detail_bits),
                )
            )
            for mismatch in case.mismatches:
                cases.append(
                    VerifyCase(
                        name=f"power/{family}/published/n={case.n}",
                        status="WARN",
                        detail=mismatch,
                    )
                )
    for i, note in enumerate(GENERAL_DISCREPANCY_NOTES):
        cases.append(
            VerifyCase(name=f"power/published/note-{i}", status="WARN", detail=note)
        )
    return cases


def _published_coverage(published, oracle_values, tol):
    """(covered, order, worst value error) of a published line list against
    the oracle spectrum."""
    covered = sum(m for _, m in published if m > 0)
    worst = 0.0
    for value, mult in published:
        if mult > 0:
            worst = max(worst, float(np.abs(oracle_values - value).min()))
    return covered, worst


def _families_suite(req: VerifyRequest) -> list[VerifyCase]:
    cases = []

    def engine_vs_oracle(name: str, spec: JoinedUnionSpec, printed=None, closed=None):
        s = fam.family_spectrum(spec)
        o = laplacian_spectrum(materialize(spec))
        cmp = compare_value_lists(s.flatten(), o, req.tol)
        ok = cmp.passed
        detail = f"order={spec.total_order}"
        if closed is not None:
            closed_cmp = compare_value_lists(s.flatten(), closed, req.tol)
            ok = ok and closed_cmp.passed
            detail += f" closed_dev={closed_cmp.max_deviation:.2e}"
        cases.append(
            VerifyCase(
                name=f"families/{name}",
                status="PASS" if ok else "FAIL",
                deviation=cmp.max_deviation,
                detail=detail,
            )
        )
        return o

    def flatten_printed(published):
        vals = [v for v, m in published if m > 0 for _ in range(m)]
        return np.sort(np.array(vals))

    # complete bipartite / equal multipartite: published lists are complete
    for a, b in [(1, 1), (1, 4), (2, 3), (3, 3), (4, 7), (5, 5), (8, 2), (12, 9), (20, 20)]:
        engine_vs_oracle(
            f"complete_bipartite:{a},{b}",
            fam.complete_bipartite_spec(a, b),
            closed=flatten_printed(fam.complete_bipartite_printed(a, b)),
        )
    for p, t in [(2, 1), (2, 5), (3, 2), (3, 8), (4, 4), (5, 3), (6, 6), (7, 2), (8, 8), (8, 1), (2, 8), (5, 7)]:
        engine_vs_oracle(
            f"equal_multipartite:{p},{t}",
            fam.equal_multipartite_spec(p, t),
            closed=flatten_printed(fam.equal_multipartite_printed(p, t)),
        )
    for n in range(1, 22):
        engine_vs_oracle(
            f"friendship:{n}",
            fam.friendship_spec(n),
            closed=flatten_printed(fam.friendship_printed(n)),
        )

    # firefly: published list is complete; report its agreement explicitly
    worst_firefly = 0.0
    for p in range(1, 6):
        for n in range(p + 1, p + 6):
            o = engine_vs_oracle(f"firefly:{p},{n}", fam.firefly_spec(p, n))
            cmp = compare_value_lists(flatten_printed(fam.firefly_printed(p, n)), o, req.tol)
            worst_firefly = max(worst_firefly, cmp.max_deviation)
    cases.append(
        VerifyCase(
            name="families/published/firefly",
            status="INFO",
            deviation=worst_firefly,
            detail="published firefly lines match the oracle across the grid",
        )
    )

    # complete split: published largest value is off by 2/(n-1) and the
    # eigenvalue-1 lines are missing
    worst_largest = 0.0
    worst_missing = 0
    split_grid = [(w, w + b) for w in range(1, 6) for b in range(1, 6)]
    for omega, n in split_grid:
        o = engine_vs_oracle(f"complete_split:{omega},{n}", fam.complete_split_spec(omega, n))
        published = fam.complete_split_printed(omega, n)
        covered, _ = _published_coverage(published, o, req.tol)
        worst_missing = max(worst_missing, n - covered)
        worst_largest = max(worst_largest, abs(published[-1][0] - float(o.max())))
    cases.append(
        VerifyCase(
            name="families/published/complete_split",
            status="WARN",
            deviation=worst_largest,
            detail=(
                "published largest value (2n-w+1)/(n-1) exceeds the oracle "
                f"largest by up to {worst_largest:.6f} over the grid (engine "
                "largest (2n-w-1)/(n-1) matches); published list leaves up to "
                f"{worst_missing} of the eigenvalue-1 lines unlisted"
            ),
        )
    )

    # cone: published index range k=2..a-1 drops a cycle line and the
    # eigenvalue-1 lines are missing
    worst_value = 0.0
    worst_missing = 0
    cone_grid = [(a, b) for a in range(3, 8) for b in range(1, 6)]
    for a, b in cone_grid:
        o = engine_vs_oracle(f"cone:{a},{b}", fam.cone_spec(a, b))
        published = fam.cone_printed(a, b)
        covered, value_err = _published_coverage(published, o, req.tol)
        worst_missing = max(worst_missing, a + b - covered)
        worst_value = max(worst_value, value_err)
    cases.append(
        VerifyCase(
            name="families/published/cone",
            status="WARN",
            deviation=worst_value,
            detail=(
                f"published cone list covers only part of the spectrum (up to "
                f"{worst_missing} lines unlisted over the grid: a doubled "
                "cosine line counted once and the eigenvalue-1 block); listed "
                f"values sit within {worst_value:.2e} of oracle lines"
            ),
        )
    )

    # wheel: published range k=2..n-2 drops one cycle line
    worst_value = 0.0
    worst_missing = 0
    for n in range(4, 25):
        o = engine_vs_oracle(f"wheel:{n}", fam.wheel_spec(n))
        published = fam.wheel_printed(n)
        covered, value_err = _published_coverage(published, o, req.tol)
        worst_missing = max(worst_missing, n - covered)
        worst_value = max(worst_value, value_err)
    cases.append(
        VerifyCase(
            name="families/published/wheel",
            status="WARN",
            deviation=worst_value,
            detail=(
                f"published wheel list leaves {worst_missing} line(s) unlisted "
                "(a doubled cosine line counted once); listed values sit "
                f"within {worst_value:.2e} of oracle lines"
            ),
        )
    )

    # multi-step wheel: published lines carry no per-cycle multiplicity and
    # include k=b (the 1/3 line) even when the hub has a single cycle
    worst_value = 0.0
    worst_missing = 0
    for a, b in [(1, 3), (1, 5), (2, 3), (2, 4), (2, 6), (3, 3), (3, 5), (4, 4), (4, 7), (5, 3), (2, 5), (3, 4), (5, 6), (1, 4), (4, 3), (2, 7), (3, 7), (5, 4), (1, 7), (4, 5)]:
        o = engine_vs_oracle(f"multistep_wheel:{a},{b}", fam.multistep_wheel_spec(a, b))
        published = fam.multistep_wheel_printed(a, b)
        covered, value_err = _published_coverage(published, o, req.tol)
        worst_missing = max(worst_missing, a * b + 1 - covered)
        worst_value = max(worst_value, value_err)
    cases.append(
        VerifyCase(
            name="families/published/multistep_wheel",
            status="WARN",
            deviation=worst_value,
            detail=(
                f"published multi-step wheel list leaves up to {worst_missing} "
                "lines unlisted (cycle values appear once, not per cycle; the "
                "1/3 quotient lines are absent); worst listed-value error "
                f"{worst_value:.2e}"
            ),
        )
    )
    return cases


def run_verify(req: VerifyRequest, timestamp: bool = False) -> VerifyReport:
    cases: list[VerifyCase] = []
    if req.suite in ("joined-union", "all"):
        cases.extend(_joined_union_suite(req))
    if req.suite in ("power", "all"):
        cases.extend(_power_suite(req))
    if req.suite in ("families", "all"):
        cases.extend(_families_suite(req))
    counts: dict[str, int] = {}
    for case in cases:
        counts[case.status] = counts.get(case.status, 0) + 1
    return VerifyReport(
        suite=req.suite,
        max_n=req.max_n,
        tol=req.tol,
        cases=cases,
        counts=counts,
        passed=counts.get("FAIL", 0) == 0,
        version=__version__,
        timestamp=_now() if timestamp else None,
    )
