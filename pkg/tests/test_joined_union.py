import math
import random

import numpy as np
import pytest

from specjoin.errors import IsolatedVertexError, NonRegularComponentError
from specjoin.graph_core import (
    Graph,
    degrees,
    is_regular,
    make_complete,
    make_cycle,
    make_empty,
    make_star,
    random_regular,
)
from specjoin.joined_union import (
    Component,
    JoinedUnionSpec,
    QuotientMatrix,
    alphas,
    materialize,
    quotient_eigenvalues,
    quotient_matrix,
    structural_spectrum,
)
from specjoin.spectra import compare_value_lists, laplacian_spectrum


def friendship_spec(n):
    comps = (Component.empty(1),) + tuple(Component.complete(2) for _ in range(n))
    return JoinedUnionSpec(make_star(n + 1), comps)


def join_spec(c1, c2):
    return JoinedUnionSpec(make_complete(2), (c1, c2))


def power6_spec():
    """Three cliques over a path: the hub block K_3 joined to K_1 and K_2."""
    outer = Graph(3, [(0, 1), (0, 2)])
    return JoinedUnionSpec(outer, (Component.complete(3), Component.complete(1), Component.complete(2)))


class TestComponent:
    def test_explicit_requires_regular(self):
        with pytest.raises(NonRegularComponentError):
            Component.explicit(make_star(4))
        comp = Component.explicit(make_cycle(5))
        assert comp.regularity == 2

    def test_from_spectrum_validation(self):
        Component.from_spectrum(3, 2, [2.0, -1.0, -1.0])
        with pytest.raises(ValueError):
            Component.from_spectrum(3, 2, [2.0, -1.0])
        with pytest.raises(ValueError):
            Component.from_spectrum(3, 1, [2.0, -1.0, -1.0])

    def test_non_perron_closed_forms(self):
        np.testing.assert_allclose(Component.complete(4).non_perron_eigenvalues(), [-1, -1, -1])
        np.testing.assert_allclose(Component.empty(3).non_perron_eigenvalues(), [0, 0])
        cyc = Component.cycle(6).non_perron_eigenvalues()
        np.testing.assert_allclose(cyc, [-2, -1, -1, 1, 1], atol=1e-12)

    def test_regularity_bounds(self):
        with pytest.raises(ValueError):
            Component(3, 3, "empty")


class TestAlphas:
    def test_friendship(self):
        spec = friendship_spec(4)
        assert alphas(spec) == [8] + [1] * 4

    def test_two_block_join(self):
        spec = join_spec(Component.complete(3), Component.empty(5))
        assert alphas(spec) == [5, 3]

    def test_empty_outer(self):
        spec = JoinedUnionSpec(make_empty(3), tuple(Component.complete(2) for _ in range(3)))
        assert alphas(spec) == [0, 0, 0]


class TestQuotientMatrix:
    def test_join_entries(self):
        n1, r1, n2, r2 = 4, 2, 3, 0  # C_4 joined with empty_3
        spec = join_spec(Component.cycle(4), Component.empty(3))
        q = quotient_matrix(spec)
        d1, d2 = r1 + n2, r2 + n1
        np.testing.assert_allclose(
            q.entries,
            [
                [n2 / d1, -n2 / math.sqrt(d1 * d2)],
                [-n1 / math.sqrt(d1 * d2), n1 / d2],
            ],
        )
        assert q.block_sizes == (4, 3)

    def test_friendship_matrix_shape(self):
        n = 4
        q = quotient_matrix(friendship_spec(n))
        np.testing.assert_allclose(np.diag(q.entries), [1.0] + [0.5] * n)
        np.testing.assert_allclose(q.entries[0, 1:], -1 / math.sqrt(n))
        np.testing.assert_allclose(q.entries[1:, 0], -1 / (2 * math.sqrt(n)))
        off_leaves = q.entries[1:, 1:] - np.diag(np.diag(q.entries[1:, 1:]))
        assert np.all(off_leaves == 0)

    def test_power6_matrix(self):
        q = quotient_matrix(power6_spec())
        np.testing.assert_allclose(np.diag(q.entries), [3 / 5, 1.0, 3 / 4])
        np.testing.assert_allclose(q.entries[0, 1], -1 / math.sqrt(15))
        np.testing.assert_allclose(q.entries[1, 0], -3 / math.sqrt(15))
        assert q.entries[1, 2] == 0.0

    def test_isolated_block_refused(self):
        spec = JoinedUnionSpec(make_empty(2), (Component.empty(1), Component.complete(2)))
        with pytest.raises(IsolatedVertexError):
            quotient_matrix(spec)
        with pytest.raises(IsolatedVertexError):
            structural_spectrum(spec)

    def test_similarity_symmetry_enforced(self):
        with pytest.raises(ValueError):
            QuotientMatrix(2, np.array([[0.0, 1.0], [0.0, 0.0]]), (1, 1))


class TestQuotientEigenvalues:
    def test_bipartite_quotient(self):
        spec = join_spec(Component.empty(3), Component.empty(4))
        ev = quotient_eigenvalues(quotient_matrix(spec))
        np.testing.assert_allclose(ev, [0.0, 2.0], atol=1e-12)

    def test_friendship_final_two_by_two(self):
        # the bordered matrix [[1, -n/sqrt(n)], [-1/(2 sqrt(n)), 1/2]] with
        # block sizes (1, 2n) has eigenvalues {0, 3/2}
        n = 5
        m = np.array([[1.0, -n / math.sqrt(n)], [-1 / (2 * math.sqrt(n)), 0.5]])
        ev = quotient_eigenvalues(QuotientMatrix(2, m, (1, 2 * n)))
        np.testing.assert_allclose(ev, [0.0, 1.5], atol=1e-12)

    def test_power6_quotient_matches_quadratic_roots(self):
        # independent derivation: roots of x^2 - 2.35x + 1.3
        roots = np.roots([1.0, -2.35, 1.3])
        expected = np.sort(np.concatenate([[0.0], roots]))
        ev = quotient_eigenvalues(quotient_matrix(power6_spec()))
        np.testing.assert_allclose(ev, expected, atol=1e-10)


class TestStructuralSpectrum:
    def test_two_cliques_make_a_bigger_clique(self):
        for a, b in [(1, 1), (2, 3), (4, 4)]:
            spec = join_spec(Component.complete(a), Component.complete(b))
            s = structural_spectrum(spec)
            o = laplacian_spectrum(make_complete(a + b))
            assert compare_value_lists(s.flatten(), o, 1e-10).passed

    def test_friendship_three(self):
        s = structural_spectrum(friendship_spec(3))
        assert s.total == 7
        assert s.count_near(0.0) == 1
        assert s.count_near(0.5) == 2
        assert s.count_near(1.5) == 4

    def test_trace_partition(self):
        rng = random.Random(3)
        for _ in range(20):
            spec = _random_spec(rng)
            total = spec.total_order
            assert abs(structural_spectrum(spec).flatten().sum() - total) <= 1e-9 * total

    def test_zero_lives_in_the_quotient_when_connected(self):
        for spec in [friendship_spec(2), power6_spec(), join_spec(Component.cycle(4), Component.empty(2))]:
            s = structural_spectrum(spec)
            zero_lines = [l for l in s.lines if abs(l.value) <= 1e-9]
            assert len(zero_lines) == 1
            assert zero_lines[0].source == "quotient"
            assert zero_lines[0].multiplicity == 1

    def test_row_sums_equal_when_realization_is_regular(self):
        # equal cliques over a clique realize a complete graph
        spec = JoinedUnionSpec(
            make_complete(3), tuple(Component.complete(3) for _ in range(3))
        )
        assert is_regular(materialize(spec)) is not None
        q = quotient_matrix(spec)
        sums = q.entries.sum(axis=1)
        np.testing.assert_allclose(sums, sums[0])


def _random_spec(rng):
    while True:
        n = rng.randint(1, 6)
        outer = Graph(
            n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        )
        comps = []
        for _ in range(n):
            order = rng.randint(1, 5)
            kind = rng.choice(["complete", "empty", "cycle", "regular"])
            if kind == "cycle" and order >= 3:
                comps.append(Component.cycle(order))
            elif kind == "regular" and order >= 2:
                feasible = [d for d in range(1, order) if (d * order) % 2 == 0]
                if feasible:
                    comps.append(Component.explicit(random_regular(order, rng.choice(feasible), rng)))
                else:
                    comps.append(Component.complete(order))
            elif kind == "empty":
                comps.append(Component.empty(order))
            else:
                comps.append(Component.complete(order))
        spec = JoinedUnionSpec(outer, tuple(comps))
        degs = [
            c.regularity + sum(comps[j].order for j in outer.adjacency[i])
            for i, c in enumerate(comps)
        ]
        if all(d >= 1 for d in degs):
            return spec


class TestOracleEquivalence:
    def test_random_specs_match_oracle(self):
        rng = random.Random(2718)
        for _ in range(40):
            spec = _random_spec(rng)
            s = structural_spectrum(spec)
            o = laplacian_spectrum(materialize(spec))
            assert compare_value_lists(s.flatten(), o, 1e-8).passed

    def test_degree_law_against_materialization(self):
        rng = random.Random(11)
        for _ in range(10):
            spec = _random_spec(rng)
            h = materialize(spec)
            degs = degrees(h)
            offset = 0
            from specjoin.joined_union import block_degrees

            for i, c in enumerate(spec.components):
                expected = block_degrees(spec)[i]
                for v in range(offset, offset + c.order):
                    assert degs[v] == expected
                offset += c.order
