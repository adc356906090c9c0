import random

import pytest

from specjoin.graph_core import (
    Graph,
    components,
    degrees,
    from_edge_list,
    is_bipartite,
    is_connected,
    is_regular,
    joined_union,
    make_complete,
    make_cycle,
    make_empty,
    make_star,
    parse_edge_list,
    random_regular,
    write_edge_list,
)


class TestConstructors:
    def test_complete(self):
        g = make_complete(4)
        assert g.size == 6
        assert degrees(g) == [3, 3, 3, 3]

    def test_cycle(self):
        g = make_cycle(5)
        assert g.size == 5
        assert degrees(g) == [2] * 5

    def test_star(self):
        g = make_star(4)
        assert degrees(g) == [3, 1, 1, 1]

    def test_parameter_bounds(self):
        with pytest.raises(ValueError):
            make_complete(0)
        with pytest.raises(ValueError):
            make_cycle(2)
        with pytest.raises(ValueError):
            make_star(0)

    def test_edge_validation(self):
        with pytest.raises(ValueError):
            from_edge_list(3, [(0, 3)])
        with pytest.raises(ValueError):
            from_edge_list(3, [(1, 1)])
        with pytest.raises(ValueError):
            from_edge_list(3, [(0, 1), (1, 0)])


class TestEdgeListFormat:
    def test_parse(self):
        g = parse_edge_list("4\n0 1\n2 3\n")
        assert g.order == 4
        assert g.edges == {(0, 1), (2, 3)}

    def test_roundtrip(self):
        g = make_cycle(6)
        assert parse_edge_list(write_edge_list(g)) == g

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_edge_list("")
        with pytest.raises(ValueError):
            parse_edge_list("abc\n")
        with pytest.raises(ValueError):
            parse_edge_list("3\n0 1 2\n")
        with pytest.raises(ValueError):
            parse_edge_list("2\n0 0\n")


class TestJoinedUnion:
    def test_two_singletons_give_an_edge(self):
        h = joined_union(make_complete(2), [make_complete(1), make_complete(1)])
        assert h == make_complete(2)

    def test_join_degrees(self):
        g1, g2 = make_cycle(4), make_complete(3)
        h = joined_union(make_complete(2), [g1, g2])
        # block 1 vertices keep degree r1 and gain n2 cross edges
        assert degrees(h)[: g1.order] == [2 + 3] * 4
        assert degrees(h)[g1.order :] == [2 + 4] * 3

    def test_friendship_instance(self):
        h = joined_union(
            make_star(3), [make_complete(1), make_complete(2), make_complete(2)]
        )
        assert h.order == 5
        assert degrees(h) == [4, 2, 2, 2, 2]

    def test_size_formula_for_joins(self):
        rng = random.Random(5)
        for _ in range(20):
            g1 = random_regular(rng.randint(1, 6), 0, rng)
            g2 = make_complete(rng.randint(1, 6))
            h = joined_union(make_complete(2), [g1, g2])
            assert h.size == g1.size + g2.size + g1.order * g2.order

    def test_block_layout_is_deterministic(self):
        parts = [make_cycle(3), make_complete(2), make_empty(2)]
        outer = from_edge_list(3, [(0, 1), (1, 2)])
        assert joined_union(outer, parts).edges == joined_union(outer, parts).edges

    def test_part_count_mismatch(self):
        with pytest.raises(ValueError):
            joined_union(make_complete(2), [make_complete(1)])

    def test_degree_law_on_random_instances(self):
        rng = random.Random(99)
        for _ in range(30):
            n = rng.randint(1, 6)
            outer = Graph(
                n,
                [
                    (i, j)
                    for i in range(n)
                    for j in range(i + 1, n)
                    if rng.random() < 0.5
                ],
            )
            parts = [make_complete(rng.randint(1, 5)) for _ in range(n)]
            h = joined_union(outer, parts)
            degs = degrees(h)
            offset = 0
            for i, p in enumerate(parts):
                alpha = sum(parts[j].order for j in outer.adjacency[i])
                r = p.order - 1
                for v in range(offset, offset + p.order):
                    assert degs[v] == r + alpha
                offset += p.order


class TestPredicates:
    def test_regularity(self):
        assert is_regular(make_cycle(6)) == 2
        assert is_regular(make_star(4)) is None
        assert is_regular(make_empty(3)) == 0

    def test_components(self):
        assert components(make_empty(3)) == 3
        assert components(make_cycle(5)) == 1
        assert is_connected(make_complete(4))
        assert not is_connected(make_empty(2))

    def test_bipartite(self):
        assert not is_bipartite(make_cycle(5))
        assert is_bipartite(make_cycle(6))
        assert is_bipartite(make_star(5))


class TestRandomRegular:
    def test_degrees(self):
        rng = random.Random(1)
        for order, degree in [(4, 1), (6, 3), (6, 5), (5, 2), (8, 4)]:
            g = random_regular(order, degree, rng)
            assert is_regular(g) == degree

    def test_infeasible(self):
        rng = random.Random(1)
        with pytest.raises(ValueError):
            random_regular(5, 3, rng)  # odd stub count
        with pytest.raises(ValueError):
            random_regular(4, 4, rng)
