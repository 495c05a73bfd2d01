import pytest
from hypothesis import given

from conftest import closed_walk_gcd, floyd_reach, graphs, has_cycle_cover_by_search, strong_by_floyd
from disjnet import DirectedGraph, InputError, PreconditionError
from disjnet.families import chorded_cycle, cycle, empty, g_n, link_of_cycles, transitive_tournament
from disjnet.graph import (
    coverable_by_cycles,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_nontrivial,
    is_primitive,
    is_strong,
    loop_number,
    partition_classes,
    reachable_from,
    scc,
    structural_predicates,
    weak_components,
)
from disjnet.sampling import all_digraphs, random_graph, rng_for


def masks(*sets):
    return [sum(1 << v for v in s) for s in sets]


class TestConstruction:
    def test_two_cycle(self):
        g = from_edge_list(2, [(0, 1), (1, 0)])
        assert set(g.arcs()) == {(0, 1), (1, 0)}

    def test_single_loop(self):
        g = from_edge_list(1, [(0, 0)])
        assert g.arcs() == [(0, 0)]

    def test_out_of_range_arc(self):
        with pytest.raises(InputError, match="0, 2"):
            from_edge_list(2, [(0, 2)])

    def test_negative_vertex(self):
        with pytest.raises(InputError):
            from_edge_list(2, [(-1, 0)])

    def test_vertex_cap(self):
        with pytest.raises(InputError):
            from_edge_list(5, [], max_n=4)

    def test_row_outside_range(self):
        with pytest.raises(InputError):
            DirectedGraph(2, (4, 0))

    def test_duplicate_arcs_collapse(self):
        assert from_edge_list(2, [(0, 1), (0, 1)]).arc_count == 1

    @given(graphs(max_n=7))
    def test_in_rows_are_the_transpose(self, g):
        rebuilt = [0] * g.n
        for i, j in g.arcs():
            rebuilt[j] |= 1 << i
        assert tuple(rebuilt) == g.in_rows

    @given(graphs(max_n=5))
    def test_index_round_trip(self, g):
        assert DirectedGraph.from_index(g.n, g.to_index()) == g

    def test_relabel(self):
        g = cycle(3).relabel([1, 2, 0])
        assert set(g.arcs()) == {(1, 2), (2, 0), (0, 1)}


class TestDisjointUnion:
    def test_two_loops(self):
        g = disjoint_union(cycle(1), cycle(1))
        assert g.arcs() == [(0, 0), (1, 1)]

    def test_tournament_plus_isolated(self):
        g = disjoint_union(transitive_tournament(2), empty(1))
        assert g.n == 3 and set(g.arcs()) == {(0, 0), (0, 1), (1, 1)}

    def test_link_plus_two_cycle(self):
        g = disjoint_union(link_of_cycles(1, 1), cycle(2))
        assert g.n == 4
        assert set(g.arcs()) == {(0, 0), (1, 1), (0, 1), (2, 3), (3, 2)}


class TestScc:
    def test_cycle_is_one_component(self):
        dec = scc(cycle(4))
        assert dec.components == (0b1111,)

    def test_link_of_cycles(self):
        dec = scc(link_of_cycles(1, 3))
        assert dec.components == tuple(masks({0}, {1, 2, 3}))
        assert dec.condensation.arcs() == [(0, 1)]

    def test_empty_graph(self):
        dec = scc(empty(3))
        assert sorted(dec.components) == masks({0}, {1}, {2})

    @given(graphs(max_n=7))
    def test_components_match_mutual_reachability(self, g):
        reach = floyd_reach(g)
        dec = scc(g)
        for i in range(g.n):
            for j in range(g.n):
                same = dec.component_of[i] == dec.component_of[j]
                assert same == bool(reach[i, j] and reach[j, i])

    @given(graphs(max_n=7))
    def test_condensation_arcs_go_forward(self, g):
        dec = scc(g)
        for a, b in dec.condensation.arcs():
            assert a < b


class TestLoopNumber:
    @pytest.mark.parametrize(
        "g, expected",
        [(cycle(4), 4), (link_of_cycles(1, 3), 1), (transitive_tournament(3), 1), (empty(2), 0)],
    )
    def test_examples(self, g, expected):
        assert loop_number(g) == expected

    @given(graphs(max_n=7))
    def test_matches_closed_walk_gcd(self, g):
        assert loop_number(g) == closed_walk_gcd(g)

    def test_primitive_examples(self):
        assert is_primitive(cycle(1))
        assert not is_primitive(cycle(2))
        assert is_primitive(chorded_cycle(3, 2))

    def test_primitive_iff_strong_with_loop_number_one(self):
        for n in range(1, 5):
            for g in all_digraphs(n):
                assert is_primitive(g) == (strong_by_floyd(g) and closed_walk_gcd(g) == 1)


class TestPartitionClasses:
    def test_cycle(self):
        assert partition_classes(cycle(4)) == masks({0}, {1}, {2}, {3})

    def test_cycle_with_back_arc(self):
        g = from_edge_list(4, cycle(4).arcs() + [(1, 0)])
        assert partition_classes(g) == masks({0, 2}, {1, 3})

    def test_loop(self):
        assert partition_classes(cycle(1)) == [1]

    def test_rejects_non_strong(self):
        with pytest.raises(PreconditionError):
            partition_classes(g_n(2))

    def test_rejects_acyclic(self):
        with pytest.raises(PreconditionError):
            partition_classes(empty(1))

    @given(graphs(max_n=7))
    def test_classes_rotate(self, g):
        if not strong_by_floyd(g) or closed_walk_gcd(g) == 0:
            return
        classes = partition_classes(g)
        period = len(classes)
        assert period == closed_walk_gcd(g)
        assert classes[0] & 1
        assert sum(classes) == (1 << g.n) - 1
        for i, c in enumerate(classes):
            assert g.out_neighbours(c) == classes[(i + 1) % period]


class TestPredicates:
    def test_g3(self):
        s = structural_predicates(g_n(3))
        assert s.is_reflexive and s.is_nontrivial and not s.is_strong
        assert not s.sources and not s.sinks

    def test_link_of_cycles(self):
        s = structural_predicates(link_of_cycles(1, 3))
        assert s.is_nontrivial and not s.is_strong

    def test_isolated_vertex(self):
        s = structural_predicates(empty(1))
        assert s.sources == {0} and s.sinks == {0} and not s.is_nontrivial

    def test_in_degrees(self):
        assert structural_predicates(g_n(2)).in_degrees == (1, 2)

    @given(graphs(max_n=6))
    def test_strong_agrees_with_floyd(self, g):
        assert is_strong(g) == strong_by_floyd(g)

    @given(graphs(max_n=6))
    def test_nontrivial_means_every_vertex_on_a_cycle(self, g):
        a = floyd_reach(g)
        on_cycle = all(any(g.has_arc(i, j) and a[j, i] for j in range(g.n)) for i in range(g.n))
        assert is_nontrivial(g) == on_cycle


class TestCycleCover:
    def test_cycle(self):
        ok, perm = coverable_by_cycles(cycle(4))
        assert ok and perm == [1, 2, 3, 0]

    def test_g2(self):
        assert coverable_by_cycles(g_n(2)) == (True, [0, 1])

    def test_empty(self):
        assert coverable_by_cycles(empty(2)) == (False, None)

    def test_agrees_with_permutation_search(self):
        rng = rng_for(3)
        for _ in range(300):
            g = random_graph(rng.randint(1, 7), rng, density=rng.uniform(0.1, 0.4))
            ok, perm = coverable_by_cycles(g)
            assert ok == has_cycle_cover_by_search(g)
            if ok:
                assert sorted(perm) == list(range(g.n))
                assert all(g.has_arc(i, perm[i]) for i in range(g.n))


class TestHelpers:
    def test_reachable_includes_start(self):
        assert reachable_from(link_of_cycles(1, 3), 1) == 0b1111
        assert reachable_from(empty(2), 0b10) == 0b10

    def test_weak_components(self):
        g = disjoint_union(cycle(2), link_of_cycles(1, 1))
        assert sorted(weak_components(g)) == masks({0, 1}, {2, 3})

    def test_induced_subgraph(self):
        sub, labels = induced_subgraph(link_of_cycles(1, 3), 0b1110)
        assert labels == [1, 2, 3] and sub.arc_count == 3
