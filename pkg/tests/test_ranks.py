import importlib
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, isomorphic, table_of
from disjnet import DisjunctiveNetwork, InputError, OracleMismatch, ResourceError
from disjnet.families import chorded_cycle, cycle, empty, g_n, link_of_cycles, transitive_tournament
from disjnet.graph import disjoint_union
from disjnet.network import TruthTableNetwork, is_idempotent, is_monotone, mat_power, to_truth_table
from disjnet.oracle import build_functional_graph, oracle_fixed_set, oracle_image_set
from disjnet.ranks import (
    RankOutOfRange,
    RankTriple,
    all_graph_ranks,
    construct_disjunctive_with_rank,
    construct_monotone_with_rank,
    cross_checked_ranks,
    factor_min_sum,
    ranks,
    singular_bound_counterexamples,
    smallest_prime_greater_than,
    table_ranks,
    verify_singular_fixed_max,
    verify_singular_max,
    verify_singular_periodic_max,
    weight_order,
)
from disjnet.sampling import all_digraphs, random_graph, rng_for


# the package re-exports a ``ranks`` function, which shadows the submodule name
ranks_module = importlib.import_module("disjnet.ranks")


def oracle_triple(f):
    return (
        len(oracle_image_set(f)),
        len(build_functional_graph(f).cycle_states()),
        len(oracle_fixed_set(f)),
    )


class TestRankTriple:
    @pytest.mark.parametrize(
        "g, expected",
        [(g_n(2), (3, 3, 3)), (cycle(4), (16, 16, 2)), (chorded_cycle(3, 2), (6, 2, 2))],
    )
    def test_examples(self, g, expected):
        assert ranks(DisjunctiveNetwork(g)).as_tuple() == expected

    def test_agreement_flags(self):
        _, agreement = cross_checked_ranks(DisjunctiveNetwork(cycle(4)))
        assert agreement == {"image": True, "periodic": True, "fixed": True}

    def test_flags_only_for_applicable_fast_paths(self):
        _, agreement = cross_checked_ranks(DisjunctiveNetwork(empty(2)))
        assert set(agreement) == {"image"}

    def test_mismatch_raises(self, monkeypatch):
        monkeypatch.setattr(ranks_module, "image_points_by_test", lambda f, cap: frozenset())
        with pytest.raises(OracleMismatch, match="image"):
            ranks(DisjunctiveNetwork(g_n(2)))

    def test_cap(self):
        with pytest.raises(ResourceError, match="--oracle-cap"):
            ranks(DisjunctiveNetwork(cycle(6)), cap=5)

    @given(graphs(max_n=8))
    def test_matches_oracle(self, g):
        f = DisjunctiveNetwork(g)
        assert ranks(f).as_tuple() == oracle_triple(f)

    @given(graphs(max_n=8))
    def test_ordering_and_flatness(self, g):
        f = DisjunctiveNetwork(g)
        r = ranks(f)
        assert r.fixed_rank <= r.periodic_rank <= r.image_rank
        assert r.is_flat == is_idempotent(to_truth_table(f))

    @given(graphs(max_n=7))
    def test_periodic_rank_is_image_rank_of_a_large_power(self, g):
        f = DisjunctiveNetwork(g)
        big = DisjunctiveNetwork(mat_power(g, 1 << g.n))
        r = ranks(f)
        assert r.periodic_rank == len(set(table_of(big.graph)))
        previous = 1 << g.n
        for k in range(1, g.n + 2):
            image = len(set(table_of(mat_power(g, k))))
            assert r.periodic_rank <= image <= previous
            previous = image

    def test_exhaustive_small(self):
        for n in range(1, 4):
            for g in all_digraphs(n):
                f = DisjunctiveNetwork(g)
                r = ranks(f)
                assert r.fixed_rank <= r.periodic_rank <= r.image_rank
                assert r.is_flat == is_idempotent(to_truth_table(f))

    @given(st.integers(1, 4).flatmap(lambda n: st.lists(st.integers(0, (1 << n) - 1), min_size=1 << n, max_size=1 << n)))
    def test_table_ranks(self, table):
        f = TruthTableNetwork(len(table).bit_length() - 1, tuple(table))
        assert table_ranks(table).as_tuple() == oracle_triple(f)

    def test_all_graph_ranks_row(self):
        rows = all_graph_ranks(2)
        assert len(rows) == 16
        g2 = [r for r in rows if r.index == g_n(2).to_index()][0]
        assert g2.ranks == RankTriple(3, 3, 3) and not g2.bijective

    def test_parallel_scan_agrees(self):
        assert all_graph_ranks(3, workers=2) == all_graph_ranks(3)

    def test_enumeration_cap(self):
        with pytest.raises(ResourceError, match="--enum-cap"):
            all_graph_ranks(5)


class TestMonotoneConstructor:
    def test_rank_three_on_two(self):
        f = construct_monotone_with_rank(2, 3)
        # weight order 00, x0, x1, 11: fix the first two, send the rest to 11
        assert f.table == (0b00, 0b01, 0b11, 0b11)

    def test_rank_one(self):
        assert construct_monotone_with_rank(3, 1) == TruthTableNetwork.constant(3, 7)

    def test_full_rank_is_identity(self):
        assert construct_monotone_with_rank(3, 8) == TruthTableNetwork.identity(3)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_every_rank(self, n):
        for k in range(1, (1 << n) + 1):
            f = construct_monotone_with_rank(n, k)
            assert is_monotone(f) and is_idempotent(f)
            assert table_ranks(f.table).as_tuple() == (k, k, k)

    def test_weight_order_is_a_linear_extension(self):
        order = weight_order(4)
        pos = {s: i for i, s in enumerate(order)}
        assert all(pos[a] <= pos[b] for a in order for b in order if a & ~b == 0)

    def test_range(self):
        with pytest.raises(InputError):
            construct_monotone_with_rank(2, 5)


class TestSingularMaxima:
    def test_n2(self):
        result = verify_singular_max(2)
        assert result.passed and result.max_rank == 3
        assert any(g == g_n(2) for g in result.achievers)

    def test_n3(self):
        result = verify_singular_max(3)
        assert result.passed and result.max_rank == 6 and result.achiever_count == 36

    def test_n3_achievers_by_isomorphism(self):
        from test_families import reference_members

        members = list(reference_members(3))
        ranks_by_graph = {g: len(set(table_of(g))) for g in all_digraphs(3)}
        singular = {g: r for g, r in ranks_by_graph.items() if r < 8}
        best = max(singular.values())
        assert best == 6
        for g, r in singular.items():
            assert (r == best) == any(isomorphic(g, h) for h in members), g.arcs()

    def test_n3_periodic(self):
        result = verify_singular_periodic_max(3)
        assert result.passed and result.max_rank == 6
        assert all(isomorphic(g, g_n(3)) for g in result.achievers)

    def test_n4_periodic_shapes(self):
        result = verify_singular_periodic_max(4)
        assert result.passed
        b11_c2 = disjoint_union(link_of_cycles(1, 1), cycle(2))
        assert all(isomorphic(g, b11_c2) or isomorphic(g, g_n(4)) for g in result.achievers)
        assert any(isomorphic(g, b11_c2) for g in result.achievers)

    def test_n4_fixed_unique(self):
        result = verify_singular_fixed_max(4)
        assert result.passed and result.max_rank == 12
        assert all(isomorphic(g, g_n(4)) for g in result.achievers)

    def test_serialisation(self):
        data = json.loads(json.dumps(verify_singular_max(3).to_dict()))
        assert data["n"] == 3 and data["max_rank"] == 6 and data["achiever_count"] == 36
        assert len(data["achievers"]) == 36

    def test_rejects_n1(self):
        with pytest.raises(InputError):
            verify_singular_max(1)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_bounds_hold(self, n):
        assert singular_bound_counterexamples(n) == {"source": [], "in_degree": [], "two_in_degree_2": []}

    def test_source_bound_by_hand(self):
        rng = rng_for(12)
        for _ in range(200):
            g = random_graph(rng.randint(1, 7), rng)
            if 0 in g.in_degrees():
                assert len(set(table_of(g))) <= 1 << (g.n - 1)


class TestLowRank:
    @pytest.mark.parametrize("m, p", [(5, 7), (1, 2), (13, 17), (0, 2), (2, 3)])
    def test_primes(self, m, p):
        assert smallest_prime_greater_than(m) == p

    @pytest.mark.parametrize("r, ab", [(6, (2, 3)), (12, (3, 4)), (9, (3, 3))])
    def test_factor(self, r, ab):
        assert factor_min_sum(r) == ab

    @pytest.mark.parametrize("r", [7, 2, 1])
    def test_factor_rejects(self, r):
        with pytest.raises(InputError):
            factor_min_sum(r)

    def test_three_on_three(self):
        g = construct_disjunctive_with_rank(3, 3)
        assert g == disjoint_union(transitive_tournament(2), empty(1))
        assert ranks(DisjunctiveNetwork(g)).as_tuple() == (3, 3, 3)

    def test_six_on_four(self):
        g = construct_disjunctive_with_rank(4, 6)
        expected = disjoint_union(disjoint_union(transitive_tournament(1), transitive_tournament(2)), empty(1))
        assert g == expected
        assert ranks(DisjunctiveNetwork(g)).as_tuple() == (6, 6, 6)

    def test_rank_one_is_empty(self):
        g = construct_disjunctive_with_rank(5, 1)
        assert g.arc_count == 0
        assert set(table_of(g)) == {0}

    def test_out_of_range(self):
        with pytest.raises(RankOutOfRange, match="p = 7, valid r is 1..6") as info:
            construct_disjunctive_with_rank(4, 7)
        assert info.value.p == 7

    @pytest.mark.parametrize("n", range(1, 9))
    def test_every_valid_rank(self, n):
        p = smallest_prime_greater_than(n + 1)
        for r in range(1, p):
            f = DisjunctiveNetwork(construct_disjunctive_with_rank(n, r))
            assert is_idempotent(to_truth_table(f))
            assert oracle_triple(f) == (r, r, r)
