import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, table_of
from disjnet import DisjunctiveNetwork, ResourceError, TruthTableNetwork
from disjnet.families import chorded_cycle, cycle, g_n
from disjnet.network import power, to_truth_table
from disjnet.oracle import (
    all_topologies,
    build_functional_graph,
    image_of_power,
    is_lattice_of_fixed_points,
    oracle_fixed_set,
    oracle_image_set,
    oracle_orbit_transient,
    oracle_periodic_set,
    oracle_preimages,
)
from disjnet.sampling import all_monotone_networks, characterisation_corpus, random_monotone_table, rng_for


def tables(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(0, (1 << n) - 1), min_size=1 << n, max_size=1 << n).map(
            lambda t: TruthTableNetwork(n, tuple(t))
        )
    )


def periodic_by_walking(table):
    """s is periodic iff iterating 2**n times from s returns to s at some step."""
    size = len(table)
    out = set()
    for s in range(size):
        v = s
        for _ in range(size):
            v = table[v]
            if v == s:
                out.add(s)
                break
    return out


class TestFunctionalGraph:
    def test_swap(self):
        fg = build_functional_graph(DisjunctiveNetwork(cycle(2)))
        assert fg.cycle_states() == {0, 1, 2, 3}
        assert [fg.period[s] for s in range(4)] == [1, 2, 2, 1]

    def test_g2(self):
        fg = build_functional_graph(DisjunctiveNetwork(g_n(2)))
        assert fg.cycle_states() == {0b00, 0b10, 0b11}
        assert fg.transient[0b01] == 1

    def test_chorded_cycle(self):
        fg = build_functional_graph(DisjunctiveNetwork(chorded_cycle(3, 2)))
        assert fg.cycle_states() == {0, 0b111}
        # {0} -> {1,2} -> {0,2} -> {0,1,2} takes 3 steps, but the longest orbit
        # starts at {1}: {1} -> {2} -> {0} -> {1,2} -> {0,2} -> {0,1,2}
        assert fg.transient[0b001] == 3
        assert fg.transient[0b010] == 5
        assert max(fg.transient) == 5

    def test_cap(self):
        with pytest.raises(ResourceError, match="--oracle-cap"):
            build_functional_graph(DisjunctiveNetwork(cycle(5)), cap=4)

    @given(tables())
    def test_invariants(self, f):
        fg = build_functional_graph(f)
        for s in range(1 << f.n):
            assert (fg.transient[s] == 0) == bool(fg.on_cycle[s])
            if fg.on_cycle[s]:
                v = s
                for _ in range(fg.period[s]):
                    v = f.table[v]
                assert v == s
            v = s
            for _ in range(fg.transient[s]):
                v = f.table[v]
            assert fg.on_cycle[v]

    @given(tables())
    def test_cycle_states_by_walking(self, f):
        assert build_functional_graph(f).cycle_states() == periodic_by_walking(f.table)

    @given(tables())
    def test_deterministic(self, f):
        assert build_functional_graph(f) == build_functional_graph(f)


class TestSets:
    def test_g2(self):
        f = DisjunctiveNetwork(g_n(2))
        expected = {0b00, 0b10, 0b11}
        assert oracle_image_set(f) == oracle_periodic_set(f) == oracle_fixed_set(f) == expected

    def test_cycle(self):
        f = DisjunctiveNetwork(cycle(3))
        assert oracle_image_set(f) == oracle_periodic_set(f) == set(range(8))
        assert oracle_fixed_set(f) == {0, 7}

    def test_constant_zero(self):
        f = TruthTableNetwork.constant(2, 0)
        assert oracle_image_set(f) == oracle_periodic_set(f) == oracle_fixed_set(f) == {0}

    @given(tables())
    def test_nesting(self, f):
        assert oracle_fixed_set(f) <= oracle_periodic_set(f) <= oracle_image_set(f)

    @given(tables())
    def test_periodic_is_image_of_large_power(self, f):
        assert oracle_periodic_set(f) == image_of_power(f, 1 << f.n)

    @given(graphs(max_n=6))
    def test_preimages(self, g):
        f = DisjunctiveNetwork(g)
        table = table_of(g)
        for x in oracle_image_set(f):
            assert oracle_preimages(f, x) == [s for s, v in enumerate(table) if v == x]

    def test_transient(self):
        assert oracle_orbit_transient(DisjunctiveNetwork(chorded_cycle(3, 2)), 0b001) == 3

    def test_power_zero(self):
        f = TruthTableNetwork.constant(2, 1)
        assert power(f, 0) == TruthTableNetwork.identity(2)


class TestTopologies:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355)])
    def test_counts(self, n, count):
        assert len(all_topologies(n)) == count

    def test_refuses_large(self):
        with pytest.raises(ResourceError):
            all_topologies(5)


class TestFixedPointLattice:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_every_monotone_network(self, n):
        for f in all_monotone_networks(n):
            assert is_lattice_of_fixed_points(f) is not None

    def test_sampled_monotone(self):
        rng = rng_for(1)
        for _ in range(200):
            assert is_lattice_of_fixed_points(random_monotone_table(rng.randint(1, 6), rng)) is not None

    def test_least_and_greatest(self):
        assert is_lattice_of_fixed_points(to_truth_table(DisjunctiveNetwork(g_n(2)))) == (0, 3)

    def test_no_fixed_point(self):
        assert is_lattice_of_fixed_points(TruthTableNetwork(1, (1, 0))) is None

    def test_corpus_runs(self):
        for _, f in characterisation_corpus(50, 4, rng_for(0)):
            result = is_lattice_of_fixed_points(f)
            if result is not None:
                least, greatest = result
                assert least & ~greatest == 0
