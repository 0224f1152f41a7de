"""Graph core: representation, powers, clique number, constructions."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iasi import (
    DomainError,
    FamilySpec,
    Graph,
    cartesian_product,
    clique_number,
    complement,
    components,
    corona,
    diameter,
    disjoint_union,
    generate,
    induced_subgraph,
    is_bipartite,
    is_connected,
    join,
    maximum_clique,
    power,
)
from oracles import are_isomorphic, naive_clique_number
from strategies import connected_graphs, graphs


def fam(name, **params):
    return generate(FamilySpec.make(name, **params))


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(DomainError):
            Graph.make(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            Graph.make(2, [(0, 2)])

    def test_normalizes_edge_order(self):
        assert Graph.make(3, [(2, 0)]).edges == frozenset({(0, 2)})

    def test_duplicate_edges_collapse(self):
        assert len(Graph.make(3, [(0, 1), (1, 0)]).edges) == 1

    def test_json_round_trip_and_sorted_edges(self):
        g = Graph.make(4, [(3, 1), (0, 2), (0, 1)], roles={0: "hub"})
        data = g.to_json()
        assert data["edges"] == [[0, 1], [0, 2], [1, 3]]
        assert data["roles"] == {"0": "hub"}
        back = Graph.from_json(data)
        assert back == g
        assert back.roles == {0: "hub"}

    def test_equality_ignores_roles(self):
        assert Graph.make(2, [(0, 1)], roles={0: "x"}) == Graph.make(2, [(0, 1)])


class TestPower:
    def test_power_one_is_identity(self):
        g = fam("path", m=4)
        assert power(g, 1) == g

    def test_rejects_power_zero(self):
        with pytest.raises(DomainError):
            power(fam("path", m=2), 0)

    def test_cycle5_squared_is_complete(self):
        assert len(power(fam("cycle", n=5), 2).edges) == 10

    def test_path4_squared_clique_number(self):
        # frozen from all-subsets enumeration
        squared = power(fam("path", m=4), 2)
        assert clique_number(squared) == 3
        assert naive_clique_number(squared) == 3

    def test_disconnected_powers_per_component(self):
        two_edges = Graph.make(4, [(0, 1), (2, 3)])
        assert power(two_edges, 5) == two_edges

    @given(g=connected_graphs(max_n=7))
    def test_power_at_diameter_is_complete(self, g):
        d = diameter(g)
        if d >= 1:
            assert len(power(g, d).edges) == g.n * (g.n - 1) // 2

    @given(g=graphs(max_n=7), r1=st.integers(1, 4), r2=st.integers(1, 4))
    def test_edge_monotone_in_r(self, g, r1, r2):
        lo, hi = sorted((r1, r2))
        assert power(g, lo).edges <= power(g, hi).edges


class TestCliqueNumber:
    def test_complete(self):
        assert clique_number(fam("complete", n=6)) == 6

    def test_bipartite_triangle_free(self):
        assert clique_number(fam("complete_bipartite", m=3, n=4)) == 2

    def test_wheel5(self):
        # frozen from all-subsets enumeration of W_6
        assert clique_number(fam("wheel", n=5)) == 3
        assert naive_clique_number(fam("wheel", n=5)) == 3

    def test_single_vertex(self):
        assert clique_number(Graph.make(1)) == 1

    def test_maximum_clique_is_a_clique(self):
        g = fam("wheel", n=6)
        clique = maximum_clique(g)
        assert all(g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :])

    def test_deterministic(self):
        g = fam("helm", n=5)
        assert maximum_clique(g) == maximum_clique(Graph.make(g.n, g.edges))

    @given(g=graphs(max_n=9))
    @settings(max_examples=60)
    def test_matches_naive_enumeration(self, g):
        assert clique_number(g) == naive_clique_number(g)


class TestBipartite:
    def test_even_cycle(self):
        parts = is_bipartite(fam("cycle", n=6))
        assert parts is not None
        assert sorted(map(len, parts)) == [3, 3]

    def test_odd_cycle(self):
        assert is_bipartite(fam("cycle", n=5)) is None

    def test_helm_contains_triangle(self):
        assert is_bipartite(fam("helm", n=3)) is None

    @given(g=graphs(max_n=8))
    def test_partition_covers_and_separates(self, g):
        parts = is_bipartite(g)
        if parts is None:
            return
        left, right = parts
        assert sorted(left + right) == list(range(g.n))
        for u, v in g.edges:
            assert (u in left) != (v in left)


class TestDiameterComponents:
    def test_path_diameter(self):
        assert diameter(fam("path", m=5)) == 5

    def test_disconnected_rejected(self):
        with pytest.raises(DomainError):
            diameter(Graph.make(4, [(0, 1), (2, 3)]))

    def test_components_partition(self):
        g = Graph.make(5, [(0, 1), (2, 3), (3, 4)])
        comps = components(g)
        assert [c.n for c in comps] == [2, 3]
        assert all(is_connected(c) for c in comps)

    def test_component_provenance(self):
        g = Graph.make(4, [(1, 3)])
        comps = components(g)
        origins = [sorted(p[1] for p in c.provenance.values()) for c in comps]
        assert origins == [[0], [1, 3], [2]]


class TestConstructions:
    def test_complement_involution(self):
        g = fam("path", m=3)
        assert complement(complement(g)) == g

    def test_path3_is_self_complementary(self):
        g = fam("path", m=3)
        assert are_isomorphic(g, complement(g))

    def test_join_cycle_and_k1_is_wheel(self):
        joined = join(fam("cycle", n=4), fam("complete", n=1))
        wheel = fam("wheel", n=4)
        assert are_isomorphic(joined, wheel)
        assert joined == wheel  # same vertex layout, rim first then hub

    def test_corona_k1_c3_is_k4(self):
        result = corona(fam("complete", n=1), fam("cycle", n=3))
        assert are_isomorphic(result, fam("complete", n=4))

    def test_disjoint_union_counts(self):
        g = disjoint_union(fam("cycle", n=3), fam("path", m=2))
        assert (g.n, len(g.edges)) == (6, 5)

    def test_cartesian_product_of_edges_is_square(self):
        k2 = fam("complete", n=2)
        assert are_isomorphic(cartesian_product(k2, k2), fam("cycle", n=4))

    def test_induced_subgraph_remaps(self):
        g = fam("cycle", n=5)
        sub = induced_subgraph(g, [1, 2, 4])
        assert sub.n == 3
        assert sub.edges == frozenset({(0, 1)})
        assert sub.provenance[2] == ("orig", 4)

    @given(g1=graphs(min_n=1, max_n=4), g2=graphs(min_n=1, max_n=4))
    @settings(max_examples=40)
    def test_clique_number_identities(self, g1, g2):
        w1, w2 = clique_number(g1), clique_number(g2)
        assert clique_number(join(g1, g2)) == w1 + w2
        assert clique_number(disjoint_union(g1, g2)) == max(w1, w2)
        assert clique_number(cartesian_product(g1, g2)) == max(w1, w2)
