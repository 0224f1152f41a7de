"""Verification stack and induced labelings on transformed graphs."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iasi import (
    DomainError,
    FamilySpec,
    Graph,
    IntSet,
    Labeling,
    construct_strong,
    difference_set,
    edge_label,
    generate,
    induce_on_contraction,
    induce_on_line_graph,
    induce_on_reduction,
    induce_on_subdivision,
    induce_on_total_graph,
    induced_subgraph,
    verify,
)
from strategies import connected_graphs, graphs


def fam(name, **params):
    return generate(FamilySpec.make(name, **params))


def labeling(*label_sets):
    return Labeling({v: IntSet.from_iterable(s) for v, s in enumerate(label_sets)})


K2 = Graph.make(2, [(0, 1)])


class TestEdgeLabel:
    def test_sumset_of_endpoints(self):
        f = labeling({0, 1}, {0, 2})
        assert edge_label(K2, f, 0, 1).elements == (0, 1, 2, 3)

    def test_singletons(self):
        f = labeling({1}, {2})
        assert edge_label(K2, f, 1, 0).elements == (3,)

    def test_non_edge_rejected(self):
        g = fam("path", m=2)
        with pytest.raises(DomainError):
            edge_label(g, construct_strong(g), 0, 2)


class TestVerify:
    def test_k2_uniform_report(self):
        report = verify(K2, labeling({0, 1}, {0, 2}))
        assert report.is_strong and report.is_set_indexer and report.is_set_labeling
        assert report.uniform_k == 4
        assert report.completely_uniform == (4, 2)
        assert not report.strong_vacuous
        assert report.vertex_set_indexing_numbers == {0: 2, 1: 2}

    def test_k2_shared_difference_fails(self):
        report = verify(K2, labeling({0, 1}, {1, 2}))
        assert not report.is_strong
        assert report.failing_edges == (((0, 1), 2, 2, 3),)

    def test_path2_strong_edgewise(self):
        report = verify(fam("path", m=2), labeling({0, 1}, {0, 2}, {0, 1, 5}))
        assert report.is_strong
        assert report.uniform_k is None  # edge cardinalities 4 and 6
        assert report.completely_uniform is None

    def test_vacuous_on_edgeless(self):
        report = verify(Graph.make(1), labeling({0, 3}))
        assert report.is_strong and report.strong_vacuous
        assert report.uniform_k is None

    def test_partial_labeling_rejected(self):
        with pytest.raises(DomainError):
            verify(K2, labeling({0, 1}))

    def test_empty_label_rejected(self):
        with pytest.raises(DomainError):
            verify(K2, Labeling({0: IntSet.of(1), 1: IntSet()}))

    def test_unknown_vertex_rejected(self):
        with pytest.raises(DomainError):
            verify(K2, labeling({0}, {1}, {2}))

    def test_duplicate_vertex_labels_flagged(self):
        report = verify(Graph.make(2), labeling({0, 1}, {0, 1}))
        assert not report.is_set_labeling

    def test_duplicate_edge_labels_flagged(self):
        # two disjoint edges with identical sumsets
        g = Graph.make(4, [(0, 1), (2, 3)])
        report = verify(g, labeling({0}, {1}, {1}, {0}))
        assert not report.is_set_indexer

    def test_complete_graph_strong_iff_pairwise_disjoint(self):
        k4 = fam("complete", n=4)
        f = construct_strong(k4)
        report = verify(k4, f)
        diffs = [set(difference_set(f.label(v)).elements) for v in k4.vertices]
        pairwise = all(
            a.isdisjoint(b) for a, b in itertools.combinations(diffs, 2)
        )
        assert report.is_strong == pairwise is True

    @given(g=graphs(max_n=7), data=st.data())
    @settings(max_examples=50)
    def test_invariant_under_vertex_permutation(self, g, data):
        f = construct_strong(g)
        perm = data.draw(st.permutations(range(g.n)))
        permuted_graph = Graph.make(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        permuted_labels = Labeling({perm[v]: f.label(v) for v in g.vertices})
        a, b = verify(g, f), verify(permuted_graph, permuted_labels)
        assert (a.is_strong, a.is_set_indexer, a.is_set_labeling) == (
            b.is_strong,
            b.is_set_indexer,
            b.is_set_labeling,
        )
        assert (a.uniform_k, a.completely_uniform) == (b.uniform_k, b.completely_uniform)


class TestStrongInvariants:
    @given(g=graphs(min_n=2, max_n=7))
    @settings(max_examples=50)
    def test_edge_difference_set_contains_endpoint_difference_sets(self, g):
        f = construct_strong(g)
        for u, v in g.edges:
            edge_diffs = set(difference_set(edge_label(g, f, u, v)).elements)
            assert set(difference_set(f.label(u)).elements) <= edge_diffs
            assert set(difference_set(f.label(v)).elements) <= edge_diffs

    @given(g=graphs(min_n=2, max_n=8), data=st.data())
    @settings(max_examples=50)
    def test_restriction_to_subgraph_stays_strong(self, g, data):
        f = construct_strong(g)
        k = data.draw(st.integers(1, g.n))
        keep = sorted(data.draw(st.permutations(range(g.n)))[:k])
        sub = induced_subgraph(g, keep)
        dropped = data.draw(
            st.lists(st.sampled_from(sorted(sub.edges)), unique=True)
        ) if sub.edges else []
        sub = Graph.make(sub.n, set(sub.edges) - set(dropped))
        restricted = f.relabel({i: keep[i] for i in range(len(keep))})
        assert verify(sub, restricted).is_strong


class TestLineGraphInduction:
    def test_path2_line_graph_not_strong(self):
        g = fam("path", m=2)
        lg, lf = induce_on_line_graph(g, construct_strong(g))
        report = verify(lg, lf)
        assert not report.is_strong
        assert report.failing_edges

    def test_single_edge_line_graph_vacuously_strong(self):
        lg, lf = induce_on_line_graph(K2, construct_strong(K2))
        report = verify(lg, lf)
        assert report.is_strong and report.strong_vacuous

    def test_triangle_all_line_edges_fail(self):
        g = fam("cycle", n=3)
        lg, lf = induce_on_line_graph(g, construct_strong(g))
        report = verify(lg, lf)
        assert len(report.failing_edges) == len(lg.edges) == 3

    def test_non_strong_input_rejected(self):
        with pytest.raises(DomainError):
            induce_on_line_graph(K2, labeling({0, 1}, {1, 2}))


class TestTotalGraphInduction:
    def test_never_strong(self):
        for g in (K2, fam("path", m=3), fam("cycle", n=4)):
            tg, tf = induce_on_total_graph(g, construct_strong(g))
            assert not verify(tg, tf).is_strong


class TestSubdivisionInduction:
    @given(g=connected_graphs(max_n=6), data=st.data())
    @settings(max_examples=40)
    def test_both_new_edges_fail(self, g, data):
        f = construct_strong(g)
        u, v = data.draw(st.sampled_from(sorted(g.edges)))
        sg, sf, w = induce_on_subdivision(g, f, (u, v))
        report = verify(sg, sf)
        assert not report.is_strong
        failing = {frozenset(edge) for edge, *_ in report.failing_edges}
        assert {frozenset((u, w)), frozenset((v, w))} <= failing


PATH3 = fam("path", m=3)


class TestContractionInduction:
    def test_frozen_witness_stays_strong(self):
        f = labeling({0, 1}, {0, 2}, {0, 5}, {0, 9})
        cg, cf, merged, _ = induce_on_contraction(PATH3, f, (1, 2))
        report = verify(cg, cf)
        assert report.is_strong
        assert cf.label(merged).elements == (0, 2, 5, 7)

    def test_frozen_witness_breaks_strongness(self):
        # D of the merged label {0,2,5,7} is {2,3,5,7}; it meets D({0,3}) = {3}
        f = labeling({0, 3}, {0, 2}, {0, 5}, {0, 9})
        assert verify(PATH3, f).is_strong
        cg, cf, _, _ = induce_on_contraction(PATH3, f, (1, 2))
        assert not verify(cg, cf).is_strong

    def test_brute_force_finds_breaking_witness_on_path3(self):
        # search tiny strong labelings of the 4-vertex path whose middle-edge
        # contraction is not strong
        candidates = [
            IntSet.of(0, d) for d in range(1, 10)
        ]
        found = None
        for quad in itertools.permutations(candidates, 4):
            f = Labeling(dict(enumerate(quad)))
            if not verify(PATH3, f).is_strong:
                continue
            cg, cf, _, _ = induce_on_contraction(PATH3, f, (1, 2))
            if not verify(cg, cf).is_strong:
                found = f
                break
        assert found is not None

    def test_injectivity_break_reported_not_rejected(self):
        # merged label equals the far vertex's label
        f = labeling({0, 1}, {0, 4}, {0, 2}, {0, 1, 4, 5})
        assert verify(PATH3, f).is_strong
        cg, cf, merged, _ = induce_on_contraction(PATH3, f, (0, 1))
        report = verify(cg, cf)
        assert cf.label(merged).elements == (0, 1, 4, 5)
        assert not report.is_set_labeling
        assert report.is_strong


class TestReductionInduction:
    def test_surviving_labels_unchanged(self):
        g = fam("cycle", n=5)
        f = construct_strong(g)
        sg, w = None, None
        rg, rf = induce_on_reduction(g, f, (0, 1, 2))
        assert rf.label(0) == f.label(0)
        assert verify(rg, rf).is_strong  # all-pairwise-disjoint labels survive

    def test_endpoint_and_all_three_readings_coincide_on_strong_inputs(self):
        # the middle vertex of a reducible path is adjacent to both ends, so
        # in a strong labeling its difference set is already disjoint from
        # theirs: requiring "all three pairwise disjoint" adds nothing beyond
        # "the two endpoints disjoint".  Both readings must predict the
        # reduction's strongness.
        g = fam("path", m=2)
        candidates = [IntSet.of(0, d) for d in range(1, 8)]
        tried = 0
        for triple in itertools.permutations(candidates, 3):
            f = Labeling(dict(enumerate(triple)))
            if not verify(g, f).is_strong:
                continue
            tried += 1
            d0 = set(difference_set(f.label(0)).elements)
            d1 = set(difference_set(f.label(1)).elements)
            d2 = set(difference_set(f.label(2)).elements)
            endpoints_reading = d0.isdisjoint(d2)
            all_three_reading = (
                endpoints_reading and d0.isdisjoint(d1) and d1.isdisjoint(d2)
            )
            assert endpoints_reading == all_three_reading
            rg, rf = induce_on_reduction(g, f, (0, 1, 2))
            assert verify(rg, rf).is_strong == endpoints_reading
        assert tried > 50
