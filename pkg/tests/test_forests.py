import pytest
from hypothesis import given, settings

from conftest import check_perfect_out_forest_directly, digraphs, out_forests
from outforest import (
    ArcClass,
    Digraph,
    ForestKind,
    OutForest,
    UGraph,
    bidirect,
    classify_arc,
    extract_perfect_forest,
    format_forest,
    parse_forest,
    verify,
)
from outforest.errors import ArcNotInDigraph, NotAlmostPerfect

TWO_CYCLE = Digraph(2, {(0, 1), (1, 0)})


class TestOutForest:
    def test_rejects_cycle(self):
        with pytest.raises(ValueError):
            OutForest(2, {0: 1, 1: 0})

    def test_caches(self):
        f = OutForest(5, {1: 0, 2: 1, 4: 3})
        assert f.roots == [0, 3]
        assert f.depth == [0, 1, 2, 0, 1]
        assert f.tree_id == [0, 0, 0, 3, 3]
        assert f.trees() == {0: [0, 1, 2], 3: [3, 4]}

    def test_serialization_round_trip(self):
        f = OutForest(4, {1: 0, 3: 2})
        assert parse_forest(format_forest(f)) == f


class TestClassifyArc:
    def test_backward_to_root(self):
        d = Digraph(3, {(0, 1), (1, 2), (2, 0)})
        f = OutForest(3, {1: 0, 2: 1})
        assert classify_arc(d, f, (2, 0)) is ArcClass.BACKWARD

    def test_forward(self):
        d = Digraph(3, {(0, 1), (1, 2), (0, 2)})
        f = OutForest(3, {1: 0, 2: 1})
        assert classify_arc(d, f, (0, 2)) is ArcClass.FORWARD

    def test_inter_tree(self):
        d = Digraph(4, {(0, 1), (2, 3), (1, 2)})
        f = OutForest(4, {1: 0, 3: 2})
        assert classify_arc(d, f, (1, 2)) is ArcClass.INTER_TREE

    def test_tree_and_cross(self):
        d = Digraph(4, {(0, 1), (0, 2), (2, 3), (1, 3), (1, 2)})
        f = OutForest(4, {1: 0, 2: 0, 3: 2})
        assert classify_arc(d, f, (0, 1)) is ArcClass.TREE
        assert classify_arc(d, f, (1, 3)) is ArcClass.CROSS
        assert classify_arc(d, f, (1, 2)) is ArcClass.CROSS

    def test_arc_not_in_digraph(self):
        with pytest.raises(ArcNotInDigraph):
            classify_arc(TWO_CYCLE, OutForest(2, {1: 0}), (0, 0))

    @given(digraphs(max_n=6), out_forests(max_n=6))
    @settings(max_examples=300)
    def test_counts_sum_to_arc_count(self, d, f):
        if d.n != f.n:
            return
        counts = {cls: 0 for cls in ArcClass}
        for arc in d.arcs:
            counts[classify_arc(d, f, arc)] += 1
        assert sum(counts.values()) == len(d.arcs)


class TestVerify:
    def test_two_cycle_perfect_fails_induced(self):
        f = OutForest(2, {1: 0})
        report = verify(TWO_CYCLE, f, ForestKind.PERFECT)
        assert not report.passed
        assert ("not-induced", (1, 0)) in report.violations

    def test_two_cycle_almost_passes(self):
        f = OutForest(2, {1: 0})
        assert verify(TWO_CYCLE, f, ForestKind.ALMOST_PERFECT).passed

    def test_path_pairs_weak_and_even(self):
        d = Digraph(4, {(0, 1), (1, 2), (2, 3)})
        f = OutForest(4, {1: 0, 3: 2})
        assert verify(d, f, ForestKind.WEAK_PERFECT).passed
        assert verify(d, f, ForestKind.EVEN).passed

    def test_singleton_tree_fails_weak_and_even(self):
        d = Digraph(3, {(0, 1)})
        f = OutForest(3, {1: 0})
        weak = verify(d, f, ForestKind.WEAK_PERFECT)
        assert ("even-degree", (2, 0)) in weak.violations
        even = verify(d, f, ForestKind.EVEN)
        assert ("odd-order-tree", (2, 1)) in even.violations

    def test_arc_not_in_host(self):
        d = Digraph(2, set())
        f = OutForest(2, {1: 0})
        report = verify(d, f, ForestKind.EVEN)
        assert ("arc-not-in-host", (0, 1)) in report.violations

    def test_report_json(self):
        import json

        report = verify(TWO_CYCLE, OutForest(2, {1: 0}), ForestKind.PERFECT)
        payload = json.loads(report.to_json())
        assert payload["verdict"] == "fail"
        assert payload["violations"][0]["rule"] == "not-induced"

    @given(digraphs(max_n=6), out_forests(max_n=6))
    @settings(max_examples=300)
    def test_implication_chain(self, d, f):
        if d.n != f.n:
            return
        verdicts = {
            kind: verify(d, f, kind).passed
            for kind in (
                ForestKind.PERFECT,
                ForestKind.ALMOST_PERFECT,
                ForestKind.WEAK_PERFECT,
                ForestKind.EVEN,
            )
        }
        if verdicts[ForestKind.PERFECT]:
            assert verdicts[ForestKind.ALMOST_PERFECT]
        if verdicts[ForestKind.ALMOST_PERFECT]:
            assert verdicts[ForestKind.WEAK_PERFECT]
        if verdicts[ForestKind.WEAK_PERFECT]:
            assert verdicts[ForestKind.EVEN]

    @given(digraphs(max_n=6), out_forests(max_n=6))
    @settings(max_examples=300)
    def test_weak_bounds_tree_and_arc_counts(self, d, f):
        if d.n != f.n or d.n == 0:
            return
        if verify(d, f, ForestKind.WEAK_PERFECT).passed:
            assert len(f.roots) <= d.n // 2
            assert len(f.arcs()) >= d.n // 2

    @given(digraphs(max_n=5), out_forests(max_n=5))
    @settings(max_examples=400)
    def test_perfect_agrees_with_independent_check(self, d, f):
        if d.n != f.n:
            return
        assert verify(d, f, ForestKind.PERFECT).passed == (
            check_perfect_out_forest_directly(d, f)
        )


class TestExtractPerfectForest:
    def test_single_edge(self):
        g = UGraph(2, {(0, 1)})
        assert extract_perfect_forest(g, OutForest(2, {1: 0})) == {(0, 1)}

    def test_path_matching(self):
        g = UGraph(4, {(0, 1), (1, 2), (2, 3)})
        f = OutForest(4, {1: 0, 3: 2})
        assert extract_perfect_forest(g, f) == {(0, 1), (2, 3)}

    def test_rejects_non_almost_perfect(self):
        g = UGraph(4, {(0, 1), (1, 2), (2, 3), (0, 3)})
        # the 4-path forest leaves (0,3)/(3,0) as inter-tree arcs, fine;
        # a single spanning path tree has even inner degrees and fails
        bad = OutForest(4, {1: 0, 2: 1, 3: 2})
        with pytest.raises(NotAlmostPerfect):
            extract_perfect_forest(g, bad)

    def test_bidirected_backward_arcs_only_reverse_tree_arcs(self):
        # in a bidirected digraph a backward arc deeper than the parent
        # would make its reverse a forbidden forward arc, so the only
        # backward arcs of an almost perfect out-forest are reverses of
        # tree arcs; that keeps every tree induced in the source graph
        from outforest import construct_for_single_initial

        g = UGraph(4, {(0, 1), (1, 2), (2, 3), (0, 3)})
        d = bidirect(g)
        f = construct_for_single_initial(d)
        for (u, v) in d.arcs:
            if classify_arc(d, f, (u, v)) is ArcClass.BACKWARD:
                assert classify_arc(d, f, (v, u)) is ArcClass.TREE
        assert extract_perfect_forest(g, f) <= g.edges
