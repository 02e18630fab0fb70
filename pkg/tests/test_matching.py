from hypothesis import given, settings

from conftest import ugraphs
from outforest import (
    OracleBudget,
    UGraph,
    has_perfect_matching,
    maximum_matching,
    oracle_matching,
)

BUDGET = OracleBudget(max_vertices=12)


def petersen() -> UGraph:
    edges = set()
    for i in range(5):
        edges.add((i, (i + 1) % 5))
        edges.add((i, i + 5))
        edges.add((5 + i, 5 + (i + 2) % 5))
    return UGraph(10, edges)


def has_augmenting_path(g: UGraph, matched: set) -> bool:
    """Independent Berge check: alternating BFS from every exposed vertex,
    with a fallback exhaustive walk on these tiny graphs."""
    mate = {}
    for (u, v) in matched:
        mate[u] = v
        mate[v] = u
    adj = g.adjacency()
    exposed = [v for v in range(g.n) if v not in mate]
    # search alternating paths exposed -> ... -> exposed by DFS over
    # (vertex, parity) states with vertex-disjointness enforced
    def dfs(v, used, need_matched):
        for w in adj[v]:
            if w in used:
                continue
            if need_matched:
                if mate.get(v) == w:
                    if dfs(w, used | {w}, False):
                        return True
            else:
                if mate.get(v) == w:
                    continue
                if w not in mate:
                    return True
                if dfs(w, used | {w}, True):
                    return True
        return False

    return any(dfs(s, {s}, False) for s in exposed)


class TestMaximumMatching:
    def test_triangle(self):
        assert len(maximum_matching(UGraph(3, {(0, 1), (1, 2), (0, 2)}))) == 1

    def test_k4_perfect(self):
        k4 = UGraph(4, {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)})
        assert len(maximum_matching(k4)) == 2
        assert has_perfect_matching(k4)

    def test_petersen_perfect(self):
        g = petersen()
        m = maximum_matching(g)
        assert len(m) == len(oracle_matching(g, BUDGET)) == 5
        assert has_perfect_matching(g)

    def test_single_edge_and_odd_path(self):
        assert has_perfect_matching(UGraph(2, {(0, 1)}))
        assert not has_perfect_matching(UGraph(3, {(0, 1), (1, 2)}))

    def test_blossom_needed(self):
        # two triangles joined by an edge: needs odd-cycle handling
        g = UGraph(
            6, {(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)}
        )
        assert len(maximum_matching(g)) == 3

    @given(ugraphs(max_n=8))
    @settings(max_examples=300)
    def test_valid_and_maximum(self, g):
        m = maximum_matching(g)
        covered = [v for e in m.edges for v in e]
        assert len(covered) == len(set(covered))
        assert m.edges <= g.edges
        assert len(m) == len(oracle_matching(g, BUDGET))

    @given(ugraphs(max_n=8))
    @settings(max_examples=200)
    def test_no_augmenting_path(self, g):
        m = maximum_matching(g)
        assert not has_augmenting_path(g, set(m.edges))

    def test_deterministic(self):
        g = petersen()
        assert maximum_matching(g) == maximum_matching(g)
