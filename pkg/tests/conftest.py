"""Shared hypothesis strategies and independent checkers.

The checkers here are deliberately written from scratch (plain BFS /
degree counting) so they stay independent of the library code they
certify.
"""

from collections import defaultdict, deque

import hypothesis.strategies as st

from outforest import Digraph, OutForest, OutTree, UGraph


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.frozensets(st.sampled_from(slots)) if slots else st.just(frozenset()))
    return Digraph(n, arcs)


@st.composite
def ugraphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.frozensets(st.sampled_from(slots)) if slots else st.just(frozenset()))
    return UGraph(n, edges)


@st.composite
def out_forests(draw, min_n=1, max_n=8):
    """Random spanning out-forest: attach each vertex, in a random order,
    either as a root or to an earlier vertex in that order."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    parent = {}
    for i, v in enumerate(order):
        if i == 0:
            continue
        choice = draw(st.integers(-1, i - 1))
        if choice >= 0:
            parent[v] = order[choice]
    return OutForest(n, parent)


@st.composite
def spanning_out_trees(draw, min_n=1, max_n=12):
    """Random out-tree spanning 0..n-1."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    parent = {}
    for i in range(1, n):
        parent[order[i]] = order[draw(st.integers(0, i - 1))]
    return OutTree(n, order[0], parent)


@st.composite
def even_spanning_out_trees(draw, min_n=2, max_n=12):
    t = draw(spanning_out_trees(min_n, max_n))
    if t.n % 2 == 1:
        # drop a leaf to make the order even
        leaves = sorted(t.vertices() - set(t.parent.values()) - {t.root})
        leaf = leaves[draw(st.integers(0, len(leaves) - 1))]
        parent = dict(t.parent)
        del parent[leaf]
        # renumber so the tree spans 0..n-2
        keep = sorted(set(range(t.n)) - {leaf})
        remap = {old: new for new, old in enumerate(keep)}
        parent = {remap[c]: remap[p] for c, p in parent.items()}
        return OutTree(t.n - 1, remap[t.root], parent)
    return t


# ---------------------------------------------------------------------------
# independent checkers


def check_undirected_perfect_forest(g: UGraph, edges) -> bool:
    """Spanning forest of g, all degrees odd, each tree induced.  Written
    against the undirected definition only."""
    edges = {(min(u, v), max(u, v)) for (u, v) in edges}
    if not edges <= g.edges:
        return False
    adj = defaultdict(set)
    for (u, v) in edges:
        adj[u].add(v)
        adj[v].add(u)
    if any(len(adj[v]) % 2 == 0 for v in range(g.n)):
        return False
    comp = [-1] * g.n
    comps = 0
    for s in range(g.n):
        if comp[s] != -1:
            continue
        queue = deque([s])
        comp[s] = comps
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if comp[w] == -1:
                    comp[w] = comps
                    queue.append(w)
        comps += 1
    if len(edges) != g.n - comps:  # cycle somewhere
        return False
    for (u, v) in g.edges:
        if comp[u] == comp[v] and (u, v) not in edges:
            return False  # tree not induced
    return True


def check_perfect_out_forest_directly(d: Digraph, f: OutForest) -> bool:
    """Definition-level perfect out-forest check, coded independently of
    forests.verify: spanning out-forest, odd underlying degrees, and each
    tree's induced subdigraph equal to the tree."""
    if f.n != d.n:
        return False
    arcs = f.arcs()
    if not arcs <= d.arcs:
        return False
    deg = defaultdict(int)
    for (u, v) in arcs:
        deg[u] += 1
        deg[v] += 1
    if any(deg[v] % 2 == 0 for v in range(d.n)):
        return False
    # component labels of the forest via undirected BFS
    adj = defaultdict(set)
    for (u, v) in arcs:
        adj[u].add(v)
        adj[v].add(u)
    comp = [-1] * d.n
    comps = 0
    for s in range(d.n):
        if comp[s] != -1:
            continue
        queue = deque([s])
        comp[s] = comps
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if comp[w] == -1:
                    comp[w] = comps
                    queue.append(w)
        comps += 1
    for (u, v) in d.arcs:
        if comp[u] == comp[v] and (u, v) not in arcs:
            return False
    return True


def reachable(d: Digraph, source: int) -> set:
    """Plain BFS reachability, independent of the SCC code."""
    adj = defaultdict(list)
    for (u, v) in d.arcs:
        adj[u].append(v)
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen
