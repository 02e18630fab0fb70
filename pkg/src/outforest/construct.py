"""Constructive pipelines: the matching gadget and its correspondence,
the two forest-transformation lemmas, and the end-to-end constructors.

The gadget reduces weak-perfect-out-forest existence to perfect matching:
each source vertex u gets a block X_u of 2k-1 gadget vertices (k-1 internal
matching pairs plus a distinguished boundary vertex y_u), and each source
arc (u,v) contributes all edges from X_u to y_v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    MalformedLine,
    NotPerfectMatching,
    NotWeakPerfect,
    OddOrder,
    WrongClass,
)
from .forests import (
    ArcClass,
    ForestKind,
    OutForest,
    classify_arc,
    extract_perfect_forest,
    verify,
)
from .graphs import (
    Arc,
    ConnectivityClass,
    Digraph,
    Edge,
    OutTree,
    UGraph,
    bidirect,
    classify,
    find_universal_root,
    spanning_out_tree,
)
from .matching import Matching, maximum_matching


@dataclass(frozen=True)
class GadgetCorrespondence:
    """Vertex bookkeeping for the gadget graph of a digraph of order n=2k.

    Block X_u occupies the contiguous index range
    [u*(2k-1), (u+1)*(2k-1)); its first index is the boundary vertex y_u;
    the remaining 2k-2 indices pair up into the k-1 internal edges.
    """

    n: int
    k: int

    @property
    def block_size(self) -> int:
        return 2 * self.k - 1

    def block(self, u: int) -> range:
        return range(u * self.block_size, (u + 1) * self.block_size)

    def y(self, u: int) -> int:
        return u * self.block_size

    def internal_pairs(self, u: int) -> list[Edge]:
        s = self.y(u)
        return [(s + 2 * i + 1, s + 2 * i + 2) for i in range(self.k - 1)]

    def source_of(self, gadget_vertex: int) -> int:
        return gadget_vertex // self.block_size

    def arc_edges(self, arc: Arc) -> list[Edge]:
        u, v = arc
        yv = self.y(v)
        return [(min(x, yv), max(x, yv)) for x in self.block(u)]

    def format_sidecar(self) -> str:
        lines = []
        for u in range(self.n):
            lines.append(
                f"block {u} {self.y(u)} {self.block_size} {self.y(u)}"
            )
        for u in range(self.n):
            for (a, b) in self.internal_pairs(u):
                lines.append(f"pair {a} {b}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ArcSet:
    """Arc subset with per-vertex in-degree at most one; directed cycles
    are allowed (they are what remove_cycles strips)."""

    n: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        indeg: dict[int, int] = {}
        for (u, v) in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"bad arc ({u},{v})")
            indeg[v] = indeg.get(v, 0) + 1
            if indeg[v] > 1:
                raise ValueError(f"in-degree of {v} exceeds one")

    def degree(self, v: int) -> int:
        return sum(1 for (a, b) in self.arcs if a == v or b == v)


def build_gadget(d: Digraph) -> tuple[UGraph, GadgetCorrespondence]:
    """Gadget graph whose perfect matchings correspond to weak perfect
    out-forests of d.  Requires even order n >= 2.

    Note: for antiparallel source arcs the two copies of the boundary edge
    {y_u, y_v} collapse into one undirected edge; matching_to_arcset
    resolves the orientation.
    """
    if d.n % 2 == 1 or d.n < 2:
        raise OddOrder(f"gadget requires even order >= 2, got n={d.n}")
    c = GadgetCorrespondence(d.n, d.n // 2)
    edges: set[Edge] = set()
    for u in range(d.n):
        edges.update(c.internal_pairs(u))
    for arc in d.arcs:
        edges.update(c.arc_edges(arc))
    return UGraph(d.n * c.block_size, frozenset(edges)), c


def matching_to_arcset(
    d: Digraph, m: Matching, c: GadgetCorrespondence
) -> ArcSet:
    """Arcs (u,v) of d such that m matches some vertex of X_u to y_v.

    A collapsed boundary edge {y_u, y_v} with both arcs present in d is
    oriented min-index tail -> max-index head.
    """
    gadget_n = d.n * c.block_size
    if len(m.covered) != gadget_n:
        raise NotPerfectMatching(
            f"matching covers {len(m.covered)} of {gadget_n} gadget vertices"
        )
    arcs: set[Arc] = set()
    for (a, b) in m.edges:
        u, v = c.source_of(a), c.source_of(b)
        if u == v:
            continue  # internal pair edge
        a_is_y = a == c.y(u)
        b_is_y = b == c.y(v)
        if a_is_y and b_is_y:
            if (u, v) in d.arcs and (v, u) in d.arcs:
                arc = (min(u, v), max(u, v))
            elif (u, v) in d.arcs:
                arc = (u, v)
            else:
                arc = (v, u)
        elif b_is_y:
            arc = (u, v)
        else:
            arc = (v, u)
        if arc not in d.arcs:
            raise NotPerfectMatching(f"matching edge {(a, b)} maps to no arc")
        arcs.add(arc)
    return ArcSet(d.n, frozenset(arcs))


def remove_cycles(f: ArcSet) -> OutForest:
    """Strip directed cycles from an in-degree <= 1 arc set whose vertices
    all have odd incident arc counts; the result is a weak perfect
    out-forest (cycle vertices lose exactly two incident arcs each)."""
    for v in range(f.n):
        if f.degree(v) % 2 == 0:
            raise ValueError(f"vertex {v} has even incident arc count")
    parent = {v: u for (u, v) in f.arcs}
    # functional-graph cycle detection on parent pointers; cycles are
    # vertex-disjoint because in-degree is at most one
    color = [0] * f.n  # 0 unseen, 1 in progress, 2 done
    cycles: list[list[int]] = []
    for s in range(f.n):
        if color[s]:
            continue
        path = []
        v = s
        while color[v] == 0:
            color[v] = 1
            path.append(v)
            if v not in parent:
                break
            v = parent[v]
        if color[v] == 1 and v in parent:
            cycle = path[path.index(v):]
            cycles.append(cycle)
        for w in path:
            color[w] = 2
    for cycle in sorted(cycles, key=min):
        for v in cycle:
            del parent[v]
    return OutForest(f.n, parent)


def forest_to_matching(
    d: Digraph, f: OutForest, c: GadgetCorrespondence
) -> Matching:
    """Perfect gadget matching witnessing a weak perfect out-forest.

    Per block X_u: a root's first outgoing arc is routed through y_u (the
    in-arc of a non-root covers y_u instead), further outgoing arcs consume
    internal-pair vertices two by two, and leftover whole pairs are matched
    internally.  Each vertex covers an even number of internal-pair
    vertices, so the leftovers are exactly unions of full pairs.
    """
    report = verify(d, f, ForestKind.WEAK_PERFECT)
    if not report.passed:
        raise NotWeakPerfect(report.to_json())
    edges: set[Edge] = set()
    for u in range(d.n):
        out_arcs = [(u, child) for child in f.children[u]]
        slots: list[int] = []
        if u in f.roots:
            # roots have odd out-degree >= 1; y_u rides the first arc
            first, rest = out_arcs[0], out_arcs[1:]
            yv = c.y(first[1])
            edges.add((min(c.y(u), yv), max(c.y(u), yv)))
        else:
            rest = out_arcs
        for (a, b) in c.internal_pairs(u):
            slots.extend((a, b))
        used = 0
        for (_, child) in rest:
            x = slots[used]
            used += 1
            yv = c.y(child)
            edges.add((min(x, yv), max(x, yv)))
        assert used % 2 == 0
        for i in range(used // 2, c.k - 1):
            edges.add(c.internal_pairs(u)[i])
    return Matching(frozenset(edges))


def decide_weak(d: Digraph) -> OutForest | None:
    """Decide/construct a weak perfect out-forest via the gadget.

    Returns None when none exists (in particular for odd order).  Works on
    disconnected digraphs too: the construction never uses connectivity.
    """
    if d.n == 0:
        return OutForest(0, {})
    if d.n % 2 == 1:
        return None
    g, c = build_gadget(d)
    m = maximum_matching(g)
    if 2 * len(m) != g.n:
        return None
    f = remove_cycles(matching_to_arcset(d, m, c))
    assert verify(d, f, ForestKind.WEAK_PERFECT).passed
    return f


def even_tree_to_weak(t: OutTree) -> OutForest:
    """Weak perfect out-forest spanning V(t) using only arcs of t.

    Peels the tree from the bottom: take a deepest vertex u with parent v
    (all of v's children are then leaves); if v has another leaf child w,
    split off the arcs vu and vw, else u is v's only child and {v,u}
    becomes a two-vertex tree.  Ties break to the minimum index.  Vertices
    of the host outside V(t) stay singleton roots.
    """
    if t.order() % 2 == 1:
        raise OddOrder(f"tree has odd order {t.order()}")
    parent = dict(t.parent)
    root = t.root
    out: dict[int, int] = {}

    def depths() -> dict[int, int]:
        children: dict[int, list[int]] = {}
        for c, p in parent.items():
            children.setdefault(p, []).append(c)
        dep = {root: 0}
        stack = [root]
        while stack:
            v = stack.pop()
            for c in children.get(v, ()):
                dep[c] = dep[v] + 1
                stack.append(c)
        return dep

    while len(parent) + 1 > 2:
        dep = depths()
        deepest = max(dep.values())
        u = min(v for v in dep if dep[v] == deepest)
        v = parent[u]
        children_v = sorted(c for c, p in parent.items() if p == v)
        leaf_sibs = [w for w in children_v if w != u]
        if leaf_sibs:
            w = leaf_sibs[0]
            del parent[u]
            del parent[w]
            out[u] = v
            out[w] = v
        else:
            del parent[u]
            if v == root:
                # impossible for order > 2: u deepest forces depth 1
                raise AssertionError("root lost its only child early")
            del parent[v]
            out[u] = v
    if parent:
        # the remaining two-vertex tree is itself weak perfect
        ((c_, p_),) = parent.items()
        out[c_] = p_
    f = OutForest(t.n, out)
    return f


def weak_to_almost(d: Digraph, f: OutForest) -> OutForest:
    """Rewrite a weak perfect out-forest into an almost perfect one.

    While some arc (u,v) of d is a forward or cross arc of f: remove the
    arcs of the unique underlying-tree path from u to v and add (u,v).
    The arc count strictly decreases each time, so this terminates.
    Arcs are scanned in ascending (tail, head) order each iteration.
    """
    report = verify(d, f, ForestKind.WEAK_PERFECT)
    if not report.passed:
        raise NotWeakPerfect(report.to_json())
    for _ in range(d.n + 1):
        swap = None
        for arc in d.sorted_arcs():
            if classify_arc(d, f, arc) in (ArcClass.FORWARD, ArcClass.CROSS):
                swap = arc
                break
        if swap is None:
            return f
        u, v = swap
        up_u = _chain_to_root(f, u)
        up_v = _chain_to_root(f, v)
        in_u = set(up_u)
        lca = next(x for x in up_v if x in in_u)
        parent = dict(f.parent)
        for x in up_u[: up_u.index(lca)]:
            del parent[x]
        for x in up_v[: up_v.index(lca)]:
            del parent[x]
        parent[v] = u
        f = OutForest(f.n, parent)
    # unreachable: each swap removes at least one arc and a weak perfect
    # out-forest has at least n/2 of them
    raise AssertionError("swap loop exceeded the n-iteration bound")


def _chain_to_root(f: OutForest, v: int) -> list[int]:
    chain = [v]
    while v in f.parent:
        v = f.parent[v]
        chain.append(v)
    return chain


def construct_for_single_initial(d: Digraph) -> OutForest:
    """Almost perfect out-forest of an even digraph with a single initial
    strong component: spanning out-tree -> even-tree split -> arc swaps."""
    cls = classify(d)
    if cls not in (
        ConnectivityClass.STRONGLY_CONNECTED_EVEN,
        ConnectivityClass.SINGLE_INITIAL_EVEN,
    ):
        raise WrongClass(f"need a single initial component and even order, got {cls.value}")
    root = find_universal_root(d)
    assert root is not None
    tree = spanning_out_tree(d, root)
    return weak_to_almost(d, even_tree_to_weak(tree))


def perfect_forest_undirected(g: UGraph) -> set[Edge] | None:
    """Perfect forest of a connected undirected graph of even order, via
    bidirection; None for odd order or disconnected input."""
    if g.n == 0:
        return set()
    if g.n % 2 == 1 or not g.is_connected():
        return None
    f = construct_for_single_initial(bidirect(g))
    return extract_perfect_forest(g, f)


# ---------------------------------------------------------------------------
# gadget sidecar parsing (CLI round trip)


def parse_gadget_sidecar(text: str) -> GadgetCorrespondence:
    n = 0
    block_size = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "block":
            if len(parts) != 5:
                raise MalformedLine("expected 'block u start len y'", lineno)
            n += 1
            block_size = int(parts[3])
        elif parts[0] != "pair":
            raise MalformedLine("expected 'block' or 'pair' line", lineno)
    if block_size is None or n == 0:
        raise MalformedLine("no block lines", 1)
    return GadgetCorrespondence(n, (block_size + 1) // 2)
