"""Exponential-time ground truth: forest search by parent-assignment
enumeration, exact matching by branch-and-bound, digraph/graph enumeration
and seeded sampling, and a brute-force 3DM solver.

These exist to be obviously correct on small instances, not fast.
"""

from __future__ import annotations

import itertools
import random
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import BudgetExceeded
from .forests import ForestKind, OutForest, verify
from .graphs import ConnectivityClass, Digraph, UGraph, classify
from .hardness import ThreeDMInstance, Triple
from .matching import Matching


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 10
    max_states: int = 10**8
    time_limit: float | None = None  # seconds

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_states <= 0:
            raise ValueError("budget values must be positive")


def oracle_forest(
    d: Digraph, kind: ForestKind, budget: OracleBudget = OracleBudget()
) -> OutForest | None:
    """First spanning out-forest of the requested kind in enumeration
    order, or None.

    Search space: each vertex picks root-or-parent (root first, then
    in-neighbors ascending); assignments closing a directed cycle are
    pruned.  For the Perfect kind an extra sound prune rejects partial
    assignments in which two vertices share a tree but are joined by an
    arc that can no longer be a tree arc (tree membership never splits,
    so such a violation is permanent).
    """
    n = d.n
    if n > budget.max_vertices:
        raise BudgetExceeded(
            f"n={n} exceeds budget max_vertices={budget.max_vertices}"
        )
    deadline = (
        time.monotonic() + budget.time_limit if budget.time_limit else None
    )
    in_nbrs = d.in_neighbors()
    candidates = [[None] + in_nbrs[v] for v in range(n)]
    arcs = d.sorted_arcs()
    parent: list[int | None] = [None] * n
    assigned = [False] * n
    states = 0
    induced_prune = kind is ForestKind.PERFECT

    def creates_cycle(v: int, p: int) -> bool:
        x: int | None = p
        while x is not None:
            if x == v:
                return True
            x = parent[x] if assigned[x] else None
        return False

    def comp_labels() -> list[int]:
        lab = list(range(n))

        def find(x: int) -> int:
            while lab[x] != x:
                lab[x] = lab[lab[x]]
                x = lab[x]
            return x

        for v in range(n):
            if assigned[v] and parent[v] is not None:
                lab[find(v)] = find(parent[v])
        return [find(v) for v in lab]

    def induced_violation() -> bool:
        lab = comp_labels()
        for (a, b) in arcs:
            if lab[a] == lab[b] and assigned[b] and parent[b] != a:
                return True
        return False

    def search(v: int) -> OutForest | None:
        nonlocal states
        if v == n:
            f = OutForest(n, {i: p for i, p in enumerate(parent) if p is not None})
            if verify(d, f, kind).passed:
                return f
            return None
        for cand in candidates[v]:
            states += 1
            if states > budget.max_states:
                raise BudgetExceeded(f"enumeration exceeded {budget.max_states} states")
            if deadline is not None and states % 4096 == 0:
                if time.monotonic() > deadline:
                    raise BudgetExceeded("enumeration exceeded the time limit")
            if cand is not None and creates_cycle(v, cand):
                continue
            parent[v] = cand
            assigned[v] = True
            if not (induced_prune and induced_violation()):
                found = search(v + 1)
                if found is not None:
                    return found
            assigned[v] = False
            parent[v] = None
        return None

    return search(0)


def oracle_matching(g: UGraph, budget: OracleBudget = OracleBudget()) -> Matching:
    """Exact maximum matching by branch-and-bound over the lowest
    uncovered vertex: leave it exposed, or match it to each free
    neighbor."""
    n = g.n
    if n > budget.max_vertices:
        raise BudgetExceeded(
            f"n={n} exceeds budget max_vertices={budget.max_vertices}"
        )
    adj = g.adjacency()
    states = 0
    memo: dict[int, tuple[int, frozenset]] = {}

    def best(mask: int) -> tuple[int, frozenset]:
        nonlocal states
        states += 1
        if states > budget.max_states:
            raise BudgetExceeded(f"enumeration exceeded {budget.max_states} states")
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = 0
        while v < n and (mask >> v) & 1:
            v += 1
        if v >= n:
            result = (0, frozenset())
        else:
            # leave v exposed
            result = best(mask | (1 << v))
            for w in adj[v]:
                if not (mask >> w) & 1:
                    size, edges = best(mask | (1 << v) | (1 << w))
                    if size + 1 > result[0]:
                        result = (size + 1, edges | {(v, w)})
        memo[mask] = result
        return result

    _, edges = best(0)
    return Matching(frozenset(edges))


# ---------------------------------------------------------------------------
# enumeration / sampling


def _class_ok(d: Digraph, classes) -> bool:
    return classes is None or classify(d) in classes


def enumerate_digraphs(
    n: int, classes: Iterable[ConnectivityClass] | None = None
) -> Iterator[Digraph]:
    """All 2^(n(n-1)) digraphs on n vertices, in arc-subset order,
    optionally filtered by connectivity class.  Exhaustive use is meant
    for n <= 4."""
    classes = frozenset(classes) if classes is not None else None
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(slots)):
        arcs = frozenset(a for i, a in enumerate(slots) if (mask >> i) & 1)
        d = Digraph(n, arcs)
        if _class_ok(d, classes):
            yield d


def sample_digraphs(
    n: int,
    count: int,
    seed: int,
    classes: Iterable[ConnectivityClass] | None = None,
    arc_probability: float = 0.5,
) -> Iterator[Digraph]:
    """Seeded rejection sampler; the stream is identical across runs for
    the same seed."""
    classes = frozenset(classes) if classes is not None else None
    rng = random.Random(seed)
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    produced = 0
    while produced < count:
        arcs = frozenset(a for a in slots if rng.random() < arc_probability)
        d = Digraph(n, arcs)
        if _class_ok(d, classes):
            produced += 1
            yield d


def enumerate_ugraphs(n: int, connected: bool | None = None) -> Iterator[UGraph]:
    """All 2^C(n,2) undirected graphs on n vertices, edge-subset order."""
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(slots)):
        edges = frozenset(e for i, e in enumerate(slots) if (mask >> i) & 1)
        g = UGraph(n, edges)
        if connected is None or g.is_connected() == connected:
            yield g


def sample_ugraphs(
    n: int,
    count: int,
    seed: int,
    connected: bool | None = None,
    edge_probability: float = 0.5,
) -> Iterator[UGraph]:
    rng = random.Random(seed)
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    produced = 0
    while produced < count:
        edges = frozenset(e for e in slots if rng.random() < edge_probability)
        g = UGraph(n, edges)
        if connected is None or g.is_connected() == connected:
            produced += 1
            yield g


# ---------------------------------------------------------------------------
# 3DM ground truth


def brute_force_3dm(inst: ThreeDMInstance) -> set[Triple] | None:
    """First perfect 3-dimensional matching in lexicographic triple-subset
    order, or None."""
    triples = sorted(inst.triples)
    for combo in itertools.combinations(triples, inst.k):
        cover1 = {t[0] for t in combo}
        cover2 = {t[1] for t in combo}
        cover3 = {t[2] for t in combo}
        if (
            len(cover1) == inst.k
            and len(cover2) == inst.k
            and len(cover3) == inst.k
        ):
            return set(combo)
    return None
