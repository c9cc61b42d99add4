"""Brute-force oracles, written independently of the descent engine.

Only colour lookups from the colouring core are shared; BFS, path
reconstruction and cycle search are reimplemented here on plain sets.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .bfs import OddCycleCertificate
from .chromatic import chromatic_number
from .colouring import EdgeColouring
from .config import LIMITS
from .errors import BudgetExceeded
from .graph import Graph


def verify_certificate(ec: EdgeColouring, cert: OddCycleCertificate) -> bool:
    cyc = cert.cycle
    L = len(cyc)
    if L < 3 or L % 2 == 0 or len(set(cyc)) != L:
        return False
    if any(not (0 <= v < ec.n) for v in cyc):
        return False
    return all(ec.colour_of(cyc[t], cyc[(t + 1) % L]) == cert.colour for t in range(L))


def _shortest_odd_through_root(adj, root, max_half):
    """Shortest odd closed cycle found from ``root``'s BFS tree, or None."""
    parent = {root: None}
    depth = {root: 0}
    layer = [root]
    for j in range(1, max_half + 1):
        nxt = []
        for u in layer:
            for w in sorted(adj[u]):
                if w not in depth:
                    depth[w] = j
                    parent[w] = u
                    nxt.append(w)
        if not nxt:
            return None
        members = set(nxt)
        for x in sorted(nxt):
            for y in sorted(adj[x]):
                if y > x and y in members:
                    a, b = [x], [y]
                    while a[-1] != b[-1]:
                        a.append(parent[a[-1]])
                        b.append(parent[b[-1]])
                    return a + b[-2::-1]
        layer = nxt
    return None


def find_mono_odd_cycle(ec: EdgeColouring, max_len: int, max_vertices: int | None = None):
    """A shortest monochromatic odd cycle of length at most ``max_len``, or None.

    Odd girth per colour: the BFS from a vertex on a shortest odd cycle
    closes it at the smallest possible layer, so minimising over all roots is
    exact.
    """
    limit = LIMITS.oracle_max_vertices if max_vertices is None else max_vertices
    if ec.n > limit:
        raise BudgetExceeded(f"n={ec.n} exceeds oracle limit {limit}")
    max_half = (max_len - 1) // 2
    best = None
    if max_half < 1:
        return None
    for c in sorted(ec.palette):
        adj = {u: set() for u in range(ec.n)}
        for u, v, col in ec.pairs():
            if col == c:
                adj[u].add(v)
                adj[v].add(u)
        for root in range(ec.n):
            cyc = _shortest_odd_through_root(adj, root, max_half)
            if cyc is not None and (best is None or len(cyc) < len(best.cycle)):
                best = OddCycleCertificate(c, tuple(cyc))
                max_half = (len(cyc) - 1) // 2
                if len(cyc) == 3:
                    return best
    return best


def has_cycle_of_length(g: Graph, L: int, budget: int | None = None):
    """A cycle on exactly ``L`` vertices (as a vertex list), or None."""
    if L < 3:
        return None
    left = [LIMITS.search_budget if budget is None else budget]
    order = g.vertices
    for s in order:
        pool = {u for u in order if u >= s}
        # distances to s inside pool
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if w in pool and w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        path = [s]
        on_path = {s}

        def dfs(u):
            left[0] -= 1
            if left[0] < 0:
                raise BudgetExceeded("cycle search budget exhausted")
            if len(path) == L:
                return s in g.adj[u]
            for w in sorted(g.adj[u]):
                if w in on_path or w not in dist or dist[w] > L - len(path):
                    continue
                path.append(w)
                on_path.add(w)
                if dfs(w):
                    return True
                path.pop()
                on_path.discard(w)
            return False

        if dfs(s):
            return list(path)
    return None


def distance_layers(g: Graph, v, depth: int) -> list[set]:
    layers = [{v}]
    seen = {v}
    while len(layers) <= depth:
        nxt = {w for u in layers[-1] for w in g.adj[u] if w not in seen}
        if not nxt:
            break
        seen |= nxt
        layers.append(nxt)
    return layers


@dataclass(frozen=True)
class EfrsReport:
    ok: bool
    counterexample: tuple | None = None  # (v, i, chromatic number or None if > cap)

    def __bool__(self):
        return self.ok


def efrs_check(g: Graph, l: int, budget: int | None = None) -> EfrsReport:
    """Check ``chi(G[N^i(v)]) <= 2l - 1`` for every ``v`` and ``i <= l`` on a
    ``C_{2l+1}``-free graph."""
    if l < 1:
        raise ValueError("need l >= 1")
    cyc = has_cycle_of_length(g, 2 * l + 1, budget)
    if cyc is not None:
        raise ValueError(f"graph contains a C_{2 * l + 1}: {cyc}")
    cap = 2 * l - 1
    for v in g.vertices:
        for i, layer in enumerate(distance_layers(g, v, l)):
            if i == 0:
                continue
            chi = chromatic_number(g.induced(layer), cap)
            if chi is None:
                return EfrsReport(False, (v, i, chromatic_number(g.induced(layer), len(layer))))
    return EfrsReport(True)


def enumerate_colourings(n: int, k: int):
    """Every colouring of ``K_n`` with colours ``1..k`` (``k**(n(n-1)/2)`` of them)."""
    pairs = [(v, u) for u in range(1, n) for v in range(u)]
    for combo in itertools.product(range(1, k + 1), repeat=len(pairs)):
        ec = EdgeColouring(n, 1, declared_k=k)
        for (v, u), c in zip(pairs, combo):
            ec.set_colour(u, v, c)
        yield ec
