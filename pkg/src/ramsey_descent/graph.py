"""Minimal simple undirected graph used by the solver and the oracles."""
from __future__ import annotations

from .errors import FormatError


class Graph:
    def __init__(self, vertices=(), edges=()):
        self.adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            self.add_edge(u, v)

    def add_vertex(self, v):
        self.adj.setdefault(v, set())

    def add_edge(self, u, v):
        if u == v:
            raise ValueError(f"self-loop at {u}")
        self.adj.setdefault(u, set()).add(v)
        self.adj.setdefault(v, set()).add(u)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in self.adj for v in self.adj[u] if u < v)

    def has_edge(self, u, v) -> bool:
        return v in self.adj.get(u, ())

    def degree(self, v) -> int:
        return len(self.adj[v])

    def number_of_edges(self) -> int:
        return sum(len(nb) for nb in self.adj.values()) // 2

    def induced(self, vertices) -> "Graph":
        keep = set(vertices)
        g = Graph(sorted(keep))
        for u in keep:
            g.adj[u] = self.adj[u] & keep
        return g

    def __len__(self):
        return len(self.adj)

    def __repr__(self):
        return f"Graph(n={len(self)}, m={self.number_of_edges()})"

    @classmethod
    def cycle(cls, n) -> "Graph":
        return cls(range(n), [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n) -> "Graph":
        return cls(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def dumps_graph(g: Graph) -> str:
    """Edge-list text: ``graph <n> <m>`` then one ``u v`` line per edge.
    Vertices must be labelled ``0..n-1``."""
    if g.vertices != list(range(len(g))):
        raise ValueError("graph vertices must be 0..n-1 to serialize")
    edges = g.edges()
    lines = [f"graph {len(g)} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "graph":
        raise FormatError(f"bad graph header: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError(f"bad graph header: {lines[0]!r}") from exc
    if n < 0 or m < 0 or len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    g = Graph(range(n))
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"bad edge: {ln!r}")
        g.add_edge(u, v)
    return g
