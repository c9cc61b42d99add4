"""Exact vertex colouring of small graphs.

DSATUR branch-and-bound on bitmasks: a greedy clique gives the lower bound,
a greedy DSATUR pass the upper bound, and exact search fills the gap. Branch
order is fixed (saturation, then degree, then vertex label), so results are
reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bits import iter_bits, popcount
from .config import LIMITS
from .errors import SolverLimitError
from .graph import Graph


@dataclass(frozen=True)
class ProperColouring:
    classes: tuple[frozenset, ...]

    @property
    def width(self) -> int:
        return sum(1 for cls in self.classes if cls)

    def is_proper_for(self, g: Graph) -> bool:
        seen = set()
        for cls in self.classes:
            if seen & cls:
                return False
            seen |= cls
            if any(g.has_edge(u, v) for u in cls for v in cls if u < v):
                return False
        return seen == set(g.adj)


class _Problem:
    def __init__(self, g: Graph):
        n = len(g)
        if n > LIMITS.solver_limit:
            raise SolverLimitError(f"{n} vertices exceeds solver limit {LIMITS.solver_limit}")
        self.labels = sorted(g.adj, key=lambda v: (-g.degree(v), v))
        pos = {v: i for i, v in enumerate(self.labels)}
        self.n = n
        self.adj = [0] * n
        for v, i in pos.items():
            for w in g.adj[v]:
                self.adj[i] |= 1 << pos[w]
        self.deg = [popcount(a) for a in self.adj]

    def greedy_clique(self) -> int:
        best = 0
        for start in range(self.n):
            cand = self.adj[start]
            size = 1
            while cand:
                # highest-degree candidate first (lowest index in degree order)
                u = (cand & -cand).bit_length() - 1
                size += 1
                cand &= self.adj[u]
            best = max(best, size)
        return best

    def _pick(self, colour, forb):
        best, key = -1, None
        for v in range(self.n):
            if colour[v] < 0:
                k = (popcount(forb[v]), self.deg[v], -v)
                if key is None or k > key:
                    best, key = v, k
        return best

    def dsatur_greedy(self) -> list[int]:
        colour = [-1] * self.n
        forb = [0] * self.n
        for _ in range(self.n):
            v = self._pick(colour, forb)
            free = ~forb[v]
            c = (free & -free).bit_length() - 1
            colour[v] = c
            for w in iter_bits(self.adj[v]):
                forb[w] |= 1 << c
        return colour

    def solve(self, k: int) -> list[int] | None:
        """First feasible ``k``-colouring in branch order, or ``None``."""
        if self.n == 0:
            return []
        if k < 1:
            return None
        colour = [-1] * self.n
        forb = [0] * self.n
        full = (1 << k) - 1

        def rec(done, used):
            if done == self.n:
                return True
            v = self._pick(colour, forb)
            allowed = ~forb[v] & full & ((2 << used) - 1 if used < k else full)
            for c in iter_bits(allowed):
                colour[v] = c
                changed = []
                for w in iter_bits(self.adj[v]):
                    if colour[w] < 0 and not forb[w] >> c & 1:
                        forb[w] |= 1 << c
                        changed.append(w)
                # forward check: a neighbour left with no colour kills the branch
                if all(forb[w] & full != full for w in changed):
                    if rec(done + 1, max(used, c + 1)):
                        return True
                for w in changed:
                    forb[w] &= ~(1 << c)
                colour[v] = -1
            return False

        return colour if rec(0, 0) else None

    def to_classes(self, colour, k) -> ProperColouring:
        classes = [set() for _ in range(k)]
        for i, c in enumerate(colour):
            classes[c].add(self.labels[i])
        return ProperColouring(tuple(frozenset(c) for c in classes if c))


def chromatic_number(g: Graph, upper_cap: int) -> int | None:
    """Exact chromatic number, or ``None`` when it exceeds ``upper_cap``."""
    if upper_cap < 1:
        raise ValueError("upper_cap must be >= 1")
    if len(g) == 0:
        return 0
    prob = _Problem(g)
    if not any(prob.adj):
        return 1
    lower = prob.greedy_clique()
    if lower > upper_cap:
        return None
    upper = max(prob.dsatur_greedy()) + 1
    for k in range(lower, min(upper - 1, upper_cap) + 1):
        if prob.solve(k) is not None:
            return k
    return upper if upper <= upper_cap else None


def proper_colouring(g: Graph, chi: int) -> ProperColouring | None:
    """A proper colouring with at most ``chi`` classes, or ``None`` if none exists."""
    prob = _Problem(g)
    if prob.n and prob.greedy_clique() > chi:
        return None
    colour = prob.solve(chi)
    if colour is None:
        return None
    return prob.to_classes(colour, max(chi, 1))


def max_weight_class(pc: ProperColouring, weight) -> frozenset:
    """Heaviest class under exact comparison; the first class wins ties."""
    best, best_w = None, None
    for cls in pc.classes:
        vals = [weight[v] for v in sorted(cls)]
        w = sum(vals[1:], vals[0])
        if best is None or w > best_w:
            best, best_w = cls, w
    return best
