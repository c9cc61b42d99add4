"""Edge-colourings of complete graphs.

Vertices are ``0..n-1``. Colour ids are non-negative integers in memory and
``1..k`` in files. The palette is always the set of colours actually used.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from pathlib import Path

from .bits import iter_bits, mask_of
from .config import LIMITS
from .errors import FormatError
from .graph import Graph


class EdgeColouring:
    """Complete graph ``K_n`` with one colour per unordered pair.

    Storage is a lower-triangular matrix ``rows[u][v]`` for ``v < u``. A
    per-colour neighbour index (one bitmask per vertex) is built lazily and
    dropped on every mutation.
    """

    def __init__(self, n: int, default_colour: int = 1, declared_k: int | None = None):
        if n < 1:
            raise ValueError("a colouring needs at least one vertex")
        if n > LIMITS.vertex_limit:
            raise ValueError(f"n={n} exceeds vertex limit {LIMITS.vertex_limit}")
        self.n = n
        self.declared_k = declared_k
        self._rows = [[default_colour] * u for u in range(n)]
        self._index: dict[int, list[int]] | None = None

    # -- access -----------------------------------------------------------

    def _check(self, u, v):
        if u == v:
            raise ValueError(f"self-pair {{{u},{v}}} has no colour")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"vertex out of range for n={self.n}: {u}, {v}")

    def colour_of(self, u: int, v: int) -> int:
        self._check(u, v)
        return self._rows[u][v] if u > v else self._rows[v][u]

    def set_colour(self, u: int, v: int, c: int) -> "EdgeColouring":
        self._check(u, v)
        if c < 0:
            raise ValueError(f"colour ids are non-negative, got {c}")
        if u > v:
            self._rows[u][v] = c
        else:
            self._rows[v][u] = c
        self._index = None
        return self

    def pairs(self):
        for u in range(1, self.n):
            for v in range(u):
                yield v, u, self._rows[u][v]

    @property
    def index(self) -> dict[int, list[int]]:
        """colour -> list of neighbour bitmasks, one per vertex."""
        if self._index is None:
            idx: dict[int, list[int]] = {}
            for u in range(1, self.n):
                row = self._rows[u]
                for v in range(u):
                    c = row[v]
                    masks = idx.get(c)
                    if masks is None:
                        masks = idx[c] = [0] * self.n
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
            self._index = idx
        return self._index

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(self.index)

    def neighbour_mask(self, c: int, v: int) -> int:
        masks = self.index.get(c)
        return masks[v] if masks is not None else 0

    def neighbours(self, c: int, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.neighbour_mask(c, v)))

    def incident_colours(self, v: int, alive: int | None = None) -> list[int]:
        """Sorted colours on edges from ``v`` into ``alive`` (default: all)."""
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        out = []
        for c, masks in self.index.items():
            m = masks[v] if alive is None else masks[v] & alive
            if m:
                out.append(c)
        out.sort()
        return out

    def colour_degree(self, v: int, alive: int | None = None) -> int:
        return len(self.incident_colours(v, alive))

    def locality(self, alive: int | None = None) -> int:
        verts = range(self.n) if alive is None else iter_bits(alive)
        return max((self.colour_degree(v, alive) for v in verts), default=0)

    # -- derived objects --------------------------------------------------

    def monochromatic_subgraph(self, c: int, vertices=None) -> Graph:
        vs = range(self.n) if vertices is None else sorted(vertices)
        keep = mask_of(vs)
        g = Graph(vs)
        masks = self.index.get(c)
        if masks is not None:
            for u in vs:
                for w in iter_bits(masks[u] & keep):
                    if u < w:
                        g.add_edge(u, w)
        return g

    def copy(self) -> "EdgeColouring":
        other = EdgeColouring.__new__(EdgeColouring)
        other.n = self.n
        other.declared_k = self.declared_k
        other._rows = [row[:] for row in self._rows]
        other._index = None
        return other

    def digest(self) -> str:
        """SHA-256 of the canonical lower-triangle content."""
        h = hashlib.sha256(f"{self.n}".encode())
        for row in self._rows[1:]:
            h.update(b"\n" + " ".join(map(str, row)).encode())
        return h.hexdigest()

    def __eq__(self, other):
        if not isinstance(other, EdgeColouring):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __repr__(self):
        return f"EdgeColouring(n={self.n}, palette={sorted(self.palette)})"


@dataclass(frozen=True)
class ColourDegreeProfile:
    degrees: tuple[int, ...]
    locality: int


# -- module-level operations ------------------------------------------------

def new_complete(n: int, default_colour: int = 1) -> EdgeColouring:
    return EdgeColouring(n, default_colour)


def set_colour(ec: EdgeColouring, u: int, v: int, c: int) -> EdgeColouring:
    return ec.set_colour(u, v, c)


def colour_degree(ec: EdgeColouring, v: int) -> int:
    return ec.colour_degree(v)


def locality(ec: EdgeColouring) -> int:
    return ec.locality()


def colour_degree_profile(ec: EdgeColouring) -> ColourDegreeProfile:
    degrees = tuple(ec.colour_degree(v) for v in range(ec.n))
    return ColourDegreeProfile(degrees, max(degrees))


def monochromatic_subgraph(ec: EdgeColouring, c: int, vertices=None) -> Graph:
    return ec.monochromatic_subgraph(c, vertices)


def generate_doubling(l: int, k: int) -> EdgeColouring:
    """Lower-bound colouring on ``l * 2**k`` vertices with no monochromatic
    ``C_{2l+1}``.

    Colour 1 fills disjoint blocks of size ``2l``; two vertices in blocks
    ``a != b`` get colour ``1 + (a ^ b).bit_length()``, i.e. the colour of the
    doubling step that first joined their halves.
    """
    if l < 1 or k < 1:
        raise ValueError("need l >= 1 and k >= 1")
    n = l << k
    if n > LIMITS.vertex_limit:
        raise ValueError(f"l*2^k = {n} exceeds vertex limit {LIMITS.vertex_limit}")
    ec = EdgeColouring(n, 1, declared_k=k)
    block = 2 * l
    for u in range(1, n):
        row = ec._rows[u]
        bu = u // block
        for v in range(u):
            x = bu ^ (v // block)
            row[v] = 1 + x.bit_length()
    return ec


def generate_random(n: int, k: int, seed: int) -> EdgeColouring:
    """Each edge uniform on ``1..k``, drawn in row-major lower-triangle order."""
    if k < 1:
        raise ValueError("need k >= 1")
    rng = random.Random(seed)
    ec = EdgeColouring(n, 1, declared_k=k)
    for u in range(1, n):
        ec._rows[u] = [rng.randint(1, k) for _ in range(u)]
    return ec


# -- text format --------------------------------------------------------------

def dumps(ec: EdgeColouring) -> str:
    used = ec.palette
    if any(c < 1 for c in used):
        raise ValueError("file format needs colour ids >= 1")
    k = max([ec.declared_k or 0, *used], default=0)
    lines = [f"kcol {ec.n} {k}"]
    lines += [" ".join(map(str, ec._rows[u])) for u in range(1, ec.n)]
    return "\n".join(lines) + "\n"


def loads(text: str) -> EdgeColouring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty colouring file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "kcol":
        raise FormatError(f"bad header: {lines[0]!r}")
    try:
        n, k = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError(f"bad header: {lines[0]!r}") from exc
    if n < 1 or k < 0:
        raise FormatError(f"bad header values n={n} k={k}")
    if n > LIMITS.vertex_limit:
        raise FormatError(f"n={n} exceeds vertex limit {LIMITS.vertex_limit}")
    if len(lines) != n:
        raise FormatError(f"expected {n - 1} matrix rows, found {len(lines) - 1}")
    ec = EdgeColouring(n, 1, declared_k=k)
    for u in range(1, n):
        parts = lines[u].split()
        if len(parts) == u + 1:
            raise FormatError(f"row {u} has a diagonal (self-loop) entry")
        if len(parts) != u:
            raise FormatError(f"row {u} has {len(parts)} entries, expected {u}")
        try:
            row = [int(x) for x in parts]
        except ValueError as exc:
            raise FormatError(f"non-integer colour in row {u}") from exc
        for c in row:
            if not 1 <= c <= k:
                raise FormatError(f"colour {c} in row {u} outside [1, {k}]")
        ec._rows[u] = row
    return ec


def save(ec: EdgeColouring, path) -> None:
    Path(path).write_text(dumps(ec), newline="\n")


def load(path) -> EdgeColouring:
    return loads(Path(path).read_text())
