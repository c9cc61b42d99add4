"""Colour-distance layers ``N_c^i(v)`` and odd-cycle extraction from them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bits import iter_bits, lowest, mask_of, to_set
from .colouring import EdgeColouring
from .errors import FormatError


@dataclass(frozen=True)
class BfsLayering:
    """Layers of the colour-``c`` BFS from ``root``.

    ``masks[i]`` is the bitmask of vertices at colour-``c`` distance exactly
    ``i``. ``unreached`` holds every vertex of the host (or of ``within``) not
    in a computed layer: disconnected ones and those beyond the depth cap.
    """

    root: int
    colour: int
    masks: tuple[int, ...]
    parent: dict
    unreached_mask: int

    @property
    def layers(self) -> list[frozenset[int]]:
        return [to_set(m) for m in self.masks]

    @property
    def unreached(self) -> frozenset[int]:
        return to_set(self.unreached_mask)

    @property
    def depth(self) -> int:
        return len(self.masks) - 1

    def layer(self, i: int) -> int:
        """Mask of layer ``i``; empty beyond the computed depth."""
        return self.masks[i] if 0 <= i < len(self.masks) else 0

    def upto(self, i: int) -> int:
        m = 0
        for layer in self.masks[: i + 1]:
            m |= layer
        return m

    def path_to_root(self, u: int) -> list[int]:
        path = [u]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path


class WithinLayerEdge(NamedTuple):
    layer: int
    edge: tuple[int, int]


@dataclass(frozen=True)
class OddCycleCertificate:
    colour: int
    cycle: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle)

    def to_line(self) -> str:
        return " ".join(map(str, ("cycle", self.colour, self.length, *self.cycle)))

    @classmethod
    def from_line(cls, line: str) -> "OddCycleCertificate":
        parts = line.split()
        if len(parts) < 3 or parts[0] != "cycle":
            raise FormatError(f"bad certificate line: {line!r}")
        try:
            c, length, *verts = map(int, parts[1:])
        except ValueError as exc:
            raise FormatError(f"bad certificate line: {line!r}") from exc
        if len(verts) != length:
            raise FormatError(f"certificate declares {length} vertices, lists {len(verts)}")
        return cls(c, tuple(verts))


@dataclass(frozen=True)
class ParityResult:
    even: frozenset[int]
    odd: frozenset[int]
    witness: WithinLayerEdge | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None


def bfs_layers(ec: EdgeColouring, c: int, v: int, depth_cap: int, within=None) -> BfsLayering:
    """BFS in the colour-``c`` graph, optionally restricted to ``within``
    (an int mask or an iterable of vertices). Each reached vertex gets the
    smallest-index parent in the previous layer."""
    if not 0 <= v < ec.n:
        raise IndexError(f"vertex {v} out of range for n={ec.n}")
    if depth_cap < 0:
        raise ValueError("depth_cap must be >= 0")
    if within is None:
        alive = (1 << ec.n) - 1
    elif isinstance(within, int):
        alive = within
    else:
        alive = mask_of(within)
    if not alive >> v & 1:
        raise ValueError(f"root {v} not inside the restriction")
    nb = ec.index.get(c) or [0] * ec.n

    frontier = seen = 1 << v
    masks = [frontier]
    parent = {}
    while len(masks) <= depth_cap:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= nb[u]
        nxt &= alive & ~seen
        if not nxt:
            break
        for u in iter_bits(nxt):
            parent[u] = lowest(nb[u] & frontier)
        seen |= nxt
        masks.append(nxt)
        frontier = nxt
    return BfsLayering(v, c, tuple(masks), parent, alive & ~seen)


def find_within_layer_edge(ec: EdgeColouring, layering: BfsLayering, max_layer: int):
    """Smallest ``j`` in ``[1, max_layer]`` whose layer spans a colour-``c``
    edge, with the lexicographically least such edge; ``None`` if none."""
    nb = ec.index.get(layering.colour)
    if nb is None:
        return None
    for j in range(1, min(max_layer, layering.depth) + 1):
        m = layering.masks[j]
        for x in iter_bits(m):
            ys = nb[x] & m & ~((2 << x) - 1)
            if ys:
                return WithinLayerEdge(j, (x, lowest(ys)))
    return None


def extract_odd_cycle(ec: EdgeColouring, layering: BfsLayering, j: int, edge) -> OddCycleCertificate:
    """Close the within-layer edge ``{x, y}`` through the BFS tree.

    Both tree paths are cut at their deepest common vertex ``z`` (layer
    ``d``), giving the odd cycle ``x .. z .. y`` of length ``2(j - d) + 1``.
    """
    x, y = edge
    c = layering.colour
    if j < 1 or not (layering.layer(j) >> x & 1 and layering.layer(j) >> y & 1):
        raise ValueError(f"{x}, {y} are not both in layer {j}")
    if x == y or ec.colour_of(x, y) != c:
        raise ValueError(f"{{{x},{y}}} is not an edge of colour {c}")
    px = layering.path_to_root(x)
    py = layering.path_to_root(y)
    # both paths have j + 1 vertices, index t sits in layer j - t
    t = 0
    while px[t] != py[t]:
        t += 1
    cycle = px[: t + 1] + py[:t][::-1]
    return OddCycleCertificate(c, tuple(cycle))


def parity_partition(ec: EdgeColouring, layering: BfsLayering, max_layer: int) -> ParityResult:
    """Split ``N_c^{<=max_layer}(v)`` by layer parity.

    Colour-``c`` edges never skip a layer, so the split is proper exactly when
    no layer up to ``max_layer`` spans an edge."""
    witness = find_within_layer_edge(ec, layering, max_layer)
    if witness is not None:
        return ParityResult(frozenset(), frozenset(), witness)
    top = min(max_layer, layering.depth)
    nb = ec.index.get(layering.colour) or [0] * ec.n
    reached = layering.upto(top)
    even = odd = 0
    for j in range(top + 1):
        m = layering.masks[j]
        adjacent = layering.layer(j - 1) | layering.layer(j + 1)
        for x in iter_bits(m):
            assert not (nb[x] & reached & ~adjacent), "BFS layer skipped"
        if j % 2:
            odd |= m
        else:
            even |= m
    return ParityResult(to_set(even), to_set(odd))
