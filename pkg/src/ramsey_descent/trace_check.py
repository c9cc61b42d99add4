"""Independent re-validation of descent traces.

Replays a trace against the colouring using only direct colour lookups, BFS
layering and exact weights. None of the engine's own state is consulted.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bfs import bfs_layers
from .bits import to_set
from .colouring import EdgeColouring
from .descent import CHROMATIC_CAP, CHROMATIC_THRESHOLD, THEOREM1, THEOREM2, WITHIN_LAYER_EDGE, DescentTrace
from .weights import WeightContext, layer_threshold, vertex_weight


@dataclass(frozen=True)
class TraceCheck:
    ok: bool
    reason: str | None = None
    step: int | None = None

    def __bool__(self):
        return self.ok


def _degrees(ec: EdgeColouring, alive: set[int]) -> dict[int, int]:
    return {u: len({ec.colour_of(u, w) for w in alive if w != u}) for u in alive}


def _spans_colour(ec: EdgeColouring, vs, c) -> bool:
    vs = sorted(vs)
    return any(ec.colour_of(x, y) == c for a, x in enumerate(vs) for y in vs[a + 1:])


def verify_trace(trace: DescentTrace, ec: EdgeColouring) -> TraceCheck:
    def reject(reason, t=None):
        return TraceCheck(False, reason, t)

    if trace.n != ec.n:
        return reject(f"trace is for n={trace.n}, colouring has n={ec.n}")
    if trace.digest is not None and trace.digest != ec.digest():
        return reject("colouring digest does not match the trace")
    if trace.k != max(1, ec.locality()):
        return reject(f"trace k={trace.k} is not the locality of the colouring")
    if trace.mode == THEOREM2 and trace.chi != 2:
        return reject("theorem-2 traces use chi = 2")
    if trace.mode == THEOREM1 and trace.chi != 4 * trace.l - 2:
        return reject("theorem-1 traces use chi = 4l - 2")
    ctx = WeightContext(trace.k, trace.l, trace.chi)
    theta = layer_threshold(ctx)
    alpha = ctx.alpha
    alive = set(range(ec.n))
    deg = _degrees(ec, alive)

    def w(vs):
        total = ctx.zero()
        for u in vs:
            total = total + vertex_weight(ctx, deg[u])
        return total

    for t, st in enumerate(trace.steps):
        if len(alive) < 2:
            return reject("step on a graph with fewer than two vertices", t)
        if st.v not in alive:
            return reject(f"vertex {st.v} already deleted", t)
        if st.weight_before != w(alive):
            return reject("recorded weight_before differs from recomputation", t)
        nbrs = {u for u in alive if u != st.v and ec.colour_of(st.v, u) == st.c}
        if not nbrs:
            return reject(f"colour {st.c} not incident to {st.v}", t)
        if w(nbrs) * ctx.k < w(alive - {st.v}):
            return reject("colour-choice inequality fails", t)
        if not 1 <= st.i <= trace.l:
            return reject(f"layer index {st.i} outside [1, l]", t)
        lay = bfs_layers(ec, st.c, st.v, trace.l + 1, within=alive)
        S, T = to_set(lay.upto(st.i)), to_set(lay.layer(st.i + 1))
        if st.S != S or st.T != T:
            return reject("S or T is not the recomputed BFS layering", t)
        if w(T) > theta * w(S):
            return reject("layer inequality fails", t)
        if not st.S_prime or not st.S_prime <= S:
            return reject("S' is empty or not inside S", t)
        if _spans_colour(ec, st.S_prime, st.c):
            return reject(f"S' spans an edge of colour {st.c}", t)
        if w(st.S_prime) * trace.chi < w(S):
            return reject("w(S') < w(S)/chi", t)
        if alpha * w(st.S_prime) - w(S) - w(T) < 0:
            return reject("weight gain bound is negative", t)
        deleted = T | (S - st.S_prime)
        if not deleted:
            return reject("step deletes nothing", t)
        alive -= deleted
        deg = _degrees(ec, alive)
        after = w(alive)
        if st.weight_after != after:
            return reject("recorded weight_after differs from recomputation", t)
        if after < st.weight_before:
            return reject("total weight decreased", t)

    end = len(trace.steps)
    if trace.completed:
        if len(alive) > 1:
            return reject("completed trace leaves more than one vertex", end)
        if w(alive) > 1:
            return reject("final weight exceeds 1", end)
        if vertex_weight(ctx, ctx.k) * ec.n > 1:
            return reject("completed trace contradicts n <= chi^k k^(k/l)", end)
        return TraceCheck(True)

    viol = trace.outcome
    if len(alive) < 2 or viol.v not in alive:
        return reject("violation recorded at an invalid state", end)
    if not 1 <= viol.i <= trace.l or not 0 <= viol.j <= viol.i:
        return reject("violation layer indices out of range", end)
    lay = bfs_layers(ec, viol.c, viol.v, trace.l + 1, within=alive)
    if viol.kind == WITHIN_LAYER_EDGE:
        x, y = viol.witness
        layer = to_set(lay.layer(viol.j))
        if viol.j < 1 or x not in layer or y not in layer or ec.colour_of(x, y) != viol.c:
            return reject("within-layer witness is not a colour-c edge inside layer j", end)
    elif viol.kind == CHROMATIC_THRESHOLD:
        if set(viol.witness) != to_set(lay.layer(viol.j)) or not _spans_colour(ec, viol.witness, viol.c):
            return reject("chromatic-threshold witness is not a layer spanning colour c", end)
    elif viol.kind == CHROMATIC_CAP:
        if set(viol.witness) != to_set(lay.upto(viol.i)) or not _spans_colour(ec, viol.witness, viol.c):
            return reject("chromatic-cap witness is not N^{<=i}", end)
    else:
        return reject(f"unknown violation kind {viol.kind!r}", end)
    return TraceCheck(True)
