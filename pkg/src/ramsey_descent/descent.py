"""Weight-descent engine.

Repeatedly pick a vertex ``v``, a heavy colour ``c`` at ``v`` and a layer
index ``i`` where the colour-``c`` BFS stops growing fast; colour the
colour-``c`` graph on ``S = N_c^{<=i}(v)``, keep its heaviest class ``S'``
and delete ``N_c^{i+1}(v)`` together with ``S - S'``. Total weight never
decreases, so a run that empties the graph certifies
``n <= chi^k * k^(k/l)``. A run whose colouring step fails stops with a
``Violation``, which the extraction modes turn into a monochromatic odd cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bfs import BfsLayering, OddCycleCertificate, bfs_layers, extract_odd_cycle, parity_partition
from .bits import iter_bits, lowest, mask_of, popcount, to_set
from .bounds import RealBase
from .chromatic import ProperColouring, max_weight_class, proper_colouring
from .colouring import EdgeColouring
from .config import LIMITS
from .errors import BudgetExceeded, FormatError
from .weights import WeightContext, WeightValue, layer_threshold, parse_poly, vertex_weight

GENERIC, THEOREM1, THEOREM2 = "generic", "t1", "t2"
MODES = (GENERIC, THEOREM1, THEOREM2)

WITHIN_LAYER_EDGE = "within-layer-edge"
CHROMATIC_THRESHOLD = "chromatic-threshold"
CHROMATIC_CAP = "chromatic-cap"


@dataclass(frozen=True)
class DescentStep:
    v: int
    c: int
    i: int
    S: frozenset
    T: frozenset
    S_prime: frozenset
    weight_before: WeightValue
    weight_after: WeightValue

    @property
    def deleted(self) -> frozenset:
        return self.T | (self.S - self.S_prime)


@dataclass(frozen=True)
class Violation:
    """Why a run stopped.

    ``within-layer-edge``: layer ``j`` spans the colour-``c`` edge ``witness``.
    ``chromatic-threshold``: layer ``j`` (vertex tuple ``witness``) needs at
    least ``2l`` colours. ``chromatic-cap``: ``S`` (``witness``) needs more
    than ``chi`` colours; generic mode only.
    """

    kind: str
    v: int
    c: int
    i: int
    j: int
    witness: tuple
    layering: BfsLayering | None = field(default=None, compare=False, repr=False)


@dataclass
class DescentTrace:
    n: int
    k: int
    l: int
    chi: int
    mode: str
    digest: str | None
    steps: list[DescentStep]
    outcome: str | Violation

    @property
    def ctx(self) -> WeightContext:
        return WeightContext(self.k, self.l, self.chi)

    @property
    def completed(self) -> bool:
        return self.outcome == "completed"


def forced_chi(l: int, chi: int | None, mode: str) -> int:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == GENERIC:
        if chi is None:
            raise ValueError("generic mode needs chi")
        return chi
    forced = 2 if mode == THEOREM2 else 4 * l - 2
    if chi is not None and chi != forced:
        raise ValueError(f"mode {mode} fixes chi = {forced}, got {chi}")
    return forced


class _State:
    """Alive vertex mask plus per-vertex weights of the induced colouring."""

    def __init__(self, ec: EdgeColouring, ctx: WeightContext):
        self.ec = ec
        self.ctx = ctx
        self.alive = (1 << ec.n) - 1
        self.by_degree = [vertex_weight(ctx, d) for d in range(ctx.k + 1)]
        self.refresh()

    def refresh(self):
        self.degree = {v: self.ec.colour_degree(v, self.alive) for v in iter_bits(self.alive)}

    def weight_map(self) -> dict[int, WeightValue]:
        return {v: self.by_degree[d] for v, d in self.degree.items()}

    def weight(self, mask: int) -> WeightValue:
        counts = [0] * (self.ctx.k + 1)
        for v in iter_bits(mask & self.alive):
            counts[self.degree[v]] += 1
        total = self.ctx.zero()
        for d, n in enumerate(counts):
            if n:
                total = total + self.by_degree[d] * n
        return total

    def total(self) -> WeightValue:
        return self.weight(self.alive)


def choose_colour(state: _State, v: int) -> int:
    """Incident colour with the heaviest colour-``c`` neighbourhood."""
    ec = state.ec
    best, best_w = None, None
    for c in ec.incident_colours(v, state.alive):
        w = state.weight(ec.neighbour_mask(c, v))
        if best is None or w > best_w:
            best, best_w = c, w
    if best is None:
        raise ValueError(f"vertex {v} has no incident colour")
    rest = state.weight(state.alive & ~(1 << v))
    assert best_w * state.ctx.k >= rest, "pigeonhole colour choice failed"
    return best


def choose_layer(state: _State, layering: BfsLayering) -> int:
    """Smallest ``i`` in ``[1, l]`` with ``w(N^{i+1}) <= (k^(1/l) - 1) w(N^{<=i})``."""
    theta = layer_threshold(state.ctx)
    for i in range(1, state.ctx.l + 1):
        s = state.weight(layering.upto(i))
        t = state.weight(layering.layer(i + 1))
        if t <= theta * s:
            return i
    raise AssertionError("no admissible layer; weight ledger is unsound")


def _colour_region(ec, layering, i, l, chi, mode):
    """Colour classes covering ``S = N^{<=i}``, or the Violation explaining why not."""
    v, c = layering.root, layering.colour
    if mode == THEOREM2:
        part = parity_partition(ec, layering, i)
        if not part.ok:
            j, edge = part.witness
            return None, Violation(WITHIN_LAYER_EDGE, v, c, i, j, edge, layering)
        return [cls for cls in (part.even, part.odd) if cls], None
    if mode == THEOREM1:
        merged: dict[tuple[int, int], set] = {}
        for j in range(i + 1):
            layer = to_set(layering.layer(j))
            pc = proper_colouring(ec.monochromatic_subgraph(c, layer), 2 * l - 1)
            if pc is None:
                return None, Violation(CHROMATIC_THRESHOLD, v, c, i, j, tuple(sorted(layer)), layering)
            for t, cls in enumerate(pc.classes):
                merged.setdefault((j % 2, t), set()).update(cls)
        return [frozenset(merged[key]) for key in sorted(merged)], None
    S = to_set(layering.upto(i))
    pc = proper_colouring(ec.monochromatic_subgraph(c, S), chi)
    if pc is None:
        return None, Violation(CHROMATIC_CAP, v, c, i, i, tuple(sorted(S)), layering)
    return list(pc.classes), None


def descend(ec: EdgeColouring, l: int, chi: int | None = None, mode: str = GENERIC) -> DescentTrace:
    if l < 1:
        raise ValueError("need l >= 1")
    chi = forced_chi(l, chi, mode)
    k = max(1, ec.locality())
    ctx = WeightContext(k, l, chi)
    state = _State(ec, ctx)
    steps = []
    while popcount(state.alive) >= 2:
        v = lowest(state.alive)
        c = choose_colour(state, v)
        layering = bfs_layers(ec, c, v, l + 1, within=state.alive)
        i = choose_layer(state, layering)
        classes, violation = _colour_region(ec, layering, i, l, chi, mode)
        if violation is not None:
            return DescentTrace(ec.n, k, l, chi, mode, ec.digest(), steps, violation)
        S_prime = max_weight_class(ProperColouring(tuple(classes)), state.weight_map())
        S = layering.upto(i)
        T = layering.layer(i + 1)
        deleted = T | (S & ~mask_of(S_prime))
        assert deleted, "descent step made no progress"
        before = state.total()
        state.alive &= ~deleted
        state.refresh()
        after = state.total()
        assert after >= before, "total weight decreased"
        steps.append(DescentStep(v, c, i, to_set(S), to_set(T), frozenset(S_prime), before, after))
    return DescentTrace(ec.n, k, l, chi, mode, ec.digest(), steps, "completed")


# -- extraction ---------------------------------------------------------------

def extract_theorem2(ec: EdgeColouring, b) -> OddCycleCertificate:
    """Monochromatic odd cycle of length at most ``2 ceil(log_{b/2} k) + 1``
    from a colouring with ``n > b^k``."""
    base = RealBase.parse(b)
    if not base.exceeds_two():
        raise ValueError(f"b must exceed 2, got {base}")
    k = ec.locality()
    if not base.power_lt(k, ec.n):
        raise ValueError(f"need n > b^k; n={ec.n}, b={base}, k={k}")
    l = max(1, base.log_ceil(k))
    trace = descend(ec, l, mode=THEOREM2)
    if trace.completed:
        raise AssertionError("descent completed although n > b^k")
    viol = trace.outcome
    cert = extract_odd_cycle(ec, viol.layering, viol.j, viol.witness)
    assert cert.length <= 2 * l + 1
    return cert


def theorem1_threshold_exceeded(ec: EdgeColouring, l: int) -> bool:
    """``n > (4l-2)^k * k^(k/l)`` with ``k`` the locality."""
    k = max(1, ec.locality())
    ctx = WeightContext(k, l, 4 * l - 2)
    return vertex_weight(ctx, k) * ec.n > 1


def extract_theorem1(ec: EdgeColouring, l: int, budget: int | None = None) -> OddCycleCertificate:
    """Monochromatic cycle of length exactly ``2l + 1`` from a colouring with
    ``n >= (4l-2)^k * k^(k/l) + 1``.

    A layer needing ``2l`` or more colours guarantees a ``C_{2l+1}`` in that
    colour; it is located by exhaustive search, first inside ``S`` and then
    in the whole colour class.
    """
    if l < 1:
        raise ValueError("need l >= 1")
    if not theorem1_threshold_exceeded(ec, l):
        raise ValueError(f"need n >= (4l-2)^k k^(k/l) + 1; n={ec.n}, l={l}")
    trace = descend(ec, l, mode=THEOREM1)
    if trace.completed:
        raise AssertionError("descent completed above the size bound")
    viol = trace.outcome
    assert viol.kind == CHROMATIC_THRESHOLD
    budget = LIMITS.search_budget if budget is None else budget
    counter = [budget]
    nb = ec.index[viol.c]
    region = viol.layering.upto(viol.i)
    for allowed in (region, (1 << ec.n) - 1):
        cycle = find_cycle_in_mask(nb, allowed, 2 * l + 1, counter)
        if cycle is not None:
            return OddCycleCertificate(viol.c, tuple(cycle))
    raise AssertionError(f"no C_{2 * l + 1} in colour {viol.c} despite a chromatic-threshold layer")


def find_cycle_in_mask(nb: list[int], allowed: int, length: int, counter: list[int]):
    """Cycle on exactly ``length`` vertices inside ``allowed``, smallest vertex first.

    ``counter[0]`` is a shared node budget; ``BudgetExceeded`` when it runs out.
    """
    for s in iter_bits(allowed):
        pool = allowed & ~((1 << s) - 1)
        # colour distances back to s inside pool, for pruning
        dist = {s: 0}
        frontier, seen, d = 1 << s, 1 << s, 0
        while frontier:
            d += 1
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= nb[u]
            nxt &= pool & ~seen
            for u in iter_bits(nxt):
                dist[u] = d
            seen |= nxt
            frontier = nxt
        path = [s]

        def extend(u, used):
            counter[0] -= 1
            if counter[0] < 0:
                raise BudgetExceeded("cycle search budget exhausted")
            if len(path) == length:
                return nb[u] >> s & 1 == 1
            remaining = length - len(path)
            for w in iter_bits(nb[u] & pool & ~used):
                if dist.get(w, length + 1) > remaining:
                    continue
                path.append(w)
                if extend(w, used | 1 << w):
                    return True
                path.pop()
            return False

        if extend(s, 1 << s):
            return path
    return None


# -- trace files ---------------------------------------------------------------

def _fmt_set(vs) -> str:
    return ",".join(map(str, sorted(vs)))


def _parse_set(text: str) -> frozenset:
    return frozenset(int(x) for x in text.split(",")) if text else frozenset()


def dumps_trace(trace: DescentTrace) -> str:
    lines = [f"trace {trace.n} {trace.k} {trace.l} {trace.chi} {trace.mode}"]
    if trace.digest is not None:
        lines.append(f"colouring {trace.digest}")
    for st in trace.steps:
        lines.append(
            f"step {st.v} {st.c} {st.i} S={_fmt_set(st.S)} T={_fmt_set(st.T)} "
            f"Sp={_fmt_set(st.S_prime)} w_before={st.weight_before.render()} "
            f"w_after={st.weight_after.render()}"
        )
    out = trace.outcome
    if out == "completed":
        lines.append("outcome completed")
    else:
        head = f"outcome violation {out.kind} v={out.v} c={out.c} i={out.i} j={out.j}"
        if out.kind == WITHIN_LAYER_EDGE:
            lines.append(f"{head} edge={_fmt_set(out.witness)}")
        else:
            lines.append(f"{head} set={_fmt_set(out.witness)}")
    return "\n".join(lines) + "\n"


def _kv(tokens) -> dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep:
            raise FormatError(f"expected key=value, got {tok!r}")
        out[key] = val
    return out


def loads_trace(text: str) -> DescentTrace:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        head = lines[0].split()
        if len(head) != 6 or head[0] != "trace" or head[5] not in MODES:
            raise FormatError(f"bad trace header: {lines[0]!r}")
        n, k, l, chi = map(int, head[1:5])
        ctx = WeightContext(k, l, chi)
        digest = None
        steps = []
        outcome = None
        for ln in lines[1:]:
            if outcome is not None:
                raise FormatError("content after outcome line")
            if ln.startswith("colouring "):
                digest = ln.split()[1]
            elif ln.startswith("step "):
                before, _, after = ln.partition(" w_before=")
                wb, _, wa = after.partition(" w_after=")
                parts = before.split()
                v, c, i = map(int, parts[1:4])
                kv = _kv(parts[4:])
                steps.append(DescentStep(
                    v, c, i, _parse_set(kv["S"]), _parse_set(kv["T"]), _parse_set(kv["Sp"]),
                    parse_poly(ctx, wb), parse_poly(ctx, wa),
                ))
            elif ln == "outcome completed":
                outcome = "completed"
            elif ln.startswith("outcome violation "):
                parts = ln.split()
                kind = parts[2]
                kv = _kv(parts[3:])
                wit = kv["edge"] if kind == WITHIN_LAYER_EDGE else kv["set"]
                outcome = Violation(kind, int(kv["v"]), int(kv["c"]), int(kv["i"]), int(kv["j"]),
                                    tuple(sorted(_parse_set(wit))))
            else:
                raise FormatError(f"unrecognised trace line: {ln!r}")
    except (IndexError, KeyError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed trace: {exc}") from exc
    if outcome is None:
        raise FormatError("trace has no outcome line")
    return DescentTrace(n, k, l, chi, head[5], digest, steps, outcome)
