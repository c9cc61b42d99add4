import random
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from ramsey_descent import colouring as col
from ramsey_descent.bfs import bfs_layers
from ramsey_descent.bits import mask_of
from ramsey_descent.descent import (CHROMATIC_CAP, THEOREM1, THEOREM2, WITHIN_LAYER_EDGE, _State,
                                    choose_colour, choose_layer, descend, dumps_trace,
                                    extract_theorem1, extract_theorem2, find_cycle_in_mask,
                                    loads_trace)
from ramsey_descent.errors import BudgetExceeded, FormatError
from ramsey_descent.oracle import find_mono_odd_cycle, verify_certificate
from ramsey_descent.trace_check import verify_trace
from ramsey_descent.weights import WeightContext, layer_threshold, vertex_weight
from tests.conftest import colourings


def max_neighbourhood_chi(ec, l):
    from ramsey_descent.chromatic import chromatic_number
    best = 1
    for c in ec.palette:
        for v in range(ec.n):
            region = set().union(*bfs_layers(ec, c, v, l).layers)
            best = max(best, chromatic_number(ec.monochromatic_subgraph(c, region), ec.n))
    return best


class TestChooseColour:
    def test_mono(self):
        ec = col.new_complete(5, 3)
        state = _State(ec, WeightContext(1, 1, 2))
        assert choose_colour(state, 0) == 3

    def test_bigger_neighbourhood(self):
        ec = col.new_complete(5, 1)
        ec.set_colour(0, 4, 2)
        state = _State(ec, WeightContext(2, 1, 2))
        assert choose_colour(state, 0) == 1

    def test_against_enumeration(self):
        rng = random.Random(11)
        for seed in range(40):
            ec = col.generate_random(10, 3, seed)
            ctx = WeightContext(max(1, ec.locality()), rng.randint(1, 3), rng.randint(1, 4))
            state = _State(ec, ctx)
            v = rng.randrange(10)
            w = {u: vertex_weight(ctx, ec.colour_degree(u)) for u in range(10)}
            sums = {}
            for u in range(10):
                if u != v:
                    c = ec.colour_of(u, v)
                    sums[c] = sums.get(c, ctx.zero()) + w[u]
            best = max(sums.values())
            expect = min(c for c, s in sums.items() if s == best)
            assert choose_colour(state, v) == expect


class TestChooseLayer:
    def test_empty_second_layer(self):
        ec = col.new_complete(4, 1)
        state = _State(ec, WeightContext(1, 2, 2))
        assert choose_layer(state, bfs_layers(ec, 1, 0, 3)) == 1

    def test_brute_force(self):
        for seed in range(60):
            ec = col.generate_random(9, 2, seed)
            ctx = WeightContext(max(1, ec.locality()), 2, 2)
            state = _State(ec, ctx)
            c = choose_colour(state, 0)
            lay = bfs_layers(ec, c, 0, 3)
            w = {u: vertex_weight(ctx, ec.colour_degree(u)) for u in range(9)}
            theta = layer_threshold(ctx)
            layers = lay.layers + [frozenset()] * 3

            def wt(vs):
                return sum((w[u] for u in vs), ctx.zero())

            ok = [i for i in (1, 2) if wt(layers[i + 1]) <= theta * wt(set().union(*layers[: i + 1]))]
            assert ok and choose_layer(state, lay) == ok[0]


class TestDescend:
    def test_k1(self):
        tr = descend(col.new_complete(1, 1), 1, 2)
        assert tr.completed and tr.steps == [] and verify_trace(tr, col.new_complete(1, 1))

    def test_mono_k2(self):
        ec = col.new_complete(2, 1)
        tr = descend(ec, 1, 2)
        assert tr.completed and len(tr.steps) == 1
        assert tr.steps[0].weight_before == 1 and tr.steps[0].weight_after == 1
        assert verify_trace(tr, ec)

    def test_mono_k3_t2(self):
        tr = descend(col.new_complete(3, 1), 1, mode=THEOREM2)
        assert not tr.completed
        assert tr.outcome.kind == WITHIN_LAYER_EDGE and tr.outcome.j == 1

    def test_generic_cap(self):
        tr = descend(col.new_complete(4, 1), 1, 3)
        assert tr.outcome.kind == CHROMATIC_CAP
        assert verify_trace(tr, col.new_complete(4, 1))

    def test_forced_chi(self):
        with pytest.raises(ValueError):
            descend(col.new_complete(3, 1), 1, 3, mode=THEOREM2)
        with pytest.raises(ValueError):
            descend(col.new_complete(3, 1), 1)

    def test_deterministic(self):
        ec = col.generate_random(14, 3, 5)
        assert dumps_trace(descend(ec, 2, 4)) == dumps_trace(descend(ec, 2, 4))

    def test_doubling_completes_in_t2(self):
        for l, k in [(1, 2), (1, 3)]:
            ec = col.generate_doubling(l, k)
            tr = descend(ec, 1, mode=THEOREM2)
            assert tr.completed and verify_trace(tr, ec)


@given(colourings(max_n=9), st.integers(1, 2))
def test_generic_soundness(ec, l):
    chi = max_neighbourhood_chi(ec, l)
    tr = descend(ec, l, chi)
    assert tr.completed
    assert verify_trace(tr, ec)
    ctx = tr.ctx
    assert vertex_weight(ctx, ctx.k) * ec.n <= 1
    for st_ in tr.steps:
        assert st_.deleted and st_.weight_after >= st_.weight_before


@given(colourings(min_n=2, max_n=9), st.sampled_from(["generic", "t1", "t2"]), st.integers(1, 2))
def test_any_outcome_verifies(ec, mode, l):
    tr = descend(ec, l, 3 if mode == "generic" else None, mode)
    assert verify_trace(tr, ec)
    assert verify_trace(loads_trace(dumps_trace(tr)), ec)


class TestTraceFile:
    def test_round_trip(self):
        ec = col.generate_random(10, 3, 2)
        tr = descend(ec, 2, mode=THEOREM2)
        text = dumps_trace(tr)
        assert text.splitlines()[0] == "trace 10 3 2 2 t2"
        assert dumps_trace(loads_trace(text)) == text

    @pytest.mark.parametrize("text", ["", "trace 3 1 1\n", "trace 2 1 1 2 generic\nstep 0 1\n",
                                      "trace 2 1 1 2 generic\n",
                                      "trace 2 1 1 2 generic\noutcome completed\noutcome completed\n"])
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            loads_trace(text)


class TestVerifyTraceRejects:
    def setup_method(self):
        self.ec = col.generate_random(12, 2, 7)
        self.trace = descend(self.ec, 2, max_neighbourhood_chi(self.ec, 2))
        assert self.trace.completed and len(self.trace.steps) >= 2

    def mutate_step(self, t, **changes):
        steps = list(self.trace.steps)
        steps[t] = replace(steps[t], **changes)
        return replace(self.trace, steps=steps)

    def test_vertex_moved_from_s_prime(self):
        st0 = self.trace.steps[0]
        u = min(st0.S_prime)
        bad = self.mutate_step(0, S_prime=st0.S_prime - {u})
        res = verify_trace(bad, self.ec)
        assert not res and res.step == 0

    def test_wrong_layer(self):
        st0 = self.trace.steps[0]
        assert not verify_trace(self.mutate_step(0, i=st0.i + 1 if st0.i == 1 else 1), self.ec)

    def test_wrong_weight(self):
        st0 = self.trace.steps[0]
        assert not verify_trace(self.mutate_step(0, weight_after=st0.weight_after + 1), self.ec)

    def test_dropped_step(self):
        bad = replace(self.trace, steps=self.trace.steps[:-1])
        assert not verify_trace(bad, self.ec)

    def test_other_colouring(self):
        other = col.generate_random(12, 2, 8)
        assert not verify_trace(self.trace, other)
        assert not verify_trace(replace(self.trace, digest=None), other)

    def test_wrong_k(self):
        assert not verify_trace(replace(self.trace, k=self.trace.k + 1), self.ec)


class TestTheorem2:
    def test_mono_k3(self):
        cert = extract_theorem2(col.new_complete(3, 1), "2.5")
        assert cert.length == 3 and verify_certificate(col.new_complete(3, 1), cert)

    def test_k7_sqrt7(self):
        for seed in range(30):
            ec = col.generate_random(8, 2, seed)
            if ec.locality() != 2:
                continue
            cert = extract_theorem2(ec, "sqrt(7)")
            assert verify_certificate(ec, cert) and cert.length <= 7

    def test_k7_exactly_b_squared_rejected(self):
        # n = 7 = sqrt(7)^2 is not > b^k
        with pytest.raises(ValueError):
            extract_theorem2(col.generate_random(7, 2, 1), "sqrt(7)")

    def test_b_at_most_two(self):
        with pytest.raises(ValueError):
            extract_theorem2(col.generate_doubling(1, 2), 1.9)
        with pytest.raises(ValueError):
            extract_theorem2(col.generate_doubling(1, 2), 2)

    @given(colourings(min_n=5, max_n=12, max_k=3), st.sampled_from(["2.5", "3", "sqrt(7)", "4"]))
    def test_totality(self, ec, b):
        from ramsey_descent.bounds import RealBase
        base = RealBase.parse(b)
        k = ec.locality()
        if not base.power_lt(k, ec.n):
            return
        cert = extract_theorem2(ec, b)
        bound = 2 * max(1, base.log_ceil(k)) + 1
        assert verify_certificate(ec, cert) and cert.length <= bound
        oracle = find_mono_odd_cycle(ec, cert.length)
        assert oracle is not None and oracle.length <= cert.length


class TestTheorem1:
    def test_mono_k3(self):
        ec = col.new_complete(3, 1)
        cert = extract_theorem1(ec, 1)
        assert cert.length == 3 and verify_certificate(ec, cert)

    def test_precondition(self):
        with pytest.raises(ValueError):
            extract_theorem1(col.generate_doubling(1, 2), 1)

    def test_k17(self):
        for seed in range(10):
            ec = col.generate_random(17, 2, seed)
            cert = extract_theorem1(ec, 1)
            assert cert.length == 3 and verify_certificate(ec, cert)

    def test_l2_mono(self):
        # k = 1, l = 2: bound 6 * 1 + 1 = 7
        ec = col.new_complete(7, 1)
        cert = extract_theorem1(ec, 2)
        assert cert.length == 5 and verify_certificate(ec, cert)


def test_cycle_search_budget():
    ec = col.new_complete(12, 1)
    with pytest.raises(BudgetExceeded):
        find_cycle_in_mask(ec.index[1], mask_of(range(12)), 11, [5])
    path = find_cycle_in_mask(ec.index[1], mask_of(range(12)), 11, [10**6])
    assert len(path) == 11 and len(set(path)) == 11
