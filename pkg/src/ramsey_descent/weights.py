"""Exact arithmetic for vertex weights ``(chi * k^(1/l))^(-d)``.

Write ``k = a^g`` with ``g`` maximal and reduce ``g/l`` to ``p/q``, so that
``k^(1/l) = a^(p/q)``. With ``beta = a^(-1/q)`` every weight and every sum of
weights is ``sum_r c_r beta^r`` over ``0 <= r < q`` with rational ``c_r``.
Since ``x^q - a`` is irreducible when ``a`` is not a perfect power, the
coefficient vector is unique and equality is structural. Order is decided by
rational interval bounds on ``beta`` at doubling precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, total_ordering

import gmpy2

from .errors import FormatError


def perfect_power(k: int) -> tuple[int, int]:
    """``(a, g)`` with ``k = a**g`` and ``g`` maximal."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return 1, 1
    for g in range(k.bit_length(), 1, -1):
        root, exact = gmpy2.iroot(k, g)
        if exact:
            return int(root), g
    return k, 1


@dataclass(frozen=True)
class WeightContext:
    k: int
    l: int
    chi: int
    a: int = field(init=False)
    p: int = field(init=False)
    q: int = field(init=False)

    def __post_init__(self):
        if self.k < 1 or self.l < 1 or self.chi < 1:
            raise ValueError(f"need k, l, chi >= 1, got {self.k}, {self.l}, {self.chi}")
        a, g = perfect_power(self.k)
        if a == 1:
            p, q = 0, 1
        else:
            frac = Fraction(g, self.l)
            p, q = frac.numerator, frac.denominator
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def rational(self) -> bool:
        return self.q == 1

    def const(self, x) -> "WeightValue":
        return WeightValue(self, (Fraction(x),) + (Fraction(0),) * (self.q - 1))

    def zero(self) -> "WeightValue":
        return self.const(0)

    def beta_power(self, m: int) -> "WeightValue":
        """``beta**m`` for any integer ``m``."""
        s, r = divmod(m, self.q)
        coeffs = [Fraction(0)] * self.q
        coeffs[r] = Fraction(self.a) ** (-s)
        return WeightValue(self, tuple(coeffs))

    @property
    def alpha(self) -> "WeightValue":
        return self.beta_power(-self.p) * self.chi

    def alpha_power(self, d: int) -> "WeightValue":
        return self.beta_power(-self.p * d) * Fraction(self.chi) ** d


@lru_cache(maxsize=512)
def _beta_powers(a: int, q: int, bits: int) -> tuple[tuple[Fraction, Fraction], ...]:
    """Rational bounds ``lo <= beta**r <= hi`` for ``r < q``."""
    root, _ = gmpy2.iroot(a << (bits * q), q)
    root = int(root)
    scale = 1 << bits
    lo, hi = Fraction(scale, root + 1), Fraction(scale, root)
    return tuple((lo**r, hi**r) for r in range(q))


def _interval(ctx: WeightContext, coeffs, bits: int) -> tuple[Fraction, Fraction]:
    lo_sum = hi_sum = Fraction(0)
    for c, (lo, hi) in zip(coeffs, _beta_powers(ctx.a, ctx.q, bits)):
        if c >= 0:
            lo_sum += c * lo
            hi_sum += c * hi
        else:
            lo_sum += c * hi
            hi_sum += c * lo
    return lo_sum, hi_sum


@total_ordering
@dataclass(frozen=True)
class WeightValue:
    ctx: WeightContext
    coeffs: tuple[Fraction, ...]

    def _coerce(self, other) -> "WeightValue":
        if isinstance(other, WeightValue):
            if other.ctx != self.ctx:
                raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        raise TypeError(f"cannot combine WeightValue with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return WeightValue(self.ctx, tuple(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return WeightValue(self.ctx, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return WeightValue(self.ctx, tuple(x * other for x in self.coeffs))
        o = self._coerce(other)
        q, a = self.ctx.q, self.ctx.a
        out = [Fraction(0)] * q
        for r, x in enumerate(self.coeffs):
            if not x:
                continue
            for s, y in enumerate(o.coeffs):
                if y:
                    t = r + s
                    if t >= q:
                        out[t - q] += x * y / a
                    else:
                        out[t] += x * y
        return WeightValue(self.ctx, tuple(out))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def interval(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        if self.is_rational():
            return self.coeffs[0], self.coeffs[0]
        return _interval(self.ctx, self.coeffs, bits)

    def sign(self) -> int:
        if self.is_rational():
            c = self.coeffs[0]
            return (c > 0) - (c < 0)
        bits = 64
        while True:
            lo, hi = _interval(self.ctx, self.coeffs, bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def compare(self, other) -> int:
        """-1, 0 or 1 as ``self`` is less than, equal to, or greater than ``other``."""
        o = self._coerce(other)
        if self.coeffs == o.coeffs:
            return 0
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, WeightValue):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __lt__(self, other):
        return self.compare(other) < 0

    def floor(self) -> int:
        if self.is_rational():
            return math.floor(self.coeffs[0])
        # irrational, so never an integer: refine until the floor is pinned
        bits = 64
        while True:
            lo, hi = _interval(self.ctx, self.coeffs, bits)
            if math.floor(lo) == math.floor(hi):
                return math.floor(lo)
            bits *= 2

    def ceil(self) -> int:
        if self.is_rational():
            return math.ceil(self.coeffs[0])
        return self.floor() + 1

    def __float__(self):
        lo, hi = self.interval(64)
        return float((lo + hi) / 2)

    def render(self) -> str:
        parts = [f"{c.numerator}/{c.denominator}" for c in self.coeffs]
        return " ".join(["poly", str(self.ctx.q), *parts])

    def __repr__(self):
        return f"<{self.render()} ~ {float(self):.6g}>"


def parse_poly(ctx: WeightContext, text: str) -> WeightValue:
    parts = text.split()
    if len(parts) < 2 or parts[0] != "poly":
        raise FormatError(f"bad poly: {text!r}")
    try:
        q = int(parts[1])
        coeffs = tuple(Fraction(x) for x in parts[2:])
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad poly: {text!r}") from exc
    if q != ctx.q or len(coeffs) != q:
        raise FormatError(f"poly of size {q} does not fit context with q={ctx.q}")
    return WeightValue(ctx, coeffs)


def vertex_weight(ctx: WeightContext, d: int) -> WeightValue:
    """``(chi * k^(1/l))^(-d)``."""
    if not 0 <= d <= ctx.k:
        raise ValueError(f"colour degree {d} outside [0, {ctx.k}]")
    return ctx.beta_power(ctx.p * d) * Fraction(1, ctx.chi**d)


def scale_by_alpha(ctx: WeightContext, x: WeightValue) -> WeightValue:
    return x * ctx.alpha


def layer_threshold(ctx: WeightContext) -> WeightValue:
    """``k^(1/l) - 1``."""
    return ctx.beta_power(-ctx.p) - 1


def add(x: WeightValue, y: WeightValue) -> WeightValue:
    return x + y


def compare(x: WeightValue, y: WeightValue) -> int:
    return x.compare(y)
