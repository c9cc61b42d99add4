"""Closed-form bounds with certified integer ceilings."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .weights import WeightContext


@dataclass(frozen=True)
class RealBase:
    """A positive real ``radicand ** (1/index)``, e.g. ``2.5`` or ``sqrt(7)``.

    Keeping ``b`` in this form makes ``b^k < n`` and ``(b/2)^l >= k`` exact
    integer comparisons.
    """

    radicand: Fraction
    index: int = 1

    _ROOT = re.compile(r"^\s*\(?\s*([0-9./]+)\s*\)?\s*\^\s*\(\s*1\s*/\s*(\d+)\s*\)\s*$")
    _SQRT = re.compile(r"^\s*sqrt\(\s*([0-9./]+)\s*\)\s*$")

    @classmethod
    def parse(cls, value) -> "RealBase":
        if isinstance(value, RealBase):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        if isinstance(value, float):
            return cls(Fraction(value))
        text = str(value)
        m = cls._SQRT.match(text)
        if m:
            return cls(Fraction(m.group(1)), 2)
        m = cls._ROOT.match(text)
        if m:
            return cls(Fraction(m.group(1)), int(m.group(2)))
        try:
            return cls(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse base {text!r}") from exc

    def __post_init__(self):
        if self.radicand <= 0 or self.index < 1:
            raise ValueError("base must be a positive real root")

    def exceeds_two(self) -> bool:
        return self.radicand > 2**self.index

    def power_lt(self, k: int, n: int) -> bool:
        """``b**k < n``."""
        return self.radicand**k < Fraction(n) ** self.index

    def log_ceil(self, k: int) -> int:
        """Smallest ``l >= 0`` with ``(b/2)**l >= k``."""
        if not self.exceeds_two():
            raise ValueError("log base b/2 needs b > 2")
        l = 0
        while self.radicand**l < Fraction(k) ** self.index * 2 ** (self.index * l):
            l += 1
        return l

    def __float__(self):
        return float(self.radicand) ** (1 / self.index)

    def __str__(self):
        r = str(self.radicand)
        if self.index == 1:
            return r
        if self.index == 2:
            return f"sqrt({r})"
        return f"{r}^(1/{self.index})"


def theorem2_half_length(k: int, b) -> int:
    """``ceil(log_{b/2} k)``, the half-length behind ``2 ceil(log_{b/2} k) + 1``."""
    return RealBase.parse(b).log_ceil(k)


def lemma_bound(k: int, l: int, chi: int) -> int:
    """``ceil(chi^k * k^(k/l))``."""
    return WeightContext(k, l, chi).alpha_power(k).ceil()


def theorem1_upper(k: int, l: int) -> int:
    """``ceil((4l-2)^k * k^(k/l)) + 1``."""
    return lemma_bound(k, l, 4 * l - 2) + 1


def lower_bound(k: int, l: int) -> int:
    return l * 2**k + 1


@dataclass(frozen=True)
class BoundReport:
    k: int
    l: int
    theorem1_upper: int
    lower_bound: int
    b: RealBase | None = None
    chi: int | None = None
    theorem2_length: int | None = None
    lemma_bound: int | None = None

    @property
    def degenerate_theorem2(self) -> bool:
        """``ceil(log_{b/2} k) = 0`` (only at ``k = 1``)."""
        return self.theorem2_length == 1

    def items(self) -> list[tuple[str, object]]:
        out = [("k", self.k), ("l", self.l)]
        if self.b is not None:
            out.append(("b", self.b))
        if self.chi is not None:
            out.append(("chi", self.chi))
        out += [("theorem1_upper", self.theorem1_upper), ("lower_bound", self.lower_bound)]
        if self.theorem2_length is not None:
            out.append(("theorem2_length", self.theorem2_length))
        if self.lemma_bound is not None:
            out.append(("lemma_bound", self.lemma_bound))
        return out

    def as_text(self) -> str:
        rows = self.items()
        width = max(len(key) for key, _ in rows)
        lines = [f"{key.ljust(width)}  {val}" for key, val in rows]
        if self.degenerate_theorem2:
            lines.append("note: k = 1 makes the short-cycle length degenerate; extraction uses l = 1")
        return "\n".join(lines)

    def as_kv(self) -> str:
        return "\n".join(f"{key}={val}" for key, val in self.items())


def compute_bounds(k: int, l: int, b=None, chi: int | None = None) -> BoundReport:
    if k < 1 or l < 1:
        raise ValueError("need k >= 1 and l >= 1")
    if chi is not None and chi < 1:
        raise ValueError("need chi >= 1")
    base = None
    t2 = None
    if b is not None:
        base = RealBase.parse(b)
        if not base.exceeds_two():
            raise ValueError(f"b must exceed 2, got {base}")
        t2 = 2 * base.log_ceil(k) + 1
    return BoundReport(
        k=k,
        l=l,
        theorem1_upper=theorem1_upper(k, l),
        lower_bound=lower_bound(k, l),
        b=base,
        chi=chi,
        theorem2_length=t2,
        lemma_bound=lemma_bound(k, l, chi) if chi is not None else None,
    )
