"""Geometric statistics of the bargraph polyomino induced by a word.

Column i of the bargraph occupies the cells [i-1, i] x [j-1, j] for
j = 1 .. digits[i-1].  All statistics here are closed forms in the digit
sequence; the oracle module recomputes them directly on the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import FibWord, enumerate_words


@dataclass(frozen=True)
class PickReport:
    """Area, semi-perimeter and interior-point count of one polyomino."""

    area: int
    sper: int
    inn: int

    @property
    def pick_holds(self) -> bool:
        """Lattice-polygon identity: area equals inn + sper - 1."""
        return self.area == self.inn + self.sper - 1


@dataclass(frozen=True)
class AggregateStats:
    """Totals of the three statistics over all words of one length."""

    p: int
    n: int
    count: int
    total_area: int
    total_sper: int
    total_inner: int

    @property
    def identity_holds(self) -> bool:
        return self.count == self.total_inner + self.total_sper - self.total_area


def area(w: FibWord) -> int:
    """Number of unit cells: the digit sum."""
    return sum(w.digits)


def semiperimeter(w: FibWord) -> int:
    """Half the boundary length: length + first digit + sum of ascents."""
    if not w.digits:
        return 0
    ascents = sum(max(0, b - a) for a, b in zip(w.digits, w.digits[1:]))
    return len(w.digits) + w.digits[0] + ascents


def inner_points(w: FibWord) -> int:
    """Lattice points surrounded by four cells: sum of min(neighbor heights) - 1."""
    return sum(min(a, b) - 1 for a, b in zip(w.digits, w.digits[1:]))


def pick_report(w: FibWord) -> PickReport:
    """Assemble the three statistics for a non-empty word."""
    if not w.digits:
        raise ValueError("statistics report requires a non-empty word")
    return PickReport(area=area(w), sper=semiperimeter(w), inn=inner_points(w))


def aggregate_stats(p: int, n: int, cap: int | None = None) -> AggregateStats:
    """Sum area, semi-perimeter and inner points over every word of length n >= 1."""
    if n < 1:
        raise ValueError(f"aggregate statistics need n >= 1, got {n}")
    words = enumerate_words(p, n, cap=cap)
    return AggregateStats(
        p=p,
        n=n,
        count=len(words),
        total_area=sum(area(w) for w in words),
        total_sper=sum(semiperimeter(w) for w in words),
        total_inner=sum(inner_points(w) for w in words),
    )


def render_ascii(w: FibWord, glyph: str = "#") -> str:
    """Monospace drawing of the bargraph, one character column per digit.

    Columns are bottom-aligned; the empty word renders as the empty string.
    """
    if len(glyph) != 1:
        raise ValueError("glyph must be a single character")
    if not w.digits:
        return ""
    top = max(w.digits)
    lines = []
    for level in range(top, 0, -1):
        lines.append("".join(glyph if h >= level else " " for h in w.digits).rstrip())
    return "\n".join(lines)
