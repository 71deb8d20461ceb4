"""Brute-force lattice computations used to cross-check every closed form.

Everything in this module is deliberately naive.  Statistics are counted
directly on an explicit cell set, series are accumulated word by word, and
area counts come from a pruned search over words.  None of it reuses the
formula-based implementations in ``geometry`` or ``series``: independence
is the point, so the duplication is intentional.
"""

from __future__ import annotations

from collections import Counter

from .geometry import PickReport
from .series import Monomial, TruncatedSeries
from .words import (
    DEFAULT_WORD_CAP,
    EnumerationCapError,
    FibWord,
    count_words,
    iter_word_digits,
    successor_digits,
    validate_alphabet,
)

STATISTICS = ("area_sper", "inner")


def lattice_stats(w: FibWord) -> PickReport:
    """Statistics of a non-empty word counted on the embedded cell set.

    Cells are indexed (column, row) with rows starting at 1.  The
    semi-perimeter is half the number of boundary edges, and an inner
    point is a lattice point whose four surrounding cells all exist.
    """
    if not w.digits:
        raise ValueError("lattice statistics require a non-empty word")
    cells = {(i, j) for i, h in enumerate(w.digits, start=1) for j in range(1, h + 1)}

    edges: Counter = Counter()
    for i, j in cells:
        corners = [(i - 1, j - 1), (i, j - 1), (i, j), (i - 1, j)]
        for a, b in zip(corners, corners[1:] + corners[:1]):
            edges[frozenset((a, b))] += 1
    boundary = sum(1 for count in edges.values() if count == 1)
    if boundary % 2:
        raise AssertionError("bargraph boundary length must be even")

    points = {corner for i, j in cells for corner in ((i - 1, j - 1), (i, j - 1), (i, j), (i - 1, j))}
    inn = 0
    for a, b in points:
        if all(c in cells for c in ((a, b), (a + 1, b), (a, b + 1), (a + 1, b + 1))):
            inn += 1

    return PickReport(area=len(cells), sper=boundary // 2, inn=inn)


def brute_force_generating_series(
    p: int, x_bound: int, statistic: str = "area_sper", cap: int | None = None
) -> TruncatedSeries:
    """Joint series accumulated word by word from lattice statistics.

    ``statistic`` selects the marks: "area_sper" records x^len y^area
    z^sper, "inner" records x^len q^inn.  The empty word contributes 1.
    """
    validate_alphabet(p)
    if statistic not in STATISTICS:
        raise ValueError(f"statistic must be one of {STATISTICS}, got {statistic!r}")
    if cap is None:
        cap = DEFAULT_WORD_CAP
    total = sum(count_words(p, n) for n in range(x_bound + 1))
    if total > cap:
        raise EnumerationCapError(total, cap)

    terms: dict[Monomial, int] = {Monomial(): 1}
    for n in range(1, x_bound + 1):
        for digits in iter_word_digits(p, n):
            report = lattice_stats(FibWord(p, digits))
            if statistic == "area_sper":
                mono = Monomial(x=n, y=report.area, z=report.sper)
            else:
                mono = Monomial(x=n, q=report.inn)
            terms[mono] = terms.get(mono, 0) + 1
    return TruncatedSeries(x_bound, terms)


def brute_force_area_distribution(p: int, max_area: int, cap: int | None = None) -> list[int]:
    """Count words by digit sum, for sums 0 .. max_area, by pruned search.

    Every word whose digit sum fits the bound is visited exactly once;
    the count at sum 0 is 1 for the empty word.
    """
    validate_alphabet(p)
    if max_area < 0:
        raise ValueError(f"max_area must be >= 0, got {max_area}")
    if cap is None:
        cap = DEFAULT_WORD_CAP

    counts = [0] * (max_area + 1)
    counts[0] = 1
    visited = 0

    def explore(last: int | None, total: int) -> None:
        nonlocal visited
        for d in successor_digits(p, last):
            s = total + d
            if s > max_area:
                continue
            counts[s] += 1
            visited += 1
            if visited > cap:
                raise EnumerationCapError(visited, cap)
            explore(d, s)

    explore(None, 0)
    return counts
