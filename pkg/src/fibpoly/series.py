"""Exact truncated series arithmetic and the rational generating functions.

Four variables are in play: x marks the number of columns (word length),
y the area, z the semi-perimeter, and q the number of inner points.  All
coefficients are exact Python integers and series are truncated by
x-degree only; y, z, q degrees stay finite on their own once x is bounded.

Two independent routes build the joint series: a column-by-column
transfer recurrence over the height of the last column (``series_F_dp``,
``series_G_dp``) and formal division of the closed rational forms
(``closed_form_F``, ``closed_form_G`` fed to ``expand_rational``).  Their
term-for-term agreement is the central consistency check of the package.

Canonical term order is graded lexicographic with x > y > z > q; the text
rendering groups terms by x-degree, e.g. ``1 + y^2*z^3*x + (y^3*z^4 +
y^4*z^4)*x^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .words import validate_alphabet

VARIABLES = ("x", "y", "z", "q")


class Monomial(NamedTuple):
    """Exponent vector over the variables (x, y, z, q)."""

    x: int = 0
    y: int = 0
    z: int = 0
    q: int = 0

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.x + other.x, self.y + other.y, self.z + other.z, self.q + other.q)

    def total_degree(self) -> int:
        return self.x + self.y + self.z + self.q

    def grlex_key(self) -> tuple[int, int, int, int, int]:
        """Sort key for graded lexicographic order with x > y > z > q."""
        return (self.total_degree(), self.x, self.y, self.z, self.q)

    def exponents(self) -> dict[str, int]:
        """Exponent map with zero entries omitted."""
        return {v: e for v, e in zip(VARIABLES, self) if e}

    @classmethod
    def from_exponents(cls, exponents: Mapping[str, int]) -> "Monomial":
        bad = set(exponents) - set(VARIABLES)
        if bad:
            raise ValueError(f"unknown variables {sorted(bad)}; expected subset of {VARIABLES}")
        if any(e < 0 for e in exponents.values()):
            raise ValueError("exponents must be non-negative")
        return cls(**{v: int(e) for v, e in exponents.items()})


UNIT = Monomial()

Terms = dict[Monomial, int]


def _add_term(target: Terms, mono: Monomial, coeff: int) -> None:
    c = target.get(mono, 0) + coeff
    if c:
        target[mono] = c
    elif mono in target:
        del target[mono]


def _poly_add(a: Terms, b: Terms, sign: int = 1) -> Terms:
    out = dict(a)
    for mono, coeff in b.items():
        _add_term(out, mono, sign * coeff)
    return out


def _poly_mul(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            _add_term(out, m1.times(m2), c1 * c2)
    return out


def _poly_scale(a: Terms, k: int) -> Terms:
    return {mono: k * coeff for mono, coeff in a.items()} if k else {}


def _x_poly(coeffs: Mapping[int, int]) -> Terms:
    """Univariate polynomial in x from an exponent -> coefficient map."""
    return {Monomial(x=k): c for k, c in coeffs.items() if c}


class TruncatedSeries:
    """Multivariate polynomial kept exactly through x-degree ``x_bound``.

    Stored terms never carry a zero coefficient or an x-degree above the
    bound; instances are treated as immutable.
    """

    __slots__ = ("x_bound", "terms")

    def __init__(self, x_bound: int, terms: Mapping[Monomial, int] | None = None):
        if x_bound < 0:
            raise ValueError(f"x_bound must be >= 0, got {x_bound}")
        clean: Terms = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(mono, Monomial):
                    mono = Monomial(*mono)
                if coeff and mono.x <= x_bound:
                    clean[mono] = coeff
        self.x_bound = x_bound
        self.terms = clean

    @classmethod
    def zero(cls, x_bound: int) -> "TruncatedSeries":
        return cls(x_bound)

    @classmethod
    def one(cls, x_bound: int) -> "TruncatedSeries":
        return cls(x_bound, {UNIT: 1})

    @classmethod
    def single(cls, x_bound: int, coeff: int = 1, **exponents: int) -> "TruncatedSeries":
        return cls(x_bound, {Monomial.from_exponents(exponents): coeff})

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.x_bound != other.x_bound:
            raise ValueError(f"x_bound mismatch: {self.x_bound} != {other.x_bound}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(self.x_bound, _poly_add(self.terms, other.terms))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(self.x_bound, _poly_add(self.terms, other.terms, sign=-1))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out: Terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1.x + m2.x > self.x_bound:
                    continue
                _add_term(out, m1.times(m2), c1 * c2)
        return TruncatedSeries(self.x_bound, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.x_bound == other.x_bound and self.terms == other.terms

    def __repr__(self) -> str:
        return f"TruncatedSeries(x_bound={self.x_bound}, {self.to_text()})"

    def truncate(self, x_bound: int) -> "TruncatedSeries":
        """Drop every term of x-degree above the (smaller or equal) new bound."""
        if x_bound > self.x_bound:
            raise ValueError("cannot raise the truncation bound of an existing series")
        return TruncatedSeries(x_bound, self.terms)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def coefficient_of_x(self, n: int) -> Terms:
        """The coefficient of x^n as a polynomial in y, z, q."""
        return {m._replace(x=0): c for m, c in self.terms.items() if m.x == n}

    def univariate_coefficients(self) -> list[int]:
        """Coefficients by x-degree; requires a series in x alone."""
        coeffs = [0] * (self.x_bound + 1)
        for mono, c in self.terms.items():
            if mono.y or mono.z or mono.q:
                raise ValueError(f"series is not univariate in x: contains {mono}")
            coeffs[mono.x] = c
        return coeffs

    def substitute_one(self, *variables: str) -> "TruncatedSeries":
        """Set the named variables to 1, merging terms that collide."""
        for v in variables:
            if v not in VARIABLES:
                raise ValueError(f"unknown variable {v!r}")
        out: Terms = {}
        for mono, c in self.terms.items():
            reduced = Monomial(**{v: e for v, e in zip(VARIABLES, mono) if v not in variables})
            _add_term(out, reduced, c)
        return TruncatedSeries(self.x_bound, out)

    def moment(self, variable: str, n: int) -> int:
        """Sum of coefficient times ``variable`` exponent over the x^n terms.

        Applied to the joint series this is the total of the marked
        statistic over all words of length n.
        """
        if variable not in VARIABLES:
            raise ValueError(f"unknown variable {variable!r}")
        idx = VARIABLES.index(variable)
        return sum(c * mono[idx] for mono, c in self.terms.items() if mono.x == n)

    def to_text(self) -> str:
        """Canonical text form, terms grouped by ascending x-degree."""
        if not self.terms:
            return "0"
        groups: dict[int, list[tuple[Monomial, int]]] = {}
        for mono, c in self.terms.items():
            groups.setdefault(mono.x, []).append((mono._replace(x=0), c))
        rendered: list[tuple[bool, str]] = []
        for n in sorted(groups):
            entries = sorted(groups[n], key=lambda item: item[0].grlex_key())
            if len(entries) == 1:
                mono, c = entries[0]
                rendered.append((c < 0, _term_text(abs(c), mono._replace(x=n))))
            elif n == 0:
                rendered.append((False, _joined_terms(entries)))
            else:
                xs = "x" if n == 1 else f"x^{n}"
                rendered.append((False, f"({_joined_terms(entries)})*{xs}"))
        pieces = []
        for i, (negative, text) in enumerate(rendered):
            if i == 0:
                pieces.append(f"-{text}" if negative else text)
            else:
                pieces.append(f" - {text}" if negative else f" + {text}")
        return "".join(pieces)

    def to_json_terms(self) -> list[dict]:
        """JSON-ready term list in ascending graded lexicographic order."""
        ordered = sorted(self.terms.items(), key=lambda item: item[0].grlex_key())
        return [{"exponents": m.exponents(), "coefficient": c} for m, c in ordered]

    @classmethod
    def from_json_terms(cls, x_bound: int, data: Iterable[Mapping]) -> "TruncatedSeries":
        terms: Terms = {}
        for entry in data:
            mono = Monomial.from_exponents(entry["exponents"])
            _add_term(terms, mono, int(entry["coefficient"]))
        return cls(x_bound, terms)


def _monomial_text(mono: Monomial, include_x: bool = True) -> str:
    parts = []
    for var in ("y", "z", "q"):
        e = getattr(mono, var)
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    if include_x and mono.x:
        parts.append("x" if mono.x == 1 else f"x^{mono.x}")
    return "*".join(parts)


def _term_text(coeff: int, mono: Monomial, include_x: bool = True) -> str:
    body = _monomial_text(mono, include_x)
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    return f"{coeff}*{body}"


def _joined_terms(entries: list[tuple[Monomial, int]]) -> str:
    pieces = []
    for i, (mono, c) in enumerate(entries):
        text = _term_text(abs(c), mono, include_x=False)
        if i == 0:
            pieces.append(f"-{text}" if c < 0 else text)
        else:
            pieces.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(pieces)


@dataclass(frozen=True, eq=True)
class RationalGF:
    """Ratio of two integer polynomials whose denominator has constant term 1."""

    numerator: Terms
    denominator: Terms

    def __post_init__(self):
        object.__setattr__(self, "numerator", {m: c for m, c in self.numerator.items() if c})
        object.__setattr__(self, "denominator", {m: c for m, c in self.denominator.items() if c})
        if self.denominator.get(UNIT, 0) != 1:
            raise ValueError("denominator constant term must be 1")

    def expand(self, x_bound: int) -> TruncatedSeries:
        return expand_rational(self, x_bound)


def _x_layers(terms: Terms) -> dict[int, Terms]:
    layers: dict[int, Terms] = {}
    for mono, c in terms.items():
        layers.setdefault(mono.x, {})[mono._replace(x=0)] = c
    return layers


def expand_rational(gf: RationalGF, x_bound: int) -> TruncatedSeries:
    """Power-series expansion of ``gf`` in x, exact through x^x_bound.

    Requires every non-constant denominator term to have positive
    x-degree, so that coefficient extraction proceeds layer by layer; the
    result is verified by re-multiplication before it is returned.
    """
    if x_bound < 0:
        raise ValueError(f"x_bound must be >= 0, got {x_bound}")
    den_layers = _x_layers(gf.denominator)
    if den_layers.get(0) != {UNIT: 1}:
        raise ValueError(
            "denominator must be 1 plus terms of positive x-degree to expand by x"
        )
    num_layers = _x_layers(gf.numerator)
    max_shift = max(den_layers)

    layers: list[Terms] = []
    for n in range(x_bound + 1):
        layer = dict(num_layers.get(n, {}))
        for k in range(1, min(n, max_shift) + 1):
            dk = den_layers.get(k)
            if not dk:
                continue
            for m1, c1 in dk.items():
                for m2, c2 in layers[n - k].items():
                    _add_term(layer, m1.times(m2), -c1 * c2)
        layers.append(layer)

    terms: Terms = {}
    for n, layer in enumerate(layers):
        for mono, c in layer.items():
            terms[mono._replace(x=n)] = c
    series = TruncatedSeries(x_bound, terms)

    product = series * TruncatedSeries(x_bound, gf.denominator)
    if product != TruncatedSeries(x_bound, gf.numerator):
        raise ArithmeticError("expansion failed the re-multiplication check")
    return series


def closed_form_F(p: int) -> RationalGF:
    """Rational form of the joint (length, area, semi-perimeter) series.

    Built from the column decomposition: a reset column of height p after
    a column of height j costs x y^p z^(p+1-j), and a descending run from
    p down to i contributes x^(p-i+1) y^((p+i)(p-i+1)/2) z^(2p-i+1) when
    it ends the polyomino.
    """
    validate_alphabet(p)
    denominator: Terms = {UNIT: 1}
    _add_term(denominator, Monomial(x=1, y=p, z=1), -1)
    for i in range(1, p):
        _add_term(
            denominator,
            Monomial(x=p - i + 1, y=(p + i) * (p - i + 1) // 2, z=2 * p - 2 * i + 1),
            -1,
        )
    numerator = dict(denominator)
    for i in range(1, p + 1):
        _add_term(
            numerator,
            Monomial(x=p - i + 1, y=(p + i) * (p - i + 1) // 2, z=2 * p - i + 1),
            1,
        )
    return RationalGF(numerator, denominator)


def closed_form_G(p: int) -> RationalGF:
    """Rational form of the joint (length, inner points) series."""
    validate_alphabet(p)
    denominator: Terms = {UNIT: 1}
    for i in range(1, p + 1):
        tail = (p - i) * (p + i - 3)
        _add_term(denominator, Monomial(x=p - i + 1, q=(tail + 2 * (i - 1)) // 2), -1)
    numerator = dict(denominator)
    for i in range(1, p + 1):
        _add_term(numerator, Monomial(x=p - i + 1, q=(p - i) * (p + i - 3) // 2), 1)
    return RationalGF(numerator, denominator)


def series_F_dp(p: int, x_bound: int) -> TruncatedSeries:
    """Joint (length, area, semi-perimeter) series by column transfer.

    Maintains, per height i of the last column, the series of polyominoes
    ending at that height, and extends one column at a time: a descent to
    height i multiplies by x y^i z, a reset to height p after height j by
    x y^p z^(p+1-j).  Must agree with expanding ``closed_form_F`` exactly.
    """
    validate_alphabet(p)
    if x_bound < 0:
        raise ValueError(f"x_bound must be >= 0, got {x_bound}")
    total: Terms = {UNIT: 1}
    state: dict[int, Terms] = {i: {} for i in range(1, p + 1)}
    state[p] = {Monomial(x=1, y=p, z=p + 1): 1}
    for length in range(1, x_bound + 1):
        if length > 1:
            new: dict[int, Terms] = {}
            for i in range(1, p):
                step = Monomial(x=1, y=i, z=1)
                new[i] = {m.times(step): c for m, c in state[i + 1].items()}
            top: Terms = {}
            for j in range(1, p + 1):
                step = Monomial(x=1, y=p, z=p + 1 - j)
                for mono, c in state[j].items():
                    _add_term(top, mono.times(step), c)
            new[p] = top
            state = new
        for poly in state.values():
            for mono, c in poly.items():
                _add_term(total, mono, c)
    return TruncatedSeries(x_bound, total)


def series_G_dp(p: int, x_bound: int) -> TruncatedSeries:
    """Joint (length, inner points) series by the same column transfer.

    A new column of height i after a column of height j creates
    min(i, j) - 1 inner points, so descents to height i mark q^(i-1) and
    resets after height j mark q^(j-1).
    """
    validate_alphabet(p)
    if x_bound < 0:
        raise ValueError(f"x_bound must be >= 0, got {x_bound}")
    total: Terms = {UNIT: 1}
    state: dict[int, Terms] = {i: {} for i in range(1, p + 1)}
    state[p] = {Monomial(x=1): 1}
    for length in range(1, x_bound + 1):
        if length > 1:
            new: dict[int, Terms] = {}
            for i in range(1, p):
                step = Monomial(x=1, q=i - 1)
                new[i] = {m.times(step): c for m, c in state[i + 1].items()}
            top: Terms = {}
            for j in range(1, p + 1):
                step = Monomial(x=1, q=j - 1)
                for mono, c in state[j].items():
                    _add_term(top, mono.times(step), c)
            new[p] = top
            state = new
        for poly in state.values():
            for mono, c in poly.items():
                _add_term(total, mono, c)
    return TruncatedSeries(x_bound, total)


def gf_total_area(p: int) -> RationalGF:
    """Generating function whose x^n coefficient is the total area over length-n words.

    The displayed closed form carries a global factor 1/2; the numerator
    coefficients i(2p - i + 1) are always even, so the factor clears into
    exact integers here.
    """
    validate_alphabet(p)
    numerator = _x_poly({i: i * (2 * p - i + 1) // 2 for i in range(1, p + 1)})
    base = _x_poly({0: 1, **{i: -1 for i in range(1, p + 1)}})
    return RationalGF(numerator, _poly_mul(base, base))


def gf_total_sper(p: int) -> RationalGF:
    """Generating function for the total semi-perimeter over length-n words."""
    validate_alphabet(p)
    one_minus_x = _x_poly({0: 1, 1: -1})
    first: Terms = {}
    for k, c in ((0, 1), (1, -2), (p, -2), (p + 1, 3)):
        _add_term(first, Monomial(x=k), c)
    t1 = _poly_scale(_poly_mul(_poly_mul(one_minus_x, _x_poly({1: 1})), first), p)
    second: Terms = {}
    for k, c in ((0, -1), (1, 1), (2, -1), (p + 2, 1)):
        _add_term(second, Monomial(x=k), c)
    t2 = _poly_mul(_x_poly({1: 1, p + 1: -1}), second)
    numerator = _poly_add(t1, t2, sign=-1)
    core = _x_poly({0: 1, 1: -2, p + 1: 1})
    denominator = _poly_mul(one_minus_x, _poly_mul(core, core))
    return RationalGF(numerator, denominator)


def gf_total_inner(p: int) -> RationalGF:
    """Generating function for the total number of inner points over length-n words.

    As with the total area, the displayed form has a factor 1/2 and a
    denominator written with a (x - 1) factor; both are normalized away
    so that numerator and denominator are integer polynomials with
    denominator constant term 1.
    """
    validate_alphabet(p)
    raw: dict[int, int] = {}
    for k, c in (
        (1, 6 - 4 * p),
        (2, -(2 - 4 * p)),
        (p, -(3 - p) * p),
        (p + 1, -2 * (2 - p) ** 2),
        (p + 2, 2 - 5 * p + p * p),
        (2 * p + 1, 2),
    ):
        raw[k] = raw.get(k, 0) + c
    if any(c % 2 for c in raw.values()):
        raise AssertionError("inner-point numerator coefficients must be even")
    numerator = _x_poly({k + 1: -c // 2 for k, c in raw.items()})
    one_minus_x = _x_poly({0: 1, 1: -1})
    core = _x_poly({0: 1, 1: -2, p + 1: 1})
    denominator = _poly_mul(one_minus_x, _poly_mul(core, core))
    return RationalGF(numerator, denominator)


def parts_set(p: int) -> tuple[int, ...]:
    """The p distinct block sums p + (p-1) + ... + i, in ascending order."""
    validate_alphabet(p)
    return tuple((p + i) * (p - i + 1) // 2 for i in range(p, 0, -1))


def gf_area_counts(p: int) -> RationalGF:
    """Generating function (in y) counting words by area.

    The y^n coefficient counts the words of digit sum n, equivalently the
    compositions of n with parts in ``parts_set(p)``.  Because the
    denominator has y-degree terms at x-degree 0, this one is expanded by
    the integer recurrence (``area_count_sequence``), not by
    ``expand_rational``.
    """
    denominator: Terms = {UNIT: 1}
    for part in parts_set(p):
        _add_term(denominator, Monomial(y=part), -1)
    return RationalGF({UNIT: 1}, denominator)


def area_count_sequence(p: int, max_area: int) -> list[int]:
    """Counts of words by area for areas 0 .. max_area, by the parts recurrence."""
    if max_area < 0:
        raise ValueError(f"max_area must be >= 0, got {max_area}")
    parts = parts_set(p)
    counts = [1] + [0] * max_area
    for n in range(1, max_area + 1):
        counts[n] = sum(counts[n - part] for part in parts if part <= n)
    return counts


def total_area_sequence(p: int, n_max: int) -> list[int]:
    """Total area over all words of length n, for n = 0 .. n_max."""
    return expand_rational(gf_total_area(p), n_max).univariate_coefficients()


def total_sper_sequence(p: int, n_max: int) -> list[int]:
    """Total semi-perimeter over all words of length n, for n = 0 .. n_max."""
    return expand_rational(gf_total_sper(p), n_max).univariate_coefficients()


def total_inner_sequence(p: int, n_max: int) -> list[int]:
    """Total inner points over all words of length n, for n = 0 .. n_max."""
    return expand_rational(gf_total_inner(p), n_max).univariate_coefficients()
