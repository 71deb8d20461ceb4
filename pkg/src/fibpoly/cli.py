"""Command-line interface.

Commands: count, words, stats, series, tables, biject, verify, render.
All output is deterministic; JSON output (where offered) validates against
the schema shipped in ``schemas/cli_output.schema.json``.

Exit codes: 0 success, 2 invalid input, 3 verification failure,
4 enumeration cap exceeded.  The default cap of 10^7 words can be raised
or lowered with --max-words or the FIBPOLY_MAX_WORDS environment variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources

from . import bijections, geometry, oracle, reference, series, words
from .words import DEFAULT_WORD_CAP, EnumerationCapError, FibWord

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VERIFY_FAILED = 3
EXIT_RESOURCE = 4

CAP_ENV_VAR = "FIBPOLY_MAX_WORDS"

SERIES_KINDS = {
    "F": "joint length/area/semi-perimeter series in x, y, z",
    "G": "joint length/inner-point series in x, q",
    "A": "total area by length (series in x)",
    "S": "total semi-perimeter by length (series in x)",
    "I": "total inner points by length (series in x)",
    "D": "word count by area (series in y)",
}


def output_schema() -> dict:
    """The JSON schema that every JSON output of this CLI conforms to."""
    path = resources.files("fibpoly").joinpath("schemas/cli_output.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _resolve_cap(args: argparse.Namespace) -> int:
    flag = getattr(args, "max_words", None)
    if flag is not None:
        if flag < 1:
            raise ValueError("--max-words must be >= 1")
        return flag
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from None
        if cap < 1:
            raise ValueError(f"{CAP_ENV_VAR} must be >= 1, got {cap}")
        return cap
    return DEFAULT_WORD_CAP


# ---------------------------------------------------------------------------
# command handlers


def cmd_count(args: argparse.Namespace) -> int:
    value = words.count_words(args.p, args.n)
    if args.format == "json":
        _emit_json({"command": "count", "p": args.p, "n": args.n, "count": value})
    else:
        print(value)
    return EXIT_OK


def cmd_words(args: argparse.Namespace) -> int:
    found = words.enumerate_words(args.p, args.n, cap=_resolve_cap(args))
    if args.format == "json":
        _emit_json(
            {
                "command": "words",
                "p": args.p,
                "n": args.n,
                "count": len(found),
                "words": [str(w) for w in found],
            }
        )
    else:
        for w in found:
            print(w)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    word = FibWord.from_text(args.p, args.word)
    report = geometry.pick_report(word)
    _emit_json(
        {
            "command": "stats",
            "p": args.p,
            "word": str(word),
            "area": report.area,
            "sper": report.sper,
            "inn": report.inn,
            "pick_holds": report.pick_holds,
        }
    )
    return EXIT_OK


def _build_series(p: int, kind: str, order: int) -> series.TruncatedSeries:
    if kind == "F":
        return series.expand_rational(series.closed_form_F(p), order)
    if kind == "G":
        return series.expand_rational(series.closed_form_G(p), order)
    if kind == "A":
        return series.expand_rational(series.gf_total_area(p), order)
    if kind == "S":
        return series.expand_rational(series.gf_total_sper(p), order)
    if kind == "I":
        return series.expand_rational(series.gf_total_inner(p), order)
    if kind == "D":
        counts = series.area_count_sequence(p, order)
        terms = {series.Monomial(y=n): c for n, c in enumerate(counts) if c}
        return series.TruncatedSeries(0, terms)
    raise ValueError(f"unknown series kind {kind!r}")


def cmd_series(args: argparse.Namespace) -> int:
    expansion = _build_series(args.p, args.kind, args.order)
    if args.format == "json":
        _emit_json(
            {
                "command": "series",
                "p": args.p,
                "kind": args.kind,
                "order": args.order,
                "terms": expansion.to_json_terms(),
            }
        )
    else:
        print(expansion.to_text())
    return EXIT_OK


def compute_table(which: int, p: int, n_max: int) -> list[int]:
    """Row of the requested summary table for one p, columns n = 1 .. n_max."""
    if which == 1:
        return series.total_area_sequence(p, n_max)[1:]
    if which == 2:
        return series.area_count_sequence(p, n_max)[1:]
    if which == 3:
        return series.total_sper_sequence(p, n_max)[1:]
    if which == 4:
        return series.total_inner_sequence(p, n_max)[1:]
    raise ValueError(f"table number must be 1..4, got {which}")


def table_discrepancies(which: int, rows: dict[int, list[int]]) -> list[dict]:
    """Cells where a computed row disagrees with the published table."""
    published = reference.PUBLISHED_TABLES[which]
    found = []
    for p, values in sorted(rows.items()):
        row = published.get(p)
        if row is None:
            continue
        for n, value in enumerate(values, start=1):
            if n <= len(row) and value != row[n - 1]:
                found.append({"p": p, "n": n, "computed": value, "published": row[n - 1]})
    return found


def cmd_tables(args: argparse.Namespace) -> int:
    if args.pmax < 2:
        raise ValueError("--pmax must be >= 2")
    if args.nmax < 1:
        raise ValueError("--nmax must be >= 1")
    rows = {p: compute_table(args.which, p, args.nmax) for p in range(2, args.pmax + 1)}
    discrepancies = table_discrepancies(args.which, rows)
    if args.format == "json":
        _emit_json(
            {
                "command": "tables",
                "which": args.which,
                "title": reference.TABLE_TITLES[args.which],
                "pmax": args.pmax,
                "nmax": args.nmax,
                "rows": [{"p": p, "values": values} for p, values in sorted(rows.items())],
                "discrepancies": discrepancies,
            }
        )
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["p"] + [str(n) for n in range(1, args.nmax + 1)])
        for p, values in sorted(rows.items()):
            writer.writerow([p] + values)
        sys.stdout.write(buffer.getvalue())
        for item in discrepancies:
            print(
                f"# mismatch vs published table {args.which}: p={item['p']} n={item['n']} "
                f"computed={item['computed']} published={item['published']}"
            )
    return EXIT_OK


def _parse_biject_source(args: argparse.Namespace) -> tuple[str, str, FibWord]:
    given = [
        (kind, value)
        for kind, value in (
            ("word", args.word),
            ("composition", args.composition),
            ("binary", args.binary),
        )
        if value is not None
    ]
    if len(given) != 1:
        raise ValueError("provide exactly one of --word, --composition, --binary")
    kind, value = given[0]
    if kind == "word":
        return kind, value, FibWord.from_text(args.p, value)
    if kind == "composition":
        parts = tuple(int(part) for part in value.split(",")) if value.strip() else ()
        return kind, value, bijections.composition_to_word(bijections.Composition(args.p, parts))
    bits = tuple(int(ch) for ch in value.strip())
    return kind, value, bijections.binary_to_word(bijections.BinaryWord(args.p, bits))


def cmd_biject(args: argparse.Namespace) -> int:
    from_kind, from_value, word = _parse_biject_source(args)
    if args.to == "word":
        converted = str(word)
    elif args.to == "composition":
        converted = str(bijections.word_to_composition(word))
    else:
        converted = str(bijections.word_to_binary(word))
    if args.format == "json":
        _emit_json(
            {
                "command": "biject",
                "p": args.p,
                "from_kind": from_kind,
                "from_value": from_value,
                "to_kind": args.to,
                "value": converted,
            }
        )
    else:
        print(converted)
    return EXIT_OK


def render_svg(word: FibWord, cell: int = 24) -> str:
    """Self-contained SVG drawing of the bargraph, one rect per unit cell."""
    n = len(word)
    height = max(word.digits) if word.digits else 0
    width_px, height_px = n * cell, height * cell
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width_px}" height="{height_px}" viewBox="0 0 {width_px} {height_px}">'
    ]
    for i, h in enumerate(word.digits, start=1):
        for j in range(1, h + 1):
            x = (i - 1) * cell
            y = (height - j) * cell
            lines.append(
                f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                'fill="#8fbc8f" stroke="#333333" stroke-width="1"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines)


def cmd_render(args: argparse.Namespace) -> int:
    word = FibWord.from_text(args.p, args.word)
    if args.format == "svg":
        print(render_svg(word))
    else:
        drawing = geometry.render_ascii(word, glyph=args.glyph)
        if drawing:
            print(drawing)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def run_verification(p: int, n_max: int, cap: int | None = None) -> list[CheckResult]:
    """Cross-check every computation path for one alphabet bound.

    Covers the per-word and aggregate lattice-point identities, equality
    of the transfer recurrence with the expanded closed forms, the
    specializations that recover plain word counts, the lattice oracle,
    both bijection roundtrips, and the area-count recurrence.
    """
    checks: list[CheckResult] = []
    words_by_n = {n: words.enumerate_words(p, n, cap=cap) for n in range(n_max + 1)}
    total_words = sum(len(ws) for ws in words_by_n.values())

    bad_pick = sum(
        1
        for n in range(1, n_max + 1)
        for w in words_by_n[n]
        if not geometry.pick_report(w).pick_holds
    )
    checks.append(
        CheckResult(
            "pick-identity-per-word",
            bad_pick == 0,
            f"{total_words} words with n <= {n_max}, {bad_pick} violations",
        )
    )

    aggregates = [geometry.aggregate_stats(p, n, cap=cap) for n in range(1, n_max + 1)]
    agg_ok = all(st.identity_holds and st.count == words.count_words(p, st.n) for st in aggregates)
    last = aggregates[-1]
    checks.append(
        CheckResult(
            "aggregate-identity",
            agg_ok,
            f"n={last.n}: {last.count} = {last.total_inner} + {last.total_sper}"
            f" - {last.total_area}",
        )
    )

    area_seq = series.total_area_sequence(p, n_max)
    sper_seq = series.total_sper_sequence(p, n_max)
    inner_seq = series.total_inner_sequence(p, n_max)
    series_vs_sums = all(
        (st.total_area, st.total_sper, st.total_inner)
        == (area_seq[st.n], sper_seq[st.n], inner_seq[st.n])
        for st in aggregates
    )
    checks.append(
        CheckResult(
            "totals-vs-series",
            series_vs_sums,
            f"three total series against enumerated sums, n <= {n_max}",
        )
    )

    dp_f = series.series_F_dp(p, n_max)
    dp_g = series.series_G_dp(p, n_max)
    closed_f = series.expand_rational(series.closed_form_F(p), n_max)
    closed_g = series.expand_rational(series.closed_form_G(p), n_max)
    checks.append(
        CheckResult(
            "transfer-vs-closed-form",
            dp_f == closed_f and dp_g == closed_g,
            f"both joint series through x^{n_max}",
        )
    )

    expected_counts = [words.count_words(p, n) for n in range(n_max + 1)]
    f_counts = dp_f.substitute_one("y", "z").univariate_coefficients()
    g_counts = dp_g.substitute_one("q").univariate_coefficients()
    checks.append(
        CheckResult(
            "count-specialization",
            f_counts == expected_counts and g_counts == expected_counts,
            f"y=z=1 and q=1 recover word counts, n <= {n_max}",
        )
    )

    lattice_bad = sum(
        1
        for n in range(1, n_max + 1)
        for w in words_by_n[n]
        if oracle.lattice_stats(w) != geometry.pick_report(w)
    )
    checks.append(
        CheckResult(
            "lattice-oracle",
            lattice_bad == 0,
            f"cell-set statistics vs closed forms on {total_words - 1} words",
        )
    )

    oracle_ok = oracle.brute_force_generating_series(
        p, n_max, "area_sper", cap=cap
    ) == dp_f and oracle.brute_force_generating_series(p, n_max, "inner", cap=cap) == dp_g
    checks.append(
        CheckResult("oracle-series", oracle_ok, f"word-by-word series through x^{n_max}")
    )

    comp_bad = sum(
        1
        for n in range(n_max + 1)
        for w in words_by_n[n]
        if bijections.composition_to_word(bijections.word_to_composition(w)) != w
        or bijections.word_to_composition(w).total() != geometry.area(w)
    )
    checks.append(
        CheckResult(
            "composition-roundtrip",
            comp_bad == 0,
            f"block splitting inverts on {total_words} words",
        )
    )

    binary_bad = sum(
        1
        for n in range(1, n_max + 1)
        for w in words_by_n[n]
        if bijections.binary_to_word(bijections.word_to_binary(w)) != w
    )
    checks.append(
        CheckResult(
            "binary-roundtrip",
            binary_bad == 0,
            f"transition encoding inverts on {total_words - 1} words",
        )
    )

    max_area = min(30, p * n_max)
    counted = oracle.brute_force_area_distribution(p, max_area, cap=cap)
    checks.append(
        CheckResult(
            "area-distribution",
            counted == series.area_count_sequence(p, max_area),
            f"parts recurrence vs pruned search, area <= {max_area}",
        )
    )

    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    if args.nmax < 1:
        raise ValueError("--nmax must be >= 1")
    checks = run_verification(args.p, args.nmax, cap=_resolve_cap(args))
    all_passed = all(check.passed for check in checks)
    if args.format == "json":
        _emit_json(
            {
                "command": "verify",
                "p": args.p,
                "nmax": args.nmax,
                "all_passed": all_passed,
                "checks": [
                    {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
                ],
            }
        )
    else:
        for check in checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"{status}  {check.name:<24} {check.detail}")
        print(f"{'PASS' if all_passed else 'FAIL'}  overall")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibpoly",
        description="Enumerate p-Fibonacci words and compute exact statistics "
        "of their bargraph polyominoes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_p(sp, required=True):
        sp.add_argument("--p", type=int, required=required, help="alphabet bound (>= 1)")

    def add_cap(sp):
        sp.add_argument(
            "--max-words",
            type=int,
            default=None,
            help=f"enumeration cap (default {DEFAULT_WORD_CAP}, env {CAP_ENV_VAR})",
        )

    sp = sub.add_parser("count", help="number of words of a given length")
    add_p(sp)
    sp.add_argument("--n", type=int, required=True, help="word length (>= 0)")
    sp.add_argument("--format", choices=["plain", "json"], default="plain")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("words", help="list all words of a given length")
    add_p(sp)
    sp.add_argument("--n", type=int, required=True, help="word length (>= 0)")
    sp.add_argument("--format", choices=["plain", "json"], default="plain")
    add_cap(sp)
    sp.set_defaults(func=cmd_words)

    sp = sub.add_parser("stats", help="area, semi-perimeter and inner points of one word")
    add_p(sp)
    sp.add_argument("--word", required=True, help="digit string, e.g. 32321")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("series", help="expand a generating function")
    add_p(sp)
    sp.add_argument("--kind", choices=sorted(SERIES_KINDS), required=True,
                    help="; ".join(f"{k}: {v}" for k, v in SERIES_KINDS.items()))
    sp.add_argument("--order", type=int, required=True, help="expansion order (>= 0)")
    sp.add_argument("--format", choices=["plain", "json"], default="plain")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("tables", help="reproduce a summary table")
    sp.add_argument("--which", type=int, choices=[1, 2, 3, 4], required=True)
    sp.add_argument("--pmax", type=int, default=5)
    sp.add_argument("--nmax", type=int, default=10)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("biject", help="convert between word, composition and binary forms")
    add_p(sp)
    sp.add_argument("--word", default=None)
    sp.add_argument("--composition", default=None, help="comma-separated parts, e.g. 6,5")
    sp.add_argument("--binary", default=None, help="bit string, e.g. 1010")
    sp.add_argument("--to", choices=["word", "composition", "binary"], required=True)
    sp.add_argument("--format", choices=["plain", "json"], default="plain")
    sp.set_defaults(func=cmd_biject)

    sp = sub.add_parser("verify", help="run all cross-checks for one alphabet bound")
    add_p(sp)
    sp.add_argument("--nmax", type=int, required=True, help="largest word length checked")
    sp.add_argument("--format", choices=["plain", "json"], default="plain")
    add_cap(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", help="draw the bargraph of one word")
    add_p(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    sp.add_argument("--glyph", default="#", help="cell character for ascii output")
    sp.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"fibpoly: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"fibpoly: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry() -> None:
    sys.exit(main())
