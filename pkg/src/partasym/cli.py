"""Command-line harness.

Subcommands:

* ``count``      exact p_k^s(n), full decimal digits
* ``asymptotic`` one smooth-density estimate per n, tagged with its formula
* ``compare``    exact vs estimate table for one (s, k)
* ``sweep``      multi-k long-format table (one series per cap)
* ``selftest``   oracle-equivalence and identity suites, exit 2 on failure

``compare`` and ``sweep`` emit csv (default), json, or an aligned text table,
to stdout or ``--out PATH``; ``--plot PATH`` additionally renders the run as
a figure next to the data.  Exit codes: 0 success, 1 usage error, 2 selftest
failure.
"""

import argparse
import math
import sys
import time
from typing import Optional, Sequence

from . import asymptotics, exact, harness
from .harness import UsageError
from .multiplicity import UNBOUNDED, Cap, cap_label, is_unbounded, parse_cap

__all__ = ["main", "run", "build_parser", "run_selftest"]


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as UsageError (exit code 1)."""

    def error(self, message):
        raise UsageError(message)


def _parse_n_values(text: str, minimum: int) -> "list[int]":
    """Parse '6', '10..200', or '10..200..5' (inclusive bounds)."""
    pieces = text.split("..")
    try:
        numbers = [int(p) for p in pieces]
    except ValueError:
        raise UsageError(f"bad n value or range {text!r}; use N, A..B, or A..B..STEP") from None
    if len(numbers) == 1:
        values = numbers
    elif len(numbers) == 2:
        values = list(range(numbers[0], numbers[1] + 1))
    elif len(numbers) == 3:
        if numbers[2] < 1:
            raise UsageError("range step must be >= 1")
        values = list(range(numbers[0], numbers[1] + 1, numbers[2]))
    else:
        raise UsageError(f"bad n range {text!r}; use N, A..B, or A..B..STEP")
    if not values:
        raise UsageError(f"empty n range {text!r}")
    if values[0] < minimum:
        raise UsageError(f"n must be >= {minimum} for this command, got {values[0]}")
    return values


def _integer_s(s: float) -> int:
    if not float(s).is_integer() or s < 1:
        raise UsageError(f"exact counting needs an integer s >= 1 (parts are integer powers), got {s}")
    return int(s)


def _real_s(s: float) -> float:
    if not math.isfinite(s) or s <= 0:
        raise UsageError(f"s must be a finite real > 0, got {s}")
    return float(s)


def _cap(text: str) -> Cap:
    try:
        return parse_cap(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cap_list(text: str) -> "list[Cap]":
    return [_cap(piece) for piece in text.split(",") if piece.strip() != ""]


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def cmd_count(args) -> int:
    s = _integer_s(args.s)
    k = _cap(args.k)
    n_values = _parse_n_values(args.n, minimum=0)
    table = exact.count_table(s, k, max(n_values))
    _emit("".join(f"{table[n]}\n" for n in n_values), args.out)
    return 0


def cmd_asymptotic(args) -> int:
    s = _real_s(args.s)
    k = _cap(args.k)
    harness.validate_estimator(args.formula, k)
    n_values = _parse_n_values(args.n, minimum=1)
    estimate = harness.estimator(args.formula, s, k)
    lines = []
    for n in n_values:
        est = estimate(float(n))
        lines.append(f"{est.value:.9e} {est.formula.value}\n")
    _emit("".join(lines), args.out)
    return 0


def cmd_compare(args) -> int:
    s = _integer_s(args.s)
    k = _cap(args.k)
    n_values = _parse_n_values(args.n, minimum=1)
    rows = harness.compare_rows(s, k, n_values, args.formula)
    _emit(harness.format_compare(rows, args.format), args.out)
    if args.plot:
        from . import plots

        plots.render_rows(rows, args.plot, title=f"s={s}, k={cap_label(k)}")
    return 0


def cmd_sweep(args) -> int:
    s = _integer_s(args.s)
    ks = _cap_list(args.k)
    if not ks:
        raise UsageError("sweep needs at least one k value")
    n_values = _parse_n_values(args.n, minimum=1)
    rows = harness.sweep_rows(s, ks, n_values)
    _emit(harness.format_sweep(rows, args.format), args.out)
    if args.plot:
        from . import plots

        plots.render_rows(rows, args.plot, title=f"s={s}")
    return 0


# ----------------------------------------------------------------------
# selftest suites
# ----------------------------------------------------------------------

_SADDLE_GRID_POINTS = 241


def _suite_oracle_equivalence(deep: bool):
    n_max = 200
    caps = (1, 2, 3, 4, UNBOUNDED)
    for s in (1, 2, 3):
        for k in caps:
            dp = exact.count_table(s, k, n_max)
            if not is_unbounded(k):
                prod = exact.oracle_product(s, k, n_max)
                if tuple(dp) != tuple(prod):
                    return False, f"product oracle mismatch at s={s} k={cap_label(k)}"
            elif s == 1:
                pent = exact.oracle_pentagonal(n_max)
                if tuple(dp) != tuple(pent):
                    return False, "pentagonal oracle mismatch at s=1 k=inf"
            for n in range(0, 41):
                if exact.oracle_enumerate(exact.PartitionSpec(s, k, n)) != dp[n]:
                    return False, f"enumeration mismatch at s={s} k={cap_label(k)} n={n}"
    detail = "n<=200, enumeration n<=40"
    if deep:
        deep_max = 2000
        pent = exact.oracle_pentagonal(deep_max)
        for k in caps:
            dp = exact.count_table(1, k, deep_max)
            if is_unbounded(k):
                if tuple(dp) != tuple(pent):
                    return False, "deep pentagonal mismatch at s=1 k=inf"
            else:
                prod = exact.oracle_product(1, k, deep_max)
                if tuple(dp) != tuple(prod):
                    return False, f"deep product mismatch at s=1 k={k}"
        detail += ", deep s=1 n<=2000"
    return True, detail


def _suite_prefactor_identities(_deep: bool):
    for i in range(60):
        energy = 10.0 ** (4.0 * i / 59.0)
        fk = asymptotics.density_finite_k(asymptotics.StatWeight(1.0, 1), energy).value
        cf = asymptotics.closed_form_distinct(energy).value
        if abs(fk / cf - 1.0) > 1e-12:
            return False, f"distinct-form identity off at E={energy:.6g}"
        bos = asymptotics.density_bosonic(1.0, energy).value
        hr = asymptotics.closed_form_hr(energy).value
        if abs(bos / hr - 1.0) > 1e-12:
            return False, f"unrestricted-form identity off at E={energy:.6g}"
    return True, "rel<=1e-12 on log grid E in [1, 1e4]"


def _suite_saturation(_deep: bool):
    pent = exact.oracle_pentagonal(120)
    for n in (5, 10, 25, 60, 120):
        if exact.count_table(1, n, n)[n] != pent[n]:
            return False, f"cap k=n={n} should be inactive"
    return True, "k>=n matches unrestricted counts"


def _suite_monotonicity(_deep: bool):
    n_max = 60
    for s in (1, 2, 3):
        tables = [exact.count_table(s, k, n_max) for k in (1, 2, 3, 4, 5)]
        tables.append(exact.count_table(s, UNBOUNDED, n_max))
        for lower, upper in zip(tables, tables[1:]):
            for n in range(n_max + 1):
                if lower[n] > upper[n]:
                    return False, f"count not monotone in k at s={s} n={n}"
    return True, "p_k <= p_(k+1) for s in 1..3, n<=60"


def _suite_odd_parts(_deep: bool):
    n_max = 200
    distinct = exact.count_table(1, 1, n_max)
    odd = exact.count_table_for_parts(range(1, n_max + 1, 2), UNBOUNDED, n_max)
    if tuple(distinct) != tuple(odd):
        return False, "distinct vs odd-part counts diverge"
    return True, "distinct == odd-part counts, n<=200"


def _suite_saddle_grid(_deep: bool):
    ratio_lo, ratio_hi = 0.25, 4.0
    step = (ratio_hi / ratio_lo) ** (1.0 / (_SADDLE_GRID_POINTS - 1))
    for s in (1.0, 2.0, 3.0):
        for k in (1, 4, UNBOUNDED):
            w = asymptotics.StatWeight(s, k)
            for energy in (1e2, 1e4):
                beta0 = asymptotics.saddle(w, energy).beta0
                grid = [beta0 * ratio_lo * step**i for i in range(_SADDLE_GRID_POINTS)]
                values = [asymptotics.entropy_leading(w, b, energy) for b in grid]
                i_min = values.index(min(values))
                i_beta0 = min(range(len(grid)), key=lambda i: abs(grid[i] - beta0))
                if abs(i_min - i_beta0) > 1:
                    return False, f"saddle scan off at s={s} k={cap_label(k)} E={energy:g}"
    return True, "closed-form saddle minimizes leading entropy"


def _suite_interpolating_dominates(_deep: bool):
    for s in (1.0, 2.0, 3.0):
        for k in (1, 2, 4):
            w = asymptotics.StatWeight(s, k)
            for n in range(1, 201, 7):
                full = asymptotics.density_full(w, float(n)).value
                linear = asymptotics.density_finite_k(w, float(n)).value
                if full < linear:
                    return False, f"interpolating form below linearized at s={s} k={k} n={n}"
    return True, "interpolating form >= linearized form pointwise"


_SELFTEST_SUITES = (
    ("oracle-equivalence", _suite_oracle_equivalence),
    ("prefactor-identity", _suite_prefactor_identities),
    ("saturation", _suite_saturation),
    ("monotonicity-in-k", _suite_monotonicity),
    ("odd-parts-identity", _suite_odd_parts),
    ("saddle-grid", _suite_saddle_grid),
    ("interpolating-dominates", _suite_interpolating_dominates),
)


def run_selftest(deep: bool = False, stream=None) -> int:
    """Run every invariant suite, print one summary line each; 0 iff all pass."""
    stream = stream if stream is not None else sys.stdout
    failed = 0
    for name, suite in _SELFTEST_SUITES:
        start = time.perf_counter()
        ok, detail = suite(deep)
        elapsed = time.perf_counter() - start
        status = "PASS" if ok else "FAIL"
        stream.write(f"{name}: {status} ({detail}) [{elapsed:.2f}s]\n")
        if not ok:
            failed += 1
    return 0 if failed == 0 else 2


def cmd_selftest(args) -> int:
    return run_selftest(deep=args.deep)


# ----------------------------------------------------------------------
# parser wiring
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partasym", description="Restricted-partition counts and their asymptotics.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_formula=False, with_format=False, with_plot=False):
        p.add_argument("--s", type=float, required=True, help="power of the parts")
        p.add_argument("--k", type=str, required=True, help="multiplicity cap: integer or 'inf'")
        p.add_argument("--n", type=str, required=True, help="value or inclusive range N | A..B | A..B..STEP")
        p.add_argument("--out", type=str, default=None, help="write output to PATH instead of stdout")
        if with_formula:
            p.add_argument(
                "--formula",
                choices=harness.ESTIMATOR_CHOICES,
                default="auto",
                help="density estimator (auto: eq21 for finite k, eq23 for inf)",
            )
        if with_format:
            p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
        if with_plot:
            p.add_argument("--plot", type=str, default=None, help="also render a figure to PATH")

    p_count = sub.add_parser("count", help="exact partition counts")
    add_common(p_count)
    p_count.set_defaults(func=cmd_count)

    p_asym = sub.add_parser("asymptotic", help="smooth-density estimates")
    add_common(p_asym, with_formula=True)
    p_asym.set_defaults(func=cmd_asymptotic)

    p_cmp = sub.add_parser("compare", help="exact vs asymptotic for one (s, k)")
    add_common(p_cmp, with_formula=True, with_format=True, with_plot=True)
    p_cmp.set_defaults(func=cmd_compare)

    p_sweep = sub.add_parser("sweep", help="multi-k comparison series (k as comma list)")
    add_common(p_sweep, with_format=True, with_plot=True)
    p_sweep.set_defaults(func=cmd_sweep)

    p_self = sub.add_parser("selftest", help="oracle-equivalence and identity suites")
    p_self.add_argument("--deep", action="store_true", help="extend oracle checks to n<=2000 for s=1")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
