"""Exact-vs-asymptotic comparison rows and their serialization.

One ComparisonRow per n: the exact count, the estimate from the selected
formula, the interpolating-form value for finite caps, and the relative
error.  Output formatting is deterministic: exact counts in full decimal,
estimates in scientific notation with 10 significant digits, relative errors
with 6 decimals, '.' decimal separator, LF line endings, no timestamps.
"""

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import asymptotics, exact
from .multiplicity import Cap, cap_label, is_unbounded

__all__ = [
    "ESTIMATOR_CHOICES",
    "UsageError",
    "ComparisonRow",
    "estimator",
    "validate_estimator",
    "compare_rows",
    "sweep_rows",
    "format_compare",
    "format_sweep",
    "COMPARE_FIELDS",
    "SWEEP_FIELDS",
]

ESTIMATOR_CHOICES = ("eq20", "eq21", "eq23", "auto")

COMPARE_FIELDS = ("n", "exact", "estimate", "rel_err")
SWEEP_FIELDS = ("k", "n", "exact", "est_eq21", "est_eq20", "rel_err")


class UsageError(Exception):
    """Bad command-line input: wrong flag combination, range, or token."""


@dataclass(frozen=True)
class ComparisonRow:
    """One comparison point.

    ``estimate`` comes from the selected formula (the finite-cap form for
    finite k, the bosonic form for an unbounded cap, unless overridden);
    ``est_full`` is the interpolating form, defined for finite caps only.
    ``rel_err`` is estimate/exact - 1, or None when the exact count is 0.
    """

    k: Cap
    n: int
    exact: int
    estimate: float
    est_full: Optional[float]
    rel_err: Optional[float]


def estimator(name: str, s: float, k: Cap) -> Callable[[float], asymptotics.DensityEstimate]:
    """Evaluator for one (s, k); assumes the token was already validated.

    eq20 -> interpolating form, eq21 -> linearized finite-cap form,
    eq23 -> bosonic form; auto resolves per the cap regime.
    """
    if name == "auto":
        name = "eq23" if is_unbounded(k) else "eq21"
    if name == "eq23":
        return lambda energy: asymptotics.density_bosonic(s, energy)
    w = asymptotics.StatWeight(s, k)
    if name == "eq20":
        return lambda energy: asymptotics.density_full(w, energy)
    return lambda energy: asymptotics.density_finite_k(w, energy)


def validate_estimator(name: str, k: Cap) -> None:
    """Raise UsageError if the estimator token mismatches the cap regime."""
    if name not in ESTIMATOR_CHOICES:
        raise UsageError(f"unknown estimator {name!r}; choose from {', '.join(ESTIMATOR_CHOICES)}")
    if name == "eq23" and not is_unbounded(k):
        raise UsageError("the bosonic estimator (eq23) applies only to k=inf")
    if name in ("eq20", "eq21") and is_unbounded(k):
        raise UsageError(f"estimator {name} needs a finite k; use eq23 (or auto) for k=inf")


def _rel_err(estimate: float, exact_count: int) -> Optional[float]:
    if exact_count == 0:
        return None
    return estimate / exact_count - 1.0


def compare_rows(s: int, k: Cap, n_values: Sequence[int], name: str = "auto") -> "list[ComparisonRow]":
    """Rows for one (s, k) over the given n values (all must be >= 1)."""
    validate_estimator(name, k)
    if not n_values:
        raise UsageError("empty n range")
    if min(n_values) < 1:
        raise UsageError("asymptotic comparison needs n >= 1")
    table = exact.count_table(s, k, max(n_values))
    est = estimator(name, float(s), k)
    include_full = (name in ("auto", "eq21")) and not is_unbounded(k)
    w = asymptotics.StatWeight(float(s), k) if include_full else None
    rows = []
    for n in n_values:
        energy = float(n)
        estimate_value = est(energy).value
        est_full = asymptotics.density_full(w, energy).value if include_full else None
        rows.append(
            ComparisonRow(
                k=k,
                n=n,
                exact=table[n],
                estimate=estimate_value,
                est_full=est_full,
                rel_err=_rel_err(estimate_value, table[n]),
            )
        )
    return rows


def sweep_rows(s: int, ks: Sequence[Cap], n_values: Sequence[int]) -> "list[ComparisonRow]":
    """Long-format rows: one series per cap, each with the default estimator,
    ordered by the caps as given, then n ascending."""
    if not ks:
        raise UsageError("sweep needs at least one k value")
    rows = []
    for k in ks:
        rows.extend(compare_rows(s, k, n_values, "auto"))
    return rows


def fmt_estimate(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.9e}"


def fmt_rel_err(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.6f}"


def _compare_cells(row: ComparisonRow) -> "tuple[str, str, str, str]":
    return (str(row.n), str(row.exact), fmt_estimate(row.estimate), fmt_rel_err(row.rel_err))


def _sweep_cells(row: ComparisonRow) -> "tuple[str, str, str, str, str, str]":
    return (
        cap_label(row.k),
        str(row.n),
        str(row.exact),
        fmt_estimate(row.estimate),
        fmt_estimate(row.est_full),
        fmt_rel_err(row.rel_err),
    )


def _csv(header: Sequence[str], cell_rows: Iterable[Sequence[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(cells) for cells in cell_rows)
    return "\n".join(lines) + "\n"


def _table(header: Sequence[str], cell_rows: "list[Sequence[str]]") -> str:
    widths = [len(h) for h in header]
    for cells in cell_rows:
        widths = [max(w, len(c)) for w, c in zip(widths, cells)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(cells, widths)) for cells in cell_rows)
    return "\n".join(lines) + "\n"


def _compare_json(rows: Sequence[ComparisonRow]) -> str:
    payload = [
        {
            "n": row.n,
            "exact": str(row.exact),
            "estimate": row.estimate,
            "rel_err": row.rel_err,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def _sweep_json(rows: Sequence[ComparisonRow]) -> str:
    payload = [
        {
            "k": cap_label(row.k) if is_unbounded(row.k) else row.k,
            "n": row.n,
            "exact": str(row.exact),
            "est_eq21": row.estimate,
            "est_eq20": row.est_full,
            "rel_err": row.rel_err,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def format_compare(rows: Sequence[ComparisonRow], fmt: str) -> str:
    """Serialize compare rows as 'csv', 'json', or 'table'."""
    if fmt == "json":
        return _compare_json(rows)
    cells = [_compare_cells(row) for row in rows]
    if fmt == "csv":
        return _csv(COMPARE_FIELDS, cells)
    if fmt == "table":
        return _table(COMPARE_FIELDS, cells)
    raise UsageError(f"unknown format {fmt!r}")


def format_sweep(rows: Sequence[ComparisonRow], fmt: str) -> str:
    """Serialize sweep rows as 'csv', 'json', or 'table'."""
    if fmt == "json":
        return _sweep_json(rows)
    cells = [_sweep_cells(row) for row in rows]
    if fmt == "csv":
        return _csv(SWEEP_FIELDS, cells)
    if fmt == "table":
        return _table(SWEEP_FIELDS, cells)
    raise UsageError(f"unknown format {fmt!r}")
