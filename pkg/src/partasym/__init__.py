"""Exact restricted-partition counts and their saddle-point asymptotics.

p_k^s(n) counts partitions of n into s-th powers of positive integers with
each power used at most k times; the cap interpolates between distinct
partitions (k = 1) and unrestricted partitions (k unbounded).  ``exact``
computes the counts with big-integer dynamic programming plus independent
cross-check oracles; ``asymptotics`` evaluates the matching saddle-point
density formulas; ``cli``/``harness`` compare the two and emit data tables
and figures.
"""

from .asymptotics import (
    DensityEstimate,
    Formula,
    SaddleData,
    StatWeight,
    alpha,
    closed_form_distinct,
    closed_form_hr,
    density_bosonic,
    density_finite_k,
    density_full,
    entropy,
    entropy_leading,
    kappa,
    saddle,
)
from .exact import (
    ENUMERATION_LIMIT,
    CountTable,
    PartitionSpec,
    count,
    count_table,
    count_table_for_parts,
    oracle_enumerate,
    oracle_pentagonal,
    oracle_product,
)
from .harness import ComparisonRow, UsageError, compare_rows, sweep_rows
from .multiplicity import UNBOUNDED, Cap, cap_label, is_unbounded, parse_cap
from .specialfn import bernoulli_numbers, bernoulli_series_constant, capital_c, gamma, zeta

__version__ = "0.1.0"

__all__ = [
    "ENUMERATION_LIMIT",
    "UNBOUNDED",
    "Cap",
    "ComparisonRow",
    "CountTable",
    "DensityEstimate",
    "Formula",
    "PartitionSpec",
    "SaddleData",
    "StatWeight",
    "UsageError",
    "alpha",
    "bernoulli_numbers",
    "bernoulli_series_constant",
    "capital_c",
    "cap_label",
    "closed_form_distinct",
    "closed_form_hr",
    "compare_rows",
    "count",
    "count_table",
    "count_table_for_parts",
    "density_bosonic",
    "density_finite_k",
    "density_full",
    "entropy",
    "entropy_leading",
    "gamma",
    "is_unbounded",
    "kappa",
    "oracle_enumerate",
    "oracle_pentagonal",
    "oracle_product",
    "parse_cap",
    "saddle",
    "sweep_rows",
    "zeta",
    "__version__",
]
