"""Saddle-point asymptotics for restricted-partition densities.

For a power-law spectrum e_m = m^s with at most k particles per state, the
grand-canonical entropy S(beta) = beta*E + ln Z evaluates, after
Euler-Maclaurin summation at small beta, to

    S(beta) = beta*E + alpha*C(s) / beta^(1/s)
              - ln[1 - exp(-(k+1) beta)] / 2 + ln[1 - exp(-beta)] / 2

with alpha = 1 - (k+1)^(-1/s) and C(s) = Gamma(1+1/s) * zeta(1+1/s).  The
unbounded cap is a separate branch, not k = infinity plugged in: there a
single series is summed instead of a difference of two, so the constant
-(s/2) ln(2 pi) survives and only one half-log term remains.  That constant
is exactly what fixes the prefactor of the unrestricted-partition formula.

Setting the leading part of S' to zero gives the closed-form saddle

    beta0 = kappa * E^(-s/(s+1)),    kappa = (alpha*C(s)/s)^(s/(1+s)),

and the Gaussian approximation rho(E) = exp(S(beta0)) / sqrt(2 pi S''(beta0))
with S'' = ((s+1)/s) * E^((2s+1)/(s+1)) / kappa yields the three density
formulas below.  Identified with integer energy E = n, rho approximates
p_k^s(n).

The cap-dependent exponential may be kept under the root (``density_full``,
which interpolates between the k = 1 and unbounded regimes but overshoots at
finite n) or linearized away (``density_finite_k``, more accurate at small
k).  The O(beta) energy-shift constant in S is dropped throughout.  Only the
saddle on the real axis is used.

Everything here is a pure function of its arguments and thread-safe.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .multiplicity import UNBOUNDED, Cap, is_unbounded, validate_cap
from .specialfn import capital_c

__all__ = [
    "StatWeight",
    "SaddleData",
    "DensityEstimate",
    "Formula",
    "alpha",
    "kappa",
    "saddle",
    "entropy",
    "entropy_leading",
    "density_full",
    "density_finite_k",
    "density_bosonic",
    "closed_form_distinct",
    "closed_form_hr",
]


@dataclass(frozen=True)
class StatWeight:
    """Statistics of the counting problem: power s (any real > 0) and cap k."""

    s: float
    k: Cap

    def __post_init__(self):
        if not isinstance(self.s, (int, float)) or isinstance(self.s, bool):
            raise ValueError(f"power s must be a real number, got {self.s!r}")
        if not math.isfinite(self.s) or self.s <= 0.0:
            raise ValueError(f"power s must be finite and > 0, got {self.s}")
        validate_cap(self.k)


class Formula(str, Enum):
    """Which expression produced a density estimate."""

    FULL_GENTILE = "FullGentile"
    FINITE_K = "FiniteK"
    BOSONIC = "Bosonic"
    CLOSED_FORM_DISTINCT = "ClosedFormDistinct"
    CLOSED_FORM_HR = "ClosedFormHR"


@dataclass(frozen=True)
class DensityEstimate:
    """A smooth density-of-states value at integer energy E = n, plus its source."""

    value: float
    formula: Formula


@dataclass(frozen=True)
class SaddleData:
    """Derived saddle-point quantities for one (s, k, E)."""

    alpha: float
    c_of_s: float
    kappa: float
    beta0: float
    energy: float
    entropy_at_saddle: float
    s_dd_at_saddle: float


def alpha(w: StatWeight) -> float:
    """alpha = 1 - (k+1)^(-1/s); 1 exactly for an unbounded cap."""
    if is_unbounded(w.k):
        return 1.0
    return 1.0 - (w.k + 1.0) ** (-1.0 / w.s)


def kappa(w: StatWeight) -> float:
    """kappa = (alpha * C(s) / s)^(s/(1+s)), the saddle scale."""
    return (alpha(w) * capital_c(w.s) / w.s) ** (w.s / (1.0 + w.s))


def entropy_leading(w: StatWeight, beta: float, energy: float) -> float:
    """The two leading entropy terms beta*E + alpha*C(s)/beta^(1/s).

    This is the part whose stationary point defines beta0; grid scans of it
    recover the closed-form saddle exactly.
    """
    if not math.isfinite(beta) or beta <= 0.0:
        raise ValueError(f"beta must be finite and > 0, got {beta!r}")
    if not math.isfinite(energy) or energy < 0.0:
        raise ValueError(f"energy must be finite and >= 0, got {energy!r}")
    return beta * energy + alpha(w) * capital_c(w.s) / beta ** (1.0 / w.s)


def entropy(w: StatWeight, beta: float, energy: float) -> float:
    """Entropy S(beta) at inverse temperature beta and energy E.

    Finite cap:    leading terms - ln[1-exp(-(k+1)beta)]/2 + ln[1-exp(-beta)]/2.
    Unbounded cap: leading terms + ln[1-exp(-beta)]/2 - (s/2) ln(2 pi).

    E = 0 is allowed (the beta*E term just vanishes).
    """
    lead = entropy_leading(w, beta, energy)
    half_log = 0.5 * math.log(-math.expm1(-beta))
    if is_unbounded(w.k):
        return lead + half_log - 0.5 * w.s * math.log(2.0 * math.pi)
    return lead - 0.5 * math.log(-math.expm1(-(w.k + 1.0) * beta)) + half_log


def saddle(w: StatWeight, energy: float) -> SaddleData:
    """Closed-form saddle point and curvature at the given energy.

    beta0 = kappa * E^(-s/(s+1)) (no root-finding needed), and the second
    derivative of the leading entropy at beta0 is
    S'' = ((s+1)/s) * E^((2s+1)/(s+1)) / kappa.
    """
    if not math.isfinite(energy) or energy <= 0.0:
        raise ValueError(f"energy must be finite and > 0, got {energy!r}")
    a = alpha(w)
    c = capital_c(w.s)
    s = w.s
    kap = (a * c / s) ** (s / (1.0 + s))
    beta0 = kap * energy ** (-s / (s + 1.0))
    s_dd = (s + 1.0) / s / kap * energy ** ((2.0 * s + 1.0) / (s + 1.0))
    return SaddleData(
        alpha=a,
        c_of_s=c,
        kappa=kap,
        beta0=beta0,
        energy=energy,
        entropy_at_saddle=entropy(w, beta0, energy),
        s_dd_at_saddle=s_dd,
    )


def _require_energy(energy: float) -> None:
    if not math.isfinite(energy) or energy < 1.0:
        raise ValueError(f"density formulas require E >= 1, got {energy!r}")


def _exp_argument(kap: float, s: float, energy: float) -> float:
    return kap * (s + 1.0) * energy ** (1.0 / (1.0 + s))


def density_full(w: StatWeight, energy: float) -> DensityEstimate:
    """Interpolating density with the cap exponential kept under the root:

        kappa sqrt(s) exp[kappa (s+1) E^(1/(1+s))]
        / sqrt(2 pi (s+1) E^((3s+1)/(s+1)) [1 - exp(-(k+1) kappa E^(-s/(s+1)))])

    Finite caps only; estimates run higher than the exact counts and reach
    them later than ``density_finite_k``.
    """
    if is_unbounded(w.k):
        raise ValueError("unbounded cap: use density_bosonic, not the interpolating form")
    _require_energy(energy)
    s = w.s
    kap = kappa(w)
    bracket = -math.expm1(-(w.k + 1.0) * kap * energy ** (-s / (s + 1.0)))
    value = (
        kap
        * math.sqrt(s)
        * math.exp(_exp_argument(kap, s, energy))
        / math.sqrt(2.0 * math.pi * (s + 1.0) * energy ** ((3.0 * s + 1.0) / (s + 1.0)) * bracket)
    )
    return DensityEstimate(value, Formula.FULL_GENTILE)


def density_finite_k(w: StatWeight, energy: float) -> DensityEstimate:
    """Finite-cap density with the cap exponential linearized:

        sqrt(s kappa) exp[kappa (s+1) E^(1/(1+s))]
        / sqrt(2 pi (s+1) (k+1) E^((2s+1)/(s+1)))

    At s = 1, k = 1 this is exactly the distinct-partition formula.
    """
    if is_unbounded(w.k):
        raise ValueError("unbounded cap: use density_bosonic, not the finite-cap form")
    _require_energy(energy)
    s = w.s
    kap = kappa(w)
    value = (
        math.sqrt(s * kap)
        * math.exp(_exp_argument(kap, s, energy))
        / math.sqrt(2.0 * math.pi * (s + 1.0) * (w.k + 1.0) * energy ** ((2.0 * s + 1.0) / (s + 1.0)))
    )
    return DensityEstimate(value, Formula.FINITE_K)


def density_bosonic(s: float, energy: float) -> DensityEstimate:
    """Unbounded-cap density (alpha = 1 inside kappa):

        kappa sqrt(s) exp[kappa (s+1) E^(1/(1+s))]
        / ((2 pi)^((s+1)/2) sqrt((s+1) E^((3s+1)/(s+1))))

    At s = 1 this is the classic unrestricted-partition asymptotic.
    """
    w = StatWeight(s, UNBOUNDED)
    _require_energy(energy)
    kap = kappa(w)
    value = (
        kap
        * math.sqrt(s)
        * math.exp(_exp_argument(kap, s, energy))
        / ((2.0 * math.pi) ** ((s + 1.0) / 2.0) * math.sqrt((s + 1.0) * energy ** ((3.0 * s + 1.0) / (s + 1.0))))
    )
    return DensityEstimate(value, Formula.BOSONIC)


def closed_form_distinct(energy: float) -> DensityEstimate:
    """exp(pi sqrt(E/3)) / (4 * 3^(1/4) * E^(3/4)): distinct partitions, s=1, k=1.

    Kept as an independent expression so the general finite-cap formula can
    be tested against it.
    """
    _require_energy(energy)
    value = math.exp(math.pi * math.sqrt(energy / 3.0)) / (4.0 * 3.0**0.25 * energy**0.75)
    return DensityEstimate(value, Formula.CLOSED_FORM_DISTINCT)


def closed_form_hr(energy: float) -> DensityEstimate:
    """exp(pi sqrt(2E/3)) / (4 sqrt(3) E): unrestricted partitions, s=1.

    Independent expression for testing the bosonic formula's prefactor chain.
    """
    _require_energy(energy)
    value = math.exp(math.pi * math.sqrt(2.0 * energy / 3.0)) / (4.0 * math.sqrt(3.0) * energy)
    return DensityEstimate(value, Formula.CLOSED_FORM_HR)
