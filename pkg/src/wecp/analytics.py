"""Closed-form branch probabilities, the success-probability series, and sweeps.

Everything here is plain parameter algebra, independent of the state-vector
engine; the protocol layer cross-checks its simulated probabilities against
these expressions.  Powers like alpha^(2^k) are built by repeated squaring of
alpha^2, which keeps the deep-round terms accurate in double precision.
"""
from __future__ import annotations

from dataclasses import dataclass

from .params import WClassParams, recycle_params


@dataclass(frozen=True)
class SeriesTerm:
    """Round-k contribution to the total success probability (N factor included)."""

    k: int
    value: float


@dataclass(frozen=True)
class SweepRow:
    """One (F, n) grid point of a success-probability sweep."""

    F: float
    alpha_sq: float
    n: int
    P: float
    limit: float


@dataclass(frozen=True)
class SweepTable:
    """Sweep rows sorted by (F, n), ready for CSV emission or plotting."""

    n_photons: int
    rows: tuple[SweepRow, ...]


def p_even_formula(p: WClassParams) -> float:
    """Probability of the even-parity (immediate success) branch of one round."""
    a2, b2 = p.alpha_sq, p.beta_sq
    return p.n_photons * a2 * b2 / (a2 + b2)


def p_odd_formula(p: WClassParams) -> float:
    """Probability of the odd-parity (recycle) branch; 1 - p_even analytically."""
    a2, b2 = p.alpha_sq, p.beta_sq
    return (a2 * a2 + (p.n_photons - 1) * b2 * b2) / (a2 + b2)


def round_k_probs(p: WClassParams) -> tuple[float, float]:
    """(success, recycle) probabilities of the round after ``p``.

    Equal to the one-round formulas evaluated at the recycled parameters.
    """
    nxt = recycle_params(p)
    return p_even_formula(nxt), p_odd_formula(nxt)


def series_terms(p: WClassParams, n: int) -> list[SeriesTerm]:
    """The first ``n`` terms of the total-success series.

    Term k is N * alpha^(2^k) * beta^(2^k) / prod_{j<=k} (alpha^(2^j) + beta^(2^j)):
    the probability that the first success happens exactly at round k.
    """
    if n < 1:
        raise ValueError(f"need n >= 1 rounds, got {n}")
    a_pow = p.alpha_sq
    b_pow = p.beta_sq
    denom = 1.0
    terms = []
    for k in range(1, n + 1):
        denom *= a_pow + b_pow
        terms.append(SeriesTerm(k, p.n_photons * a_pow * b_pow / denom))
        a_pow *= a_pow
        b_pow *= b_pow
    return terms

def total_success(p: WClassParams, n: int) -> float:
    """Total probability of holding a standard W state after ``n`` rounds."""
    return sum(term.value for term in series_terms(p, n))


def theoretical_limit(p: WClassParams) -> float | None:
    """Ceiling N*alpha^2 of the total success probability.

    Only defined for alpha^2 <= beta^2; returns None outside that regime,
    where no ceiling is asserted.
    """
    if p.alpha_sq <= p.beta_sq:
        return p.n_photons * p.alpha_sq
    return None


def sweep_curve(f_grid: list[float], n_max: int, n_photons: int = 3) -> SweepTable:
    """Evaluate P(n) for n = 1..n_max on a grid of F = N*alpha^2 values.

    Each F in (0, 1] fixes alpha^2 = F/N and beta^2 = (1-alpha^2)/(N-1),
    which keeps alpha^2 <= beta^2 so the limit column equals F.  Rows are
    sorted by (F, n).
    """
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    for f in f_grid:
        if not 0.0 < f <= 1.0:
            raise ValueError(f"F values must lie in (0, 1], got {f}")
    rows = []
    for f in sorted(f_grid):
        alpha_sq = f / n_photons
        p = WClassParams.from_alpha_sq(alpha_sq, n_photons)
        limit = n_photons * alpha_sq
        cumulative = 0.0
        for term in series_terms(p, n_max):
            cumulative += term.value
            rows.append(SweepRow(f, alpha_sq, term.k, cumulative, limit))
    return SweepTable(n_photons, tuple(rows))
