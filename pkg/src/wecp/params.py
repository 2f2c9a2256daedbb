"""Parameters of a partially entangled W-class state and their round-to-round recursion.

A W-class state of ``N`` photons is described by two nonnegative real
coefficients ``(alpha, beta)`` constrained by ``alpha^2 + (N-1)*beta^2 = 1``:
``alpha`` weights the term with the vertical photon on Alice's side, ``beta``
each of the ``N-1`` terms with the vertical photon elsewhere.  Concentration
rounds act on these parameters by squaring and renormalizing, which is the
only state the protocol needs to track between rounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

NORM_TOL = 1e-12


@dataclass(frozen=True)
class WClassParams:
    """Coefficients (alpha, beta) of an N-photon W-class state.

    Invariant: ``alpha^2 + (n_photons - 1) * beta^2 == 1`` within NORM_TOL.
    Both coefficients are restricted to nonnegative reals; degenerate values
    (alpha == 0 or beta == 0) are legal and mark a non-concentrable state.
    """

    alpha: float
    beta: float
    n_photons: int = 3

    def __post_init__(self) -> None:
        if not isinstance(self.n_photons, int) or self.n_photons < 2:
            raise ValueError(f"n_photons must be an integer >= 2, got {self.n_photons}")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError(
                f"coefficients must be nonnegative reals, got alpha={self.alpha}, beta={self.beta}"
            )
        norm = self.alpha**2 + (self.n_photons - 1) * self.beta**2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(
                f"alpha^2 + (N-1)*beta^2 = {norm!r} violates normalization "
                f"(|deviation| > {NORM_TOL})"
            )

    @classmethod
    def from_alpha_sq(cls, alpha_sq: float, n_photons: int = 3) -> "WClassParams":
        """Build params from alpha^2 alone, deriving beta^2 = (1 - alpha^2)/(N-1)."""
        if not 0.0 <= alpha_sq <= 1.0:
            raise ValueError(f"alpha_sq must lie in [0, 1], got {alpha_sq}")
        beta_sq = (1.0 - alpha_sq) / (n_photons - 1)
        return cls(math.sqrt(alpha_sq), math.sqrt(beta_sq), n_photons)

    @property
    def alpha_sq(self) -> float:
        return self.alpha * self.alpha

    @property
    def beta_sq(self) -> float:
        return self.beta * self.beta

    @property
    def is_degenerate(self) -> bool:
        """True when one coefficient vanishes and no concentration is possible."""
        return self.alpha == 0.0 or self.beta == 0.0


def recycle_params(p: WClassParams) -> WClassParams:
    """Parameters of the less-entangled state kept after an odd-parity round.

    The odd-parity branch collapses onto a W-class state with coefficients
    proportional to (alpha^2, beta^2); the normalizing denominator is
    sqrt(alpha^4 + (N-1)*beta^4).  Degenerate inputs are absorbing fixed
    points: (1, 0) stays (1, 0) and (0, b) maps to (0, 1/sqrt(N-1)).
    """
    a_sq = p.alpha_sq
    b_sq = p.beta_sq
    denom = math.sqrt(a_sq * a_sq + (p.n_photons - 1) * b_sq * b_sq)
    if denom == 0.0:
        raise ValueError("recycle undefined for alpha = beta = 0")
    return WClassParams(a_sq / denom, b_sq / denom, p.n_photons)
