"""Cross-Kerr parity-check detector on the polarizations of two photons.

The physical device couples both photons to a coherent probe through two
cross-Kerr media of opposite sign, then reads the probe's X quadrature.  The
probe picks up a phase of magnitude theta = chi*t exactly when the two
photons share a polarization (HH or VV), and the quadrature readout cannot
tell +theta from -theta.  The observable consequence, and all this module
implements, is a two-outcome coherence-preserving projection onto the even
{HH, VV} or odd {HV, VH} parity subspace: relative amplitudes inside each
subspace survive untouched.

The coupling strength, interaction time, and probe-phase classification are
kept as configuration so callers can report them and cross-check the
projection against the phase rule, but no homodyne statistics or probe
decoherence are simulated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .qstate import PureState, ZERO_BRANCH_TOL, _check_qubit


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class PcdModel:
    """Detector configuration; theta = chi * interaction_time must be positive."""

    chi: float = 1.0
    interaction_time: float = 1.0
    theta: float = field(init=False)

    def __post_init__(self) -> None:
        theta = self.chi * self.interaction_time
        if not theta > 0.0:
            raise ValueError(f"probe phase theta = chi*t must be positive, got {theta}")
        object.__setattr__(self, "theta", theta)


@dataclass(frozen=True)
class ProbePhase:
    """Probe phase shift picked up for one two-photon basis label pair."""

    pair: tuple[str, str]
    value: float

    @property
    def parity(self) -> Parity:
        return Parity.ODD if self.value == 0.0 else Parity.EVEN


@dataclass(frozen=True)
class PcdOutcome:
    """One parity branch: probability and renormalized projected state.

    The post-state keeps all qubits (nothing is detected destructively) and is
    supported only on the matching parity subspace of the measured pair; it is
    None for a numerically zero-probability branch.
    """

    parity: Parity
    probability: float
    post_state: PureState | None


def probe_phase(pair: tuple[str, str], model: PcdModel) -> ProbePhase:
    """Phase shift of the probe for a definite label pair.

    HH shifts by +theta, VV by -theta, HV and VH by 0.  Only |phase| is
    observable, so magnitude theta means even parity.
    """
    a, b = pair
    if a not in ("H", "V") or b not in ("H", "V"):
        raise ValueError(f"labels must be 'H' or 'V', got {pair!r}")
    if a == b:
        value = model.theta if a == "H" else -model.theta
    else:
        value = 0.0
    return ProbePhase((a, b), value)


def parity_measure(
    s: PureState, q1: int, q2: int, model: PcdModel
) -> tuple[PcdOutcome, PcdOutcome]:
    """Project qubits (q1, q2) onto even/odd polarization parity.

    Returns the (even, odd) outcome pair.  Probabilities are squared
    projection norms and sum to 1; each post-state is renormalized with
    relative amplitudes within its subspace unchanged.
    """
    _check_qubit(s, q1)
    _check_qubit(s, q2)
    if q1 == q2:
        raise ValueError(f"parity check needs two distinct qubits, got {q1} twice")
    n = s.num_qubits
    idx = np.arange(2**n)
    bit1 = (idx >> (n - 1 - q1)) & 1
    bit2 = (idx >> (n - 1 - q2)) & 1
    even_mask = bit1 == bit2

    outcomes = []
    for parity, mask in ((Parity.EVEN, even_mask), (Parity.ODD, ~even_mask)):
        projected = np.where(mask, s.amplitudes, 0.0)
        prob = float(np.vdot(projected, projected).real)
        if prob < ZERO_BRANCH_TOL:
            post = None
        else:
            post = PureState(n, projected / math.sqrt(prob))
        outcomes.append(PcdOutcome(parity, prob, post))
    return outcomes[0], outcomes[1]
