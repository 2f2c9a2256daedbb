"""Exact pure-state engine for systems of polarization qubits.

States are dense complex vectors over the basis of polarization strings
(``H``/``V``) with a fixed big-endian ordering: the leftmost label in a basis
string is qubit 0 and maps to the most significant bit of the amplitude
index, so ``|HV>`` of a 2-qubit state lives at index ``0b01 = 1``.  All
operations are pure functions returning new states; amplitude arrays are
frozen after construction, so states are safe to share across threads.

Global phase is deliberately never normalized away (conditional phase-flip
corrections are exact only up to a sign); use :func:`fidelity` to compare
states.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

if TYPE_CHECKING:
    from .params import WClassParams

LABELS = ("H", "V")

#: Largest supported register; 2^25 amplitudes keep every protocol run exact
#: in memory for up to 24 data photons plus one ancilla.
MAX_QUBITS = 25

#: Norm tolerance for "this vector is a quantum state".
NORM_TOL = 1e-12

#: Squared-norm threshold below which a projected branch is flagged empty
#: rather than renormalized into noise.
ZERO_BRANCH_TOL = 1e-24

_SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over polarization basis strings.

    ``amplitudes[i]`` multiplies the basis string whose H/V labels spell the
    binary digits of ``i`` (H = 0, V = 1, qubit 0 = most significant bit).
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.num_qubits <= MAX_QUBITS:
            raise ValueError(f"num_qubits must be in [1, {MAX_QUBITS}], got {self.num_qubits}")
        amps = np.ascontiguousarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.num_qubits,):
            raise ValueError(
                f"expected {2**self.num_qubits} amplitudes for {self.num_qubits} qubits, "
                f"got shape {amps.shape}"
            )
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > 1e-9:
            raise ValueError(f"amplitudes are not normalized: sum |a|^2 = {norm_sq!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes: Iterable[complex]) -> "PureState":
        """Normalize an arbitrary nonzero vector into a state."""
        amps = np.asarray(list(amplitudes) if not isinstance(amplitudes, np.ndarray) else amplitudes,
                          dtype=complex)
        n = int(round(math.log2(amps.size)))
        if 2**n != amps.size:
            raise ValueError(f"amplitude count {amps.size} is not a power of two")
        norm = float(np.linalg.norm(amps))
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(n, amps / norm)

    @property
    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def amplitude(self, labels: Sequence[str]) -> complex:
        """Amplitude of one basis string, e.g. ``state.amplitude("HVH")``."""
        return complex(self.amplitudes[basis_index(labels)])

    def __repr__(self) -> str:
        return f"PureState(num_qubits={self.num_qubits})"


@dataclass(frozen=True)
class MeasOutcome:
    """One branch of a single-qubit projective measurement.

    ``post_state`` has the measured qubit removed; it is None either when the
    branch has (numerically) zero probability or when no qubit remains.
    """

    label: str
    probability: float
    post_state: PureState | None


def basis_index(labels: Sequence[str]) -> int:
    """Amplitude index of a basis string (H = 0, V = 1, leftmost = qubit 0)."""
    index = 0
    for label in labels:
        if label not in LABELS:
            raise ValueError(f"labels must be 'H' or 'V', got {label!r}")
        index = (index << 1) | (label == "V")
    return index


def basis_labels(index: int, num_qubits: int) -> str:
    """Inverse of :func:`basis_index`: the H/V string at a given index."""
    return "".join("V" if (index >> (num_qubits - 1 - q)) & 1 else "H" for q in range(num_qubits))


def basis_state(labels: Sequence[str]) -> PureState:
    """Product state with amplitude 1 on the given basis string."""
    labels = list(labels)
    if not labels:
        raise ValueError("basis_state needs at least one label")
    amps = np.zeros(2 ** len(labels), dtype=complex)
    amps[basis_index(labels)] = 1.0
    return PureState(len(labels), amps)


def tensor(a: PureState, b: PureState) -> PureState:
    """Composite state of two registers; qubits of ``b`` follow those of ``a``."""
    return PureState(a.num_qubits + b.num_qubits, np.kron(a.amplitudes, b.amplitudes))


def w_class_state(params: "WClassParams") -> PureState:
    """Partially entangled W-class state for the given (alpha, beta, N).

    Alice's photon is the last qubit (index N-1): amplitude ``alpha`` sits on
    ``H...HV`` and amplitude ``beta`` on each of the N-1 strings with a single
    V among the first N-1 positions.
    """
    n = params.n_photons
    amps = np.zeros(2**n, dtype=complex)
    amps[1] = params.alpha  # H...HV, the V on Alice's qubit
    for j in range(n - 1):
        amps[1 << (n - 1 - j)] = params.beta
    return PureState(n, amps)


def w_state(n: int, sign: str = "+") -> PureState:
    """Standard N-photon W state with uniform 1/sqrt(N) magnitudes.

    ``sign="-"`` negates the N-1 terms that carry H on Alice's (last) qubit,
    i.e. the variant produced by the ``-x`` ancilla outcome before correction.
    """
    if n < 2:
        raise ValueError(f"w_state needs n >= 2, got {n}")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    amps = np.zeros(2**n, dtype=complex)
    scale = 1.0 / math.sqrt(n)
    amps[1] = scale
    flip = -scale if sign == "-" else scale
    for j in range(n - 1):
        amps[1 << (n - 1 - j)] = flip
    return PureState(n, amps)


def phase_flip(s: PureState, q: int) -> PureState:
    """sigma_z on qubit ``q``: negate every amplitude whose string has V there."""
    _check_qubit(s, q)
    idx = np.arange(2**s.num_qubits)
    signs = np.where((idx >> (s.num_qubits - 1 - q)) & 1, -1.0, 1.0)
    return PureState(s.num_qubits, s.amplitudes * signs)


def measure(s: PureState, q: int, basis: str = "Z") -> tuple[MeasOutcome, MeasOutcome]:
    """Projective measurement of qubit ``q`` in the Z or X basis.

    Returns both outcomes, each with its exact Born probability and the
    renormalized post-state with qubit ``q`` removed.  Probabilities sum to 1;
    a branch whose squared norm falls below ZERO_BRANCH_TOL carries a None
    post-state instead of renormalized noise.

    Z outcomes are labelled ``H``/``V``; X outcomes ``+x``/``-x`` project onto
    (|H> +- |V>)/sqrt(2).
    """
    _check_qubit(s, q)
    tensor_view = s.amplitudes.reshape((2,) * s.num_qubits)
    comp_h = tensor_view.take(0, axis=q)
    comp_v = tensor_view.take(1, axis=q)
    if basis == "Z":
        branches = (("H", comp_h), ("V", comp_v))
    elif basis == "X":
        branches = (
            ("+x", (comp_h + comp_v) * _SQRT_HALF),
            ("-x", (comp_h - comp_v) * _SQRT_HALF),
        )
    else:
        raise ValueError(f"basis must be 'Z' or 'X', got {basis!r}")

    outcomes = []
    for label, component in branches:
        flat = component.reshape(-1)
        prob = float(np.vdot(flat, flat).real)
        if prob < ZERO_BRANCH_TOL or s.num_qubits == 1:
            post = None
        else:
            post = PureState(s.num_qubits - 1, flat / math.sqrt(prob))
        outcomes.append(MeasOutcome(label, prob, post))
    return outcomes[0], outcomes[1]


def fidelity(a: PureState, b: PureState) -> float:
    """|<a|b>|^2, invariant under global phase of either state."""
    if a.num_qubits != b.num_qubits:
        raise ValueError(
            f"fidelity needs equal qubit counts, got {a.num_qubits} and {b.num_qubits}"
        )
    overlap = np.vdot(a.amplitudes, b.amplitudes)
    return float(abs(overlap) ** 2)


def _check_qubit(s: PureState, q: int) -> None:
    if not 0 <= q < s.num_qubits:
        raise ValueError(f"qubit index {q} out of range for {s.num_qubits} qubits")
