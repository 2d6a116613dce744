"""Quantum Z-numbers and their seven gate-level fuzzy operations.

Every operation that produces a state runs the corresponding gate sequence on
the simulator.  The ``*_closed_form`` helpers write the same states down
directly from the input amplitudes; they exist so the two routes can be
checked against each other.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ArityError
from .fuzzy import ZNumber, check_membership
from .statevector import (
    CCNOT,
    RY,
    X,
    StateVector,
    apply,
    measure_prob,
    tensor,
    zero_state,
)

INCLUSION_TOL = 1e-12
_KET0 = StateVector.basis("0")
_KET1 = StateVector.basis("1")


@dataclass(frozen=True)
class Qmf:
    """Quantum membership function at one element.

    ``designated_qubit`` is the wire whose ``|0>`` probability plays the role
    of the classical membership degree: 0 for fresh single-qubit QMFs, 2 for
    the three-qubit intersection, union and combined states.
    """

    state: StateVector
    designated_qubit: int | None = None

    def __post_init__(self):
        if self.designated_qubit is None:
            object.__setattr__(self, "designated_qubit", self.state.n_qubits - 1)
        if not 0 <= self.designated_qubit < self.state.n_qubits:
            raise ArityError(
                f"designated qubit {self.designated_qubit} outside {self.state.n_qubits} qubits"
            )

    @property
    def arity(self) -> int:
        return self.state.n_qubits

    @classmethod
    def from_amplitudes(cls, alpha: complex, beta: complex) -> "Qmf":
        return cls(StateVector([alpha, beta]), 0)


@dataclass(frozen=True)
class Qzn:
    a: Qmf
    b: Qmf
    label: str | None = None
    # set when an operation combined QZNs carrying different element labels
    label_conflict: bool = False

    def __post_init__(self):
        if self.a.arity != self.b.arity:
            raise ArityError(f"QMF arities differ: {self.a.arity} vs {self.b.arity}")

    @property
    def arity(self) -> int:
        return self.a.arity

    @classmethod
    def from_amplitudes(cls, a0, a1, b0, b1, label: str | None = None) -> "Qzn":
        return cls(Qmf.from_amplitudes(a0, a1), Qmf.from_amplitudes(b0, b1), label)

    def prob_pair(self) -> tuple[float, float]:
        return prob_zero(self.a), prob_zero(self.b)

    def __str__(self) -> str:
        return format_qzn(self)


@dataclass(frozen=True)
class CQzn:
    combined: Qmf
    label: str | None = None

    def __post_init__(self):
        if self.combined.arity != 3:
            raise ArityError("combined state must have 3 qubits")


def polar(r: float, phase_pi: float) -> complex:
    """``r * exp(i * phase_pi * pi)``, the amplitude notation used for QMFs."""
    return r * cmath.exp(1j * math.pi * phase_pi)


def rotation_angle(mu: float) -> float:
    """RotY angle taking ``|0>`` to ``sqrt(mu)|0> + sqrt(1-mu)|1>``."""
    root = math.sqrt(check_membership(mu))
    return 2.0 * math.acos(min(1.0, max(0.0, root)))


def encode_membership(mu: float) -> Qmf:
    return Qmf(apply(zero_state(1), RY(rotation_angle(mu)), 0), 0)


def from_z(z: ZNumber, label: str | None = None) -> Qzn:
    """Convert a classical Z-number by rotating ``|0>`` on each component."""
    return Qzn(encode_membership(z.a), encode_membership(z.b), label)


def from_angles(theta_a: float, theta_b: float, label: str | None = None) -> Qzn:
    return Qzn(
        Qmf(apply(zero_state(1), RY(theta_a), 0), 0),
        Qmf(apply(zero_state(1), RY(theta_b), 0), 0),
        label,
    )


def prob_zero(m: Qmf) -> float:
    return measure_prob(m.state, m.designated_qubit, 0)


def to_z(z: Qzn) -> ZNumber:
    """Classical degeneration: the pair of ``|0>`` probabilities."""
    pa, pb = z.prob_pair()
    return ZNumber(min(1.0, pa), min(1.0, pb))


def _same_arity(z1: Qzn, z2: Qzn) -> None:
    if z1.arity != z2.arity:
        raise ArityError(f"QZN arities differ: {z1.arity} vs {z2.arity}")


def includes(z1: Qzn, z2: Qzn, tol: float = INCLUSION_TOL) -> bool:
    """``z1 ⊆ z2``: both ``|0>`` probabilities of ``z1`` are no larger."""
    _same_arity(z1, z2)
    (a1, b1), (a2, b2) = z1.prob_pair(), z2.prob_pair()
    return a1 <= a2 + tol and b1 <= b2 + tol


def equals(z1: Qzn, z2: Qzn, tol: float = INCLUSION_TOL) -> bool:
    return includes(z1, z2, tol) and includes(z2, z1, tol)


def _require_fresh(*zs: Qzn) -> None:
    for z in zs:
        if z.arity != 1:
            raise ArityError("operation is defined only on single-qubit QMFs")


def _merge_labels(z1: Qzn, z2: Qzn) -> tuple[str | None, bool]:
    if z1.label is None or z2.label is None:
        return (z1.label if z1.label is not None else z2.label), False
    return z1.label, z1.label != z2.label


def complement(z: Qzn) -> Qzn:
    """Pauli-X on both QMFs."""
    _require_fresh(z)
    return Qzn(
        Qmf(apply(z.a.state, X, 0), 0),
        Qmf(apply(z.b.state, X, 0), 0),
        z.label,
        z.label_conflict,
    )


def intersection_state(m1: Qmf, m2: Qmf) -> Qmf:
    """CCNOT((X ⊗ X ⊗ I)|m1>|m2>|1>)."""
    reg = tensor(tensor(m1.state, m2.state), _KET1)
    reg = apply(reg, X, 0)
    reg = apply(reg, X, 1)
    return Qmf(apply(reg, CCNOT, (0, 1, 2)), 2)


def union_state(m1: Qmf, m2: Qmf) -> Qmf:
    """CCNOT(|m1>|m2>|0>)."""
    reg = tensor(tensor(m1.state, m2.state), _KET0)
    return Qmf(apply(reg, CCNOT, (0, 1, 2)), 2)


def intersect(z1: Qzn, z2: Qzn) -> Qzn:
    _require_fresh(z1, z2)
    label, conflict = _merge_labels(z1, z2)
    return Qzn(
        intersection_state(z1.a, z2.a),
        intersection_state(z1.b, z2.b),
        label,
        conflict or z1.label_conflict or z2.label_conflict,
    )


def union(z1: Qzn, z2: Qzn) -> Qzn:
    _require_fresh(z1, z2)
    label, conflict = _merge_labels(z1, z2)
    return Qzn(
        union_state(z1.a, z2.a),
        union_state(z1.b, z2.b),
        label,
        conflict or z1.label_conflict or z2.label_conflict,
    )


def combine(z: Qzn) -> CQzn:
    """Fuse the A and B components into one three-qubit state."""
    _require_fresh(z)
    return CQzn(intersection_state(z.a, z.b), z.label)


def _pair(m: Qmf) -> tuple[complex, complex]:
    if m.arity != 1:
        raise ArityError("closed forms take single-qubit QMFs")
    return complex(m.state.amps[0]), complex(m.state.amps[1])


def intersection_closed_form(m1: Qmf, m2: Qmf) -> StateVector:
    (a1, b1), (a2, b2) = _pair(m1), _pair(m2)
    amps = np.zeros(8, dtype=np.complex128)
    amps[0b110], amps[0b101], amps[0b011], amps[0b001] = a1 * a2, a1 * b2, b1 * a2, b1 * b2
    return StateVector(amps)


def union_closed_form(m1: Qmf, m2: Qmf) -> StateVector:
    (a1, b1), (a2, b2) = _pair(m1), _pair(m2)
    amps = np.zeros(8, dtype=np.complex128)
    amps[0b000], amps[0b010], amps[0b100], amps[0b111] = a1 * a2, a1 * b2, b1 * a2, b1 * b2
    return StateVector(amps)


def combined_closed_form(z: Qzn) -> StateVector:
    return intersection_closed_form(z.a, z.b)


def combined_state_from_z(z: ZNumber) -> StateVector:
    """Real-amplitude combined state written straight from ``<mu_A, mu_B>``."""
    x, y = z.a, z.b
    amps = np.zeros(8)
    amps[0b110] = math.sqrt(x * y)
    amps[0b101] = math.sqrt(x * (1.0 - y))
    amps[0b011] = math.sqrt((1.0 - x) * y)
    amps[0b001] = math.sqrt((1.0 - x) * (1.0 - y))
    return StateVector(amps)


def format_amplitude(amp: complex, digits: int = 4) -> str:
    r = abs(amp)
    turns = (cmath.phase(amp) / math.pi) % 2.0
    if r == 0.0 or math.isclose(turns, 0.0, abs_tol=1e-12) or math.isclose(turns, 2.0, abs_tol=1e-12):
        return f"{r:.{digits}g}"
    return f"{r:.{digits}g}·e^{{i{turns:.{digits}g}π}}"


def format_qmf(m: Qmf, digits: int = 4) -> str:
    n = m.arity
    terms = [
        f"{format_amplitude(amp, digits)}|{idx:0{n}b}>"
        for idx, amp in enumerate(m.state.amps)
        if abs(amp) > 1e-15
    ]
    return "+".join(terms) if terms else "0"


def format_qzn(z: Qzn, digits: int = 4) -> str:
    return f"<{format_qmf(z.a, digits)}, {format_qmf(z.b, digits)}>"


def qzns_from_zs(zs: Sequence[ZNumber]) -> list[Qzn]:
    return [from_z(z) for z in zs]
