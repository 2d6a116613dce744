"""Dense state-vector simulation of small qubit registers.

Basis ordering: qubit 0 is the leftmost symbol of a ket and the most
significant bit of the amplitude index, so ``|x1 x2 x3>`` lives at index
``int("x1x2x3", 2)``.  All objects are immutable; every operation returns a
new :class:`StateVector`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import cos, sin, sqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapacityError,
    DegenerateMeasurementError,
    GateArgumentError,
    NormalizationError,
    QubitIndexError,
)

MAX_QUBITS = 26
NORM_TOL = 1e-9
_ZERO_PROB = 1e-24


class StateVector:
    """Normalized vector of ``2**n_qubits`` complex amplitudes."""

    __slots__ = ("_amps", "n_qubits")

    def __init__(self, amps, *, check: bool = True, max_qubits: int = MAX_QUBITS):
        arr = np.array(amps, dtype=np.complex128).reshape(-1)
        size = arr.size
        n = size.bit_length() - 1
        if size < 2 or (1 << n) != size:
            raise ValueError(f"amplitude count {size} is not a power of two >= 2")
        if n > max_qubits:
            raise CapacityError(f"{n} qubits exceeds the register limit of {max_qubits}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("amplitudes must be finite")
        if check:
            norm = float(np.vdot(arr, arr).real)
            if abs(norm - 1.0) > NORM_TOL:
                raise NormalizationError(f"squared norm {norm!r} differs from 1")
        arr.setflags(write=False)
        self._amps = arr
        self.n_qubits = n

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "StateVector":
        # takes ownership of a freshly built array; no copy, no norm check
        obj = object.__new__(cls)
        arr = arr.reshape(-1)
        arr.setflags(write=False)
        obj._amps = arr
        obj.n_qubits = arr.size.bit_length() - 1
        return obj

    @property
    def amps(self) -> np.ndarray:
        return self._amps

    @classmethod
    def basis(cls, bits: str) -> "StateVector":
        """Computational basis state from a bit string such as ``"101"``."""
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"invalid bit string {bits!r}")
        amps = np.zeros(1 << len(bits), dtype=np.complex128)
        amps[int(bits, 2)] = 1.0
        return cls(amps)

    @classmethod
    def qubit(cls, alpha: complex, beta: complex) -> "StateVector":
        return cls([alpha, beta])

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self._amps, self._amps).real))

    def probabilities(self) -> np.ndarray:
        return np.abs(self._amps) ** 2

    def allclose(self, other: "StateVector", atol: float = 1e-12) -> bool:
        return self.n_qubits == other.n_qubits and bool(
            np.allclose(self._amps, other._amps, rtol=0.0, atol=atol)
        )

    def dump(self, atol: float = 0.0) -> str:
        """One ``"bitstring re im"`` line per nonzero amplitude, by index."""
        lines = []
        for idx in np.flatnonzero(np.abs(self._amps) > atol):
            amp = self._amps[idx]
            lines.append(f"{idx:0{self.n_qubits}b} {float(amp.real)!r} {float(amp.imag)!r}")
        return "\n".join(lines)

    def __len__(self) -> int:
        return self._amps.size

    def __repr__(self) -> str:
        return f"StateVector(n_qubits={self.n_qubits}, amps={self._amps!r})"


class GateKind(enum.Enum):
    HADAMARD = "H"
    PAULI_X = "X"
    ROT_Y = "RY"
    CCNOT = "CCNOT"
    CSWAP = "CSWAP"

    @property
    def arity(self) -> int:
        return 3 if self in (GateKind.CCNOT, GateKind.CSWAP) else 1


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    theta: float | None = None

    def __post_init__(self):
        if self.kind is GateKind.ROT_Y:
            if self.theta is None or not np.isfinite(self.theta):
                raise GateArgumentError("RotY needs a finite angle")
        elif self.theta is not None:
            raise GateArgumentError(f"{self.kind.value} takes no angle")

    @property
    def arity(self) -> int:
        return self.kind.arity

    def matrix(self) -> np.ndarray:
        """Matrix representation in the gate's local basis (qubit order as targets)."""
        if self.kind is GateKind.HADAMARD:
            return np.array([[1, 1], [1, -1]], dtype=np.complex128) / sqrt(2)
        if self.kind is GateKind.PAULI_X:
            return np.array([[0, 1], [1, 0]], dtype=np.complex128)
        if self.kind is GateKind.ROT_Y:
            c, s = cos(self.theta / 2), sin(self.theta / 2)
            return np.array([[c, -s], [s, c]], dtype=np.complex128)
        perm = np.arange(8)
        if self.kind is GateKind.CCNOT:
            perm[[6, 7]] = [7, 6]
        else:
            perm[[5, 6]] = [6, 5]
        return np.eye(8, dtype=np.complex128)[perm]


H = Gate(GateKind.HADAMARD)
X = Gate(GateKind.PAULI_X)
CCNOT = Gate(GateKind.CCNOT)
CSWAP = Gate(GateKind.CSWAP)


def RY(theta: float) -> Gate:
    return Gate(GateKind.ROT_Y, float(theta))


def _check_targets(n: int, gate: Gate, targets: Sequence[int]) -> tuple[int, ...]:
    targets = tuple(int(t) for t in targets)
    if len(targets) != gate.arity:
        raise GateArgumentError(
            f"{gate.kind.value} acts on {gate.arity} qubit(s), got {len(targets)}"
        )
    for t in targets:
        if not 0 <= t < n:
            raise QubitIndexError(f"qubit {t} outside a {n}-qubit register")
    if len(set(targets)) != len(targets):
        raise GateArgumentError(f"repeated qubit index in {targets}")
    return targets


def _index(n: int, assign: dict[int, int]) -> tuple:
    idx = [slice(None)] * n
    for q, v in assign.items():
        idx[q] = v
    return tuple(idx)


def apply(state: StateVector, gate: Gate, targets: Sequence[int] | int) -> StateVector:
    """Return ``U|psi>`` with the gate embedded on ``targets``.

    CCNOT targets are ``(control, control, target)``; CSWAP targets are
    ``(control, swap_a, swap_b)``.  Indices may be arbitrary and non-adjacent.
    """
    if isinstance(targets, (int, np.integer)):
        targets = (int(targets),)
    n = state.n_qubits
    targets = _check_targets(n, gate, targets)
    psi = state.amps.reshape([2] * n)

    if gate.arity == 1:
        (q,) = targets
        out = np.moveaxis(np.tensordot(gate.matrix(), psi, axes=([1], [q])), 0, q)
    elif gate.kind is GateKind.CCNOT:
        c1, c2, t = targets
        out = psi.copy()
        out[_index(n, {c1: 1, c2: 1, t: 0})] = psi[_index(n, {c1: 1, c2: 1, t: 1})]
        out[_index(n, {c1: 1, c2: 1, t: 1})] = psi[_index(n, {c1: 1, c2: 1, t: 0})]
    else:
        c, a, b = targets
        out = psi.copy()
        out[_index(n, {c: 1, a: 0, b: 1})] = psi[_index(n, {c: 1, a: 1, b: 0})]
        out[_index(n, {c: 1, a: 1, b: 0})] = psi[_index(n, {c: 1, a: 0, b: 1})]

    result = StateVector._wrap(np.ascontiguousarray(out).reshape(-1))
    if abs(result.norm() - 1.0) > NORM_TOL:
        raise NormalizationError("gate application broke normalization")
    return result


def tensor(a: StateVector, b: StateVector, *, max_qubits: int = MAX_QUBITS) -> StateVector:
    """``a ⊗ b`` with ``a`` occupying the leading (most significant) qubits."""
    n = a.n_qubits + b.n_qubits
    if n > max_qubits:
        raise CapacityError(f"{n} qubits exceeds the register limit of {max_qubits}")
    return StateVector._wrap(np.kron(a.amps, b.amps))


def tensor_all(states: Iterable[StateVector], *, max_qubits: int = MAX_QUBITS) -> StateVector:
    states = list(states)
    if not states:
        raise ValueError("need at least one state")
    out = states[0]
    for s in states[1:]:
        out = tensor(out, s, max_qubits=max_qubits)
    return out


def _check_qubit(state: StateVector, qubit: int) -> int:
    if not 0 <= qubit < state.n_qubits:
        raise QubitIndexError(f"qubit {qubit} outside a {state.n_qubits}-qubit register")
    return int(qubit)


def measure_prob(state: StateVector, qubit: int, outcome: int) -> float:
    """Probability that measuring ``qubit`` yields ``outcome``."""
    qubit = _check_qubit(state, qubit)
    if outcome not in (0, 1):
        raise ValueError("outcome must be 0 or 1")
    psi = state.amps.reshape([2] * state.n_qubits)
    part = psi[_index(state.n_qubits, {qubit: outcome})]
    return float(min(1.0, np.vdot(part, part).real))


def collapse(state: StateVector, qubit: int, outcome: int) -> StateVector:
    """Post-measurement state ``M_x|psi> / sqrt(p)``."""
    p = measure_prob(state, qubit, outcome)
    if p < _ZERO_PROB:
        raise DegenerateMeasurementError(
            f"outcome {outcome} on qubit {qubit} has probability {p!r}"
        )
    psi = state.amps.reshape([2] * state.n_qubits).copy()
    psi[_index(state.n_qubits, {qubit: 1 - outcome})] = 0.0
    return StateVector(psi.reshape(-1) / np.sqrt(p))


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list on a fixed register; ``add`` returns a new circuit."""

    n_qubits: int
    ops: tuple[tuple[Gate, tuple[int, ...]], ...] = field(default=())

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("circuit needs at least one qubit")
        checked = tuple((g, _check_targets(self.n_qubits, g, t)) for g, t in self.ops)
        object.__setattr__(self, "ops", checked)

    def add(self, gate: Gate, *targets: int) -> "Circuit":
        return Circuit(self.n_qubits, self.ops + ((gate, tuple(targets)),))

    def __len__(self) -> int:
        return len(self.ops)


def run(circuit: Circuit, state: StateVector) -> StateVector:
    if state.n_qubits != circuit.n_qubits:
        raise GateArgumentError(
            f"circuit has {circuit.n_qubits} qubits, input has {state.n_qubits}"
        )
    for gate, targets in circuit.ops:
        state = apply(state, gate, targets)
    return state


def zero_state(n_qubits: int, *, max_qubits: int = MAX_QUBITS) -> StateVector:
    if n_qubits > max_qubits:
        raise CapacityError(f"{n_qubits} qubits exceeds the register limit of {max_qubits}")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector._wrap(amps)


def random_state(n_qubits: int, rng: np.random.Generator) -> StateVector:
    """Haar-like random pure state (normalized complex Gaussian)."""
    v = rng.normal(size=1 << n_qubits) + 1j * rng.normal(size=1 << n_qubits)
    return StateVector(v / np.linalg.norm(v))
