"""Pure-state fidelity and the swap-test estimator.

Four evaluation strategies are offered:

``exact``
    ``p0 = 1/2 + |<psi|phi>|^2 / 2`` from the inner product of the full states.
``factorized``
    Same, with the fidelity taken as a product of per-part overlaps.  This is
    what the decision pipeline uses; it never builds the large register.
``circuit-exact``
    Builds the swap-test circuit (H on the ancilla, one CSWAP per qubit pair,
    H again) on ``1 + 2n`` qubits and reads the ancilla probability.
``circuit-sampled``
    Draws ``shots`` Bernoulli outcomes for the ancilla against the analytic
    ``p0`` using numpy's PCG64 generator seeded with ``seed``.

Every strategy reports ``fidelity = 2 * p0 - 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import ArityError, CapacityError
from .statevector import (
    CSWAP,
    H,
    MAX_QUBITS,
    Circuit,
    StateVector,
    measure_prob,
    run,
    tensor,
    tensor_all,
    zero_state,
)

Register = Union[StateVector, Sequence[StateVector]]


class ModeKind(enum.Enum):
    EXACT = "exact"
    FACTORIZED = "factorized"
    CIRCUIT_EXACT = "circuit-exact"
    CIRCUIT_SAMPLED = "circuit-sampled"


@dataclass(frozen=True)
class FidelityMode:
    kind: ModeKind = ModeKind.EXACT
    shots: int | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind is ModeKind.CIRCUIT_SAMPLED:
            if self.shots is None or int(self.shots) < 1:
                raise ValueError("sampled mode needs shots >= 1")
            object.__setattr__(self, "shots", int(self.shots))
            object.__setattr__(self, "seed", 0 if self.seed is None else int(self.seed))
        elif self.shots is not None:
            raise ValueError(f"shots are meaningless in {self.kind.value} mode")

    @classmethod
    def exact(cls) -> "FidelityMode":
        return cls(ModeKind.EXACT)

    @classmethod
    def factorized(cls) -> "FidelityMode":
        return cls(ModeKind.FACTORIZED)

    @classmethod
    def circuit_exact(cls) -> "FidelityMode":
        return cls(ModeKind.CIRCUIT_EXACT)

    @classmethod
    def sampled(cls, shots: int, seed: int = 0) -> "FidelityMode":
        return cls(ModeKind.CIRCUIT_SAMPLED, shots, seed)

    @classmethod
    def parse(cls, name: str, shots: int | None = None, seed: int | None = None) -> "FidelityMode":
        kind = ModeKind(name)
        if kind is ModeKind.CIRCUIT_SAMPLED:
            return cls(kind, 100_000 if shots is None else shots, seed)
        return cls(kind)

    @property
    def is_exact(self) -> bool:
        return self.kind is not ModeKind.CIRCUIT_SAMPLED

    def with_seed(self, seed: int) -> "FidelityMode":
        if self.is_exact:
            return self
        return FidelityMode(self.kind, self.shots, seed)

    def to_dict(self) -> dict:
        return {"mode": self.kind.value, "shots": self.shots, "seed": self.seed}


@dataclass(frozen=True)
class SwapTestResult:
    p_zero: float
    fidelity: float
    shots_used: int | None  # None in exact modes
    seed: int | None = None

    @property
    def exact(self) -> bool:
        return self.shots_used is None


def _check_pair(psi: StateVector, phi: StateVector) -> None:
    if psi.n_qubits != phi.n_qubits:
        raise ArityError(f"dimension mismatch: {psi.n_qubits} vs {phi.n_qubits} qubits")


def fidelity_pure(psi: StateVector, phi: StateVector) -> float:
    """``|<psi|phi>|^2`` for pure states."""
    _check_pair(psi, phi)
    overlap = np.vdot(psi.amps, phi.amps)
    return float(min(1.0, abs(overlap) ** 2))


def _parts(reg: Register) -> list[StateVector]:
    return [reg] if isinstance(reg, StateVector) else list(reg)


def fidelity_factorized(parts_a: Sequence[StateVector], parts_b: Sequence[StateVector]) -> float:
    """Fidelity of two product states given factor by factor."""
    parts_a, parts_b = list(parts_a), list(parts_b)
    if len(parts_a) != len(parts_b):
        raise ArityError(f"factor counts differ: {len(parts_a)} vs {len(parts_b)}")
    if not parts_a:
        raise ArityError("need at least one factor")
    out = 1.0
    for a, b in zip(parts_a, parts_b):
        out *= fidelity_pure(a, b)
    return out


def swap_test_circuit(n: int) -> Circuit:
    """Swap-test layout on ``1 + 2n`` qubits: ancilla, then psi, then phi."""
    circ = Circuit(1 + 2 * n).add(H, 0)
    for q in range(n):
        circ = circ.add(CSWAP, 0, 1 + q, 1 + n + q)
    return circ.add(H, 0)


def circuit_p_zero(psi: StateVector, phi: StateVector, *, max_qubits: int = MAX_QUBITS) -> float:
    _check_pair(psi, phi)
    reg = tensor(tensor(zero_state(1), psi, max_qubits=max_qubits), phi, max_qubits=max_qubits)
    out = run(swap_test_circuit(psi.n_qubits), reg)
    return measure_prob(out, 0, 0)


def sample_p_zero(p_zero: float, shots: int, seed: int) -> float:
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.binomial(shots, min(1.0, max(0.0, p_zero))) / shots


def cell_seed(base_seed: int, *coords: int) -> int:
    """Deterministic per-cell seed derived from a base seed and cell coordinates."""
    ss = np.random.SeedSequence([int(base_seed), *(int(c) for c in coords)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def swap_test(psi: Register, phi: Register, mode: FidelityMode = FidelityMode()) -> SwapTestResult:
    """Estimate the fidelity of two registers with the swap test.

    ``psi`` and ``phi`` may each be a single state or a list of factors of a
    product state; factors are tensored where a strategy needs the full state.
    """
    parts_a, parts_b = _parts(psi), _parts(phi)
    kind = mode.kind
    if kind is ModeKind.EXACT:
        f = fidelity_pure(tensor_all(parts_a), tensor_all(parts_b))
        return SwapTestResult(0.5 + 0.5 * f, f, None)
    if kind is ModeKind.FACTORIZED:
        f = fidelity_factorized(parts_a, parts_b)
        return SwapTestResult(0.5 + 0.5 * f, f, None)
    if kind is ModeKind.CIRCUIT_EXACT:
        full_a, full_b = tensor_all(parts_a), tensor_all(parts_b)
        if 1 + 2 * full_a.n_qubits > MAX_QUBITS:
            raise CapacityError(
                f"swap test on {1 + 2 * full_a.n_qubits} qubits exceeds {MAX_QUBITS}"
            )
        p = circuit_p_zero(full_a, full_b)
        return SwapTestResult(p, 2.0 * p - 1.0, None)
    f = fidelity_factorized(parts_a, parts_b)
    p = sample_p_zero(0.5 + 0.5 * f, mode.shots, mode.seed)
    return SwapTestResult(p, 2.0 * p - 1.0, mode.shots, mode.seed)


def sampling_halfwidth(p_zero: float, shots: int, z: float = 4.0) -> float:
    """``z`` standard errors of a Bernoulli frequency estimate."""
    return z * float(np.sqrt(p_zero * (1.0 - p_zero) / shots))
