"""Abstract unit-cost accounting: quantum pipeline vs its classical counterpart.

Quantum: ``2(M+N)K`` angle evaluations, ``6 * ceil(1/eps)`` circuit layers
per (sample, reference) pair, and ``MN`` comparisons for the row maxima.
Classical: the same angle and argmax terms with an ``MNK`` similarity term
(unit cost per attribute comparison).  With these constants the classical
total overtakes the quantum one once ``K > 6 * ceil(1/eps)``.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable

CIRCUIT_DEPTH = 6


@dataclass(frozen=True)
class CostParams:
    m_samples: int
    n_references: int
    k_attributes: int
    epsilon: float

    def __post_init__(self):
        for name in ("m_samples", "n_references", "k_attributes"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not 0.0 < self.epsilon <= 1.0:
            raise ValueError("epsilon must lie in (0, 1]")

    @property
    def repetitions(self) -> int:
        # round before ceil so 1/0.002 stays 500 despite float error
        return math.ceil(round(1.0 / self.epsilon, 9))


@dataclass(frozen=True)
class CostBreakdown:
    angle_cost: int
    fidelity_cost: int
    argmax_cost: int

    @property
    def total(self) -> int:
        return self.angle_cost + self.fidelity_cost + self.argmax_cost


def quantum_cost(p: CostParams) -> CostBreakdown:
    m, n, k = p.m_samples, p.n_references, p.k_attributes
    return CostBreakdown(2 * (m + n) * k, CIRCUIT_DEPTH * p.repetitions * m * n, m * n)


def classical_cost(p: CostParams) -> CostBreakdown:
    m, n, k = p.m_samples, p.n_references, p.k_attributes
    return CostBreakdown(2 * (m + n) * k, m * n * k, m * n)


def crossover_series(base: CostParams, k_values: Iterable[int]) -> list[tuple[int, int, int]]:
    """``(K, quantum_total, classical_total)`` for each K."""
    out = []
    for k in k_values:
        p = replace(base, k_attributes=int(k))
        out.append((p.k_attributes, quantum_cost(p).total, classical_cost(p).total))
    return out


def crossover_k(series: list[tuple[int, int, int]]) -> int | None:
    """Smallest K after which classical stays strictly above quantum."""
    found = None
    for k, q, c in series:
        if c > q:
            if found is None:
                found = k
        else:
            found = None
    return found


def write_csv(series: list[tuple[int, int, int]], path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["k", "quantum", "classical"])
        writer.writerows(series)
    return path
