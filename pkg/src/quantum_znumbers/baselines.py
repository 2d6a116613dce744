"""Comparison algorithms for the decision pipeline.

``zn_pipeline``
    Classical: fuse each Z-number to ``a * b`` and score rows by Pearson
    correlation.
``qfs_pipeline``
    Quantum but reliability-blind: each attribute becomes the single qubit
    ``sqrt(a)|0> + sqrt(1-a)|1>`` and rows are scored by swap-test fidelity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ArityError, UndefinedCorrelationError
from .fidelity import FidelityMode, ModeKind, fidelity_factorized, swap_test
from .madm import DecisionReport, FidelityMatrix, ZMatrix, decide, fill_matrix
from .qzn import encode_membership
from .statevector import StateVector


@dataclass(frozen=True)
class PearsonMatrix:
    values: np.ndarray  # NaN where the correlation is undefined
    undefined: np.ndarray
    row_labels: tuple[str, ...] = ()
    column_labels: tuple[str, ...] = ()


def combine_classical(m: ZMatrix) -> np.ndarray:
    """Elementwise ``mu_A * mu_B``."""
    return m.a * m.b


def pearson(u: Sequence[float], v: Sequence[float]) -> float:
    """Pearson correlation with population moments.

    Raises UndefinedCorrelationError when either vector is constant.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1:
        raise ArityError("pearson needs two 1-D vectors of equal length")
    if u.size < 2:
        raise ArityError("pearson needs at least two observations")
    du, dv = u - u.mean(), v - v.mean()
    su, sv = np.sqrt(np.mean(du * du)), np.sqrt(np.mean(dv * dv))
    # relative threshold so float residue of a constant vector counts as constant
    if su <= 1e-15 * max(1.0, np.abs(u).max()) or sv <= 1e-15 * max(1.0, np.abs(v).max()):
        raise UndefinedCorrelationError("correlation undefined for a constant vector")
    r = np.mean(du * dv) / (su * sv)
    return float(np.clip(r, -1.0, 1.0))


def pearson_matrix(szm: ZMatrix, rzm: ZMatrix) -> PearsonMatrix:
    if szm.k != rzm.k:
        raise ArityError(f"attribute counts differ: {szm.k} vs {rzm.k}")
    cs, cr = combine_classical(szm), combine_classical(rzm)
    values = np.full((cs.shape[0], cr.shape[0]), np.nan)
    for i in range(cs.shape[0]):
        for x in range(cr.shape[0]):
            try:
                values[i, x] = pearson(cs[i], cr[x])
            except UndefinedCorrelationError:
                pass
    return PearsonMatrix(values, np.isnan(values), szm.row_labels, rzm.row_labels)


def zn_pipeline(szm: ZMatrix, rzm: ZMatrix) -> tuple[PearsonMatrix, DecisionReport]:
    pm = pearson_matrix(szm, rzm)
    return pm, decide(pm.values, rzm.row_labels, szm.row_labels)


def qfs_states(m: ZMatrix) -> list[list[StateVector]]:
    """Per-row, per-attribute single-qubit states; reliabilities are ignored."""
    return [[encode_membership(mu).state for mu in row] for row in m.a]


def qfs_pipeline(
    szm: ZMatrix,
    rzm: ZMatrix,
    mode: FidelityMode = FidelityMode(),
    workers: int | None = None,
) -> tuple[FidelityMatrix, DecisionReport]:
    if szm.k != rzm.k:
        raise ArityError(f"attribute counts differ: {szm.k} vs {rzm.k}")
    s_rows, r_rows = qfs_states(szm), qfs_states(rzm)

    def cell(i, x, m):
        if m.kind is ModeKind.EXACT:
            return fidelity_factorized(s_rows[i], r_rows[x])
        return swap_test(s_rows[i], r_rows[x], m).fidelity

    values, seeds = fill_matrix(len(s_rows), len(r_rows), cell, mode, workers)
    qfm = FidelityMatrix(values, mode, szm.row_labels, rzm.row_labels, seeds)
    return qfm, decide(qfm)
