"""QZN-based multi-attribute decision making.

Samples and references are rows of Z-numbers over the same K attributes.
Each entry is rotated into a QZN, fused into its three-qubit combined state,
and every (sample, reference) pair is scored with the swap-test fidelity of
the two K-fold product registers.  Each sample is matched to the reference
with the highest score.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ArityError, MembershipError
from .fidelity import (
    FidelityMode,
    ModeKind,
    cell_seed,
    fidelity_factorized,
    swap_test,
)
from .fuzzy import ZNumber
from .qzn import Qzn, combine, from_angles
from .statevector import (
    CCNOT,
    CSWAP,
    RY,
    H,
    X,
    Circuit,
    StateVector,
    measure_prob,
    run,
    tensor,
    tensor_all,
    zero_state,
)

TIE_TOL = 1e-9


@dataclass(frozen=True)
class ZMatrix:
    """Grid of Z-numbers stored as two float arrays of shape ``(rows, K)``."""

    a: np.ndarray
    b: np.ndarray
    row_labels: tuple[str, ...]
    column_labels: tuple[str, ...]

    def __post_init__(self):
        for arr in (self.a, self.b):
            arr.setflags(write=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def k(self) -> int:
        return self.a.shape[1]

    def entry(self, i: int, j: int) -> ZNumber:
        return ZNumber(self.a[i, j], self.b[i, j])

    def row(self, i: int) -> list[ZNumber]:
        return [self.entry(i, j) for j in range(self.k)]

    def pairs(self) -> list[list[tuple[float, float]]]:
        return [[(float(x), float(y)) for x, y in zip(ra, rb)] for ra, rb in zip(self.a, self.b)]

    def take_rows(self, order: Sequence[int]) -> "ZMatrix":
        order = list(order)
        return ZMatrix(
            self.a[order].copy(),
            self.b[order].copy(),
            tuple(self.row_labels[i] for i in order),
            self.column_labels,
        )

    def take_columns(self, order: Sequence[int]) -> "ZMatrix":
        order = list(order)
        return ZMatrix(
            self.a[:, order].copy(),
            self.b[:, order].copy(),
            self.row_labels,
            tuple(self.column_labels[j] for j in order),
        )

    def with_reliability(self, value: float = 1.0) -> "ZMatrix":
        return ZMatrix(self.a.copy(), np.full_like(self.b, value), self.row_labels, self.column_labels)


def build_zmatrix(raw, row_labels=None, column_labels=None) -> ZMatrix:
    """Validate a grid of ``(a, b)`` pairs (or ZNumbers) into a ZMatrix."""
    rows = [list(r) for r in raw]
    if not rows:
        raise ArityError("Z-number matrix needs at least one row")
    k = len(rows[0])
    if k == 0:
        raise ArityError("Z-number matrix needs at least one attribute")
    a = np.empty((len(rows), k))
    b = np.empty((len(rows), k))
    for i, row in enumerate(rows):
        if len(row) != k:
            raise ArityError(f"row {i} has {len(row)} entries, expected {k}")
        for j, entry in enumerate(row):
            try:
                z = entry if isinstance(entry, ZNumber) else ZNumber(*entry)
            except MembershipError as exc:
                raise MembershipError(f"row {i}, column {j}: {exc}") from None
            except TypeError:
                raise ArityError(f"row {i}, column {j}: expected an (a, b) pair") from None
            a[i, j], b[i, j] = z.a, z.b
    row_labels = tuple(row_labels) if row_labels is not None else tuple(f"row{i + 1}" for i in range(len(rows)))
    column_labels = tuple(column_labels) if column_labels is not None else tuple(f"attr{j + 1}" for j in range(k))
    if len(row_labels) != len(rows) or len(column_labels) != k:
        raise ArityError("label counts do not match the matrix shape")
    return ZMatrix(a, b, row_labels, column_labels)


@dataclass(frozen=True)
class AngleMatrix:
    """RotY angles (radians) for both components of every entry."""

    theta_a: np.ndarray
    theta_b: np.ndarray

    def degrees(self, decimals: int | None = None) -> tuple[np.ndarray, np.ndarray]:
        da, db = np.degrees(self.theta_a), np.degrees(self.theta_b)
        if decimals is not None:
            da, db = np.round(da, decimals), np.round(db, decimals)
        return da, db


def _angles(mu: np.ndarray) -> np.ndarray:
    return 2.0 * np.arccos(np.clip(np.sqrt(mu), 0.0, 1.0))


def rotation_angles(m: ZMatrix) -> AngleMatrix:
    return AngleMatrix(_angles(m.a), _angles(m.b))


def encode_row(theta_a: Sequence[float], theta_b: Sequence[float], label: str | None = None) -> list[Qzn]:
    """One QZN per attribute, each prepared by rotating ``|0>``."""
    if len(theta_a) != len(theta_b):
        raise ArityError("angle rows differ in length")
    return [from_angles(ta, tb, label) for ta, tb in zip(theta_a, theta_b)]


def combine_row(qzns: Sequence[Qzn]) -> list[StateVector]:
    return [combine(z).combined.state for z in qzns]


def _prep_block(theta_a: float, theta_b: float) -> StateVector:
    # RotY on both membership wires, aux wire flipped to |1>, then X, X, CCNOT
    circ = (
        Circuit(3)
        .add(RY(theta_a), 0)
        .add(RY(theta_b), 1)
        .add(X, 2)
        .add(X, 0)
        .add(X, 1)
        .add(CCNOT, 0, 1, 2)
    )
    return run(circ, zero_state(3))


def register_p_zero(sample_angles, reference_angles) -> float:
    """Ancilla ``|0>`` probability on the full swap-test register.

    ``*_angles`` are sequences of ``(theta_a, theta_b)``.  Each attribute block
    is prepared by its own gate sequence, the blocks are tensored into the
    whole ``1 + 6K`` qubit register, and the swap test runs on that register.
    """
    blocks_s = [_prep_block(ta, tb) for ta, tb in sample_angles]
    blocks_r = [_prep_block(ta, tb) for ta, tb in reference_angles]
    if len(blocks_s) != len(blocks_r):
        raise ArityError("attribute counts differ")
    n = 3 * len(blocks_s)
    reg = tensor(zero_state(1), tensor(tensor_all(blocks_s), tensor_all(blocks_r)))
    circ = Circuit(1 + 2 * n).add(H, 0)
    for q in range(n):
        circ = circ.add(CSWAP, 0, 1 + q, 1 + n + q)
    circ = circ.add(H, 0)
    return measure_prob(run(circ, reg), 0, 0)


def fidelity_coefficient(
    sample_row: Sequence[StateVector],
    reference_row: Sequence[StateVector],
    mode: FidelityMode = FidelityMode(),
) -> float:
    """``F = 2 p(|0>) - 1`` for two rows of combined states.

    Exact mode evaluates the product of per-attribute overlaps, which equals
    the fidelity of the full registers.
    """
    if len(sample_row) != len(reference_row):
        raise ArityError(f"attribute counts differ: {len(sample_row)} vs {len(reference_row)}")
    if mode.kind is ModeKind.EXACT:
        return fidelity_factorized(sample_row, reference_row)
    return swap_test(list(sample_row), list(reference_row), mode).fidelity


@dataclass(frozen=True)
class FidelityMatrix:
    values: np.ndarray
    mode: FidelityMode
    row_labels: tuple[str, ...] = ()
    column_labels: tuple[str, ...] = ()
    seeds: np.ndarray | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


def fill_matrix(
    rows: int,
    cols: int,
    cell: Callable[[int, int, FidelityMode], float],
    mode: FidelityMode,
    workers: int | None = None,
) -> tuple[np.ndarray, np.ndarray | None]:
    """Evaluate ``cell(i, x, cell_mode)`` over the grid.

    In sampled mode each cell gets its own seed derived from
    ``(mode.seed, i, x)``, so the result does not depend on evaluation order
    or on ``workers``.
    """
    coords = [(i, x) for i in range(rows) for x in range(cols)]
    seeds = None
    if not mode.is_exact:
        seeds = np.array([[cell_seed(mode.seed, i, x) for x in range(cols)] for i in range(rows)], dtype=np.uint64)

    def one(ix):
        i, x = ix
        m = mode if seeds is None else mode.with_seed(int(seeds[i, x]))
        return cell(i, x, m)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(one, coords))
    else:
        flat = [one(ix) for ix in coords]
    return np.array(flat, dtype=float).reshape(rows, cols), seeds


def build_qfm(
    szm: ZMatrix,
    rzm: ZMatrix,
    mode: FidelityMode = FidelityMode(),
    workers: int | None = None,
) -> FidelityMatrix:
    if szm.k != rzm.k:
        raise ArityError(f"attribute counts differ: {szm.k} vs {rzm.k}")
    sa, ra = rotation_angles(szm), rotation_angles(rzm)

    if mode.kind is ModeKind.CIRCUIT_EXACT:
        s_ang = [list(zip(sa.theta_a[i], sa.theta_b[i])) for i in range(szm.shape[0])]
        r_ang = [list(zip(ra.theta_a[x], ra.theta_b[x])) for x in range(rzm.shape[0])]

        def cell(i, x, m):
            return 2.0 * register_p_zero(s_ang[i], r_ang[x]) - 1.0

    else:
        s_rows = [combine_row(encode_row(sa.theta_a[i], sa.theta_b[i])) for i in range(szm.shape[0])]
        r_rows = [combine_row(encode_row(ra.theta_a[x], ra.theta_b[x])) for x in range(rzm.shape[0])]

        def cell(i, x, m):
            return fidelity_coefficient(s_rows[i], r_rows[x], m)

    values, seeds = fill_matrix(szm.shape[0], rzm.shape[0], cell, mode, workers)
    return FidelityMatrix(values, mode, szm.row_labels, rzm.row_labels, seeds)


@dataclass(frozen=True)
class Decision:
    sample: str
    index: int | None  # None when every score in the row is undefined
    reference: str | None
    score: float
    scores: tuple[float, ...]
    tie: bool

    def to_dict(self) -> dict:
        return {
            "sample": self.sample,
            "reference": self.reference,
            "index": self.index,
            "score": None if self.index is None else self.score,
            "tie": self.tie,
        }


@dataclass(frozen=True)
class DecisionReport:
    decisions: tuple[Decision, ...] = field(default=())

    @property
    def labels(self) -> list[str | None]:
        return [d.reference for d in self.decisions]

    @property
    def indices(self) -> list[int | None]:
        return [d.index for d in self.decisions]

    def __iter__(self):
        return iter(self.decisions)

    def __len__(self) -> int:
        return len(self.decisions)


def decide(scores, reference_labels=None, sample_labels=None, tol: float = TIE_TOL) -> DecisionReport:
    """Row-wise argmax; lowest index wins ties, NaN cells are skipped."""
    if isinstance(scores, FidelityMatrix):
        reference_labels = reference_labels or scores.column_labels or None
        sample_labels = sample_labels or scores.row_labels or None
        scores = scores.values
    values = np.asarray(scores, dtype=float)
    if values.ndim != 2 or values.size == 0:
        raise ArityError("score matrix must be a nonempty 2-D grid")
    m, n = values.shape
    reference_labels = list(reference_labels) if reference_labels else [str(x + 1) for x in range(n)]
    sample_labels = list(sample_labels) if sample_labels else [str(i + 1) for i in range(m)]
    out = []
    for i, row in enumerate(values):
        valid = ~np.isnan(row)
        if not valid.any():
            out.append(Decision(sample_labels[i], None, None, float("nan"), tuple(row), False))
            continue
        best = float(np.max(row[valid]))
        near = np.flatnonzero(valid & (row >= best - tol))
        idx = int(near[0])
        out.append(
            Decision(sample_labels[i], idx, reference_labels[idx], float(row[idx]), tuple(float(v) for v in row), len(near) > 1)
        )
    return DecisionReport(tuple(out))
