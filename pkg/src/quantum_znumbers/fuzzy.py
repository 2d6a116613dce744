"""Classical fuzzy operators, Z-numbers and quantum fuzzy set states.

The operator family is fixed: standard complement ``1 - x``, algebraic
product ``xy`` and algebraic sum ``x + y - xy``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Sequence

import numpy as np

from .errors import MembershipError
from .statevector import MAX_QUBITS, StateVector, tensor_all


def check_membership(x, name: str = "membership") -> float:
    """Validate a membership degree; out-of-range values are rejected, not clamped."""
    try:
        value = float(x)
    except (TypeError, ValueError):
        raise MembershipError(f"{name} {x!r} is not a number") from None
    if not 0.0 <= value <= 1.0:
        raise MembershipError(f"{name} {value!r} outside [0, 1]")
    return value


@dataclass(frozen=True)
class ZNumber:
    """Pair ``<a, b>``: a fuzzy restriction ``a`` and its reliability ``b``."""

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", check_membership(self.a, "restriction a"))
        object.__setattr__(self, "b", check_membership(self.b, "reliability b"))

    def __iter__(self):
        yield self.a
        yield self.b

    def __str__(self) -> str:
        return f"<{self.a:g},{self.b:g}>"


def complement(x: float) -> float:
    return 1.0 - check_membership(x)


def t_norm(x: float, y: float) -> float:
    return check_membership(x) * check_membership(y)


def t_conorm(x: float, y: float) -> float:
    x, y = check_membership(x), check_membership(y)
    return x + y - x * y


def z_complement(z: ZNumber) -> ZNumber:
    return ZNumber(complement(z.a), complement(z.b))


def z_intersection(z1: ZNumber, z2: ZNumber) -> ZNumber:
    return ZNumber(t_norm(z1.a, z2.a), t_norm(z1.b, z2.b))


def z_union(z1: ZNumber, z2: ZNumber) -> ZNumber:
    return ZNumber(t_conorm(z1.a, z2.a), t_conorm(z1.b, z2.b))


def qfs_state(profile: Sequence[float], *, max_qubits: int = MAX_QUBITS) -> StateVector:
    """Product state with one qubit per universe element.

    Each qubit is ``sqrt(1 - f)|0> + sqrt(f)|1>``, so the marginal probability
    of ``|1>`` on qubit ``j`` equals ``f(x_j)``.  Note the opposite placement
    from QZN conversion, where ``sqrt(mu)`` sits on ``|0>``.
    """
    values = [check_membership(f, f"profile[{j}]") for j, f in enumerate(profile)]
    if not values:
        raise ValueError("membership profile must be nonempty")
    qubits = [StateVector([sqrt(1.0 - f), sqrt(f)]) for f in values]
    return tensor_all(qubits, max_qubits=max_qubits)


def membership_array(values, name: str = "memberships") -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any((arr < 0.0) | (arr > 1.0)):
        bad = np.argwhere(~((arr >= 0.0) & (arr <= 1.0)))
        raise MembershipError(f"{name} has values outside [0, 1] at {bad.tolist()}")
    return arr
