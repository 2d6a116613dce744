"""Seven worked QZN examples, one per operation, with their expected outcomes."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import qzn as Q
from .fuzzy import ZNumber, t_conorm, t_norm
from .qzn import Qzn, polar

TOL = 1e-12


@dataclass(frozen=True)
class Check:
    block: str
    description: str
    value: object
    expected: object
    passed: bool

    def line(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        return f"  [{mark}] {self.description}: {_fmt(self.value)} (expected {_fmt(self.expected)})"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, tuple):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    return str(v)


def _close(a, b, tol=TOL) -> bool:
    if isinstance(a, tuple):
        return all(_close(x, y, tol) for x, y in zip(a, b))
    return abs(a - b) <= tol


def _num(block, desc, value, expected, tol=TOL) -> Check:
    return Check(block, desc, value, expected, _close(value, expected, tol))


def _flag(block, desc, value, expected) -> Check:
    return Check(block, desc, value, expected, value is expected)


def phase_decorated_pair() -> tuple[Qzn, Qzn, Qzn]:
    """Three QZNs with phase-decorated amplitudes: z1 ⊆ z2, and z1 = z3."""
    z1 = Qzn.from_amplitudes(
        polar(math.sqrt(0.3), 0.7), polar(math.sqrt(0.7), 1.5),
        polar(math.sqrt(0.6), 0.9), polar(math.sqrt(0.4), 0.3),
    )
    z2 = Qzn.from_amplitudes(
        polar(math.sqrt(0.4), 0.6), polar(math.sqrt(0.6), 0.2),
        polar(math.sqrt(0.7), 0.5), polar(math.sqrt(0.3), 0.4),
    )
    z3 = Qzn.from_amplitudes(
        polar(math.sqrt(0.3), 0.6), polar(math.sqrt(0.7), 0.2),
        polar(math.sqrt(0.6), 0.5), polar(math.sqrt(0.4), 0.4),
    )
    return z1, z2, z3


def replay(x: tuple[float, float] = (0.35, 0.77), y: tuple[float, float] = (0.41, 0.83)) -> list[Check]:
    """Run every worked example; ``x`` and ``y`` feed the intersection/union blocks."""
    checks: list[Check] = []
    z1, z2, z3 = phase_decorated_pair()

    b = "inclusion"
    checks.append(_num(b, "p(|0>) for A1, A2, B1, B2", (Q.prob_zero(z1.a), Q.prob_zero(z2.a), Q.prob_zero(z1.b), Q.prob_zero(z2.b)), (0.3, 0.4, 0.6, 0.7)))
    checks.append(_flag(b, "Z1 ⊆ Z2", Q.includes(z1, z2), True))
    checks.append(_flag(b, "Z2 ⊆ Z1", Q.includes(z2, z1), False))

    b = "equality"
    checks.append(_num(b, "p(|0>) for A1, A2, B1, B2", (Q.prob_zero(z1.a), Q.prob_zero(z3.a), Q.prob_zero(z1.b), Q.prob_zero(z3.b)), (0.3, 0.3, 0.6, 0.6)))
    checks.append(_flag(b, "Z1 = Z2", Q.equals(z1, z3), True))

    b = "complement"
    zc = Q.complement(Q.from_z(ZNumber(0.3, 0.6)))
    checks.append(_num(b, "complement amplitudes", tuple(abs(v) for v in (*zc.a.state.amps, *zc.b.state.amps)), (math.sqrt(0.7), math.sqrt(0.3), math.sqrt(0.4), math.sqrt(0.6))))
    checks.append(_num(b, "complement as Z-number", zc.prob_pair(), (0.7, 0.4)))

    b = "intersection"
    zx, zy = Q.from_z(ZNumber(*x)), Q.from_z(ZNumber(*y))
    zi = Q.intersect(zx, zy)
    checks.append(_num(b, f"p(|0>) on third qubit for {ZNumber(*x)} ∩ {ZNumber(*y)}", zi.prob_pair(), (t_norm(x[0], y[0]), t_norm(x[1], y[1]))))
    checks.append(_flag(b, "circuit state equals closed form", zi.a.state.allclose(Q.intersection_closed_form(zx.a, zy.a)), True))

    b = "union"
    zu = Q.union(zx, zy)
    checks.append(_num(b, f"p(|0>) on third qubit for {ZNumber(*x)} ∪ {ZNumber(*y)}", zu.prob_pair(), (t_conorm(x[0], y[0]), t_conorm(x[1], y[1]))))
    checks.append(_flag(b, "circuit state equals closed form", zu.a.state.allclose(Q.union_closed_form(zx.a, zy.a)), True))

    b = "conversion"
    z = ZNumber(0.5, 0.75)
    checks.append(_num(b, "rotation angles (rad)", (Q.rotation_angle(z.a), Q.rotation_angle(z.b)), (math.pi / 2, math.pi / 3)))
    checks.append(_num(b, "rotation angles (deg)", (math.degrees(Q.rotation_angle(z.a)), math.degrees(Q.rotation_angle(z.b))), (90.0, 60.0), 1e-9))
    zq = Q.from_z(z)
    checks.append(_num(b, "QMF amplitudes", tuple(v.real for v in (*zq.a.state.amps, *zq.b.state.amps)), (math.sqrt(0.5), math.sqrt(0.5), math.sqrt(0.75), math.sqrt(0.25))))

    b = "combination"
    cz = Q.combine(zq)
    p0 = Q.prob_zero(cz.combined)
    checks.append(_num(b, "p(|0>), p(|1>) on third qubit", (p0, 1.0 - p0), (0.375, 0.625)))
    checks.append(_flag(b, "circuit state equals closed form", cz.combined.state.allclose(Q.combined_state_from_z(z)), True))
    return checks


def render(checks: list[Check]) -> str:
    lines, current = [], None
    for c in checks:
        if c.block != current:
            current = c.block
            lines.append(f"{current}:")
        lines.append(c.line())
    passed = sum(c.passed for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines)
