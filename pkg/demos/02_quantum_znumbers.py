"""Quantum Z-numbers: encode, compare, and combine them with gate circuits.

Each operation runs on the simulator; the readout on the designated wire
lands on the familiar classical fuzzy operator.
"""
from quantum_znumbers import qzn as Q
from quantum_znumbers.fuzzy import ZNumber
from quantum_znumbers.worked_examples import phase_decorated_pair

x, y = ZNumber(0.35, 0.77), ZNumber(0.41, 0.83)
qx, qy = Q.from_z(x), Q.from_z(y)
print(f"{x} encodes as {Q.format_qzn(qx)}")
print(f"{y} encodes as {Q.format_qzn(qy)}\n")

def show(name, pair):
    print(f"{name:<13} ({pair[0]:.4f}, {pair[1]:.4f})")


show("complement", Q.complement(qx).prob_pair())
show("intersection", Q.intersect(qx, qy).prob_pair())
show("union", Q.union(qx, qy).prob_pair())

c = Q.combine(qx)
print(f"\nfusing A with its reliability B: p(|0>) = {Q.prob_zero(c.combined):.4f} = {x.a} * {x.b}")

z1, z2, z3 = phase_decorated_pair()
print("\nPhases never change the readout, so ordering only looks at probabilities:")
print(f"  {Q.format_qzn(z1, 3)}")
print(f"  {Q.format_qzn(z2, 3)}")
print("  first within second:", Q.includes(z1, z2), "| second within first:", Q.includes(z2, z1))
print("  first equals a re-phased copy:", Q.equals(z1, z3))
