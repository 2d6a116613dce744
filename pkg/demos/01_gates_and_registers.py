"""Build registers, apply the five gates, and read out measurement odds."""
import math

from quantum_znumbers.statevector import (
    CCNOT, CSWAP, H, RY, X, Circuit, StateVector, apply, collapse, measure_prob, run, tensor, zero_state,
)

print("Toffoli and Fredkin on every three-bit basis state:")
for idx in range(8):
    bits = f"{idx:03b}"
    t = apply(StateVector.basis(bits), CCNOT, [0, 1, 2]).dump().split()[0]
    f = apply(StateVector.basis(bits), CSWAP, [0, 1, 2]).dump().split()[0]
    print(f"  |{bits}>   CCNOT -> |{t}>   CSWAP -> |{f}>")

# A y-rotation by theta sends |0> to cos(theta/2)|0> + sin(theta/2)|1>.
q = apply(zero_state(1), RY(math.pi / 2), 0)
print("\nRY(pi/2)|0>:")
print(q.dump())

pair = tensor(q, StateVector.qubit(math.sqrt(0.75), math.sqrt(0.25)))
print("\nTensoring it with sqrt(.75)|0> + sqrt(.25)|1> gives")
print(pair.dump())

split = run(Circuit(2).add(H, 0).add(X, 1), zero_state(2))
print("\nP(qubit 0 reads 0) on H|0> ⊗ X|0>:", round(measure_prob(split, 0, 0), 6))
print("state after observing qubit 0 = 1:")
print(collapse(split, 0, 1).dump())
