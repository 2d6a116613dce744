"""Where the quantum pipeline's unit cost drops below the classical one."""
from quantum_znumbers import cost

base = cost.CostParams(m_samples=10_000, n_references=10_000, k_attributes=1, epsilon=0.002)
series = cost.crossover_series(base, [1, 100, 1000, 3000, 3001, 5000, 10_000])
print(f"{'K':>6} {'quantum':>16} {'classical':>16}")
for k, q, c in series:
    mark = "  <- classical dearer" if c > q else ""
    print(f"{k:>6} {q:>16,} {c:>16,}{mark}")

full = cost.crossover_series(base, range(1, 10_001))
print("\ncrossover K* =", cost.crossover_k(full), "with 1/eps =", base.repetitions)
