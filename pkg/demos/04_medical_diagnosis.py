"""Match three patients to four diagnoses with the QZN fidelity pipeline."""
import numpy as np

from quantum_znumbers import madm
from quantum_znumbers.dataio import medical_case
from quantum_znumbers.fidelity import FidelityMode

patients, diagnoses = medical_case()
print("symptoms:", ", ".join(patients.column_labels))

deg_a, deg_b = madm.rotation_angles(patients).degrees(3)
print("\nrotation angles for", patients.row_labels[0], "(A then B, degrees):")
print("  ", deg_a[0], deg_b[0])

qfm = madm.build_qfm(patients, diagnoses)
np.set_printoptions(precision=4, suppress=True)
print("\nfidelity matrix (rows: patients, columns:", ", ".join(diagnoses.row_labels) + ")")
print(qfm.values)

for d in madm.decide(qfm):
    print(f"  {d.sample:<8} -> {d.reference}  ({d.score:.4f})")

# A finite number of shots jitters the scores, but the winners hold.
noisy = madm.build_qfm(patients, diagnoses, FidelityMode.sampled(100_000, seed=3))
print("\nwith 100000 shots per cell:", madm.decide(noisy).labels)
