"""Two reference pipelines against the reliability-aware one.

The classical path multiplies each Z-number out and correlates rows.
The quantum-fuzzy-set path keeps only the restriction value, so it cannot
see how trustworthy each symptom reading is.
"""
from quantum_znumbers import baselines, madm
from quantum_znumbers.dataio import medical_case

patients, diagnoses = medical_case()
proposed = madm.decide(madm.build_qfm(patients, diagnoses)).labels
_, zn = baselines.zn_pipeline(patients, diagnoses)
_, qfs = baselines.qfs_pipeline(patients, diagnoses)

print(f"{'patient':<9}{'QZN':<18}{'Pearson':<18}{'QFS':<18}")
for i, name in enumerate(patients.row_labels):
    print(f"{name:<9}{proposed[i]:<18}{zn.labels[i]:<18}{qfs.labels[i]:<18}")

trusting = [m.with_reliability(1.0) for m in (patients, diagnoses)]
gap = abs(baselines.qfs_pipeline(*trusting)[0].values - madm.build_qfm(*trusting).values).max()
print(f"\nwith every reliability set to 1 the QFS and QZN scores differ by at most {gap:.1e}")
