"""Quantum Z-numbers: gate-level fuzzy operations, swap-test fidelity and MADM."""
from .fidelity import FidelityMode, SwapTestResult, fidelity_factorized, fidelity_pure, swap_test
from .fuzzy import ZNumber, complement, qfs_state, t_conorm, t_norm
from .madm import ZMatrix, build_qfm, build_zmatrix, decide, rotation_angles
from .qzn import CQzn, Qmf, Qzn, combine, equals, from_z, includes, intersect, prob_zero, union
from .statevector import Circuit, StateVector, apply, collapse, measure_prob, run, tensor

__version__ = "0.1.0"
