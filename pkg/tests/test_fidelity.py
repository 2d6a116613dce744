import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import combined_amplitudes, dense_1q, dense_cswap, GATE_MATRICES
from quantum_znumbers.errors import ArityError, CapacityError
from quantum_znumbers.fidelity import (
    FidelityMode,
    ModeKind,
    cell_seed,
    fidelity_factorized,
    fidelity_pure,
    sampling_halfwidth,
    swap_test,
)
from quantum_znumbers.statevector import StateVector, random_state, tensor_all


def _sv(v):
    return StateVector(np.asarray(v, dtype=complex))


def test_fidelity_pure_examples():
    s = _sv(combined_amplitudes(0.3, 0.8))
    assert fidelity_pure(s, s) == pytest.approx(1.0, abs=1e-15)
    assert fidelity_pure(StateVector.basis("0"), StateVector.basis("1")) == 0.0
    a, b = combined_amplitudes(0.5, 0.75), combined_amplitudes(0.75, 0.5)
    brute = abs(sum(x * y for x, y in zip(a, b))) ** 2
    assert fidelity_pure(_sv(a), _sv(b)) == pytest.approx(brute, abs=1e-12)
    assert brute == pytest.approx(0.870513, abs=1e-6)


def test_fidelity_factorized_examples(rng):
    s = [random_state(1, rng), random_state(2, rng)]
    assert fidelity_factorized(s, s) == pytest.approx(1.0, abs=1e-12)
    orth = [StateVector.basis("0"), s[1]]
    assert fidelity_factorized(orth, [StateVector.basis("1"), s[1]]) == 0.0
    for _ in range(20):
        a = [random_state(3, rng), random_state(3, rng)]
        b = [random_state(3, rng), random_state(3, rng)]
        assert fidelity_factorized(a, b) == pytest.approx(fidelity_pure(tensor_all(a), tensor_all(b)), abs=1e-12)


def test_swap_test_examples(rng):
    psi = random_state(2, rng)
    r = swap_test(psi, psi, FidelityMode.circuit_exact())
    assert r.p_zero == pytest.approx(1.0, abs=1e-12) and r.fidelity == pytest.approx(1.0, abs=1e-12)
    r = swap_test(StateVector.basis("01"), StateVector.basis("10"), FidelityMode.circuit_exact())
    assert r.p_zero == pytest.approx(0.5, abs=1e-12) and r.fidelity == pytest.approx(0.0, abs=1e-12)


def _dense_swap_p_zero(psi, phi):
    n = psi.n_qubits
    total = 1 + 2 * n
    reg = np.kron(np.kron([1, 0], psi.amps), phi.amps)
    u = dense_1q(GATE_MATRICES["H"], 0, total)
    for q in range(n):
        u = dense_cswap(0, 1 + q, 1 + n + q, total) @ u
    u = dense_1q(GATE_MATRICES["H"], 0, total) @ u
    out = u @ reg
    return float(np.sum(np.abs(out[: 1 << (total - 1)]) ** 2))


def test_circuit_matches_dense_swap_oracle(rng):
    for n in (1, 2):
        for _ in range(5):
            psi, phi = random_state(n, rng), random_state(n, rng)
            r = swap_test(psi, phi, FidelityMode.circuit_exact())
            assert r.p_zero == pytest.approx(_dense_swap_p_zero(psi, phi), abs=1e-12)


def test_mode_agreement_on_combined_products(rng):
    for _ in range(30):
        k = int(rng.integers(1, 3))
        a = [_sv(combined_amplitudes(*rng.uniform(0, 1, 2))) for _ in range(k)]
        b = [_sv(combined_amplitudes(*rng.uniform(0, 1, 2))) for _ in range(k)]
        res = [swap_test(a, b, m) for m in (FidelityMode.exact(), FidelityMode.factorized(), FidelityMode.circuit_exact())]
        for r in res:
            assert r.fidelity == pytest.approx(res[0].fidelity, abs=1e-12)
            assert r.p_zero == pytest.approx(0.5 + 0.5 * r.fidelity, abs=1e-12)


def test_sampling_consistency():
    a = [_sv(combined_amplitudes(0.35, 0.77))]
    b = [_sv(combined_amplitudes(0.84, 0.95))]
    p = swap_test(a, b).p_zero
    shots = 10**6
    hw = sampling_halfwidth(p, shots)
    inside = sum(abs(swap_test(a, b, FidelityMode.sampled(shots, s)).p_zero - p) <= hw for s in range(100))
    assert inside >= 99


def test_sampled_result_records_seed_and_is_reproducible():
    a, b = StateVector.basis("0"), _sv([math.sqrt(0.5), math.sqrt(0.5)])
    r1 = swap_test(a, b, FidelityMode.sampled(1000, 42))
    r2 = swap_test(a, b, FidelityMode.sampled(1000, 42))
    assert r1 == r2 and r1.seed == 42 and r1.shots_used == 1000 and not r1.exact


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_symmetry_and_bounds(n, seed):
    rng = np.random.default_rng(seed)
    psi, phi = random_state(n, rng), random_state(n, rng)
    f = fidelity_pure(psi, phi)
    assert f == fidelity_pure(phi, psi)
    assert 0.0 <= f <= 1.0
    rotated = StateVector(psi.amps * np.exp(1j * rng.uniform(0, 2 * np.pi)))
    assert fidelity_pure(psi, rotated) == pytest.approx(1.0, abs=1e-9)


def test_errors():
    with pytest.raises(ArityError):
        fidelity_pure(StateVector.basis("0"), StateVector.basis("00"))
    with pytest.raises(ArityError):
        fidelity_factorized([StateVector.basis("0")], [])
    big = StateVector.basis("0" * 13)
    with pytest.raises(CapacityError):
        swap_test(big, big, FidelityMode.circuit_exact())
    with pytest.raises(ValueError):
        FidelityMode.sampled(0)


def test_mode_parsing():
    assert FidelityMode.parse("exact").kind is ModeKind.EXACT
    m = FidelityMode.parse("circuit-sampled", 500, 3)
    assert (m.shots, m.seed) == (500, 3)
    assert FidelityMode.parse("circuit-sampled").shots == 100_000


def test_cell_seed_is_deterministic_and_distinct():
    assert cell_seed(0, 1, 2) == cell_seed(0, 1, 2)
    assert len({cell_seed(0, i, x) for i in range(5) for x in range(5)}) == 25
