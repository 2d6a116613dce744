import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import TARGET_PM, TARGET_QFS, QFS_BASED, REF_A, SAMPLE_A, ZN_BASED
from oracles import closed_form_qfs_score
from quantum_znumbers import baselines, madm
from quantum_znumbers.errors import UndefinedCorrelationError

vec = st.lists(st.floats(-100, 100, allow_nan=False), min_size=3, max_size=8)


def test_pearson_matches_numpy_oracle(rng):
    for _ in range(200):
        n = int(rng.integers(2, 10))
        u, v = rng.normal(size=n), rng.normal(size=n)
        assert baselines.pearson(u, v) == pytest.approx(np.corrcoef(u, v)[0, 1], abs=1e-12)


@given(vec, st.floats(0.1, 10), st.floats(-10, 10))
def test_pearson_scale_shift_invariant(u, scale, shift):
    v = list(reversed(u))
    try:
        r = baselines.pearson(u, v)
    except UndefinedCorrelationError:
        return
    assert baselines.pearson([scale * x + shift for x in u], v) == pytest.approx(r, abs=1e-9)


def test_pearson_constant_vector_undefined():
    with pytest.raises(UndefinedCorrelationError):
        baselines.pearson([0.3, 0.3, 0.3], [0.1, 0.2, 0.3])


def test_pearson_examples():
    assert baselines.pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0)
    assert baselines.pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)


def test_combine_classical(medical):
    szm, _ = medical
    assert baselines.combine_classical(szm)[0, 0] == pytest.approx(0.2695, abs=1e-15)


def test_zn_pipeline(medical):
    szm, rzm = medical
    pm, report = baselines.zn_pipeline(szm, rzm)
    np.testing.assert_allclose(pm.values, TARGET_PM, atol=0.005)
    assert report.labels == ZN_BASED
    assert not pm.undefined.any()


def test_pearson_matrix_undefined_cells():
    s = madm.build_zmatrix([[(0.5, 0.5), (0.5, 0.5)]])
    r = madm.build_zmatrix([[(0.2, 0.3), (0.6, 0.9)]])
    pm = baselines.pearson_matrix(s, r)
    assert pm.undefined.all()
    assert madm.decide(pm.values).labels == [None]


def test_qfs_pipeline(medical):
    szm, rzm = medical
    qfm, report = baselines.qfs_pipeline(szm, rzm)
    np.testing.assert_allclose(qfm.values, TARGET_QFS, atol=0.03)
    for i in range(3):
        for x in range(4):
            assert qfm.values[i, x] == pytest.approx(closed_form_qfs_score(SAMPLE_A[i], REF_A[x]), abs=1e-12)
    assert report.labels == QFS_BASED


def test_bob_is_the_only_divergence(medical):
    szm, rzm = medical
    proposed = madm.decide(madm.build_qfm(szm, rzm)).labels
    qfs = baselines.qfs_pipeline(szm, rzm)[1].labels
    diff = [i for i, (a, b) in enumerate(zip(proposed, qfs)) if a != b]
    assert diff == [1]
    assert qfs[1] == "Malaria"


def test_unit_reliability_agreement(medical):
    szm, rzm = (m.with_reliability(1.0) for m in medical)
    np.testing.assert_allclose(
        baselines.qfs_pipeline(szm, rzm)[0].values, madm.build_qfm(szm, rzm).values, atol=1e-12
    )


def test_qfs_states_ignore_reliability(medical):
    szm, _ = medical
    a = baselines.qfs_states(szm)
    b = baselines.qfs_states(szm.with_reliability(1.0))
    assert all(x.allclose(y, atol=0) for ra, rb in zip(a, b) for x, y in zip(ra, rb))
