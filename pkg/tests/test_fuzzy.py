import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quantum_znumbers.errors import MembershipError
from quantum_znumbers.fuzzy import (
    ZNumber,
    check_membership,
    complement,
    qfs_state,
    t_conorm,
    t_norm,
    z_complement,
    z_intersection,
    z_union,
)
from quantum_znumbers.statevector import measure_prob

unit = st.floats(0.0, 1.0)


def test_examples():
    assert complement(0.3) == pytest.approx(0.7)
    assert t_norm(0.35, 0.41) == pytest.approx(0.1435, abs=1e-15)
    assert t_conorm(0.35, 0.41) == pytest.approx(0.6165, abs=1e-15)
    z = z_complement(ZNumber(0.3, 0.6))
    assert (z.a, z.b) == pytest.approx((0.7, 0.4))
    zi = z_intersection(ZNumber(0.35, 0.77), ZNumber(0.41, 0.83))
    assert (zi.a, zi.b) == pytest.approx((0.1435, 0.6391), abs=1e-15)
    zu = z_union(ZNumber(0.35, 0.77), ZNumber(0.41, 0.83))
    assert (zu.a, zu.b) == pytest.approx((0.6165, 0.9609), abs=1e-15)


@given(unit, unit, unit)
def test_t_norm_axioms(x, y, z):
    assert t_norm(x, y) == t_norm(y, x)
    assert t_norm(t_norm(x, y), z) == pytest.approx(t_norm(x, t_norm(y, z)), abs=1e-15)
    assert t_norm(x, 1.0) == x
    assert 0.0 <= t_norm(x, y) <= min(x, y) + 1e-15


@given(unit, unit, unit)
def test_t_conorm_axioms(x, y, z):
    assert t_conorm(x, y) == pytest.approx(t_conorm(y, x), abs=1e-15)
    assert t_conorm(t_conorm(x, y), z) == pytest.approx(t_conorm(x, t_conorm(y, z)), abs=1e-14)
    assert t_conorm(x, 0.0) == pytest.approx(x, abs=1e-15)
    assert max(x, y) - 1e-15 <= t_conorm(x, y) <= 1.0


@given(unit, unit)
def test_de_morgan(x, y):
    assert complement(t_norm(x, y)) == pytest.approx(t_conorm(complement(x), complement(y)), abs=1e-15)


@given(unit)
def test_complement_involution(x):
    assert complement(complement(x)) == pytest.approx(x, abs=1e-15)


@pytest.mark.parametrize("bad", [-0.01, 1.2, math.nan, math.inf])
def test_membership_rejects_out_of_range(bad):
    with pytest.raises(MembershipError):
        check_membership(bad)
    with pytest.raises(MembershipError):
        ZNumber(0.5, bad)


def test_qfs_state_examples():
    s = qfs_state([0.0])
    np.testing.assert_allclose(s.amps, [1, 0])
    s = qfs_state([0.25, 1.0])
    # sqrt(1-f)|0> + sqrt(f)|1> per element
    np.testing.assert_allclose(s.amps, [0, math.sqrt(0.75), 0, math.sqrt(0.25)], atol=1e-15)


@given(st.lists(unit, min_size=1, max_size=6))
def test_qfs_marginals_recover_profile(profile):
    s = qfs_state(profile)
    assert s.n_qubits == len(profile)
    for j, f in enumerate(profile):
        assert measure_prob(s, j, 1) == pytest.approx(f, abs=1e-12)


def test_qfs_state_rejects_empty():
    with pytest.raises(ValueError):
        qfs_state([])
