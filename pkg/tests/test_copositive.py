import math

import numpy as np
import pytest

from circone.circulant import circ
from circone.cones.copositive import (
    cop5_extremal_catalog,
    cop_member,
    cop_necessary,
    cop_validate,
    horn_vector,
    spn5_extremal_catalog,
    spn_member,
)
from circone.cones.cp import cp5_extremal_catalog
from circone.cones.dnn import dnn_extremal_catalog
from circone.cones.families import witness_vector
from conftest import random_symmetric


def h(theta):
    return witness_vector(5, 1, theta)


def test_horn_vector():
    assert np.allclose(horn_vector(), h(0))
    assert np.allclose(circ(horn_vector())[0], [1, -1, 1, 1, -1])


def test_cop_necessary_examples():
    assert cop_necessary(horn_vector())
    assert not cop_necessary([-1, 0, 0, 0, 0])
    # 2 a_0 + a_2 + a_-2 < 0
    assert not cop_necessary([1, 0, -2, -2, 0])


def test_cop_validate_examples():
    assert cop_validate(horn_vector())[0]
    assert cop_validate(h(math.pi / 10))[0]
    ok, v, f = cop_validate([1, -2, 0, 0, -2])
    assert not ok
    assert np.all(v >= 0) and v @ circ([1, -2, 0, 0, -2]) @ v == pytest.approx(f) and f < 0


def test_witness_family_is_copositive_only_in_range():
    for t in np.linspace(0, math.pi / 5, 9):
        assert cop_validate(h(t))[0]
        assert cop_validate(witness_vector(5, 2, t))[0]
    assert not cop_validate(h(math.pi / 4))[0]


def test_spn5_catalog_pairs_nonnegatively_with_dnn5():
    dnn = [r.vector for r in dnn_extremal_catalog(5)]
    for r in spn5_extremal_catalog():
        pairs = [float(r.vector @ x) for x in dnn]
        assert min(pairs) >= -1e-12
        assert spn_member(r.vector).is_member


def test_cop5_catalog_is_copositive():
    for r in cop5_extremal_catalog().rays(5):
        assert cop_validate(r.vector)[0]


def test_catalogs_are_dual():
    # every copositive generator pairs nonnegatively with every completely positive generator
    cp = cp5_extremal_catalog().rays(33)
    for w in cop5_extremal_catalog().rays(33):
        assert min(float(w.vector @ x.vector) for x in cp) >= -1e-12


@pytest.mark.parametrize("d", [4, 5, 6])
def test_spn_member_matches_dnn_table_duality(d, rng):
    # the PSD-plus-nonnegative cone is the dual of the DNN cone, whose extremal rays are tabulated
    rays = [r.vector for r in dnn_extremal_catalog(d)]
    agree = 0
    for _ in range(150):
        a = random_symmetric(rng, d, -1, 1)
        a[0] = abs(a[0]) + rng.uniform(0, 1)
        margin = min(float(r @ a) for r in rays)
        if abs(margin) < 1e-7:
            continue
        v = spn_member(a)
        assert v.is_member == (margin > 0)
        if v.is_member:
            assert v.certificate.verify(a, 1e-8)
        else:
            w = v.certificate.vector
            assert w @ a < 0 and np.all(w >= -1e-12)
        agree += 1
    assert agree > 100


def test_spn_examples():
    assert spn_member(h(math.pi / 5)).is_member
    assert spn_member(horn_vector()).is_not_member


def test_cop_member_d5_horn_and_families():
    assert cop_member(horn_vector()).is_member
    assert cop_member(h(math.pi / 5)).is_member
    v = cop_member(h(math.pi / 4))
    assert v.is_not_member
    x = v.certificate.vector
    assert x @ h(math.pi / 4) < 0


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7])
def test_cop_member_agrees_with_search(d, rng):
    for _ in range(12):
        a = random_symmetric(rng, d, -1, 1)
        a[0] = 1.0
        v = cop_member(a)
        ok, _, f = cop_validate(a, starts=96, seed=1)
        if v.is_not_member:
            x = v.certificate.vector
            assert x @ a < 0
            assert not ok
        elif v.is_member:
            assert ok or f > -1e-7
            if d <= 5:
                assert ok


def test_cop_member_not_member_witness_is_completely_positive():
    a = np.array([1, -0.9, 0.3, -0.8, -0.8, 0.3, -0.9])
    v = cop_member(a)
    assert v.is_not_member
    v_min = v.details["argmin"]
    assert np.all(v_min >= 0)
    assert np.allclose(v.certificate.vector, [v_min @ np.roll(v_min, -k) for k in range(7)])


def test_symmetry_required():
    with pytest.raises(ValueError):
        cop_member([1, 2, 3, 4])
    with pytest.raises(ValueError):
        spn_member([1, 2, 0, 0])
