import math

import numpy as np
import pytest

from circone.certificates import Decomposition, Verdict
from circone.cones.copositive import cop5_extremal_catalog, cop_validate, horn_vector
from circone.cones.cp import (
    cp5_extremal_catalog,
    cp6_face_catalogs,
    cp7_face_catalogs,
    cp_member,
    generic_witness_families,
    nnls_decompose,
    separable_ball_radius,
    spectral_decomposition,
)
from circone.cones.dnn import dnn_extremal_catalog, dnn_member
from circone.cones.families import autocorr, unit
from conftest import random_symmetric


def random_cp(rng, d, terms=3, support=None):
    a = np.zeros(d)
    for _ in range(terms):
        v = np.zeros(d)
        idx = list(range(d)) if support is None else list(support)
        v[idx] = rng.random(len(idx)) ** 2 * (rng.random(len(idx)) < 0.7)
        a += autocorr(np.roll(v, int(rng.integers(d))))
    return a


def assert_valid_certificate(v, a):
    if v.verdict is Verdict.NOT_MEMBER:
        w = v.certificate.vector
        assert w @ a < 0
        assert cop_validate(w, starts=32)[0]
    elif v.verdict is Verdict.MEMBER and v.certificate is not None:
        assert isinstance(v.certificate, Decomposition)
        assert all(np.all(g >= 0) and wt >= 0 for g, wt in v.certificate.generators)
        assert v.certificate.verify(a, 1e-7)


def test_horn_point_is_not_cp():
    a = np.array([9.0, 5, 0, 0, 5])
    assert dnn_member(a).is_member
    v = cp_member(a)
    assert v.is_not_member
    assert np.allclose(v.certificate.vector, horn_vector())
    assert v.certificate.pairing == pytest.approx(-1.0)


def test_low_support_point_is_cp():
    a = np.array([2.0, 1, 0, 0, 1])
    v = cp_member(a)
    assert v.is_member
    assert np.allclose(v.certificate.reconstruct(5), a)
    assert np.allclose(autocorr([0, 0, 1, 1, 0]), a)


def test_explicit_factor():
    a = autocorr([2.0, 1, 0, 0, 1])
    assert np.allclose(a, [6, 4, 1, 1, 4])
    assert cp_member(a).is_member


def test_small_dimensions_match_dnn(rng):
    for _ in range(200):
        d = int(rng.integers(2, 5))
        a = random_symmetric(rng, d, -0.3, 1)
        v = cp_member(a)
        assert v.verdict is dnn_member(a).verdict
        assert_valid_certificate(v, a)


@pytest.mark.parametrize("d", [5, 6, 7, 8])
def test_constructed_cp_points_are_never_refuted(d, rng):
    for _ in range(15 if d < 8 else 5):
        a = random_cp(rng, d)
        v = cp_member(a)
        assert not v.is_not_member
        assert_valid_certificate(v, a)


def test_d5_is_always_decided(rng):
    rays = [r.vector for r in dnn_extremal_catalog(5)]
    seen = set()
    for _ in range(60):
        a = sum(rng.exponential() * r for r in rays)
        v = cp_member(a)
        assert v.verdict is not Verdict.UNDECIDED
        assert_valid_certificate(v, a)
        seen.add(v.verdict)
    assert seen == {Verdict.MEMBER, Verdict.NOT_MEMBER}


def test_cp5_catalog_members():
    cat = cp5_extremal_catalog()
    assert len(cat.fixed) == 4 and len(cat.families) == 2
    for r in cat.rays(9):
        assert np.allclose(r.vector, r.weight * autocorr(r.generator))
        assert np.all(r.generator >= 0)
        v = cp_member(r.vector)
        assert v.is_member


def test_family_pairing_identity():
    cp_fam = cp5_extremal_catalog().families
    cop_fam = cop5_extremal_catalog().families
    for x_f, w_f in zip(cp_fam, cop_fam):
        for al in np.linspace(0, math.pi / 5, 11):
            for be in np.linspace(0, math.pi / 5, 11):
                got = w_f.vector(al) @ x_f.vector(be)
                assert got == pytest.approx(4 * (math.cos(al) - math.cos(be)) ** 2, abs=1e-12)


def test_family_members_past_range_are_flagged():
    fam = cp5_extremal_catalog().families[0]
    r = fam.ray(fam.theta_max + 0.2)
    assert not r.extremal
    assert fam.ray(fam.theta_max / 2).extremal
    # still completely positive, just not extremal
    assert cp_member(r.vector).is_member


def test_d6_face_catalogs():
    cats = cp6_face_catalogs()
    assert set(cats) == {(0, 1, 2, 4, 5), (0, 1, 3, 5), (0, 2, 3, 4)}
    vecs = [r.vector for r in cats[(0, 1, 2, 4, 5)].primal.rays(5)]
    assert any(np.allclose(v, [2, 1, 0, 0, 0, 1]) for v in vecs)
    assert any(np.allclose(v, [1, 0, 1, 0, 1, 0]) for v in vecs)
    for fc in cats.values():
        for r in fc.primal.rays(5):
            assert set(np.flatnonzero(np.abs(r.vector) > 1e-12)) <= set(fc.face)
            v = cp_member(r.vector)
            assert v.is_member
            assert_valid_certificate(v, r.vector)


def test_d7_face_catalogs():
    cats = cp7_face_catalogs()
    assert set(cats) == {(0, 1, 2, 5, 6), (0, 2, 3, 4, 5), (0, 1, 3, 4, 6)}
    for fc in cats.values():
        for r in fc.primal.rays(4):
            assert cp_member(r.vector).is_member


def test_d6_face_dnn_vertex_is_refuted_globally():
    a = np.array([1.0, 0.75, 0.25, 0, 0.25, 0.75])
    assert dnn_member(a).is_member
    v = cp_member(a)
    assert v.is_not_member
    assert_valid_certificate(v, a)
    assert cop_validate(v.certificate.vector, starts=128, seed=3)[0]


def test_d7_face_dnn_rays_are_refuted_globally():
    faces = cp7_face_catalogs()
    for r in dnn_extremal_catalog(7):
        if len(r.supp) > 1 and any(set(r.supp) <= set(f) for f in faces):
            v = cp_member(r.vector)
            assert v.is_not_member
            assert_valid_certificate(v, r.vector)


def test_random_face_points_decided(rng):
    for d, face in ((6, (0, 1, 2, 4, 5)), (7, (0, 1, 2, 5, 6))):
        rays = [r.vector for r in dnn_extremal_catalog(d) if set(r.supp) <= set(face)]
        for _ in range(15):
            a = sum(rng.exponential() * r for r in rays)
            v = cp_member(a)
            assert v.verdict is not Verdict.UNDECIDED
            assert_valid_certificate(v, a)


def test_dilated_witness_for_multiples_of_five():
    assert generic_witness_families(7) == []
    assert generic_witness_families(5) == []
    a = np.zeros(10)
    a[0], a[2], a[8] = 9, 5, 5
    assert dnn_member(a).is_member
    v = cp_member(a)
    assert v.is_not_member
    assert_valid_certificate(v, a)


def test_separable_ball_radius():
    assert separable_ball_radius(5, 1.0) == pytest.approx(1 / 7, abs=1e-16)
    assert separable_ball_radius(5, 1e-8) < 1e-15
    radii = [separable_ball_radius(6, e) for e in (0.1, 0.5, 1, 2)]
    assert radii == sorted(radii)
    with pytest.raises(ValueError):
        separable_ball_radius(5, 0)


def test_spectral_decomposition(rng):
    for _ in range(50):
        d = int(rng.integers(3, 10))
        mu = rng.exponential(size=d // 2 + 1) * 0.1
        a = np.ones(d) + sum(mu[j] * np.cos(2 * np.pi * j * np.arange(d) / d) for j in range(1, d // 2 + 1))
        dec = spectral_decomposition(a)
        if dec is None:
            continue
        assert dec.verify(a, 1e-10)
        assert all(np.all(g >= -1e-15) for g, _ in dec.generators)
    assert spectral_decomposition(np.array([1.0, 1, 0, 0, 1])) is None


def test_nnls_decompose():
    gens = [unit(5, 0), unit(5, 0, 1), unit(5, 0, 2)]
    a = 2 * autocorr(gens[1]) + 0.5 * autocorr(gens[0])
    dec = nnls_decompose(a, gens)
    assert dec.residual < 1e-12 and dec.verify(a, 1e-12)


def test_zero_and_invalid_inputs():
    assert cp_member(np.zeros(5)).is_member
    assert cp_member([1, -0.5, 0, 0, -0.5]).is_not_member
    with pytest.raises(ValueError):
        cp_member([1, 2, 3])
