import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from quadfold import elliptic
from quadfold.errors import ModulusOutOfRange, OutOfRange, PoleAt, RecursionPole

moduli = st.floats(min_value=0.0, max_value=0.999)
args = st.floats(min_value=-40.0, max_value=40.0)


def test_complete_integrals_at_04(backend):
    big_k, big_kp = elliptic.complete_integrals(0.4)
    assert big_k == pytest.approx(special.ellipk(0.16), abs=1e-12)
    assert big_kp == pytest.approx(special.ellipk(0.84), abs=1e-12)
    assert abs(big_k - 1.6399998658) < 1e-9
    assert abs(big_kp - 2.3592635547) < 1e-9


def test_modulus_zero_and_out_of_range(backend):
    assert elliptic.complete_integrals(0.0) == (pytest.approx(math.pi / 2), math.inf)
    for bad in (1.0, -0.1, 1.5):
        with pytest.raises(ModulusOutOfRange):
            elliptic.complete_integrals(bad)


@pytest.mark.parametrize("k", [0.0, 0.1, 0.5, 0.9, 0.99])
def test_jacobi_matches_scipy(backend, k):
    for t in np.linspace(-30, 30, 301):
        sn, cn, dn = elliptic.jacobi(t, k)
        ref = special.ellipj(t, k * k)[:3]
        assert max(abs(sn - ref[0]), abs(cn - ref[1]), abs(dn - ref[2])) < 1e-11


def test_jacobi_near_unit_modulus(backend):
    # scipy loses about 1e-11 here, so the reference is mpmath
    mpmath = pytest.importorskip("mpmath")
    k = 0.999999
    with mpmath.workdps(30):
        for t in np.linspace(-30, 30, 61):
            ref = [float(mpmath.ellipfun(f, t, m=mpmath.mpf(k) ** 2)) for f in ("sn", "cn", "dn")]
            got = elliptic.jacobi(t, k)
            assert max(abs(a - b) for a, b in zip(got, ref)) < 1e-13


@settings(max_examples=200, deadline=None)
@given(t=args, k=moduli)
def test_pythagorean_identities(t, k):
    sn, cn, dn = elliptic.jacobi(t, k)
    assert abs(sn * sn + cn * cn - 1) < 1e-12
    assert abs(dn * dn + k * k * sn * sn - 1) < 1e-12


@settings(max_examples=100, deadline=None)
@given(k=moduli, frac=st.floats(min_value=-1.0, max_value=1.0))
def test_real_period(k, frac):
    big_k = elliptic.quarter_period(k)
    t = 8 * big_k * frac
    a, b = elliptic.jacobi(t, k), elliptic.jacobi(t + 4 * big_k, k)
    assert max(abs(x - y) for x, y in zip(a, b)) < 1e-10


def test_quarter_period_values(backend):
    big_k = elliptic.quarter_period(0.6)
    sn, cn, dn = elliptic.jacobi(big_k, 0.6)
    assert sn == pytest.approx(1.0, abs=1e-14)
    assert abs(cn) < 1e-12
    assert dn == pytest.approx(0.8, abs=1e-12)


@pytest.mark.parametrize("k", [0.2, 0.7, 0.95])
def test_incomplete_f_matches_scipy(backend, k):
    for phi in np.linspace(-7, 7, 57):
        assert elliptic.incomplete_f(phi, k) == pytest.approx(special.ellipkinc(phi, k * k), abs=1e-13)


@settings(max_examples=100, deadline=None)
@given(w=st.floats(min_value=0.0, max_value=1.0), k=moduli)
def test_inverse_sn_round_trip(w, k):
    t = elliptic.inverse_sn(w, k)
    assert 0.0 <= t <= elliptic.quarter_period(k) + 1e-12
    assert elliptic.jacobi(t, k).sn == pytest.approx(w, abs=1e-12)


def test_inverse_sn_porism3_value():
    # sn(K/3) for the modulus of the period-3 example
    kp = 0.9616373002117116
    big_k = elliptic.quarter_period(kp)
    w = elliptic.jacobi(big_k / 3, kp).sn
    assert elliptic.inverse_sn(w, kp) / big_k == pytest.approx(1 / 3, abs=1e-12)


def test_inverse_sn_range():
    with pytest.raises(OutOfRange):
        elliptic.inverse_sn(1.2, 0.5)


@settings(max_examples=100, deadline=None)
@given(t=st.floats(min_value=-10, max_value=10), k=st.floats(min_value=0.05, max_value=0.95))
def test_amplitude_to_argument(t, k):
    big_k = elliptic.quarter_period(k)
    t = math.remainder(t, 4 * big_k)
    sn, cn, _ = elliptic.jacobi(t, k)
    assert elliptic.amplitude_to_argument(sn, cn, k) == pytest.approx(t, abs=1e-10)


def test_imaginary_transform_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    k, u = 0.6, 0.7
    sn, cn, dn = elliptic.imaginary_transform(u, k)
    m = k * k
    assert complex(mpmath.ellipfun("sn", 1j * u, m=m)) == pytest.approx(sn, abs=1e-13)
    assert complex(mpmath.ellipfun("cn", 1j * u, m=m)) == pytest.approx(cn, abs=1e-13)
    assert complex(mpmath.ellipfun("dn", 1j * u, m=m)) == pytest.approx(dn, abs=1e-13)


def test_imaginary_transform_pole():
    k = 0.5
    _, big_kp = elliptic.complete_integrals(k)
    with pytest.raises(PoleAt):
        elliptic.imaginary_transform(big_kp, k)


@pytest.mark.parametrize("n", range(0, 11))
def test_cn_multiple_angle(backend, n):
    k = 0.8
    for s in np.linspace(0.05, 2.9, 40):
        direct = elliptic.jacobi(n * s, k).cn
        try:
            via = elliptic.cn_multiple_angle(elliptic.jacobi(s, k).cn, n, k)
        except RecursionPole:
            continue
        assert via == pytest.approx(direct, abs=1e-9)


def test_backends_agree():
    from conftest import BACKENDS

    if len(BACKENDS) < 2:
        pytest.skip("compiled backend not built")
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    ts = np.linspace(-25, 25, 500)
    assert np.max(np.abs(py.jacobi_many(ts, 0.77) - cy.jacobi_many(ts, 0.77))) < 1e-13
    for phi in np.linspace(-5, 5, 21):
        assert py.ellipf(phi, 0.3) == pytest.approx(cy.ellipf(phi, 0.3), abs=1e-14)
    assert py.carlson_rf(1.0, 2.0, 3.0) == pytest.approx(cy.carlson_rf(1.0, 2.0, 3.0), abs=1e-15)
