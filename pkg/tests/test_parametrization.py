import math

import numpy as np
import pytest

from conftest import PORISM3_FLOAT, random_elliptic_sides
from quadfold import curves, elliptic
from quadfold import parametrization as par
from quadfold.errors import DegenerateKind, NoMatch, ValidationError
from quadfold.geometry import (
    Geometry,
    SideLengths,
    detect_period_numeric,
    embed,
    fold_orbit,
    measure,
    mirror,
    random_quadrilateral,
)

CORPUS = [PORISM3_FLOAT, (10, 5, 6, 3), (6, 4, 2, 3), (2, 3, 6, math.sqrt(31)), (1, 1, 1, 2), (3, 4, 5, 4.5), (2, 3, 4, 2.5)]


class TestBuild:
    def test_porism3(self):
        P = par.build(PORISM3_FLOAT)
        assert P.case is par.Case.SN
        assert P.relabel == par.Relabel(2)
        assert P.k_prime == pytest.approx(0.96155, abs=2e-4)
        assert P.sigma / P.quarter == pytest.approx(1 / 3, abs=1e-9)
        assert P.p[0].magnitude == pytest.approx(1.6181, abs=1e-4)

    def test_cn_example(self):
        P = par.build((10, 5, 6, 3))
        assert P.case is par.Case.CN
        assert P.k_prime == pytest.approx(math.sqrt(0.84), abs=1e-15)
        assert elliptic.jacobi(P.sigma, P.k_prime).sn == pytest.approx(math.sqrt(60 / 63), abs=1e-12)

    def test_conic_example(self):
        P = par.build((4, 3, 2, 3))
        assert isinstance(P, par.ConicParametrization)
        assert P.sigma == pytest.approx(math.log(3 + 2 * math.sqrt(2)), abs=1e-12)
        assert P.p[0].magnitude == pytest.approx(1.0) and not P.p[0].imaginary
        assert P.p[2].magnitude == pytest.approx(1 / math.sqrt(2)) and P.p[2].imaginary

    def test_sn_sigma_identity(self, rng):
        for a in random_elliptic_sides(rng, 40):
            P = par.build(a, calibrate=False)
            c = P.relabel.sides(SideLengths(a).floats)
            s = sum(c) / 2
            cb = [s - v for v in c]
            if P.case is par.Case.SN:
                target = math.sqrt(cb[0] * cb[2] / (c[1] * c[3]))
                assert c[2] == min(c)
            else:
                target = math.sqrt(c[0] * c[2] / (cb[1] * cb[3]))
                assert c[0] == max(c)
            assert elliptic.jacobi(P.sigma, P.k_prime).sn == pytest.approx(target, abs=1e-12)

    def test_imaginary_shift_in_sn_case(self, rng):
        for a in random_elliptic_sides(rng, 40):
            P = par.build(a, calibrate=False)
            if P.case is not par.Case.SN:
                continue
            c = P.relabel.sides(SideLengths(a).floats)
            s = sum(c) / 2
            k = elliptic.complementary(P.k_prime)
            dn = elliptic.imaginary_transform(P.tau_imag, k).dn
            assert dn.real == pytest.approx(math.sqrt(c[1] * c[3] / ((s - c[1]) * (s - c[3]))), rel=1e-10)

    def test_amplitude_pattern(self, rng):
        for a in random_elliptic_sides(rng, 40):
            P = par.build(a, calibrate=False)
            assert [p.imaginary for p in P.p] == [False, False, True, True]

    @pytest.mark.parametrize("sides", [(3, 4, 3, 4), (1, 1, 1, 1), (2, 2, 5, 5)])
    def test_degenerate_kinds(self, sides):
        with pytest.raises(DegenerateKind):
            par.build(sides)

    def test_curved_rejected(self):
        with pytest.raises(ValidationError):
            par.build(SideLengths((0.9, 1.0, 1.2, 1.1), Geometry.SPHERICAL))


class TestEval:
    def test_porism3_at_zero(self):
        P = par.build(PORISM3_FLOAT)
        zc = par.eval_canonical(P, 0.0)
        assert zc[0] == pytest.approx(1.6181, abs=1e-4)
        assert zc[2] == 0.0

    def test_conic_at_zero(self):
        z = par.eval(par.build((4, 3, 2, 3)), 0.0).z
        assert z[0] == pytest.approx(1.0) and z[2] == 0.0

    @pytest.mark.parametrize("sides", CORPUS + [(4, 3, 2, 3), (2, 3, 4, 1), (3, 2, 1, 4)])
    def test_residuals(self, sides, rng):
        P = par.build(sides)
        period = P.real_period or 6.0
        for u in rng.uniform(-period, period, 50):
            for sheet in P.sheets:
                ang = par.eval(P, u, sheet)
                res = curves.curve_residuals(sides, ang.z)
                assert max(abs(r) for r in res.values()) < 1e-9
                q = par.quadrilateral_at(P, u, sheet)
                np.testing.assert_allclose(q.side_lengths(), SideLengths(sides).floats, rtol=1e-9)
                diag = measure(q)[1]
                assert abs(curves.diagonal_residual(curves.diagonal_curve(sides), diag.x, diag.y)) < 1e-9

    def test_bad_sheet(self):
        with pytest.raises(ValidationError):
            par.eval(par.build((10, 5, 6, 3)), 0.1, -1)


class TestLocate:
    @pytest.mark.parametrize("sides", CORPUS + [(4, 3, 2, 3), (2, 3, 4, 1)])
    def test_round_trip(self, sides, rng):
        P = par.build(sides)
        period = P.real_period
        for u in rng.uniform(-10, 10, 100):
            sheet = P.sheets[int(rng.integers(len(P.sheets)))]
            q = par.quadrilateral_at(P, u, sheet)
            v, s = par.locate(P, q)
            assert s == sheet
            expected = u if period is None else u % period
            gap = v - expected if period is None else math.remainder(v - expected, period)
            assert abs(gap) < 1e-8

    def test_locate_reproduces_measure(self, rng):
        for a in random_elliptic_sides(rng, 30):
            P = par.build(a)
            q = random_quadrilateral(a, rng)
            u, sheet = par.locate(P, q)
            assert par.angle_gap(par.eval(P, u, sheet), measure(q)[0]) < 1e-9

    def test_mirror_cn_shifts_by_2k(self, rng):
        P = par.build((10, 5, 6, 3))
        q = random_quadrilateral((10, 5, 6, 3), rng)
        u, _ = par.locate(P, q)
        v, _ = par.locate(P, mirror(q))
        assert abs(math.remainder(v - u - 2 * P.quarter, P.real_period)) < 1e-9

    def test_mirror_sn_flips_sheet(self, rng):
        P = par.build(PORISM3_FLOAT)
        q = random_quadrilateral(PORISM3_FLOAT, rng)
        u, s = par.locate(P, q)
        v, t = par.locate(P, mirror(q))
        assert t == -s
        assert abs(math.remainder(v - u, P.real_period)) < 1e-9

    def test_wrong_sides(self, rng):
        P = par.build((10, 5, 6, 3))
        with pytest.raises(NoMatch):
            par.locate(P, random_quadrilateral((10, 5, 6, 3.5), rng))


class TestFoldShifts:
    @pytest.mark.parametrize("sides", CORPUS + [(4, 3, 2, 3), (2, 3, 4, 1)])
    def test_translation_invariance(self, sides, rng):
        P = par.build(sides)
        period = P.real_period
        for pair, cal in P.fold_calibration.items():
            shifts = []
            for _ in range(20):
                q = random_quadrilateral(sides, rng)
                u0, s0 = par.locate(P, q)
                u1, s1 = par.locate(P, fold_orbit(q, pair, 1)[1])
                assert (s1 != s0) == cal.flips_sheet
                d = u1 - u0
                shifts.append(d if period is None else math.remainder(d - cal.shift, period) + cal.shift)
            assert np.std(shifts) < 1e-8
            assert np.mean(shifts) == pytest.approx(cal.shift, abs=1e-8)

    @pytest.mark.parametrize("sides", CORPUS)
    def test_shift_values(self, sides):
        P = par.build(sides)
        L = P.real_period
        shifts = par.folding_shifts(P)
        twice = 2 * P.sigma

        def close(x, y):
            return abs(math.remainder(x - y, L)) < 1e-9

        allowed = (twice, -twice, 2 * P.quarter - twice, twice - 2 * P.quarter)
        for cal in shifts.values():
            assert any(close(cal.shift, v) for v in allowed)
        # one of the two folds always moves by exactly 2 sigma
        assert any(close(cal.shift, twice) or close(cal.shift, -twice) for cal in shifts.values())

    def test_porism3_shift(self):
        P = par.build(PORISM3_FLOAT)
        assert abs(par.folding_shifts(P)[(3, 4)].shift) == pytest.approx(2 * P.quarter / 3, abs=1e-9)

    def test_conic_has_none(self):
        assert par.folding_shifts(par.build((4, 3, 2, 3))) is None


class TestPeriodFromSigma:
    def test_table(self):
        K = 2.0
        r = par.period_from_sigma(K / 3, K, "sn")
        assert (r.non_oriented, r.oriented) == (3, (3, 6))
        r = par.period_from_sigma(K / 2, K, "sn")
        assert (r.non_oriented, r.oriented) == (2, (2, 2))
        r = par.period_from_sigma(K / 2, K, "cn")
        assert (r.non_oriented, r.oriented) == (2, (4, 4))
        r = par.period_from_sigma(K * 3 / 4, K, "cn")
        assert (r.non_oriented, r.oriented) == (4, (8, 8))
        assert par.period_from_sigma(K / math.pi, K, "sn").non_oriented is None

    def test_agrees_with_numeric(self, rng):
        for a in CORPUS:
            numeric = detect_period_numeric(random_quadrilateral(a, rng), max_n=8)
            sigma = par.sigma_period(a)
            if numeric.non_oriented is not None:
                assert (sigma.non_oriented, sigma.oriented) == (numeric.non_oriented, numeric.oriented)
            else:
                assert sigma.non_oriented is None or sigma.non_oriented > 8
