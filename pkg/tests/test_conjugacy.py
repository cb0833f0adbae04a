import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_elliptic_sides
from quadfold import conjugacy as cj
from quadfold.curves import diagonal_curve, diagonal_residual
from quadfold.errors import NoIntersection, NonElliptic, ValidationError
from quadfold.geometry import Geometry, SideLengths, congruent, embed, measure, random_quadrilateral

IVORY_EUCLIDEAN = cj.ConfocalSpec("euclidean", 1.0, (1.2, 1.5), (0.3, 0.7))


def _ivory_reference_distance():
    # independent coordinate arithmetic for the Euclidean example
    def point(lam, mu):
        return lam * mu, math.sqrt((lam * lam - 1) * (1 - mu * mu))

    p, q = point(1.2, 0.3), point(1.5, 0.7)
    return math.dist(p, q)


class TestConjugateQuad:
    def test_example_pair(self, rng):
        for _ in range(20):
            q = random_quadrilateral((10, 5, 6, 3), rng)
            c = cj.conjugate_quad(q)
            assert tuple(c.declared_sides().values) == (2, 7, 6, 9)
            np.testing.assert_allclose(c.side_lengths(), (2, 7, 6, 9), rtol=1e-9)
            d, e = measure(q)[1], measure(c)[1]
            assert abs(d.x - e.x) < 1e-9 and abs(d.y - e.y) < 1e-9

    def test_self_conjugate(self):
        q = embed((1, 1, 1, 1), 1.0)
        c = cj.conjugate_quad(q)
        np.testing.assert_allclose(c.side_lengths(), (1, 1, 1, 1), rtol=1e-12)
        assert congruent(q, c)

    def test_random_500(self, rng):
        worst = 0.0
        for a in random_elliptic_sides(rng, 500):
            q = random_quadrilateral(a, rng)
            c = cj.conjugate_quad(q)
            d, e = measure(q)[1], measure(c)[1]
            worst = max(worst, abs(d.x - e.x), abs(d.y - e.y))
            np.testing.assert_allclose(c.side_lengths(), [float(v) for v in SideLengths(a).bar], rtol=1e-8)
            curve = diagonal_curve(tuple(SideLengths(a).bar))
            assert abs(diagonal_residual(curve, e.x, e.y)) < 1e-9
        assert worst < 1e-9

    def test_involution(self, rng):
        for a in random_elliptic_sides(rng, 50):
            q = random_quadrilateral(a, rng)
            assert congruent(cj.conjugate_quad(cj.conjugate_quad(q)), q, tol=1e-8)

    def test_errors(self):
        with pytest.raises(NonElliptic):
            cj.conjugate_quad(embed((3, 4, 3, 4), 1.0))
        with pytest.raises(ValidationError):
            cj.conjugate_quad(embed(SideLengths((0.9, 1.0, 1.2, 1.1), Geometry.SPHERICAL), 1.0))

    def test_curve_is_bar_invariant(self, rng):
        for _ in range(50):
            a = tuple(Fraction(int(v), 5) for v in rng.integers(2, 20, 4))
            try:
                bar = tuple(SideLengths(a).bar)
                assert diagonal_curve(a).coefficients == diagonal_curve(bar).coefficients
            except ValidationError:
                continue


class TestIdentities:
    def test_examples(self):
        pairs = cj.identity_pairs((10, 5, 6, 3))
        assert pairs[0] == (-4, -4)
        assert pairs[4] == (68, 68)

    @pytest.mark.parametrize("geometry", list(Geometry))
    def test_random(self, geometry, rng):
        hi = 3.0 if geometry is not Geometry.HYPERBOLIC else 2.0
        values = rng.uniform(0.0, hi, (10_000, 4))
        worst = max(cj.identity_suite(v, geometry) for v in values)
        assert worst < 1e-12

    def test_spherical_example(self):
        assert cj.identity_suite((0.9, 1.0, 1.2, 1.1), "spherical") < 1e-12

    def test_counts(self):
        assert len(cj.identity_pairs((1, 2, 3, 4))) == 6
        assert len(cj.identity_pairs((1, 2, 3, 4), "hyperbolic")) == 4

    def test_hyperbolic_third_identity_sign(self):
        # the sin form with cosh/sinh substituted verbatim has the opposite sign
        a, b, c, d = 0.3, 0.8, 1.1, 0.5
        s = (a + b + c + d) / 2
        lhs = math.cosh(a) * math.cosh(b) - math.cosh(c) * math.cosh(d)
        naive = math.sinh(s - a) * math.sinh(s - b) - math.sinh(s - c) * math.sinh(s - d)
        assert lhs == pytest.approx(-naive, rel=1e-13)

    @given(st.lists(st.floats(-5, 5), min_size=4, max_size=4))
    @settings(max_examples=200, deadline=None)
    def test_unconditional(self, vals):
        assert cj.identity_suite(vals) < 1e-12

    def test_wrong_count(self):
        with pytest.raises(ValidationError):
            cj.identity_pairs((1, 2, 3))


def _random_spec(rng, geometry):
    while True:
        c = rng.uniform(0.1, 1.4)
        mu = tuple(rng.uniform(0.0, c, 2))
        top = math.pi - c if geometry == "spherical" else c + 2.0
        lam = tuple(rng.uniform(c, top, 2))
        try:
            return cj.ConfocalSpec(geometry, c, lam, mu)
        except ValidationError:
            continue


class TestIvory:
    def test_euclidean_example(self):
        d1, d2, diff = cj.ivory_check(IVORY_EUCLIDEAN)
        ref = _ivory_reference_distance()
        assert d1 == pytest.approx(ref, abs=1e-14)
        assert d1 == pytest.approx(math.sqrt(0.503547), abs=1e-5)
        assert diff < 1e-12

    def test_spherical_example(self):
        assert cj.ivory_check(cj.ConfocalSpec("spherical", 0.5, (0.8, 1.0), (0.2, 0.4)))[2] < 1e-10

    def test_degenerate(self):
        d1, d2, diff = cj.ivory_check(cj.ConfocalSpec("euclidean", 1.0, (1.2, 1.5), (0.5, 0.5)))
        assert diff == 0.0

    @pytest.mark.parametrize("geometry", ["euclidean", "spherical", "hyperbolic"])
    def test_random(self, geometry, rng):
        for _ in range(100):
            spec = _random_spec(rng, geometry)
            assert cj.ivory_check(spec)[2] < 1e-10

    @pytest.mark.parametrize("geometry", ["euclidean", "spherical", "hyperbolic"])
    def test_points_on_conics(self, geometry, rng):
        from quadfold.geometry import model

        dist = model(Geometry.parse(geometry)).dist
        for _ in range(20):
            spec = _random_spec(rng, geometry)
            f1, f2 = cj.foci(spec)
            for lam in spec.lam:
                for mu in spec.mu:
                    p = cj.confocal_point(spec, lam, mu)
                    r1, r2 = dist(p, f1), dist(p, f2)
                    assert r1 + r2 == pytest.approx(2 * lam, abs=1e-10)
                    assert r1 - r2 == pytest.approx(2 * mu, abs=1e-10)

    def test_invalid_specs(self):
        with pytest.raises(ValidationError):
            cj.ConfocalSpec("euclidean", 1.0, (0.8, 1.5), (0.3, 0.7))
        with pytest.raises(ValidationError):
            cj.ConfocalSpec("spherical", 1.0, (1.5, 2.5), (0.3, 0.7))
        with pytest.raises(ValidationError):
            cj.ConfocalSpec("euclidean", 1.0, (1.2,), (0.3, 0.7))

    def test_no_intersection(self):
        with pytest.raises(NoIntersection):
            cj.confocal_point(IVORY_EUCLIDEAN, 0.5, 0.3)
