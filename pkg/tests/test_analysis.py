import math
import random
from fractions import Fraction as F

import pytest

from pentaspiral.analysis import (
    hilbert_distance,
    limit_point,
    limit_point_orbit,
    log_spiral_parameter,
    lps_seed,
    periodicity_check,
    similarity_frame_radii,
    similarity_parameter,
    theta_average,
    winding_profile,
    z_maximization_probe,
    _seed_delta,
    _spiral_residual,
)
from pentaspiral.errors import PointNotInterior
from pentaspiral.fields import as_float
from pentaspiral.invariants import flag_sequence, z_invariant
from pentaspiral.projective import ProjPoint, ProjTransform, apply
from pentaspiral.seeds import normalize, step, step_power
from conftest import float_seed, random_transform


def P(x, y):
    return ProjPoint.from_affine(float(x), float(y))


UNIT_SQUARE = [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]


class TestHilbert:
    def test_coincident_points(self):
        assert hilbert_distance(UNIT_SQUARE, P(0.3, 0.4), P(0.3, 0.4)) == 0.0

    def test_square_log_nine(self):
        d = hilbert_distance(UNIT_SQUARE, P(0.25, 0.5), P(0.75, 0.5))
        assert abs(d - math.log(9)) < 1e-12

    def test_symmetric(self):
        b, c = P(0.2, 0.3), P(0.6, 0.7)
        assert abs(hilbert_distance(UNIT_SQUARE, b, c)
                   - hilbert_distance(UNIT_SQUARE, c, b)) < 1e-12

    def test_not_interior(self):
        with pytest.raises(PointNotInterior):
            hilbert_distance(UNIT_SQUARE, P(0.5, 0.5), P(1.5, 0.5))

    def test_projective_invariance(self, rng):
        b, c = P(0.3, 0.5), P(0.7, 0.45)
        base = hilbert_distance(UNIT_SQUARE, b, c)
        for _ in range(8):
            t = random_transform(rng)
            tf = ProjTransform([[float(e) for e in row] for row in t.m])
            poly = [apply(tf, p) for p in UNIT_SQUARE]
            d = hilbert_distance(poly, apply(tf, b), apply(tf, c))
            assert abs(d - base) < 1e-8

    def test_triangle_inequality_sampled(self, rng):
        pts = [P(0.2 + 0.6 * rng.random(), 0.2 + 0.6 * rng.random()) for _ in range(9)]
        for a in pts[:3]:
            for b in pts[3:6]:
                for c in pts[6:]:
                    lhs = hilbert_distance(UNIT_SQUARE, a, c)
                    rhs = (hilbert_distance(UNIT_SQUARE, a, b)
                           + hilbert_distance(UNIT_SQUARE, b, c))
                    assert lhs <= rhs + 1e-9


class TestLimitPoint:
    def test_contraction_and_radius(self):
        s = float_seed(5, 2, 3)
        res = limit_point(s, tol=1e-9)
        assert res.radius < 1e-9
        for a, b in zip(res.diameters[3:], res.diameters[4:]):
            assert b < a

    def test_point_inside_first_hull(self):
        s = float_seed(4, 3, 5)
        res = limit_point(s)
        from pentaspiral.analysis import _strictly_nested

        assert _strictly_nested(s.A, [res.point])

    def test_shift_image_same_limit(self):
        s = float_seed(5, 2, 3)
        r1 = limit_point(s, tol=1e-10)
        r2 = limit_point(step(s), tol=1e-10)
        d = math.dist([as_float(v) for v in r1.point.affine()],
                      [as_float(v) for v in r2.point.affine()])
        assert d <= r1.radius + r2.radius + 1e-12

    def test_k1_stride_avoids_touching(self):
        s = float_seed(5, 1, 12)
        res = limit_point(s, tol=1e-8)
        assert res.radius < 1e-8


class TestWinding:
    def test_strictly_increasing_and_total(self):
        s = float_seed(5, 2, 3)
        prof = winding_profile(s, 10 * (2 * 5 + 2))
        assert all(b > a for a, b in zip(prof, prof[1:]))
        total = prof[-1] - prof[0]
        assert total > 8 * 2 * math.pi
        # regression pin for this fixed seed
        assert abs(total - 39.28650147270908 * math.pi) < 1e-6

    def test_rigid_rotation_shifts_profile(self):
        s = float_seed(4, 3, 6)
        ang = 0.7
        c, sn = math.cos(ang), math.sin(ang)
        rot = ProjTransform(((c, -sn, 0.0), (sn, c, 0.0), (0.0, 0.0, 1.0)))
        from pentaspiral.seeds import transform_seed

        base = winding_profile(s, 30)
        moved = winding_profile(transform_seed(rot, s), 30)
        deltas = [m - b for m, b in zip(moved, base)]
        assert all(abs(d - deltas[0]) < 1e-9 for d in deltas)


class TestLogSpiral:
    @pytest.mark.parametrize("nk", [(4, 1), (5, 2), (5, 3)])
    def test_residual_and_constraints(self, nk):
        n, k = nk
        z = log_spiral_parameter(n, k)
        assert _spiral_residual(n, k, z) < 1e-10
        assert abs(z) < 1
        theta = math.atan2(z.imag, z.real)
        assert 2 * math.pi / (n + k) < theta < 2 * math.pi / n

    @pytest.mark.parametrize("nk", [(4, 1), (5, 2), (5, 3)])
    def test_w_identity(self, nk):
        n, k = nk
        z = log_spiral_parameter(n, k)
        w = z * (z + z.conjugate()) / (1 + z.conjugate())
        assert abs(w**k - z**(n + 2 * k)) < 1e-9


class TestThetaAverage:
    def test_single_term_is_normalize(self):
        s = float_seed(5, 3, 7)
        averaged = theta_average(s, 1)
        assert _seed_delta(averaged, normalize(s)) < 1e-12

    def test_fixed_point_unchanged(self):
        fixed = lps_seed(4, 1, tol=1e-12)
        again = theta_average(fixed, 2 * 4 + 1)
        assert _seed_delta(fixed, again) < 1e-10

    def test_iteration_converges_from_random_seed(self):
        s = float_seed(5, 3, 9)
        current = s
        delta = 1.0
        for _ in range(300):
            nxt = theta_average(current, 2 * 5 + 3)
            delta = _seed_delta(current, nxt)
            current = nxt
            if delta < 1e-9:
                break
        assert delta < 1e-9


class TestLps:
    @pytest.mark.parametrize("nk", [(4, 1), (5, 2), (5, 3)])
    def test_fixed_point_and_similarity(self, nk):
        n, k = nk
        fixed = lps_seed(n, k, tol=1e-11)
        # Z is invariant for every seed, fixed point included
        assert abs(as_float(z_invariant(step(fixed))) - as_float(z_invariant(fixed))) < 1e-9
        # flags of a self-projective spiral repeat every shift, so with
        # period two in the flag index (and hence every even period)
        flags = flag_sequence(fixed, 3, 3 + 2 * (2 * n + k))
        for f in range(6, 6 + 2 * (2 * n + k) - 2):
            assert abs(as_float(flags[f]) - as_float(flags[f + 2])) < 1e-8
        # vertex contraction in the similarity frame matches the modulus of
        # the spiral parameter from the defining equation
        z = log_spiral_parameter(n, k)
        radii = similarity_frame_radii(fixed, 2 * (2 * n + k))
        ratios = [radii[i + 1] / radii[i] for i in range(len(radii) - 1)]
        assert all(abs(r - abs(z)) < 1e-4 for r in ratios[2:-2])
        assert abs(abs(similarity_parameter(fixed)) - abs(z)) < 1e-6

    def test_even_period_flag_repetition(self):
        # 2n+k is even for (5,2), so the flag data repeats with that period
        fixed = lps_seed(5, 2, tol=1e-11)
        flags = flag_sequence(fixed, 3, 3 + 2 * 12)
        for f in range(6, 6 + 12):
            assert abs(as_float(flags[f]) - as_float(flags[f + 12])) < 1e-8


class TestPeriodicity:
    def test_4_1_order_2(self):
        report = periodicity_check(4, 1, 2, trials=5, rng=random.Random(10))
        assert report.all_passed

    def test_4_2_order_2(self):
        report = periodicity_check(4, 2, 2, trials=5, rng=random.Random(11))
        assert report.all_passed

    def test_negative_control_5_2(self):
        report = periodicity_check(5, 2, 2, trials=3, rng=random.Random(12))
        assert not report.all_passed
        assert all(t.first_difference for t in report.trials if not t.passed)


class TestLimitPointOrbit:
    def test_points_inside_unit_square(self):
        s = float_seed(4, 2, 13)
        pts = limit_point_orbit(s, 4)
        for p in pts:
            x, y = (as_float(v) for v in p.affine())
            assert 0 < x < 1 and 0 < y < 1

    def test_matches_direct_computation(self):
        s = float_seed(5, 2, 14)
        pts = limit_point_orbit(s, 2)
        direct = limit_point(normalize(step_power(s, 2))).point
        d = math.dist([as_float(v) for v in pts[2].affine()],
                      [as_float(v) for v in direct.affine()])
        assert d < 1e-8


class TestZMaxProbe:
    def test_zero_perturbation_keeps_z(self):
        report = z_maximization_probe(4, 1, samples=4, rng=random.Random(1), spread=0.0)
        assert report.fixed_point_maximal
        assert abs(report.gap) < 1e-12

    def test_report_fields(self):
        report = z_maximization_probe(4, 1, samples=6, rng=random.Random(2), spread=0.03)
        assert report.samples == 6
        assert report.samples_below + (report.max_sample > report.z_fixed) >= 6 - report.samples_below
        assert report.gap == report.z_fixed - report.max_sample
