import random
from fractions import Fraction as F

import pytest

from pentaspiral.errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateQuad,
    DegenerateQuadruple,
    NotCollinear,
    PointAtInfinity,
)
from pentaspiral.projective import (
    ProjLine,
    ProjPoint,
    ProjTransform,
    apply,
    cross_ratio,
    join,
    meet,
    orientation,
    transform_from_quads,
)
from conftest import convex_polygon, random_transform


def P(x, y):
    return ProjPoint.from_affine(F(x), F(y))


def H(a, b, c):
    return ProjPoint((F(a), F(b), F(c)))


class TestJoinMeet:
    def test_join_x_axis(self):
        assert join(P(0, 0), P(1, 0)) == ProjLine((F(0), F(1), F(0)))

    def test_join_line_at_infinity(self):
        assert join(H(1, 0, 0), H(0, 1, 0)) == ProjLine((F(0), F(0), F(1)))

    def test_join_cross_product(self):
        line = join(P(2, 3), P(5, 7))
        assert line == ProjLine((F(-4), F(3), F(-1)))
        for p in (P(2, 3), P(5, 7)):
            assert line.contains(p)

    def test_meet_axes_at_origin(self):
        assert meet(ProjLine((F(1), F(0), F(0))), ProjLine((F(0), F(1), F(0)))) == H(0, 0, 1)

    def test_parallel_lines_meet_at_infinity(self):
        y0 = join(P(0, 0), P(1, 0))
        y1 = join(P(0, 1), P(1, 1))
        assert meet(y0, y1) == H(1, 0, 0)

    def test_square_diagonals(self):
        p = meet(join(P(0, 0), P(1, 1)), join(P(1, 0), P(0, 1)))
        assert p == P(F(1, 2), F(1, 2))

    def test_coincident_errors(self):
        with pytest.raises(CoincidentPoints):
            join(P(1, 2), P(1, 2))
        with pytest.raises(CoincidentLines):
            meet(ProjLine((F(1), F(2), F(3))), ProjLine((F(2), F(4), F(6))))

    def test_meet_join_recovers_point(self, rng):
        for _ in range(25):
            p = P(rng.randint(-9, 9), rng.randint(-9, 9))
            q = P(rng.randint(-9, 9), rng.randint(-9, 9))
            r = P(rng.randint(-9, 9), rng.randint(-9, 9))
            if p == q or p == r:
                continue
            l1 = join(p, q)
            l2 = join(p, r)
            if l1 == l2:
                continue
            assert meet(l1, l2) == p

    def test_duality_same_formula(self):
        # join on points and meet on lines are the same triple product
        a, b = (F(2), F(3), F(1)), (F(5), F(7), F(1))
        assert join(ProjPoint(a), ProjPoint(b)).h == ProjLine(
            meet(ProjLine(a), ProjLine(b)).h
        ).h


class TestCrossRatio:
    def test_affine_parameters(self):
        pts = [P(t, 1) for t in (0, 1, 2, 3)]
        assert cross_ratio(*pts) == F(1, 4)

    def test_degenerate_quadruple(self):
        a, b, c = P(0, 0), P(1, 0), P(2, 0)
        with pytest.raises(DegenerateQuadruple):
            cross_ratio(a, b, a, c)

    def test_not_collinear(self):
        with pytest.raises(NotCollinear):
            cross_ratio(P(0, 0), P(1, 0), P(2, 0), P(1, 1))

    def test_ordered_quadruple_in_unit_interval(self, rng):
        for _ in range(50):
            ts = sorted(rng.sample(range(-30, 30), 4))
            pts = [P(F(t, 3), F(2 * t, 3)) for t in ts]
            val = cross_ratio(*pts)
            assert 0 < val < 1

    def test_point_at_infinity_on_line(self):
        # d at infinity: [a,b,c,inf] = (a-b)/(a-c)
        a, b, c = P(0, 0), P(1, 0), P(3, 0)
        d = H(1, 0, 0)
        assert cross_ratio(a, b, c, d) == F(1, 3)

    def test_projective_invariance_exact(self, rng):
        pts = [P(t, t) for t in (0, 2, 5, 6)]
        base = cross_ratio(*pts)
        for _ in range(20):
            t = random_transform(rng)
            imgs = [apply(t, p) for p in pts]
            assert cross_ratio(*imgs) == base

    def test_projective_invariance_float(self, rng):
        pts = [ProjPoint.from_affine(float(t), float(3 * t)) for t in (0.0, 1.0, 2.5, 4.0)]
        base = cross_ratio(*pts)
        for _ in range(20):
            t = random_transform(rng)
            tf = ProjTransform([[float(e) for e in row] for row in t.m])
            imgs = [apply(tf, p) for p in pts]
            assert abs(cross_ratio(*imgs) - base) <= 1e-9


class TestTransforms:
    def test_identity_quad(self):
        quad = [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]
        t = transform_from_quads(quad, quad)
        for p in quad + [P(F(1, 3), F(1, 5))]:
            assert apply(t, p) == p

    def test_square_rotation(self):
        square = [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]
        rotated = square[1:] + square[:1]
        t = transform_from_quads(square, rotated)
        p = square[0]
        orbit = []
        for _ in range(4):
            p = apply(t, p)
            orbit.append(p)
        # the order-4 symmetry of the square
        assert orbit == [square[1], square[2], square[3], square[0]]

    def test_random_quad_to_square(self, rng):
        square = [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]
        for _ in range(10):
            quad = convex_polygon(4, rng)
            t = transform_from_quads(quad, square)
            for src, dst in zip(quad, square):
                assert apply(t, src) == dst

    def test_degenerate_quad(self):
        with pytest.raises(DegenerateQuad):
            transform_from_quads([P(0, 0), P(1, 1), P(2, 2), P(0, 1)],
                                 [P(0, 0), P(1, 0), P(1, 1), P(0, 1)])

    def test_apply_inverse_roundtrip(self, rng):
        t = random_transform(rng)
        p = P(F(3, 7), F(-2, 5))
        assert apply(t.inverse(), apply(t, p)) == p

    def test_translation_embedding(self):
        t = ProjTransform(((F(1), F(0), F(2)), (F(0), F(1), F(-3)), (F(0), F(0), F(1))))
        assert apply(t, P(5, 5)) == P(7, 2)


class TestOrientation:
    def test_ccw(self):
        assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1

    def test_cw(self):
        assert orientation(P(0, 0), P(0, 1), P(1, 0)) == -1

    def test_collinear(self):
        assert orientation(P(0, 0), P(1, 1), P(2, 2)) == 0

    def test_point_at_infinity(self):
        with pytest.raises(PointAtInfinity):
            orientation(P(0, 0), P(1, 0), H(1, 0, 0))
