import math
import random
from fractions import Fraction as F

import pytest

from pentaspiral.errors import UnitProductDenominator
from pentaspiral.invariants import (
    closed_EO,
    closed_flag_sequence,
    closed_row_update,
    compatibility_ok,
    corner_invariants,
    eo_swap_holds,
    fill_labeling,
    flag_sequence,
    flags_to_csv,
    labeling_to_csv,
    path_flag_values,
    pentagram_row_update,
    pentagram_row_update_inverse,
    scale_labeling,
    vertex_invariant,
    z_invariant,
    zigzag_endpoint,
    zigzag_monomial,
    chi_sequence,
)
from pentaspiral.projective import ProjPoint
from pentaspiral.seeds import (
    pentagram_map_closed,
    pentagram_path,
    spiral_window,
    step,
    transform_seed,
)
from conftest import convex_polygon, random_transform, rational_seed


def P(x, y):
    return ProjPoint.from_affine(F(x), F(y))


class TestCornerInvariants:
    def test_pinned_rational_window(self):
        window = [P(0, 0), P(2, 0), P(3, 1), P(3, 2), P(2, 3)]
        left, right = corner_invariants(window)
        assert left == F(4, 9)
        assert right == F(1, 2)

    def test_regular_pentagon_symmetric(self):
        pts = [ProjPoint.from_affine(math.cos(2 * math.pi * i / 5),
                                     math.sin(2 * math.pi * i / 5)) for i in range(5)]
        left, right = corner_invariants(pts)
        golden_inverse = (math.sqrt(5) - 1) / 2
        assert abs(left - right) < 1e-12
        assert abs(left - golden_inverse) < 1e-12

    def test_plc_window_in_unit_interval(self):
        s = rational_seed(5, 2, 4)
        pts = spiral_window(s, 1, 9)
        for i in range(len(pts) - 4):
            left, right = corner_invariants(pts[i:i + 5])
            assert 0 < left < 1 and 0 < right < 1


class TestFlagSequence:
    def test_projective_invariance(self, rng):
        s = rational_seed(5, 2, 12)
        base = flag_sequence(s, 3, 8)
        for _ in range(5):
            t = random_transform(rng)
            moved = flag_sequence(transform_seed(t, s), 3, 8)
            assert dict(moved.items()) == dict(base.items())

    def test_shift_map_shifts_flags(self):
        for (n, k) in [(5, 2), (4, 3), (6, 2)]:
            s = rational_seed(n, k, 21 + n + k)
            base = flag_sequence(s, 3, 10)
            moved = flag_sequence(step(s), 3, 9)
            for f, val in moved.items():
                assert val == base[f + 2]


class TestRowUpdate:
    def test_cyclic_example(self):
        row = [F(1, 2), F(1, 3), F(1, 4), F(1, 5), F(1, 6), F(1, 7)]
        out = closed_row_update(row)
        # out[i] is the image label x'_{i+1}: x'_2 = x_4 (1 - x_5 x_6)/(1 - x_1 x_2)
        assert out[1] == F(41, 175)

    def test_constant_row_fixed(self):
        c = F(2, 7)
        row = {f: c for f in range(-6, 14)}
        out = pentagram_row_update(row)
        assert out and all(v == c for v in out.values())

    def test_pole_raises(self):
        row = [F(2), F(1, 2), F(1, 3), F(1, 4), F(1, 5), F(1, 6)]
        with pytest.raises(UnitProductDenominator):
            closed_row_update(row)

    def test_inverse_restores_row(self):
        s = rational_seed(5, 2, 31)
        base = dict(flag_sequence(s, 3, 20).values)
        down = pentagram_row_update(base)
        up = pentagram_row_update_inverse(down)
        for f, val in up.items():
            assert val == base[f]

    def test_geometric_cross_validation_closed(self, rng):
        # invariants of the geometric image match the algebraic row update
        for n in (7, 9):
            poly = convex_polygon(n, rng)
            algebra = closed_row_update(closed_flag_sequence(poly))
            geometry = closed_flag_sequence(pentagram_map_closed(poly))
            assert geometry == algebra


class TestFillLabeling:
    def test_down_then_up_restores(self):
        s = rational_seed(5, 2, 8)
        lab = fill_labeling(s, -1, 1, width=24)
        down_then_up = pentagram_row_update_inverse(lab.rows[1])
        for f, val in down_then_up.items():
            assert val == lab.rows[0][f]

    def test_inverse_rows_match_backward_orbit(self):
        s = rational_seed(5, 2, 8)
        lab = fill_labeling(s, -2, 0, width=26)
        # row -1 of the labeling is the flag data of the pentagram preimage;
        # filling forward from it must reproduce row 0 exactly
        again = pentagram_row_update(lab.rows[-1])
        for f, val in again.items():
            assert val == lab.rows[0][f]

    def test_compatibility_everywhere(self):
        for (n, k) in [(4, 3), (5, 2)]:
            s = rational_seed(n, k, 60 + n + k)
            lab = fill_labeling(s, -1, 3, width=30)
            assert compatibility_ok(lab)

    def test_rows_match_geometric_images(self):
        s = rational_seed(5, 3, 19)
        lab = fill_labeling(s, 0, 3, width=30)
        pts = {j: p for j, p in enumerate(spiral_window(s, 1, 36), start=1)}
        path = dict(pts)
        for r in (1, 2, 3):
            path = pentagram_path(path)
            geo = path_flag_values(path)
            for f, val in lab.rows[r].items():
                if f in geo:
                    assert val == geo[f]

    def test_quotient_congruence(self):
        # one full order of the unlabeled path: row k repeats row 0 with a
        # flag shift of 2(n+k)
        n, k = 4, 2
        s = rational_seed(n, k, 3)
        lab = fill_labeling(s, 0, k, width=40)
        shift = 2 * (n + k)
        for f, val in lab.rows[k].items():
            if f + shift in lab.rows[0]:
                assert val == lab.rows[0][f + shift]


class TestZigzag:
    def _labeling(self):
        return fill_labeling(rational_seed(5, 2, 70), 0, 5, width=44)

    def test_empty_path_is_one(self):
        lab = self._labeling()
        assert zigzag_monomial(lab, (3, 8), "") == 1

    def test_single_edge(self):
        lab = self._labeling()
        assert zigzag_monomial(lab, (3, 8), "U") == lab.rows[2][16]

    def test_endpoint_sharing_pairs_agree(self):
        lab = self._labeling()
        rng = random.Random(5)
        for _ in range(60):
            ups = rng.randint(1, 3)
            downs = rng.randint(1, 3)
            moves = ["U"] * ups + ["D"] * downs
            rng.shuffle(moves)
            other = list(moves)
            rng.shuffle(other)
            start = (4, rng.randint(8, 11))
            assert zigzag_endpoint(start, "".join(moves)) == zigzag_endpoint(start, "".join(other))
            assert zigzag_monomial(lab, start, "".join(moves)) == \
                zigzag_monomial(lab, start, "".join(other))


class TestZInvariant:
    def test_invariant_under_shift(self):
        for (n, k) in [(4, 1), (5, 2)]:
            s = rational_seed(n, k, 80 + n + k)
            assert z_invariant(step(s)) == z_invariant(s)

    def test_invariant_over_full_period(self):
        n, k = 4, 2
        s = rational_seed(n, k, 83)
        z = z_invariant(s)
        for _ in range(2 * n + k):
            s = step(s)
            assert z_invariant(s) == z

    def test_anchor_independent(self):
        s = rational_seed(4, 3, 81)
        vals = {z_invariant(s, anchor=m0) for m0 in (6, 8, 11)}
        assert len(vals) == 1

    def test_in_unit_interval(self):
        z = z_invariant(rational_seed(5, 2, 82))
        assert 0 < z < 1


class TestVertexInvariant:
    def test_direct_product(self):
        assert vertex_invariant(F(1, 2), F(1, 2)) == F(1, 4)

    def test_chi_bounded_below_by_z_squared(self):
        s = rational_seed(5, 2, 90)
        z = z_invariant(s)
        chi = chi_sequence(s, 3, 3 + 2 * (2 * 5 + 2))
        assert all(val >= z * z for val in chi.values())

    def test_regular_pentagon_window_chi(self):
        import math as _m

        pts = [ProjPoint.from_affine(_m.cos(2 * _m.pi * i / 5),
                                     _m.sin(2 * _m.pi * i / 5)) for i in range(5)]
        left, right = corner_invariants(pts)
        assert abs(vertex_invariant(left, right) - left * left) < 1e-12


class TestClosedEO:
    def test_regular_polygon_equal_products(self):
        import math as _m

        poly = [ProjPoint.from_affine(_m.cos(2 * _m.pi * i / 7),
                                      _m.sin(2 * _m.pi * i / 7)) for i in range(7)]
        e, o = closed_EO(poly)
        assert abs(e - o) < 1e-12

    def test_swap_law(self, rng):
        for _ in range(5):
            poly = convex_polygon(7, rng)
            assert eo_swap_holds(poly)

    def test_projectively_invariant(self, rng):
        poly = convex_polygon(6, rng)
        e, o = closed_EO(poly)
        t = random_transform(rng)
        e2, o2 = closed_EO([__import__("pentaspiral").apply(t, p) for p in poly])
        assert e2 == e and o2 == o


class TestScalingSymmetry:
    def test_scaled_labeling_stays_compatible(self):
        lab = fill_labeling(rational_seed(4, 3, 44), 0, 3, width=30)
        scaled = scale_labeling(lab, F(3, 2))
        assert compatibility_ok(scaled)
        # the scaled rows still satisfy the row update
        regenerated = pentagram_row_update(scaled.rows[0])
        for f, val in regenerated.items():
            assert val == scaled.rows[1][f]


class TestCsv:
    def test_labeling_csv_shape(self):
        lab = fill_labeling(rational_seed(4, 1, 2), 0, 1, width=16)
        text = labeling_to_csv(lab)
        lines = text.strip().splitlines()
        assert lines[0] == "row,flag_index,value"
        assert all(len(line.split(",")) == 3 for line in lines[1:])

    def test_flags_csv(self):
        flags = flag_sequence(rational_seed(4, 1, 2), 3, 6)
        text = flags_to_csv(flags)
        assert text.startswith("row,flag_index,value\n0,6,")
