"""Shared builders for the test suite (deterministic RNG throughout)."""

import math
import random
from fractions import Fraction

import pytest

from pentaspiral.projective import ProjPoint, ProjTransform
from pentaspiral.seeds import Seed, random_seed


def rational_seed(n: int, k: int, tag: int) -> Seed:
    return random_seed(n, k, random.Random(tag))


def float_seed(n: int, k: int, tag: int) -> Seed:
    return random_seed(n, k, random.Random(tag), field="float")


def convex_polygon(n: int, rng: random.Random):
    """Random strictly convex rational polygon, counterclockwise."""
    from pentaspiral.projective import orientation

    while True:
        pts = []
        for i in range(n):
            ang = 2 * math.pi * i / n
            x = Fraction(round(math.cos(ang) * 1024), 1024) + Fraction(rng.randint(-24, 24), 2048)
            y = Fraction(round(math.sin(ang) * 1024), 1024) + Fraction(rng.randint(-24, 24), 2048)
            pts.append(ProjPoint.from_affine(x, y))
        if all(
            orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) == 1 for i in range(n)
        ):
            return pts


def random_transform(rng: random.Random) -> ProjTransform:
    """Random invertible rational transform, kept close to the identity so
    transformed test data stays inside the affine chart."""
    while True:
        rows = []
        for i in range(3):
            row = []
            for j in range(3):
                base = Fraction(1) if i == j else Fraction(0)
                row.append(base + Fraction(rng.randint(-12, 12), 128))
            rows.append(row)
        try:
            return ProjTransform(rows)
        except Exception:
            continue


@pytest.fixture
def rng():
    return random.Random(20240811)
