"""Seeds of type (n, k), the shift map and its inverse, spiral generation.

A seed is a strictly convex n-gon A_1..A_n (counterclockwise) with a
marked point B_j in the interior of edge A_j A_{j+1} for each of the last
k edges (j = n-k+1 .. n, indices mod n, so B_n lies on A_n A_1).  The
shift map produces a new seed by a pure projective construction; iterating
it in both directions generates the pentagram spiral through the
distinguished vertices P_j.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import (
    ConstructionDegenerate,
    InvalidSeed,
    PentaError,
    WindowTooSmall,
)
from .fields import FLOAT, RATIONAL, Scalar, dump_scalar, is_exact, near_zero, parse_scalar
from .projective import (
    ProjPoint,
    ProjTransform,
    apply,
    join,
    meet,
    orientation,
    transform_from_quads,
)


@dataclass(frozen=True)
class Violation:
    """Structured report of the first seed invariant that fails."""

    kind: str  # "bad_range" | "not_convex" | "b_not_interior"
    index: Optional[int] = None
    message: str = ""

    def as_dict(self) -> dict:
        return {"kind": self.kind, "index": self.index, "message": self.message}

    def __str__(self) -> str:
        return self.message or self.kind


@dataclass(frozen=True)
class Seed:
    """A seed (A, B) of type (n, k).

    ``A`` is the 0-based tuple of polygon vertices (A[i] = A_{i+1});
    ``B`` is dense, B[j - (n-k+1)] = B_j for j = n-k+1 .. n.  Seeds are
    plain data: invariants are checked by :func:`validate_seed`, not the
    constructor, so projective images of seeds remain representable.
    """

    n: int
    k: int
    A: Tuple[ProjPoint, ...]
    B: Tuple[ProjPoint, ...]

    def a(self, i: int) -> ProjPoint:
        """1-based vertex accessor, indices mod n."""
        return self.A[(i - 1) % self.n]

    def b(self, j: int) -> ProjPoint:
        """1-based marked-point accessor for j in [n-k+1, n]."""
        idx = j - (self.n - self.k + 1)
        if not 0 <= idx < self.k:
            raise IndexError(f"B_{j} does not exist for type ({self.n},{self.k})")
        return self.B[idx]

    @property
    def field(self) -> str:
        return RATIONAL if all(p.is_exact for p in self.A + self.B) else FLOAT

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and all(p == q for p, q in zip(self.A, other.A))
            and all(p == q for p, q in zip(self.B, other.B))
        )

    __hash__ = None


def seed_from_affine(n: int, k: int, a_coords: Sequence, b_coords: Sequence) -> Seed:
    A = tuple(ProjPoint.from_affine(x, y) for x, y in a_coords)
    B = tuple(ProjPoint.from_affine(x, y) for x, y in b_coords)
    return Seed(n, k, A, B)


def _segment_parameter(p: ProjPoint, q: ProjPoint, x: ProjPoint) -> Optional[Scalar]:
    """Parameter t with x = p + t (q - p) in the affine chart, or None if
    x is not on line pq (within tolerance for floats)."""
    (px, py), (qx, qy), (xx, xy) = p.affine(), q.affine(), x.affine()
    dx, dy = qx - px, qy - py
    cross = dx * (xy - py) - dy * (xx - px)
    norm = max(abs(float(dx)), abs(float(dy)), 1.0)
    if not near_zero(cross / norm if not is_exact(cross) else cross):
        return None
    if abs(float(dx)) >= abs(float(dy)):
        if near_zero(dx):
            return None
        return (xx - px) / dx
    return (xy - py) / dy


def validate_seed(seed: Seed) -> Optional[Violation]:
    """Check the seed invariants; return the first violation or None."""
    n, k = seed.n, seed.k
    if n < 4 or not 1 <= k <= n - 1:
        return Violation("bad_range", None, f"need n >= 4 and 1 <= k <= n-1, got ({n},{k})")
    if len(seed.A) != n or len(seed.B) != k:
        return Violation("bad_range", None, "wrong number of vertices or marked points")
    for p in seed.A + seed.B:
        if p.at_infinity:
            return Violation("not_convex", None, "vertex outside the affine chart")
    for i in range(1, n + 1):
        if orientation(seed.a(i), seed.a(i + 1), seed.a(i + 2)) != 1:
            return Violation("not_convex", i, f"orientation at A_{i} not strictly counterclockwise")
    for j in range(n - k + 1, n + 1):
        t = _segment_parameter(seed.a(j), seed.a(j + 1), seed.b(j))
        if t is None:
            return Violation("b_not_interior", j, f"B_{j} not on edge A_{j}A_{j + 1}")
        lo, hi = (0, 1)
        strict = t > lo and t < hi if is_exact(t) else (t > 1e-9 and t < 1 - 1e-9)
        if not strict:
            return Violation("b_not_interior", j, f"B_{j} not interior to its edge (t={float(t):.6g})")
    return None


def require_valid(seed: Seed) -> Seed:
    v = validate_seed(seed)
    if v is not None:
        raise InvalidSeed(v)
    return seed


def _guarded(op, *args):
    try:
        return op(*args)
    except PentaError as exc:
        raise ConstructionDegenerate(str(exc)) from exc


def step(seed: Seed) -> Seed:
    """One application of the shift map T_{n,k}.

    Relabeling: A*_i = A_{i+1} for i <= n-k and A*_i = B_i above; then
    B*_n = (A_1 A*_2)(A*_n A*_1) and B*_j = (A_{j+1} B*_{j+1})(A*_j A*_{j+1})
    constructed in descending order j = n-1, ..., n-k+1.  Descending order
    matters: each B*_j uses the previously built B*_{j+1}.
    """
    n, k = seed.n, seed.k
    a_new: List[ProjPoint] = [None] * (n + 1)  # type: ignore[list-item]
    for i in range(1, n - k + 1):
        a_new[i] = seed.a(i + 1)
    for i in range(n - k + 1, n + 1):
        a_new[i] = seed.b(i)
    b_new: dict[int, ProjPoint] = {}
    b_new[n] = _guarded(
        lambda: meet(join(seed.a(1), a_new[2]), join(a_new[n], a_new[1]))
    )
    for j in range(n - 1, n - k, -1):
        b_new[j] = _guarded(
            lambda j=j: meet(join(seed.a(j + 1), b_new[j + 1]), join(a_new[j], a_new[j + 1]))
        )
    return Seed(n, k, tuple(a_new[1:]), tuple(b_new[j] for j in range(n - k + 1, n + 1)))


def step_inverse(seed: Seed) -> Seed:
    """One application of the inverse shift map.

    With the starred points given: A_i = A*_{i-1} below, B_i = A*_i above,
    then A_i = (A_{i-1} B_{i-1})(B*_{i-1} B*_i) in ascending order
    i = n-k+2, ..., n, and finally A_1 = (A_n B_n)(A*_2 B*_n).
    """
    n, k = seed.n, seed.k
    a_old: List[ProjPoint] = [None] * (n + 1)  # type: ignore[list-item]
    b_old: dict[int, ProjPoint] = {}
    for i in range(2, n - k + 2):
        a_old[i] = seed.a(i - 1)
    for i in range(n - k + 1, n + 1):
        b_old[i] = seed.a(i)
    for i in range(n - k + 2, n + 1):
        a_old[i] = _guarded(
            lambda i=i: meet(join(a_old[i - 1], b_old[i - 1]), join(seed.b(i - 1), seed.b(i)))
        )
    a_old[1] = _guarded(lambda: meet(join(a_old[n], b_old[n]), join(seed.a(2), seed.b(n))))
    return Seed(n, k, tuple(a_old[1:]), tuple(b_old[j] for j in range(n - k + 1, n + 1)))


def step_power(seed: Seed, q: int) -> Seed:
    """T_{n,k}^q for any integer q."""
    s = seed
    if q >= 0:
        for _ in range(q):
            s = step(s)
    else:
        for _ in range(-q):
            s = step_inverse(s)
    return s


class SpiralOrbit:
    """Cached bidirectional orbit of a seed under the shift map.

    Vertex indexing: P_j is the A_1 vertex of T^{j-1}(seed), j in Z.
    The cache is grown on demand; instances are safe for concurrent
    readers once the needed window has been materialized.
    """

    def __init__(self, seed: Seed):
        self.base = seed
        self._cache = {0: seed}
        self._lo = 0
        self._hi = 0

    def seed_at(self, m: int) -> Seed:
        while self._hi < m:
            self._cache[self._hi + 1] = step(self._cache[self._hi])
            self._hi += 1
        while self._lo > m:
            self._cache[self._lo - 1] = step_inverse(self._cache[self._lo])
            self._lo -= 1
        return self._cache[m]

    def vertex(self, j: int) -> ProjPoint:
        return self.seed_at(j - 1).A[0]

    def window(self, j_min: int, j_max: int) -> List[ProjPoint]:
        if j_min > j_max:
            raise WindowTooSmall(f"empty window [{j_min}, {j_max}]")
        return [self.vertex(j) for j in range(j_min, j_max + 1)]


def spiral_window(seed: Seed, j_min: int, j_max: int) -> List[ProjPoint]:
    """Vertices P_j of the generated spiral for j in [j_min, j_max]."""
    return SpiralOrbit(seed).window(j_min, j_max)


def local_frame_windows(seed: Seed, j_min: int, j_max: int, size: int = 5):
    """Windows (P_j, ..., P_{j+size-1}) for j in [j_min, j_max], recentered
    and rescaled to unit size, as float points.

    The spiral contracts geometrically, so a float orbit loses the shape of
    deep windows (each step amplifies relative error).  Here the orbit is
    computed exactly and each window is moved to an O(1) frame before the
    single conversion to floats; the frame change is a translation plus a
    positive scaling, which preserves convexity, orientation, and every
    projective invariant of the window.  Requires a rational-field seed.
    """
    if seed.field != RATIONAL:
        raise ValueError("local_frame_windows needs an exact (rational) seed")
    orbit = SpiralOrbit(seed)
    window: List[ProjPoint] = [orbit.vertex(j) for j in range(j_min, j_min + size)]
    j = j_min
    while True:
        coords = [p.affine() for p in window]
        cx = sum(c[0] for c in coords) / size
        cy = sum(c[1] for c in coords) / size
        d = max(max(abs(c[0] - cx), abs(c[1] - cy)) for c in coords)
        if d == 0:
            raise ConstructionDegenerate("window collapsed")
        yield j, [
            ProjPoint.from_affine(float((x - cx) / d), float((y - cy) / d))
            for x, y in coords
        ]
        j += 1
        if j > j_max:
            return
        window.pop(0)
        window.append(orbit.vertex(j + size - 1))


UNIT_SQUARE_EXACT = tuple(
    ProjPoint.from_affine(Fraction(x), Fraction(y)) for x, y in ((0, 0), (1, 0), (1, 1), (0, 1))
)
UNIT_SQUARE_FLOAT = tuple(
    ProjPoint.from_affine(float(x), float(y)) for x, y in ((0, 0), (1, 0), (1, 1), (0, 1))
)


def normalization_transform(seed: Seed) -> ProjTransform:
    square = UNIT_SQUARE_EXACT if seed.field == RATIONAL else UNIT_SQUARE_FLOAT
    return transform_from_quads(seed.A[:4], square)


def normalize(seed: Seed) -> Seed:
    """The projectively equivalent seed with A_1..A_4 on the unit square."""
    t = normalization_transform(seed)
    return transform_seed(t, seed)


def transform_seed(t: ProjTransform, seed: Seed) -> Seed:
    return Seed(
        seed.n,
        seed.k,
        tuple(apply(t, p) for p in seed.A),
        tuple(apply(t, p) for p in seed.B),
    )


def d_ratios(seed: Seed) -> List[Scalar]:
    """Edge parameters d_j = |A_j - B_j| / |A_j - A_{j+1}| for j = n-k+1..n.

    Because B_j is on the edge, the Euclidean ratio equals the affine
    parameter of B_j along it, which keeps the value exact over rationals.
    """
    out = []
    n, k = seed.n, seed.k
    for j in range(n - k + 1, n + 1):
        t = _segment_parameter(seed.a(j), seed.a(j + 1), seed.b(j))
        if t is None:
            raise ConstructionDegenerate(f"B_{j} is off its edge")
        out.append(t)
    return out


def seed_with_d_ratios(n: int, k: int, a_points: Sequence[ProjPoint], ds: Sequence[Scalar]) -> Seed:
    """Build a seed from polygon vertices and edge parameters d in (0,1)."""
    if len(ds) != k:
        raise ValueError(f"need {k} edge parameters, got {len(ds)}")
    A = tuple(a_points)
    B = []
    for idx, j in enumerate(range(n - k + 1, n + 1)):
        p = A[(j - 1) % n].affine()
        q = A[j % n].affine()
        d = ds[idx]
        B.append(ProjPoint.from_affine(p[0] + d * (q[0] - p[0]), p[1] + d * (q[1] - p[1])))
    return Seed(n, k, A, tuple(B))


def is_plc_window(points: Sequence[ProjPoint]) -> bool:
    """True iff five consecutive points form a strictly convex pentagon."""
    if len(points) != 5:
        raise ValueError("exactly five points expected")
    signs = set()
    for i in range(5):
        s = orientation(points[i], points[(i + 1) % 5], points[(i + 2) % 5])
        if s == 0:
            return False
        signs.add(s)
    return len(signs) == 1


def pentagram_map_closed(poly: Sequence[ProjPoint]) -> List[ProjPoint]:
    """Pentagram image of a closed polygon, right labeling convention:
    vertex i of the image is (v_{i-1} v_{i+1}) meet (v_i v_{i+2})."""
    n = len(poly)
    if n < 5:
        raise ConstructionDegenerate("closed pentagram image needs n >= 5")
    out = []
    for i in range(n):
        out.append(
            _guarded(
                lambda i=i: meet(
                    join(poly[(i - 1) % n], poly[(i + 1) % n]),
                    join(poly[i], poly[(i + 2) % n]),
                )
            )
        )
    return out


def pentagram_path(points: dict) -> dict:
    """Pentagram image of an open path given as {index: point}; the image
    keeps the right convention, valid on [lo+1, hi-2]."""
    lo, hi = min(points), max(points)
    return {
        i: _guarded(
            lambda i=i: meet(join(points[i - 1], points[i + 1]), join(points[i], points[i + 2]))
        )
        for i in range(lo + 1, hi - 1)
    }


# ---------------------------------------------------------------------------
# seed constructors


def regular_seed(n: int, k: int, field: str = FLOAT, d: Scalar = None) -> Seed:
    """Template seed: a (rationalized) regular n-gon with B at parameter d.

    For the rational field the trigonometric vertices are snapped to
    denominator 1024, which keeps the polygon strictly convex.
    """
    if d is None:
        d = Fraction(1, 2) if field == RATIONAL else 0.5
    pts = []
    for i in range(n):
        ang = 2 * math.pi * i / n
        if field == RATIONAL:
            x = Fraction(round(math.cos(ang) * 1024), 1024)
            y = Fraction(round(math.sin(ang) * 1024), 1024)
        else:
            x, y = math.cos(ang), math.sin(ang)
        pts.append(ProjPoint.from_affine(x, y))
    return seed_with_d_ratios(n, k, pts, [d] * k)


def random_seed(n: int, k: int, rng: random.Random, field: str = RATIONAL) -> Seed:
    """Random valid seed: regular n-gon perturbed by small rational offsets
    (denominators <= 64 scaled into the polygon size), B at random
    d in [1/8, 7/8], rejection-sampled until the seed validates."""
    while True:
        pts = []
        for i in range(n):
            ang = 2 * math.pi * i / n
            wob_x = Fraction(rng.randint(-16, 16), 64 * 4)
            wob_y = Fraction(rng.randint(-16, 16), 64 * 4)
            x = Fraction(round(math.cos(ang) * 1024), 1024) + wob_x
            y = Fraction(round(math.sin(ang) * 1024), 1024) + wob_y
            if field == FLOAT:
                x, y = float(x), float(y)
            pts.append(ProjPoint.from_affine(x, y))
        ds = []
        for _ in range(k):
            d = Fraction(rng.randint(16, 112), 128)
            ds.append(d if field == RATIONAL else float(d))
        candidate = seed_with_d_ratios(n, k, pts, ds)
        if validate_seed(candidate) is None:
            return candidate


# ---------------------------------------------------------------------------
# JSON serialization (affine coordinates; rationals as "p/q" strings)


def seed_to_dict(seed: Seed) -> dict:
    field = seed.field
    return {
        "n": seed.n,
        "k": seed.k,
        "field": field,
        "A": [[dump_scalar(c) for c in p.affine()] for p in seed.A],
        "B": [[dump_scalar(c) for c in p.affine()] for p in seed.B],
    }


def seed_from_dict(data: dict) -> Seed:
    try:
        n, k = int(data["n"]), int(data["k"])
        field = data.get("field", FLOAT)
        if field not in (RATIONAL, FLOAT):
            raise ValueError(f"unknown field {field!r}")
        A = [
            ProjPoint.from_affine(parse_scalar(x, field), parse_scalar(y, field))
            for x, y in data["A"]
        ]
        B = [
            ProjPoint.from_affine(parse_scalar(x, field), parse_scalar(y, field))
            for x, y in data["B"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSeed(Violation("bad_range", None, f"malformed seed JSON: {exc}")) from exc
    return Seed(n, k, tuple(A), tuple(B))


def seed_to_json(seed: Seed) -> str:
    return json.dumps(seed_to_dict(seed), indent=2, sort_keys=True) + "\n"


def seed_from_json(text: str) -> Seed:
    return seed_from_dict(json.loads(text))


def seed_as_float(seed: Seed) -> Seed:
    """Convert a seed to the float field (used at service boundaries)."""
    if seed.field == FLOAT:
        return seed
    A = tuple(ProjPoint.from_affine(*(float(c) for c in p.affine())) for p in seed.A)
    B = tuple(ProjPoint.from_affine(*(float(c) for c in p.affine())) for p in seed.B)
    return Seed(seed.n, seed.k, A, B)
