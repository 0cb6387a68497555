"""Projective geometry over homogeneous coordinates.

Points and lines are triples of scalars up to scale, generic over exact
rationals and floats.  Join and meet are both the antisymmetric triple
product (the two operations are dual).  The affine chart is z = 1
throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateQuad,
    DegenerateQuadruple,
    NotCollinear,
    PointAtInfinity,
    SingularTransform,
)
from .fields import EPS, Scalar, is_exact, near_zero

Triple = Tuple[Scalar, Scalar, Scalar]


def _cross(u: Triple, v: Triple) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Triple, v: Triple) -> Scalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _canonical(h: Triple) -> Triple:
    """Scale to the canonical representative of the ray.

    Exact: last nonzero coordinate becomes 1.  Float: max-magnitude
    coordinate becomes +/-1 with the first nonzero coordinate positive.
    """
    if all(is_exact(c) for c in h):
        for i in (2, 1, 0):
            if h[i] != 0:
                d = h[i]
                return (Fraction(h[0], 1) / d, Fraction(h[1], 1) / d, Fraction(h[2], 1) / d)
        raise ValueError("zero homogeneous triple")
    m = max(abs(float(c)) for c in h)
    if m == 0.0:
        raise ValueError("zero homogeneous triple")
    scaled = tuple(float(c) / m for c in h)
    for c in scaled:
        if abs(c) > EPS:
            if c < 0:
                scaled = tuple(-x for x in scaled)
            break
    return scaled  # type: ignore[return-value]


def _triples_equal(a: Triple, b: Triple) -> bool:
    if all(is_exact(c) for c in a) and all(is_exact(c) for c in b):
        return a == b
    return all(abs(float(x) - float(y)) <= EPS for x, y in zip(a, b))


@dataclass(frozen=True)
class ProjPoint:
    """A point of the projective plane, stored in canonical form."""

    h: Triple

    def __init__(self, h: Sequence[Scalar]):
        object.__setattr__(self, "h", _canonical(tuple(h)))

    @classmethod
    def from_affine(cls, x: Scalar, y: Scalar) -> "ProjPoint":
        one = Fraction(1) if is_exact(x) and is_exact(y) else 1.0
        return cls((x, y, one))

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.h)

    @property
    def at_infinity(self) -> bool:
        return near_zero(self.h[2])

    def affine(self) -> Tuple[Scalar, Scalar]:
        if self.at_infinity:
            raise PointAtInfinity(f"no affine coordinates for {self.h}")
        return (self.h[0] / self.h[2], self.h[1] / self.h[2])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return _triples_equal(self.h, other.h)

    __hash__ = None  # tolerance-based equality: keep unhashable

    def __repr__(self) -> str:
        return f"ProjPoint{self.h}"


@dataclass(frozen=True)
class ProjLine:
    """A line of the projective plane (dual coordinates, canonical form)."""

    h: Triple

    def __init__(self, h: Sequence[Scalar]):
        object.__setattr__(self, "h", _canonical(tuple(h)))

    def contains(self, p: ProjPoint) -> bool:
        return near_zero(_dot(self.h, p.h))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjLine):
            return NotImplemented
        return _triples_equal(self.h, other.h)

    __hash__ = None

    def __repr__(self) -> str:
        return f"ProjLine{self.h}"


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """Line through two distinct points."""
    h = _cross(p.h, q.h)
    if all(near_zero(c) for c in h):
        raise CoincidentPoints(f"join of equal points {p}")
    return ProjLine(h)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """Intersection of two distinct lines."""
    h = _cross(l.h, m.h)
    if all(near_zero(c) for c in h):
        raise CoincidentLines(f"meet of equal lines {l}")
    return ProjPoint(h)


def collinear(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    det = _dot(_cross(a.h, b.h), c.h)
    return near_zero(det)


def cross_ratio(a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> Scalar:
    """Inverse cross ratio (a-b)(c-d)/((a-c)(b-d)) of four collinear points.

    Computed on projective parameters of the common line, so points at
    infinity on the line are handled exactly.  For points with affine
    parameters t_a < t_b < t_c < t_d the value lies in (0, 1).
    """
    pts = (a, b, c, d)
    line = None
    for i in range(4):
        for j in range(i + 1, 4):
            h = _cross(pts[i].h, pts[j].h)
            if not all(near_zero(comp) for comp in h):
                line = h
                break
        if line is not None:
            break
    if line is None:
        raise DegenerateQuadruple("all four points coincide")
    for p in pts:
        if not near_zero(_dot(line, p.h)):
            raise NotCollinear(f"{p} not on the common line")
    # project out the dominant line coordinate: the remaining pair of
    # homogeneous coordinates parametrizes the line
    drop = max(range(3), key=lambda k: abs(float(line[k])))
    keep = [k for k in range(3) if k != drop]

    def param(p: ProjPoint):
        return (p.h[keep[0]], p.h[keep[1]])

    def det2(u, v):
        return u[0] * v[1] - u[1] * v[0]

    pa, pb, pc, pd = (param(p) for p in pts)
    num = det2(pa, pb) * det2(pc, pd)
    den = det2(pa, pc) * det2(pb, pd)
    if near_zero(den):
        raise DegenerateQuadruple("cross-ratio denominator vanishes")
    return num / den


def orientation(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> int:
    """+1 for counterclockwise, -1 for clockwise, 0 for collinear (z=1 chart)."""
    for pt_ in (p, q, r):
        if pt_.at_infinity:
            raise PointAtInfinity(f"orientation undefined for {pt_}")
    (px, py), (qx, qy), (rx, ry) = p.affine(), q.affine(), r.affine()
    det = (qx - px) * (ry - py) - (qy - py) * (rx - px)
    if near_zero(det):
        return 0
    return 1 if det > 0 else -1


# ---------------------------------------------------------------------------
# 3x3 transforms


Mat3 = Tuple[Triple, Triple, Triple]


def _mat_vec(m: Mat3, v: Triple) -> Triple:
    return tuple(_dot(row, v) for row in m)  # type: ignore[return-value]


def _mat_mul(a: Mat3, b: Mat3) -> Mat3:
    bt = tuple(zip(*b))
    return tuple(tuple(_dot(row, col) for col in bt) for row in a)  # type: ignore[return-value]


def _det3(m: Mat3) -> Scalar:
    return _dot(m[0], _cross(m[1], m[2]))


def _adjugate(m: Mat3) -> Mat3:
    c = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [m[r][s] for r in range(3) if r != i for s in range(3) if s != j]
            minor = sub[0] * sub[3] - sub[1] * sub[2]
            c[i][j] = minor if (i + j) % 2 == 0 else -minor
    # transpose of cofactor matrix
    return tuple(tuple(c[j][i] for j in range(3)) for i in range(3))  # type: ignore[return-value]


def _is_singular(rows: Mat3) -> bool:
    det = _det3(rows)
    if all(is_exact(e) for row in rows for e in row):
        return det == 0
    norm = max(abs(float(e)) for row in rows for e in row)
    # relative test: the determinant scales like the cube of the entries
    return norm == 0.0 or abs(float(det)) <= EPS * norm**3


@dataclass(frozen=True)
class ProjTransform:
    """An invertible projective transformation given by a 3x3 matrix."""

    m: Mat3

    def __init__(self, m: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(row) for row in m)
        if _is_singular(rows):
            raise SingularTransform("matrix is singular")
        object.__setattr__(self, "m", rows)

    def inverse(self) -> "ProjTransform":
        return ProjTransform(_adjugate(self.m))

    def compose(self, other: "ProjTransform") -> "ProjTransform":
        """self after other."""
        return ProjTransform(_mat_mul(self.m, other.m))

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return apply(self, p)

    @classmethod
    def identity(cls, exact: bool = True) -> "ProjTransform":
        one = Fraction(1) if exact else 1.0
        zero = Fraction(0) if exact else 0.0
        return cls(((one, zero, zero), (zero, one, zero), (zero, zero, one)))


def apply(t: ProjTransform, p: ProjPoint) -> ProjPoint:
    return ProjPoint(_mat_vec(t.m, p.h))


def _basis_to_quad(quad: Sequence[ProjPoint]) -> Mat3:
    """Matrix sending the standard basis e1,e2,e3,(1,1,1) to the quad."""
    p1, p2, p3, p4 = quad
    cols = (p1.h, p2.h, p3.h)
    m: Mat3 = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))  # type: ignore[assignment]
    if _is_singular(m):
        raise DegenerateQuad("three of the four points are collinear")
    adj = _adjugate(m)
    lam = _mat_vec(adj, p4.h)  # det * coefficients of p4 in the basis
    exact = all(is_exact(c) for c in lam)
    lmax = max(abs(float(c)) for c in lam)
    for c in lam:
        if (c == 0) if exact else (lmax == 0.0 or abs(float(c)) <= EPS * lmax):
            raise DegenerateQuad("fourth point collinear with two of the others")
    return tuple(
        tuple(m[i][j] * lam[j] for j in range(3)) for i in range(3)
    )  # type: ignore[return-value]


def transform_from_quads(src: Sequence[ProjPoint], dst: Sequence[ProjPoint]) -> ProjTransform:
    """The unique projective map sending four general-position points to four."""
    if len(src) != 4 or len(dst) != 4:
        raise DegenerateQuad("need exactly four source and four target points")
    ms = _basis_to_quad(src)
    md = _basis_to_quad(dst)
    return ProjTransform(_mat_mul(md, _adjugate(ms)))
