"""Corner/flag invariants, the lattice labeling, and monomial invariants.

Flag convention used throughout: the window (P_{j-2}, ..., P_{j+2}) of a
path, re-indexed as (v_0..v_4), yields the invariant pair

    x_left  = [v_0, v_1, (v_0 v_1)(v_2 v_3), (v_0 v_1)(v_3 v_4)]
    x_right = [v_4, v_3, (v_4 v_3)(v_2 v_1), (v_4 v_3)(v_1 v_0)]

stored at flag indices 2j (left) and 2j+1 (right).  On a locally convex
path the four cross-ratio arguments come in line order, so both values
lie in (0, 1).

Row structure: row r holds the flag sequence of the r-th pentagram image
of the path.  One row determines the next through the birational update

    even f:  G'(f) = G(f)  (1 - G(f-2) G(f-1)) / (1 - G(f+2) G(f+3))
    odd  f:  G'(f) = G(f+2)(1 - G(f+3) G(f+4)) / (1 - G(f-1) G(f))

which is exactly the classical coordinate form of the pentagram map in
the right labeling convention; the geometric and algebraic routes agree
exactly over the rationals (this is tested).  Consecutive rows fit the
right-isosceles tiling with forward diagonals carrying even flags and
backward diagonals odd flags; a row sits one diagonal slot over from its
predecessor, which is why the even/odd products of a closed polygon trade
places when read in the fixed tiling frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    EdgeOutsideRegion,
    UnitProductDenominator,
    WindowTooSmall,
)
from .fields import Scalar, dump_scalar, is_exact, near_zero
from .projective import ProjPoint, cross_ratio, join, meet
from .seeds import Seed, SpiralOrbit, pentagram_map_closed


def corner_invariants(window: Sequence[ProjPoint]) -> Tuple[Scalar, Scalar]:
    """The invariant pair (x_left, x_right) of a five-point window."""
    if len(window) != 5:
        raise WindowTooSmall("corner invariants need exactly five points")
    v0, v1, v2, v3, v4 = window
    l01 = join(v0, v1)
    left = cross_ratio(v0, v1, meet(l01, join(v2, v3)), meet(l01, join(v3, v4)))
    l43 = join(v4, v3)
    right = cross_ratio(v4, v3, meet(l43, join(v2, v1)), meet(l43, join(v1, v0)))
    return left, right


@dataclass(frozen=True)
class FlagSequence:
    """Flag invariants of a path window, keyed by flag index."""

    values: Dict[int, Scalar]
    j_min: int
    j_max: int

    def __getitem__(self, f: int) -> Scalar:
        return self.values[f]

    def get(self, f: int, default=None):
        return self.values.get(f, default)

    def items(self):
        return sorted(self.values.items())

    def __len__(self) -> int:
        return len(self.values)


def flag_sequence(source, j_min: int, j_max: int) -> FlagSequence:
    """Flags 2j, 2j+1 for j in [j_min, j_max] along the spiral of a seed.

    ``source`` is a Seed or a SpiralOrbit; the orbit is extended as far as
    the windows require (two vertices beyond each end).
    """
    if j_min > j_max:
        raise WindowTooSmall(f"empty flag range [{j_min}, {j_max}]")
    orbit = source if isinstance(source, SpiralOrbit) else SpiralOrbit(source)
    values: Dict[int, Scalar] = {}
    for j in range(j_min, j_max + 1):
        window = [orbit.vertex(j + m) for m in (-2, -1, 0, 1, 2)]
        left, right = corner_invariants(window)
        values[2 * j] = left
        values[2 * j + 1] = right
    return FlagSequence(values, j_min, j_max)


def path_flag_values(points: Mapping[int, ProjPoint]) -> Dict[int, Scalar]:
    """Flag values of an explicit open path {index: point}."""
    lo, hi = min(points), max(points)
    values: Dict[int, Scalar] = {}
    for j in range(lo + 2, hi - 1):
        window = [points[j + m] for m in (-2, -1, 0, 1, 2)]
        left, right = corner_invariants(window)
        values[2 * j] = left
        values[2 * j + 1] = right
    return values


def closed_flag_sequence(poly: Sequence[ProjPoint]) -> List[Scalar]:
    """Cyclic flag values of a closed polygon: slots (2i, 2i+1) per vertex."""
    n = len(poly)
    out: List[Scalar] = [None] * (2 * n)  # type: ignore[list-item]
    for i in range(n):
        window = [poly[(i + m) % n] for m in (-2, -1, 0, 1, 2)]
        left, right = corner_invariants(window)
        out[2 * i] = left
        out[2 * i + 1] = right
    return out


def pentagram_row_update(row: Mapping[int, Scalar]) -> Dict[int, Scalar]:
    """Next row of flag labels; the domain shrinks at both ends."""
    out: Dict[int, Scalar] = {}
    for f in sorted(row):
        if f % 2 == 0:
            need = (f - 2, f - 1, f, f + 2, f + 3)
        else:
            need = (f - 1, f, f + 2, f + 3, f + 4)
        if not all(t in row for t in need):
            continue
        if f % 2 == 0:
            den = 1 - row[f + 2] * row[f + 3]
            if near_zero(den):
                raise UnitProductDenominator(f"pole at flags ({f + 2}, {f + 3})")
            out[f] = row[f] * (1 - row[f - 2] * row[f - 1]) / den
        else:
            den = 1 - row[f - 1] * row[f]
            if near_zero(den):
                raise UnitProductDenominator(f"pole at flags ({f - 1}, {f})")
            out[f] = row[f + 2] * (1 - row[f + 3] * row[f + 4]) / den
    return out


def pentagram_row_update_inverse(row: Mapping[int, Scalar]) -> Dict[int, Scalar]:
    """Previous row of flag labels, solved in closed form.

    With q_m = G(2m-1) G(2m) the square relations give the pair products of
    the upper row, and the even-flag update then isolates each label:
    H(2m) = G(2m)(1 - q_{m+1})/(1 - q_{m-1}), H(2m+1) = q_m / H(2m).
    """
    q: Dict[int, Scalar] = {}
    for f in sorted(row):
        if f % 2 == 0 and (f - 1) in row:
            q[f // 2] = row[f - 1] * row[f]
    out: Dict[int, Scalar] = {}
    for m in sorted(q):
        if (m - 1) not in q or (m + 1) not in q or 2 * m not in row:
            continue
        den = 1 - q[m - 1]
        if near_zero(den):
            raise UnitProductDenominator(f"pole at pair product q_{m - 1}")
        h_even = row[2 * m] * (1 - q[m + 1]) / den
        if near_zero(h_even):
            raise UnitProductDenominator(f"vanishing label at flag {2 * m}")
        out[2 * m] = h_even
        out[2 * m + 1] = q[m] / h_even
    return out


def closed_row_update(row: Sequence[Scalar]) -> List[Scalar]:
    """Row update for cyclic label sequences of a closed polygon."""
    n2 = len(row)
    out: List[Scalar] = [None] * n2  # type: ignore[list-item]
    for f in range(n2):
        if f % 2 == 0:
            den = 1 - row[(f + 2) % n2] * row[(f + 3) % n2]
            if near_zero(den):
                raise UnitProductDenominator(f"pole at flags ({f + 2}, {f + 3})")
            out[f] = row[f] * (1 - row[(f - 2) % n2] * row[(f - 1) % n2]) / den
        else:
            den = 1 - row[(f - 1) % n2] * row[f % n2]
            if near_zero(den):
                raise UnitProductDenominator(f"pole at flags ({f - 1}, {f})")
            out[f] = row[(f + 2) % n2] * (1 - row[(f + 3) % n2] * row[(f + 4) % n2]) / den
    return out


@dataclass
class TilingLabeling:
    """Edge labels of the triangular lattice generated by a spiral.

    ``rows[r]`` is the flag sequence of the r-th pentagram image of the
    path.  Even flags sit on forward diagonals, odd flags on backward
    diagonals; row r+1 sits one slot over from row r.  Lattice vertices
    are addressed as (line, pos): an up-right move from (line, pos)
    traverses the forward edge with label rows[line-1][2 pos] and lands on
    (line-1, pos+1); a down-right move traverses the backward edge with
    label rows[line][2 pos - 1] and lands on (line+1, pos).

    The quotient by the spiral's translation symmetry identifies
    rows[r][f] with rows[r - k][f + 2(n + k)], which the lookup uses for
    rows outside the stored range.  Immutable after fill.
    """

    n: int
    k: int
    rows: Dict[int, Dict[int, Scalar]] = field(default_factory=dict)

    def label(self, r: int, f: int) -> Scalar:
        shift = 2 * (self.n + self.k)
        for _ in range(64):
            if r in self.rows and f in self.rows[r]:
                return self.rows[r][f]
            if r > max(self.rows):
                r, f = r - self.k, f + shift
            elif r < min(self.rows):
                r, f = r + self.k, f - shift
            else:
                break
        raise EdgeOutsideRegion(f"no label stored for row {r}, flag {f}")

    def has_label(self, r: int, f: int) -> bool:
        try:
            self.label(r, f)
            return True
        except EdgeOutsideRegion:
            return False

    def up_label(self, line: int, pos: int) -> Scalar:
        return self.label(line - 1, 2 * pos)

    def down_label(self, line: int, pos: int) -> Scalar:
        return self.label(line, 2 * pos - 1)

    def triangle_horizontal(self, r: int, m: int, side: str) -> Scalar:
        """The 1 - EF label of the horizontal edge of a triangle in row r.

        side "bottom": legs (2m, 2m+1); side "top": legs (2m+1, 2m+2).
        """
        if side == "bottom":
            return 1 - self.label(r, 2 * m) * self.label(r, 2 * m + 1)
        if side == "top":
            return 1 - self.label(r, 2 * m + 1) * self.label(r, 2 * m + 2)
        raise ValueError("side must be 'top' or 'bottom'")

    def square_relation_holds(self, r: int, m: int, tol: float = 1e-9) -> bool:
        """AB = CD across the horizontal shared by rows r and r+1."""
        a = self.label(r, 2 * m) * self.label(r, 2 * m + 1)
        b = self.label(r + 1, 2 * m - 1) * self.label(r + 1, 2 * m)
        if is_exact(a) and is_exact(b):
            return a == b
        return abs(a - b) <= tol


def compatibility_ok(lab: TilingLabeling, tol: float = 1e-9) -> bool:
    """Check every complete square relation between stored adjacent rows."""
    for r in sorted(lab.rows):
        if r + 1 not in lab.rows:
            continue
        upper, lower = lab.rows[r], lab.rows[r + 1]
        for f in sorted(upper):
            m, rem = divmod(f, 2)
            if rem or f + 1 not in upper or 2 * m - 1 not in lower or 2 * m not in lower:
                continue
            if not lab.square_relation_holds(r, m, tol):
                return False
    return True


def fill_labeling(seed: Seed, r_min: int, r_max: int, width: int) -> TilingLabeling:
    """Labeling with base row 0 of ``width`` windows, rows filled to
    [r_min, r_max] by the forward and inverse updates."""
    if r_min > 0 or r_max < 0:
        raise ValueError("row range must contain the base row 0")
    j0 = 3
    base = flag_sequence(seed, j0, j0 + width - 1)
    rows: Dict[int, Dict[int, Scalar]] = {0: dict(base.values)}
    for r in range(1, r_max + 1):
        nxt = pentagram_row_update(rows[r - 1])
        if not nxt:
            raise WindowTooSmall(f"row {r} empty: widen the base row")
        rows[r] = nxt
    for r in range(-1, r_min - 1, -1):
        prev = pentagram_row_update_inverse(rows[r + 1])
        if not prev:
            raise WindowTooSmall(f"row {r} empty: widen the base row")
        rows[r] = prev
    return TilingLabeling(seed.n, seed.k, rows)


def zigzag_monomial(lab: TilingLabeling, start: Tuple[int, int], moves: str) -> Scalar:
    """Product of edge labels along a rightward zigzag.

    ``start`` is a lattice vertex (line, pos); ``moves`` is a string of
    'U' (up-right) and 'D' (down-right) steps.
    """
    line, pos = start
    total = None
    for mv in moves:
        if mv == "U":
            lab_val = lab.up_label(line, pos)
            line, pos = line - 1, pos + 1
        elif mv == "D":
            lab_val = lab.down_label(line, pos)
            line, pos = line + 1, pos
        else:
            raise ValueError(f"bad move {mv!r}: use 'U' or 'D'")
        total = lab_val if total is None else total * lab_val
    if total is None:
        return Fraction(1)
    return total


def zigzag_endpoint(start: Tuple[int, int], moves: str) -> Tuple[int, int]:
    line, pos = start
    for mv in moves:
        if mv == "U":
            line, pos = line - 1, pos + 1
        elif mv == "D":
            line, pos = line + 1, pos
    return line, pos


def z_invariant(seed: Seed, anchor: Optional[int] = None) -> Scalar:
    """The monomial invariant Z(n, k) of the seed's spiral.

    Product of the labels along the closed lattice path that climbs n+k
    forward diagonals and descends n backward diagonals; its endpoints are
    identified by the spiral's translation symmetry, so the value is
    independent of the anchor (and invariant under the shift map).

    The default anchor centers the needed flag window on the seed itself,
    which keeps the float path well conditioned: the inward direction of
    the spiral contracts and slowly starves vertex differences of
    precision, while the outward direction is harmless.
    """
    n, k = seed.n, seed.k
    if anchor is None:
        lo0, hi0 = _z_flag_span(n, k, 0)
        anchor = -(lo0 + hi0) // 4
    lab = _labeling_for_z(seed, anchor)
    moves = "U" * (n + k) + "D" * n
    return zigzag_monomial(lab, (n + k, anchor), moves)


def _z_needed_labels(n: int, k: int, m0: int):
    shift = 2 * (n + k)
    m_top = m0 + n + k
    needed = []
    for i in range(n + k):
        r, f = n + k - 1 - i, 2 * (m0 + i)
        needed.append((r % k, f + shift * (r // k)))
    for r in range(n):
        needed.append((r % k, (2 * m_top - 1) + shift * (r // k)))
    return needed


def _z_flag_span(n: int, k: int, m0: int):
    needed = _z_needed_labels(n, k, m0)
    lo = min(f - 2 * r for r, f in needed) - 2
    hi = max(f + 4 * r for r, f in needed) + 2
    return lo, hi


def _labeling_for_z(seed: Seed, m0: int) -> TilingLabeling:
    """Rows 0..k-1 sized so the Z path is covered via the translation
    quotient; deeper rows reduce to stored ones, which keeps the chain of
    row updates short (better float accuracy, less exact arithmetic)."""
    n, k = seed.n, seed.k
    lo, hi = _z_flag_span(n, k, m0)
    base = flag_sequence(seed, lo // 2 - 1, hi // 2 + 1)
    rows: Dict[int, Dict[int, Scalar]] = {0: dict(base.values)}
    for r in range(1, k):
        rows[r] = pentagram_row_update(rows[r - 1])
    return TilingLabeling(n, k, rows)


def vertex_invariant(f1: Scalar, f2: Scalar) -> Scalar:
    """Product of the two flag invariants adjacent to a vertex."""
    return f1 * f2


def chi_sequence(source, j_min: int, j_max: int) -> Dict[int, Scalar]:
    """Vertex invariants chi_j = G(2j) G(2j+1) along the spiral."""
    flags = flag_sequence(source, j_min, j_max)
    return {
        j: vertex_invariant(flags[2 * j], flags[2 * j + 1]) for j in range(j_min, j_max + 1)
    }


def closed_EO(poly: Sequence[ProjPoint]) -> Tuple[Scalar, Scalar]:
    """Products (E, O) of the two alternating label classes of a closed
    polygon: E collects the right-flag slots, O the left-flag slots."""
    labels = closed_flag_sequence(poly)
    e = math.prod(labels[1::2])
    o = math.prod(labels[0::2])
    return e, o


def eo_swap_holds(poly: Sequence[ProjPoint], tol: float = 1e-9) -> bool:
    """The E/O trade under the pentagram map.

    The image row sits one diagonal slot over in the tiling, so the
    slot-anchored products of the image polygon are read with the classes
    exchanged: E(T(P)) = O(P) and O(T(P)) = E(P).  On each polygon's own
    flag sequence this says both class products are preserved, which is
    what this check verifies.
    """
    e1, o1 = closed_EO(poly)
    e2, o2 = closed_EO(pentagram_map_closed(poly))
    if all(is_exact(v) for v in (e1, o1, e2, o2)):
        return e1 == e2 and o1 == o2
    return abs(e1 - e2) <= tol and abs(o1 - o2) <= tol


def scale_labeling(lab: TilingLabeling, s: Scalar) -> TilingLabeling:
    """Multiply forward-slant labels by s and backward-slant labels by 1/s.

    This is the scaling symmetry of the compatibility relations: every
    triangle has one leg of each slant, so all products are unchanged.
    """
    rows = {
        r: {f: (val * s if f % 2 == 0 else val / s) for f, val in row.items()}
        for r, row in lab.rows.items()
    }
    return TilingLabeling(lab.n, lab.k, rows)


# ---------------------------------------------------------------------------
# CSV export


def labeling_to_csv(lab: TilingLabeling) -> str:
    lines = ["row,flag_index,value"]
    for r in sorted(lab.rows):
        for f, val in sorted(lab.rows[r].items()):
            lines.append(f"{r},{f},{dump_scalar(val)}")
    return "\n".join(lines) + "\n"


def flags_to_csv(flags: FlagSequence, row: int = 0) -> str:
    lines = ["row,flag_index,value"]
    for f, val in flags.items():
        lines.append(f"{row},{f},{dump_scalar(val)}")
    return "\n".join(lines) + "\n"
