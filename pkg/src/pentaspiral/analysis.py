"""Analytic and experimental machinery for pentagram spirals.

Hilbert metric, limit-point estimation with nesting/contraction checks,
winding profiles, the logarithmic-spiral parameter equation, the
normalized-averaging operator and its fixed point, exact periodicity
verification, and limit-point orbit experiments.  Everything here except
the periodicity verifier works in the float field.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import (
    AverageNotValidSeed,
    MaxIterations,
    NestingViolated,
    NoConvergence,
    PointNotInterior,
)
from .fields import FLOAT, as_float
from .projective import ProjPoint, cross_ratio, orientation
from .seeds import (
    Seed,
    SpiralOrbit,
    d_ratios,
    normalize,
    random_seed,
    regular_seed,
    seed_as_float,
    seed_with_d_ratios,
    step_power,
    validate_seed,
)


# ---------------------------------------------------------------------------
# Hilbert metric


def _point_in_convex(poly: Sequence[ProjPoint], p: ProjPoint) -> bool:
    n = len(poly)
    return all(orientation(poly[i], poly[(i + 1) % n], p) == 1 for i in range(n))


def _boundary_hits(poly: Sequence[ProjPoint], b: ProjPoint, c: ProjPoint) -> List[Tuple[float, float]]:
    """Affine intersection points of line bc with the polygon boundary."""
    bx, by = (as_float(v) for v in b.affine())
    cx, cy = (as_float(v) for v in c.affine())
    dx, dy = cx - bx, cy - by
    hits: List[Tuple[float, float]] = []
    n = len(poly)
    for i in range(n):
        px, py = (as_float(v) for v in poly[i].affine())
        qx, qy = (as_float(v) for v in poly[(i + 1) % n].affine())
        ex, ey = qx - px, qy - py
        denom = dx * ey - dy * ex
        if abs(denom) < 1e-14:
            continue
        # solve b + t d = p + u e
        t = ((px - bx) * ey - (py - by) * ex) / denom
        u = ((px - bx) * dy - (py - by) * dx) / denom
        if -1e-12 <= u <= 1 + 1e-12:
            x, y = bx + t * dx, by + t * dy
            if not any(abs(x - hx) < 1e-9 and abs(y - hy) < 1e-9 for hx, hy in hits):
                hits.append((x, y))
    return hits


def hilbert_distance(poly: Sequence[ProjPoint], b: ProjPoint, c: ProjPoint) -> float:
    """Hilbert distance inside a convex polygon: -log [a, b, c, d] with a, d
    the boundary points of line bc, ordered a, b, c, d along the line."""
    if b == c:
        return 0.0
    if not (_point_in_convex(poly, b) and _point_in_convex(poly, c)):
        raise PointNotInterior("both points must be strictly inside the polygon")
    hits = _boundary_hits(poly, b, c)
    if len(hits) != 2:
        raise PointNotInterior(f"line met boundary in {len(hits)} points")
    bx, by = (as_float(v) for v in b.affine())
    cx, cy = (as_float(v) for v in c.affine())
    dx, dy = cx - bx, cy - by
    # parameter along the line, 0 at b, 1 at c
    def t_of(p):
        if abs(dx) >= abs(dy):
            return (p[0] - bx) / dx
        return (p[1] - by) / dy

    t1, t2 = sorted(t_of(h) for h in hits)
    a_pt = ProjPoint.from_affine(bx + t1 * dx, by + t1 * dy)
    d_pt = ProjPoint.from_affine(bx + t2 * dx, by + t2 * dy)
    val = as_float(cross_ratio(a_pt, b, c, d_pt))
    return -math.log(val)


# ---------------------------------------------------------------------------
# limit point


def _diameter(points: Sequence[ProjPoint]) -> float:
    coords = [tuple(as_float(v) for v in p.affine()) for p in points]
    best = 0.0
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            best = max(best, math.dist(coords[i], coords[j]))
    return best


def _strictly_nested(outer: Sequence[ProjPoint], inner: Sequence[ProjPoint]) -> bool:
    """Every inner vertex strictly inside the outer convex polygon.

    Coordinates are rescaled to unit size first so the test stays
    meaningful when the polygons have shrunk far below the absolute
    tolerance."""
    oc = [tuple(as_float(v) for v in p.affine()) for p in outer]
    ic = [tuple(as_float(v) for v in p.affine()) for p in inner]
    cx = sum(c[0] for c in oc) / len(oc)
    cy = sum(c[1] for c in oc) / len(oc)
    scale = max(max(abs(c[0] - cx), abs(c[1] - cy)) for c in oc)
    if scale == 0.0:
        return False
    o = [((c[0] - cx) / scale, (c[1] - cy) / scale) for c in oc]
    inner_scaled = [((c[0] - cx) / scale, (c[1] - cy) / scale) for c in ic]
    n = len(o)
    for px, py in inner_scaled:
        for i in range(n):
            ax, ay = o[i]
            bx, by = o[(i + 1) % n]
            if (bx - ax) * (py - ay) - (by - ay) * (px - ax) <= 1e-12:
                return False
    return True


def _centroid(points: Sequence[ProjPoint]) -> ProjPoint:
    coords = [tuple(as_float(v) for v in p.affine()) for p in points]
    x = sum(c[0] for c in coords) / len(coords)
    y = sum(c[1] for c in coords) / len(coords)
    return ProjPoint.from_affine(x, y)


@dataclass
class LimitPointResult:
    point: ProjPoint
    radius: float
    iterations: int
    diameters: List[float]


def _affine_shift_scale(seed: Seed, cx: float, cy: float, d: float) -> Seed:
    """Map every seed point through p -> (p - c)/d (a similarity, so the
    construction is unchanged up to this coordinate change)."""
    def conv(p: ProjPoint) -> ProjPoint:
        x, y = (as_float(v) for v in p.affine())
        return ProjPoint.from_affine((x - cx) / d, (y - cy) / d)

    return Seed(seed.n, seed.k, tuple(conv(p) for p in seed.A), tuple(conv(p) for p in seed.B))


def limit_point(seed: Seed, tol: float = 1e-9, max_iter: int = 200,
                stride: Optional[int] = None) -> LimitPointResult:
    """Shrink the polygon to its limit point by iterating the shift map.

    Uses blocks of ``stride`` shift steps (default n, or n+1 when k = 1 so
    that consecutive hulls are strictly nested), asserting nesting each
    block, until the hull diameter drops below ``tol``.  The working frame
    is recentered and rescaled as the polygon shrinks, so the shrinking
    never exhausts float resolution; the reported point and radius are in
    the original coordinates.
    """
    s = seed_as_float(seed)
    n, k = s.n, s.k
    if stride is None:
        stride = n if k >= 2 else n + 1
    current = s
    # original = offset + scale * working
    off_x, off_y, scale = 0.0, 0.0, 1.0
    prev_poly = current.A
    diameters = [_diameter(prev_poly)]
    for it in range(1, max_iter + 1):
        current = step_power(current, stride)
        poly = current.A
        if not _strictly_nested(prev_poly, poly):
            raise NestingViolated(f"hull {it} not strictly inside its predecessor")
        diam_work = _diameter(poly)
        diameters.append(diam_work * scale)
        if diam_work * scale < tol:
            cx, cy = (as_float(v) for v in _centroid(poly).affine())
            point = ProjPoint.from_affine(off_x + scale * cx, off_y + scale * cy)
            return LimitPointResult(point, diam_work * scale / 2, it, diameters)
        if diam_work < 1e-3:
            cx, cy = (as_float(v) for v in _centroid(poly).affine())
            current = _affine_shift_scale(current, cx, cy, diam_work)
            off_x += scale * cx
            off_y += scale * cy
            scale *= diam_work
            poly = current.A
        prev_poly = poly
    raise MaxIterations(f"no convergence to diameter {tol} in {max_iter} blocks")


# ---------------------------------------------------------------------------
# winding


def winding_profile(seed: Seed, steps: int) -> List[float]:
    """Cumulative argument (continuous lift) of P_j around the limit point,
    for j = 1..steps.  Per-step turns must stay within (-pi, pi).

    Arguments are measured in a working frame that is recentered and
    rescaled as the spiral contracts (directions are invariant under
    translation and positive scaling); the limit point is recomputed in
    each fresh frame so its relative accuracy never degrades.
    """
    cur = seed_as_float(seed)
    center = limit_point(cur, tol=1e-11).point
    cx, cy = (as_float(v) for v in center.affine())
    profile: List[float] = []
    prev = None
    total = 0.0
    for j in range(1, steps + 1):
        x, y = (as_float(v) for v in cur.A[0].affine())
        ang = math.atan2(y - cy, x - cx)
        if prev is None:
            total = ang
        else:
            turn = math.remainder(ang - prev, 2 * math.pi)
            if abs(turn) >= math.pi - 1e-9:
                raise NestingViolated("turn angle reached a half-turn; lift ill-defined")
            total += turn
        profile.append(total)
        prev = ang
        cur = step_power(cur, 1)
        if _diameter(cur.A) < 1e-3:
            coords = [tuple(as_float(v) for v in p.affine()) for p in cur.A]
            ox = sum(c[0] for c in coords) / len(coords)
            oy = sum(c[1] for c in coords) / len(coords)
            d = _diameter(cur.A)
            cur = _affine_shift_scale(cur, ox, oy, d)
            res = limit_point(cur, tol=1e-11)
            cx, cy = (as_float(v) for v in res.point.affine())
    return profile


# ---------------------------------------------------------------------------
# logarithmic spiral parameter


def _spiral_residual(n: int, k: int, z: complex) -> float:
    return abs((z + z.conjugate()) ** k - z ** (n + k) * (1 + z.conjugate()) ** k)


def log_spiral_parameter(n: int, k: int, tol: float = 1e-12) -> complex:
    """Solve (z + conj z)^k = z^{n+k} (1 + conj z)^k for |z| < 1 with
    arg z in (2 pi/(n+k), 2 pi/n).

    Polar substitution z = r e^{i theta} splits the equation into an
    argument balance and a log-modulus balance; the argument equation is
    solved by bisection in theta with r(theta) obtained by an inner
    bisection, then the pair is polished by damped Newton.
    """
    def phi(r: float, th: float) -> float:
        return math.atan2(r * math.sin(th), 1 + r * math.cos(th))

    def f_mod(r: float, th: float) -> float:
        # log |RHS| - log |LHS|
        lhs = k * math.log(2 * r * math.cos(th))
        rhs = (n + k) * math.log(r) + (k / 2) * math.log(1 + 2 * r * math.cos(th) + r * r)
        return rhs - lhs

    def r_of_theta(th: float) -> float:
        lo, hi = 1e-9, 1 - 1e-12
        flo = f_mod(lo, th)
        fhi = f_mod(hi, th)
        if flo * fhi > 0:
            raise NoConvergence(f"no modulus root for theta={th}")
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            fm = f_mod(mid, th)
            if flo * fm <= 0:
                hi = mid
            else:
                lo, flo = mid, fm
        return 0.5 * (lo + hi)

    def f_arg(th: float) -> float:
        r = r_of_theta(th)
        return (n + k) * th - k * phi(r, th) - 2 * math.pi

    lo_th = 2 * math.pi / (n + k) + 1e-9
    hi_th = 2 * math.pi / n - 1e-9
    flo, fhi = f_arg(lo_th), f_arg(hi_th)
    if flo * fhi > 0:
        raise NoConvergence("argument equation has no sign change in the band")
    for _ in range(200):
        mid = 0.5 * (lo_th + hi_th)
        fm = f_arg(mid)
        if flo * fm <= 0:
            hi_th = mid
        else:
            lo_th, flo = mid, fm
    theta = 0.5 * (lo_th + hi_th)
    r = r_of_theta(theta)

    # damped Newton polish on the complex residual
    z = r * cmath.exp(1j * theta)
    best = z
    best_res = _spiral_residual(n, k, z)
    h = 1e-8
    for _ in range(60):
        res = _spiral_residual(n, k, z)
        if res < best_res:
            best, best_res = z, res
        if res < tol:
            break
        def g(w: complex) -> complex:
            return (w + w.conjugate()) ** k - w ** (n + k) * (1 + w.conjugate()) ** k
        g0 = g(z)
        dx = (g(z + h) - g0) / h
        dy = (g(z + 1j * h) - g0) / h
        # Cramer for the real 2x2 system J [sx, sy]^T = -g0
        a, b = dx.real, dy.real
        c, d = dx.imag, dy.imag
        det = a * d - b * c
        if abs(det) < 1e-18:
            break
        sx = (-g0.real * d + g0.imag * b) / det
        sy = (-a * g0.imag + c * g0.real) / det
        step_scale = 1.0
        for _ in range(20):
            cand = complex(z.real + step_scale * sx, z.imag + step_scale * sy)
            if _spiral_residual(n, k, cand) < res and abs(cand) < 1:
                z = cand
                break
            step_scale /= 2
        else:
            break
    if best_res < _spiral_residual(n, k, z):
        z = best
    if _spiral_residual(n, k, z) > 1e-10:
        raise NoConvergence(f"best residual {_spiral_residual(n, k, z):.3e}")
    return z


# ---------------------------------------------------------------------------
# averaging operator and the self-similar fixed point


def theta_average(seed: Seed, m: int) -> Seed:
    """Average the normalized shift iterates of a seed.

    Normalizes T^j(seed) for j = 0..m-1, averages the polygons vertexwise
    in the affine chart and the edge parameters d_j, and rebuilds the seed.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    s = seed_as_float(seed)
    n, k = s.n, s.k
    coords = [[0.0, 0.0] for _ in range(n)]
    dsum = [0.0] * k
    current = s
    for j in range(m):
        norm = normalize(current)
        for i, p in enumerate(norm.A):
            x, y = (as_float(v) for v in p.affine())
            coords[i][0] += x
            coords[i][1] += y
        for i, d in enumerate(d_ratios(norm)):
            dsum[i] += as_float(d)
        if j + 1 < m:
            current = step_power(current, 1)
    pts = [ProjPoint.from_affine(cx / m, cy / m) for cx, cy in coords]
    averaged = seed_with_d_ratios(n, k, pts, [d / m for d in dsum])
    violation = validate_seed(averaged)
    if violation is not None:
        raise AverageNotValidSeed(str(violation))
    return averaged


def _seed_delta(a: Seed, b: Seed) -> float:
    worst = 0.0
    for p, q in zip(a.A + a.B, b.A + b.B):
        (px, py), (qx, qy) = p.affine(), q.affine()
        worst = max(worst, abs(as_float(px) - as_float(qx)), abs(as_float(py) - as_float(qy)))
    return worst


def lps_seed(n: int, k: int, tol: float = 1e-11, max_rounds: int = 400,
             m: Optional[int] = None) -> Seed:
    """Fixed point of the averaging operator: the self-similar spiral seed.

    Iterates theta_average with window m (default 2n+k, one full shift
    period) from the regular template until successive iterates agree to
    ``tol`` in every coordinate.
    """
    if m is None:
        m = 2 * n + k
    current = normalize(regular_seed(n, k, FLOAT))
    for _ in range(max_rounds):
        nxt = theta_average(current, m)
        delta = _seed_delta(current, nxt)
        current = nxt
        if delta < tol:
            return current
    raise NoConvergence(f"averaging did not settle below {tol} in {max_rounds} rounds")


# ---------------------------------------------------------------------------
# self-similarity frame of a shift-fixed seed


def _cubic_roots(b: float, c: float, d: float) -> List[complex]:
    """Roots of x^3 + b x^2 + c x + d (Cardano)."""
    p = c - b * b / 3
    q = d - b * c / 3 + 2 * b**3 / 27
    if abs(p) < 1e-300 and abs(q) < 1e-300:
        return [complex(-b / 3)] * 3
    s = cmath.sqrt(q * q / 4 + p**3 / 27)
    cand = -q / 2 + s
    if abs(cand) < abs(-q / 2 - s):
        cand = -q / 2 - s
    u = cmath.exp(cmath.log(cand) / 3)
    w = complex(-0.5, math.sqrt(3) / 2)
    return [uu - p / (3 * uu) - b / 3 for uu in (u, u * w, u * w * w)]


def _eigen3(m) -> List[complex]:
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (
        m[1][1] * m[2][2] - m[1][2] * m[2][1]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[0][0] * m[1][1] - m[0][1] * m[1][0]
    )
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return _cubic_roots(-float(tr), float(minors), -float(det))


def _eigenvector3(m, lam: complex) -> Tuple[complex, complex, complex]:
    rows = [
        (m[i][0] - (lam if i == 0 else 0), m[i][1] - (lam if i == 1 else 0),
         m[i][2] - (lam if i == 2 else 0))
        for i in range(3)
    ]
    best, best_norm = None, -1.0
    for i in range(3):
        for j in range(i + 1, 3):
            u, v = rows[i], rows[j]
            cand = (
                u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0],
            )
            norm = sum(abs(c) for c in cand)
            if norm > best_norm:
                best, best_norm = cand, norm
    return best  # type: ignore[return-value]


def shift_self_map(seed: Seed):
    """The projective map carrying a shift-fixed seed onto its shift image.

    Meaningful when normalize(T(seed)) == normalize(seed) (for example the
    averaging fixed point): the returned transform then moves every spiral
    vertex one step inward.
    """
    from .projective import transform_from_quads
    from .seeds import step

    s = seed_as_float(seed)
    return transform_from_quads(s.A[:4], step(s).A[:4])


def similarity_parameter(seed: Seed) -> complex:
    """The complex contraction parameter of a self-projective spiral.

    Eigenvalues of the shift self-map come as {mu, lam, conj lam} with mu
    real; the spiral's one-step similarity ratio is lam/mu, taken with
    positive imaginary part and modulus below one.
    """
    m = shift_self_map(seed).m
    eig = _eigen3([[as_float(e) for e in row] for row in m])
    real_idx = min(range(3), key=lambda i: abs(eig[i].imag))
    mu = eig[real_idx].real
    pair = [eig[i] for i in range(3) if i != real_idx]
    lam = pair[0] if pair[0].imag > 0 else pair[1]
    z = lam / mu
    if abs(z) > 1:
        z = (1 / z).conjugate()  # orientation of the frame flipped the pair
    return z


def similarity_frame_radii(seed: Seed, steps: int) -> List[float]:
    """Vertex distances from the limit point measured in the frame where
    the spiral's self-map is an exact rotation-dilation."""
    m = shift_self_map(seed).m
    mf = [[as_float(e) for e in row] for row in m]
    eig = _eigen3(mf)
    real_idx = min(range(3), key=lambda i: abs(eig[i].imag))
    mu = eig[real_idx]
    lam = next(e for i, e in enumerate(eig) if i != real_idx and e.imag > 0)
    v_center = _eigenvector3(mf, mu)
    v_plane = _eigenvector3(mf, lam)
    basis = [
        [v_plane[i].real for i in range(3)],
        [v_plane[i].imag for i in range(3)],
        [v_center[i].real for i in range(3)],
    ]
    # coordinates in this basis: solve basis^T w = p
    cols = [[basis[j][i] for j in range(3)] for i in range(3)]
    det = (
        cols[0][0] * (cols[1][1] * cols[2][2] - cols[1][2] * cols[2][1])
        - cols[0][1] * (cols[1][0] * cols[2][2] - cols[1][2] * cols[2][0])
        + cols[0][2] * (cols[1][0] * cols[2][1] - cols[1][1] * cols[2][0])
    )
    if abs(det) < 1e-14:
        raise NoConvergence("similarity frame is degenerate")
    inv = [[0.0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [cols[r][s] for r in range(3) if r != j for s in range(3) if s != i]
            minor = sub[0] * sub[3] - sub[1] * sub[2]
            inv[i][j] = (minor if (i + j) % 2 == 0 else -minor) / det
    orbit = SpiralOrbit(seed_as_float(seed))
    radii = []
    for j in range(1, steps + 1):
        h = orbit.vertex(j).h
        w = [sum(inv[i][t] * as_float(h[t]) for t in range(3)) for i in range(3)]
        if abs(w[2]) < 1e-300:
            raise NoConvergence("vertex on the invariant line")
        radii.append(math.hypot(w[0] / w[2], w[1] / w[2]))
    return radii


# ---------------------------------------------------------------------------
# exact periodicity


@dataclass
class TrialResult:
    trial: int
    passed: bool
    first_difference: Optional[str] = None


@dataclass
class PeriodicityReport:
    n: int
    k: int
    order: int
    trials: List[TrialResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(t.passed for t in self.trials)


def periodicity_check(n: int, k: int, order: int, trials: int,
                      rng: Optional[random.Random] = None) -> PeriodicityReport:
    """Exact verification that T^order fixes projective classes of seeds.

    For each random rational seed s, compares normalize(T^order(s)) with
    normalize(s) coordinate by coordinate; any mismatch is reported, not
    raised.  Each passing trial is a finite exact computation.
    """
    rng = rng or random.Random(2024)
    report = PeriodicityReport(n, k, order)
    for t in range(trials):
        s = random_seed(n, k, rng)
        lhs = normalize(step_power(s, order))
        rhs = normalize(s)
        diff = None
        for i, (p, q) in enumerate(zip(lhs.A, rhs.A)):
            if p != q:
                diff = f"A[{i + 1}]"
                break
        if diff is None:
            for i, (p, q) in enumerate(zip(lhs.B, rhs.B)):
                if p != q:
                    diff = f"B[{n - k + 1 + i}]"
                    break
        report.trials.append(TrialResult(t, diff is None, diff))
    return report


# ---------------------------------------------------------------------------
# limit-point orbits and the maximization probe


def limit_point_orbit(seed: Seed, m_max: int, tol: float = 1e-9) -> List[ProjPoint]:
    """Limit points c_m of the unit-square-normalized iterates, m = 0..m_max."""
    s = seed_as_float(seed)
    out = []
    for m in range(m_max + 1):
        normalized = normalize(step_power(s, m))
        out.append(limit_point(normalized, tol=tol).point)
    return out


@dataclass
class ZMaxReport:
    n: int
    k: int
    z_fixed: float
    samples: int
    samples_below: int
    max_sample: float
    gap: float

    @property
    def fixed_point_maximal(self) -> bool:
        return self.samples_below == self.samples


def z_maximization_probe(n: int, k: int, samples: int,
                         rng: Optional[random.Random] = None,
                         spread: float = 0.05) -> ZMaxReport:
    """Compare Z at the self-similar seed against random perturbed seeds.

    Exploratory: reports whether the fixed point beat every sample and the
    best sample gap.  Never raises on a counterexample.
    """
    from .invariants import z_invariant

    rng = rng or random.Random(99)
    fixed = lps_seed(n, k, tol=1e-9)
    z_fixed = as_float(z_invariant(fixed))
    below = 0
    best = -math.inf
    drawn = 0
    while drawn < samples:
        pts = []
        ok = True
        for p in fixed.A:
            x, y = (as_float(v) for v in p.affine())
            pts.append(ProjPoint.from_affine(x + rng.uniform(-spread, spread),
                                             y + rng.uniform(-spread, spread)))
        ds = [min(0.95, max(0.05, as_float(d) + rng.uniform(-spread, spread)))
              for d in d_ratios(fixed)]
        candidate = seed_with_d_ratios(n, k, pts, ds)
        if validate_seed(candidate) is not None:
            continue
        drawn += 1
        z_s = as_float(z_invariant(candidate))
        if z_s <= z_fixed:
            below += 1
        best = max(best, z_s)
    return ZMaxReport(n, k, z_fixed, samples, below, best, z_fixed - best)


# ---------------------------------------------------------------------------
# CSV schemas


def winding_to_csv(profile: Sequence[float]) -> str:
    lines = ["j,cumulative_arg"]
    for j, val in enumerate(profile, start=1):
        lines.append(f"{j},{val!r}")
    return "\n".join(lines) + "\n"


def orbit_to_csv(points: Sequence[ProjPoint]) -> str:
    lines = ["m,x,y"]
    for m, p in enumerate(points):
        x, y = (as_float(v) for v in p.affine())
        lines.append(f"{m},{x!r},{y!r}")
    return "\n".join(lines) + "\n"


def periodicity_to_csv(report: PeriodicityReport) -> str:
    lines = ["trial,pass,first_differing_coordinate"]
    for t in report.trials:
        lines.append(f"{t.trial},{str(t.passed).lower()},{t.first_difference or ''}")
    return "\n".join(lines) + "\n"
