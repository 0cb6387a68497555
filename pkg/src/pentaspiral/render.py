"""Deterministic SVG rendering of spiral windows and seeds.

Two normalization modes: "square" draws the unit-square-normalized data
as is; "circle" recenters on a given point and rescales so the first
vertex lands on the unit circle (homothety view for shape inspection).
The math y-axis points up, so coordinates are flipped for screen space.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .fields import as_float
from .projective import ProjPoint
from .seeds import Seed

STRAND_COLORS = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#17becf", "#bcbd22",
)


def _affine(points: Sequence[ProjPoint], clip: float = 1e6) -> Tuple[List[Tuple[float, float]], int]:
    """Affine coordinates with out-of-chart vertices dropped; returns the
    number of clipped points alongside."""
    out = []
    clipped = 0
    for p in points:
        if p.at_infinity:
            clipped += 1
            continue
        x, y = (as_float(v) for v in p.affine())
        if abs(x) > clip or abs(y) > clip:
            clipped += 1
            continue
        out.append((x, y))
    return out, clipped


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def render_svg(points: Sequence[ProjPoint], seed: Optional[Seed] = None,
               k: Optional[int] = None, mode: str = "square",
               center: Optional[ProjPoint] = None,
               diagonals: bool = False, size: int = 640) -> str:
    """Render a spiral window (and optional seed overlay) as an SVG string.

    Polyline segments are colored by strand phase j mod k.  ``mode``
    "circle" requires ``center``; the picture is then translated so the
    center is the origin and scaled so the first point has unit radius.
    """
    coords, clipped = _affine(points)
    if not coords:
        raise ValueError("no drawable points")
    kk = k if k is not None else (seed.k if seed is not None else 1)

    if mode == "circle":
        if center is None:
            raise ValueError("circle mode needs a center point")
        cx, cy = (as_float(v) for v in center.affine())
        r0 = max(((coords[0][0] - cx) ** 2 + (coords[0][1] - cy) ** 2) ** 0.5, 1e-12)
        coords = [((x - cx) / r0, (y - cy) / r0) for x, y in coords]
        seed_coords = None
        if seed is not None:
            seed_coords, _ = _affine(seed.A + seed.B)
            seed_coords = [((x - cx) / r0, (y - cy) / r0) for x, y in seed_coords]
    elif mode == "square":
        seed_coords, _ = _affine(seed.A + seed.B) if seed is not None else (None, 0)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    everything = list(coords) + (seed_coords or [])
    xs = [c[0] for c in everything]
    ys = [c[1] for c in everything]
    pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    scale = size / max(x1 - x0, y1 - y0)

    def sx(x: float) -> str:
        return _fmt((x - x0) * scale)

    def sy(y: float) -> str:
        return _fmt((y1 - y) * scale)  # flip: counterclockwise stays counterclockwise

    lines: List[str] = []
    w = _fmt((x1 - x0) * scale)
    h = _fmt((y1 - y0) * scale)
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">'
    )
    if clipped:
        lines.append(f"<!-- {clipped} point(s) clipped outside the chart -->")

    if seed is not None and seed_coords is not None:
        na = seed.n
        ring = seed_coords[:na]
        pts_attr = " ".join(f"{sx(x)},{sy(y)}" for x, y in ring)
        lines.append(
            f'<polygon points="{pts_attr}" fill="none" stroke="#cccccc" stroke-width="1"/>'
        )
        # spiral segments of the seed: edges A_i A_{i+1} for i <= n-k, and
        # A_j B_j on the marked edges, drawn thick
        bs = seed_coords[na:]
        for i in range(na - seed.k + 1):
            a, b = ring[i], ring[(i + 1) % na]
            lines.append(
                f'<line x1="{sx(a[0])}" y1="{sy(a[1])}" x2="{sx(b[0])}" y2="{sy(b[1])}" '
                f'stroke="#333333" stroke-width="3"/>'
            )
        for idx in range(seed.k):
            j = na - seed.k + idx  # 0-based vertex A_{j+1}
            a = ring[j]
            b = bs[idx]
            lines.append(
                f'<line x1="{sx(a[0])}" y1="{sy(a[1])}" x2="{sx(b[0])}" y2="{sy(b[1])}" '
                f'stroke="#333333" stroke-width="3"/>'
            )

    if diagonals:
        for i in range(len(coords) - 2):
            a, c = coords[i], coords[i + 2]
            lines.append(
                f'<line x1="{sx(a[0])}" y1="{sy(a[1])}" x2="{sx(c[0])}" y2="{sy(c[1])}" '
                f'stroke="#e0b0b0" stroke-width="0.6"/>'
            )

    for i in range(len(coords) - 1):
        a, b = coords[i], coords[i + 1]
        color = STRAND_COLORS[i % kk % len(STRAND_COLORS)]
        lines.append(
            f'<polyline points="{sx(a[0])},{sy(a[1])} {sx(b[0])},{sy(b[1])}" '
            f'fill="none" stroke="{color}" stroke-width="1.5" class="strand-{i % kk}"/>'
        )

    if mode == "circle":
        lines.append(
            f'<circle cx="{sx(0.0)}" cy="{sy(0.0)}" r="{_fmt(scale)}" '
            f'fill="none" stroke="#99bb99" stroke-dasharray="4 3" stroke-width="0.8"/>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
