import type { Point, SeedData } from './types.js'

/** Seed types offered by the template picker. */
export const TEMPLATE_TYPES: [number, number][] = [
  [4, 1],
  [4, 2],
  [4, 3],
  [5, 1],
  [5, 2],
  [5, 3],
  [6, 2],
]

export const D_MIN = 0.01
export const D_MAX = 0.99

export function clampD(d: number): number {
  return Math.min(D_MAX, Math.max(D_MIN, d))
}

export function regularVertices(n: number): Point[] {
  const pts: Point[] = []
  for (let i = 0; i < n; i++) {
    const ang = (2 * Math.PI * i) / n
    pts.push([Math.cos(ang), Math.sin(ang)])
  }
  return pts
}

/** Place the marked point of edge A_j A_{j+1} at parameter d (affine
 * interpolation along the edge; the only geometry the UI performs). */
export function markedPoint(a: Point, b: Point, d: number): Point {
  return [a[0] + d * (b[0] - a[0]), a[1] + d * (b[1] - a[1])]
}

export function buildSeed(n: number, k: number, vertices: Point[], ds: number[]): SeedData {
  const B: Point[] = []
  for (let idx = 0; idx < k; idx++) {
    const j = n - k + idx // 0-based index of A_{n-k+1+idx}
    B.push(markedPoint(vertices[j], vertices[(j + 1) % n], ds[idx]))
  }
  return { n, k, field: 'float', A: vertices.map((p) => [p[0], p[1]] as Point), B }
}

/** Edge parameter of a marked point, recovered from coordinates. */
export function edgeParameter(a: Point, b: Point, x: Point): number {
  const dx = b[0] - a[0]
  const dy = b[1] - a[1]
  if (Math.abs(dx) >= Math.abs(dy)) return (x[0] - a[0]) / dx
  return (x[1] - a[1]) / dy
}

export function templateSeed(n: number, k: number): SeedData {
  return buildSeed(n, k, regularVertices(n), new Array(k).fill(0.5))
}
