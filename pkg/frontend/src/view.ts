import type { ExplorerState } from './state.js'
import type { Point } from './types.js'

export interface ScreenMap {
  (p: Point): Point
  scale: number
}

/** Fit a set of world points into the canvas, math y-axis up. */
export function fitMap(points: Point[], width: number, height: number, margin = 24): ScreenMap {
  let x0 = Infinity
  let x1 = -Infinity
  let y0 = Infinity
  let y1 = -Infinity
  for (const [x, y] of points) {
    x0 = Math.min(x0, x)
    x1 = Math.max(x1, x)
    y0 = Math.min(y0, y)
    y1 = Math.max(y1, y)
  }
  const span = Math.max(x1 - x0, y1 - y0, 1e-9)
  const scale = (Math.min(width, height) - 2 * margin) / span
  const cx = (x0 + x1) / 2
  const cy = (y0 + y1) / 2
  const map = ((p: Point): Point => [
    width / 2 + (p[0] - cx) * scale,
    height / 2 - (p[1] - cy) * scale,
  ]) as ScreenMap
  map.scale = scale
  return map
}

/** Homothety view: translate the limit point to the origin and rescale so
 * the distinguished vertex sits on the unit circle. */
export function circleNormalize(points: Point[], center: Point, first: Point): Point[] {
  const r = Math.hypot(first[0] - center[0], first[1] - center[1]) || 1e-12
  return points.map((p) => [(p[0] - center[0]) / r, (p[1] - center[1]) / r])
}

const STRAND_COLORS = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b']

export function draw(ctx: CanvasRenderingContext2D, state: ExplorerState): void {
  const { width, height } = ctx.canvas
  ctx.clearRect(0, 0, width, height)

  let seedA = state.seed.A
  let seedB = state.seed.B
  let window = state.window
  let trace = state.trace
  let limitPoint = state.limitPoint

  if (state.mode === 'circle' && state.limitPoint && window.length) {
    const c = state.limitPoint
    const first = window[0]
    seedA = circleNormalize(seedA, c, first)
    seedB = circleNormalize(seedB, c, first)
    window = circleNormalize(window, c, first)
    trace = circleNormalize(trace, c, first)
    limitPoint = [0, 0]
  }

  const everything = [...seedA, ...seedB, ...window]
  if (!everything.length) return
  const map = fitMap(everything, width, height)

  // seed polygon
  ctx.strokeStyle = '#cccccc'
  ctx.lineWidth = 1
  ctx.beginPath()
  seedA.forEach((p, i) => {
    const [sx, sy] = map(p)
    if (i === 0) ctx.moveTo(sx, sy)
    else ctx.lineTo(sx, sy)
  })
  ctx.closePath()
  ctx.stroke()

  // spiral polyline, colored by strand phase
  for (let i = 0; i + 1 < window.length; i++) {
    ctx.strokeStyle = STRAND_COLORS[i % state.k % STRAND_COLORS.length]
    ctx.lineWidth = 1.6
    ctx.beginPath()
    const [ax, ay] = map(window[i])
    const [bx, by] = map(window[i + 1])
    ctx.moveTo(ax, ay)
    ctx.lineTo(bx, by)
    ctx.stroke()
  }

  // draggable vertices and marked points
  seedA.forEach((p, i) => {
    const [sx, sy] = map(p)
    ctx.fillStyle = state.highlightVertex === i ? '#e03030' : '#204080'
    ctx.beginPath()
    ctx.arc(sx, sy, 6, 0, 2 * Math.PI)
    ctx.fill()
  })
  seedB.forEach((p, i) => {
    const [sx, sy] = map(p)
    ctx.fillStyle = state.highlightMarked === i ? '#e03030' : '#d0a020'
    ctx.beginPath()
    ctx.arc(sx, sy, 4.5, 0, 2 * Math.PI)
    ctx.fill()
  })

  if (state.mode === 'circle') {
    ctx.strokeStyle = '#99bb99'
    ctx.setLineDash([5, 4])
    ctx.beginPath()
    const [ox, oy] = map([0, 0])
    ctx.arc(ox, oy, map.scale, 0, 2 * Math.PI)
    ctx.stroke()
    ctx.setLineDash([])
  }

  if (state.showLimitPoint && limitPoint) {
    const [sx, sy] = map(limitPoint)
    ctx.fillStyle = '#10a010'
    ctx.beginPath()
    ctx.arc(sx, sy, 4, 0, 2 * Math.PI)
    ctx.fill()
  }

  if (state.showTrace && trace.length) {
    ctx.fillStyle = 'rgba(160, 60, 160, 0.7)'
    for (const p of trace) {
      const [sx, sy] = map(p)
      ctx.fillRect(sx - 1.5, sy - 1.5, 3, 3)
    }
  }
}
