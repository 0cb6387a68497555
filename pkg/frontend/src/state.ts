import { ApiClient, ApiError } from './api.js'
import { buildSeed, clampD, edgeParameter, templateSeed } from './templates.js'
import type { Point, SeedData, Violation } from './types.js'

/** Successive frames closer than this in every rendered coordinate are
 * reported as a frozen movie (detects periodicity without tripping on
 * slow near-flows). */
export const FREEZE_THRESHOLD = 1e-6

export interface FrameListener {
  (state: ExplorerState): void
}

/** All explorer behavior apart from canvas painting and DOM plumbing.
 *
 * Every numeric value displayed by the UI originates from a service
 * response; the only local geometry is the affine placement of marked
 * points on their edges and the screen mapping.  Frame requests are
 * serialized: at most one in flight, late calls are dropped frames.
 */
export class ExplorerState {
  n = 4
  k = 1
  vertices: Point[] = []
  ds: number[] = []
  seed: SeedData

  valid = true
  violation: Violation | null = null

  q = 1
  fps = 8
  running = false
  frozen = false
  frameCount = 0

  zValue: number | null = null
  window: Point[] = []
  windowSize = 40

  mode: 'square' | 'circle' = 'square'
  showLimitPoint = false
  limitPoint: Point | null = null
  limitRadius = 0
  showTrace = false
  trace: Point[] = []
  traceLength = 60

  lastError: string | null = null

  private lastCoords: number[] | null = null
  private busy = false

  constructor(private api: ApiClient) {
    this.seed = templateSeed(4, 1)
  }

  get canStep(): boolean {
    return this.valid
  }

  get inFlight(): boolean {
    return this.busy
  }

  async loadTemplate(n: number, k: number): Promise<void> {
    this.n = n
    this.k = k
    const t = templateSeed(n, k)
    this.vertices = t.A
    this.ds = new Array(k).fill(0.5)
    this.seed = t
    this.frozen = false
    this.lastCoords = null
    this.frameCount = 0
    this.trace = []
    this.lastError = null
    await this.revalidate()
    if (this.valid) await this.refreshView()
  }

  private rebuild(): void {
    this.seed = buildSeed(this.n, this.k, this.vertices, this.ds)
  }

  async moveVertex(index: number, x: number, y: number): Promise<void> {
    this.vertices[index] = [x, y]
    this.rebuild()
    this.frozen = false
    this.lastCoords = null
    await this.revalidate()
    if (this.valid) await this.refreshView()
  }

  async setD(index: number, d: number): Promise<void> {
    this.ds[index] = clampD(d)
    this.rebuild()
    this.frozen = false
    this.lastCoords = null
    await this.revalidate()
    if (this.valid) await this.refreshView()
  }

  async revalidate(): Promise<void> {
    const result = await this.api.validate(this.seed)
    this.valid = result.ok
    this.violation = result.ok ? null : (result.violation ?? null)
    if (!result.ok) this.running = false
  }

  /** Highlighted element for an invalid seed: vertex index (0-based) or
   * marked-point index, per the violation report. */
  get highlightVertex(): number | null {
    if (this.violation?.kind === 'not_convex' && this.violation.index != null) {
      return (this.violation.index - 1) % this.n
    }
    return null
  }

  get highlightMarked(): number | null {
    if (this.violation?.kind === 'b_not_interior' && this.violation.index != null) {
      return this.violation.index - (this.n - this.k + 1)
    }
    return null
  }

  async refreshView(): Promise<void> {
    this.window = await this.api.window(this.seed, 1, this.windowSize)
    const inv = await this.api.invariants(this.seed)
    this.zValue = inv.Z
    if (this.showLimitPoint || this.mode === 'circle') {
      const lp = await this.api.limitPoint(this.seed)
      this.limitPoint = lp.point
      this.limitRadius = lp.radius
    }
  }

  async toggleLimitPoint(on: boolean): Promise<void> {
    this.showLimitPoint = on
    if (on && this.valid) {
      const lp = await this.api.limitPoint(this.seed)
      this.limitPoint = lp.point
      this.limitRadius = lp.radius
    }
  }

  async toggleTrace(on: boolean): Promise<void> {
    this.showTrace = on
    if (on && this.valid) {
      this.trace = await this.api.limitOrbit(this.seed, this.traceLength)
    }
  }

  async setMode(mode: 'square' | 'circle'): Promise<void> {
    this.mode = mode
    if (mode === 'circle' && this.valid && !this.limitPoint) {
      const lp = await this.api.limitPoint(this.seed)
      this.limitPoint = lp.point
      this.limitRadius = lp.radius
    }
  }

  /** Coordinates the freeze detector compares between frames. */
  renderedCoords(): number[] {
    const coords: number[] = []
    for (const p of this.seed.A) coords.push(p[0], p[1])
    for (const p of this.seed.B) coords.push(p[0], p[1])
    for (const p of this.window) coords.push(p[0], p[1])
    return coords
  }

  /** One animation frame: T^q then renormalize, refresh the displayed
   * data, and run freeze detection.  Returns false for dropped frames
   * (a request already in flight) and on errors (animation pauses). */
  async stepFrame(): Promise<boolean> {
    if (this.busy || !this.valid) return false
    if (this.q === 0) return true // static display
    this.busy = true
    try {
      const stepped = await this.api.step(this.seed, this.q)
      const normalized = await this.api.normalize(stepped)
      this.adoptSeed(normalized)
      await this.refreshView()
      if (this.showTrace) {
        this.trace = await this.api.limitOrbit(this.seed, this.traceLength)
      }
      const coords = this.renderedCoords()
      this.frozen =
        this.lastCoords !== null &&
        this.lastCoords.length === coords.length &&
        maxDelta(coords, this.lastCoords) < FREEZE_THRESHOLD
      this.lastCoords = coords
      this.frameCount += 1
      return true
    } catch (err) {
      this.lastError = describeError(err)
      this.running = false
      return false
    } finally {
      this.busy = false
    }
  }

  private adoptSeed(seed: SeedData): void {
    this.seed = seed
    this.vertices = seed.A.map((p) => [p[0], p[1]] as Point)
    this.ds = seed.B.map((b, idx) => {
      const j = this.n - this.k + idx
      return edgeParameter(seed.A[j], seed.A[(j + 1) % this.n], b)
    })
  }
}

export function maxDelta(a: number[], b: number[]): number {
  let worst = 0
  for (let i = 0; i < a.length; i++) {
    const d = Math.abs(a[i] - b[i])
    if (d > worst) worst = d
  }
  return worst
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    const payload = err.payload as { error?: string; detail?: string }
    return payload?.error ? `${payload.error}: ${payload.detail ?? ''}` : `service ${err.status}`
  }
  return err instanceof Error ? err.message : String(err)
}
