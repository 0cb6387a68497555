import type {
  InvariantsResponse,
  LimitPointResponse,
  Point,
  SeedData,
  ValidateResponse,
} from './types.js'

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: unknown,
  ) {
    super(`service returned ${status}`)
  }
}

/** Thin typed wrapper over the service endpoints; all geometry lives on
 * the other side of these calls. */
export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: typeof fetch = fetch,
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    })
    const payload = (await resp.json()) as unknown
    if (!resp.ok) throw new ApiError(resp.status, payload)
    return payload as T
  }

  validate(seed: SeedData): Promise<ValidateResponse> {
    return this.post('/seed/validate', { seed })
  }

  async step(seed: SeedData, power = 1, inverse = false): Promise<SeedData> {
    const out = await this.post<{ seed: SeedData }>('/seed/step', { seed, power, inverse })
    return out.seed
  }

  async normalize(seed: SeedData): Promise<SeedData> {
    const out = await this.post<{ seed: SeedData }>('/seed/normalize', { seed })
    return out.seed
  }

  async window(seed: SeedData, jMin: number, jMax: number): Promise<Point[]> {
    const out = await this.post<{ vertices: Point[] }>('/spiral/window', {
      seed,
      j_min: jMin,
      j_max: jMax,
    })
    return out.vertices
  }

  invariants(seed: SeedData): Promise<InvariantsResponse> {
    return this.post('/invariants', { seed })
  }

  limitPoint(seed: SeedData, tol = 1e-9): Promise<LimitPointResponse> {
    return this.post('/limit-point', { seed, tol })
  }

  async limitOrbit(seed: SeedData, mMax: number): Promise<Point[]> {
    const out = await this.post<{ points: Point[] }>('/limit-point/orbit', {
      seed,
      m_max: mMax,
    })
    return out.points
  }

  async lps(n: number, k: number): Promise<SeedData> {
    const out = await this.post<{ seed: SeedData }>('/lps', { n, k })
    return out.seed
  }
}
