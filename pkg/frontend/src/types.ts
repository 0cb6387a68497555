export type Point = [number, number]

export interface SeedData {
  n: number
  k: number
  field: 'float' | 'rational'
  A: Point[]
  B: Point[]
}

export interface Violation {
  kind: string
  index: number | null
  message: string
}

export interface ValidateResponse {
  ok: boolean
  violation?: Violation
}

export interface InvariantsResponse {
  Z: number
  flags: { index: number; value: number }[]
  chi: { index: number; value: number }[]
}

export interface LimitPointResponse {
  point: Point
  radius: number
}
