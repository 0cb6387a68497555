import { ApiClient } from './api.js'
import { ExplorerState } from './state.js'
import { TEMPLATE_TYPES } from './templates.js'
import { draw, fitMap } from './view.js'
import type { Point } from './types.js'

const SERVICE_URL =
  new URLSearchParams(location.search).get('service') ?? 'http://127.0.0.1:8757'

const api = new ApiClient(SERVICE_URL)
const state = new ExplorerState(api)

const canvas = document.getElementById('stage') as HTMLCanvasElement
const ctx = canvas.getContext('2d')!
const templateSelect = document.getElementById('template') as HTMLSelectElement
const qInput = document.getElementById('q') as HTMLInputElement
const fpsInput = document.getElementById('fps') as HTMLInputElement
const playButton = document.getElementById('play') as HTMLButtonElement
const modeSelect = document.getElementById('mode') as HTMLSelectElement
const lpToggle = document.getElementById('show-lp') as HTMLInputElement
const traceToggle = document.getElementById('show-trace') as HTMLInputElement
const zReadout = document.getElementById('z-readout') as HTMLSpanElement
const banner = document.getElementById('frozen-banner') as HTMLDivElement
const toast = document.getElementById('toast') as HTMLDivElement
const slidersBox = document.getElementById('sliders') as HTMLDivElement
const statusBox = document.getElementById('status') as HTMLDivElement

let timer: number | null = null
let dragging: number | null = null

function repaint(): void {
  draw(ctx, state)
  zReadout.textContent = state.zValue === null ? '–' : state.zValue.toExponential(9)
  banner.style.display = state.frozen ? 'block' : 'none'
  playButton.disabled = !state.canStep
  statusBox.textContent = state.valid
    ? `type (${state.n},${state.k}) · frame ${state.frameCount}`
    : `invalid: ${state.violation?.message ?? state.violation?.kind ?? ''}`
  statusBox.className = state.valid ? 'ok' : 'bad'
  if (state.lastError) {
    toast.textContent = state.lastError
    toast.style.display = 'block'
    setTimeout(() => (toast.style.display = 'none'), 4000)
    state.lastError = null
    syncPlayButton()
  }
}

function rebuildSliders(): void {
  slidersBox.innerHTML = ''
  state.ds.forEach((d, idx) => {
    const row = document.createElement('label')
    row.textContent = `d${state.n - state.k + 1 + idx} `
    const input = document.createElement('input')
    input.type = 'range'
    input.min = '0.01'
    input.max = '0.99'
    input.step = '0.005'
    input.value = String(d)
    input.addEventListener('input', () => {
      void state.setD(idx, Number(input.value)).then(repaint)
    })
    row.appendChild(input)
    slidersBox.appendChild(row)
  })
}

function currentMap() {
  const everything: Point[] = [...state.seed.A, ...state.seed.B, ...state.window]
  return fitMap(everything, canvas.width, canvas.height)
}

canvas.addEventListener('pointerdown', (ev) => {
  const rect = canvas.getBoundingClientRect()
  const sx = ev.clientX - rect.left
  const sy = ev.clientY - rect.top
  const map = currentMap()
  dragging = null
  state.seed.A.forEach((p, i) => {
    const [px, py] = map(p)
    if ((px - sx) ** 2 + (py - sy) ** 2 < 100) dragging = i
  })
})

canvas.addEventListener('pointermove', (ev) => {
  if (dragging === null) return
  const rect = canvas.getBoundingClientRect()
  const sx = ev.clientX - rect.left
  const sy = ev.clientY - rect.top
  const map = currentMap()
  const anchor = state.seed.A[dragging]
  const [ax, ay] = map(anchor)
  const world: Point = [
    anchor[0] + (sx - ax) / map.scale,
    anchor[1] - (sy - ay) / map.scale,
  ]
  void state.moveVertex(dragging, world[0], world[1]).then(repaint)
})

canvas.addEventListener('pointerup', () => (dragging = null))

function syncPlayButton(): void {
  playButton.textContent = state.running ? 'pause' : 'animate'
}

function startStop(): void {
  if (state.running) {
    state.running = false
    if (timer !== null) clearInterval(timer)
    timer = null
  } else if (state.canStep) {
    state.running = true
    const interval = Math.max(40, 1000 / Number(fpsInput.value || '8'))
    timer = setInterval(() => {
      if (!state.running) return
      void state.stepFrame().then(repaint)
    }, interval) as unknown as number
  }
  syncPlayButton()
}

playButton.addEventListener('click', startStop)
qInput.addEventListener('change', () => (state.q = Number(qInput.value || '1')))
fpsInput.addEventListener('change', () => {
  if (state.running) {
    startStop()
    startStop()
  }
})
modeSelect.addEventListener('change', () => {
  void state.setMode(modeSelect.value as 'square' | 'circle').then(repaint)
})
lpToggle.addEventListener('change', () => {
  void state.toggleLimitPoint(lpToggle.checked).then(repaint)
})
traceToggle.addEventListener('change', () => {
  void state.toggleTrace(traceToggle.checked).then(repaint)
})

for (const [n, k] of TEMPLATE_TYPES) {
  const opt = document.createElement('option')
  opt.value = `${n},${k}`
  opt.textContent = `(${n}, ${k})`
  templateSelect.appendChild(opt)
}

templateSelect.addEventListener('change', () => {
  const [n, k] = templateSelect.value.split(',').map(Number)
  void state.loadTemplate(n, k).then(() => {
    rebuildSliders()
    repaint()
  })
})

void state
  .loadTemplate(4, 1)
  .then(() => {
    rebuildSliders()
    repaint()
  })
  .catch(() => {
    statusBox.textContent = `service unreachable at ${SERVICE_URL} — start it with: pentaspiral serve`
    statusBox.className = 'bad'
  })
