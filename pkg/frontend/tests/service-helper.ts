import { spawn, type ChildProcess } from 'node:child_process'
import { templateSeed } from '../src/templates.js'

export interface RunningService {
  url: string
  stop: () => void
}

/** Spawn the backend on an ephemeral port and wait until it answers. */
export async function startService(): Promise<RunningService> {
  const port = 18100 + Math.floor(Math.random() * 2000)
  const child: ChildProcess = spawn(
    'python3',
    ['-m', 'pentaspiral.cli', 'serve', '--port', String(port)],
    { stdio: ['ignore', 'ignore', 'pipe'] },
  )
  let stderr = ''
  child.stderr?.on('data', (chunk) => (stderr += String(chunk)))
  const url = `http://127.0.0.1:${port}`
  const probe = JSON.stringify({ seed: templateSeed(4, 1) })
  for (let attempt = 0; attempt < 100; attempt++) {
    if (child.exitCode !== null) break
    try {
      const resp = await fetch(`${url}/seed/validate`, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: probe,
      })
      if (resp.ok) {
        return { url, stop: () => child.kill() }
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 100))
  }
  child.kill()
  throw new Error(`service failed to start on ${url}: ${stderr}`)
}
