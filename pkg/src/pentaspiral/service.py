"""Local JSON-over-HTTP service for the explorer UI.

Stateless POST endpoints over the seed JSON schema.  Rationals ("p/q"
strings) are accepted on input and converted to floats at this boundary;
every computation behind the service runs in the float field.  Binds to
loopback by default.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Callable, Dict, Tuple

from . import analysis, invariants
from .errors import InvalidSeed, PentaError
from .fields import as_float
from .seeds import (
    Seed,
    normalize,
    require_valid,
    seed_as_float,
    seed_from_dict,
    seed_to_dict,
    spiral_window,
    step_power,
    validate_seed,
)

Json = dict
Handler = Callable[[Json], Tuple[int, Json]]


def _point_out(p) -> list:
    x, y = p.affine()
    return [as_float(x), as_float(y)]


def _ep_validate(body: Json) -> Tuple[int, Json]:
    seed = seed_as_float(seed_from_dict(body["seed"]))
    violation = validate_seed(seed)
    if violation is None:
        return 200, {"ok": True}
    return 200, {"ok": False, "violation": violation.as_dict()}


def _ep_step(body: Json) -> Tuple[int, Json]:
    seed = require_valid(seed_as_float(seed_from_dict(body["seed"])))
    power = int(body.get("power", 1))
    if body.get("inverse"):
        power = -power
    return 200, {"seed": seed_to_dict(step_power(seed, power))}


def _ep_normalize(body: Json) -> Tuple[int, Json]:
    seed = require_valid(seed_as_float(seed_from_dict(body["seed"])))
    return 200, {"seed": seed_to_dict(normalize(seed))}


def _ep_window(body: Json) -> Tuple[int, Json]:
    seed = require_valid(seed_as_float(seed_from_dict(body["seed"])))
    j_min, j_max = int(body["j_min"]), int(body["j_max"])
    points = spiral_window(seed, j_min, j_max)
    return 200, {"vertices": [_point_out(p) for p in points]}


def _ep_invariants(body: Json) -> Tuple[int, Json]:
    seed = require_valid(seed_as_float(seed_from_dict(body["seed"])))
    n, k = seed.n, seed.k
    j_min = int(body.get("j_min", 3))
    j_max = int(body.get("j_max", 2 + (2 * n + k)))
    z = invariants.z_invariant(seed)
    flags = invariants.flag_sequence(seed, j_min, j_max)
    chi = invariants.chi_sequence(seed, j_min, j_max)
    return 200, {
        "Z": as_float(z),
        "flags": [{"index": f, "value": as_float(v)} for f, v in flags.items()],
        "chi": [{"index": j, "value": as_float(v)} for j, v in sorted(chi.items())],
    }


def _ep_limit_point(body: Json) -> Tuple[int, Json]:
    seed = require_valid(seed_as_float(seed_from_dict(body["seed"])))
    tol = float(body.get("tol", 1e-9))
    result = analysis.limit_point(seed, tol=tol)
    return 200, {"point": _point_out(result.point), "radius": result.radius}


def _ep_limit_orbit(body: Json) -> Tuple[int, Json]:
    seed = require_valid(seed_as_float(seed_from_dict(body["seed"])))
    m_max = int(body["m_max"])
    points = analysis.limit_point_orbit(seed, m_max)
    return 200, {"points": [_point_out(p) for p in points]}


def _ep_lps(body: Json) -> Tuple[int, Json]:
    n, k = int(body["n"]), int(body["k"])
    seed = analysis.lps_seed(n, k)
    return 200, {"seed": seed_to_dict(seed)}


ROUTES: Dict[str, Handler] = {
    "/seed/validate": _ep_validate,
    "/seed/step": _ep_step,
    "/seed/normalize": _ep_normalize,
    "/spiral/window": _ep_window,
    "/invariants": _ep_invariants,
    "/limit-point": _ep_limit_point,
    "/limit-point/orbit": _ep_limit_orbit,
    "/lps": _ep_lps,
}


class _Handler(BaseHTTPRequestHandler):
    server_version = "pentaspiral/0.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, status: int, payload: Json) -> None:
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def do_OPTIONS(self):  # CORS preflight for the browser UI
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_POST(self):
        handler = ROUTES.get(self.path)
        if handler is None:
            self._send(404, {"error": "not_found", "detail": self.path})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = json.loads(self.rfile.read(length) or b"{}")
        except (ValueError, json.JSONDecodeError) as exc:
            self._send(400, {"error": "bad_request", "detail": str(exc)})
            return
        try:
            status, payload = handler(body)
        except InvalidSeed as exc:
            self._send(422, {"error": exc.code, "violation": exc.violation.as_dict()})
            return
        except (KeyError, TypeError, ValueError) as exc:
            self._send(400, {"error": "bad_request", "detail": repr(exc)})
            return
        except PentaError as exc:
            self._send(500, {"error": exc.code, "detail": str(exc)})
            return
        self._send(status, payload)


def create_server(port: int = 8757, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), _Handler)


def serve(port: int = 8757, host: str = "127.0.0.1") -> None:
    server = create_server(port, host)
    print(f"pentaspiral service on http://{host}:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
