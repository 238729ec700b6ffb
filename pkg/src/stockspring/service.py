"""
Stateless HTTP/JSON service exposing the search engine.

Endpoints:

    GET  /api/health             liveness + catalogue size
    GET  /api/defaults           the normalized empty sheet (UI defaults)
    GET  /api/catalogue/summary  entry count and per-field ranges
    POST /api/search             {"specification": {...}, "method": ...,
                                  "top": k?, "trace": bool?}

Sheet errors come back as 400 with the offending field named; a hard
filter that empties the catalogue is 422.  The catalogue is loaded once
at startup and shared immutably, so concurrent requests are independent.
"""
from __future__ import annotations

import argparse
import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .catalogue import Catalogue, generate_synthetic, load_catalogue
from .engine import FUZZY, MULTICRITERIA, search
from .errors import EmptyCatalogueError, SpecError
from .reporting import search_payload, stable_json
from .sheet import normalize

BOTH = "both"
_METHODS = (MULTICRITERIA, FUZZY, BOTH)


def catalogue_summary(catalogue: Catalogue) -> dict:
    ranges = {}
    for field in ("Do", "d", "L0", "R", "price"):
        values = [getattr(e, field) for e in catalogue.entries]
        ranges[field] = {"min": min(values), "max": max(values)}
    materials: dict[str, int] = {}
    ends: dict[str, int] = {}
    for e in catalogue.entries:
        materials[e.material] = materials.get(e.material, 0) + 1
        ends[e.ends] = ends.get(e.ends, 0) + 1
    return {"source": catalogue.source, "entries": len(catalogue),
            "rejected_rows": len(catalogue.rejections),
            "ranges": ranges, "materials": materials, "ends": ends}


def run_search_request(catalogue: Catalogue, body: dict) -> dict:
    """Shared request handling: normalize, search, serialize."""
    if not isinstance(body, dict):
        raise SpecError("request body must be a JSON object")
    unknown = sorted(set(body) - {"specification", "method", "top", "trace",
                                  "catalogue"})
    if unknown:
        raise SpecError(f"unknown request field(s): {', '.join(unknown)}")
    selector = body.get("catalogue", "default")
    if selector != "default":
        raise SpecError(f"unknown catalogue {selector!r}; only 'default' is loaded")
    method = body.get("method", BOTH)
    if method not in _METHODS:
        raise SpecError(f"method: {method!r} is not one of {list(_METHODS)}")
    top = body.get("top", 10)
    if not isinstance(top, int) or isinstance(top, bool) or top < 1:
        raise SpecError(f"top: expected a positive integer, got {top!r}")
    trace = body.get("trace", False)
    if not isinstance(trace, bool):
        raise SpecError(f"trace: expected true/false, got {trace!r}")

    sheet = normalize(body.get("specification") or {})
    methods = [MULTICRITERIA, FUZZY] if method == BOTH else [method]
    results = {m: search(catalogue, sheet, m) for m in methods}
    return search_payload(results, sheet, catalogue.source, len(catalogue),
                          top=top, trace=trace)


def make_handler(catalogue: Catalogue):
    defaults = normalize({}).to_full_dict()
    summary = catalogue_summary(catalogue)

    class Handler(BaseHTTPRequestHandler):
        server_version = "stockspring"
        protocol_version = "HTTP/1.1"

        def log_message(self, *args):  # tests stay quiet
            pass

        def _cors(self) -> None:
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")

        def _send(self, status: int, payload: dict) -> None:
            body = stable_json(payload).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self._cors()
            self.end_headers()
            self.wfile.write(body)

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Content-Length", "0")
            self._cors()
            self.end_headers()

        def do_GET(self):
            if self.path == "/api/health":
                self._send(200, {"status": "ok", "entries": len(catalogue)})
            elif self.path == "/api/defaults":
                self._send(200, defaults)
            elif self.path == "/api/catalogue/summary":
                self._send(200, summary)
            else:
                self._send(404, {"error": f"unknown path {self.path}"})

        def do_POST(self):
            if self.path != "/api/search":
                self._send(404, {"error": f"unknown path {self.path}"})
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                body = json.loads(self.rfile.read(length) or b"{}")
            except (ValueError, json.JSONDecodeError) as exc:
                self._send(400, {"error": f"request body is not valid JSON: {exc}"})
                return
            try:
                self._send(200, run_search_request(catalogue, body))
            except SpecError as exc:
                self._send(400, {"error": str(exc)})
            except EmptyCatalogueError as exc:
                self._send(422, {"error": str(exc)})

    return Handler


def create_server(catalogue: Catalogue, host: str = "127.0.0.1",
                  port: int = 0) -> ThreadingHTTPServer:
    """Bound, ready-to-serve HTTP server; caller runs serve_forever()."""
    return ThreadingHTTPServer((host, port), make_handler(catalogue))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="stockspring-serve",
        description="Serve the spring search engine over HTTP/JSON.")
    parser.add_argument("--catalogue", metavar="FILE")
    parser.add_argument("--synthetic", type=int, metavar="COUNT")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8437)
    args = parser.parse_args(argv)
    if (args.catalogue is None) == (args.synthetic is None):
        parser.error("choose exactly one of --catalogue or --synthetic")
    catalogue = (load_catalogue(args.catalogue) if args.catalogue
                 else generate_synthetic(args.seed, args.synthetic))
    server = create_server(catalogue, args.host, args.port)
    host, port = server.server_address[:2]
    print(f"serving {catalogue.source} ({len(catalogue)} springs) "
          f"on http://{host}:{port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
