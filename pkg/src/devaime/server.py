"""Read-only HTTP suggestion service over the engine.

Three GET endpoints backed by an immutable engine state, served by the
stdlib threading server — the payloads are small JSON bodies and the
engine is pure, so no framework is needed.

    /api/suggest?q=token&limit=n   ranked candidates for one token
    /api/translit?text=sentence    sentence transliteration
    /healthz                       lexicon size, 503 until loaded
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from .chartable import CharacterTable
from .engine import EngineConfig, suggest, transliterate_sentence
from .errors import NoSegmentation
from .lexicon import Lexicon

MAX_LIMIT = 25


@dataclass
class ServiceState:
    table: CharacterTable
    lexicon: Lexicon | None  # None until loaded -> /healthz 503
    config: EngineConfig
    cors_origin: str = "*"


class _Handler(BaseHTTPRequestHandler):
    server_version = "devaime"

    # quiet by default; tests and the CLI flip this for debugging
    verbose = False

    def log_message(self, format: str, *args) -> None:  # noqa: A002
        if self.verbose:
            super().log_message(format, *args)

    @property
    def state(self) -> ServiceState:
        return self.server.state  # type: ignore[attr-defined]

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        if self.state.cors_origin:
            self.send_header("Access-Control-Allow-Origin", self.state.cors_origin)
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self) -> None:  # noqa: N802 - http.server API
        url = urlsplit(self.path)
        params = parse_qs(url.query, keep_blank_values=True)
        if url.path == "/healthz":
            self._healthz()
        elif url.path == "/api/suggest":
            self._suggest(params)
        elif url.path == "/api/translit":
            self._translit(params)
        else:
            self._send(404, {"error": "unknown path %r" % url.path})

    def _healthz(self) -> None:
        lex = self.state.lexicon
        if lex is None:
            self._send(503, {"error": "lexicon not loaded"})
        else:
            self._send(200, {"entries": len(lex)})

    def _require_lexicon(self) -> Lexicon | None:
        lex = self.state.lexicon
        if lex is None:
            self._send(503, {"error": "lexicon not loaded"})
        return lex

    def _suggest(self, params: dict[str, list[str]]) -> None:
        lex = self._require_lexicon()
        if lex is None:
            return
        q = params.get("q", [""])[0]
        if not q:
            self._send(400, {"error": "missing or empty q parameter"})
            return
        try:
            limit = int(params.get("limit", ["5"])[0])
        except ValueError:
            self._send(400, {"error": "limit must be an integer"})
            return
        if limit < 1:
            self._send(400, {"error": "limit must be >= 1"})
            return
        cfg = EngineConfig(
            max_suggestions=min(limit, MAX_LIMIT),
            path_limit=self.state.config.path_limit,
        )
        try:
            found = suggest(lex, self.state.table, cfg, q)
        except NoSegmentation:
            found = []
        self._send(
            200,
            {
                "query": q,
                "suggestions": [
                    {"word": s.word, "frequency": s.frequency, "source": s.source}
                    for s in found
                ],
            },
        )

    def _translit(self, params: dict[str, list[str]]) -> None:
        lex = self._require_lexicon()
        if lex is None:
            return
        if "text" not in params:
            self._send(400, {"error": "missing text parameter"})
            return
        text = params["text"][0]
        result = transliterate_sentence(lex, self.state.table, self.state.config, text)
        self._send(200, {"text": result})


def make_server(state: ServiceState, host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    """Bind a server (port 0 picks a free one); caller runs serve_forever."""
    server = ThreadingHTTPServer((host, port), _Handler)
    server.state = state  # type: ignore[attr-defined]
    return server
