"""Newline-delimited JSON front end for a Session.

Request:  {"id": <int>, "method": <name>, "params": {...}}
Response: {"id": <int>, "ok": true, "value": ...}
      or  {"id": <int|null>, "ok": false, "error": {"kind": ..., "detail": ...}}
"""
from __future__ import annotations

import itertools
import json
import logging
import socketserver
import sys
import threading
from pathlib import Path

from .library import SkillLibrary
from .session import RequestError, Session
from .tasks import Task
from .tools.fabric import Workspace, build_registry

log = logging.getLogger(__name__)


def _malformed(detail: str) -> dict:
    return {"id": None, "ok": False, "error": {"kind": "malformed_frame", "detail": detail}}


def handle_line(session: Session, line) -> dict:
    """One frame in, one response out. Never raises for bad input."""
    try:
        req = json.loads(line)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        return _malformed(f"invalid JSON: {exc}")
    if not isinstance(req, dict):
        return _malformed("frame must be a JSON object")
    rid = req.get("id")
    if not isinstance(rid, int) or isinstance(rid, bool):
        return _malformed("'id' must be an integer")
    method = req.get("method")
    if not isinstance(method, str):
        return _malformed("'method' must be a string")
    params = req.get("params", {})
    if not isinstance(params, dict):
        return _malformed("'params' must be an object")
    try:
        return {"id": rid, "ok": True, "value": session.handle(method, params)}
    except RequestError as exc:
        return {"id": rid, "ok": False, "error": exc.to_dict()}


def serve_stream(session: Session, rfile, wfile):
    """Process frames from ``rfile`` in order until EOF."""
    for raw in rfile:
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8", errors="replace")
        if not raw.strip():
            continue
        resp = handle_line(session, raw)
        out = json.dumps(resp, ensure_ascii=False) + "\n"
        wfile.write(out.encode("utf-8") if _is_binary(wfile) else out)
        wfile.flush()


def _is_binary(f) -> bool:
    return not hasattr(f, "encoding")


def make_session(root, *, family: str, seed: int = 0, task: Task | None = None, cache=None,
                 edge_cases=(), hierarchical: bool = False, locked: bool = False) -> Session:
    """A session over workspace ``root``; the skill cache defaults to ``root/../skill_cache.json``."""
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    if task is not None:
        family = task.family
    cache = Path(cache) if cache is not None else root.parent / "skill_cache.json"
    lib = SkillLibrary.load(cache, hierarchical=hierarchical, locked=locked)
    return Session(build_registry(family, seed, edge_cases), Workspace(root), lib, task)


def serve_stdio(session: Session):
    serve_stream(session, sys.stdin, sys.stdout)


class _Handler(socketserver.StreamRequestHandler):
    def handle(self):
        session = self.server.new_session()
        log.info("connection opened: %s", session.workspace.root)
        serve_stream(session, self.rfile, self.wfile)


class SocketServer(socketserver.ThreadingMixIn, socketserver.UnixStreamServer):
    """One session per connection, each in its own directory under ``root``."""
    daemon_threads = True

    def __init__(self, path, root, **session_kw):
        self.root = Path(root)
        self.session_kw = session_kw
        self._ids = itertools.count(1)
        self._lock = threading.Lock()
        super().__init__(str(path), _Handler)

    def new_session(self) -> Session:
        with self._lock:
            n = next(self._ids)
        return make_session(self.root / f"session-{n}" / "workspace", **self.session_kw)


def serve_socket(path, root, **session_kw):
    with SocketServer(path, root, **session_kw) as server:
        server.serve_forever()
