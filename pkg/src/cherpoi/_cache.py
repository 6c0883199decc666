"""Disk cache for expensive objects, keyed by (kind, n, engine version).

Entries are JSON files with an embedded sha256 checksum of the payload;
corrupt or mismatched entries are treated as misses. Writes are atomic
(write to a temp file in the same directory, then rename).
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from . import __version__

ENV_VAR = "CHERPOI_CACHE"


def cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cherpoi"


def _entry_path(base: Path, kind: str, n: int) -> Path:
    return base / f"{kind}-n{n}-engine{__version__}.json"


def _payload_digest(payload) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def load(kind: str, n: int, directory=None):
    """Return the cached payload or None on miss/corruption."""
    path = _entry_path(cache_dir(directory), kind, n)
    try:
        with open(path) as fh:
            entry = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if entry.get("engine") != __version__ or entry.get("kind") != kind or entry.get("n") != n:
        return None
    payload = entry.get("payload")
    if entry.get("sha256") != _payload_digest(payload):
        return None
    return payload


def store(kind: str, n: int, payload, directory=None) -> Path:
    base = cache_dir(directory)
    base.mkdir(parents=True, exist_ok=True)
    path = _entry_path(base, kind, n)
    entry = {
        "kind": kind,
        "n": n,
        "engine": __version__,
        "sha256": _payload_digest(payload),
        "payload": payload,
    }
    fd, tmp = tempfile.mkstemp(dir=base, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(entry, fh)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path


def inspect(directory=None) -> list[dict]:
    """Describe every cache entry (including stale/corrupt ones)."""
    base = cache_dir(directory)
    out = []
    if not base.is_dir():
        return out
    for path in sorted(base.glob("*.json")):
        info = {"file": path.name, "bytes": path.stat().st_size}
        try:
            with open(path) as fh:
                entry = json.load(fh)
            info["kind"] = entry.get("kind")
            info["n"] = entry.get("n")
            info["engine"] = entry.get("engine")
            ok = entry.get("sha256") == _payload_digest(entry.get("payload"))
            info["status"] = "ok" if ok else "corrupt"
            if entry.get("engine") != __version__:
                info["status"] = "stale-engine"
        except (OSError, json.JSONDecodeError):
            info["status"] = "corrupt"
        out.append(info)
    return out


def purge(directory=None) -> int:
    base = cache_dir(directory)
    if not base.is_dir():
        return 0
    count = 0
    for path in base.glob("*.json"):
        path.unlink()
        count += 1
    return count
