"""Append-only JSON-lines store of computed gamma(d, a) values.

Values and errors are kept as decimal strings. A record is reused only when it
was computed to at least the requested number of digits and its error bound is
below 10^-digits.
"""

from __future__ import annotations

import fcntl
import json
import os
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path

ENV_VAR = "EULERAP_CACHE"
ENGINES = ("general", "closed-form", "appendix")


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_DATA_HOME") or os.path.join(os.path.expanduser("~"), ".local", "share")
    return Path(base) / "eulerap" / "gamma.jsonl"


@dataclass(frozen=True)
class CacheRecord:
    d: int
    a: int
    digits: int
    value: str
    error: str
    params: dict | None
    engine: str
    timestamp: str

    def to_json(self) -> str:
        obj = {"d": self.d, "a": self.a, "digits": self.digits, "value": self.value,
               "error": self.error, "params": self.params, "engine": self.engine,
               "timestamp": self.timestamp}
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "CacheRecord":
        obj = json.loads(line)
        params = obj.get("params")
        if params is not None:
            params = {k: int(params[k]) for k in ("P", "K", "J")}
        if obj["engine"] not in ENGINES:
            raise ValueError(f"unknown engine {obj['engine']!r}")
        return cls(int(obj["d"]), int(obj["a"]), int(obj["digits"]), str(obj["value"]),
                   str(obj["error"]), params, str(obj["engine"]), str(obj["timestamp"]))

    def serves(self, digits: int) -> bool:
        return self.digits >= digits and Decimal(self.error) < Decimal(10) ** -digits


class ResultCache:
    """Reads and appends :class:`CacheRecord` lines under an advisory file lock."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_cache_path()

    def records(self) -> list[CacheRecord]:
        if not self.path.exists():
            return []
        out = []
        with open(self.path, encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_SH)
            try:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        out.append(CacheRecord.from_json(line))
                    except (ValueError, KeyError, TypeError):
                        continue  # a torn or foreign line is skipped, never trusted
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
        return out

    def lookup(self, d: int, a: int, digits: int) -> CacheRecord | None:
        """The most precise stored record for (d, a) that serves ``digits``."""
        best = None
        for rec in self.records():
            if rec.d == d and rec.a == a and rec.serves(digits):
                if best is None or rec.digits > best.digits:
                    best = rec
        return best

    def append(self, record: CacheRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(record.to_json() + "\n")
                fh.flush()
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
