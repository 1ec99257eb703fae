"""Persistent result cache keyed by content hashes.

Entries are plain JSON, re-derivable from scratch; a version tag inside the
key means a library upgrade silently starts a fresh namespace instead of
serving stale values.  Writes go through a temp file and an atomic rename.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile


class DiskCache:
    def __init__(self, root: str | None, versionTag: str):
        self.root = root
        self.versionTag = versionTag
        if root:
            os.makedirs(root, exist_ok=True)

    @property
    def enabled(self) -> bool:
        return self.root is not None

    def key(self, family: str, rank: int, kind: str, params) -> str:
        blob = json.dumps(
            {"family": family, "rank": rank, "kind": kind, "params": params,
             "version": self.versionTag},
            sort_keys=True, separators=(",", ":"),
        )
        return hashlib.sha256(blob.encode()).hexdigest()

    def _path(self, key: str) -> str:
        return os.path.join(self.root, key + ".json")

    def get(self, key: str):
        if not self.enabled:
            return None
        try:
            with open(self._path(key)) as fh:
                return json.load(fh)
        except (OSError, ValueError):
            return None

    def put(self, key: str, value) -> None:
        if not self.enabled:
            return
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(value, fh, sort_keys=True)
            os.replace(tmp, self._path(key))
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass
