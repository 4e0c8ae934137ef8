"""
On-disk persistence for the Schubert polynomial memo.

The file is JSON Lines: a header object, then one record per polynomial::

    {"format": "bruhat-taquin-schubert", "version": 1}
    {"perm": "2143", "nvars": 4, "poly": [{"exponents": [2, 0, 0, 0], "coeff": 1}, ...]}

A missing file is a cold start.  A file with the wrong header, or any
malformed record, is ignored with a warning and rebuilt from scratch on the
next save.  Saves write a temporary file in the same directory and rename it
over the target, so readers never see a half-written cache.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

from .perms import Permutation
from .schubert import Polynomial, SchubertStore

log = logging.getLogger(__name__)

CACHE_FORMAT = "bruhat-taquin-schubert"
CACHE_VERSION = 1
ENV_VAR = "BRUHAT_TAQUIN_CACHE"

__all__ = ["CACHE_FORMAT", "CACHE_VERSION", "ENV_VAR", "default_cache_path",
           "load_cache", "save_cache"]


def default_cache_path() -> Optional[Path]:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def load_cache(path: Path, store: SchubertStore) -> int:
    """Populate ``store`` from ``path``; returns the number of entries read."""
    path = Path(path)
    if not path.exists():
        return 0
    try:
        with path.open("r", encoding="utf-8") as fh:
            header = json.loads(fh.readline())
            if header.get("format") != CACHE_FORMAT or header.get("version") != CACHE_VERSION:
                log.warning("ignoring cache %s: header %r does not match version %d",
                            path, header, CACHE_VERSION)
                return 0
            entries = []
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                perm = Permutation.parse(rec["perm"]).trimmed()
                poly = Polynomial.from_json(rec["poly"], int(rec["nvars"]))
                entries.append((perm.word, poly))
    except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
        log.warning("ignoring unreadable cache %s (%s); it will be rebuilt", path, exc)
        return 0
    store.load(entries)
    return len(entries)


def save_cache(path: Path, store: SchubertStore) -> bool:
    """Write every entry of ``store`` atomically; False (with a warning) on failure."""
    path = Path(path)
    tmp_name = None
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=path.name + ".", suffix=".tmp", dir=path.parent)
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"format": CACHE_FORMAT, "version": CACHE_VERSION}) + "\n")
            for word, poly in sorted(store.items()):
                rec = {"perm": str(Permutation(word)), "nvars": poly.nvars, "poly": poly.to_json()}
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        os.replace(tmp_name, path)
        tmp_name = None
        return True
    except OSError as exc:
        log.warning("could not write cache %s (%s); continuing in memory", path, exc)
        return False
    finally:
        if tmp_name is not None:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
