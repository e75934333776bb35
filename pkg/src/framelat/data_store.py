"""Catalog data files: location, checksum verification, raw access.

Entries live as one JSON document per file under ``framelat/data`` (override
with FRAMELAT_DATA_DIR).  ``MANIFEST.json`` records each entry's file and
sha256, so transcription fixes are diffable and corruption is detected on
load.
"""

from __future__ import annotations

import functools
import hashlib
import json
import os
from pathlib import Path

from .errors import DataIntegrityError, UnknownName

ENV_DATA_DIR = "FRAMELAT_DATA_DIR"


def data_dir() -> Path:
    override = os.environ.get(ENV_DATA_DIR)
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


@functools.lru_cache(maxsize=None)
def _manifest_for(dirpath: str) -> dict:
    path = Path(dirpath) / "MANIFEST.json"
    if not path.exists():
        raise DataIntegrityError(f"missing manifest {path}")
    return json.loads(path.read_text())


def manifest() -> dict:
    return _manifest_for(str(data_dir()))


@functools.lru_cache(maxsize=None)
def _load_file(dirpath: str, filename: str, sha: str) -> dict:
    path = Path(dirpath) / filename
    if not path.exists():
        raise DataIntegrityError(f"missing data file {path}")
    actual = _sha256(path)
    if actual != sha:
        raise DataIntegrityError(
            f"checksum mismatch for {filename}: {actual} != {sha}"
        )
    return json.loads(path.read_text())


def entry_names() -> list:
    return sorted(manifest()["entries"])


def load_entry(name: str) -> dict:
    man = manifest()
    if name not in man["entries"]:
        raise UnknownName(f"no catalog entry named {name!r}")
    rec = man["entries"][name]
    return _load_file(str(data_dir()), rec["file"], rec["sha256"])


def load_aux(key: str) -> dict:
    man = manifest()
    if key not in man.get("aux", {}):
        raise DataIntegrityError(f"missing auxiliary table {key!r}")
    rec = man["aux"][key]
    return _load_file(str(data_dir()), rec["file"], rec["sha256"])


@functools.lru_cache(maxsize=None)
def star_table() -> dict:
    return load_aux("star_conditions")["rows"]


def clear_caches() -> None:
    """Drop memoized data (used by tests that redirect FRAMELAT_DATA_DIR)."""
    _manifest_for.cache_clear()
    _load_file.cache_clear()
    star_table.cache_clear()
