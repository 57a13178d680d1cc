"""File-backed results cache for batch (atlas) runs.

Keyed by the exact labeled graph and mode, not by isomorphism class.
A hit is re-verified before reuse; entries that fail re-verification are
deleted and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from pathlib import Path
from typing import Optional

from .certificate import certificate_from_dict
from .graph import Graph

CACHE_ENV_VAR = "LATLAB_CACHE_DIR"


def cache_dir() -> Optional[Path]:
    path = os.environ.get(CACHE_ENV_VAR)
    return Path(path) if path else None


def cache_key(g: Graph, mode: str) -> str:
    canon = f"{mode}|p={g.p}|" + ";".join(f"{u},{v}" for u, v in g.edges)
    return hashlib.sha256(canon.encode()).hexdigest()


def load_entry(directory: Path, g: Graph, mode: str) -> Optional[dict]:
    path = directory / (cache_key(g, mode) + ".json")
    if not path.exists():
        return None
    try:
        entry = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        path.unlink(missing_ok=True)
        return None
    try:
        if entry.get("key_graph") != {"p": g.p, "edges": [list(e) for e in g.edges]} \
                or entry.get("mode") != mode:
            raise ValueError("key mismatch")
        if entry.get("certificate") is not None:
            cert = certificate_from_dict(entry["certificate"])
            if cert.graph != g or not cert.verify().valid:
                raise ValueError("certificate failed re-verification")
            if entry.get("status") == "exact" and cert.distinct != entry.get("value"):
                raise ValueError("certificate does not witness the stored value")
        elif entry.get("status") == "exact":
            raise ValueError("exact entry without certificate")
    except Exception:
        path.unlink(missing_ok=True)
        return None
    return entry


def store_entry(directory: Path, g: Graph, mode: str, status: str,
                value=None, lower=None, upper=None, certificate_doc=None):
    directory.mkdir(parents=True, exist_ok=True)
    entry = {
        "key_graph": {"p": g.p, "edges": [list(e) for e in g.edges]},
        "mode": mode,
        "status": status,
        "value": value,
        "lower": lower,
        "upper": upper,
        "certificate": certificate_doc,
        "timestamp": time.time(),
    }
    path = directory / (cache_key(g, mode) + ".json")
    path.write_text(json.dumps(entry, indent=2, sort_keys=True) + "\n")
    return entry
