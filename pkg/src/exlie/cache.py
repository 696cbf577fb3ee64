"""Versioned JSON cache for computed operator bases.

Schema: {"version", "field": "Q(zeta12)", "basis_name", "fingerprint",
"dimension", "vectors": [[rational strings]]}.  A vector is the flattened
Q-coordinate list of one operator (4 rationals per K entry, column-major).
Cache entries are only reused when both the schema version and the
convention fingerprint match; anything unreadable is reported and recomputed.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .linalg import LinearOperator
from .scalars import Cyclo, Rat

CACHE_VERSION = 1
ENV_CACHE_DIR = "EXLIE_CACHE_DIR"


def resolve_cache_dir(explicit=None):
    """--cache-dir beats the environment variable; None disables caching."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_CACHE_DIR)
    return Path(env) if env else None


def operator_to_strings(op: LinearOperator):
    """Flatten to 4 * dim^2 rational strings, column-major."""
    out = ["0"] * (4 * op.dim * op.dim)
    for i, j, v in op.entries():
        base = 4 * (j * op.dim + i)
        a, b, c, d = v.coords()
        out[base] = str(a)
        out[base + 1] = str(b)
        out[base + 2] = str(c)
        out[base + 3] = str(d)
    return out


def operator_from_strings(vals, dim: int, basis_name: str) -> LinearOperator:
    cols = {}
    for j in range(dim):
        col = {}
        for i in range(dim):
            base = 4 * (j * dim + i)
            coords = [Rat(vals[base + t]) for t in range(4)]
            if any(coords):
                col[i] = Cyclo(*coords)
        if col:
            cols[j] = col
    return LinearOperator(dim, cols, basis_name)


def save_basis(cache_dir: Path, basis_name: str, ops, fingerprint: str) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    doc = {
        "version": CACHE_VERSION,
        "field": "Q(zeta12)",
        "basis_name": basis_name,
        "fingerprint": fingerprint,
        "dimension": len(ops),
        "vectors": [operator_to_strings(op) for op in ops],
    }
    path = cache_dir / f"{basis_name}.json"
    path.write_text(json.dumps(doc))
    return path


def load_basis(cache_dir: Path, basis_name: str, fingerprint: str, dim: int, basis_label: str):
    """Return the cached operator list, or (None, reason) when unusable."""
    path = cache_dir / f"{basis_name}.json"
    if not path.exists():
        return None, "absent"
    try:
        doc = json.loads(path.read_text())
        if doc.get("version") != CACHE_VERSION:
            return None, "version mismatch"
        if doc.get("fingerprint") != fingerprint:
            return None, "fingerprint mismatch"
        if doc.get("field") != "Q(zeta12)":
            return None, "wrong field"
        ops = [operator_from_strings(v, dim, basis_label) for v in doc["vectors"]]
        if len(ops) != doc.get("dimension"):
            return None, "dimension mismatch"
        return ops, "ok"
    except (json.JSONDecodeError, KeyError, ValueError, TypeError, IndexError) as exc:
        return None, f"corrupt ({type(exc).__name__})"
