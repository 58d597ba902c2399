"""On-disk cache of chromatic quasisymmetric functions, keyed by the h-string."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .csf import csf, csf_m_basis
from .symfun import SymFunc

CACHE_ENV = "HESSENCOMB_CACHE"
DEFAULT_CACHE_DIR = ".hessencomb-cache"
CACHE_FORMAT = 1


def cache_dir():
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE_DIR))


def _path(h, root=None):
    return Path(root or cache_dir()) / f"csf-{h}.json"


def load_csf_m(h, root=None):
    """Cached m-expansion, or None on a miss or a stale format."""
    path = _path(h, root)
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("format") != CACHE_FORMAT or data.get("h") != str(h):
        return None
    return SymFunc.from_json(data)


def store_csf_m(h, m_coeffs, root=None):
    path = _path(h, root)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = dict(m_coeffs.to_json(), format=CACHE_FORMAT, h=str(h))
    tmp = path.with_suffix(f".{os.getpid()}.tmp")
    tmp.write_text(json.dumps(data, sort_keys=True))
    os.replace(tmp, path)  # concurrent writers produce identical content


def cached_csf(h, use_cache=True, root=None):
    if not use_cache:
        return csf(h)
    m = load_csf_m(h, root)
    if m is None:
        m = csf_m_basis(h)
        store_csf_m(h, m, root)
    return csf(h, m)
