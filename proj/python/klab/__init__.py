"""Exact Kirchhoff-index and spectral tools for S_n x K_2 and its edge-deleted variants."""

import json as _json
from fractions import Fraction as _Fraction

from ._klab import *  # noqa: F401,F403
from ._klab import report_json as _report_json, spectrum_json as _spectrum_json

__all__ = [name for name in dir() if not name.startswith("_")] + ["report", "spectrum"]


def _decode(value):
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        return _Fraction(int(value["num"]), int(value["den"]))
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


def report(n, deleted=(), variant="proof", exact=True):
    """Invariant report for a family member; rationals come back as Fractions."""
    return _decode(_json.loads(_report_json(n, set(deleted), variant, exact)))


def spectrum(n, deleted=()):
    """Analytic Laplacian spectrum as {"exact": [...], "cubic": ..., "floating": ...}."""
    return _json.loads(_spectrum_json(n, set(deleted)))
