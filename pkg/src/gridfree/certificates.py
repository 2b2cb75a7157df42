"""Replayable JSON records for command line runs.

Every certifying run emits one certificate: the command, its full
parameter set (seed included whenever randomness was involved), the
per-property results with witnesses, and the wall time.  Reports are
plain dataclasses throughout the package, so serialization is generic.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

__all__ = ["to_jsonable", "certificate", "write_certificate"]


def to_jsonable(obj):
    """Best-effort conversion to JSON-encodable structures: dataclasses
    become dicts, Fractions strings, sets sorted lists."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(x) for x in obj), key=repr)
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def certificate(
    command: str,
    params: dict,
    results,
    seed=None,
    elapsed_ms=None,
) -> dict:
    return {
        "command": command,
        "params": to_jsonable(params),
        "seed": seed,
        "results": to_jsonable(results),
        "elapsed_ms": elapsed_ms,
    }


def write_certificate(path: str, cert: dict) -> None:
    with open(path, "w") as fh:
        json.dump(cert, fh, indent=2, sort_keys=False)
        fh.write("\n")
