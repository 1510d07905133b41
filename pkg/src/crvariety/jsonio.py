"""JSON encoding and decoding for the command-line interface.

Wire conventions:

* complex numbers are two-element arrays [re, im];
* a boundary point is {"z": [re, im], "t": num} or the string "inf";
* a quadruple is an array of four boundary points;
* a variety point is {"zeta": [[re, im], [re, im], [re, im]]};
* an isometry is a row-major 3x3 array of [re, im] pairs.

``dumps_canonical`` renders floats with 17 significant digits and sorted
keys, so reports are byte-identical across runs for fixed inputs.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from .errors import SchemaError
from .heisenberg import INFINITY, BoundaryPoint
from .variety import VarietyPoint


def complex_to_json(c: complex) -> list[float]:
    return [float(c.real), float(c.imag)]


def json_to_complex(obj) -> complex:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj)
    ):
        raise SchemaError(f"expected a [re, im] pair, got {obj!r}")
    return complex(float(obj[0]), float(obj[1]))


def point_to_json(p: BoundaryPoint):
    if p.infinite:
        return "inf"
    return {"z": complex_to_json(p.z), "t": float(p.t)}


def json_to_point(obj) -> BoundaryPoint:
    if obj == "inf":
        return INFINITY
    if not isinstance(obj, dict):
        raise SchemaError(f"expected a point object or 'inf', got {obj!r}")
    if "z" not in obj or "t" not in obj:
        raise SchemaError(f"point object must carry 'z' and 't': {obj!r}")
    t = obj["t"]
    if not isinstance(t, (int, float)) or isinstance(t, bool):
        raise SchemaError(f"'t' must be a number, got {t!r}")
    return BoundaryPoint(json_to_complex(obj["z"]), float(t))


def quadruple_to_json(q) -> list:
    return [point_to_json(p) for p in q]


def json_to_quadruple(obj):
    if not isinstance(obj, list) or len(obj) != 4:
        raise SchemaError("expected an array of four boundary points")
    return tuple(json_to_point(p) for p in obj)


def variety_point_to_json(v: VarietyPoint) -> dict:
    return {"zeta": [complex_to_json(c) for c in v.as_tuple()]}


def json_to_variety_point(obj) -> VarietyPoint:
    if not isinstance(obj, dict) or "zeta" not in obj:
        raise SchemaError("expected an object with a 'zeta' array")
    zeta = obj["zeta"]
    if not isinstance(zeta, list) or len(zeta) != 3:
        raise SchemaError("'zeta' must hold three [re, im] pairs")
    return VarietyPoint(*(json_to_complex(c) for c in zeta))


def isometry_to_json(g) -> list:
    m = np.asarray(g.m, dtype=complex)
    return [[complex_to_json(m[i, j]) for j in range(3)] for i in range(3)]


def _format_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(float(x), ".17g")


def dumps_canonical(obj: Any) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{out}"'
    if isinstance(obj, complex):
        return dumps_canonical(complex_to_json(obj))
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps_canonical(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: str(kv[0]))
        parts = (f"{dumps_canonical(str(k))}:{dumps_canonical(v)}" for k, v in items)
        return "{" + ",".join(parts) + "}"
    if isinstance(obj, (np.integer,)):
        return str(int(obj))
    if isinstance(obj, (np.floating,)):
        return _format_float(float(obj))
    raise TypeError(f"cannot serialize {type(obj)!r}")
