"""JSON input parsing and deterministic report emission."""

from __future__ import annotations

import json

from .charsets import CohomologyData, DegreeGroup, FiniteOrder, InfiniteOrder, TorsionPrimary
from .errors import InputError
from .primes import is_prime


def dumps(obj):
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def envelope(command, inputs, result, provenance=()):
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "provenance": list(provenance),
    }


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _pairs(label, raw, errors):
    out = []
    if not isinstance(raw, list):
        errors.append(f"{label}: expected a list of [prime, exponent] pairs")
        return out
    for n, entry in enumerate(raw):
        if not (isinstance(entry, list) and len(entry) == 2 and all(_is_int(x) for x in entry)):
            errors.append(f"{label}[{n}]: expected [prime, exponent], got {entry!r}")
            continue
        p, e = entry
        if not is_prime(p):
            errors.append(f"{label}[{n}]: {p} is not prime")
        if e < 1:
            errors.append(f"{label}[{n}]: exponent {e} must be >= 1")
        out.append((p, e))
    return out


def cohomology_from_dict(d):
    """Validate a cohomology mapping, reporting every violation at once.

    Schema::

        {"r": 2, "k": 3,
         "degrees": [{"free_rank": 1, "torsion": [[p, a], ...]}, ...],   # H^r .. H^kr
         "power_order": {"kind": "infinite", "q_factors": [[q, f], ...]}
                     or {"kind": "finite", "l": 2, "l_q_factors": [[q, g], ...]}}

    ``degrees`` may be omitted, meaning free rank 1 and no torsion throughout.
    """
    errors = []
    if not isinstance(d, dict):
        raise InputError("top-level JSON value must be an object")
    unknown = set(d) - {"r", "k", "degrees", "power_order", "name"}
    if unknown:
        errors.append(f"unknown fields: {sorted(unknown)}")
    r, k = d.get("r"), d.get("k")
    if not _is_int(r) or r < 2 or r % 2:
        errors.append(f"r: must be an even integer >= 2, got {r!r}")
    if not _is_int(k) or k < 2:
        errors.append(f"k: must be an integer >= 2, got {k!r}")
        k = None
    degrees = []
    raw_deg = d.get("degrees")
    if raw_deg is None:
        degrees = [DegreeGroup(1) for _ in range(k or 0)]
    elif not isinstance(raw_deg, list):
        errors.append("degrees: expected a list")
    else:
        if k is not None and len(raw_deg) != k:
            errors.append(f"degrees: expected {k} entries (degrees r..kr), got {len(raw_deg)}")
        for i, g in enumerate(raw_deg, start=1):
            if not isinstance(g, dict):
                errors.append(f"degrees[{i - 1}]: expected an object")
                continue
            rank = g.get("free_rank", 0)
            if not _is_int(rank) or rank < 0:
                errors.append(f"degrees[{i - 1}].free_rank: must be >= 0, got {rank!r}")
                rank = 0
            tors = [TorsionPrimary(p, e) for p, e in _pairs(f"degrees[{i - 1}].torsion", g.get("torsion", []), errors)
                    if is_prime(p) and e >= 1]
            degrees.append(DegreeGroup(rank, tuple(tors)))
    po = d.get("power_order")
    power = None
    if not isinstance(po, dict):
        errors.append("power_order: expected an object with a 'kind' field")
    elif po.get("kind") == "infinite":
        power = InfiniteOrder(tuple(_pairs("power_order.q_factors", po.get("q_factors", []), errors)))
    elif po.get("kind") == "finite":
        l = po.get("l")
        if not _is_int(l):
            errors.append(f"power_order.l: expected an integer, got {l!r}")
        elif k is not None and not 2 <= l <= k - 1:
            errors.append(f"power_order.l: l must satisfy 2 <= l <= k-1, got l={l}, k={k}")
        power = FiniteOrder(l, tuple(_pairs("power_order.l_q_factors", po.get("l_q_factors", []), errors)))
    else:
        errors.append(f"power_order.kind: expected 'infinite' or 'finite', got {po.get('kind')!r}")
    if errors:
        raise InputError(errors)
    return CohomologyData(r, k, tuple(degrees), power, name=d.get("name"))


def parse_cohomology_input(data):
    """Parse UTF-8 JSON bytes (or str) into validated CohomologyData."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"input is not UTF-8: {exc}") from exc
    try:
        d = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    return cohomology_from_dict(d)


def cohomology_to_dict(data):
    po = data.power_order
    if isinstance(po, InfiniteOrder):
        power = {"kind": "infinite", "q_factors": [list(x) for x in po.q_factors]}
    else:
        power = {"kind": "finite", "l": po.l, "l_q_factors": [list(x) for x in po.l_q_factors]}
    return {
        "r": data.r,
        "k": data.k,
        "degrees": [{"free_rank": g.free_rank, "torsion": [[t.prime, t.exponent] for t in g.torsion]}
                    for g in data.degrees],
        "power_order": power,
    }
