"""JSON formats: cert.v1, starter.v1, rsm.v1, blocks.v1 and outcome.v1.

Every document carries a ``format`` tag first; all other fields follow in a
fixed order and hold integers only, so emitting a loaded document reproduces
the original text byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import StarterGraph
from .construct.blowup import BlockCert
from .construct.rowsum import RowSumMatrix
from .groups import FiniteAbelianGroup
from .model import (
    BlownCycle,
    Circulant,
    CompleteMinusI,
    CompleteOdd,
    CompletePlusJ,
    CycleType,
    Equipartite,
    FactorizationCert,
    GraphSpec,
    LambdaComplete,
    TwoFactor,
)
from .search.budget import SearchOutcome


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------- pieces


def host_to_json(h: GraphSpec) -> dict:
    if isinstance(h, CompleteOdd):
        return {"kind": "CompleteOdd", "v": h.v}
    if isinstance(h, (CompleteMinusI, CompletePlusJ)):
        d: dict[str, Any] = {"kind": type(h).__name__, "v": h.v}
        if h.one_factor is not None:
            d["one_factor"] = [list(e) for e in h.one_factor]
        return d
    if isinstance(h, LambdaComplete):
        return {"kind": "LambdaComplete", "lambda": h.lam, "v": h.v}
    if isinstance(h, Equipartite):
        return {"kind": "Equipartite", "m": h.m, "n": h.n}
    if isinstance(h, BlownCycle):
        return {"kind": "BlownCycle", "g": h.g, "group": list(h.group.invariants), "S": list(h.S)}
    if isinstance(h, Circulant):
        return {"kind": "Circulant", "n": h.n, "S": list(h.S)}
    raise FormatError(f"unknown host {h!r}")


def host_from_json(d: dict) -> GraphSpec:
    kind = d.get("kind")
    try:
        if kind == "CompleteOdd":
            return CompleteOdd(d["v"])
        if kind == "CompleteMinusI":
            return CompleteMinusI(d["v"], _pairs(d.get("one_factor")))
        if kind == "CompletePlusJ":
            return CompletePlusJ(d["v"], _pairs(d.get("one_factor")))
        if kind == "LambdaComplete":
            return LambdaComplete(d["lambda"], d["v"])
        if kind == "Equipartite":
            return Equipartite(d["m"], d["n"])
        if kind == "BlownCycle":
            return BlownCycle(d["g"], FiniteAbelianGroup(tuple(d["group"])), tuple(d["S"]))
        if kind == "Circulant":
            return Circulant(d["n"], tuple(d["S"]))
    except KeyError as e:
        raise FormatError(f"host {kind} is missing field {e}") from None
    raise FormatError(f"unknown host kind {kind!r}")


def _pairs(x):
    return None if x is None else tuple(tuple(e) for e in x)


def type_to_json(t: CycleType) -> list[list[int]]:
    return [[l, a] for l, a in t.parts]


def type_from_json(x) -> CycleType:
    return CycleType(tuple((int(l), int(a)) for l, a in x))


def _ints(x, depth: int):
    if depth == 0:
        if isinstance(x, bool) or not isinstance(x, int):
            raise FormatError(f"expected an integer, got {x!r}")
        return x
    if not isinstance(x, list):
        raise FormatError(f"expected a list, got {x!r}")
    return tuple(_ints(y, depth - 1) for y in x)


# ---------------------------------------------------------------- documents


def cert_to_json(c: FactorizationCert) -> dict:
    return {
        "format": "cert.v1",
        "host": host_to_json(c.host),
        "factors": [[list(cyc) for cyc in f.cycles] for f in c.factors],
        "claimed_types": [type_to_json(t) for t in c.claimed_types],
    }


def cert_from_json(d: dict) -> FactorizationCert:
    factors = tuple(TwoFactor(f) for f in _ints(d["factors"], 3))
    types = tuple(type_from_json(t) for t in d.get("claimed_types", ()))
    return FactorizationCert(host_from_json(d["host"]), factors, types)


def starter_to_json(f: StarterGraph) -> dict:
    return {"format": "starter.v1", "group": list(f.group.invariants), "cycles": [list(c) for c in f.cycles]}


def starter_from_json(d: dict) -> StarterGraph:
    return StarterGraph(FiniteAbelianGroup(_ints(d["group"], 1)), _ints(d["cycles"], 2))


def rsm_to_json(m: RowSumMatrix) -> dict:
    return {
        "format": "rsm.v1",
        "group": list(m.group.invariants),
        "S": list(m.S),
        "g": m.g,
        "entries": [list(r) for r in m.entries],
    }


def rsm_from_json(d: dict) -> RowSumMatrix:
    return RowSumMatrix(FiniteAbelianGroup(_ints(d["group"], 1)), _ints(d["S"], 1), _ints(d["g"], 0),
                        _ints(d["entries"], 2))


def blocks_to_json(b: BlockCert) -> dict:
    return {
        "format": "blocks.v1",
        "host": host_to_json(b.host),
        "g": b.g,
        "n": b.n,
        "factors": [[[list(col) for col in blk] for blk in f] for f in b.factors],
    }


def blocks_from_json(d: dict) -> BlockCert:
    host = host_from_json(d["host"])
    if not isinstance(host, Equipartite):
        raise FormatError("blocks.v1 needs an equipartite host")
    return BlockCert(host, _ints(d["g"], 0), _ints(d["n"], 0), _ints(d["factors"], 4))


def value_to_json(x) -> Any:
    if x is None:
        return None
    for cls, enc in _ENCODERS:
        if isinstance(x, cls):
            return enc(x)
    if isinstance(x, (list, tuple)):
        return [value_to_json(y) for y in x]
    if isinstance(x, int):
        return x
    raise FormatError(f"cannot serialise {type(x).__name__}")


def outcome_to_json(o: SearchOutcome) -> dict:
    return {
        "format": "outcome.v1",
        "status": o.status,
        "nodes": o.nodes,
        "elapsed": o.elapsed,
        "reason": o.reason,
        "value": value_to_json(o.value),
    }


_ENCODERS = (
    (FactorizationCert, cert_to_json),
    (StarterGraph, starter_to_json),
    (RowSumMatrix, rsm_to_json),
    (BlockCert, blocks_to_json),
    (SearchOutcome, outcome_to_json),
)

_DECODERS = {
    "cert.v1": cert_from_json,
    "starter.v1": starter_from_json,
    "rsm.v1": rsm_from_json,
    "blocks.v1": blocks_from_json,
}


def to_json(x) -> dict:
    for cls, enc in _ENCODERS:
        if isinstance(x, cls):
            return enc(x)
    raise FormatError(f"no JSON format for {type(x).__name__}")


def from_json(d: dict):
    if not isinstance(d, dict):
        raise FormatError("document must be a JSON object")
    fmt = d.get("format")
    if fmt not in _DECODERS:
        raise FormatError(f"unknown format {fmt!r}")
    try:
        return _DECODERS[fmt](d)
    except KeyError as e:
        raise FormatError(f"{fmt} document is missing field {e}") from None
    except (TypeError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(f"bad {fmt} document: {e}") from None


def dumps(x, indent: int | None = None) -> str:
    return json.dumps(to_json(x), indent=indent, ensure_ascii=False)


def loads(text: str):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    return from_json(d)


def load_path(path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
