"""Record formats for families, subspaces, and traces.

Families travel as ``{n, k, sets}`` with 1-based indices and lexicographically
sorted sets; subspaces as ``{n, k, order, basis}`` with canonical text rows.
Reading re-canonicalizes (a subspace file may hold any spanning set) and
rejects invariant violations with positioned messages.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import ParseError
from .exterior import Multivector, format_multivector, parse_multivector
from .families import SetFamily
from .limits import TraceStep
from .subspace import MonomialOrder, ORDER_KINDS, Subspace


def family_record(F: SetFamily) -> dict:
    return {"n": F.n, "k": F.k, "sets": [list(s) for s in F.sets]}


def family_from_record(obj: dict) -> SetFamily:
    for key in ("n", "k", "sets"):
        if key not in obj:
            raise ParseError(f"family record is missing {key!r}")
    sets = obj["sets"]
    if not isinstance(sets, list):
        raise ParseError("family 'sets' must be a list of index lists")
    seen = set()
    for pos, s in enumerate(sets):
        if not isinstance(s, list) or not all(isinstance(i, int) for i in s):
            raise ParseError(f"set #{pos + 1} is not a list of integers")
        key = tuple(sorted(s))
        if key in seen:
            raise ParseError(f"duplicate set at position {pos + 1}: {sorted(s)}")
        seen.add(key)
    try:
        return SetFamily(obj["n"], obj["k"], tuple(tuple(s) for s in sets))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def subspace_record(V: Subspace) -> dict:
    return {
        "n": V.n,
        "k": V.k,
        "order": V.order.kind,
        "basis": [format_multivector(r) for r in V.rows],
    }


def subspace_from_record(obj: dict) -> Subspace:
    for key in ("n", "k", "basis"):
        if key not in obj:
            raise ParseError(f"subspace record is missing {key!r}")
    kind = obj.get("order", "lex")
    if kind not in ORDER_KINDS:
        raise ParseError(f"unknown monomial order {kind!r}")
    try:
        order = MonomialOrder(kind, obj["n"], obj["k"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    rows = []
    for pos, text in enumerate(obj["basis"]):
        if not isinstance(text, str):
            raise ParseError(f"basis row #{pos + 1} is not a string")
        try:
            rows.append(parse_multivector(text, obj["n"]))
        except ParseError as exc:
            raise ParseError(f"basis row #{pos + 1}: {exc}") from exc
    try:
        return Subspace(order, rows)
    except ValueError as exc:
        raise ParseError(f"basis rows violate the subspace contract: {exc}") from exc


def trace_records(steps: list[TraceStep]) -> list[dict]:
    return [st.record() for st in steps]


def load_json(path: Union[str, Path]) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError(f"{path} must hold a JSON object")
    return obj


def save_json(path: Union[str, Path], obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=2) + "\n")


def parse_input(
    source: str, n: int | None = None
) -> Union[SetFamily, Subspace, Multivector]:
    """Decode a path or literal into a family, subspace, or multivector.

    JSON objects are recognized by their fields (``sets`` against ``basis``);
    anything else is a multivector literal, which needs the ground dimension."""
    text = source.strip()
    if not text.startswith("{") and Path(source).exists():
        obj = load_json(source)
    elif text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad inline JSON: {exc}") from exc
    else:
        if n is None:
            raise ParseError("a multivector literal needs the ground dimension")
        return parse_multivector(text, n)
    if "sets" in obj:
        return family_from_record(obj)
    if "basis" in obj:
        return subspace_from_record(obj)
    raise ParseError("JSON record is neither a family (sets) nor a subspace (basis)")
