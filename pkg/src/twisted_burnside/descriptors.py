"""JSON descriptors: the wire format shared by the CLI and file inputs.

Group descriptors (indices 0-based everywhere):
    {"kind": "cayley", "table": [[...]], "labels": [...]?}
    {"kind": "permutation", "degree": k, "generators": [[...], ...]}
    {"kind": "builtin", "name": "cyclic", "params": [3]}
Map descriptors:
    {"generators": [i, ...], "images": [j, ...]}   or   {"image": [...]}
Abelian:    {"rank": r, "torsion": [d1, ...], "matrix": [[...]]}
Extension:  {"k": 2, "theta": [[...]], "B": [[...]], "eps": -1}
Sequence:   {"values": [v1, ...]} with entries int, decimal string, or
            "infinite".

Big integers travel as decimal strings (JSON numbers lose precision); the
renderer emits strings for every potentially unbounded value and the string
"infinite" for Infinite.
"""

from __future__ import annotations

from typing import Any

from .abelian import AbelianEndo, FgAbelianGroup, abelian_endo
from .errors import InvalidDescriptor
from .extension import (
    ExtensionEndo,
    LatticeExtensionGroup,
    lattice_extension,
    validate_extension_endo,
)
from .groups import (
    FiniteGroup,
    GroupMap,
    builtin_group,
    endo_from_image_map,
    endo_from_images,
    group_from_cayley,
    group_from_permutations,
)
from .infinite import INFINITE, is_infinite
from .intmat import IntegerMatrix
from .mobius import ReidemeisterSequence, sequence_from_values


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidDescriptor(msg)


def _dict(obj: Any, what: str) -> dict:
    _require(isinstance(obj, dict), f"{what} must be a JSON object")
    return obj


def parse_int(value: Any, what: str = "value") -> int:
    if isinstance(value, bool):
        raise InvalidDescriptor(f"{what} must be an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise InvalidDescriptor(f"{what} is not a decimal integer: "
                                    f"{value!r}") from None
    raise InvalidDescriptor(f"{what} must be an integer or decimal string, "
                            f"got {type(value).__name__}")


def parse_matrix(obj: Any, what: str = "matrix") -> IntegerMatrix:
    _require(isinstance(obj, list) and obj, f"{what} must be a nonempty list "
                                            f"of rows")
    rows = []
    for row in obj:
        _require(isinstance(row, list), f"{what} rows must be lists")
        rows.append([parse_int(v, f"{what} entry") for v in row])
    widths = {len(r) for r in rows}
    _require(len(widths) == 1, f"{what} rows have unequal lengths")
    return IntegerMatrix.from_rows(rows)


def parse_group(obj: Any) -> FiniteGroup:
    obj = _dict(obj, "group descriptor")
    kind = obj.get("kind")
    if kind == "cayley":
        _require("table" in obj, "cayley descriptor requires 'table'")
        return group_from_cayley(obj["table"], labels=obj.get("labels"))
    if kind == "permutation":
        _require("degree" in obj and "generators" in obj,
                 "permutation descriptor requires 'degree' and 'generators'")
        return group_from_permutations(parse_int(obj["degree"], "degree"),
                                       obj["generators"])
    if kind == "builtin":
        _require("name" in obj, "builtin descriptor requires 'name'")
        return builtin_group(obj["name"], obj.get("params", ()))
    raise InvalidDescriptor(
        f"group 'kind' must be cayley, permutation, or builtin, got {kind!r}")


def parse_map(G: FiniteGroup, obj: Any) -> GroupMap:
    obj = _dict(obj, "map descriptor")
    if "image" in obj:
        image = obj["image"]
        _require(isinstance(image, list), "'image' must be a list")
        return endo_from_image_map(G, [parse_int(v, "image entry")
                                       for v in image])
    if "generators" in obj and "images" in obj:
        gens = [parse_int(v, "generator") for v in obj["generators"]]
        imgs = [parse_int(v, "generator image") for v in obj["images"]]
        return endo_from_images(G, gens, imgs)
    raise InvalidDescriptor("map descriptor needs either 'image' or "
                            "'generators' + 'images'")


def parse_abelian(obj: Any) -> tuple[FgAbelianGroup, AbelianEndo]:
    obj = _dict(obj, "abelian descriptor")
    _require("matrix" in obj, "abelian descriptor requires 'matrix'")
    rank = parse_int(obj.get("rank", 0), "rank")
    torsion = obj.get("torsion", [])
    _require(isinstance(torsion, list), "'torsion' must be a list")
    try:
        group = FgAbelianGroup(rank=rank,
                               torsion=tuple(parse_int(d, "torsion invariant")
                                             for d in torsion))
    except ValueError as exc:
        raise InvalidDescriptor(str(exc)) from None
    matrix = parse_matrix(obj["matrix"])
    return group, abelian_endo(group, matrix)


def parse_extension(obj: Any) -> tuple[LatticeExtensionGroup, ExtensionEndo]:
    obj = _dict(obj, "extension descriptor")
    for key in ("theta", "B", "eps"):
        _require(key in obj, f"extension descriptor requires {key!r}")
    theta = parse_matrix(obj["theta"], "theta")
    if "k" in obj:
        _require(parse_int(obj["k"], "k") == theta.rows,
                 "'k' does not match the shape of theta")
    try:
        group = lattice_extension(theta)
    except ValueError as exc:
        raise InvalidDescriptor(str(exc)) from None
    endo = validate_extension_endo(group, parse_matrix(obj["B"], "B"),
                                   parse_int(obj["eps"], "eps"))
    return group, endo


def parse_sequence(obj: Any) -> ReidemeisterSequence:
    obj = _dict(obj, "sequence descriptor")
    _require("values" in obj and isinstance(obj["values"], list)
             and obj["values"], "sequence descriptor requires a nonempty "
                                "'values' list")
    vals = []
    for v in obj["values"]:
        if isinstance(v, str) and v.lower() == "infinite":
            vals.append(INFINITE)
        else:
            vals.append(parse_int(v, "sequence value"))
    try:
        return sequence_from_values(vals, source="input sequence")
    except ValueError as exc:
        raise InvalidDescriptor(str(exc)) from None


def render_value(v) -> str:
    """Decimal string, or "infinite"; used for all unbounded integers."""
    return "infinite" if is_infinite(v) else str(int(v))
