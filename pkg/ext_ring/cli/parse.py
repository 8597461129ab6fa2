# -*- coding: UTF-8 -*-
"""
Parse
=====
@ Ext Ring: cli

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The reader of the JSON input documents

    {"field": {"p": 2} | "Q", "kind": "group-table" | "group-named" | "algebra",
     "data": ...}

The structure constants of an algebra are triples `[i, j, k, value]` meaning that
`b_i b_j` has the coefficient `value` on `b_k`. Over the rationals the values may be
strings like `"1/2"`. All the structure checks run while parsing.
"""

import json

from typing import Any, Optional, Union

try:
    from typing import Sequence
    from typing import Tuple
except ImportError:
    from collections.abc import Sequence
    from builtins import tuple as Tuple

import numpy as np

from ..errors import InputError, StructureError
from ..linalg import Field, parse_field
from ..resolutions import (
    GroupTable,
    AlgebraPresentation,
    named_group,
)


__all__ = (
    "INPUT_KINDS",
    "ParsedInput",
    "read_field",
    "parse_input",
    "document_field",
    "load_input",
)

INPUT_KINDS = ("group-table", "group-named", "algebra")
"""The accepted values of `kind`."""

ParsedInput = Union[GroupTable, AlgebraPresentation]


def read_field(spec: Any) -> Field:
    """Parse a field specification, raising `InputError` when it is invalid."""
    try:
        return parse_field(spec)
    except ValueError as err:
        raise InputError("cli: Invalid field {0}: {1}".format(spec, err)) from err


def _constants(field: Field, dim: int, triples: Any, name: str) -> np.ndarray:
    """Scatter `[i, j, k, value]` triples into a `(d, d, d)` array."""
    if not isinstance(triples, Sequence) or isinstance(triples, str):
        raise InputError("cli: The {0} need to be a list of triples.".format(name))
    arr = field.zeros((dim, dim, dim))
    for item in triples:
        if not isinstance(item, Sequence) or len(item) != 4:
            raise InputError(
                "cli: Each entry of the {0} needs the form [i, j, k, value], get "
                "{1}.".format(name, item)
            )
        idx_i, idx_j, idx_k, value = item
        try:
            pos = tuple(int(val) for val in (idx_i, idx_j, idx_k))
        except (TypeError, ValueError) as err:
            raise InputError(
                "cli: Invalid index in the {0} entry {1}.".format(name, item)
            ) from err
        if any(val < 0 or val >= dim for val in pos):
            raise InputError(
                "cli: The {0} entry {1} is out of the dimension {2}.".format(
                    name, item, dim
                )
            )
        try:
            arr[pos] = field.convert(arr[pos] + field.convert(value))
        except (TypeError, ValueError, ZeroDivisionError) as err:
            raise InputError(
                "cli: Invalid value in the {0} entry {1}.".format(name, item)
            ) from err
    return arr


def _vector(field: Field, values: Any, dim: int, name: str) -> np.ndarray:
    if not isinstance(values, Sequence) or len(values) != dim:
        raise InputError("cli: The {0} needs {1} coordinates.".format(name, dim))
    try:
        return field.array([field.convert(val) for val in values])
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise InputError("cli: Invalid value in the {0}.".format(name)) from err


def _parse_algebra(field: Field, data: Any) -> AlgebraPresentation:
    if not isinstance(data, dict):
        raise InputError("cli: The algebra data needs to be an object.")
    try:
        dim = int(data["dim"])
    except (KeyError, TypeError, ValueError) as err:
        raise InputError("cli: The algebra needs a positive 'dim'.") from err
    if dim <= 0:
        raise InputError("cli: The algebra needs a positive 'dim'.")
    if "constants" not in data or "unit" not in data:
        raise InputError("cli: The algebra needs 'constants' and 'unit'.")
    constants = _constants(field, dim, data["constants"], "constants")
    unit = _vector(field, data["unit"], dim, "unit")
    counit = None
    coproduct = None
    if "counit" in data or "coproduct" in data:
        if "counit" not in data or "coproduct" not in data:
            raise InputError("cli: Give the 'counit' together with the 'coproduct'.")
        counit = _vector(field, data["counit"], dim, "counit")
        coproduct = _constants(field, dim, data["coproduct"], "coproduct")
    labels = data.get("labels")
    return AlgebraPresentation(
        field,
        constants,
        unit,
        labels=labels,
        counit=counit,
        coproduct=coproduct,
        name=data.get("name"),
    )


def _parse_group_table(data: Any) -> GroupTable:
    if isinstance(data, dict):
        if "table" not in data:
            raise InputError("cli: The group data needs a 'table'.")
        table, identity, name = data["table"], data.get("identity"), data.get("name")
    else:
        table, identity, name = data, None, None
    try:
        return GroupTable(table, identity, name)
    except StructureError:
        raise
    except (TypeError, ValueError) as err:
        raise InputError("cli: Invalid group table: {0}".format(err)) from err


def parse_input(
    raw: Union[bytes, str], field: Optional[Field] = None
) -> ParsedInput:
    """Parse one input document.

    Arguments
    ---------
    raw: `bytes | str`
        The JSON document.

    field: `Field | None`
        The field given on the command line. It is used when the document has no
        `field`, and needs to agree with it otherwise.

    Returns
    -------
    #1: `GroupTable | AlgebraPresentation`
        The validated group or algebra. A group keeps no field; the caller pairs
        it with the field of `document_field()`.
    """
    doc = _load(raw)
    kind = doc.get("kind")
    if kind not in INPUT_KINDS:
        raise InputError(
            "cli: The input kind needs to be one of {0}, get {1}.".format(
                ", ".join(INPUT_KINDS), kind
            )
        )
    if "data" not in doc:
        raise InputError("cli: The input document needs 'data'.")
    data = doc["data"]
    if kind == "group-table":
        return _parse_group_table(data)
    if kind == "group-named":
        name = data.get("name") if isinstance(data, dict) else data
        if not isinstance(name, str):
            raise InputError("cli: The named group needs a name.")
        return named_group(name)
    return _parse_algebra(document_field(doc, field), data)


def _load(raw: Union[bytes, str]) -> Any:
    try:
        doc = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as err:
        raise InputError("cli: The input is not valid JSON: {0}".format(err)) from err
    if not isinstance(doc, dict):
        raise InputError("cli: The input document needs to be an object.")
    return doc


def document_field(
    doc: Any, field: Optional[Field] = None, default: Optional[Field] = None
) -> Field:
    """The field of a document, checked against the command-line field.

    A document without a field uses `field`, or `default` if `field` is not given.
    """
    if isinstance(doc, (bytes, str)):
        doc = _load(doc)
    spec = doc.get("field")
    if spec is None:
        res = field if field is not None else default
        if res is None:
            raise InputError(
                "cli: The field is given neither in the input nor as an option."
            )
        return res
    res = read_field(spec)
    if field is not None and field != res:
        raise InputError(
            "cli: The input uses the field {0}, but {1} is requested.".format(
                res.tag, field.tag
            )
        )
    return res


def load_input(
    path: str, field: Optional[Field] = None, default: Optional[Field] = None
) -> Tuple[ParsedInput, Field]:
    """Read and parse an input file, returning the object and its field."""
    try:
        with open(path, "rb") as fobj:
            raw = fobj.read()
    except OSError as err:
        raise InputError("cli: Cannot read {0}: {1}".format(path, err)) from err
    resolved = document_field(raw, field, default)
    return parse_input(raw, resolved), resolved
