# -*- coding: UTF-8 -*-
"""
Utilities
=========
@ Ext Ring - Tests

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Extra functionalities used for the tests: the `hypothesis` strategies of fields,
matrices and complexes, and the paths of the test documents.
"""

import os
import json

from typing import Any, Optional

import numpy as np

import hypothesis.strategies as strat

from ext_ring.linalg import Field, PrimeField, RationalField, Matrix
from ext_ring.complexes import Complex, random_complex


__all__ = (
    "FIELDS",
    "get_file_from_test_folder",
    "write_document",
    "fields",
    "rngs",
    "matrices",
    "complexes",
)

FIELDS = (PrimeField(2), PrimeField(3), PrimeField(5), RationalField())
"""The fields of the property tests."""


def get_file_from_test_folder(file_name: str) -> str:
    """Return the path of the file in this test folder."""
    return os.path.join(os.path.dirname(__file__), file_name)


def write_document(folder: Any, name: str, doc: Any) -> str:
    """Write a JSON input document into a temporary folder and return its path."""
    path = os.path.join(str(folder), name)
    with open(path, "w", encoding="utf-8") as fobj:
        json.dump(doc, fobj)
    return path


def fields() -> strat.SearchStrategy[Field]:
    """The fields of the property tests."""
    return strat.sampled_from(FIELDS)


def rngs() -> strat.SearchStrategy[np.random.Generator]:
    """Seeded random generators."""
    return strat.integers(0, 2**32 - 1).map(np.random.default_rng)


@strat.composite
def matrices(
    draw: Any,
    field: Field,
    rows: Optional[int] = None,
    cols: Optional[int] = None,
    max_cols: int = 5,
) -> Matrix:
    """Random matrices with at most 5 rows."""
    n_rows = draw(strat.integers(0, 5)) if rows is None else rows
    n_cols = draw(strat.integers(0, max_cols)) if cols is None else cols
    rng = draw(rngs())
    return Matrix(field, field.random(rng, (n_rows, n_cols)))


@strat.composite
def complexes(draw: Any, field: Field, max_dim: int = 3, window: int = 3) -> Complex:
    """Random bounded complexes with cohomology in a small window."""
    rng = draw(rngs())
    return random_complex(field, rng, max_dim=max_dim, window=window)
