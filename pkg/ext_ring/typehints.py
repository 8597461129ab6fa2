# -*- coding: UTF-8 -*-
"""
Typehints
=========
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Extra typehints used by this project. The report documents written by the command
line are built from these dictionaries.
"""

from typing import Optional

try:
    from typing import Dict, List
except ImportError:
    from builtins import dict as Dict, list as List

from typing_extensions import Literal, NotRequired, TypedDict


__all__ = (
    "ProductMethod",
    "ContextKind",
    "OutputFormat",
    "CheckResult",
    "ProductEntry",
    "DegreeBasis",
    "Report",
)


ProductMethod = Literal["yoneda", "cup", "composition", "star"]
"""The ways to multiply two classes."""

ContextKind = Literal["group", "hochschild", "ext"]
"""The kind of a cohomology context. Only the `group` and `hochschild` contexts have
an explicit cup product."""

OutputFormat = Literal["json", "csv", "text"]
"""The formats of the report."""


class CheckResult(TypedDict):
    """The result of one identity check."""

    name: str
    """The name of the identity, e.g. `"anticommuting-square"`."""

    passed: bool
    """Whether the identity holds."""

    sample: int
    """The index of the sample, or of the basis pair, the check is run on."""

    p: Optional[int]
    """The first degree, if the identity depends on it."""

    q: Optional[int]
    """The second degree, if the identity depends on it."""

    witness: Optional[str]
    """Where the identity fails, e.g. the first degree whose components differ.
    `None` when the check passes."""


class ProductEntry(TypedDict):
    """One cell of a multiplication table."""

    method: ProductMethod
    """The product used."""

    p: int
    """The degree of the left factor."""

    i: int
    """The index of the left factor in the basis of degree `p`."""

    q: int
    """The degree of the right factor."""

    j: int
    """The index of the right factor in the basis of degree `q`."""

    coefficients: List[str]
    """The coordinates of the product in the basis of degree `p + q`."""


class DegreeBasis(TypedDict):
    """The class basis of one degree."""

    degree: int
    """The cohomological degree."""

    labels: List[str]
    """The labels of the basis classes, e.g. `"h2_0"`."""

    representatives: List[List[str]]
    """The cocycles representing the basis classes."""


class Report(TypedDict):
    """The document written by one run of the command line."""

    schema: int
    """The version of this layout, always `1`."""

    command: Literal["group", "hochschild", "axioms"]
    """The sub-command."""

    field: str
    """The field tag."""

    subject: str
    """The name of the group, algebra or instance."""

    max_degree: int
    """The highest degree `N`."""

    dims: List[int]
    """The dimensions of the degrees `0 .. N`."""

    basis: List[DegreeBasis]
    """The class bases of the degrees `0 .. N`."""

    products: List[ProductEntry]
    """The multiplication tables."""

    checks: List[CheckResult]
    """The verified identities."""

    passed: bool
    """Whether all checks pass."""

    timing: NotRequired[Dict[str, float]]
    """The seconds spent by each stage. Only written on request."""
