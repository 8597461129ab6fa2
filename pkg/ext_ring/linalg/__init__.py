# -*- coding: UTF-8 -*-
"""
Linear algebra
==============
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Exact dense linear algebra over prime fields and the rationals. All kernels, images
and solutions of the other modules reduce to the routines here.
"""

from pkgutil import extend_path

# Import sub-modules.
from . import fields
from . import matrix

from .fields import Field, PrimeField, RationalField, Scalar, parse_field
from .matrix import (
    Matrix,
    Solver,
    rref,
    rank,
    kernel_basis,
    kernel_matrix,
    solve,
    subquotient_representatives,
    quotient_maps,
    coordinates_in,
    inverse,
)

__all__ = (
    "fields",
    "matrix",
    "Field",
    "PrimeField",
    "RationalField",
    "Scalar",
    "parse_field",
    "Matrix",
    "Solver",
    "rref",
    "rank",
    "kernel_basis",
    "kernel_matrix",
    "solve",
    "subquotient_representatives",
    "quotient_maps",
    "coordinates_in",
    "inverse",
)

# Set this local module as the prefered one
__path__ = extend_path(__path__, __name__)

# Delete private sub-modules and objects
del extend_path
