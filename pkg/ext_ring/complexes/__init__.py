# -*- coding: UTF-8 -*-
"""
Complexes
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
Bounded chain complexes over a field, chain maps, homotopies, and the tensor
products with the Koszul sign rule. The suspension `T` is `shift()`, and the
isomorphisms `lambda_p` and `rho_p` are `lambda_iso()` and `rho_iso()`.
"""

from pkgutil import extend_path

# Import sub-modules.
from . import complex
from . import maps
from . import koszul

from .complex import (
    Complex,
    concentrated,
    unit_complex,
    shift,
    truncate,
    homology_classes,
    random_complex,
)
from .maps import (
    ChainMap,
    compose,
    identity_map,
    zero_map,
    shift_map,
    inverse_map,
    restrict_map,
    is_equivariant_pair,
    chain_homotopic,
    find_homotopy,
    HomClasses,
    hom_classes,
    random_chain_map,
)
from .koszul import (
    TensorComplex,
    tensor,
    tensor_map,
    lambda_step,
    rho_step,
    iterate_suspension,
    lambda_iso,
    rho_iso,
    unitor_left,
    unitor_right,
    associator,
)

__all__ = (
    "complex",
    "maps",
    "koszul",
    "Complex",
    "concentrated",
    "unit_complex",
    "shift",
    "truncate",
    "homology_classes",
    "random_complex",
    "ChainMap",
    "compose",
    "identity_map",
    "zero_map",
    "shift_map",
    "inverse_map",
    "restrict_map",
    "is_equivariant_pair",
    "chain_homotopic",
    "find_homotopy",
    "HomClasses",
    "hom_classes",
    "random_chain_map",
    "TensorComplex",
    "tensor",
    "tensor_map",
    "lambda_step",
    "rho_step",
    "iterate_suspension",
    "lambda_iso",
    "rho_iso",
    "unitor_left",
    "unitor_right",
    "associator",
)

# Set this local module as the prefered one
__path__ = extend_path(__path__, __name__)

# Delete private sub-modules and objects
del extend_path
