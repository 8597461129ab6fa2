# -*- coding: UTF-8 -*-
"""
Resolutions
===========
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Finite groups, finite-dimensional algebras and their modules, free resolutions
(normalized bar resolutions and the periodic resolution of cyclic groups), and the
comparison theorem lifting cocycles to chain maps.
"""

from pkgutil import extend_path

# Import sub-modules.
from . import groups
from . import algebras
from . import free
from . import bar
from . import periodic
from . import lifting

from .groups import (
    GroupTable,
    cyclic_group,
    klein_group,
    symmetric3_group,
    quaternion8_group,
    dihedral_group,
    named_group,
    GROUP_NAMES,
)
from .algebras import (
    AlgebraPresentation,
    ModuleRep,
    group_algebra,
    enveloping_algebra,
    trivial_module,
    regular_module,
    regular_bimodule,
    field_algebra,
    truncated_polynomial_algebra,
    dual_numbers,
    upper_triangular_algebra,
    restricted_algebra,
    named_algebra,
    ALGEBRA_NAMES,
)
from .free import FreeResolution, expand_generator_images
from .bar import bar_resolution, two_sided_bar_resolution
from .periodic import periodic_resolution_cyclic
from .lifting import SolverCache, extend_chain_map, lift_cocycle

__all__ = (
    "groups",
    "algebras",
    "free",
    "bar",
    "periodic",
    "lifting",
    "GroupTable",
    "cyclic_group",
    "klein_group",
    "symmetric3_group",
    "quaternion8_group",
    "dihedral_group",
    "named_group",
    "GROUP_NAMES",
    "AlgebraPresentation",
    "ModuleRep",
    "group_algebra",
    "enveloping_algebra",
    "trivial_module",
    "regular_module",
    "regular_bimodule",
    "field_algebra",
    "truncated_polynomial_algebra",
    "dual_numbers",
    "upper_triangular_algebra",
    "restricted_algebra",
    "named_algebra",
    "ALGEBRA_NAMES",
    "FreeResolution",
    "expand_generator_images",
    "bar_resolution",
    "two_sided_bar_resolution",
    "periodic_resolution_cyclic",
    "SolverCache",
    "extend_chain_map",
    "lift_cocycle",
)

# Set this local module as the prefered one
__path__ = extend_path(__path__, __name__)

# Delete private sub-modules and objects
del extend_path
