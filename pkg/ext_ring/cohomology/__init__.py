# -*- coding: UTF-8 -*-
"""
Cohomology
==========
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The Ext groups of a resolved module, their classes, and the products: the
composition and Yoneda products by lifting cocycles, and the cup products of group
and Hochschild cochains.
"""

from pkgutil import extend_path

# Import sub-modules.
from . import context
from . import products
from . import checks

from .context import (
    CohomologyContext,
    CohomologyClass,
    classes_equal,
    group_context,
    hochschild_context,
    ext_context,
    ext_dims,
)
from .products import (
    composition_product,
    yoneda_product,
    cup_group,
    cup_hochschild,
    cup_product,
    product,
    product_table,
)
from .checks import (
    check_unit,
    check_graded_commutativity,
    check_cup_yoneda,
    check_associativity,
    check_well_defined,
    check_products,
)

__all__ = (
    "context",
    "products",
    "checks",
    "CohomologyContext",
    "CohomologyClass",
    "classes_equal",
    "group_context",
    "hochschild_context",
    "ext_context",
    "ext_dims",
    "composition_product",
    "yoneda_product",
    "cup_group",
    "cup_hochschild",
    "cup_product",
    "product",
    "product_table",
    "check_unit",
    "check_graded_commutativity",
    "check_cup_yoneda",
    "check_associativity",
    "check_well_defined",
    "check_products",
)

# Set this local module as the prefered one
__path__ = extend_path(__path__, __name__)

# Delete private sub-modules and objects
del extend_path
