# -*- coding: UTF-8 -*-
"""
Ext Ring
========

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Exact computations of graded endomorphism rings in suspended monoidal categories:
the Ext algebras of modules, the cohomology rings of finite groups and the
Hochschild cohomology of algebras, with the Yoneda, cup and star products and the
checks that they agree.
"""

from pkgutil import extend_path

# Import the version module.
from . import version
from .version import __version__

# Import sub-modules.
from . import errors
from . import utilities
from . import typehints
from . import caches
from . import linalg
from . import complexes
from . import resolutions
from . import cohomology
from . import monoidal
from . import cli

# Import frequently-used classes.
from .linalg import PrimeField, RationalField, parse_field, Matrix
from .complexes import Complex, ChainMap
from .resolutions import named_group, named_algebra
from .cohomology import CohomologyContext, group_context, hochschild_context
from .monoidal import ComplexInstance, check_axioms, graded_end_ring

__all__ = (
    "__version__",
    "version",
    "errors",
    "utilities",
    "typehints",
    "caches",
    "linalg",
    "complexes",
    "resolutions",
    "cohomology",
    "monoidal",
    "cli",
    "PrimeField",
    "RationalField",
    "parse_field",
    "Matrix",
    "Complex",
    "ChainMap",
    "named_group",
    "named_algebra",
    "CohomologyContext",
    "group_context",
    "hochschild_context",
    "ComplexInstance",
    "check_axioms",
    "graded_end_ring",
)

# Set this local module as the prefered one
__path__ = extend_path(__path__, __name__)

# Delete private sub-modules and objects
del extend_path
