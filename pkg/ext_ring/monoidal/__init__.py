# -*- coding: UTF-8 -*-
"""
Monoidal
========
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Suspended monoidal categories of complexes, the checker of their axioms, and the
graded endomorphism ring of the unit with the composition and the star products.
"""

from pkgutil import extend_path

# Import sub-modules.
from . import instance
from . import axioms
from . import ring

from .instance import (
    SuspendedMonoidal,
    ComplexInstance,
    HopfInstance,
    BimoduleTensor,
    BimoduleInstance,
    free_extension,
)
from .axioms import Sample, random_samples, check_axioms
from .ring import (
    ResolvedUnit,
    GradedEndElement,
    GradedEndRing,
    instance_for,
    graded_end_ring,
)

__all__ = (
    "instance",
    "axioms",
    "ring",
    "SuspendedMonoidal",
    "ComplexInstance",
    "HopfInstance",
    "BimoduleTensor",
    "BimoduleInstance",
    "free_extension",
    "Sample",
    "random_samples",
    "check_axioms",
    "ResolvedUnit",
    "GradedEndElement",
    "GradedEndRing",
    "instance_for",
    "graded_end_ring",
)

# Set this local module as the prefered one
__path__ = extend_path(__path__, __name__)

# Delete private sub-modules and objects
del extend_path
