# -*- coding: UTF-8 -*-
"""
Periodic resolutions
====================
@ Ext Ring: resolutions

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The 2-periodic resolution of the trivial module over the group algebra of a cyclic
group,

    ... -> kG --Norm--> kG --(g - 1)--> kG --Norm--> kG --(g - 1)--> kG -> k,

with `Norm = 1 + g + ... + g^{n-1}`. It is built independently of the bar
resolutions and serves as the oracle for their cohomology.
"""

from typing import Optional

try:
    from typing import Dict
except ImportError:
    from builtins import dict as Dict

import numpy as np

from ..errors import ComplexError
from ..linalg import Field
from .groups import cyclic_group
from .algebras import AlgebraPresentation, group_algebra, trivial_module
from .free import FreeResolution


__all__ = ("periodic_resolution_cyclic",)


def periodic_resolution_cyclic(
    order: int,
    field: Field,
    length: int,
    algebra: Optional[AlgebraPresentation] = None,
    verify: bool = True,
) -> FreeResolution:
    """The 2-periodic resolution of `k` over `k Z/n`.

    Arguments
    ---------
    order: `int`
        The group order `n`, needs to be >=2.

    field: `Field`
        The base field.

    length: `int`
        The highest degree `L` of the resolution.

    algebra: `AlgebraPresentation | None`
        The group algebra of `cyclic_group(order)` over `field`. It is built if not
        given. Pass it to share one algebra with another resolution.

    verify: `bool`
        If set, check the exactness by counting ranks.

    Returns
    -------
    #1: `FreeResolution`
        The rank-1 resolution. The odd differentials are `g - 1`, the even ones are
        `Norm`.
    """
    order, length = int(order), int(length)
    if order < 2:
        raise ValueError(
            'resolutions: The argument "order" needs to be >=2, get {0}.'.format(order)
        )
    if length < 0:
        raise ValueError(
            'resolutions: The argument "length" needs to be >=0, get {0}.'.format(
                length
            )
        )
    if algebra is None:
        algebra = group_algebra(cyclic_group(order), field)
    elif algebra.dim != order:
        raise ValueError(
            "resolutions: The algebra needs the dimension {0}, get {1}.".format(
                order, algebra.dim
            )
        )
    # Elements of Z/n are the powers g^k, so g is the index 1.
    step = field.zeros((order, 1))
    step[1, 0] = 1
    step[0, 0] = field.convert(-1)
    norm = field.array(np.ones((order, 1), dtype=np.int64))
    images: Dict[int, np.ndarray] = {
        deg: (step if deg % 2 else norm) for deg in range(1, length + 1)
    }
    res = FreeResolution(
        algebra,
        trivial_module(algebra),
        [1] * (length + 1),
        images,
        field.array([[1]]),
        kind="periodic",
    )
    if verify and not res.is_exact():
        raise ComplexError(
            "resolutions: The periodic resolution of Z/{0} is not exact.".format(order)
        )
    return res
