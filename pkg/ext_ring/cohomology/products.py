# -*- coding: UTF-8 -*-
"""
Products
========
@ Ext Ring: cohomology

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The products of the cohomology classes.

The composition product of `f` (degree `p`) and `g` (degree `q`) is the cocycle of
`f o G_{p+q}`, where `G : F -> T^q F` lifts `g`. It is the product `T^q f o g` of
the graded endomorphism ring. The Yoneda product differs from it by the sign
`(-1)^{pq}`. The cup products are computed by the cochain formula

    (f u g)(a_1, ..., a_{p+q}) = f(a_1, ..., a_p) g(a_{p+1}, ..., a_{p+q}),

on the bar cochains of a group, or on the normalized Hochschild cochains. They
agree with the Yoneda product on classes.
"""

from typing import Optional

try:
    from typing import Callable
    from typing import Dict, List
except ImportError:
    from collections.abc import Callable
    from builtins import dict as Dict, list as List

import numpy as np

from ..errors import ContextMismatchError, DegreeOverflowError
from ..utilities import sign, get_logger
from ..typehints import ProductMethod, ProductEntry
from .context import CohomologyContext, CohomologyClass


__all__ = (
    "ProductFunction",
    "composition_product",
    "yoneda_product",
    "cup_group",
    "cup_hochschild",
    "cup_product",
    "product",
    "product_table",
    "PRODUCTS",
)

ProductFunction = Callable[[CohomologyClass, CohomologyClass], CohomologyClass]

logger = get_logger("cohomology")


def _check_pair(first: CohomologyClass, second: CohomologyClass) -> CohomologyContext:
    """Check that a product of two classes can be formed, and return the context."""
    context = first.context
    context.check_same(second.context)
    total = first.degree + second.degree
    if total > context.max_degree:
        raise DegreeOverflowError(
            "cohomology: The product lands in degree {0} above N = {1}, increase "
            "N.".format(total, context.max_degree)
        )
    return context


def composition_product(
    first: CohomologyClass, second: CohomologyClass
) -> CohomologyClass:
    """The class of `f o G_{p+q}` where `G` lifts the cocycle of `second`."""
    context = _check_pair(first, second)
    res = context.resolution
    deg_p, deg_q = first.degree, second.degree
    total = deg_p + deg_q
    lift = context.lift(second)
    full = res.full_cochain(deg_p, first.cocycle) @ lift.component(total)
    vec = res.cochain_vector(res.generator_values(total, full))
    return CohomologyClass(context, total, vec, check=False)


def yoneda_product(first: CohomologyClass, second: CohomologyClass) -> CohomologyClass:
    """The Yoneda product, `(-1)^{pq}` times the composition product.

    The representative is `(-1)^{pq} f o lift(g)`. The unsigned composite
    `f o lift(g)` is `composition_product()`, which is also the composition `f . g`
    of the graded endomorphism ring. With this sign the Yoneda product equals the
    cup products of `cup_group()` and `cup_hochschild()`, and the star product
    `f * g = (-1)^{pq} f . g`.
    """
    res = composition_product(first, second)
    if sign(first.degree * second.degree) < 0:
        return -res
    return res


def cup_group(first: CohomologyClass, second: CohomologyClass) -> CohomologyClass:
    """The cup product on the bar cochains of a group.

    With the trivial coefficients, a cochain of degree `n` is a function of the
    words of length `n`, and the words are numbered lexicographically, so the cup
    product is the Kronecker product of the two vectors.
    """
    context = _check_pair(first, second)
    if context.kind != "group":
        raise ContextMismatchError(
            "cohomology: The group cup product needs a group context, get {0}.".format(
                context.kind
            )
        )
    field = context.field
    vec = field.reduce(np.kron(first.cocycle, second.cocycle))
    return CohomologyClass(context, first.degree + second.degree, vec, check=False)


def cup_hochschild(first: CohomologyClass, second: CohomologyClass) -> CohomologyClass:
    """The cup product on the normalized Hochschild cochains.

    The value on the word `(s, t)` is the product `f(s) g(t)` in the algebra.
    """
    context = _check_pair(first, second)
    algebra = context.base
    if context.kind != "hochschild" or algebra is None:
        raise ContextMismatchError(
            "cohomology: The Hochschild cup product needs a Hochschild context, get "
            "{0}.".format(context.kind)
        )
    res = context.resolution
    field = context.field
    deg_p, deg_q = first.degree, second.degree
    total = deg_p + deg_q
    fmat = res.cochain_matrix(deg_p, first.cocycle).data
    gmat = res.cochain_matrix(deg_q, second.cocycle).data
    dim = algebra.dim
    if fmat.shape[1] * gmat.shape[1] == 0:
        return context.zero(total)
    # (s, v, k) then (s, k, t)
    tmp = np.tensordot(fmat, algebra.constants, axes=([0], [0]))
    tmp = np.tensordot(tmp, gmat, axes=([1], [0]))
    hmat = tmp.transpose(1, 0, 2).reshape(dim, fmat.shape[1] * gmat.shape[1])
    vec = field.reduce(hmat.T.reshape(-1))
    return CohomologyClass(context, total, vec, check=False)


def cup_product(first: CohomologyClass, second: CohomologyClass) -> CohomologyClass:
    """The cup product of the kind of the context."""
    if first.context.kind == "hochschild":
        return cup_hochschild(first, second)
    return cup_group(first, second)


PRODUCTS: Dict[str, ProductFunction] = {
    "yoneda": yoneda_product,
    "cup": cup_product,
    "composition": composition_product,
}
"""The cochain-level products by name."""


def product(
    first: CohomologyClass, second: CohomologyClass, method: ProductMethod = "yoneda"
) -> CohomologyClass:
    """Multiply two classes by the named product."""
    func = PRODUCTS.get(method)
    if func is None:
        raise ValueError(
            "cohomology: Unknown product {0}, use one of {1}.".format(
                method, ", ".join(PRODUCTS)
            )
        )
    return func(first, second)


def product_table(
    context: CohomologyContext,
    method: ProductMethod = "yoneda",
    func: Optional[ProductFunction] = None,
) -> List[ProductEntry]:
    """The multiplication table of the canonical basis.

    Arguments
    ---------
    context: `CohomologyContext`
        The context.

    method: `str`
        The product, `"yoneda"`, `"cup"` or `"composition"`.

    func: `(CohomologyClass, CohomologyClass) -> CohomologyClass | None`
        The product function. If given, it is used instead of the named product,
        and `method` only labels the entries.

    Returns
    -------
    #1: `[ProductEntry]`
        One entry per pair of basis classes with `p + q <= N`, ordered by
        `(p, q, i, j)`.
    """
    field = context.field
    table: List[ProductEntry] = list()
    top = context.max_degree
    for deg_p in range(top + 1):
        for deg_q in range(top - deg_p + 1):
            for idx_i, left in enumerate(context.basis_classes(deg_p)):
                for idx_j, right in enumerate(context.basis_classes(deg_q)):
                    res = (
                        product(left, right, method)
                        if func is None
                        else func(left, right)
                    )
                    table.append(
                        ProductEntry(
                            method=method,
                            p=deg_p,
                            i=idx_i,
                            q=deg_q,
                            j=idx_j,
                            coefficients=[
                                field.format(val) for val in res.coordinates
                            ],
                        )
                    )
    logger.info(
        "The %s table of %s has %d entries.", method, context.name, len(table)
    )
    return table
