# -*- coding: UTF-8 -*-
"""
Checks
======
@ Ext Ring: cohomology

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Identity checks of the products on the canonical basis of a context. Every check
produces one `CheckResult` per basis pair or triple, and failures are recorded
instead of raised.
"""

import itertools

from typing import Optional

try:
    from typing import List, Tuple
except ImportError:
    from builtins import list as List, tuple as Tuple

import numpy as np

from ..utilities import sign, get_logger
from ..typehints import CheckResult
from .context import CohomologyContext, CohomologyClass, classes_equal
from .products import yoneda_product, cup_product


__all__ = (
    "check_unit",
    "check_graded_commutativity",
    "check_cup_yoneda",
    "check_associativity",
    "check_well_defined",
    "check_products",
)

logger = get_logger("cohomology")

_Pair = Tuple[int, int, CohomologyClass, int, int, CohomologyClass]


def _basis_pairs(context: CohomologyContext, lowest: int = 0) -> List[_Pair]:
    """All pairs of basis classes with `p + q <= N`, both degrees >= `lowest`."""
    top = context.max_degree
    res: List[_Pair] = list()
    for deg_p in range(lowest, top + 1):
        for deg_q in range(lowest, top - deg_p + 1):
            for idx_i, left in enumerate(context.basis_classes(deg_p)):
                for idx_j, right in enumerate(context.basis_classes(deg_q)):
                    res.append((deg_p, idx_i, left, deg_q, idx_j, right))
    return res


def _result(
    name: str,
    passed: bool,
    sample: int,
    deg_p: Optional[int],
    deg_q: Optional[int],
    witness: str,
) -> CheckResult:
    if not passed:
        logger.warning("The check %s fails at %s.", name, witness)
    return CheckResult(
        name=name,
        passed=bool(passed),
        sample=sample,
        p=deg_p,
        q=deg_q,
        witness=None if passed else witness,
    )


def check_unit(context: CohomologyContext) -> List[CheckResult]:
    """`1 f = f = f 1` for every basis class `f`."""
    one = context.one()
    res: List[CheckResult] = list()
    for deg in range(context.max_degree + 1):
        for idx, elem in enumerate(context.basis_classes(deg)):
            passed = classes_equal(yoneda_product(one, elem), elem) and classes_equal(
                yoneda_product(elem, one), elem
            )
            res.append(
                _result(
                    "unit", passed, len(res), deg, 0, "p={0} i={1}".format(deg, idx)
                )
            )
    return res


def check_graded_commutativity(context: CohomologyContext) -> List[CheckResult]:
    """`f g = (-1)^{pq} g f` for every pair of basis classes."""
    res: List[CheckResult] = list()
    for deg_p, idx_i, left, deg_q, idx_j, right in _basis_pairs(context):
        first = yoneda_product(left, right)
        second = yoneda_product(right, left)
        if sign(deg_p * deg_q) < 0:
            second = -second
        res.append(
            _result(
                "graded-commutativity",
                classes_equal(first, second),
                len(res),
                deg_p,
                deg_q,
                "p={0} i={1} q={2} j={3}".format(deg_p, idx_i, deg_q, idx_j),
            )
        )
    return res


def check_cup_yoneda(context: CohomologyContext) -> List[CheckResult]:
    """The cup product agrees with the Yoneda product on every pair."""
    if context.kind not in ("group", "hochschild"):
        return list()
    res: List[CheckResult] = list()
    for deg_p, idx_i, left, deg_q, idx_j, right in _basis_pairs(context):
        res.append(
            _result(
                "cup-yoneda",
                classes_equal(cup_product(left, right), yoneda_product(left, right)),
                len(res),
                deg_p,
                deg_q,
                "p={0} i={1} q={2} j={3}".format(deg_p, idx_i, deg_q, idx_j),
            )
        )
    return res


def check_associativity(context: CohomologyContext) -> List[CheckResult]:
    """`(f g) h = f (g h)` for basis triples of positive degrees."""
    top = context.max_degree
    res: List[CheckResult] = list()
    degrees = [
        (deg_p, deg_q, deg_r)
        for deg_p in range(1, top + 1)
        for deg_q in range(1, top + 1)
        for deg_r in range(1, top + 1)
        if deg_p + deg_q + deg_r <= top
    ]
    for deg_p, deg_q, deg_r in degrees:
        for first, second, third in itertools.product(
            context.basis_classes(deg_p),
            context.basis_classes(deg_q),
            context.basis_classes(deg_r),
        ):
            left = yoneda_product(yoneda_product(first, second), third)
            right = yoneda_product(first, yoneda_product(second, third))
            res.append(
                _result(
                    "associativity",
                    classes_equal(left, right),
                    len(res),
                    deg_p,
                    deg_q,
                    "p={0} q={1} r={2}".format(deg_p, deg_q, deg_r),
                )
            )
    return res


def check_well_defined(
    context: CohomologyContext, rng: np.random.Generator, samples: int = 10
) -> List[CheckResult]:
    """Perturbing both factors by random coboundaries keeps the product class."""
    pairs = _basis_pairs(context, lowest=1)
    res: List[CheckResult] = list()
    if not pairs:
        return res
    for sample in range(samples):
        deg_p, idx_i, left, deg_q, idx_j, right = pairs[
            int(rng.integers(0, len(pairs)))
        ]
        noisy_left = context.element(
            deg_p,
            context.field.reduce(
                left.cocycle
                + context.coboundary(deg_p).apply(
                    context.random_cochain(deg_p - 1, rng)
                )
            ),
            check=False,
        )
        noisy_right = context.element(
            deg_q,
            context.field.reduce(
                right.cocycle
                + context.coboundary(deg_q).apply(
                    context.random_cochain(deg_q - 1, rng)
                )
            ),
            check=False,
        )
        passed = classes_equal(
            yoneda_product(left, right), yoneda_product(noisy_left, noisy_right)
        )
        res.append(
            _result(
                "well-defined",
                passed,
                sample,
                deg_p,
                deg_q,
                "p={0} i={1} q={2} j={3}".format(deg_p, idx_i, deg_q, idx_j),
            )
        )
    return res


def check_products(
    context: CohomologyContext,
    rng: Optional[np.random.Generator] = None,
    samples: int = 10,
) -> List[CheckResult]:
    """Run all product checks of a context."""
    if rng is None:
        rng = np.random.default_rng(0)
    res = check_unit(context)
    res.extend(check_graded_commutativity(context))
    res.extend(check_cup_yoneda(context))
    res.extend(check_associativity(context))
    res.extend(check_well_defined(context, rng, samples))
    logger.info(
        "%d of %d product checks pass on %s.",
        sum(1 for item in res if item["passed"]),
        len(res),
        context.name,
    )
    return res
