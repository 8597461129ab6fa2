# -*- coding: UTF-8 -*-
"""
Axioms
======
@ Ext Ring: monoidal

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The checker of the suspended monoidal axioms on sampled objects. All maps are
compared exactly, component by component. A failure is reported with the first
degree where the two sides differ, and never raised.
"""

from typing import Optional

try:
    from typing import Iterable, Sequence
    from typing import List, Tuple
except ImportError:
    from collections.abc import Iterable, Sequence
    from builtins import list as List, tuple as Tuple

import numpy as np

from ..utilities import sign, get_logger
from ..typehints import CheckResult
from ..complexes import Complex, ChainMap, compose, identity_map, shift_map
from .instance import SuspendedMonoidal


__all__ = (
    "Sample",
    "random_samples",
    "compare_maps",
    "check_unit_squares",
    "check_anticommuting_square",
    "check_unit_coherence",
    "check_unit_relations",
    "check_suspension_relation",
    "check_pentagon",
    "check_triangle",
    "check_naturality",
    "check_axioms",
    "DEFAULT_POWERS",
)

Sample = Tuple[Complex, Complex]
"""A pair of objects `(x, y)`."""

DEFAULT_POWERS = range(-2, 3)

logger = get_logger("monoidal")


def random_samples(
    instance: SuspendedMonoidal, count: int, rng: np.random.Generator
) -> List[Sample]:
    """Draw `count` pairs of random objects."""
    return [
        (instance.random_object(rng), instance.random_object(rng))
        for _ in range(int(count))
    ]


def compare_maps(
    name: str,
    sample: int,
    first: ChainMap,
    second: ChainMap,
    deg_p: Optional[int] = None,
    deg_q: Optional[int] = None,
) -> CheckResult:
    """Compare two parallel maps exactly and build the check result."""
    diff = first.first_difference(second)
    passed = diff is None
    witness = None
    if not passed:
        witness = "degree {0}".format(diff)
        logger.warning(
            "The axiom %s fails on the sample %d (p=%s, q=%s) at %s.",
            name,
            sample,
            deg_p,
            deg_q,
            witness,
        )
    return CheckResult(
        name=name, passed=passed, sample=sample, p=deg_p, q=deg_q, witness=witness
    )


def check_unit_squares(
    instance: SuspendedMonoidal, sample: int, obj: Complex
) -> List[CheckResult]:
    """`l_{Tx} = T l_x o lambda_{e,x}` and `r_{Tx} = T r_x o rho_{x,e}`."""
    unit = instance.unit
    susp = instance.shift(obj, 1)
    left = compose(
        instance.shift_map(instance.unitor_left(obj), 1),
        instance.lambda_step(unit, obj),
    )
    right = compose(
        instance.shift_map(instance.unitor_right(obj), 1),
        instance.rho_step(obj, unit),
    )
    return [
        compare_maps("unit-left-square", sample, instance.unitor_left(susp), left),
        compare_maps("unit-right-square", sample, instance.unitor_right(susp), right),
    ]


def check_anticommuting_square(
    instance: SuspendedMonoidal, sample: int, first: Complex, second: Complex
) -> CheckResult:
    """`T rho_{x,y} o lambda_{Tx,y} = -T lambda_{x,y} o rho_{x,Ty}`."""
    path_a = compose(
        instance.shift_map(instance.rho_step(first, second), 1),
        instance.lambda_step(instance.shift(first, 1), second),
    )
    path_b = compose(
        instance.shift_map(instance.lambda_step(first, second), 1),
        instance.rho_step(first, instance.shift(second, 1)),
    )
    return compare_maps("anticommuting-square", sample, path_a, -path_b)


def check_unit_coherence(instance: SuspendedMonoidal, sample: int) -> CheckResult:
    """`l_e = r_e : e (x) e -> e`."""
    unit = instance.unit
    return compare_maps(
        "unit-coherence",
        sample,
        instance.unitor_left(unit),
        instance.unitor_right(unit),
    )


def check_unit_relations(
    instance: SuspendedMonoidal, sample: int, obj: Complex, power: int
) -> List[CheckResult]:
    """`l_{T^p x} = T^p l_x o lambda_p` and `r_{T^p x} = T^p r_x o rho_p`."""
    unit = instance.unit
    susp = instance.shift(obj, power)
    left = compose(
        instance.shift_map(instance.unitor_left(obj), power),
        instance.lambda_iso(unit, obj, power),
    )
    right = compose(
        instance.shift_map(instance.unitor_right(obj), power),
        instance.rho_iso(obj, unit, power),
    )
    return [
        compare_maps(
            "left-unit-relation", sample, instance.unitor_left(susp), left, power
        ),
        compare_maps(
            "right-unit-relation", sample, instance.unitor_right(susp), right, power
        ),
    ]


def check_suspension_relation(
    instance: SuspendedMonoidal,
    sample: int,
    first: Complex,
    second: Complex,
    deg_p: int,
    deg_q: int,
) -> CheckResult:
    """`T^p lambda_q o rho_p = (-1)^{pq} T^q rho_p o lambda_q`.

    Both sides map `T^p x (x) T^q y -> T^{p+q}(x (x) y)`.
    """
    susp_x = instance.shift(first, deg_p)
    susp_y = instance.shift(second, deg_q)
    left = compose(
        instance.shift_map(instance.lambda_iso(first, second, deg_q), deg_p),
        instance.rho_iso(first, susp_y, deg_p),
    )
    right = compose(
        instance.shift_map(instance.rho_iso(first, second, deg_p), deg_q),
        instance.lambda_iso(susp_x, second, deg_q),
    )
    if sign(deg_p * deg_q) < 0:
        right = -right
    return compare_maps("suspension-relation", sample, left, right, deg_p, deg_q)


def check_pentagon(
    instance: SuspendedMonoidal,
    sample: int,
    first: Complex,
    second: Complex,
    third: Complex,
    fourth: Complex,
) -> CheckResult:
    """Mac Lane's pentagon on `((w (x) x) (x) y) (x) z`."""
    tensor = instance.tensor
    wx = tensor(first, second)
    xy = tensor(second, third)
    yz = tensor(third, fourth)
    left = compose(
        instance.associator(first, second, yz),
        instance.associator(wx, third, fourth),
    )
    right = compose(
        instance.tensor_map(
            identity_map(first), instance.associator(second, third, fourth)
        ),
        compose(
            instance.associator(first, xy, fourth),
            instance.tensor_map(
                instance.associator(first, second, third), identity_map(fourth)
            ),
        ),
    )
    return compare_maps("pentagon", sample, left, right)


def check_triangle(
    instance: SuspendedMonoidal, sample: int, first: Complex, second: Complex
) -> CheckResult:
    """`(1 (x) l) o a = r (x) 1` on `(x (x) e) (x) y`."""
    unit = instance.unit
    left = compose(
        instance.tensor_map(identity_map(first), instance.unitor_left(second)),
        instance.associator(first, unit, second),
    )
    right = instance.tensor_map(instance.unitor_right(first), identity_map(second))
    return compare_maps("triangle", sample, left, right)


def check_naturality(
    instance: SuspendedMonoidal,
    sample: int,
    first: Complex,
    second: Complex,
    power: int,
    rng: np.random.Generator,
) -> List[CheckResult]:
    """Naturality of `lambda_p` and `rho_p` along random endomorphisms."""
    fmap = instance.random_map(first, first, rng)
    gmap = instance.random_map(second, second, rng)
    both = instance.shift_map(instance.tensor_map(fmap, gmap), power)
    lam = instance.lambda_iso(first, second, power)
    rho = instance.rho_iso(first, second, power)
    return [
        compare_maps(
            "lambda-naturality",
            sample,
            compose(lam, instance.tensor_map(fmap, shift_map(gmap, power))),
            compose(both, lam),
            power,
        ),
        compare_maps(
            "rho-naturality",
            sample,
            compose(rho, instance.tensor_map(shift_map(fmap, power), gmap)),
            compose(both, rho),
            power,
        ),
    ]


def check_axioms(
    instance: SuspendedMonoidal,
    samples: Sequence[Sample],
    rng: Optional[np.random.Generator] = None,
    powers: Iterable[int] = DEFAULT_POWERS,
) -> List[CheckResult]:
    """Check all the axioms on the sampled pairs of objects.

    Arguments
    ---------
    instance: `SuspendedMonoidal`
        The category to check.

    samples: `[(Complex, Complex)]`
        The sampled pairs `(x, y)`. An empty list gives an empty report.

    rng: `np.random.Generator | None`
        The generator of the random endomorphisms in the naturality checks.

    powers: `[int]`
        The exponents `p` and `q` of the iterated isomorphisms.

    Returns
    -------
    #1: `[CheckResult]`
        One result per sample and per checked identity.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    powers = tuple(int(val) for val in powers)
    res: List[CheckResult] = list()
    for idx, (first, second) in enumerate(samples):
        logger.debug("Check the axioms of %s on the sample %d.", instance.name, idx)
        if idx == 0:
            res.append(check_unit_coherence(instance, idx))
        res.extend(check_unit_squares(instance, idx, first))
        res.append(check_anticommuting_square(instance, idx, first, second))
        for power in powers:
            res.extend(check_unit_relations(instance, idx, first, power))
        for deg_p in powers:
            for deg_q in powers:
                res.append(
                    check_suspension_relation(
                        instance, idx, first, second, deg_p, deg_q
                    )
                )
        res.append(check_pentagon(instance, idx, first, second, first, second))
        res.append(check_triangle(instance, idx, first, second))
        for power in (val for val in powers if val != 0):
            res.extend(check_naturality(instance, idx, first, second, power, rng))
    logger.info(
        "%d of %d axiom checks pass on %s.",
        sum(1 for item in res if item["passed"]),
        len(res),
        instance.name,
    )
    return res
