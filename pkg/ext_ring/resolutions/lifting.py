# -*- coding: UTF-8 -*-
"""
Lifting
=======
@ Ext Ring: resolutions

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The comparison theorem. A module map out of a free resolution into an exact
complex extends, degree by degree, to a chain map. The extension is solved on the
generators and expanded by linearity over the algebra, so every component is a
module map.
"""

from typing import Any, Optional

try:
    from typing import Dict
except ImportError:
    from builtins import dict as Dict

from ..errors import ChainMapError, NotACocycleError, ShapeError
from ..utilities import sign, get_logger
from ..caches import CacheMemory
from ..caches.typehints import CachedItemInfo
from ..linalg import Matrix, Solver
from ..complexes import Complex, ChainMap, shift
from .free import FreeResolution, expand_generator_images, stacked_actions


__all__ = ("SolverCache", "cached_solver", "extend_chain_map", "lift_cocycle")

SolverCache = CacheMemory[CachedItemInfo, Solver]

logger = get_logger("resolutions")


def cached_solver(
    mat: Matrix, cache: Optional[SolverCache] = None, degree: int = 0
) -> Solver:
    """Factorize a matrix, reusing the factorization kept in `cache`."""
    if cache is None:
        return Solver(mat)
    return cache.fetch(
        "solver:{0}".format(mat.fingerprint),
        CachedItemInfo(kind="solver", degree=degree, size=mat.rows * mat.cols),
        lambda: Solver(mat),
    )


def extend_chain_map(
    source: FreeResolution,
    target: Complex,
    start: int,
    start_images: Matrix,
    stop: int,
    offset: int = 0,
    coeff: int = 1,
    cache: Optional[SolverCache] = None,
) -> Dict[int, Matrix]:
    """Extend a module map out of a free resolution to a chain map.

    The component `phi_m : F_m -> target_{m - offset}` is solved from

        d^target o phi_m = coeff * phi_{m-1} o d^F.

    Arguments
    ---------
    source: `FreeResolution`
        The free resolution `F`.

    target: `Complex`
        The target complex. It needs to carry the action of the same algebra and
        to be exact in the degrees `[start - offset, stop - offset - 1]`.

    start: `int`
        The first degree of `F` in the map.

    start_images: `Matrix`
        The images of the generators of `F_start` in `target_{start - offset}`.

    stop: `int`
        The last degree of `F` in the map.

    offset: `int`
        The degree of the map is `-offset`.

    coeff: `int`
        The sign `+1` or `-1` in the commutation rule.

    cache: `SolverCache | None`
        The cache of factorized differentials.

    Returns
    -------
    #1: `{int: Matrix}`
        The field matrices `phi_m` for `start <= m <= stop`.
    """
    field = source.field
    if target.action_dim != source.algebra.dim:
        raise ChainMapError(
            "resolutions: The target complex needs the action of {0}.".format(
                source.algebra.name
            )
        )
    dim_t = target.dim(start - offset)
    if start_images.shape != (dim_t, source.rank(start)):
        raise ShapeError(
            "resolutions: The start images need the shape {0}, get {1}.".format(
                (dim_t, source.rank(start)), start_images.shape
            )
        )
    res: Dict[int, Matrix] = dict()
    prev = Matrix(
        field,
        expand_generator_images(
            field, stacked_actions(target, start - offset), start_images.data
        ),
    )
    res[start] = prev
    for deg in range(start + 1, stop + 1):
        tdeg = deg - offset
        rhs = prev @ source.generator_images(deg)
        if coeff < 0:
            rhs = -rhs
        solver = cached_solver(target.d(tdeg), cache, tdeg)
        gens = solver.solve_many(rhs)
        if gens is None:
            raise ChainMapError(
                "resolutions: Cannot extend the map to degree {0}, the target is "
                "not exact at degree {1}.".format(deg, tdeg - 1)
            )
        prev = Matrix(
            field,
            expand_generator_images(field, stacked_actions(target, tdeg), gens.data),
        )
        res[deg] = prev
    return res


def lift_cocycle(
    resolution: FreeResolution,
    cocycle: Any,
    degree: int,
    stop: Optional[int] = None,
    cache: Optional[SolverCache] = None,
    check: bool = True,
) -> ChainMap:
    """Lift a cocycle `F_q -> M` to a chain map `F -> T^q F`.

    The component in degree `q + m` maps `F_{q+m}` to `F_m`. Its composition with
    the augmentation in degree `q` is the cocycle, and the commutation rule is
    `d o phi = (-1)^q phi o d`, so the result is a chain map of degree `0` into the
    suspension `T^q F`.

    Arguments
    ---------
    resolution: `FreeResolution`
        The resolution `F` of `M`.

    cocycle: `array-like`
        The cocycle of degree `q`, a vector of `Hom_A(F_q, M)`.

    degree: `int`
        The degree `q`.

    stop: `int | None`
        The last source degree of the lift. The default is the length of the
        resolution.

    cache: `SolverCache | None`
        The cache of factorized differentials.

    check: `bool`
        If set, check that `cocycle` is a cocycle.

    Returns
    -------
    #1: `ChainMap`
        The lift, a chain map `F -> T^q F` with zero components below degree `q`.
    """
    degree = int(degree)
    stop = resolution.length if stop is None else min(int(stop), resolution.length)
    if not 0 <= degree <= resolution.length:
        raise ValueError(
            "resolutions: The degree {0} is out of the resolution [0, {1}].".format(
                degree, resolution.length
            )
        )
    fmat = resolution.cochain_matrix(degree, cocycle)
    if check and degree < resolution.length:
        image = resolution.cochain_differential(degree + 1).apply(
            resolution.cochain_vector(fmat)
        )
        if not resolution.field.is_zero(image):
            raise NotACocycleError(
                "resolutions: not a cocycle, f o d_{0} is not zero.".format(degree + 1)
            )
    solver = cached_solver(resolution.full_augmentation, cache, 0)
    start = solver.solve_many(fmat)
    if start is None:
        raise ChainMapError("resolutions: The augmentation is not surjective.")
    comps = extend_chain_map(
        resolution,
        resolution.complex,
        degree,
        start,
        stop,
        offset=degree,
        coeff=sign(degree),
        cache=cache,
    )
    logger.debug("Lifted a cocycle of degree %d to degree %d.", degree, stop)
    return ChainMap(
        resolution.complex, shift(resolution.complex, degree), comps, check=False
    )
