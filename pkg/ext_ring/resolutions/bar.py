# -*- coding: UTF-8 -*-
"""
Bar resolutions
===============
@ Ext Ring: resolutions

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The normalized bar resolutions.

The one-sided resolution of a left module `M` has `B_n = A (x) Abar^{(x)n} (x) M`,
free over `A` on the generators `[a_1 | ... | a_n] m`, where `a_i` runs over the
basis of `Abar = A / k 1` and `m` over the basis of `M`. Its differential is

    d[a_1 | ... | a_n] m = a_1 [a_2 | ... | a_n] m
        + sum_{0 < i < n} (-1)^i [... | a_i a_{i+1} | ...] m
        + (-1)^n [a_1 | ... | a_{n-1}] (a_n m).

The two-sided resolution of `A` has `B_n = A (x) Abar^{(x)n} (x) A`, free over the
enveloping algebra `A^e` on the generators `[a_1 | ... | a_n]`, and the last face
is `(-1)^n (1 (x) a_n) [a_1 | ... | a_{n-1}]`. `Hom_{A^e}(B_n, A)` is the space of
normalized Hochschild cochains.

The basis of `Abar` is the basis of `A` without the unit pivot, i.e. the first
basis element where the unit has a nonzero coordinate. A product is sent to `Abar`
by removing its unit part.
"""

import itertools

from typing import Optional

try:
    from typing import Iterator
    from typing import Dict, Tuple
except ImportError:
    from collections.abc import Iterator
    from builtins import dict as Dict, tuple as Tuple

import numpy as np

from ..errors import ComplexError
from ..utilities import sign, get_logger, Timer
from ..linalg import Field
from .algebras import (
    AlgebraPresentation,
    ModuleRep,
    enveloping_algebra,
    regular_bimodule,
)
from .free import FreeResolution


__all__ = ("reduced_basis", "bar_resolution", "two_sided_bar_resolution")

logger = get_logger("resolutions")


def reduced_basis(algebra: AlgebraPresentation) -> Tuple[Tuple[int, ...], np.ndarray]:
    """The basis of `Abar = A / k 1`.

    Returns
    -------
    #1: `(int, ...)`
        The indices of the basis elements of `A` kept in `Abar`.

    #2: `np.ndarray`
        The projection `A -> Abar` of the shape `(d - 1, d)`.
    """
    field = algebra.field
    dim = algebra.dim
    pivot = algebra.unit_pivot
    unit = algebra.unit
    kept = tuple(idx for idx in range(dim) if idx != pivot)
    proj = field.eye(dim)
    scale = field.inv(unit[pivot])
    for idx in range(dim):
        proj[idx, pivot] = field.convert(-unit[idx] * scale)
    proj = field.reduce(proj)
    return kept, proj[list(kept), :]


class _WordIndex:
    """Lexicographic indices of the words `(w_1, ..., w_n)` with a trailing slot."""

    def __init__(self, letters: int, trailing: int) -> None:
        self.letters = letters
        self.trailing = trailing

    def count(self, length: int) -> int:
        return self.letters**length * self.trailing

    def index(self, word: Tuple[int, ...], tail: int) -> int:
        res = 0
        for letter in word:
            res = res * self.letters + letter
        return res * self.trailing + tail

    def words(self, length: int) -> Iterator[Tuple[int, ...]]:
        return itertools.product(range(self.letters), repeat=length)


def _reduced_products(
    algebra: AlgebraPresentation, kept: Tuple[int, ...], proj: np.ndarray
) -> np.ndarray:
    """`[s, t, :]` are the `Abar` coordinates of `b_{kept[s]} b_{kept[t]}`."""
    consts = algebra.constants[np.ix_(kept, kept)]
    return algebra.field.reduce(np.tensordot(consts, proj, axes=([2], [1])))


def bar_resolution(
    algebra: AlgebraPresentation,
    module: ModuleRep,
    length: int,
    verify: bool = False,
) -> FreeResolution:
    """The one-sided normalized bar resolution of a module.

    Arguments
    ---------
    algebra: `AlgebraPresentation`
        The algebra `A`.

    module: `ModuleRep`
        The resolved module `M`.

    length: `int`
        The highest degree `L` of the resolution.

    verify: `bool`
        If set, check the exactness by counting ranks.

    Returns
    -------
    #1: `FreeResolution`
        The resolution with the ranks `(d - 1)^n dim M`.
    """
    length = int(length)
    if length < 0:
        raise ValueError(
            'resolutions: The argument "length" needs to be >=0, get {0}.'.format(
                length
            )
        )
    field = algebra.field
    dim, dim_m = algebra.dim, module.dim
    kept, proj = reduced_basis(algebra)
    prods = _reduced_products(algebra, kept, proj)
    unit = algebra.unit
    acts = module.stacked()
    words = _WordIndex(dim - 1, dim_m)
    images: Dict[int, np.ndarray] = dict()
    with Timer("bar") as timer:
        for deg in range(1, length + 1):
            arr = field.zeros((dim * words.count(deg - 1), words.count(deg)))
            for word in words.words(deg):
                for elem in range(dim_m):
                    col = words.index(word, elem)
                    # a_1 [a_2 | ... | a_n] m
                    row = words.index(word[1:], elem) * dim
                    arr[row + kept[word[0]], col] += 1
                    for pos in range(1, deg):
                        coeffs = prods[word[pos - 1], word[pos]]
                        for letter in np.flatnonzero(coeffs):
                            row = words.index(
                                word[: pos - 1] + (int(letter),) + word[pos + 1 :], elem
                            )
                            arr[row * dim : (row + 1) * dim, col] += (
                                sign(pos) * coeffs[letter] * unit
                            )
                    last = acts[kept[word[-1]]][:, elem]
                    for target in np.flatnonzero(last):
                        row = words.index(word[:-1], int(target))
                        arr[row * dim : (row + 1) * dim, col] += (
                            sign(deg) * last[target] * unit
                        )
            images[deg] = field.reduce(arr)
    logger.debug(
        "Bar resolution of %s over %s to degree %d in %.3fs.",
        module.name,
        algebra.name,
        length,
        timer.elapsed,
    )
    res = FreeResolution(
        algebra,
        module,
        [words.count(deg) for deg in range(length + 1)],
        images,
        field.eye(dim_m),
        kind="bar",
        check=verify,
    )
    if verify and not res.is_exact():
        raise ComplexError(
            "resolutions: The bar resolution of {0} is not exact.".format(module.name)
        )
    return res


def two_sided_bar_resolution(
    algebra: AlgebraPresentation,
    length: int,
    envelope: Optional[AlgebraPresentation] = None,
    verify: bool = False,
) -> FreeResolution:
    """The two-sided normalized bar resolution of `A` over `A^e`.

    Arguments
    ---------
    algebra: `AlgebraPresentation`
        The algebra `A`.

    length: `int`
        The highest degree `L` of the resolution.

    envelope: `AlgebraPresentation | None`
        The enveloping algebra of `algebra`. It is built if not given.

    verify: `bool`
        If set, check the exactness by counting ranks.

    Returns
    -------
    #1: `FreeResolution`
        The resolution of the regular bimodule with the ranks `(d - 1)^n`.
    """
    length = int(length)
    if length < 0:
        raise ValueError(
            'resolutions: The argument "length" needs to be >=0, get {0}.'.format(
                length
            )
        )
    field: Field = algebra.field
    if envelope is None:
        envelope = enveloping_algebra(algebra)
    module = regular_bimodule(algebra, envelope)
    dim = algebra.dim
    dim_e = envelope.dim
    kept, proj = reduced_basis(algebra)
    prods = _reduced_products(algebra, kept, proj)
    unit = algebra.unit
    # 1 (x) 1 in A^e
    unit_e = field.reduce(np.outer(unit, unit).reshape(dim_e))
    words = _WordIndex(dim - 1, 1)
    images: Dict[int, np.ndarray] = dict()
    with Timer("two-sided-bar") as timer:
        for deg in range(1, length + 1):
            arr = field.zeros((dim_e * words.count(deg - 1), words.count(deg)))
            for word in words.words(deg):
                col = words.index(word, 0)
                # (a_1 (x) 1) [a_2 | ... | a_n]
                row = words.index(word[1:], 0) * dim_e + kept[word[0]] * dim
                arr[row : row + dim, col] += unit
                for pos in range(1, deg):
                    coeffs = prods[word[pos - 1], word[pos]]
                    for letter in np.flatnonzero(coeffs):
                        row = words.index(
                            word[: pos - 1] + (int(letter),) + word[pos + 1 :], 0
                        )
                        arr[row * dim_e : (row + 1) * dim_e, col] += (
                            sign(pos) * coeffs[letter] * unit_e
                        )
                # (-1)^n (1 (x) a_n) [a_1 | ... | a_{n-1}]
                row = words.index(word[:-1], 0) * dim_e + kept[word[-1]]
                arr[row : row + dim_e : dim, col] += sign(deg) * unit
            images[deg] = field.reduce(arr)
    logger.debug(
        "Two-sided bar resolution of %s to degree %d in %.3fs.",
        algebra.name,
        length,
        timer.elapsed,
    )
    res = FreeResolution(
        envelope,
        module,
        [words.count(deg) for deg in range(length + 1)],
        images,
        unit.reshape(dim, 1),
        kind="two-sided-bar",
        check=verify,
    )
    if verify and not res.is_exact():
        raise ComplexError(
            "resolutions: The two-sided bar resolution of {0} is not exact.".format(
                algebra.name
            )
        )
    return res
