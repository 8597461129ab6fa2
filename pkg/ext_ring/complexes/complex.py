# -*- coding: UTF-8 -*-
"""
Complex
=======
@ Ext Ring: complexes

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Bounded chain complexes of finite-dimensional vector spaces, with homological
indexing: `d_n` maps degree `n` to degree `n - 1`.

A complex may carry a module action, i.e. one matrix per algebra basis element in
each degree, commuting with the differential. Such complexes are complexes of
modules, and the homotopy solvers only look for module maps between them.
"""

import hashlib

from typing import Any, Optional

try:
    from typing import Mapping, Sequence
    from typing import Dict, List, Tuple
except ImportError:
    from collections.abc import Mapping, Sequence
    from builtins import dict as Dict, list as List, tuple as Tuple

import numpy as np

from ..errors import ComplexError
from ..utilities import sign
from ..linalg import (
    Field,
    Matrix,
    kernel_matrix,
    subquotient_representatives,
)


__all__ = (
    "Complex",
    "concentrated",
    "unit_complex",
    "shift",
    "truncate",
    "homology_classes",
    "random_complex",
)


class Complex:
    """Bounded chain complex over a field.

    The degree window `[lo, hi]` is trimmed on construction, so that the two end
    degrees are nonzero. The zero complex has the window `[0, -1]`. Degrees out of
    the window have dimension `0`.
    """

    def __init__(
        self,
        field: Field,
        dims: Mapping[int, int],
        diffs: Optional[Mapping[int, Matrix]] = None,
        actions: Optional[Mapping[int, Sequence[Matrix]]] = None,
        *,
        action_dim: Optional[int] = None,
        check: bool = True,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        field: `Field`
            The base field.

        dims: `{int: int}`
            The dimension of each degree. Missing degrees have dimension `0`.

        diffs: `{int: Matrix} | None`
            The differential `d_n` of shape `(dims[n - 1], dims[n])` for each degree
            `n`. Missing differentials are zero.

        actions: `{int: [Matrix]} | None`
            The module action. `actions[n][i]` is the action of the `i`-th algebra
            basis element on degree `n`. Missing degrees use zero-size matrices.

        action_dim: `int | None`
            The number of algebra basis elements acting. It is inferred from
            `actions` if not given. Only used when `actions` is not `None`.

        check: `bool`
            If set, check the shapes, `d o d = 0` and the compatibility between the
            actions and the differential.
        """
        self.__field = field
        nonzero = [int(deg) for deg, val in dims.items() if int(val) > 0]
        for deg, val in dims.items():
            if int(val) < 0:
                raise ComplexError(
                    "complexes: The dimension of degree {0} is negative.".format(deg)
                )
        if nonzero:
            self.__lo, self.__hi = min(nonzero), max(nonzero)
        else:
            self.__lo, self.__hi = 0, -1
        self.__dims: Dict[int, int] = {
            deg: int(dims.get(deg, 0)) for deg in range(self.__lo, self.__hi + 1)
        }

        self.__diffs: Dict[int, Matrix] = dict()
        diffs = diffs if diffs is not None else dict()
        for deg in range(self.__lo + 1, self.__hi + 1):
            mat = diffs.get(deg)
            shape = (self.dim(deg - 1), self.dim(deg))
            if mat is None:
                mat = Matrix.zeros(field, *shape)
            elif check:
                field.check_same(mat.field)
                if mat.shape != shape:
                    raise ComplexError(
                        "complexes: d_{0} needs the shape {1}, get {2}.".format(
                            deg, shape, mat.shape
                        )
                    )
            self.__diffs[deg] = mat
        if check:
            for deg, mat in diffs.items():
                if self.__lo < deg <= self.__hi:
                    continue
                if mat.shape != (self.dim(deg - 1), self.dim(deg)):
                    raise ComplexError(
                        "complexes: d_{0} is out of the window [{1}, {2}].".format(
                            deg, self.__lo, self.__hi
                        )
                    )

        self.__action_dim: Optional[int] = None
        self.__actions: Dict[int, Tuple[Matrix, ...]] = dict()
        if actions is not None:
            if action_dim is None:
                action_dim = next((len(val) for val in actions.values()), None)
            if action_dim is None:
                raise ComplexError(
                    "complexes: Cannot infer the number of acting basis elements."
                )
            self.__action_dim = int(action_dim)
            for deg in range(self.__lo, self.__hi + 1):
                acts = actions.get(deg)
                if acts is None:
                    if self.dim(deg) > 0:
                        raise ComplexError(
                            "complexes: The action on degree {0} is missing.".format(
                                deg
                            )
                        )
                    acts = tuple(
                        Matrix.zeros(field, 0, 0) for _ in range(self.__action_dim)
                    )
                acts = tuple(acts)
                if check:
                    if len(acts) != self.__action_dim:
                        raise ComplexError(
                            "complexes: Degree {0} has {1} action matrices, need "
                            "{2}.".format(deg, len(acts), self.__action_dim)
                        )
                    for mat in acts:
                        if mat.shape != (self.dim(deg), self.dim(deg)):
                            raise ComplexError(
                                "complexes: An action on degree {0} has the shape "
                                "{1}.".format(deg, mat.shape)
                            )
                self.__actions[deg] = acts

        if check:
            self.__check_square_zero()
            self.__check_actions()
        self.__fingerprint: Optional[str] = None

    def __check_square_zero(self) -> None:
        for deg in range(self.__lo + 2, self.__hi + 1):
            if not (self.__diffs[deg - 1] @ self.__diffs[deg]).is_zero():
                raise ComplexError(
                    "complexes: d_{0} o d_{1} is not zero.".format(deg - 1, deg)
                )

    def __check_actions(self) -> None:
        if self.__action_dim is None:
            return
        for deg in range(self.__lo + 1, self.__hi + 1):
            diff = self.__diffs[deg]
            for idx in range(self.__action_dim):
                left = diff @ self.act(deg, idx)
                right = self.act(deg - 1, idx) @ diff
                if left != right:
                    raise ComplexError(
                        "complexes: The action of basis element {0} does not "
                        "commute with d_{1}.".format(idx, deg)
                    )

    @property
    def field(self) -> Field:
        """Property: The base field."""
        return self.__field

    @property
    def lo(self) -> int:
        """Property: The lowest nonzero degree."""
        return self.__lo

    @property
    def hi(self) -> int:
        """Property: The highest nonzero degree."""
        return self.__hi

    @property
    def degrees(self) -> range:
        """Property: All degrees in the window."""
        return range(self.__lo, self.__hi + 1)

    @property
    def dims(self) -> Dict[int, int]:
        """Property: The dimensions of the degrees in the window."""
        return dict(self.__dims)

    @property
    def total_dim(self) -> int:
        """Property: The sum of all dimensions."""
        return sum(self.__dims.values())

    @property
    def is_zero(self) -> bool:
        """Property: Whether this is the zero complex."""
        return self.__hi < self.__lo

    @property
    def action_dim(self) -> Optional[int]:
        """Property: The number of acting basis elements, or `None`."""
        return self.__action_dim

    @property
    def has_action(self) -> bool:
        """Property: Whether this complex carries a module action."""
        return self.__action_dim is not None

    def dim(self, deg: int) -> int:
        """The dimension of degree `deg`."""
        return self.__dims.get(deg, 0)

    def d(self, deg: int) -> Matrix:
        """The differential `d_deg`, including the zero ones out of the window."""
        mat = self.__diffs.get(deg)
        if mat is None:
            return Matrix.zeros(self.__field, self.dim(deg - 1), self.dim(deg))
        return mat

    def act(self, deg: int, idx: int) -> Matrix:
        """The action of the `idx`-th algebra basis element on degree `deg`."""
        if self.__action_dim is None:
            raise ComplexError("complexes: This complex carries no module action.")
        acts = self.__actions.get(deg)
        if acts is None:
            return Matrix.zeros(self.__field, 0, 0)
        return acts[idx]

    def actions(self, deg: int) -> Tuple[Matrix, ...]:
        """All action matrices on degree `deg`."""
        if self.__action_dim is None:
            raise ComplexError("complexes: This complex carries no module action.")
        return tuple(self.act(deg, idx) for idx in range(self.__action_dim))

    def diffs(self) -> Dict[int, Matrix]:
        """All differentials inside the window."""
        return dict(self.__diffs)

    def all_actions(self) -> Optional[Dict[int, Tuple[Matrix, ...]]]:
        """All actions inside the window, or `None`."""
        if self.__action_dim is None:
            return None
        return dict(self.__actions)

    @property
    def fingerprint(self) -> str:
        """Property: The SHA-256 digest of all data of this complex."""
        if self.__fingerprint is None:
            hasher = hashlib.sha256()
            hasher.update(
                "{0}|{1}|{2}|".format(
                    self.__field.tag,
                    ",".join(
                        "{0}:{1}".format(deg, val) for deg, val in self.__dims.items()
                    ),
                    self.__action_dim,
                ).encode()
            )
            for deg in sorted(self.__diffs):
                hasher.update(self.__diffs[deg].fingerprint.encode())
            for deg in sorted(self.__actions):
                for mat in self.__actions[deg]:
                    hasher.update(mat.fingerprint.encode())
            self.__fingerprint = hasher.hexdigest()
        return self.__fingerprint

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __repr__(self) -> str:
        return "<{0} {1} dims={2}{3}>".format(
            self.__class__.__name__,
            self.__field.tag,
            self.__dims,
            (
                ""
                if self.__action_dim is None
                else " action={0}".format(self.__action_dim)
            ),
        )


def concentrated(
    field: Field,
    dim: int,
    degree: int = 0,
    actions: Optional[Sequence[Matrix]] = None,
) -> Complex:
    """A complex with one nonzero degree.

    Arguments
    ---------
    field: `Field`
        The base field.

    dim: `int`
        The dimension of the only degree.

    degree: `int`
        The degree.

    actions: `[Matrix] | None`
        The module action on this degree.
    """
    if actions is None:
        return Complex(field, {degree: dim})
    return Complex(
        field, {degree: dim}, actions={degree: actions}, action_dim=len(actions)
    )


def unit_complex(field: Field) -> Complex:
    """The unit complex: the base field in degree `0`."""
    return concentrated(field, 1)


def shift(cpx: Complex, power: int) -> Complex:
    """The suspension `T^p`.

    Degree `n` of the result is degree `n - p` of `cpx`, and the differential is
    `(-1)^p d`. `shift(shift(C, p), q) == shift(C, p + q)` holds on the nose.
    """
    power = int(power)
    if power == 0:
        return cpx
    coeff = sign(power)
    diffs = {
        deg + power: (mat if coeff > 0 else -mat) for deg, mat in cpx.diffs().items()
    }
    actions = cpx.all_actions()
    return Complex(
        cpx.field,
        {deg + power: val for deg, val in cpx.dims.items()},
        diffs,
        (
            None
            if actions is None
            else {deg + power: val for deg, val in actions.items()}
        ),
        action_dim=cpx.action_dim,
        check=False,
    )


def truncate(
    cpx: Complex, lo: Optional[int] = None, hi: Optional[int] = None
) -> Complex:
    """The brutal truncation keeping the degrees in `[lo, hi]`.

    The differentials leaving the window are dropped, so the result is a complex
    again. Missing bounds keep the corresponding end of `cpx`.
    """
    lo = cpx.lo if lo is None else int(lo)
    hi = cpx.hi if hi is None else int(hi)
    actions = cpx.all_actions()
    return Complex(
        cpx.field,
        {deg: val for deg, val in cpx.dims.items() if lo <= deg <= hi},
        {deg: mat for deg, mat in cpx.diffs().items() if lo < deg <= hi},
        (
            None
            if actions is None
            else {deg: val for deg, val in actions.items() if lo <= deg <= hi}
        ),
        action_dim=cpx.action_dim,
        check=False,
    )


def homology_classes(cpx: Complex, deg: int) -> Tuple[int, List[np.ndarray]]:
    """Homology of a complex at one degree.

    Returns
    -------
    #1: `int`
        The dimension of `ker d_n / im d_{n+1}`.

    #2: `[np.ndarray]`
        The echelon-derived representatives of a basis.
    """
    kernel = kernel_matrix(cpx.d(deg))
    image = cpx.d(deg + 1)
    reps = subquotient_representatives(kernel, image)
    return len(reps), reps


def random_complex(
    field: Field,
    rng: np.random.Generator,
    max_dim: int = 3,
    window: int = 3,
    lowest: Optional[int] = None,
) -> Complex:
    """Draw a random complex.

    Arguments
    ---------
    field: `Field`
        The base field.

    rng: `np.random.Generator`
        The random generator.

    max_dim: `int`
        The maximal dimension of each degree.

    window: `int`
        The number of degrees, before trimming the zero end degrees.

    lowest: `int | None`
        The lowest degree. If not given, it is drawn from `[-1, 1]`.
    """
    if lowest is None:
        lowest = int(rng.integers(-1, 2))
    dims = {
        lowest + idx: int(rng.integers(0, max_dim + 1)) for idx in range(window)
    }
    diffs: Dict[int, Matrix] = dict()
    prev = Matrix.zeros(field, 0, dims[lowest])
    for deg in range(lowest + 1, lowest + window):
        cycles = kernel_matrix(prev)
        coeff = Matrix(field, field.random(rng, (cycles.cols, dims[deg])))
        diffs[deg] = cycles @ coeff
        prev = diffs[deg]
    return Complex(field, dims, diffs)
