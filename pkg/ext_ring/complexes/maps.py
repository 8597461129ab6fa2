# -*- coding: UTF-8 -*-
"""
Maps
====
@ Ext Ring: complexes

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Chain maps, their algebra, and the homotopy solvers.

A chain map of degree `k` has components `f_n : C_n -> D_{n+k}` and satisfies
`f_{n-1} o d_n = (-1)^k d_{n+k} o f_n`. Two maps are homotopic if
`f - g = d o s + (-1)^k s o d` for a map `s` of degree `k + 1`.

The homotopy questions are answered by one linear system each. Matrices are
vectorized row by row, so that `vec(A X B) = (A (x) B^T) vec(X)`.
"""

import hashlib

from typing import Any, Optional

try:
    from typing import Mapping
    from typing import Dict, List, Tuple
except ImportError:
    from collections.abc import Mapping
    from builtins import dict as Dict, list as List, tuple as Tuple

import numpy as np

from ..errors import ChainMapError
from ..utilities import sign
from ..linalg import (
    Field,
    Matrix,
    Solver,
    inverse,
    kernel_matrix,
    subquotient_representatives,
)
from .complex import Complex, shift, truncate


__all__ = (
    "ChainMap",
    "compose",
    "identity_map",
    "zero_map",
    "shift_map",
    "inverse_map",
    "restrict_map",
    "is_equivariant_pair",
    "chain_homotopic",
    "find_homotopy",
    "HomClasses",
    "hom_classes",
    "random_chain_map",
)


class ChainMap:
    """A chain map of degree `k` between two complexes.

    Components are stored for the degrees of the source window. Equality of chain
    maps is exact equality of the components, not homotopy.
    """

    def __init__(
        self,
        source: Complex,
        target: Complex,
        components: Mapping[int, Matrix],
        degree: int = 0,
        *,
        check: bool = True,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        source: `Complex`
            The source complex.

        target: `Complex`
            The target complex.

        components: `{int: Matrix}`
            `components[n]` maps `source_n` to `target_{n+k}`. Missing components are
            zero.

        degree: `int`
            The degree `k`.

        check: `bool`
            If set, check the shapes, the sign-commutation rule, and the module
            linearity when both complexes carry an action.
        """
        field = source.field
        field.check_same(target.field)
        self.__source = source
        self.__target = target
        self.__degree = int(degree)
        self.__components: Dict[int, Matrix] = dict()
        for deg in source.degrees:
            shape = (target.dim(deg + self.__degree), source.dim(deg))
            mat = components.get(deg)
            if mat is None:
                mat = Matrix.zeros(field, *shape)
            elif mat.shape != shape:
                raise ChainMapError(
                    "complexes: The component at degree {0} needs the shape {1}, get "
                    "{2}.".format(deg, shape, mat.shape)
                )
            self.__components[deg] = mat
        if check:
            self.__check()
        self.__fingerprint: Optional[str] = None

    def __check(self) -> None:
        coeff = sign(self.__degree)
        src, tgt = self.__source, self.__target
        for deg in src.degrees:
            left = self.component(deg - 1) @ src.d(deg)
            right = tgt.d(deg + self.__degree) @ self.component(deg)
            if coeff < 0:
                right = -right
            if left != right:
                raise ChainMapError(
                    "complexes: The map of degree {0} does not commute with the "
                    "differentials at degree {1}.".format(self.__degree, deg)
                )
        if is_equivariant_pair(src, tgt):
            for deg in src.degrees:
                comp = self.component(deg)
                for idx in range(src.action_dim or 0):
                    if comp @ src.act(deg, idx) != tgt.act(
                        deg + self.__degree, idx
                    ) @ comp:
                        raise ChainMapError(
                            "complexes: The map is not linear for the basis element "
                            "{0} at degree {1}.".format(idx, deg)
                        )

    @property
    def source(self) -> Complex:
        """Property: The source complex."""
        return self.__source

    @property
    def target(self) -> Complex:
        """Property: The target complex."""
        return self.__target

    @property
    def degree(self) -> int:
        """Property: The degree `k`."""
        return self.__degree

    @property
    def field(self) -> Field:
        """Property: The base field."""
        return self.__source.field

    def component(self, deg: int) -> Matrix:
        """The component from `source_deg` to `target_{deg+k}`."""
        mat = self.__components.get(deg)
        if mat is None:
            return Matrix.zeros(
                self.field,
                self.__target.dim(deg + self.__degree),
                self.__source.dim(deg),
            )
        return mat

    def components(self) -> Dict[int, Matrix]:
        """All components in the source window."""
        return dict(self.__components)

    def is_zero(self) -> bool:
        """Check whether all components vanish."""
        return all(mat.is_zero() for mat in self.__components.values())

    @property
    def fingerprint(self) -> str:
        """Property: The SHA-256 digest of the ends, the degree and the components."""
        if self.__fingerprint is None:
            hasher = hashlib.sha256()
            hasher.update(
                "{0}|{1}|{2}|".format(
                    self.__source.fingerprint,
                    self.__target.fingerprint,
                    self.__degree,
                ).encode()
            )
            for deg in sorted(self.__components):
                hasher.update(self.__components[deg].fingerprint.encode())
            self.__fingerprint = hasher.hexdigest()
        return self.__fingerprint

    def first_difference(self, other: "ChainMap") -> Optional[int]:
        """The first degree where two maps with the same ends differ, or `None`."""
        _check_parallel(self, other)
        for deg in self.__source.degrees:
            if self.component(deg) != other.component(deg):
                return deg
        return None

    def __combine(self, other: "ChainMap", subtract: bool) -> "ChainMap":
        _check_parallel(self, other)
        comps = {
            deg: (
                self.component(deg) - other.component(deg)
                if subtract
                else self.component(deg) + other.component(deg)
            )
            for deg in self.__source.degrees
        }
        return ChainMap(
            self.__source, self.__target, comps, self.__degree, check=False
        )

    def __add__(self, other: "ChainMap") -> "ChainMap":
        return self.__combine(other, subtract=False)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return self.__combine(other, subtract=True)

    def __neg__(self) -> "ChainMap":
        return ChainMap(
            self.__source,
            self.__target,
            {deg: -mat for deg, mat in self.__components.items()},
            self.__degree,
            check=False,
        )

    def scale(self, coeff: Any) -> "ChainMap":
        """Multiply all components by a scalar."""
        return ChainMap(
            self.__source,
            self.__target,
            {deg: mat.scale(coeff) for deg, mat in self.__components.items()},
            self.__degree,
            check=False,
        )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        return self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __repr__(self) -> str:
        return "<ChainMap degree={0} {1} -> {2}>".format(
            self.__degree, self.__source.dims, self.__target.dims
        )


def is_equivariant_pair(source: Complex, target: Complex) -> bool:
    """Whether maps between two complexes need to be module maps."""
    return (
        source.has_action
        and target.has_action
        and source.action_dim == target.action_dim
    )


def _check_parallel(first: ChainMap, second: ChainMap) -> None:
    if (
        first.source != second.source
        or first.target != second.target
        or first.degree != second.degree
    ):
        raise ChainMapError(
            "complexes: The two maps do not share the source, the target and the "
            "degree."
        )


def compose(second: ChainMap, first: ChainMap) -> ChainMap:
    """The composition `second o first`. The degrees are added."""
    if first.target != second.source:
        raise ChainMapError(
            "complexes: Cannot compose, the target {0} differs from the source "
            "{1}.".format(first.target, second.source)
        )
    k_1 = first.degree
    comps = {
        deg: second.component(deg + k_1) @ first.component(deg)
        for deg in first.source.degrees
    }
    return ChainMap(
        first.source, second.target, comps, k_1 + second.degree, check=False
    )


def identity_map(cpx: Complex) -> ChainMap:
    """The identity chain map."""
    return ChainMap(
        cpx,
        cpx,
        {deg: Matrix.identity(cpx.field, cpx.dim(deg)) for deg in cpx.degrees},
        check=False,
    )


def zero_map(source: Complex, target: Complex, degree: int = 0) -> ChainMap:
    """The zero chain map of a given degree."""
    return ChainMap(source, target, dict(), degree, check=False)


def shift_map(fmap: ChainMap, power: int) -> ChainMap:
    """`T^p` on morphisms: the same components re-indexed by `p`."""
    power = int(power)
    if power == 0:
        return fmap
    return ChainMap(
        shift(fmap.source, power),
        shift(fmap.target, power),
        {deg + power: mat for deg, mat in fmap.components().items()},
        fmap.degree,
        check=False,
    )


def inverse_map(fmap: ChainMap) -> ChainMap:
    """The inverse of a degree-0 chain isomorphism."""
    if fmap.degree != 0:
        raise ChainMapError("complexes: Only degree-0 maps can be inverted.")
    comps = dict()
    for deg in fmap.source.degrees:
        comp = fmap.component(deg)
        if comp.rows != comp.cols:
            raise ChainMapError(
                "complexes: The map is not invertible at degree {0}.".format(deg)
            )
        comps[deg] = inverse(comp)
    for deg in fmap.target.degrees:
        if fmap.source.dim(deg) != fmap.target.dim(deg):
            raise ChainMapError(
                "complexes: The map is not invertible at degree {0}.".format(deg)
            )
    return ChainMap(fmap.target, fmap.source, comps, check=False)


def restrict_map(fmap: ChainMap, hi: int) -> ChainMap:
    """Restrict a chain map to the source degrees `<= hi`. The target is kept."""
    source = truncate(fmap.source, hi=hi)
    return ChainMap(
        source,
        fmap.target,
        {deg: fmap.component(deg) for deg in source.degrees},
        fmap.degree,
        check=False,
    )


class _Layout:
    """Offsets of the row-major vectorized blocks `X_n : S_n -> T_{n+k}`."""

    def __init__(self, source: Complex, target: Complex, degree: int) -> None:
        self.degree = degree
        self.blocks: Dict[int, Tuple[int, int, int]] = dict()
        offset = 0
        for deg in source.degrees:
            rows, cols = target.dim(deg + degree), source.dim(deg)
            self.blocks[deg] = (offset, rows, cols)
            offset += rows * cols
        self.size = offset

    def span(self, deg: int) -> Optional[Tuple[int, int, int]]:
        return self.blocks.get(deg)

    def pack(self, field: Field, fmap: ChainMap) -> np.ndarray:
        vec = field.zeros(self.size)
        for deg, (offset, rows, cols) in self.blocks.items():
            vec[offset : offset + rows * cols] = fmap.component(deg).data.reshape(-1)
        return vec

    def unpack(self, field: Field, vec: np.ndarray) -> Dict[int, Matrix]:
        return {
            deg: Matrix(field, vec[offset : offset + rows * cols].reshape(rows, cols))
            for deg, (offset, rows, cols) in self.blocks.items()
        }


def _place(arr: np.ndarray, row: int, col: int, block: Matrix) -> None:
    if block.rows and block.cols:
        arr[row : row + block.rows, col : col + block.cols] += block.data


def _equivariance_rows(
    field: Field, source: Complex, target: Complex, layout: _Layout
) -> np.ndarray:
    """Rows of `X_n a_S - a_T X_n = 0` for all basis elements `a`."""
    blocks = list()
    n_acts = source.action_dim or 0
    for deg, (offset, rows, cols) in layout.blocks.items():
        if rows * cols == 0:
            continue
        for idx in range(n_acts):
            act_s = source.act(deg, idx)
            act_t = target.act(deg + layout.degree, idx)
            block = field.zeros((rows * cols, layout.size))
            coeff = Matrix.identity(field, rows).kron(act_s.T) - act_t.kron(
                Matrix.identity(field, cols)
            )
            block[:, offset : offset + rows * cols] = coeff.data
            blocks.append(block)
    if not blocks:
        return field.zeros((0, layout.size))
    return field.reduce(np.concatenate(blocks, axis=0))


def _cycle_conditions(
    source: Complex, target: Complex, layout: _Layout, equivariant: bool
) -> np.ndarray:
    """Rows of `f_{n-1} d_n - d_n f_n = 0` for degree-0 maps, plus the module
    linearity rows if required."""
    field = source.field
    blocks: List[np.ndarray] = list()
    for deg in source.degrees:
        rows_out = target.dim(deg - 1) * source.dim(deg)
        if rows_out == 0:
            continue
        block = field.zeros((rows_out, layout.size))
        prev = layout.span(deg - 1)
        if prev is not None and prev[1] * prev[2] > 0:
            coeff = Matrix.identity(field, target.dim(deg - 1)).kron(source.d(deg).T)
            _place(block, 0, prev[0], coeff)
        cur = layout.span(deg)
        if cur is not None and cur[1] * cur[2] > 0:
            coeff = target.d(deg).kron(Matrix.identity(field, source.dim(deg)))
            _place(block, 0, cur[0], -coeff)
        blocks.append(field.reduce(block))
    if equivariant:
        blocks.append(_equivariance_rows(field, source, target, layout))
    if not blocks:
        return field.zeros((0, layout.size))
    return np.concatenate(blocks, axis=0)


def _homotopy_operator(
    source: Complex, target: Complex, degree: int
) -> Tuple[np.ndarray, _Layout, _Layout]:
    """The linear map `s -> d o s + (-1)^k s o d`.

    Returns
    -------
    #1: `np.ndarray`
        The operator matrix from the `s` layout to the map layout.

    #2: `_Layout`
        The layout of the maps of degree `k`.

    #3: `_Layout`
        The layout of the homotopies of degree `k + 1`.
    """
    field = source.field
    out_layout = _Layout(source, target, degree)
    in_layout = _Layout(source, target, degree + 1)
    arr = field.zeros((out_layout.size, in_layout.size))
    coeff = sign(degree)
    for deg, (row, rows, cols) in out_layout.blocks.items():
        if rows * cols == 0:
            continue
        # d^T_{n+k+1} o s_n
        span = in_layout.span(deg)
        if span is not None and span[1] * span[2] > 0:
            block = target.d(deg + degree + 1).kron(Matrix.identity(field, cols))
            _place(arr, row, span[0], block)
        # (-1)^k s_{n-1} o d^S_n
        span = in_layout.span(deg - 1)
        if span is not None and span[1] * span[2] > 0:
            block = Matrix.identity(field, rows).kron(source.d(deg).T)
            _place(arr, row, span[0], block if coeff > 0 else -block)
    return field.reduce(arr), out_layout, in_layout


def _resolve_equivariant(
    source: Complex, target: Complex, equivariant: Optional[bool]
) -> bool:
    if equivariant is None:
        return is_equivariant_pair(source, target)
    if equivariant and not is_equivariant_pair(source, target):
        raise ChainMapError(
            "complexes: Module maps need matching actions on both complexes."
        )
    return bool(equivariant)


def find_homotopy(
    fmap: ChainMap, gmap: ChainMap, equivariant: Optional[bool] = None
) -> Optional[Dict[int, Matrix]]:
    """Find `s` with `f - g = d o s + (-1)^k s o d`.

    Arguments
    ---------
    fmap, gmap: `ChainMap`
        Two maps sharing the source, the target and the degree.

    equivariant: `bool | None`
        If set, only module maps `s` are allowed. The default is to require
        module maps whenever both complexes carry actions.

    Returns
    -------
    #1: `{int: Matrix} | None`
        The components `s_n : S_n -> T_{n+k+1}`, or `None` if `f` and `g` are not
        homotopic.
    """
    _check_parallel(fmap, gmap)
    source, target, degree = fmap.source, fmap.target, fmap.degree
    field = source.field
    equivariant = _resolve_equivariant(source, target, equivariant)
    operator, out_layout, in_layout = _homotopy_operator(source, target, degree)
    rhs = out_layout.pack(field, fmap - gmap)
    if equivariant:
        eq_rows = _equivariance_rows(field, source, target, in_layout)
        operator = np.concatenate([operator, eq_rows], axis=0)
        rhs = np.concatenate([rhs, field.zeros(eq_rows.shape[0])])
    sol = Solver(Matrix(field, operator)).solve(rhs)
    if sol is None:
        return None
    return in_layout.unpack(field, sol)


def chain_homotopic(
    fmap: ChainMap, gmap: ChainMap, equivariant: Optional[bool] = None
) -> bool:
    """Check whether two chain maps are homotopic.

    The answer is decided by solving one linear system over the field. See
    `find_homotopy()` for the arguments.
    """
    return find_homotopy(fmap, gmap, equivariant) is not None


class HomClasses:
    """A basis of the homotopy classes of degree-0 chain maps `C -> D`."""

    def __init__(
        self, source: Complex, target: Complex, equivariant: Optional[bool] = None
    ) -> None:
        """Initialization.

        Arguments
        ---------
        source: `Complex`
            The source complex `C`.

        target: `Complex`
            The target complex `D`.

        equivariant: `bool | None`
            If set, only module maps are counted. The default is to require module
            maps whenever both complexes carry actions.
        """
        field = source.field
        self.__source = source
        self.__target = target
        self.__equivariant = _resolve_equivariant(source, target, equivariant)
        layout = _Layout(source, target, 0)
        self.__layout = layout

        cycles = kernel_matrix(
            Matrix(field, _cycle_conditions(source, target, layout, self.__equivariant))
        )

        # The null-homotopic maps d o s + s o d with admissible s.
        operator, _, in_layout = _homotopy_operator(source, target, 0)
        if self.__equivariant:
            admissible = kernel_matrix(
                Matrix(field, _equivariance_rows(field, source, target, in_layout))
            )
            boundaries = Matrix(field, operator) @ admissible
        else:
            boundaries = Matrix(field, operator)

        reps = subquotient_representatives(cycles, boundaries)
        self.__representatives = tuple(
            ChainMap(source, target, layout.unpack(field, vec), check=False)
            for vec in reps
        )
        self.__solver = Solver(
            Matrix.hstack(
                field,
                (Matrix.from_columns(field, reps, rows=layout.size), boundaries),
                rows=layout.size,
            )
        )

    @property
    def source(self) -> Complex:
        """Property: The source complex."""
        return self.__source

    @property
    def target(self) -> Complex:
        """Property: The target complex."""
        return self.__target

    @property
    def dim(self) -> int:
        """Property: The number of classes in the basis."""
        return len(self.__representatives)

    @property
    def representatives(self) -> Tuple[ChainMap, ...]:
        """Property: Chain maps representing the basis classes."""
        return self.__representatives

    def coordinates(self, fmap: ChainMap) -> np.ndarray:
        """The coordinates of the class of `fmap` in the basis."""
        if fmap.source != self.__source or fmap.target != self.__target:
            raise ChainMapError("complexes: The map has different ends.")
        sol = self.__solver.solve(self.__layout.pack(fmap.field, fmap))
        if sol is None:
            raise ChainMapError("complexes: The map is not a chain map.")
        return sol[: self.dim]


def hom_classes(
    source: Complex, target: Complex, equivariant: Optional[bool] = None
) -> HomClasses:
    """A basis of homotopy classes of degree-0 chain maps, see `HomClasses`."""
    return HomClasses(source, target, equivariant)


def random_chain_map(
    source: Complex,
    target: Complex,
    rng: np.random.Generator,
    equivariant: Optional[bool] = None,
) -> ChainMap:
    """Draw a random degree-0 chain map among all (module) chain maps."""
    field = source.field
    equivariant = _resolve_equivariant(source, target, equivariant)
    layout = _Layout(source, target, 0)
    cycles = kernel_matrix(
        Matrix(field, _cycle_conditions(source, target, layout, equivariant))
    )
    coeff = field.random(rng, (cycles.cols,))
    vec = cycles.apply(coeff) if cycles.cols else field.zeros(layout.size)
    return ChainMap(source, target, layout.unpack(field, vec))

