# -*- coding: UTF-8 -*-
"""
Koszul
======
@ Ext Ring: complexes

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Tensor products of complexes with the Koszul sign rule, and the suspension
isomorphisms between tensor products and shifts.

Degree `n` of `C (x) D` is the direct sum of the blocks `C_a (x) D_b` with
`a + b = n`, ordered by increasing `a`. Inside a block, `x_i (x) y_j` has the index
`i * dim D_b + j`. The differential is `d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy`.

The one-step isomorphisms are

- `lambda : C (x) TD -> T(C (x) D)`, `x (x) y -> (-1)^|x| x (x) y`,
- `rho : TC (x) D -> T(C (x) D)`, `x (x) y -> x (x) y`.

Their iterates for any `p` are built literally, composing shifted one-step maps and
inverting them for negative `p`.
"""

from typing import Optional

try:
    from typing import Sequence
    from typing import Dict, List, Tuple
except ImportError:
    from collections.abc import Sequence
    from builtins import dict as Dict, list as List, tuple as Tuple

try:
    from typing import Callable
except ImportError:
    from collections.abc import Callable

import numpy as np

from ..errors import ComplexError, ChainMapError
from ..utilities import sign
from ..linalg import Field, Matrix
from .complex import Complex, shift
from .maps import ChainMap, compose, identity_map, shift_map, inverse_map


__all__ = (
    "ActionRule",
    "TensorComplex",
    "tensor",
    "tensor_map",
    "lambda_step",
    "rho_step",
    "iterate_suspension",
    "lambda_iso",
    "rho_iso",
    "unitor_left",
    "unitor_right",
    "associator",
)

ActionRule = Callable[[Sequence[Matrix], Sequence[Matrix]], Sequence[Matrix]]
"""The rule computing the action on a block `X (x) Y` from the actions on `X` and
`Y`."""

Block = Tuple[int, int, int]
"""A block of a tensor complex: `(a, b, offset)`."""


class TensorComplex(Complex):
    """The tensor product of two complexes, keeping the block layout."""

    def __init__(
        self,
        left: Complex,
        right: Complex,
        action_rule: Optional[ActionRule] = None,
        action_dim: Optional[int] = None,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        left: `Complex`
            The left factor `C`.

        right: `Complex`
            The right factor `D`.

        action_rule: `ActionRule | None`
            If given, the tensor product carries the action computed by this rule
            on each block. Both factors need to carry actions.

        action_dim: `int | None`
            The number of acting basis elements of the result.
        """
        field = left.field
        field.check_same(right.field)
        layout: Dict[int, Tuple[Block, ...]] = dict()
        dims: Dict[int, int] = dict()
        if not (left.is_zero or right.is_zero):
            for deg in range(left.lo + right.lo, left.hi + right.hi + 1):
                blocks = list()
                offset = 0
                for a_deg in left.degrees:
                    b_deg = deg - a_deg
                    size = left.dim(a_deg) * right.dim(b_deg)
                    if size == 0:
                        continue
                    blocks.append((a_deg, b_deg, offset))
                    offset += size
                if offset > 0:
                    layout[deg] = tuple(blocks)
                    dims[deg] = offset

        diffs: Dict[int, Matrix] = dict()
        for deg, blocks in layout.items():
            if deg - 1 not in layout:
                continue
            arr = field.zeros((dims[deg - 1], dims[deg]))
            targets = {(a_deg, b_deg): off for a_deg, b_deg, off in layout[deg - 1]}
            for a_deg, b_deg, off in blocks:
                n_a, n_b = left.dim(a_deg), right.dim(b_deg)
                # dx (x) y
                row = targets.get((a_deg - 1, b_deg))
                if row is not None:
                    blk = left.d(a_deg).kron(Matrix.identity(field, n_b))
                    arr[row : row + blk.rows, off : off + blk.cols] += blk.data
                # (-1)^a x (x) dy
                row = targets.get((a_deg, b_deg - 1))
                if row is not None:
                    blk = Matrix.identity(field, n_a).kron(right.d(b_deg))
                    if sign(a_deg) < 0:
                        blk = -blk
                    arr[row : row + blk.rows, off : off + blk.cols] += blk.data
            diffs[deg] = Matrix(field, arr)

        actions = None
        if action_rule is not None:
            if not (left.has_action and right.has_action):
                raise ComplexError(
                    "complexes: Both factors need actions for an action rule."
                )
            actions = dict()
            for deg, blocks in layout.items():
                per_block = [
                    action_rule(left.actions(a_deg), right.actions(b_deg))
                    for a_deg, b_deg, _ in blocks
                ]
                n_acts = len(per_block[0])
                actions[deg] = tuple(
                    Matrix.block_diag(field, [acts[idx] for acts in per_block])
                    for idx in range(n_acts)
                )
            if action_dim is None:
                action_dim = next((len(val) for val in actions.values()), None)
            if action_dim is None:
                action_dim = left.action_dim
        super().__init__(
            field, dims, diffs, actions, action_dim=action_dim, check=False
        )
        self.__left = left
        self.__right = right
        self.__layout = layout

    @property
    def left(self) -> Complex:
        """Property: The left factor."""
        return self.__left

    @property
    def right(self) -> Complex:
        """Property: The right factor."""
        return self.__right

    def blocks(self, deg: int) -> Tuple[Block, ...]:
        """The blocks `(a, b, offset)` of degree `deg`, ordered by `a`."""
        return self.__layout.get(deg, tuple())

    def offset(self, deg: int, a_deg: int) -> Optional[int]:
        """The offset of the block `C_a (x) D_{deg-a}`, or `None` if it vanishes."""
        for blk_a, _, off in self.blocks(deg):
            if blk_a == a_deg:
                return off
        return None

    def position(self, deg: int, a_deg: int, idx_x: int, idx_y: int) -> int:
        """The index of `x_i (x) y_j` with `|x| = a` in degree `deg`."""
        off = self.offset(deg, a_deg)
        if off is None:
            raise ComplexError(
                "complexes: The block ({0}, {1}) vanishes.".format(a_deg, deg - a_deg)
            )
        return off + idx_x * self.__right.dim(deg - a_deg) + idx_y


def tensor(
    left: Complex,
    right: Complex,
    action_rule: Optional[ActionRule] = None,
    action_dim: Optional[int] = None,
) -> TensorComplex:
    """The tensor product `C (x) D` with the Koszul sign rule, see `TensorComplex`."""
    return TensorComplex(left, right, action_rule, action_dim)


def _block_matrix(
    field: Field,
    source: TensorComplex,
    target: TensorComplex,
    deg: int,
    tgt_deg: int,
    fill: Callable[[int, int], Optional[Tuple[int, Matrix]]],
) -> Matrix:
    """Assemble one component block by block.

    `fill(a, b)` returns `(a', block)` placing `block` from the source block `(a, b)`
    of degree `deg` into the target block `(a', tgt_deg - a')`.
    """
    arr = field.zeros((target.dim(tgt_deg), source.dim(deg)))
    for a_deg, b_deg, off in source.blocks(deg):
        res = fill(a_deg, b_deg)
        if res is None:
            continue
        tgt_a, blk = res
        row = target.offset(tgt_deg, tgt_a)
        if row is None or blk.rows * blk.cols == 0:
            continue
        arr[row : row + blk.rows, off : off + blk.cols] += blk.data
    return Matrix(field, arr)


def tensor_map(
    fmap: ChainMap,
    gmap: ChainMap,
    action_rule: Optional[ActionRule] = None,
    action_dim: Optional[int] = None,
) -> ChainMap:
    """The tensor product of two chain maps.

    `(f (x) g)(x (x) y) = (-1)^(q |x|) f(x) (x) g(y)` where `q` is the degree of `g`.
    The result has the degree `p + q`.
    """
    field = fmap.field
    field.check_same(gmap.field)
    p_deg, q_deg = fmap.degree, gmap.degree
    source = tensor(fmap.source, gmap.source, action_rule, action_dim)
    target = tensor(fmap.target, gmap.target, action_rule, action_dim)

    def _fill(a_deg: int, b_deg: int) -> Tuple[int, Matrix]:
        blk = fmap.component(a_deg).kron(gmap.component(b_deg))
        if sign(q_deg * a_deg) < 0:
            blk = -blk
        return a_deg + p_deg, blk

    comps = {
        deg: _block_matrix(field, source, target, deg, deg + p_deg + q_deg, _fill)
        for deg in source.degrees
    }
    return ChainMap(source, target, comps, p_deg + q_deg, check=False)


def lambda_step(
    left: Complex,
    right: Complex,
    koszul_sign: bool = True,
    action_rule: Optional[ActionRule] = None,
    action_dim: Optional[int] = None,
) -> ChainMap:
    """The one-step isomorphism `C (x) TD -> T(C (x) D)`.

    Arguments
    ---------
    left, right: `Complex`
        The complexes `C` and `D`.

    koszul_sign: `bool`
        If not set, the sign `(-1)^|x|` is dropped. The result is then not a chain
        map in general, so it is built without checking. Only used for the
        negative control of the axiom checker.

    action_rule, action_dim:
        Passed to `tensor()`.
    """
    field = left.field
    source = tensor(left, shift(right, 1), action_rule, action_dim)
    inner = tensor(left, right, action_rule, action_dim)
    target = shift(inner, 1)
    comps = dict()
    for deg in source.degrees:
        diag = field.zeros(source.dim(deg))
        for a_deg, b_deg, off in source.blocks(deg):
            size = left.dim(a_deg) * right.dim(b_deg - 1)
            diag[off : off + size] = sign(a_deg) if koszul_sign else 1
        if target.dim(deg) != source.dim(deg):
            raise ChainMapError(
                "complexes: The blocks of the suspension do not match at degree "
                "{0}.".format(deg)
            )
        comps[deg] = Matrix(field, np.diag(field.reduce(diag)))
    return ChainMap(source, target, comps, check=False)


def rho_step(
    left: Complex,
    right: Complex,
    action_rule: Optional[ActionRule] = None,
    action_dim: Optional[int] = None,
) -> ChainMap:
    """The one-step isomorphism `TC (x) D -> T(C (x) D)`. It has no sign."""
    field = left.field
    source = tensor(shift(left, 1), right, action_rule, action_dim)
    target = shift(tensor(left, right, action_rule, action_dim), 1)
    comps = dict()
    for deg in source.degrees:
        if target.dim(deg) != source.dim(deg):
            raise ChainMapError(
                "complexes: The blocks of the suspension do not match at degree "
                "{0}.".format(deg)
            )
        comps[deg] = Matrix.identity(field, source.dim(deg))
    return ChainMap(source, target, comps, check=False)


def iterate_suspension(
    step: Callable[[Complex, Complex], ChainMap],
    tensor_fn: Callable[[Complex, Complex], Complex],
    left: Complex,
    right: Complex,
    power: int,
    side: str,
) -> ChainMap:
    """The iterate of a one-step suspension isomorphism.

    For `side="left"` this is `lambda_p : C (x) T^p D -> T^p(C (x) D)`, defined by
    `lambda_0 = 1`, `lambda_p = T^(p-1) lambda o ... o T lambda o lambda` for
    `p > 0`, and `lambda_(-p) = T^(-p) lambda_p^(-1)`. For `side="right"` the same
    recipe gives `rho_p : T^p C (x) D -> T^p(C (x) D)`.

    Arguments
    ---------
    step: `(Complex, Complex) -> ChainMap`
        The one-step isomorphism.

    tensor_fn: `(Complex, Complex) -> Complex`
        The tensor product, only used for `p = 0`.

    left, right: `Complex`
        The complexes `C` and `D`.

    power: `int`
        The exponent `p`.

    side: `"left" | "right"`
        Which factor is suspended.
    """
    if side not in ("left", "right"):
        raise ValueError("complexes: side needs to be 'left' or 'right'.")
    power = int(power)
    if power == 0:
        return identity_map(tensor_fn(left, right))
    if power < 0:
        back = -power
        if side == "left":
            forward = iterate_suspension(
                step, tensor_fn, left, shift(right, power), back, side
            )
        else:
            forward = iterate_suspension(
                step, tensor_fn, shift(left, power), right, back, side
            )
        return shift_map(inverse_map(forward), power)
    res: Optional[ChainMap] = None
    for idx in range(power):
        if side == "left":
            one = step(left, shift(right, power - 1 - idx))
        else:
            one = step(shift(left, power - 1 - idx), right)
        one = shift_map(one, idx)
        res = one if res is None else compose(one, res)
    assert res is not None
    return res


def lambda_iso(
    left: Complex,
    right: Complex,
    power: int,
    koszul_sign: bool = True,
) -> ChainMap:
    """`lambda_p : C (x) T^p D -> T^p(C (x) D)` for complexes of vector spaces.

    On `x (x) y` it is the multiplication by `(-1)^(p |x|)`.
    """
    return iterate_suspension(
        lambda cpx_x, cpx_y: lambda_step(cpx_x, cpx_y, koszul_sign),
        tensor,
        left,
        right,
        power,
        "left",
    )


def rho_iso(left: Complex, right: Complex, power: int) -> ChainMap:
    """`rho_p : T^p C (x) D -> T^p(C (x) D)` for complexes of vector spaces."""
    return iterate_suspension(rho_step, tensor, left, right, power, "right")


def _check_unit(unit: Complex) -> None:
    if unit.lo != 0 or unit.hi != 0 or unit.dim(0) != 1:
        raise ComplexError(
            "complexes: The unit needs to be one-dimensional in degree 0."
        )


def unitor_left(
    cpx: Complex,
    unit: Complex,
    action_rule: Optional[ActionRule] = None,
    action_dim: Optional[int] = None,
) -> ChainMap:
    """The left unitor `l : e (x) C -> C` for a one-dimensional unit `e`."""
    _check_unit(unit)
    source = tensor(unit, cpx, action_rule, action_dim)
    return ChainMap(
        source,
        cpx,
        {deg: Matrix.identity(cpx.field, cpx.dim(deg)) for deg in cpx.degrees},
        check=False,
    )


def unitor_right(
    cpx: Complex,
    unit: Complex,
    action_rule: Optional[ActionRule] = None,
    action_dim: Optional[int] = None,
) -> ChainMap:
    """The right unitor `r : C (x) e -> C` for a one-dimensional unit `e`."""
    _check_unit(unit)
    source = tensor(cpx, unit, action_rule, action_dim)
    return ChainMap(
        source,
        cpx,
        {deg: Matrix.identity(cpx.field, cpx.dim(deg)) for deg in cpx.degrees},
        check=False,
    )


def associator(
    first: Complex,
    second: Complex,
    third: Complex,
    action_rule: Optional[ActionRule] = None,
    action_dim: Optional[int] = None,
) -> ChainMap:
    """The re-bracketing `(C (x) D) (x) E -> C (x) (D (x) E)`.

    It is a permutation of the basis without any sign.
    """
    field = first.field
    left_in = tensor(first, second, action_rule, action_dim)
    source = tensor(left_in, third, action_rule, action_dim)
    right_in = tensor(second, third, action_rule, action_dim)
    target = tensor(first, right_in, action_rule, action_dim)
    comps = dict()
    for deg in source.degrees:
        rows: List[int] = list()
        cols: List[int] = list()
        for m_deg, c_deg, _ in source.blocks(deg):
            for a_deg, b_deg, _ in left_in.blocks(m_deg):
                n_a, n_b, n_c = first.dim(a_deg), second.dim(b_deg), third.dim(c_deg)
                for idx_a in range(n_a):
                    for idx_b in range(n_b):
                        pos_ab = left_in.position(m_deg, a_deg, idx_a, idx_b)
                        for idx_c in range(n_c):
                            cols.append(source.position(deg, m_deg, pos_ab, idx_c))
                            pos_bc = right_in.position(
                                b_deg + c_deg, b_deg, idx_b, idx_c
                            )
                            rows.append(target.position(deg, a_deg, idx_a, pos_bc))
        arr = field.zeros((target.dim(deg), source.dim(deg)))
        arr[rows, cols] = field.convert(1)
        comps[deg] = Matrix(field, arr)
    return ChainMap(source, target, comps, check=False)
