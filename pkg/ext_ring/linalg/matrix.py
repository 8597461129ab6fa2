# -*- coding: UTF-8 -*-
"""
Matrix
======
@ Ext Ring: linalg

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Exact dense matrices and the elimination kernels used by every other module:
reduced row echelon form, kernels, particular solutions, subquotients and
quotients.

Vectors are 1-D `numpy` arrays in the storage type of their field. All bases follow
the echelon conventions below, so the representatives of cohomology classes are
reproducible across runs:

- `kernel_basis` sets each free variable to `1` in turn, in increasing column order.
- `solve` returns the particular solution with all free variables set to `0`.
"""

import hashlib

from typing import Any, Optional

try:
    from typing import Sequence
    from typing import List, Tuple
except ImportError:
    from collections.abc import Sequence
    from builtins import list as List, tuple as Tuple

import numpy as np
from typing_extensions import Self

from ..errors import ShapeError, ImageNotInKernelError
from .fields import Field, Scalar


__all__ = (
    "Matrix",
    "rref",
    "rank",
    "kernel_basis",
    "kernel_matrix",
    "solve",
    "Solver",
    "subquotient_representatives",
    "quotient_maps",
    "coordinates_in",
    "inverse",
)


class Matrix:
    """Immutable exact matrix over a field.

    The entries are kept in a read-only `numpy` array of the field storage type.
    Arithmetic between matrices over different fields raises `FieldMismatchError`.
    """

    def __init__(self, field: Field, data: Any) -> None:
        """Initialization.

        Arguments
        ---------
        field: `Field`
            The field of the entries.

        data: `np.ndarray | [[Any]]`
            A 2-D array or nested sequences. The values are converted to canonical
            field elements, so a copy is always made.
        """
        arr = field.array(data)
        if arr.ndim != 2:
            raise ShapeError(
                "linalg: A matrix needs 2-D data, get the shape {0}.".format(arr.shape)
            )
        arr.flags.writeable = False
        self.__field = field
        self.__data = arr
        self.__fingerprint: Optional[str] = None

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Self:
        """Create a zero matrix."""
        return cls(field, field.zeros((rows, cols)))

    @classmethod
    def identity(cls, field: Field, size: int) -> Self:
        """Create an identity matrix."""
        return cls(field, field.eye(size))

    @classmethod
    def from_rows(
        cls, field: Field, rows: Sequence[Any], cols: Optional[int] = None
    ) -> Self:
        """Create a matrix from a list of rows.

        `cols` is only needed for fixing the shape when `rows` is empty.
        """
        if len(rows) == 0:
            return cls.zeros(field, 0, 0 if cols is None else cols)
        return cls(field, np.stack([field.array(row) for row in rows], axis=0))

    @classmethod
    def from_columns(
        cls, field: Field, columns: Sequence[Any], rows: Optional[int] = None
    ) -> Self:
        """Create a matrix from a list of column vectors.

        `rows` is only needed for fixing the shape when `columns` is empty.
        """
        if len(columns) == 0:
            return cls.zeros(field, 0 if rows is None else rows, 0)
        return cls(field, np.stack([field.array(col) for col in columns], axis=1))

    @classmethod
    def hstack(cls, field: Field, mats: Sequence["Matrix"], rows: int) -> Self:
        """Concatenate matrices horizontally. `rows` fixes the shape of no matrices."""
        for mat in mats:
            field.check_same(mat.field)
        if not mats:
            return cls.zeros(field, rows, 0)
        return cls(field, np.concatenate([mat.data for mat in mats], axis=1))

    @classmethod
    def vstack(cls, field: Field, mats: Sequence["Matrix"], cols: int) -> Self:
        """Concatenate matrices vertically. `cols` fixes the shape of no matrices."""
        for mat in mats:
            field.check_same(mat.field)
        if not mats:
            return cls.zeros(field, 0, cols)
        return cls(field, np.concatenate([mat.data for mat in mats], axis=0))

    @classmethod
    def block_diag(cls, field: Field, mats: Sequence["Matrix"]) -> Self:
        """Assemble a block-diagonal matrix."""
        rows = sum(mat.rows for mat in mats)
        cols = sum(mat.cols for mat in mats)
        res = field.zeros((rows, cols))
        r_0 = c_0 = 0
        for mat in mats:
            field.check_same(mat.field)
            res[r_0 : r_0 + mat.rows, c_0 : c_0 + mat.cols] = mat.data
            r_0 += mat.rows
            c_0 += mat.cols
        return cls(field, res)

    @property
    def field(self) -> Field:
        """Property: The field of the entries."""
        return self.__field

    @property
    def data(self) -> np.ndarray:
        """Property: The read-only array of the entries."""
        return self.__data

    @property
    def shape(self) -> Tuple[int, int]:
        """Property: The shape `(rows, cols)`."""
        return (int(self.__data.shape[0]), int(self.__data.shape[1]))

    @property
    def rows(self) -> int:
        """Property: The number of rows."""
        return int(self.__data.shape[0])

    @property
    def cols(self) -> int:
        """Property: The number of columns."""
        return int(self.__data.shape[1])

    @property
    def T(self) -> "Matrix":
        """Property: The transpose."""
        return Matrix(self.__field, self.__data.T)

    @property
    def fingerprint(self) -> str:
        """Property: The SHA-256 digest of the field, the shape and the entries."""
        if self.__fingerprint is None:
            hasher = hashlib.sha256()
            hasher.update("{0}|{1}x{2}|".format(self.__field.tag, *self.shape).encode())
            if self.__data.dtype == object:
                hasher.update("|".join(str(val) for val in self.__data.flat).encode())
            else:
                hasher.update(np.ascontiguousarray(self.__data).tobytes())
            self.__fingerprint = hasher.hexdigest()
        return self.__fingerprint

    def is_zero(self) -> bool:
        """Check whether all entries vanish."""
        return self.__field.is_zero(self.__data)

    def entry(self, row: int, col: int) -> Scalar:
        """Get one entry as a `Scalar`."""
        return Scalar(self.__data[row, col], self.__field)

    def column(self, col: int) -> np.ndarray:
        """Get one column as a vector."""
        return self.__data[:, col].copy()

    def columns(self) -> List[np.ndarray]:
        """Get all columns as vectors."""
        return [self.__data[:, idx].copy() for idx in range(self.cols)]

    def to_lists(self) -> List[List[str]]:
        """Get the entries as nested lists of formatted strings."""
        return [[self.__field.format(val) for val in row] for row in self.__data]

    def apply(self, vec: Any) -> np.ndarray:
        """Multiply this matrix with a vector."""
        vec = self.__field.array(vec)
        if vec.shape != (self.cols,):
            raise ShapeError(
                "linalg: Cannot apply a {0} matrix to a vector of shape {1}.".format(
                    self.shape, vec.shape
                )
            )
        if self.cols == 0:
            return self.__field.zeros(self.rows)
        return self.__field.reduce(self.__data @ vec)

    def scale(self, coeff: Any) -> "Matrix":
        """Multiply all entries by a scalar."""
        if isinstance(coeff, Scalar):
            self.__field.check_same(coeff.field)
            coeff = coeff.value
        coeff = self.__field.convert(coeff)
        return Matrix(self.__field, self.__data * coeff)

    def kron(self, other: "Matrix") -> "Matrix":
        """The Kronecker product. Row `(i, k)` of the result is `i * other.rows + k`."""
        self.__field.check_same(other.field)
        (m_1, n_1), (m_2, n_2) = self.shape, other.shape
        res = self.__data[:, None, :, None] * other.data[None, :, None, :]
        return Matrix(self.__field, res.reshape(m_1 * m_2, n_1 * n_2))

    def __check_shape(self, other: "Matrix") -> None:
        self.__field.check_same(other.field)
        if self.shape != other.shape:
            raise ShapeError(
                "linalg: The shapes {0} and {1} do not match.".format(
                    self.shape, other.shape
                )
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self.__check_shape(other)
        return Matrix(self.__field, self.__data + other.data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self.__check_shape(other)
        return Matrix(self.__field, self.__data - other.data)

    def __neg__(self) -> "Matrix":
        return Matrix(self.__field, -self.__data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self.__field.check_same(other.field)
        if self.cols != other.rows:
            raise ShapeError(
                "linalg: Cannot multiply the shapes {0} and {1}.".format(
                    self.shape, other.shape
                )
            )
        if self.cols == 0:
            return Matrix.zeros(self.__field, self.rows, other.cols)
        return Matrix(self.__field, self.__data @ other.data)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.__field == other.field
            and self.shape == other.shape
            and bool(np.all(self.__data == other.data))
        )

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __repr__(self) -> str:
        return "<Matrix {0} {1}x{2}>".format(self.__field.tag, *self.shape)


def _rref_array(
    field: Field, arr: np.ndarray, limit: Optional[int] = None
) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form of a raw array.

    Pivots are only searched in the first `limit` columns, while the row
    operations act on the whole rows.
    """
    res = field.reduce(np.array(arr, copy=True))
    n_rows, n_cols = res.shape
    limit = n_cols if limit is None else limit
    pivots: List[int] = []
    row = 0
    for col in range(limit):
        if row >= n_rows:
            break
        nonzero = np.flatnonzero(res[row:, col] != 0)
        if nonzero.size == 0:
            continue
        found = row + int(nonzero[0])
        if found != row:
            res[[row, found]] = res[[found, row]]
        res[row] = field.reduce(res[row] * field.inv(res[row, col]))
        others = np.flatnonzero(res[:, col] != 0)
        others = others[others != row]
        if others.size > 0:
            res[others] = field.reduce(
                res[others] - np.outer(res[others, col], res[row])
            )
        pivots.append(col)
        row += 1
    return res, pivots


def rref(mat: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form.

    Returns
    -------
    #1: `Matrix`
        The reduced row echelon form `R`.

    #2: `(int, ...)`
        The strictly increasing pivot columns. The rank is their number.
    """
    res, pivots = _rref_array(mat.field, mat.data)
    return Matrix(mat.field, res), tuple(pivots)


def rank(mat: Matrix) -> int:
    """The rank of a matrix."""
    if mat.rows == 0 or mat.cols == 0:
        return 0
    return len(_rref_array(mat.field, mat.data)[1])


def kernel_basis(mat: Matrix) -> List[np.ndarray]:
    """A basis of `{v : M v = 0}`.

    For each free column `f` (increasing), the basis vector has `v[f] = 1`, zeros on
    the other free columns and the pivot entries fixed by the echelon form.
    """
    field = mat.field
    res, pivots = _rref_array(field, mat.data)
    pivot_set = set(pivots)
    basis = list()
    for free in range(mat.cols):
        if free in pivot_set:
            continue
        vec = field.zeros(mat.cols)
        vec[free] = field.convert(1)
        for idx, col in enumerate(pivots):
            vec[col] = -res[idx, free]
        basis.append(field.reduce(vec))
    return basis


def kernel_matrix(mat: Matrix) -> Matrix:
    """The kernel basis of `mat` stored as the columns of a matrix."""
    return Matrix.from_columns(mat.field, kernel_basis(mat), rows=mat.cols)


class Solver:
    """Factorized matrix for solving `M x = b` with many right-hand sides.

    The factorization is the reduced row echelon form of `[M | I]`, which gives an
    invertible transform `E` with `E M = R`.
    """

    def __init__(self, mat: Matrix) -> None:
        """Initialization.

        Arguments
        ---------
        mat: `Matrix`
            The matrix `M` to be factorized.
        """
        field = mat.field
        self.__mat = mat
        aug = np.concatenate([mat.data, field.eye(mat.rows)], axis=1)
        res, pivots = _rref_array(field, aug, limit=mat.cols)
        self.__pivots = tuple(pivots)
        self.__transform = res[:, mat.cols :]
        self.__transform.flags.writeable = False

    @property
    def matrix(self) -> Matrix:
        """Property: The factorized matrix."""
        return self.__mat

    @property
    def pivots(self) -> Tuple[int, ...]:
        """Property: The pivot columns of `M`."""
        return self.__pivots

    @property
    def rank(self) -> int:
        """Property: The rank of `M`."""
        return len(self.__pivots)

    def solve(self, vec: Any) -> Optional[np.ndarray]:
        """Solve `M x = b`.

        Returns
        -------
        #1: `np.ndarray | None`
            The echelon particular solution, or `None` if there is no solution.
        """
        field = self.__mat.field
        vec = field.array(vec)
        if vec.shape != (self.__mat.rows,):
            raise ShapeError(
                "linalg: The right-hand side needs the shape ({0},), get {1}.".format(
                    self.__mat.rows, vec.shape
                )
            )
        if self.__mat.rows == 0:
            return field.zeros(self.__mat.cols)
        coeff = field.reduce(self.__transform @ vec)
        if not field.is_zero(coeff[self.rank :]):
            return None
        res = field.zeros(self.__mat.cols)
        for idx, col in enumerate(self.__pivots):
            res[col] = coeff[idx]
        return res

    def solve_many(self, rhs: Matrix) -> Optional[Matrix]:
        """Solve `M X = B` column by column.

        Returns
        -------
        #1: `Matrix | None`
            The echelon particular solutions as columns, or `None` if any column
            has no solution.
        """
        field = self.__mat.field
        field.check_same(rhs.field)
        if rhs.rows != self.__mat.rows:
            raise ShapeError(
                "linalg: The right-hand side needs {0} rows, get {1}.".format(
                    self.__mat.rows, rhs.rows
                )
            )
        if self.__mat.rows == 0 or rhs.cols == 0:
            return Matrix.zeros(field, self.__mat.cols, rhs.cols)
        coeff = field.reduce(self.__transform @ rhs.data)
        if not field.is_zero(coeff[self.rank :]):
            return None
        res = field.zeros((self.__mat.cols, rhs.cols))
        for idx, col in enumerate(self.__pivots):
            res[col] = coeff[idx]
        return Matrix(field, res)

    def contains(self, vec: Any) -> bool:
        """Check whether `vec` is in the column space of `M`."""
        return self.solve(vec) is not None


def solve(mat: Matrix, vec: Any) -> Optional[np.ndarray]:
    """Solve `M x = b`, returning `None` when there is no solution."""
    return Solver(mat).solve(vec)


def subquotient_representatives(
    ker_basis: Matrix, im_basis: Matrix
) -> List[np.ndarray]:
    """Representatives of a basis of `span(ker) / span(im)`.

    Arguments
    ---------
    ker_basis: `Matrix`
        The spanning vectors of the kernel, stored as columns.

    im_basis: `Matrix`
        The spanning vectors of the image, stored as columns. They need to be in
        the span of `ker_basis`.

    Returns
    -------
    #1: `[np.ndarray]`
        The columns of `ker_basis` that are pivots of `[im | ker]`. Their number is
        `dim span(ker) - dim span(im)`.
    """
    field = ker_basis.field
    field.check_same(im_basis.field)
    if ker_basis.rows != im_basis.rows:
        raise ShapeError(
            "linalg: The kernel lives in dimension {0} but the image in {1}.".format(
                ker_basis.rows, im_basis.rows
            )
        )
    n_im = im_basis.cols
    stacked = Matrix.hstack(field, (im_basis, ker_basis), rows=ker_basis.rows)
    _, pivots = _rref_array(field, stacked.data)
    rank_ker = rank(ker_basis)
    if len(pivots) != rank_ker:
        raise ImageNotInKernelError("linalg: image not contained in kernel.")
    return [ker_basis.column(col - n_im) for col in pivots if col >= n_im]


def quotient_maps(relations: Matrix) -> Tuple[Matrix, Matrix]:
    """Projection and section of the quotient `V / R`.

    Arguments
    ---------
    relations: `Matrix`
        The spanning vectors of `R` stored as columns. `V = k^rows`.

    Returns
    -------
    #1: `Matrix`
        The projection `V -> V / R` with the kernel `R`.

    #2: `Matrix`
        The section `V / R -> V` sending the quotient basis to standard vectors.
        The chosen standard vectors are the non-pivot columns of `[R | I]`.
    """
    field = relations.field
    dim = relations.rows
    n_rel = relations.cols
    aug = np.concatenate([relations.data, field.eye(dim)], axis=1)
    _, pivots = _rref_array(field, aug)
    rel_pivots = [col for col in pivots if col < n_rel]
    complement = [col - n_rel for col in pivots if col >= n_rel]
    section = field.zeros((dim, len(complement)))
    for idx, col in enumerate(complement):
        section[col, idx] = field.convert(1)
    basis = np.concatenate([relations.data[:, rel_pivots], section], axis=1)
    inv = inverse(Matrix(field, basis))
    projection = inv.data[len(rel_pivots) :]
    return Matrix(field, projection), Matrix(field, section)


def coordinates_in(basis: Matrix, vec: Any) -> Optional[np.ndarray]:
    """Coefficients of `vec` in independent vectors stored as columns, or `None`."""
    return solve(basis, vec)


def inverse(mat: Matrix) -> Matrix:
    """The exact inverse of a square invertible matrix."""
    if mat.rows != mat.cols:
        raise ShapeError(
            "linalg: Only square matrices can be inverted, get {0}.".format(mat.shape)
        )
    field = mat.field
    size = mat.rows
    aug = np.concatenate([mat.data, field.eye(size)], axis=1)
    res, pivots = _rref_array(field, aug, limit=size)
    if len(pivots) != size:
        raise ValueError("linalg: The matrix is singular.")
    return Matrix(field, res[:, size:])

