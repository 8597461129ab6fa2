# -*- coding: UTF-8 -*-
"""
Fields
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
The base fields of all computations: prime fields `GF(p)` and the rationals `QQ`.

Entries over `GF(p)` are stored in `int64` arrays and always reduced to `[0, p)`.
Entries over `QQ` are stored in `object` arrays of `fractions.Fraction`, so that the
numerators and denominators never overflow.
"""

import abc
import numbers
import fractions

from typing import Any, Union

try:
    from typing import Tuple
except ImportError:
    from builtins import tuple as Tuple

import numpy as np
from typing_extensions import Self

from ..errors import FieldMismatchError


__all__ = (
    "Field",
    "PrimeField",
    "RationalField",
    "Scalar",
    "parse_field",
    "is_prime",
)

Fraction = fractions.Fraction
ScalarLike = Union[int, str, Fraction, np.integer]


def is_prime(value: int) -> bool:
    """Check whether `value` is a prime number by trial division."""
    value = int(value)
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0:
        return False
    div = 3
    while div * div <= value:
        if value % div == 0:
            return False
        div += 2
    return True


def _as_fraction(value: Any) -> Fraction:
    """Convert one exact value to a fraction. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float, np.floating)):
        raise TypeError(
            "linalg: Only exact values are accepted, get {0}.".format(repr(value))
        )
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(
        "linalg: Cannot convert {0} to an exact value.".format(repr(value))
    )


_to_fraction = np.frompyfunc(_as_fraction, 1, 1)


class Field(abc.ABC):
    """The abstract base field.

    A field knows how to store its elements in `numpy` arrays, how to bring any
    computed array back to the canonical representation and how to invert a
    single nonzero element.
    """

    @property
    @abc.abstractmethod
    def tag(self) -> str:
        """Property: The field tag, e.g. `"GF(3)"` or `"QQ"`."""
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def characteristic(self) -> int:
        """Property: The characteristic of the field."""
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def dtype(self) -> "np.dtype[Any]":
        """Property: The `numpy` data type used for storing the elements."""
        raise NotImplementedError

    @abc.abstractmethod
    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Bring an array computed by `numpy` operators to the canonical form.

        The returned value is always a new array.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def convert(self, value: ScalarLike) -> Any:
        """Convert one exact value into the canonical element of this field."""
        raise NotImplementedError

    @abc.abstractmethod
    def inv(self, value: Any) -> Any:
        """Get the multiplicative inverse of a nonzero element."""
        raise NotImplementedError

    @abc.abstractmethod
    def random(self, rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
        """Draw an array of random elements."""
        raise NotImplementedError

    @abc.abstractmethod
    def to_json(self) -> Any:
        """The JSON form of the field specification."""
        raise NotImplementedError

    def array(self, data: Any) -> np.ndarray:
        """Convert nested sequences or arrays into a canonical array of this field."""
        if isinstance(data, np.ndarray) and data.dtype == self.dtype:
            return self.reduce(data)
        arr = np.asarray(data, dtype=object)
        if arr.size == 0:
            return np.zeros(arr.shape, dtype=self.dtype)
        return self.reduce(_to_fraction(arr).reshape(arr.shape))

    def zeros(self, shape: Union[int, Tuple[int, ...]]) -> np.ndarray:
        """Create an array of zeros."""
        return self.reduce(np.zeros(shape, dtype=np.int64))

    def eye(self, size: int) -> np.ndarray:
        """Create an identity array."""
        return self.reduce(np.eye(size, dtype=np.int64))

    def is_zero(self, arr: np.ndarray) -> bool:
        """Check whether all entries of an array vanish."""
        return not bool(np.any(arr != 0))

    def format(self, value: Any) -> str:
        """Format one element as text, e.g. `"2"` or `"-1/3"`."""
        return str(self.convert(value))

    def check_same(self, other: "Field") -> None:
        """Raise `FieldMismatchError` if `other` is a different field."""
        if self != other:
            raise FieldMismatchError(
                "linalg: Cannot mix the fields {0} and {1}.".format(
                    self.tag, other.tag
                )
            )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return self.tag == other.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    def __repr__(self) -> str:
        return "<{0} {1}>".format(self.__class__.__name__, self.tag)


class PrimeField(Field):
    """The prime field `GF(p)`."""

    def __init__(self, p: int) -> None:
        """Initialization.

        Arguments
        ---------
        p: `int`
            The characteristic. It needs to be a prime smaller than `2**20`, so that
            a product of two reduced entries and the sums of a matrix product stay
            inside `int64`.
        """
        p = int(p)
        if not is_prime(p):
            raise ValueError("linalg: The modulus {0} is not a prime.".format(p))
        if p >= 2**20:
            raise ValueError(
                "linalg: The modulus {0} is too large, need p < 2**20.".format(p)
            )
        self.__p = p

    @property
    def p(self) -> int:
        """Property: The modulus."""
        return self.__p

    @property
    def tag(self) -> str:
        """Property: The field tag."""
        return "GF({0})".format(self.__p)

    @property
    def characteristic(self) -> int:
        """Property: The characteristic of the field."""
        return self.__p

    @property
    def dtype(self) -> "np.dtype[Any]":
        """Property: The `numpy` data type used for storing the elements."""
        return np.dtype(np.int64)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if arr.dtype == object:
            arr = self.array(arr)
        return np.mod(arr, self.__p).astype(np.int64)

    def array(self, data: Any) -> np.ndarray:
        if isinstance(data, np.ndarray) and data.dtype.kind in "iub":
            return np.mod(data.astype(np.int64), self.__p)
        arr = np.asarray(data, dtype=object)
        res = np.zeros(arr.shape, dtype=np.int64)
        for idx, val in np.ndenumerate(arr):
            res[idx] = self.convert(val)
        return res

    def convert(self, value: ScalarLike) -> int:
        frac = _as_fraction(value)
        if frac.denominator % self.__p == 0:
            raise ZeroDivisionError(
                "linalg: {0} has no image in {1}.".format(frac, self.tag)
            )
        return (frac.numerator * pow(frac.denominator, -1, self.__p)) % self.__p

    def inv(self, value: Any) -> int:
        value = int(value) % self.__p
        if value == 0:
            raise ZeroDivisionError("linalg: Cannot invert 0 in {0}.".format(self.tag))
        return pow(value, -1, self.__p)

    def random(self, rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
        return rng.integers(0, self.__p, size=shape, dtype=np.int64)

    def to_json(self) -> Any:
        return {"p": self.__p}

    def format(self, value: Any) -> str:
        return str(int(value) % self.__p)


class RationalField(Field):
    """The field of rational numbers `QQ`, with exact fractions."""

    @property
    def tag(self) -> str:
        """Property: The field tag."""
        return "QQ"

    @property
    def characteristic(self) -> int:
        """Property: The characteristic of the field."""
        return 0

    @property
    def dtype(self) -> "np.dtype[Any]":
        """Property: The `numpy` data type used for storing the elements."""
        return np.dtype(object)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        arr = np.asarray(arr)
        if arr.size == 0:
            return np.zeros(arr.shape, dtype=object)
        return np.asarray(_to_fraction(arr), dtype=object).reshape(arr.shape)

    def convert(self, value: ScalarLike) -> Fraction:
        return _as_fraction(value)

    def inv(self, value: Any) -> Fraction:
        value = _as_fraction(value)
        if value == 0:
            raise ZeroDivisionError("linalg: Cannot invert 0 in QQ.")
        return 1 / value

    def random(self, rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
        nums = rng.integers(-3, 4, size=shape)
        dens = rng.integers(1, 4, size=shape)
        res = np.empty(shape, dtype=object)
        for idx in np.ndindex(*shape):
            res[idx] = Fraction(int(nums[idx]), int(dens[idx]))
        return res

    def to_json(self) -> Any:
        return "Q"


def parse_field(spec: Any) -> Field:
    """Parse a field specification.

    Arguments
    ---------
    spec: `int | str | {"p": int} | Field`
        Accepted forms are `3`, `"3"`, `"GF(3)"`, `{"p": 3}` for prime fields and
        `"Q"`, `"QQ"`, `"0"` for the rationals.

    Returns
    -------
    #1: `Field`
        The parsed field.
    """
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, dict):
        if set(spec.keys()) != {"p"}:
            raise ValueError(
                "linalg: The field object needs exactly one key 'p', get {0}.".format(
                    sorted(spec.keys())
                )
            )
        spec = spec["p"]
    if isinstance(spec, bool):
        raise ValueError("linalg: Invalid field specification {0}.".format(spec))
    if isinstance(spec, (int, np.integer)):
        if int(spec) == 0:
            return RationalField()
        return PrimeField(int(spec))
    if isinstance(spec, str):
        text = spec.strip()
        if text.upper() in ("Q", "QQ", "0"):
            return RationalField()
        if text.upper().startswith("GF(") and text.endswith(")"):
            text = text[3:-1]
        try:
            return PrimeField(int(text))
        except ValueError as err:
            raise ValueError(
                "linalg: Invalid field specification {0}. {1}".format(
                    repr(spec), err
                )
            ) from err
    raise ValueError("linalg: Invalid field specification {0}.".format(repr(spec)))


class Scalar:
    """One element of a field.

    The value is always canonical: a residue in `[0, p)` or a fraction in lowest
    terms. Arithmetic between scalars of different fields raises
    `FieldMismatchError`.
    """

    __slots__ = ("__value", "__field")

    def __init__(self, value: ScalarLike, field: Field) -> None:
        self.__field = field
        self.__value = field.convert(value)

    @property
    def value(self) -> Any:
        """Property: The canonical value."""
        return self.__value

    @property
    def field(self) -> Field:
        """Property: The field of this scalar."""
        return self.__field

    def __coerce(self, other: Any) -> "Scalar":
        if isinstance(other, Scalar):
            self.__field.check_same(other.field)
            return other
        return Scalar(other, self.__field)

    def __add__(self, other: Any) -> Self:
        other = self.__coerce(other)
        return self.__class__(self.__value + other.value, self.__field)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Self:
        other = self.__coerce(other)
        return self.__class__(self.__value - other.value, self.__field)

    def __rsub__(self, other: Any) -> Self:
        other = self.__coerce(other)
        return self.__class__(other.value - self.__value, self.__field)

    def __mul__(self, other: Any) -> Self:
        other = self.__coerce(other)
        return self.__class__(self.__value * other.value, self.__field)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Self:
        other = self.__coerce(other)
        return self.__class__(
            self.__value * self.__field.inv(other.value), self.__field
        )

    def __neg__(self) -> Self:
        return self.__class__(-self.__value, self.__field)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Scalar):
            return self.__field == other.field and self.__value == other.value
        try:
            return self.__value == self.__field.convert(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.__field.tag, self.__value))

    def __bool__(self) -> bool:
        return self.__value != 0

    def __str__(self) -> str:
        return str(self.__value)

    def __repr__(self) -> str:
        return "Scalar({0}, {1})".format(str(self.__value), self.__field.tag)
