from enum import Enum
from fractions import Fraction
from typing import Iterable, Tuple, Union

from laplat.core.errors import InvalidInputError, NotInHyperplaneError

LatticePoint = Tuple[int, ...]
RationalPoint = Tuple[Fraction, ...]

Number = Union[int, Fraction, str]


class SimplexOrientation(str, Enum):
    """Which regular simplex induces the distance: the standard one or its negative"""

    TRI = "tri"
    TRI_BAR = "tri_bar"


def _to_fraction(value: Number) -> Fraction:
    if isinstance(value, bool):
        raise InvalidInputError("booleans are not coordinates", detail={"value": value})
    if isinstance(value, float):
        raise InvalidInputError("floating coordinates are not accepted", detail={"value": value})
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InvalidInputError(f"not a rational number: {value!r}", detail={"value": str(value)}) from e


def as_rational_point(coords: Iterable[Number]) -> RationalPoint:
    """Validate membership in H_0 and return an exact rational tuple"""
    point = tuple(_to_fraction(c) for c in coords)
    if sum(point) != 0:
        raise NotInHyperplaneError(
            "coordinates must sum to zero", detail={"point": [str(c) for c in point]}
        )
    return point


def as_lattice_point(coords: Iterable[Number]) -> LatticePoint:
    """Validate membership in A_n and return an integer tuple"""
    point = as_rational_point(coords)
    if any(c.denominator != 1 for c in point):
        raise InvalidInputError(
            "lattice points need integer coordinates", detail={"point": [str(c) for c in point]}
        )
    return tuple(int(c) for c in point)
