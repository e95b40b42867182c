"""Input coercion shared by the library entry points and the CLI."""

from __future__ import annotations

import numbers
from typing import Iterable, Optional

from .errors import DimensionError, DomainError


def as_int(value, name: str = "value") -> int:
    """Accept Python/NumPy integers and decimal strings; reject floats and bools."""
    if isinstance(value, bool):
        raise DomainError(f"{name}: booleans are not integers")
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return int(text, 10)
        except ValueError:
            raise DomainError(f"{name}: {value!r} is not a decimal integer") from None
    raise DomainError(f"{name}: expected an integer, got {type(value).__name__}")


def as_int_vector(values: Iterable, name: str = "vector",
                  length: Optional[int] = None) -> tuple[int, ...]:
    if isinstance(values, (str, bytes)):
        raise DomainError(f"{name}: expected a sequence of integers")
    try:
        vec = tuple(as_int(v, f"{name}[{k}]") for k, v in enumerate(values))
    except TypeError:
        raise DomainError(f"{name}: expected a sequence of integers") from None
    if length is not None and len(vec) != length:
        raise DimensionError(f"{name}: expected length {length}, got {len(vec)}")
    return vec


def check_positive(vec: tuple[int, ...], name: str = "vector") -> tuple[int, ...]:
    bad = [k for k, x in enumerate(vec) if x <= 0]
    if bad:
        raise DomainError(f"{name}: entries at {bad} are not strictly positive")
    return vec


def check_nonnegative(vec: tuple[int, ...], name: str = "vector") -> tuple[int, ...]:
    bad = [k for k, x in enumerate(vec) if x < 0]
    if bad:
        raise DomainError(f"{name}: entries at {bad} are negative")
    return vec


def parse_int_list(text: str, name: str = "list") -> tuple[int, ...]:
    """Parse '1,2,3' or '1;2;3' (CLI flags, CSV cells)."""
    parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    if not parts:
        raise DomainError(f"{name}: empty list")
    return as_int_vector(parts, name)
