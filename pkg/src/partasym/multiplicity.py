"""Multiplicity caps: a finite per-part bound, or the unbounded marker.

The unbounded case is a distinct regime (the generating-function numerator
disappears and the density formulas branch on it), so it gets a dedicated
singleton rather than a sentinel integer.
"""

from typing import Union


class _UnboundedType:
    """Singleton marking "no cap on how often a part may repeat"."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"

    def __reduce__(self):
        return (_UnboundedType, ())


UNBOUNDED = _UnboundedType()

Cap = Union[int, _UnboundedType]


def is_unbounded(k: Cap) -> bool:
    return isinstance(k, _UnboundedType)


def validate_cap(k: Cap) -> None:
    """Raise ValueError unless k is UNBOUNDED or a positive integer."""
    if is_unbounded(k):
        return
    if isinstance(k, bool) or not isinstance(k, int):
        raise ValueError(f"multiplicity cap must be a positive integer or UNBOUNDED, got {k!r}")
    if k < 1:
        raise ValueError(f"multiplicity cap must be >= 1, got {k}")


def parse_cap(text: str) -> Cap:
    """Parse a CLI token: a decimal integer or the literal 'inf'."""
    text = text.strip()
    if text.lower() == "inf":
        return UNBOUNDED
    try:
        k = int(text)
    except ValueError:
        raise ValueError(f"multiplicity cap must be a decimal integer or 'inf', got {text!r}") from None
    validate_cap(k)
    return k


def cap_label(k: Cap) -> str:
    """Deterministic text form used in CSV/JSON output: '3' or 'inf'."""
    return "inf" if is_unbounded(k) else str(k)
