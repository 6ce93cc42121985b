"""
Bit string helpers.

Bit strings are 1-d numpy uint8 arrays holding 0/1. Position i in the
docs is 1-indexed, i.e. array index i - 1.
"""

from typing import Iterable, Union

import numpy as np

BitsLike = Union[str, bytes, Iterable[int], np.ndarray]


def as_bits(value: BitsLike) -> np.ndarray:
    """
    Coerce a '0101' string or an iterable of 0/1 into a uint8 bit array.

    Raises:
        ValueError: If a symbol other than 0/1 is present
    """
    if isinstance(value, np.ndarray):
        raw = value.ravel()
        if raw.size and not np.isin(raw, (0, 1)).all():
            raise ValueError("bit values must be 0 or 1")
        return raw.astype(np.uint8, copy=True)
    if isinstance(value, (str, bytes)):
        text = value.decode('ascii') if isinstance(value, bytes) else value
        if text and set(text) - {'0', '1'}:
            raise ValueError(f"bit string may only contain 0 and 1: {text!r}")
        return np.frombuffer(text.encode('ascii'), dtype=np.uint8) - ord('0')

    values = list(value)
    if any(v not in (0, 1) for v in values):
        raise ValueError("bit values must be 0 or 1")
    return np.asarray(values, dtype=np.uint8)


def bits_to_str(bits: np.ndarray) -> str:
    return ''.join('1' if b else '0' for b in bits)


def int_to_bits(value: int, width: int) -> np.ndarray:
    """Most-significant-bit-first binary expansion of value."""
    return np.array([(value >> (width - 1 - i)) & 1 for i in range(width)], dtype=np.uint8)

