"""
Code parameters derived from the strand length n.
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple
import logging

import numpy as np

from app.core.errors import ParameterError

MIN_STRAND_LENGTH = 6

logger = logging.getLogger('CodeParams')


@dataclass(frozen=True)
class CodeParams:
    """
    Every constant of the construction for one strand length.

    Positions are 1-indexed into the VT word of length m.
    """

    n: int
    m: int
    vt_modulus: int
    parity_positions: Tuple[int, ...]
    l: int
    message_positions: Tuple[int, ...]

    @property
    def extra_parity_position(self) -> int:
        """The single parity position that is not a power of two."""
        return next(p for p in self.parity_positions if p & (p - 1))

    @property
    def power_parity_positions(self) -> Tuple[int, ...]:
        return tuple(p for p in self.parity_positions if not p & (p - 1))

    @property
    def message_index(self) -> np.ndarray:
        """0-based indices of the message positions, for numpy fancy indexing."""
        return np.asarray(self.message_positions, dtype=np.intp) - 1

    @property
    def code_size(self) -> int:
        return 1 << self.l

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'm': self.m,
            'vt_modulus': self.vt_modulus,
            'parity_positions': list(self.parity_positions),
            'l': self.l,
            'message_positions': list(self.message_positions),
        }

    def __repr__(self):
        return f'<CodeParams n={self.n} l={self.l}>'


def _parity_positions(m: int) -> Tuple[int, ...]:
    powers = []
    p = 1
    while p <= m:
        powers.append(p)
        p <<= 1
    # powers alone reach 2^(t+1) - 1; one extra position lifts coverage to 2m
    extra = m - 1 if powers[-1] == m else m
    return tuple(sorted(powers + [extra]))


def derive_params(n: int) -> CodeParams:
    """
    Derive all code constants from the strand length.

    Args:
        n: Strand length in bases

    Returns:
        CodeParams for n

    Raises:
        ParameterError: If n is below the smallest length with a nonzero message
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ParameterError(f"strand length must be an integer, got {n!r}")
    n = int(n)
    if n < MIN_STRAND_LENGTH:
        raise ParameterError(
            f"strand length too short for nonzero message length: n={n}, minimum {MIN_STRAND_LENGTH}"
        )

    m = n - 1
    parity = _parity_positions(m)
    message = tuple(i for i in range(1, m + 1) if i not in parity)

    params = CodeParams(
        n=n,
        m=m,
        vt_modulus=2 * m + 1,
        parity_positions=parity,
        l=m - len(parity),
        message_positions=message,
    )
    logger.debug(f"Derived {params!r} with parity positions {list(parity)}")
    return params


def message_length(n: int) -> int:
    """Integer form of l = n - log2(2n - 1) - 1, with the logarithm rounded up."""
    return n - (2 * n - 2).bit_length() - 1


def smallest_strand_length(l: int) -> int:
    """
    Smallest strand length whose message length is at least l.

    Raises:
        ParameterError: If l < 1
    """
    if l < 1:
        raise ParameterError(f"message length must be at least 1, got {l}")
    n = MIN_STRAND_LENGTH
    while message_length(n) < l:
        n += 1
    return n
