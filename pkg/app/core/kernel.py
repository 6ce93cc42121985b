"""
Kernel code mapping and homomorphism redundancy.

A kernel word g_1..g_{n+1} is an even-weight binary word (kernel of the
sum map into Z_2) that starts with 1. Expansion appends n - 1
redundancy bits r_1..r_{n-1}, each a homomorphic image of the kernel
word; paired with the kernel bits they fix the base of every strand
position except the first and, for even n, the middle one.
"""

from typing import List
import logging

import numpy as np

from app.core.errors import ParameterError
from app.core.params import CodeParams
from app.models.bits import BitsLike, as_bits

logger = logging.getLogger('KernelCode')


def kernel_encode(word: BitsLike) -> np.ndarray:
    """Return 1 || word || p with p closing the total weight to even."""
    word = as_bits(word)
    head = np.concatenate(([1], word)).astype(np.uint8)
    parity = int(head.sum()) & 1
    return np.append(head, parity).astype(np.uint8)


def is_kernel_word(kw: BitsLike) -> bool:
    kw = as_bits(kw)
    return kw.size > 0 and kw[0] == 1 and int(kw.sum()) % 2 == 0


def redundancy(kw: BitsLike, params: CodeParams) -> np.ndarray:
    """
    Compute r_1..r_{n-1} from g_1..g_{n+1}.

    r_i = g_{i+1}                   for i <= floor((n-1)/2)
    r_i = g_1 + g_{i+1}             for i >= ceil((n+1)/2)
    r_{n/2} = g_{n/2+1} + g_{n+1}   for even n
    """
    g = as_bits(kw)
    n = params.n
    if g.size != n + 1:
        raise ParameterError(f"kernel word must have {n + 1} bits, got {g.size}")

    r = np.zeros(n - 1, dtype=np.uint8)
    low = (n - 1) // 2
    high = (n + 2) // 2  # ceil((n + 1) / 2)
    for i in range(1, n):
        if i <= low:
            r[i - 1] = g[i]
        elif i >= high:
            r[i - 1] = g[0] ^ g[i]
        else:
            # only reached for i = n/2 with n even
            r[i - 1] = g[i] ^ g[n]
    return r


def expand(kw: BitsLike, params: CodeParams) -> np.ndarray:
    """Append the n - 1 redundancy bits to a kernel word, giving 2n bits."""
    kw = as_bits(kw)
    return np.concatenate((kw, redundancy(kw, params))).astype(np.uint8)


def verify_redundancy(ew: BitsLike, params: CodeParams) -> List[int]:
    """
    Return the 1-indexed redundancy bits that disagree with the kernel part.

    Used for detection reporting only.
    """
    ew = as_bits(ew)
    n = params.n
    if ew.size != 2 * n:
        raise ParameterError(f"expanded word must have {2 * n} bits, got {ew.size}")

    expected = redundancy(ew[:n + 1], params)
    mismatches = np.flatnonzero(expected != ew[n + 1:]) + 1
    return [int(i) for i in mismatches]


def strip(ew: BitsLike) -> np.ndarray:
    """Drop the leading 1, the parity bit and the redundancy: returns g_2..g_n."""
    ew = as_bits(ew)
    if ew.size % 2:
        raise ParameterError(f"expanded word must have even length, got {ew.size}")
    return ew[1:ew.size // 2].copy()
