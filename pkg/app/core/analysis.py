"""
Codebook analyzer - exhaustive distance and GC-content checks.

All distances are exact all-pairs scans over the full codebook. Scans
are split into row blocks that may run on a thread pool; the blocks
only meet in the final min/max reduction.
"""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Tuple
import logging

import numpy as np

from app.core.codec import encode_strand
from app.core.dnamap import reverse_complement
from app.core.errors import CodebookCapError
from app.core.params import CodeParams
from app.models.bits import bits_to_str, int_to_bits
from app.models.report import AnalysisReport, ConstraintResult

DEFAULT_CAP = 2 ** 20
DEFAULT_BLOCK_SIZE = 256

logger = logging.getLogger('CodebookAnalyzer')

_COMPLEMENT_CODES = np.zeros(256, dtype=np.uint8)
for _base, _comp in zip(b'ACGT', b'TGCA'):
    _COMPLEMENT_CODES[_base] = _comp


def enumerate_codebook(params: CodeParams, cap: int = DEFAULT_CAP) -> List[str]:
    """
    Encode every message in ascending binary order.

    Raises:
        CodebookCapError: If 2^l exceeds cap
    """
    if params.code_size > cap:
        raise CodebookCapError(params.code_size, cap)
    return [encode_strand(int_to_bits(k, params.l), params) for k in range(params.code_size)]


def codebook_table(params: CodeParams, cap: int = DEFAULT_CAP) -> List[Tuple[str, str]]:
    """(message, strand) rows for the whole codebook."""
    strands = enumerate_codebook(params, cap)
    return [(bits_to_str(int_to_bits(k, params.l)), s) for k, s in enumerate(strands)]


def rc_formula_value(n: int) -> int:
    return 2 * ((n - 3) // 2)


def _as_matrix(strands: List[str]) -> np.ndarray:
    n = len(strands[0])
    return np.frombuffer(''.join(strands).encode('ascii'), dtype=np.uint8).reshape(len(strands), n)


def _min_distance(
    left: np.ndarray,
    right: np.ndarray,
    exclude_diagonal: bool,
    block_size: int,
    workers: int
) -> int:
    """Minimum Hamming distance between rows of left and rows of right."""
    rows = left.shape[0]
    sentinel = left.shape[1] + 1

    def scan(start: int) -> int:
        block = left[start:start + block_size]
        best = sentinel
        for col in range(0, right.shape[0], block_size):
            other = right[col:col + block_size]
            dist = (block[:, None, :] != other[None, :, :]).sum(axis=2)
            if exclude_diagonal:
                i = np.arange(block.shape[0])
                j = start + i - col
                inside = (j >= 0) & (j < other.shape[0])
                dist[i[inside], j[inside]] = sentinel
            best = min(best, int(dist.min()))
        return best

    starts = range(0, rows, block_size)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(scan, starts))
    else:
        results = [scan(start) for start in starts]
    return min(results)


def junction_hits(strands: List[str]) -> int:
    """
    Count codeword occurrences inside reverse complements of concatenations.

    For every ordered pair (x, y) the length-n windows of (xy)^RC are
    compared with the codebook. (xy)^RC = y^RC x^RC, so the window at
    offset k is y^RC[k:] + x^RC[:k]; counts are combined per k from
    suffix and prefix tallies instead of walking all pairs.
    """
    if not strands:
        return 0
    n = len(strands[0])
    rcs = [reverse_complement(s) for s in strands]
    hits = 0
    for k in range(n + 1):
        suffixes = Counter(rc[k:] for rc in rcs)
        prefixes = Counter(rc[:k] for rc in rcs)
        hits += sum(suffixes[c[:n - k]] * prefixes[c[n - k:]] for c in strands)
    return hits


def analyze(
    params: CodeParams,
    cap: int = DEFAULT_CAP,
    block_size: int = DEFAULT_BLOCK_SIZE,
    workers: int = 1
) -> AnalysisReport:
    """
    Enumerate the codebook and measure every distance and GC statistic exactly.

    Raises:
        CodebookCapError: If 2^l exceeds cap
    """
    strands = enumerate_codebook(params, cap)
    logger.info(f"Analyzing codebook n={params.n}: {len(strands)} codewords")

    codes = _as_matrix(strands)
    reversed_codes = np.ascontiguousarray(codes[:, ::-1])
    rc_codes = _COMPLEMENT_CODES[reversed_codes]

    gc = np.isin(codes, np.frombuffer(b'GC', dtype=np.uint8)).sum(axis=1)

    report = AnalysisReport(
        n=params.n,
        code_size=len(strands),
        min_hamming=_min_distance(codes, codes, True, block_size, workers),
        min_reverse=_min_distance(reversed_codes, codes, False, block_size, workers),
        min_rc=_min_distance(rc_codes, codes, False, block_size, workers),
        rc_formula_value=rc_formula_value(params.n),
        gc_min=int(gc.min()),
        gc_max=int(gc.max()),
        gc_target=params.n // 2,
        junction_hits=junction_hits(strands),
    )

    if report.rc_excess > 0:
        logger.info(
            f"Finding: measured RC distance {report.min_rc} exceeds formula value "
            f"{report.rc_formula_value} by {report.rc_excess}"
        )
    elif report.rc_excess < 0:
        logger.error(
            f"RC distance {report.min_rc} is below the lower bound {report.rc_formula_value}"
        )
    return report


def check_constraints(
    report: AnalysisReport,
    thresholds: Optional[Dict[str, Any]] = None
) -> List[ConstraintResult]:
    """
    Evaluate the Hamming, reverse, reverse-complement and GC constraints.

    Args:
        report: AnalysisReport to judge
        thresholds: Optional dict with:
            - d_min: minimum Hamming distance between distinct codewords (default 1)
            - reverse_min: minimum H(x^R, y) (default 0)
            - rc_min: minimum H(x^RC, y) (default: the closed-form RC distance)
            - gc_target: fixed GC weight w (default floor(n/2)); odd n also
              accepts w + 1

    Returns:
        One ConstraintResult per constraint
    """
    thresholds = thresholds or {}
    d_min = thresholds.get('d_min')
    reverse_min = thresholds.get('reverse_min')
    rc_min = thresholds.get('rc_min')
    gc_target = thresholds.get('gc_target')

    d_min = 1 if d_min is None else d_min
    reverse_min = 0 if reverse_min is None else reverse_min
    rc_min = report.rc_formula_value if rc_min is None else rc_min
    gc_target = report.gc_target if gc_target is None else gc_target
    # odd lengths cannot balance exactly: the window is {w, w + 1}
    gc_upper = gc_target + report.n % 2

    return [
        ConstraintResult('hamming', report.min_hamming >= d_min, report.min_hamming, d_min),
        ConstraintResult('reverse', report.min_reverse >= reverse_min, report.min_reverse, reverse_min),
        ConstraintResult('reverse_complement', report.min_rc >= rc_min, report.min_rc, rc_min),
        ConstraintResult(
            'gc_content',
            gc_target <= report.gc_min and report.gc_max <= gc_upper,
            f"{report.gc_min}..{report.gc_max}",
            f"{gc_target}..{gc_upper}",
        ),
    ]
