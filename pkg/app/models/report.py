"""
Report and event models - results of decoding, analysis and channel simulation.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import enum


class CorrectedError(enum.Enum):
    """Kind of error the decoder corrected in one strand."""
    NONE = 'none'
    DELETION = 'deletion'
    INSERTION = 'insertion'
    SUBSTITUTION = 'substitution'


class EventKind(enum.Enum):
    """Channel event kinds."""
    DELETE = 'delete'
    INSERT = 'insert'
    SUBSTITUTE = 'substitute'


@dataclass
class DecodeReport:
    """
    Per-strand decoding outcome.

    detail holds the VT position the decoder acted on and the bit it
    inserted, removed or restored, when known.
    """

    corrected_error: CorrectedError = CorrectedError.NONE
    detail: Dict[str, Any] = field(default_factory=dict)
    redundancy_violations: List[int] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    index: Optional[int] = None
    failed: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'index': self.index,
            'corrected_error': self.corrected_error.value,
            'detail': dict(self.detail),
            'redundancy_violations': list(self.redundancy_violations),
            'warnings': list(self.warnings),
            'failed': self.failed,
        }

    def summary(self) -> str:
        """One diagnostic line, e.g. `strand 3: deletion position=5 bit=1`."""
        parts = [f"strand {self.index}:" if self.index is not None else 'strand:']
        parts.append('FAILED' if self.failed else self.corrected_error.value)
        parts.extend(f"{key}={value}" for key, value in self.detail.items())
        if self.redundancy_violations:
            parts.append(f"redundancy_violations={','.join(map(str, self.redundancy_violations))}")
        parts.extend(f"warning={w!r}" for w in self.warnings)
        return ' '.join(parts)


@dataclass(frozen=True)
class ChannelEvent:
    """
    A single channel event on a strand.

    position is 1-indexed; base is None for deletions.
    """

    kind: EventKind
    position: int
    base: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind.value, 'position': self.position, 'base': self.base}

    def __str__(self):
        text = f"{self.kind.value} {self.position}"
        return f"{text} {self.base}" if self.base else text


@dataclass
class AnalysisReport:
    """Codebook-wide distance and GC statistics."""

    n: int
    code_size: int
    min_hamming: int
    min_reverse: int
    min_rc: int
    rc_formula_value: int
    gc_min: int
    gc_max: int
    gc_target: int
    junction_hits: Optional[int] = None

    @property
    def rc_excess(self) -> int:
        """Measured RC distance above the closed-form value (a finding, never a failure)."""
        return self.min_rc - self.rc_formula_value

    @property
    def gc_content_min(self) -> float:
        return self.gc_min / self.n

    @property
    def gc_content_max(self) -> float:
        return self.gc_max / self.n

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'code_size': self.code_size,
            'min_hamming': self.min_hamming,
            'min_reverse': self.min_reverse,
            'min_rc': self.min_rc,
            'rc_formula_value': self.rc_formula_value,
            'rc_excess': self.rc_excess,
            'gc_min': self.gc_min,
            'gc_max': self.gc_max,
            'gc_target': self.gc_target,
            'gc_content_min': self.gc_content_min,
            'gc_content_max': self.gc_content_max,
            'junction_hits': self.junction_hits,
        }


@dataclass(frozen=True)
class ConstraintResult:
    """Pass/fail verdict for one constraint."""

    name: str
    passed: bool
    measured: Any
    threshold: Any

    def __str__(self):
        verdict = 'PASS' if self.passed else 'FAIL'
        return f"{self.name}={verdict} measured={self.measured} threshold={self.threshold}"
