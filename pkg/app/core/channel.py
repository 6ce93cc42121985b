"""
Seeded error channel - single-event strand corruption.

Every strand draws from its own numpy PCG64 substream seeded by
(seed, strand index), so results do not depend on processing order.
"""

from typing import Dict, List, Mapping, Optional, Tuple
import logging
import math

import numpy as np
from marshmallow import ValidationError

from app.core.dnamap import ALPHABET, validate_strand
from app.core.errors import ChannelError
from app.models.archive import StrandArchive
from app.models.report import ChannelEvent, EventKind

RNG_NAME = 'PCG64/SeedSequence v1'

# Draw order is part of the reproducibility contract.
MIX_KEYS = ('delete', 'insert', 'substitute', 'none')
MIX_ALIASES = {
    'del': 'delete',
    'ins': 'insert',
    'sub': 'substitute',
    'none': 'none',
}

logger = logging.getLogger('ErrorChannel')


def parse_mix(text: str) -> Dict[str, float]:
    """
    Parse `del:p,ins:p,sub:p,none:p` into a validated mix.

    Raises:
        ChannelError: On unknown keys, bad numbers or a sum other than 1
    """
    mix = {}
    for item in filter(None, (part.strip() for part in text.split(','))):
        key, sep, value = item.partition(':')
        name = MIX_ALIASES.get(key.strip(), key.strip())
        if not sep or name not in MIX_KEYS:
            raise ChannelError(f"invalid error mix entry {item!r}, expected del/ins/sub/none:p")
        try:
            mix[name] = float(value)
        except ValueError as e:
            raise ChannelError(f"invalid probability in error mix entry {item!r}") from e
    return validate_mix(mix)


def validate_mix(mix: Mapping[str, float]) -> Dict[str, float]:
    """
    Check a mix of event probabilities and fill missing kinds with 0.

    Raises:
        ChannelError: If a key is unknown, a probability is negative or they do not sum to 1
    """
    unknown = set(mix) - set(MIX_KEYS)
    if unknown:
        raise ChannelError(f"invalid error mix: unknown kinds {sorted(unknown)}")
    full = {key: float(mix.get(key, 0.0)) for key in MIX_KEYS}
    if any(p < 0 or math.isnan(p) for p in full.values()):
        raise ChannelError(f"invalid error mix: negative probability in {full}")
    if not math.isclose(sum(full.values()), 1.0, abs_tol=1e-9):
        raise ChannelError(f"invalid error mix: probabilities sum to {sum(full.values())}, expected 1")
    return full


def make_rng(seed: int, index: int = 0) -> np.random.Generator:
    """Per-strand generator for the (seed, index) substream."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def apply_event(s: str, event: ChannelEvent) -> str:
    """
    Splice one event into a strand.

    Raises:
        ChannelError: On an out-of-range position, a missing base or a self-substitution
    """
    strand = validate_strand(s)
    p = event.position

    if event.kind is EventKind.DELETE:
        if not 1 <= p <= len(strand):
            raise ChannelError(f"delete position {p} out of range 1..{len(strand)}")
        return strand[:p - 1] + strand[p:]

    if event.base is None or event.base not in ALPHABET:
        raise ChannelError(f"{event.kind.value} needs a base from {ALPHABET}, got {event.base!r}")

    if event.kind is EventKind.INSERT:
        if not 1 <= p <= len(strand) + 1:
            raise ChannelError(f"insert position {p} out of range 1..{len(strand) + 1}")
        return strand[:p - 1] + event.base + strand[p - 1:]

    if not 1 <= p <= len(strand):
        raise ChannelError(f"substitute position {p} out of range 1..{len(strand)}")
    if strand[p - 1] == event.base:
        raise ChannelError(f"substitution at {p} would replace {event.base} with itself")
    return strand[:p - 1] + event.base + strand[p:]


def draw_event(s: str, mix: Mapping[str, float], rng: np.random.Generator) -> Optional[ChannelEvent]:
    """Draw at most one event for a strand from an already validated mix."""
    u = rng.random()
    cumulative = 0.0
    kind = 'none'
    for key in MIX_KEYS:
        cumulative += mix[key]
        if u < cumulative:
            kind = key
            break

    if kind == 'none':
        return None
    if kind == 'delete':
        if not s:
            return None
        return ChannelEvent(EventKind.DELETE, int(rng.integers(1, len(s) + 1)))
    if kind == 'insert':
        position = int(rng.integers(1, len(s) + 2))
        return ChannelEvent(EventKind.INSERT, position, ALPHABET[int(rng.integers(4))])
    if not s:
        return None
    position = int(rng.integers(1, len(s) + 1))
    choices = [b for b in ALPHABET if b != s[position - 1]]
    return ChannelEvent(EventKind.SUBSTITUTE, position, choices[int(rng.integers(3))])


def random_event(
    s: str,
    error_mix: Mapping[str, float],
    seed: int,
    index: int = 0
) -> Tuple[str, Optional[ChannelEvent]]:
    """
    Corrupt a strand with at most one event.

    Returns:
        Tuple of (possibly corrupted strand, event or None)

    Raises:
        ChannelError: If the mix is invalid
    """
    mix = validate_mix(error_mix)
    strand = validate_strand(s)
    event = draw_event(strand, mix, make_rng(seed, index))
    if event is None:
        return strand, None
    return apply_event(strand, event), event


def corrupt_archive(
    archive: StrandArchive,
    error_mix: Mapping[str, float],
    seed: int,
    events_per_strand: int = 1,
    allow_multiple: bool = False
) -> Tuple[StrandArchive, List[Tuple[int, ChannelEvent]]]:
    """
    Apply channel events to every strand of an archive.

    Args:
        archive: Source archive
        error_mix: Probabilities over delete/insert/substitute/none
        seed: Channel seed
        events_per_strand: Draws per strand; values above 1 leave the
            single-error contract and need allow_multiple
        allow_multiple: Opt-in for multi-event failure-rate studies

    Returns:
        Tuple of (corrupted archive, event log as (index, event) pairs)

    Raises:
        ChannelError: On an invalid mix or an unflagged multi-event request
    """
    if events_per_strand < 1:
        raise ChannelError(f"events_per_strand must be at least 1, got {events_per_strand}")
    if events_per_strand > 1 and not allow_multiple:
        raise ChannelError("more than one event per strand requires allow_multiple")
    mix = validate_mix(error_mix)

    strands = []
    log = []
    for index, strand in enumerate(archive.strands):
        rng = make_rng(seed, index)
        for _ in range(events_per_strand):
            event = draw_event(strand, mix, rng)
            if event is not None:
                strand = apply_event(strand, event)
                log.append((index, event))
        strands.append(strand)

    logger.info(
        f"Corrupted {len(strands)} strands with {len(log)} events "
        f"(seed={seed}, rng={RNG_NAME})"
    )
    return StrandArchive(n=archive.n, payload_bits=archive.payload_bits, strands=strands), log


def format_event_log(log: List[Tuple[int, ChannelEvent]], strand_count: Optional[int] = None) -> str:
    """
    One line per event: `<index> <kind> <pos> [<base>]`.

    With strand_count, every strand without an event gets an
    `<index> none` line, so the log has a line for each strand.
    """
    if strand_count is None:
        return ''.join(f"{index} {event}\n" for index, event in log)

    by_strand: Dict[int, List[ChannelEvent]] = {}
    for index, event in log:
        by_strand.setdefault(index, []).append(event)

    lines = []
    for index in range(strand_count):
        events = by_strand.get(index)
        if not events:
            lines.append(f"{index} none\n")
        lines.extend(f"{index} {event}\n" for event in events or ())
    return ''.join(lines)


def parse_event_log(text: str) -> List[Tuple[int, ChannelEvent]]:
    """
    Inverse of format_event_log; `<index> none` lines carry no event.

    Raises:
        ChannelError: On a malformed line
    """
    from app.models.schemas import channel_event_schema

    log = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        fields = line.split()
        if not fields:
            continue
        try:
            index = int(fields[0])
            if fields[1:] == ['none']:
                continue
            if len(fields) not in (3, 4):
                raise ValueError(f"expected 3 or 4 fields, got {len(fields)}")
            data = channel_event_schema.load({
                'kind': fields[1],
                'position': fields[2],
                'base': fields[3] if len(fields) == 4 else None,
            })
        except (ValueError, ValidationError) as e:
            raise ChannelError(f"malformed event log line {line_no}: {line!r} ({e})") from e
        log.append((index, ChannelEvent(EventKind(data['kind']), data['position'], data.get('base'))))
    return log
