"""
Strand archive model - ordered strands plus payload metadata.

Text format:
    DNAARC 1 n=<n> bits=<payload_bits>
    <strand>
    ...
Lines starting with '#' and blank lines are ignored.
"""

from dataclasses import dataclass, field
from typing import List
import re

from app.core.errors import AlphabetError, ArchiveFormatError

FORMAT_VERSION = 1
HEADER_RE = re.compile(r'^DNAARC (\d+) n=(\d+) bits=(\d+)$')


@dataclass
class StrandArchive:
    """
    Archive of strands in payload order.

    Strand i carries payload bits [i*l, (i+1)*l); the tail of the last
    block is zero padding, cut off using payload_bits.
    """

    n: int
    payload_bits: int
    strands: List[str] = field(default_factory=list)

    def __len__(self):
        return len(self.strands)

    def __repr__(self):
        return f'<StrandArchive n={self.n} bits={self.payload_bits} strands={len(self.strands)}>'

    def header(self) -> str:
        return f"DNAARC {FORMAT_VERSION} n={self.n} bits={self.payload_bits}"

    def to_text(self) -> str:
        """Serialize with LF line endings and a trailing newline."""
        return '\n'.join([self.header(), *self.strands]) + '\n'

    @staticmethod
    def from_text(text: str) -> 'StrandArchive':
        """
        Parse archive text.

        Strand lengths are not checked here; the decoder gates them.

        Raises:
            ArchiveFormatError: If the header is missing or malformed, or a strand
                line holds characters outside ACGT
        """
        lines = [
            line.strip() for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith('#')
        ]
        if not lines:
            raise ArchiveFormatError("archive is empty, expected a DNAARC header")

        match = HEADER_RE.match(lines[0])
        if not match:
            raise ArchiveFormatError(f"malformed archive header: {lines[0]!r}")
        version, n, bits = (int(g) for g in match.groups())
        if version != FORMAT_VERSION:
            raise ArchiveFormatError(f"unsupported archive version {version}")

        # Import here to avoid circular imports
        from app.core.dnamap import validate_strand

        strands = []
        for number, line in enumerate(lines[1:]):
            try:
                strands.append(validate_strand(line))
            except AlphabetError as e:
                raise ArchiveFormatError(f"strand {number}: {e}") from e
        return StrandArchive(n=n, payload_bits=bits, strands=strands)
