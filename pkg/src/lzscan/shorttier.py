"""Short-factor tier: direct-indexed tables of packed contexts.

One table per context length ``1..ceil(r/2)``, each indexed by the packed
string itself and holding an earlier position of that string (or -1).  The
maintenance scan skips positions whose full-depth context is already present,
which caps the table-update work and keeps the completeness invariant: a
packed string of any table length occurs in the scanned prefix iff its entry
is set.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from lzscan import _backend as K
from lzscan.textmodel import ContractViolation, InternalError, PackedText

NONE = -1

LITERAL_NEW = "literal-new"
SHORT = "short"
AT_LEAST_HALF_R = "at-least-half-r"


@dataclass(frozen=True)
class ShortOutcome:
    kind: str
    length: int = 0
    pos: int = -1  # internal coordinates


class ShortTables:
    """Tables ``H_1..H_hr`` over packed contexts plus the maintenance cursor."""

    def __init__(self, text: PackedText, table_budget: int = 1 << 22):
        sigma = text.sigma
        hr = (text.r + 1) // 2
        # keep the direct-indexed layout within budget by lowering the depth
        # (never below 1); no hashing fallback by design
        while hr > 1 and _total_entries(sigma, hr) > max(sigma, table_budget):
            hr -= 1
        self.hr = hr
        self.cursor = 0
        self.tables = [array("i", [NONE]) * (sigma ** i) for i in range(1, hr + 1)]
        full_hr = (text.r + 1) // 2
        if _total_entries(sigma, hr) > (sigma ** full_hr) * max(1, full_hr):
            raise InternalError("short tables exceed their size bound")

    def entry_count(self) -> int:
        return sum(len(t) for t in self.tables)

    def approx_bytes(self) -> int:
        return sum(t.itemsize * len(t) for t in self.tables)

    def advance(self, text: PackedText, upto: int):
        if upto > text.n or upto < self.cursor:
            raise ContractViolation(f"advance to {upto} from cursor {self.cursor}")
        self.cursor = K.short_scan(text.codes, text.n, self.cursor, upto,
                                   self.hr, text.log_sigma, self.tables)

    def classify(self, text: PackedText, p: int) -> ShortOutcome:
        """Decide literal / short-with-position / at-least-hr for the factor
        starting at ``p``.  Requires the scan cursor to sit exactly at ``p``."""
        if self.cursor != p:
            raise ContractViolation(f"classify at {p} with cursor {self.cursor}")
        if self.tables[0][text.codes[p]] == NONE:
            return ShortOutcome(LITERAL_NEW)
        hr = self.hr
        if self.tables[hr - 1][text.pack(p, hr)] != NONE:
            return ShortOutcome(AT_LEAST_HALF_R)
        for q in range(2, hr + 1):
            if self.tables[q - 1][text.pack(p, q)] == NONE:
                pos = self.tables[q - 2][text.pack(p, q - 1)]
                return ShortOutcome(SHORT, q - 1, pos)
        raise InternalError("top table was NONE but no minimal miss found")

    def lookup(self, text: PackedText, p: int, length: int) -> int | None:
        """Earlier position of the known length-``length`` factor at ``p``
        (None when the single symbol is new).  Advances the scan to ``p``."""
        self.advance(text, p)
        if length == 1 and self.tables[0][text.codes[p]] == NONE:
            return None
        if length > self.hr:
            raise ContractViolation(f"lookup length {length} beyond tables")
        pos = self.tables[length - 1][text.pack(p, length)]
        if pos == NONE:
            raise InternalError(f"missing table entry for factor at {p}")
        return pos


def _total_entries(sigma: int, hr: int) -> int:
    return sum(sigma ** i for i in range(1, hr + 1))
