"""Input ingestion, alphabet remapping, packed-word substring access, and the
factor/parse data model shared by every tier.

The input byte string is remapped onto a compact integer alphabet ``[0..sigma)``
where ``sigma`` is a power of two and code 0 is a reserved sentinel prepended
at position 0.  A substring of up to ``r`` symbols fits one machine word as a
base-``sigma`` number whose integer order equals lexicographic order, which is
what makes word-at-a-time substring comparison possible.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field


class ContractViolation(ValueError):
    """An operation was invoked outside its documented preconditions."""


class InternalError(RuntimeError):
    """An internal consistency check failed; this is a bug, not bad input."""


@dataclass(frozen=True)
class Alphabet:
    """Bijection between occurring input bytes and codes ``1..k``.

    Code 0 is the sentinel and maps to no input byte.
    """

    code_of: dict
    byte_of: tuple
    sigma: int

    def decode(self, code: int) -> int:
        if not 1 <= code < len(self.byte_of):
            raise ContractViolation(f"code {code} maps to no input byte")
        return self.byte_of[code]


class PackedText:
    """Read-only remapped text with word-packed substring extraction.

    ``codes[0]`` is the sentinel 0 and 0 occurs nowhere else.  Positions at or
    past ``n`` read as the sentinel (right padding), so packed reads near the
    tail are always defined.
    """

    __slots__ = ("codes", "n", "sigma", "log_sigma", "r")

    def __init__(self, codes: array, sigma: int):
        self.codes = codes
        self.n = len(codes)
        self.sigma = sigma
        self.log_sigma = max(1, sigma.bit_length() - 1)
        # largest r >= 1 with sigma**r <= n (floor of log_sigma n)
        r = 1
        while sigma ** (r + 1) <= self.n and sigma > 1:
            r += 1
        self.r = r

    def code_at(self, i: int) -> int:
        if 0 <= i < self.n:
            return self.codes[i]
        return 0

    def pack(self, i: int, length: int) -> int:
        """Pack ``codes[i..i+length)`` into one integer, earliest symbol most
        significant; integer order on equal lengths equals lexicographic order.
        """
        if length > self.r:
            raise ContractViolation(f"packed length {length} exceeds radix {self.r}")
        if i < 0 or length < 0:
            raise ContractViolation("negative position or length")
        word = 0
        lg = self.log_sigma
        codes, n = self.codes, self.n
        end = i + length
        if end <= n:
            for k in range(i, end):
                word = (word << lg) | codes[k]
        else:
            for k in range(i, end):
                word <<= lg
                if k < n:
                    word |= codes[k]
        return word

    def lcp_compare(self, i: int, j: int, maxlen: int):
        """Compare the suffixes at ``i`` and ``j`` truncated at ``maxlen``.

        Returns ``(lcp, order)`` with ``order`` in {-1, 0, 1}; ``order`` is 0
        when the truncated suffixes are equal.  Word-at-a-time via pack.
        """
        if i == j:
            return maxlen, 0
        r = self.r
        k = 0
        while k < maxlen:
            m = min(r, maxlen - k)
            wi = self.pack(i + k, m)
            wj = self.pack(j + k, m)
            if wi == wj:
                k += m
                continue
            # locate the first differing symbol inside the word
            lg = self.log_sigma
            for off in range(m):
                shift = lg * (m - 1 - off)
                ci = (wi >> shift) & ((1 << lg) - 1)
                cj = (wj >> shift) & ((1 << lg) - 1)
                if ci != cj:
                    return k + off, (-1 if ci < cj else 1)
            raise InternalError("unequal words with no differing symbol")
        return maxlen, 0


@dataclass(frozen=True)
class Factor:
    """One Lempel-Ziv factor: a back-reference ``(length, pos)`` or a literal.

    ``pos`` is the start of an earlier occurrence in external (sentinel-free)
    coordinates; the occurrence may overlap forward past the factor start.
    ``lit`` is a symbol code and implies ``length == 1``.
    """

    length: int
    pos: int | None = None
    lit: int | None = None

    def __post_init__(self):
        if (self.pos is None) == (self.lit is None):
            raise ContractViolation("factor needs exactly one of pos or lit")
        if self.lit is not None and self.length != 1:
            raise ContractViolation("literal factors have length 1")
        if self.length < 1:
            raise ContractViolation("factor length must be positive")

    @property
    def is_literal(self) -> bool:
        return self.lit is not None

    @classmethod
    def literal(cls, code: int) -> "Factor":
        return cls(1, lit=code)

    @classmethod
    def reference(cls, length: int, pos: int) -> "Factor":
        return cls(length, pos=pos)


@dataclass
class Parse:
    """Ordered factor sequence; concatenated factors equal the text after the
    sentinel.  Factor origins are recovered by prefix sums."""

    factors: list = field(default_factory=list)

    def starts(self) -> list:
        out = []
        q = 0
        for f in self.factors:
            out.append(q)
            q += f.length
        return out

    def total_length(self) -> int:
        return sum(f.length for f in self.factors)

    def lengths(self) -> list:
        return [f.length for f in self.factors]

    def append(self, factor: Factor):
        self.factors.append(factor)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, idx):
        return self.factors[idx]


def ingest(data: bytes):
    """Remap ``data`` onto codes 1..k in order of first occurrence and prepend
    the sentinel.  Returns ``(PackedText, Alphabet)``."""
    code_of = {}
    byte_of = [0]
    codes = array("h", [0])
    for b in data:
        c = code_of.get(b)
        if c is None:
            c = len(byte_of)
            code_of[b] = c
            byte_of.append(b)
        codes.append(c)
    k = len(byte_of) - 1
    sigma = 1 << k.bit_length()  # least power of two >= k + 1
    text = PackedText(codes, sigma)
    return text, Alphabet(code_of=code_of, byte_of=tuple(byte_of), sigma=sigma)
