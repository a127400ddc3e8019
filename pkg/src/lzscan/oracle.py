"""Brute-force reference factorizer and parse validator.

``naive_parse`` is the ground truth for every equivalence test: a quadratic
scan that, at each position, finds the longest prefix with an occurrence
starting earlier (overlap into the factor is allowed).  ``verify_parse``
checks an arbitrary parse against the text without trusting the factorizer.
"""

from __future__ import annotations

from dataclasses import dataclass

from lzscan import _backend as K
from lzscan.textmodel import Factor, PackedText, Parse


@dataclass(frozen=True)
class Verdict:
    """Validation result; ``clause`` names the first violated rule."""

    ok: bool
    clause: str | None = None  # "reconstruction" | "occurrence" | "maximality"
    factor_index: int | None = None
    offset: int | None = None  # external text offset of the offending factor
    detail: str = ""

    def __bool__(self):
        return self.ok


def naive_parse(text: PackedText) -> Parse:
    """Greedy longest-earlier-match factorization; positions are external
    (sentinel-free) and ties go to the leftmost occurrence."""
    parse = Parse()
    q = 1
    for length, pos in K.naive_steps(text.codes, text.n):
        if pos < 0:
            parse.append(Factor.literal(text.codes[q]))
        else:
            parse.append(Factor.reference(length, pos - 1))
        q += length
    return parse


def verify_parse(text: PackedText, parse: Parse) -> Verdict:
    """Accept iff the parse reconstructs the text, every reference is a
    genuine earlier occurrence, and every factor is maximal (a one-symbol
    extension would have no earlier occurrence; literals are new symbols)."""
    codes, n = text.codes, text.n
    q = 1  # internal cursor
    for idx, f in enumerate(parse):
        ext = q - 1
        if q + f.length > n:
            return Verdict(False, "reconstruction", idx, ext, "factor overruns text")
        if f.is_literal:
            if codes[q] != f.lit:
                return Verdict(False, "reconstruction", idx, ext,
                               f"literal code {f.lit} != text code {codes[q]}")
            best_l, _ = K.best_match(codes, n, q)
            if best_l > 0:
                return Verdict(False, "maximality", idx, ext,
                               "literal symbol occurs earlier")
        else:
            p = f.pos + 1
            if not 1 <= p < q:
                return Verdict(False, "occurrence", idx, ext,
                               f"position {f.pos} is not earlier than {ext}")
            if any(codes[p + k] != codes[q + k] for k in range(f.length)):
                return Verdict(False, "occurrence", idx, ext,
                               "referenced substring differs")
            best_l, _ = K.best_match(codes, n, q)
            if best_l != f.length:
                return Verdict(False, "maximality", idx, ext,
                               f"factor length {f.length}, maximal is {best_l}")
        q += f.length
    if q != n:
        return Verdict(False, "reconstruction", None, q - 1,
                       f"parse covers {q - 1} of {n - 1} symbols")
    return Verdict(True)
