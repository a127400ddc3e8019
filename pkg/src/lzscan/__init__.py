"""lzscan: Lempel-Ziv factorization with a three-tier resolver.

Short factors come out of direct-indexed packed-context tables, medium
factors out of a per-block compact trie over the reversed-context BWT, and
long factors out of difference-cover sampled tries with tree range reporting.
A brute-force oracle ships alongside for verification.
"""

from lzscan._backend import BACKEND
from lzscan.textmodel import (Alphabet, ContractViolation, Factor,
                              InternalError, PackedText, Parse, ingest)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BACKEND",
    "ContractViolation",
    "Factor",
    "InternalError",
    "PackedText",
    "Parse",
    "ingest",
    "naive_parse",
    "verify_parse",
    "parse",
    "parse_bytes",
    "ParseConfig",
    "TierStats",
]


def __getattr__(name):
    # driver/oracle import lazily so the base types stay import-light
    if name in ("naive_parse", "verify_parse", "Verdict"):
        from lzscan import oracle

        return getattr(oracle, name)
    if name in ("parse", "parse_bytes", "ParseConfig", "TierStats"):
        from lzscan import driver

        return getattr(driver, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
