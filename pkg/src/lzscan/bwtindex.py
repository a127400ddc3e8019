"""Burrows-Wheeler machinery for a window string.

For a window ``x`` whose position 0 holds a sentinel strictly smaller than the
rest, sorts the reversed prefixes of ``x`` (equivalently the suffixes of the
reversed window), and derives the BWT, the rank-successor function psi, and
the capped lcp array between rank-adjacent reversed prefixes.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from lzscan import _backend as K
from lzscan.textmodel import ContractViolation


@dataclass
class BwtPsi:
    d: int            # window is x[0..d], d + 1 symbols
    sa: array         # sa[j] = i such that reversed prefix of x[0..i] has rank j
    sa_rank: array    # inverse of sa
    bwt: array        # bwt[j] = x[sa[j] + 1], wrapping to x[0] at the end
    psi: array        # psi[j] = rank of the one-symbol extension, 0 at the end


@dataclass
class RlcpArray:
    values: array     # values[i] = min(cap, lcp of ranks i and i+1)
    cap: int


def build_bwt_psi(x) -> BwtPsi:
    d = len(x) - 1
    if d < 0:
        raise ContractViolation("empty window")
    sentinel = x[0]
    if any(c <= sentinel for c in x[1:]):
        raise ContractViolation("window sentinel is not strictly smallest")
    # reversed prefixes of x == suffixes of reverse(x)
    xr = x[::-1]
    sigma = (max(x) + 1) if d else (sentinel + 1)
    sa_r = K.suffix_array(xr, sigma)
    sa = array("i", bytes(4 * (d + 1)))
    sa_rank = array("i", bytes(4 * (d + 1)))
    for j in range(d + 1):
        sa[j] = d - sa_r[j]
    for j in range(d + 1):
        sa_rank[sa[j]] = j
    bwt = array("h", bytes(2 * (d + 1)))
    psi = array("i", bytes(4 * (d + 1)))
    for j in range(d + 1):
        i = sa[j]
        if i < d:
            bwt[j] = x[i + 1]
            psi[j] = sa_rank[i + 1]
        else:
            bwt[j] = x[0]
            psi[j] = 0
    return BwtPsi(d=d, sa=sa, sa_rank=sa_rank, bwt=bwt, psi=psi)


def rlcp_of(bp: BwtPsi, x, cap: int) -> RlcpArray:
    d = bp.d
    xr = x[::-1]
    sa_r = array("i", (d - bp.sa[j] for j in range(d + 1)))
    lcp = K.lcp_adjacent(xr, sa_r)
    typecode = "h" if cap < (1 << 15) else "i"
    values = array(typecode, (min(cap, lcp[i + 1]) for i in range(d)))
    return RlcpArray(values=values, cap=cap)


def rlcp_range(rl: RlcpArray, i: int, j: int) -> int:
    """min of values[i..j); callers only scan ranges of length <= r."""
    if not 0 <= i < j <= len(rl.values):
        raise ContractViolation(f"bad rlcp range [{i}..{j})")
    return min(rl.values[i:j])
