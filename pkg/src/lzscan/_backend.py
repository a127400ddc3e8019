"""Kernel backend selection: compiled extension when available, pure Python
otherwise.  Set ``LZSCAN_PURE=1`` to force the pure backend."""

import os

if os.environ.get("LZSCAN_PURE"):
    from lzscan import _purepy as kernels
else:
    try:
        from lzscan import _speedups as kernels  # type: ignore[attr-defined]
    except ImportError:
        from lzscan import _purepy as kernels

BACKEND = kernels.BACKEND

suffix_array = kernels.suffix_array
lcp_adjacent = kernels.lcp_adjacent
best_match = kernels.best_match
naive_steps = kernels.naive_steps
short_scan = kernels.short_scan
fill_scan = kernels.fill_scan
ac_scan = kernels.ac_scan
