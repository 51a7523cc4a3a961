"""Levenshtein edit distance, with a compiled kernel when available.

The compiled extension is optional: environments without a C toolchain
fall back to the pure-Python implementation below with identical
results.  ``HAS_C_KERNEL`` reports which one is active.
"""

from __future__ import annotations

__all__ = ["edit_distance", "edit_distance_py", "HAS_C_KERNEL"]


def edit_distance_py(a: str, b: str) -> int:
    """Unit-cost Levenshtein distance, two-row dynamic program."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a):
        cur = [i + 1]
        append = cur.append
        for j, cb in enumerate(b):
            append(min(prev[j] + (ca != cb), prev[j + 1] + 1, cur[j] + 1))
        prev = cur
    return prev[-1]


try:
    from ._speedups import edit_distance as _kernel
except ImportError:  # pragma: no cover - depends on the build environment
    _kernel = None

HAS_C_KERNEL = _kernel is not None

edit_distance = _kernel if _kernel is not None else edit_distance_py
