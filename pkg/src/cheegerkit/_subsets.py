"""Boundary counts for every vertex subset, indexed by bitmask.

Bit ``i`` of a mask stands for vertex ``i``.  Tables are built by doubling:
adding vertex ``v`` to a subset ``S`` of ``{0..v-1}`` changes the boundary by
``deg(v) - 2 |N(v) & S|``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exceptions import CapExceededError
from .graph import Graph

DEFAULT_EXACT_CAP = 24


def check_cap(n: int, cap: int | None) -> None:
    if cap is None:
        cap = DEFAULT_EXACT_CAP
    if n > cap:
        raise CapExceededError(n, cap)


@lru_cache(maxsize=4)
def popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.int64)).astype(np.int8)


@lru_cache(maxsize=8)
def boundary_table(G: Graph) -> np.ndarray:
    """``table[mask] == |boundary(G, set(mask))|`` for every mask."""
    dtype = np.int16 if G.m < 2**15 else np.int32
    table = np.zeros(1, dtype=dtype)
    for v in range(G.n):
        low = np.arange(1 << v, dtype=np.int64)
        below = G.neighbor_masks[v] & ((1 << v) - 1)
        inside = np.bitwise_count(low & below).astype(dtype)
        table = np.concatenate([table, table + (G.degree(v) - 2 * inside)])
    table.flags.writeable = False
    return table


def mask_to_set(mask: int) -> frozenset[int]:
    mask = int(mask)
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(vertices) -> int:
    return sum(1 << v for v in vertices)


def _reverse_bits(masks: np.ndarray, n: int) -> np.ndarray:
    rev = np.zeros_like(masks)
    for i in range(n):
        rev |= ((masks >> i) & 1) << (n - 1 - i)
    return rev


def canonical_first(masks: np.ndarray, n: int) -> int:
    """Among equal-cardinality masks, the one whose sorted member list is
    lexicographically smallest (largest bit-reversed value)."""
    masks = np.asarray(masks, dtype=np.int64)
    if masks.size == 1:
        return int(masks[0])
    return int(masks[np.argmax(_reverse_bits(masks, n))])


def argbest(table: np.ndarray, sizes: np.ndarray, allowed: np.ndarray, n: int):
    """Minimise ``table/sizes`` over ``allowed`` masks.

    Ties break by smaller cardinality, then canonical order.  Returns
    ``(mask, boundary, size)`` or ``None`` when nothing is allowed.
    """
    best = None
    for s in range(1, n + 1):
        sel = allowed & (sizes == s)
        if not sel.any():
            continue
        b = int(table[sel].min())
        r = Fraction(b, s)
        # strict: an equal ratio at a larger size loses the cardinality tie-break
        if best is None or r < best[0]:
            best = (r, b, s)
    if best is None:
        return None
    _, b, s = best
    cands = np.flatnonzero(allowed & (sizes == s) & (table == b))
    return canonical_first(cands, n), b, s


def bounded_by(table: np.ndarray, sizes: np.ndarray, ratio: Fraction) -> np.ndarray:
    """Boolean array: ``|boundary| <= ratio * |S|`` exactly."""
    p, q = ratio.numerator, ratio.denominator
    return table.astype(np.int64) * q <= sizes.astype(np.int64) * p


def half_size(sizes: np.ndarray, n: int) -> np.ndarray:
    """Nonempty masks with ``2|S| <= n``."""
    return (sizes > 0) & (2 * sizes.astype(np.int64) <= n)


def lift_masks(masks: np.ndarray, index) -> np.ndarray:
    """Map masks over an induced subgraph to masks over the parent graph."""
    masks = np.asarray(masks, dtype=np.int64)
    out = np.zeros_like(masks)
    for i, v in enumerate(index):
        out |= ((masks >> i) & 1) << v
    return out
