"""Exact edge-expansion quantities: Cheeger constant, Følner sets, ρ_m.

Everything here is exact.  Exhaustive searches run over the boundary table of
:mod:`cheegerkit._subsets`, so the practical limit is the exact cap
(``DEFAULT_EXACT_CAP`` vertices); beyond it the functions refuse rather than
return an approximation.  :func:`heuristic_cheeger` is the only routine that
returns an upper bound instead of the optimum, and it says so.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _subsets
from ._subsets import DEFAULT_EXACT_CAP, check_cap
from .exceptions import BudgetExceededError, DomainError, ParameterError
from .graph import Graph, canonical_key
from .validation import check_ratio, check_vertex_set

__all__ = [
    "INF",
    "DEFAULT_BUDGET",
    "CheegerResult",
    "HigherCheegerResult",
    "folner_ratio",
    "is_folner",
    "cheeger",
    "is_expander",
    "find_small_folner",
    "enumerate_folner",
    "higher_order_cheeger",
    "heuristic_cheeger",
]

#: Sentinel for "no admissible subset"; compares above every Fraction.
INF = math.inf

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class CheegerResult:
    value: Fraction | float
    realizer: frozenset[int] | None
    exact: bool = True

    @property
    def is_infinite(self) -> bool:
        return self.value == INF


@dataclass(frozen=True)
class HigherCheegerResult:
    m: int
    value: Fraction | float
    witness: tuple[frozenset[int], ...] | None


def _edge_count_out(G: Graph, mask: int) -> int:
    nbrs = G.neighbor_masks
    total = 0
    rest = mask
    while rest:
        low = rest & -rest
        total += (nbrs[low.bit_length() - 1] & ~mask).bit_count()
        rest ^= low
    return total


def folner_ratio(G: Graph, A) -> Fraction:
    """``|∂A| / |A|`` as an exact fraction."""
    A = check_vertex_set(G, A, nonempty=True)
    return Fraction(_edge_count_out(G, _subsets.set_to_mask(A)), len(A))


def is_folner(G: Graph, A, eps) -> bool:
    """True iff ``2|A| <= |X|`` and ``|∂A| <= eps |A|``."""
    eps = check_ratio(eps, "eps")
    A = check_vertex_set(G, A, nonempty=True)
    if 2 * len(A) > G.n:
        return False
    return _edge_count_out(G, _subsets.set_to_mask(A)) <= eps * len(A)


def _tables(G: Graph, cap):
    check_cap(G.n, cap)
    sizes = _subsets.popcounts(G.n)
    return _subsets.boundary_table(G), sizes


def cheeger(G: Graph, cap: int | None = DEFAULT_EXACT_CAP) -> CheegerResult:
    """Exact Cheeger constant with a tie-broken realizer.

    The realizer minimises the ratio, then the cardinality, then the
    canonical (lexicographic) order.  Graphs on at most one vertex have no
    admissible subset and get ``INF``.
    """
    if G.n <= 1:
        return CheegerResult(INF, None)
    table, sizes = _tables(G, cap)
    mask, b, s = _subsets.argbest(table, sizes, _subsets.half_size(sizes, G.n), G.n)
    return CheegerResult(Fraction(b, s), _subsets.mask_to_set(mask))


def is_expander(G: Graph, eps, cap: int | None = DEFAULT_EXACT_CAP) -> bool:
    eps = check_ratio(eps, "eps")
    return cheeger(G, cap).value > eps


def find_small_folner(G: Graph, eps, alpha, cap: int | None = DEFAULT_EXACT_CAP):
    """An ``alpha``-small ``eps``-Følner set of ``G``, or ``None``.

    Among all qualifying sets the one returned has the smallest ratio, then
    the smallest cardinality, then comes first canonically.
    """
    eps = check_ratio(eps, "eps")
    alpha = check_ratio(alpha, "alpha", positive=True)
    if G.n == 0:
        return None
    table, sizes = _tables(G, cap)
    sizes64 = sizes.astype(np.int64)
    small = sizes64 * alpha.denominator < alpha.numerator * G.n
    allowed = _subsets.half_size(sizes, G.n) & small & _subsets.bounded_by(table, sizes, eps)
    found = _subsets.argbest(table, sizes, allowed, G.n)
    return None if found is None else _subsets.mask_to_set(found[0])


def enumerate_folner(G: Graph, eps, cap: int | None = DEFAULT_EXACT_CAP) -> list[frozenset[int]]:
    """Every ``eps``-Følner set of ``G`` in canonical order."""
    eps = check_ratio(eps, "eps")
    if G.n == 0:
        return []
    table, sizes = _tables(G, cap)
    allowed = _subsets.half_size(sizes, G.n) & _subsets.bounded_by(table, sizes, eps)
    sets = [_subsets.mask_to_set(m) for m in np.flatnonzero(allowed)]
    return sorted(sets, key=canonical_key)


def _ratio_ranks(table: np.ndarray, sizes: np.ndarray, n: int):
    """Rank every nonempty mask by its exact ratio; returns (ranks, values)."""
    codes = table.astype(np.int64) * (n + 1) + sizes
    uniq, inverse = np.unique(codes[1:], return_inverse=True)
    fracs = [Fraction(int(c) // (n + 1), int(c) % (n + 1)) for c in uniq]
    order = sorted(range(len(fracs)), key=fracs.__getitem__)
    values: list[Fraction] = []
    rank_of_uniq = np.empty(len(fracs), dtype=np.int64)
    for i in order:
        if not values or fracs[i] != values[-1]:
            values.append(fracs[i])
        rank_of_uniq[i] = len(values) - 1
    ranks = np.empty(len(table), dtype=np.int64)
    ranks[0] = -1
    ranks[1:] = rank_of_uniq[inverse]
    return ranks.tolist(), values


def higher_order_cheeger(
    G: Graph, m: int, budget: int = DEFAULT_BUDGET
) -> HigherCheegerResult:
    """Exact ρ_m: min over m disjoint nonempty sets of the largest ratio.

    The search space is every assignment of vertices to ``{A_1..A_m, none}``;
    ``budget`` bounds its nominal size ``(m+1)^n``.  The minimum is found by
    dynamic programming over vertex subsets (``U`` = vertices still
    available), which visits each pair (available set, block containing its
    lowest vertex) once per level instead of listing assignments.
    """
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"m must be an integer >= 1, got {m!r}")
    n = G.n
    if n < m:
        return HigherCheegerResult(m, INF, None)
    work = (m + 1) ** n
    if work > budget:
        raise BudgetExceededError(work, budget)
    check_cap(n, DEFAULT_EXACT_CAP)
    table = _subsets.boundary_table(G)
    sizes = _subsets.popcounts(n)
    if m == 1:
        mask, b, s = _subsets.argbest(table, sizes, sizes > 0, n)
        return HigherCheegerResult(1, Fraction(b, s), (_subsets.mask_to_set(mask),))
    ranks, values = _ratio_ranks(table, sizes, n)

    full = (1 << n) - 1
    big = len(values) + 1
    levels = [[-1] * (full + 1)]
    for k in range(1, m + 1):
        prev = levels[-1]
        cur = [big] * (full + 1)
        for U in range(1, full + 1):
            low = U & -U
            best = cur[U ^ low]
            rest = U ^ low
            T = rest
            while True:
                S = T | low
                r = ranks[S]
                if r < best:
                    p = prev[U ^ S]
                    val = r if r > p else p
                    if val < best:
                        best = val
                if T == 0:
                    break
                T = (T - 1) & rest
            cur[U] = best
        levels.append(cur)

    # walk the tables back to recover one optimal tuple
    blocks = []
    U, k = full, m
    while k > 0:
        target = levels[k][U]
        low = U & -U
        if levels[k][U ^ low] == target:
            U ^= low
            continue
        rest = U ^ low
        T = rest
        while True:
            S = T | low
            if max(ranks[S], levels[k - 1][U ^ S]) == target:
                break
            T = (T - 1) & rest
        blocks.append(_subsets.mask_to_set(S))
        U ^= S
        k -= 1
    witness = tuple(sorted(blocks, key=canonical_key))
    return HigherCheegerResult(m, values[levels[m][full]], witness)


def heuristic_cheeger(G: Graph, seed: int = 0, iterations: int = 1000) -> CheegerResult:
    """Upper bound on h(G) by seeded randomized local search.

    Each step applies the best strictly improving single-vertex add, remove
    or swap; a local optimum triggers a restart from a fresh random valid
    set.  ``iterations`` counts steps plus restarts.  Results depend only on
    ``(G, seed, iterations)``.
    """
    n = G.n
    if n < 2:
        raise DomainError("heuristic_cheeger needs at least 2 vertices")
    rng = random.Random(seed)
    half = n // 2
    best: tuple[Fraction, int, tuple[int, ...]] | None = None

    def score(mask):
        size = mask.bit_count()
        return Fraction(_edge_count_out(G, mask), size), size, canonical_key(_subsets.mask_to_set(mask))

    used = 0
    while used < iterations:
        used += 1
        size = rng.randint(1, half)
        mask = _subsets.set_to_mask(rng.sample(range(n), size))
        current = score(mask)
        while used < iterations:
            inside = [v for v in range(n) if mask >> v & 1]
            outside = [v for v in range(n) if not mask >> v & 1]
            moves = []
            if len(inside) > 1:
                moves.extend(mask ^ (1 << v) for v in inside)
            if len(inside) < half:
                moves.extend(mask | (1 << v) for v in outside)
            moves.extend(mask ^ (1 << a) ^ (1 << b) for a in inside for b in outside)
            candidate = min((score(mv), mv) for mv in moves) if moves else None
            if candidate is None or candidate[0] >= current:
                break
            current, mask = candidate
            used += 1
        if best is None or current < best:
            best = current
    return CheegerResult(best[0], frozenset(best[2]), exact=False)
