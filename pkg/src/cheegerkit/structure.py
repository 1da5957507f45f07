"""Maximal Følner sets and the decomposition ``X = F ⊔ Y_1 ⊔ ... ⊔ Y_k``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _subsets
from ._subsets import DEFAULT_EXACT_CAP, check_cap
from .cheeger import cheeger
from .decompose import PartCertificate, Status, decompose, is_alpha_big
from .exceptions import DomainError, InvariantViolation, ParameterError
from .graph import Graph, induced_subgraph
from .validation import check_ratio, check_vertex_set

__all__ = [
    "StructureResult",
    "StructureFailure",
    "DichotomyEntry",
    "maximal_folner",
    "is_maximal_folner",
    "check_max_trick",
    "derived_alpha",
    "structure_decompose",
    "dichotomy_report",
]


@dataclass(frozen=True)
class StructureResult:
    F: frozenset[int]
    alpha: Fraction
    derived_alpha: Fraction
    parts: tuple[PartCertificate, ...]
    delta: Fraction

    @property
    def k(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class StructureFailure:
    """Why :func:`structure_decompose` produced no decomposition."""

    reason: str
    F: frozenset[int] | None = None

    NO_FOLNER = "no ε-Følner set"
    NOT_SMALL = "maximal Følner set not α-small"

    def __bool__(self):
        return False


@dataclass(frozen=True)
class DichotomyEntry:
    graph_id: str
    best_folner_fraction: Fraction | None
    expander_part: PartCertificate | None


def _folner_flags(G: Graph, eps: Fraction, cap):
    check_cap(G.n, cap)
    table = _subsets.boundary_table(G)
    sizes = _subsets.popcounts(G.n)
    flags = _subsets.half_size(sizes, G.n) & _subsets.bounded_by(table, sizes, eps)
    return flags, sizes


def maximal_folner(G: Graph, eps, cap: int | None = DEFAULT_EXACT_CAP) -> frozenset[int] | None:
    """An inclusion-maximal ε-Følner set of largest cardinality, or ``None``.

    A Følner set of maximum cardinality cannot have a Følner strict superset,
    so it is maximal; ties go to the canonically first one.
    """
    eps = check_ratio(eps, "eps")
    if G.n == 0:
        return None
    flags, sizes = _folner_flags(G, eps, cap)
    if not flags.any():
        return None
    top = int(sizes[flags].max())
    mask = _subsets.canonical_first(np.flatnonzero(flags & (sizes == top)), G.n)
    return _subsets.mask_to_set(mask)


def is_maximal_folner(G: Graph, F, eps, cap: int | None = DEFAULT_EXACT_CAP) -> bool:
    """True iff ``F`` is ε-Følner and no strict superset of it is."""
    eps = check_ratio(eps, "eps")
    F = check_vertex_set(G, F, "F")
    if not F:
        return False
    flags, _ = _folner_flags(G, eps, cap)
    fmask = _subsets.set_to_mask(F)
    if not flags[fmask]:
        return False
    rest = [v for v in range(G.n) if v not in F]
    extra = _subsets.lift_masks(np.arange(1, 1 << len(rest), dtype=np.int64), rest)
    return not flags[extra | fmask].any()


def check_max_trick(G: Graph, F, eps, cap: int | None = DEFAULT_EXACT_CAP):
    """Brute-force the maximal-Følner trick for ``F``.

    Every nonempty ``A ⊆ Y = X \\ F`` with ``2|A| <= |X| - 2|F|`` must satisfy
    ``|∂^Y A| > eps |A|``.  Returns ``(True, None)`` or ``(False, A)`` with the
    canonically first counterexample.
    """
    eps = check_ratio(eps, "eps")
    F = check_vertex_set(G, F, "F")
    if not is_maximal_folner(G, F, eps, cap):
        raise DomainError("F is not a maximal ε-Følner set")
    Y = G.vertices() - F
    room = G.n - 2 * len(F)
    if not Y or room < 2:
        return True, None
    sub, index = induced_subgraph(G, Y)
    table = _subsets.boundary_table(sub)
    sizes = _subsets.popcounts(sub.n)
    admissible = (sizes > 0) & (2 * sizes.astype(np.int64) <= room)
    bad = admissible & _subsets.bounded_by(table, sizes, eps)
    if not bad.any():
        return True, None
    sets = [frozenset(index[i] for i in _subsets.mask_to_set(m)) for m in np.flatnonzero(bad)]
    return False, min(sets, key=lambda s: tuple(sorted(s)))


def derived_alpha(alpha) -> Fraction:
    """``(1 - 2 alpha) / (2 (1 - alpha))``: the smallness level inherited by ``X \\ F``."""
    alpha = check_ratio(alpha, "alpha", positive=True)
    if alpha >= Fraction(1, 2):
        raise ParameterError(f"alpha must lie in (0, 1/2), got {alpha}")
    return (1 - 2 * alpha) / (2 * (1 - alpha))


def structure_decompose(G: Graph, eps, alpha, cap: int | None = DEFAULT_EXACT_CAP):
    """``X = F ⊔ Y_1 ⊔ ... ⊔ Y_k`` with ``F`` maximal Følner and ``Y_i`` expanders.

    Returns a :class:`StructureResult`, or a falsy :class:`StructureFailure`
    when no Følner set exists or the maximal one is not α-small.
    """
    eps = check_ratio(eps, "eps", positive=True)
    a2 = derived_alpha(alpha)
    alpha = check_ratio(alpha, "alpha")
    F = maximal_folner(G, eps, cap)
    if F is None:
        return StructureFailure(StructureFailure.NO_FOLNER)
    if is_alpha_big(len(F), alpha, G.n):
        return StructureFailure(StructureFailure.NOT_SMALL, F)
    Y = G.vertices() - F
    sub, index = induced_subgraph(G, Y)
    inner = decompose(sub, eps, a2, cap)
    if inner.status is not Status.DECOMPOSED:
        raise InvariantViolation(
            f"X \\ F has an α'-small Følner set {sorted(index[i] for i in inner.witness)}"
        )
    parts = []
    floor = Fraction(1, 2) - alpha
    for p in inner.parts:
        verts = frozenset(index[i] for i in p.vertices)
        if not is_alpha_big(len(verts), floor, G.n):
            raise InvariantViolation(f"part {sorted(verts)} is not (1/2 - α)-big in X")
        parts.append(PartCertificate(verts, p.depth, p.threshold, p.part_cheeger, p.alpha_big))
    parts.sort(key=lambda p: min(p.vertices))
    return StructureResult(F, alpha, a2, tuple(parts), inner.delta)


def dichotomy_report(graphs, eps, alpha, cap: int | None = DEFAULT_EXACT_CAP, ids=None):
    """Per graph: the largest Følner fraction and, if available, a certified expander part."""
    eps = check_ratio(eps, "eps", positive=True)
    alpha = check_ratio(alpha, "alpha", positive=True)
    graphs = list(graphs)
    ids = list(ids) if ids is not None else [str(i) for i in range(len(graphs))]
    entries = []
    for gid, G in zip(ids, graphs):
        F = maximal_folner(G, eps, cap)
        fraction = Fraction(len(F), G.n) if F is not None else None
        part = None
        if F is None:
            h = cheeger(G, cap).value
            part = PartCertificate(G.vertices(), 0, eps, h, True)
        else:
            res = structure_decompose(G, eps, alpha, cap)
            if res:
                part = max(res.parts, key=lambda p: (len(p.vertices), -min(p.vertices)))
        entries.append(DichotomyEntry(gid, fraction, part))
    return entries
