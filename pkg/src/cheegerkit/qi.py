"""Quasi-isometries between finite connected graphs and their size bounds.

A map ``f: X -> Y`` is an (L, A)-quasi-isometry when

    d_X(x, x') / L - A <= d_Y(f x, f x') <= L d_X(x, x') + A

for all pairs and every vertex of ``Y`` lies within ``A`` of the image.  The
checks below compare these inequalities exactly (distances are integers and
``L``, ``A`` are fractions).
"""

from __future__ import annotations

import enum
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import DomainError, ParameterError
from .graph import Graph, all_pairs_distances, is_connected, max_degree, parse_graph
from .validation import check_ratio, check_vertex_set

__all__ = [
    "CheckStatus",
    "QiInstance",
    "QiReport",
    "parse_map",
    "verify_qi",
    "beta_bound",
    "fiber_bound_check",
    "density_bound_check",
    "preimage_small_check",
    "worst_preimage_check",
]

logger = logging.getLogger(__name__)


class CheckStatus(str, enum.Enum):
    HOLDS = "holds"
    VACUOUS = "vacuous"
    FAILS = "fails"


@dataclass(frozen=True)
class QiInstance:
    X: Graph
    Y: Graph
    f: tuple[int, ...]
    L: Fraction
    A: Fraction

    def __post_init__(self):
        object.__setattr__(self, "L", check_ratio(self.L, "L"))
        object.__setattr__(self, "A", check_ratio(self.A, "A"))
        if self.L < 1:
            raise ParameterError(f"L must be >= 1, got {self.L}")
        if len(self.f) != self.X.n:
            raise DomainError(f"map has {len(self.f)} entries but X has {self.X.n} vertices")
        if any(not 0 <= y < self.Y.n for y in self.f):
            raise DomainError("map sends a vertex outside Y")
        if not is_connected(self.X) or not is_connected(self.Y):
            raise DomainError("quasi-isometry checks need connected graphs")

    @property
    def D(self) -> int:
        return max(max_degree(self.X), max_degree(self.Y))

    def with_constants(self, L, A) -> "QiInstance":
        return QiInstance(self.X, self.Y, self.f, L, A)


@dataclass
class QiReport:
    ok: bool
    pair_violations: list[tuple[int, int, str]] = field(default_factory=list)
    density_violations: list[int] = field(default_factory=list)


def parse_map(text: str, n_domain: int) -> tuple[int, ...]:
    """Parse ``"x y"`` lines; every ``x`` in ``0..n_domain-1`` exactly once."""
    image: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            x, y = (int(p) for p in parts)
        except ValueError:
            raise DomainError(f"malformed map line {lineno}: {raw!r}") from None
        if not 0 <= x < n_domain:
            raise DomainError(f"map line {lineno}: domain vertex {x} out of range")
        if x in image:
            raise DomainError(f"map line {lineno}: vertex {x} mapped twice")
        image[x] = y
    missing = [x for x in range(n_domain) if x not in image]
    if missing:
        raise DomainError(f"map leaves vertices unmapped: {missing[:10]}")
    return tuple(image[x] for x in range(n_domain))


def verify_qi(inst: QiInstance) -> QiReport:
    dX = all_pairs_distances(inst.X)
    dY = all_pairs_distances(inst.Y)
    L, A = inst.L, inst.A
    f = inst.f
    report = QiReport(ok=True)
    for x in range(inst.X.n):
        for x2 in range(x + 1, inst.X.n):
            d, e = dX[x][x2], dY[f[x]][f[x2]]
            if d / L - A > e:
                report.pair_violations.append((x, x2, "lower"))
            if e > L * d + A:
                report.pair_violations.append((x, x2, "upper"))
    image = set(f)
    for y in range(inst.Y.n):
        if min(dY[y][z] for z in image) > A:
            report.density_violations.append(y)
    report.ok = not report.pair_violations and not report.density_violations
    return report


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ParameterError(
            f"{what} = {value} is not an integer; round L and A up to integers "
            "(an (L, A)-quasi-isometry is also one for any larger L, A, and larger "
            "constants only shrink beta, so the bound stays sound)"
        )
    return int(value)


def beta_bound(D: int, L, A, alpha) -> Fraction:
    """``D ** -(L (A + 2) + A + 2) * alpha``, exactly."""
    L = check_ratio(L, "L")
    A = check_ratio(A, "A")
    alpha = check_ratio(alpha, "alpha")
    if D <= 1:
        logger.info("degree bound D=%d <= 1: beta_bound returns alpha unchanged", D)
        return alpha
    exponent = _integral(L * (A + 2) + A + 2, "exponent L(A+2)+A+2")
    return alpha / Fraction(D) ** exponent


def _rounded(inst: QiInstance) -> tuple[int, int]:
    return math.ceil(inst.L), math.ceil(inst.A)


def _require_qi(inst: QiInstance) -> None:
    if not verify_qi(inst).ok:
        raise DomainError("instance is not an (L, A)-quasi-isometry; run verify_qi first")


def _degree(inst: QiInstance) -> int:
    # the ball-size estimate D**(r+1) needs D >= 2
    return max(inst.D, 2)


def fiber_bound_check(inst: QiInstance) -> tuple[bool, int, int]:
    """Largest fiber ``|f^-1(y)|`` against ``D ** (L (A + 2) + 1)``.

    Returns ``(holds, max_fiber, bound)``.  Non-integral exponents are handled
    by rounding ``L`` and ``A`` up first.
    """
    _require_qi(inst)
    exponent = inst.L * (inst.A + 2) + 1
    if exponent.denominator != 1:
        L, A = _rounded(inst)
        exponent = Fraction(L * (A + 2) + 1)
    bound = _degree(inst) ** int(exponent)
    max_fiber = max(Counter(inst.f).values())
    return max_fiber <= bound, max_fiber, bound


def density_bound_check(inst: QiInstance) -> tuple[bool, dict[str, int]]:
    """``|Y| <= D**(A+1) |f(X)| <= D**(A+1) |X|`` (with ``A`` rounded up if needed)."""
    _require_qi(inst)
    factor = _degree(inst) ** (math.ceil(inst.A) + 1)
    sizes = {"Y": inst.Y.n, "image": len(set(inst.f)), "X": inst.X.n, "factor": factor}
    holds = inst.Y.n <= factor * sizes["image"] <= factor * inst.X.n
    return holds, sizes


def preimage_small_check(inst: QiInstance, B, alpha) -> CheckStatus:
    """Preimage of a β-small ``B ⊆ Y`` is α-small in ``X``.

    ``VACUOUS`` means β is so small that only the empty set is β-small.
    """
    _require_qi(inst)
    alpha = check_ratio(alpha, "alpha", positive=True)
    B = check_vertex_set(inst.Y, B, "B")
    beta = _beta(inst, alpha)
    if not len(B) < beta * inst.Y.n:
        raise DomainError(f"B has {len(B)} vertices and is not beta-small (beta = {beta})")
    preimage = sum(1 for y in inst.f if y in B)
    if not preimage < alpha * inst.X.n:
        return CheckStatus.FAILS
    if beta * inst.Y.n <= 1:
        return CheckStatus.VACUOUS
    return CheckStatus.HOLDS


def _beta(inst: QiInstance, alpha: Fraction) -> Fraction:
    try:
        return beta_bound(inst.D, inst.L, inst.A, alpha)
    except ParameterError:
        L, A = _rounded(inst)
        return beta_bound(inst.D, L, A, alpha)


def worst_preimage_check(inst: QiInstance, alpha):
    """Run :func:`preimage_small_check` on the β-small set with the largest preimage.

    The heaviest β-small set collects the largest fibers, so it passing means
    every β-small set passes.  Returns ``(status, beta, B)``.
    """
    _require_qi(inst)
    alpha = check_ratio(alpha, "alpha", positive=True)
    beta = _beta(inst, alpha)
    limit = math.ceil(beta * inst.Y.n) - 1
    fibers = Counter(inst.f)
    heavy = sorted(range(inst.Y.n), key=lambda y: (-fibers.get(y, 0), y))[: max(limit, 0)]
    B = frozenset(heavy)
    return preimage_small_check(inst, B, alpha), beta, B


def load_instance(x_text: str, y_text: str, map_text: str, L, A) -> QiInstance:
    X = parse_graph(x_text)
    Y = parse_graph(y_text)
    return QiInstance(X, Y, parse_map(map_text, X.n), L, A)
