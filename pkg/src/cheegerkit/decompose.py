"""Recursive Cheeger-cut decomposition into α-big expanders.

A part at depth ``d`` is tested against ``(3/8)**d * eps``.  If it expands
better than that it becomes a leaf; otherwise its Cheeger realizer is split
off.  A split side that is α-small in the whole graph is an α-small
ε-Følner set of the whole graph, which is returned as a witness that the
no-small-Følner hypothesis fails.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from ._subsets import DEFAULT_EXACT_CAP, check_cap
from .cheeger import INF, cheeger, find_small_folner, folner_ratio, is_folner
from .exceptions import DomainError, InvariantViolation, ParameterError
from .graph import Graph, boundary, induced_subgraph, relative_boundary
from .validation import check_ratio, check_vertex_set

__all__ = [
    "LAMBDA",
    "Status",
    "PartCertificate",
    "DecompositionResult",
    "VerificationReport",
    "LemmaThreeTrace",
    "decompose",
    "verify_decomposition",
    "lemma3_trace",
    "is_alpha_big",
    "ChainFailure",
]

LAMBDA = Fraction(3, 8)


class Status(str, enum.Enum):
    DECOMPOSED = "decomposed"
    WITNESS = "witness"


@dataclass(frozen=True)
class PartCertificate:
    vertices: frozenset[int]
    depth: int
    threshold: Fraction
    part_cheeger: Fraction | float
    alpha_big: bool


@dataclass(frozen=True)
class DecompositionResult:
    status: Status
    parts: tuple[PartCertificate, ...] = ()
    delta: Fraction | None = None
    witness: frozenset[int] | None = None
    witness_ratio: Fraction | None = None

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def labels(self) -> list[int] | None:
        if self.status is not Status.DECOMPOSED:
            return None
        n = sum(len(p.vertices) for p in self.parts)
        out = [-1] * n
        for i, part in enumerate(self.parts):
            for v in part.vertices:
                out[v] = i
        return out


@dataclass(frozen=True)
class LemmaThreeTrace:
    h: Fraction
    t: Fraction
    r: Fraction
    eq1_lhs: Fraction
    eq1_rhs: Fraction


@dataclass
class VerificationReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    k_within_bound: bool | None = None

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def failures(self) -> list[tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]

    @property
    def ok(self) -> bool:
        return not self.failures


class ChainFailure(InvariantViolation):
    """An α-small cut appeared although ``G`` has no α-small ε-Følner set.

    The recursion cannot then produce α-big parts; the cut and its depth are
    kept for inspection.
    """

    def __init__(self, cut, depth):
        self.cut = frozenset(cut)
        self.depth = depth
        super().__init__(
            f"cut {sorted(cut)} at depth {depth} is α-small but is not an ε-Følner set "
            "of the graph, and the graph has no α-small ε-Følner set"
        )


def is_alpha_big(size: int, alpha: Fraction, n: int) -> bool:
    return size * alpha.denominator >= alpha.numerator * n


def _check_params(eps, alpha):
    eps = check_ratio(eps, "eps")
    alpha = check_ratio(alpha, "alpha")
    if eps <= 0:
        raise ParameterError(f"eps must be positive, got {eps}")
    if not 0 < alpha <= Fraction(1, 2):
        raise ParameterError(f"alpha must lie in (0, 1/2], got {alpha}")
    return eps, alpha


def _witness(G: Graph, W) -> DecompositionResult:
    return DecompositionResult(Status.WITNESS, witness=frozenset(W), witness_ratio=folner_ratio(G, W))


def decompose(G: Graph, eps, alpha, cap: int | None = DEFAULT_EXACT_CAP) -> DecompositionResult:
    """Split ``G`` into α-big parts that are certified expanders.

    Returns ``Status.DECOMPOSED`` with per-part certificates and
    ``delta = (3/8)**(k-1) * eps``, or ``Status.WITNESS`` carrying an
    α-small ε-Følner set of ``G``.  Parts are listed by minimum vertex.
    """
    eps, alpha = _check_params(eps, alpha)
    check_cap(G.n, cap)
    if G.n == 0:
        raise DomainError("cannot decompose the empty graph")
    n = G.n
    leaves: list[PartCertificate] = []
    # depth-first, cut side before its complement
    stack: list[tuple[frozenset[int], int]] = [(G.vertices(), 0)]
    while stack:
        part, depth = stack.pop()
        if depth > n:
            raise InvariantViolation("recursion depth exceeded the vertex count")
        threshold = LAMBDA**depth * eps
        sub, index = induced_subgraph(G, part)
        h = cheeger(sub, cap)
        if h.value > threshold:
            leaves.append(
                PartCertificate(part, depth, threshold, h.value, is_alpha_big(len(part), alpha, n))
            )
            continue
        cut = frozenset(index[i] for i in h.realizer)
        if not is_alpha_big(len(cut), alpha, n):
            # the chained cutting bound says an α-small cut is ε-Følner in G,
            # but that bound has counterexamples, so check before trusting it
            if is_folner(G, cut, eps):
                return _witness(G, cut)
            W = find_small_folner(G, eps, alpha, cap)
            if W is not None:
                return _witness(G, W)
            raise ChainFailure(cut, depth)
        stack.append((part - cut, depth + 1))
        stack.append((cut, depth + 1))

    if not all(leaf.alpha_big for leaf in leaves):
        # both sides of every cut are at least as big as the cut side, so this
        # is unreachable unless the hypothesis fails in some other way
        W = find_small_folner(G, eps, alpha, cap)
        if W is None:
            raise InvariantViolation("α-small leaf but no α-small Følner set exists")
        return _witness(G, W)

    leaves.sort(key=lambda p: min(p.vertices))
    k = len(leaves)
    return DecompositionResult(Status.DECOMPOSED, tuple(leaves), LAMBDA ** (k - 1) * eps)


def verify_decomposition(
    G: Graph, eps, alpha, result: DecompositionResult, cap: int | None = DEFAULT_EXACT_CAP
) -> VerificationReport:
    """Recheck ``result`` from scratch; every failed check is listed."""
    eps = check_ratio(eps, "eps")
    alpha = check_ratio(alpha, "alpha", positive=True)
    n = G.n
    report = VerificationReport()

    if result.status is Status.WITNESS:
        W = result.witness or frozenset()
        report.add("witness nonempty", bool(W))
        report.add("witness in range", all(0 <= v < n for v in W))
        if W and all(0 <= v < n for v in W):
            b = len(boundary(G, W))
            report.add("witness half-size", 2 * len(W) <= n, f"|W|={len(W)}, |X|={n}")
            report.add("witness Følner", b <= eps * len(W), f"|∂W|={b}, eps|W|={eps * len(W)}")
            report.add("witness α-small", not is_alpha_big(len(W), alpha, n))
            if result.witness_ratio is not None:
                report.add("witness ratio", result.witness_ratio == Fraction(b, len(W)))
        return report

    parts = result.parts
    seen: list[int] = []
    for p in parts:
        seen.extend(p.vertices)
    report.add(
        "partition",
        sorted(seen) == list(range(n)) and all(p.vertices for p in parts),
        "parts must be nonempty, disjoint and cover every vertex",
    )
    k = len(parts)
    report.k_within_bound = k * alpha <= 1
    report.add("k <= floor(1/alpha)", report.k_within_bound, f"k={k}")
    if k:
        expected_delta = LAMBDA ** (k - 1) * eps
        report.add("delta", result.delta == expected_delta, f"recorded {result.delta}, expected {expected_delta}")
    for i, p in enumerate(parts):
        tag = f"part {i}"
        if not p.vertices or not all(0 <= v < n for v in p.vertices):
            report.add(f"{tag} vertices", False, "empty or out of range")
            continue
        report.add(f"{tag} depth", 0 <= p.depth <= max(k - 1, 0), f"depth={p.depth}")
        report.add(f"{tag} threshold", p.threshold == LAMBDA**p.depth * eps)
        sub, _ = induced_subgraph(G, p.vertices)
        h = cheeger(sub, cap).value
        report.add(f"{tag} cheeger recorded", h == p.part_cheeger, f"recomputed {h}")
        report.add(f"{tag} cheeger > threshold", h > LAMBDA**p.depth * eps, f"h={h}")
        if k:
            report.add(f"{tag} cheeger > delta", h > LAMBDA ** (k - 1) * eps)
        big = is_alpha_big(len(p.vertices), alpha, n)
        report.add(f"{tag} α-big", big, f"|part|={len(p.vertices)}")
        report.add(f"{tag} α-big flag", big == p.alpha_big)
    return report


def lemma3_trace(G: Graph, Y, A, cap: int | None = DEFAULT_EXACT_CAP) -> LemmaThreeTrace:
    """Both sides of the minimality inequality for a realizer ``Y`` and ``A ⊂ Y``.

    ``lhs = h`` and ``rhs = (|∂Y| - |∂^Z A| + |∂^Y A|) / |Y \\ A|`` with
    ``Z = X \\ Y``; also ``t = |A|/|Y|`` and ``r = |∂^Y A| / |∂A|``.
    """
    Y = check_vertex_set(G, Y, "Y", nonempty=True)
    A = check_vertex_set(G, A)
    h = cheeger(G, cap).value
    if h == INF or 2 * len(Y) > G.n or Fraction(len(boundary(G, Y)), len(Y)) != h:
        raise DomainError("Y does not realize the Cheeger constant")
    if not A < Y or not A:
        raise DomainError("A must be a nonempty proper subset of Y")
    dA = len(boundary(G, A))
    if dA == 0:
        raise DomainError("A has empty boundary; r is undefined")
    Z = G.vertices() - Y
    dYA = len(relative_boundary(G, A, Y))
    dZA = len(relative_boundary(G, A, Z))
    rhs = Fraction(len(boundary(G, Y)) - dZA + dYA, len(Y - A))
    return LemmaThreeTrace(h=h, t=Fraction(len(A), len(Y)), r=Fraction(dYA, dA), eq1_lhs=h, eq1_rhs=rhs)
