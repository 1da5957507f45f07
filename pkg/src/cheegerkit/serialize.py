"""Canonical result documents.

Documents are JSON objects with the top-level keys ``command``,
``input_digest``, ``status`` and ``payload`` in that order.  Ratios are
``"p/q"`` strings, the infinite Cheeger value is ``"inf"``, vertex sets are
sorted integer lists; no floating point is ever written.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .cheeger import INF
from .decompose import DecompositionResult, PartCertificate, Status
from .exceptions import DomainError
from .graph import Graph, format_graph
from .validation import check_ratio

__all__ = [
    "ratio_str",
    "parse_ratio_str",
    "graph_digest",
    "document",
    "dumps",
    "part_to_dict",
    "decomposition_to_payload",
    "decomposition_from_payload",
]


def ratio_str(value) -> str:
    if value == INF:
        return "inf"
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_ratio_str(text: str):
    if text == "inf":
        return INF
    return check_ratio(text)


def graph_digest(G: Graph) -> str:
    return "sha256:" + hashlib.sha256(format_graph(G).encode()).hexdigest()


def vertex_list(vertices) -> list[int]:
    return sorted(int(v) for v in vertices)


def document(command: str, digest, status: str, payload: dict) -> dict:
    return {"command": command, "input_digest": digest, "status": status, "payload": payload}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def part_to_dict(p: PartCertificate) -> dict:
    return {
        "vertices": vertex_list(p.vertices),
        "depth": p.depth,
        "threshold": ratio_str(p.threshold),
        "part_cheeger": ratio_str(p.part_cheeger),
        "alpha_big": p.alpha_big,
    }


def decomposition_to_payload(result: DecompositionResult, eps, alpha) -> dict:
    payload = {"epsilon": ratio_str(eps), "alpha": ratio_str(alpha)}
    if result.status is Status.WITNESS:
        payload["witness"] = vertex_list(result.witness)
        payload["witness_ratio"] = ratio_str(result.witness_ratio)
    else:
        payload["k"] = result.k
        payload["delta"] = ratio_str(result.delta)
        payload["parts"] = [part_to_dict(p) for p in result.parts]
    return payload


def decomposition_from_payload(status: str, payload: dict) -> DecompositionResult:
    try:
        status = Status(status)
        if status is Status.WITNESS:
            return DecompositionResult(
                status,
                witness=frozenset(payload["witness"]),
                witness_ratio=parse_ratio_str(payload["witness_ratio"]),
            )
        parts = tuple(
            PartCertificate(
                frozenset(p["vertices"]),
                int(p["depth"]),
                parse_ratio_str(p["threshold"]),
                parse_ratio_str(p["part_cheeger"]),
                bool(p["alpha_big"]),
            )
            for p in payload["parts"]
        )
        return DecompositionResult(status, parts, parse_ratio_str(payload["delta"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"not a decomposition document: {exc}") from exc
