"""Command-line interface.

Exit codes: 0 when a result was computed (including witnesses and vacuous
outcomes, which are flagged in ``status``), 1 for usage errors, 2 for I/O,
parse, cap and budget errors, 3 when an internal invariant check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import qi
from .cheeger import (
    DEFAULT_BUDGET,
    INF,
    cheeger,
    enumerate_folner,
    find_small_folner,
    folner_ratio,
    heuristic_cheeger,
    higher_order_cheeger,
)
from ._subsets import DEFAULT_EXACT_CAP
from .decompose import decompose, verify_decomposition
from .exceptions import (
    BudgetExceededError,
    CapExceededError,
    CheegerKitError,
    GraphParseError,
    InvariantViolation,
)
from .generators import FAMILIES, generate
from .graph import Graph, format_graph, parse_graph
from .serialize import (
    decomposition_from_payload,
    decomposition_to_payload,
    document,
    dumps,
    graph_digest,
    part_to_dict,
    ratio_str,
    vertex_list,
)
from .structure import check_max_trick, dichotomy_report, maximal_folner, structure_decompose
from .validation import check_ratio


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ratio(text):
    try:
        return check_ratio(text)
    except CheegerKitError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> Graph:
    return parse_graph(_read(path))


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires " + ", ".join("--" + m.replace("_", "-") for m in missing))


# -- commands ---------------------------------------------------------------
# each returns (digest, status, payload)


def cmd_cheeger(args):
    G = _load(args.input)
    if args.heuristic:
        res = heuristic_cheeger(G, args.seed, args.iterations)
    else:
        res = cheeger(G, args.exact_cap)
    payload = {
        "value": ratio_str(res.value),
        "realizer": None if res.realizer is None else vertex_list(res.realizer),
        "exact": res.exact,
    }
    return graph_digest(G), "infinite" if res.is_infinite else "ok", payload


def cmd_folner(args):
    _need(args, "epsilon")
    G = _load(args.input)
    if args.alpha is not None:
        W = find_small_folner(G, args.epsilon, args.alpha, args.exact_cap)
        payload = {
            "epsilon": ratio_str(args.epsilon),
            "alpha": ratio_str(args.alpha),
            "witness": None if W is None else vertex_list(W),
            "ratio": None if W is None else ratio_str(folner_ratio(G, W)),
        }
        return graph_digest(G), "found" if W is not None else "none", payload
    sets = enumerate_folner(G, args.epsilon, args.exact_cap)
    payload = {"epsilon": ratio_str(args.epsilon), "count": len(sets), "sets": [vertex_list(s) for s in sets]}
    return graph_digest(G), "ok", payload


def cmd_decompose(args):
    _need(args, "epsilon", "alpha")
    G = _load(args.input)
    res = decompose(G, args.epsilon, args.alpha, args.exact_cap)
    return graph_digest(G), res.status.value, decomposition_to_payload(res, args.epsilon, args.alpha)


def cmd_verify(args):
    _need(args, "result")
    G = _load(args.input)
    doc = json.loads(_read(args.result))
    if doc.get("input_digest") != graph_digest(G):
        raise UsageError("result document was computed for a different graph (digest mismatch)")
    payload_in = doc["payload"]
    eps = args.epsilon if args.epsilon is not None else check_ratio(payload_in["epsilon"])
    alpha = args.alpha if args.alpha is not None else check_ratio(payload_in["alpha"])
    result = decomposition_from_payload(doc["status"], payload_in)
    report = verify_decomposition(G, eps, alpha, result, args.exact_cap)
    payload = {
        "epsilon": ratio_str(eps),
        "alpha": ratio_str(alpha),
        "result_status": result.status.value,
        "k_within_bound": report.k_within_bound,
        "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in report.checks],
        "failures": [n for n, ok, _ in report.checks if not ok],
    }
    return graph_digest(G), "verified" if report.ok else "failed", payload


def cmd_maximal_folner(args):
    _need(args, "epsilon")
    G = _load(args.input)
    F = maximal_folner(G, args.epsilon, args.exact_cap)
    payload = {"epsilon": ratio_str(args.epsilon), "F": None, "max_trick_holds": None, "counterexample": None}
    if F is not None:
        holds, counter = check_max_trick(G, F, args.epsilon, args.exact_cap)
        payload.update(
            F=vertex_list(F),
            max_trick_holds=holds,
            counterexample=None if counter is None else vertex_list(counter),
        )
    return graph_digest(G), "found" if F is not None else "none", payload


def cmd_structure(args):
    _need(args, "epsilon", "alpha")
    G = _load(args.input)
    res = structure_decompose(G, args.epsilon, args.alpha, args.exact_cap)
    payload = {"epsilon": ratio_str(args.epsilon), "alpha": ratio_str(args.alpha)}
    if not res:
        payload["reason"] = res.reason
        payload["F"] = None if res.F is None else vertex_list(res.F)
        return graph_digest(G), "none", payload
    payload.update(
        F=vertex_list(res.F),
        derived_alpha=ratio_str(res.derived_alpha),
        k=res.k,
        delta=ratio_str(res.delta),
        parts=[part_to_dict(p) for p in res.parts],
    )
    return graph_digest(G), "decomposed", payload


def cmd_dichotomy(args):
    _need(args, "epsilon", "alpha")
    graphs = [_load(p) for p in args.inputs]
    entries = dichotomy_report(graphs, args.epsilon, args.alpha, args.exact_cap, ids=args.inputs)
    rows = []
    for G, e in zip(graphs, entries):
        rows.append(
            {
                "graph": e.graph_id,
                "input_digest": graph_digest(G),
                "best_folner_fraction": None if e.best_folner_fraction is None else ratio_str(e.best_folner_fraction),
                "expander_part": None if e.expander_part is None else part_to_dict(e.expander_part),
            }
        )
    digest = [r["input_digest"] for r in rows]
    payload = {"epsilon": ratio_str(args.epsilon), "alpha": ratio_str(args.alpha), "entries": rows}
    return digest, "ok", payload


def cmd_rho(args):
    _need(args, "m")
    G = _load(args.input)
    res = higher_order_cheeger(G, args.m, args.budget)
    payload = {
        "m": res.m,
        "value": ratio_str(res.value),
        "witness": None if res.witness is None else [vertex_list(s) for s in res.witness],
    }
    return graph_digest(G), "infinite" if res.value == INF else "ok", payload


def cmd_qi(args):
    _need(args, "codomain", "map", "L", "A")
    X = _load(args.input)
    Y = _load(args.codomain)
    inst = qi.QiInstance(X, Y, qi.parse_map(_read(args.map), X.n), args.L, args.A)
    report = qi.verify_qi(inst)
    payload = {
        "L": ratio_str(inst.L),
        "A": ratio_str(inst.A),
        "D": inst.D,
        "is_quasi_isometry": report.ok,
        "pair_violations": [[a, b, kind] for a, b, kind in report.pair_violations],
        "density_violations": report.density_violations,
    }
    if report.ok:
        holds, max_fiber, bound = qi.fiber_bound_check(inst)
        payload["fiber_bound"] = {"holds": holds, "max_fiber": max_fiber, "bound": bound}
        holds, sizes = qi.density_bound_check(inst)
        payload["density_bound"] = {"holds": holds, **sizes}
        if args.alpha is not None:
            status, beta, B = qi.worst_preimage_check(inst, args.alpha)
            payload["preimage_small"] = {
                "alpha": ratio_str(args.alpha),
                "beta": ratio_str(beta),
                "status": status.value,
                "worst_B": vertex_list(B),
            }
    digest = [graph_digest(X), graph_digest(Y)]
    return digest, "quasi-isometry" if report.ok else "not-quasi-isometry", payload


def cmd_gen(args):
    G = generate(args.family, *args.params, seed=args.seed)
    if args.output == "text":
        return None, None, format_graph(G)
    payload = {
        "family": args.family,
        "params": list(args.params),
        "seed": args.seed if args.family == "random_regular" else None,
        "n": G.n,
        "m": G.m,
        "edge_list": format_graph(G),
    }
    return graph_digest(G), "ok", payload


COMMANDS = {
    "cheeger": cmd_cheeger,
    "folner": cmd_folner,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "maximal-folner": cmd_maximal_folner,
    "structure": cmd_structure,
    "dichotomy": cmd_dichotomy,
    "rho": cmd_rho,
    "qi": cmd_qi,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--epsilon", type=_ratio)
    common.add_argument("--alpha", type=_ratio)
    common.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP)
    common.add_argument("--output", choices=("json", "text"), default="json")

    parser = _Parser(prog="cheegerkit", description="Exact expansion certificates for finite graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, input_=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if input_:
            p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
        return p

    p = add("cheeger", "exact (or heuristic) Cheeger constant")
    p.add_argument("--heuristic", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=1000)
    add("folner", "find an alpha-small Følner set (with --alpha) or list all Følner sets")
    add("decompose", "decompose into alpha-big expanders or return a Følner witness")
    add("verify", "recheck a decompose result document").add_argument("--result", required=True)
    add("maximal-folner", "maximal Følner set and the maximal-set trick check")
    add("structure", "decomposition X = F + Y_1 + ... + Y_k")
    add("dichotomy", "Følner fraction / expander part per graph", input_=False).add_argument(
        "--input", dest="inputs", action="append", required=True
    )
    p = add("rho", "higher-order Cheeger constant")
    p.add_argument("--m", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p = add("qi", "quasi-isometry check and size bounds")
    p.add_argument("--codomain", help="edge-list file of the target graph")
    p.add_argument("--map", help="map file with lines 'x y'")
    p.add_argument("--L", dest="L", type=_ratio)
    p.add_argument("--A", dest="A", type=_ratio)
    p = add("gen", "generate a corpus graph", input_=False)
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _text(doc) -> str:
    lines = [f"command: {doc['command']}", f"status: {doc['status']}", f"input_digest: {doc['input_digest']}"]
    for key, value in doc["payload"].items():
        lines.append(f"{key}: {json.dumps(value, ensure_ascii=False)}")
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        digest, status, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except (CapExceededError, BudgetExceededError, GraphParseError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=stderr)
        return 3
    except CheegerKitError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    if status is None:
        stdout.write(payload)
        return 0
    doc = document(args.command, digest, status, payload)
    stdout.write(dumps(doc) if args.output == "json" else _text(doc))
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
