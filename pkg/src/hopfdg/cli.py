"""Command-line front end.

Subcommands: invariant, antipode, verify, cone-member.  Graphs come from
the plain-text format of digraph.parse_graph.  Exit codes: 0 success,
1 a verified property failed, 2 bad input, 3 a resource bound refused
the computation.  Output is deterministic byte for byte for fixed input
and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .cones import (audit_flow, base_member, build_flow_network,
                    check_cone_polytope_agreement, cone_member, max_flow)
from .digraph import Digraph, disjoint_union, parse_graph
from .errors import (GraphParseError, ResourceLimitError, SizeLimitError,
                     UnboundedFlowError, WorkLimitError)
from .hopf import BASIC, EDGE, FormalSum, antipode, character_polynomial
from .invariants import (b_polynomial, check_edge_reciprocity,
                         check_reciprocity, edge_invariant, strict_chromatic,
                         weak_chromatic)
from .limits import DEFAULT_MAX_VERTICES
from .rings import BinPoly
from .submodular import check_low_morphism

_INVARIANTS: dict[str, Callable[..., BinPoly]] = {
    "strict": strict_chromatic,
    "weak": weak_chromatic,
    "bpoly": b_polynomial,
    "psi": edge_invariant,
}


def _load_graph(path: str) -> Digraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc.strerror}", 1) from exc
    return parse_graph(text)


def _graph_json(g: Digraph) -> dict:
    return {"vertices": list(g.vertices),
            "edges": [[u, v] for u, v in g.edge_list]}


def _coeff_str(c: Any) -> str:
    return str(c)


def _print_invariant(g: Digraph, which: str, poly: BinPoly, fmt: str) -> None:
    if fmt == "json":
        payload = {
            "graph": _graph_json(g),
            "invariant": which,
            "basis": "binomial",
            "coeffs": [{"k": k, "value": _coeff_str(c)}
                       for k, c in enumerate(poly.coeffs) if c != 0],
        }
        print(json.dumps(payload))
        return
    print(f"graph: {len(g.vertices)} vertices, {len(g.edges)} edges")
    print(f"invariant: {which}")
    print(f"binomial: {poly.binomial_str()}")
    print(f"monomial: {poly.monomial_str()}")


def _print_antipode(g: Digraph, s: FormalSum, fmt: str) -> None:
    if fmt == "json":
        payload = {
            "graph": _graph_json(g),
            "terms": [{"coefficient": c, "edges": [[u, v] for u, v in t.edge_list]}
                      for t, c in s.items()],
        }
        print(json.dumps(payload))
        return
    print(f"antipode: {len(s)} terms on {len(g.vertices)} vertices")
    for term, c in s.items():
        edges = ", ".join(f"{u}->{v}" for u, v in term.edge_list)
        print(f"{c:+d} * [{edges}]")


def _parse_vector(g: Digraph, text: str) -> dict[str, Fraction]:
    parts = [p.strip().replace("−", "-") for p in text.split(",")]
    if parts == [""]:
        parts = []
    if len(parts) != len(g.vertices):
        raise ValueError(
            f"vector has {len(parts)} entries for {len(g.vertices)} vertices")
    coords = {}
    for v, part in zip(g.vertices, parts):
        try:
            coords[v] = Fraction(part)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational {part!r}: {exc}") from exc
    return coords


# ---------------------------------------------------------------- suites

class _Suite:
    """Collects named pass/fail checks and renders them."""

    def __init__(self) -> None:
        self.checks: list[tuple[str, bool, str]] = []

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, bool(passed), detail))

    def skip_note(self, name: str, note: str) -> None:
        self.checks.append((name, True, f"skipped: {note}"))

    @property
    def failed(self) -> int:
        return sum(1 for _, ok, _ in self.checks if not ok)


def _fresh_labels(taken: Iterable[str], count: int) -> list[str]:
    used = set(taken)
    out = []
    i = 0
    while len(out) < count:
        cand = f"x{i}"
        if cand not in used:
            out.append(cand)
            used.add(cand)
        i += 1
    return out


def _random_subset(rng: random.Random, labels: Sequence[str]) -> frozenset[str]:
    return frozenset(lab for lab in labels if rng.random() < 0.5)


def _random_graph(rng: random.Random, labels: Sequence[str], p: float = 0.4) -> Digraph:
    edges = [(u, v) for u in labels for v in labels
             if u != v and rng.random() < p]
    return Digraph(labels, edges)


def _axiom_instance(g: Digraph, rng: random.Random) -> list[str]:
    """One seeded round of the structural axioms; returns failure notes."""
    problems = []
    verts = g.vertices
    empty = Digraph(())

    if disjoint_union(g, empty) != g or disjoint_union(empty, g) != g:
        problems.append("unit: merging with the empty graph changed the graph")
    if g.coproduct(()) != (empty, g):
        problems.append("unit: splitting off the empty set failed")
    if g.coproduct(verts) != (g, empty):
        problems.append("unit: splitting off everything failed")

    # coassociativity along a random chain R inside S
    s_set = _random_subset(rng, verts)
    r_set = frozenset(lab for lab in s_set if rng.random() < 0.5)
    one = None
    split = g.coproduct(s_set)
    if split is not None:
        inner = split[0].coproduct(r_set)
        if inner is not None:
            one = (inner[0], inner[1], split[1])
    two = None
    split2 = g.coproduct(r_set)
    if split2 is not None:
        inner2 = split2[1].coproduct(s_set - r_set)
        if inner2 is not None:
            two = (split2[0], inner2[0], inner2[1])
    if one != two:
        problems.append(f"coassociativity: orders differ at S={sorted(s_set)}, R={sorted(r_set)}")
    blocks = (r_set, s_set - r_set, frozenset(verts) - s_set)
    if all(blocks):
        minor = g.composition_minor(blocks)
        if (minor is not None) != (one is not None):
            problems.append("coassociativity: minor merge disagrees about the zero case")
        elif minor is not None:
            rebuilt = disjoint_union(disjoint_union(one[0], one[1]), one[2])
            if Digraph(minor.vertices, rebuilt.edges) != minor:
                problems.append("coassociativity: minor merge kept the wrong edges")

    # compatibility of merge and split, with a random bystander graph
    aux = _random_graph(rng, _fresh_labels(verts, rng.randint(0, 3)))
    merged = disjoint_union(g, aux)
    mixed = _random_subset(rng, merged.vertices)
    whole = merged.coproduct(mixed)
    left = g.coproduct(mixed & set(verts))
    right = aux.coproduct(mixed & set(aux.vertices))
    if (whole is None) != (left is None or right is None):
        problems.append("compatibility: zero cases disagree")
    elif whole is not None:
        expect = (disjoint_union(left[0], right[0]),
                  disjoint_union(left[1], right[1]))
        if whole != expect:
            problems.append("compatibility: split of a merge has wrong parts")

    # naturality under a random relabeling
    fresh = _fresh_labels((), len(verts))
    rng.shuffle(fresh)
    sigma = dict(zip(verts, fresh))
    moved = g.relabel(sigma)
    s_img = frozenset(sigma[v] for v in s_set)
    if moved.is_lower_half(s_img) != g.is_lower_half(s_set):
        problems.append("naturality: relabeling changed a lower half")
    if g.is_lower_half(s_set):
        a = g.coproduct(s_set)
        b = moved.coproduct(s_img)
        if (a[0].relabel(sigma), a[1].relabel(sigma)) != b:
            problems.append("naturality: relabeling does not commute with splitting")
    return problems


def _suite_hopf_axioms(g: Digraph, seed: int, samples: int) -> _Suite:
    suite = _Suite()
    rng = random.Random(seed)
    bad: list[str] = []
    for i in range(samples):
        for note in _axiom_instance(g, rng):
            bad.append(f"round {i}: {note}")
    suite.record(f"hopf-axioms ({samples} seeded rounds)", not bad,
                 "; ".join(bad[:3]))
    return suite


def _suite_morphism(g: Digraph, seed: int, samples: int) -> _Suite:
    suite = _Suite()
    nv = len(g.vertices)
    failures = []
    count = 0
    for mask in range(1 << nv):
        sub = frozenset(g.vertices[i] for i in range(nv) if mask >> i & 1)
        check = check_low_morphism(g, sub)
        count += 1
        if not check.passed:
            failures.append(f"S={sorted(sub)}")
    suite.record(f"cut-function morphism ({count} splits)", not failures,
                 "; ".join(failures[:3]))
    return suite


def _suite_theorem1(g: Digraph, seed: int, samples: int) -> _Suite:
    suite = _Suite()
    report = check_cone_polytope_agreement(g, samples=samples, seed=seed)
    detail = ""
    if report.mismatches:
        vec, in_base, in_cone = report.mismatches[0]
        detail = f"first mismatch {dict(sorted(vec.items()))}: base={in_base} cone={in_cone}"
    if report.audit_problems:
        detail += f" flow audits failed: {len(report.audit_problems)}"
    suite.record(f"polytope/cone agreement ({report.samples} vectors)",
                 report.passed, detail)
    return suite


def _suite_reciprocity(g: Digraph, seed: int, samples: int) -> _Suite:
    suite = _Suite()
    if g.is_acyclic():
        for n in range(1, 6):
            check = check_reciprocity(g, n)
            suite.record(f"strict/weak reciprocity at n={n}", check.equal is True,
                         f"lhs={check.lhs} rhs={check.rhs}")
    else:
        suite.skip_note("strict/weak reciprocity",
                        "hypothesis violated: graph has a directed cycle")
    for n in range(5):
        check = check_edge_reciprocity(g, n)
        suite.record(f"edge reciprocity at n={n}", check.equal is True,
                     f"lhs={check.lhs} rhs={check.rhs}")
    return suite


_SUITES = {
    "hopf-axioms": _suite_hopf_axioms,
    "morphism": _suite_morphism,
    "theorem1": _suite_theorem1,
    "reciprocity": _suite_reciprocity,
}


# ---------------------------------------------------------------- commands

def _cmd_invariant(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    which = args.which
    if args.parallel > 1 and which in ("strict", "psi"):
        char = BASIC if which == "strict" else EDGE
        poly = character_polynomial(g, char, max_vertices=args.max_vertices,
                                    workers=args.parallel)
    else:
        poly = _INVARIANTS[which](g, max_vertices=args.max_vertices)
    _print_invariant(g, which, poly, args.format)
    return 0


def _cmd_antipode(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    s = antipode(g, max_vertices=args.max_vertices, workers=args.parallel)
    _print_antipode(g, s, args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    suite = _Suite()
    for name in names:
        part = _SUITES[name](g, args.seed, args.samples)
        suite.checks.extend(part.checks)
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "passed": suite.failed == 0,
            "checks": [{"name": n, "passed": ok, "detail": d}
                       for n, ok, d in suite.checks],
        }
        print(json.dumps(payload))
    else:
        for name, ok, detail in suite.checks:
            mark = "PASS" if ok else "FAIL"
            line = f"{mark} {name}"
            if detail and (not ok or detail.startswith("skipped")):
                line += f" ({detail})"
            print(line)
        verdict = "all passed" if suite.failed == 0 else f"{suite.failed} failed"
        print(f"verify {args.suite}: {len(suite.checks)} checks, {verdict}")
    return 0 if suite.failed == 0 else 1


def _cmd_cone_member(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    vec = _parse_vector(g, args.vector)
    total = sum(vec.values(), start=Fraction(0))
    witness = cone_member(g, vec)
    flow_value = None
    if total == 0:
        result = max_flow(build_flow_network(g, vec))
        flow_value = result.value

    if args.format == "json":
        payload = {
            "vector": {v: str(vec[v]) for v in g.vertices},
            "member": witness is not None,
            "flow_value": None if flow_value is None else str(flow_value),
            "witness": None if witness is None else
            {f"{u}->{v}": str(w) for (u, v), w in sorted(witness.items())},
        }
        print(json.dumps(payload))
        return 0

    print("vector: " + " ".join(f"{v}={vec[v]}" for v in g.vertices))
    if total != 0:
        print(f"member: no (coordinates sum to {total}, need 0)")
        return 0
    print(f"flow value: {flow_value}")
    if witness is None:
        print("member: no")
    else:
        print("member: yes")
        shown = ", ".join(f"{u}->{v}: {w}" for (u, v), w in sorted(witness.items()) if w)
        print(f"witness: {shown if shown else '(zero combination)'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfdg",
        description="Exact invariants, antipodes and cone membership for directed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, parallel: bool = False) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES,
                       help="refuse composition enumerations beyond this size")
        if parallel:
            p.add_argument("--parallel", type=int, default=1, metavar="N",
                           help="worker processes for the composition engine")

    p_inv = sub.add_parser("invariant", help="print one polynomial invariant")
    p_inv.add_argument("which", choices=tuple(_INVARIANTS))
    p_inv.add_argument("graph", help="graph file")
    common(p_inv, parallel=True)
    p_inv.set_defaults(fn=_cmd_invariant)

    p_anti = sub.add_parser("antipode", help="print the antipode as a formal sum")
    p_anti.add_argument("graph")
    common(p_anti, parallel=True)
    p_anti.set_defaults(fn=_cmd_antipode)

    p_ver = sub.add_parser("verify", help="run a verification suite on the graph")
    p_ver.add_argument("suite", choices=(*_SUITES, "all"))
    p_ver.add_argument("graph")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--samples", type=int, default=200)
    common(p_ver)
    p_ver.set_defaults(fn=_cmd_verify)

    p_cone = sub.add_parser(
        "cone-member",
        help="decide membership of a vector in the edge cone "
             "(use -- before a vector starting with a minus sign)")
    p_cone.add_argument("graph")
    p_cone.add_argument("vector",
                        help="comma-separated rationals, one per vertex in sorted order")
    common(p_cone)
    p_cone.set_defaults(fn=_cmd_cone_member)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except (UnboundedFlowError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed the pipe (hopfdg ... | head); not our failure
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
