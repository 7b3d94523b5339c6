"""Base polytopes, edge cones, and the exact max-flow bridge between them.

For a graph g, the cut function (0 on lower halves, INF elsewhere) has a
base polytope: vectors x summing to the full-set value with x(A) below
the function value for every A.  The cone side is generated by one vector
per edge, head minus tail.  Membership in the cone is decided by max-flow
on a small network and, when the answer is yes, the flow values on the
original edges are the certificate combination; when it is no, the
minimum cut exhibits a violated lower half.  All arithmetic is Fraction
exact, and every max-flow result carries its own min-cut certificate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

from .digraph import Digraph
from .errors import UnboundedFlowError, WorkLimitError
from .limits import max_work
from .submodular import INF, ExtBool, Infinity, is_finite, lower_half_function
from . import kernels


class _Terminal:
    """Distinct non-vertex node; two instances serve as source and sink."""

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name


SOURCE = _Terminal("source")
SINK = _Terminal("sink")


@dataclass(frozen=True)
class Arc:
    tail: object
    head: object
    capacity: object  # non-negative Fraction/int, or INF

    def __post_init__(self):
        if self.tail == self.head:
            raise ValueError(f"loop arc at {self.tail!r}")
        cap = self.capacity
        if isinstance(cap, Infinity):
            return
        if not isinstance(cap, (int, Fraction)) or cap < 0:
            raise ValueError(f"capacity must be non-negative or INF, got {cap!r}")


@dataclass(frozen=True)
class FlowNetwork:
    nodes: tuple
    arcs: tuple[Arc, ...]
    source: object = SOURCE
    sink: object = SINK

    def __post_init__(self):
        nodeset = set(self.nodes)
        if self.source not in nodeset or self.sink not in nodeset:
            raise ValueError("source and sink must be nodes")
        for arc in self.arcs:
            if arc.tail not in nodeset or arc.head not in nodeset:
                raise ValueError(f"arc {arc!r} leaves the node set")
            if arc.head is self.source:
                raise ValueError("no arc may enter the source")
            if arc.tail is self.sink:
                raise ValueError("no arc may leave the sink")


@dataclass(frozen=True)
class FlowResult:
    """A maximum flow together with its certifying minimum cut.

    flows[i] is the value pushed through arcs[i]; cut is the set of nodes
    reachable from the source in the residual graph, and cut_capacity
    (the total capacity leaving the cut) equals value by construction.
    """

    value: Fraction
    flows: tuple[Fraction, ...]
    cut: frozenset
    cut_capacity: Fraction


def max_flow(net: FlowNetwork) -> FlowResult:
    """Shortest-augmenting-path max flow over exact rationals.

    INF capacities are replaced by one more than the finite total, which
    caps any finite cut; if the computed value still reaches that stand-in
    no finite cut exists and UnboundedFlowError is raised.
    """
    arcs = net.arcs
    finite_total = sum((a.capacity for a in arcs if is_finite(a.capacity)),
                      start=Fraction(0))
    stand_in = finite_total + 1
    caps = [Fraction(a.capacity) if is_finite(a.capacity) else Fraction(stand_in)
            for a in arcs]

    scale = lcm(*(c.denominator for c in caps)) if caps else 1
    icaps = [int(c * scale) for c in caps]

    index = {node: i for i, node in enumerate(net.nodes)}
    s, t = index[net.source], index[net.sink]
    nn = len(net.nodes)

    # paired residual arcs: 2e forward with capacity, 2e+1 backward with 0
    res = []
    ends = []
    adj: list[list[int]] = [[] for _ in range(nn)]
    for e, arc in enumerate(arcs):
        u, v = index[arc.tail], index[arc.head]
        res.extend((icaps[e], 0))
        ends.extend(((u, v), (v, u)))
        adj[u].append(2 * e)
        adj[v].append(2 * e + 1)

    total = 0
    while True:
        parent = [-1] * nn  # residual arc used to reach each node
        parent[s] = -2
        queue = [s]
        for node in queue:
            if node == t:
                break
            for ridx in adj[node]:
                if res[ridx] > 0:
                    nxt = ends[ridx][1]
                    if parent[nxt] == -1:
                        parent[nxt] = ridx
                        queue.append(nxt)
        if parent[t] == -1:
            break
        bottleneck = None
        node = t
        while node != s:
            ridx = parent[node]
            if bottleneck is None or res[ridx] < bottleneck:
                bottleneck = res[ridx]
            node = ends[ridx][0]
        node = t
        while node != s:
            ridx = parent[node]
            res[ridx] -= bottleneck
            res[ridx ^ 1] += bottleneck
            node = ends[ridx][0]
        total += bottleneck

    value = Fraction(total, scale)
    if value >= stand_in:
        raise UnboundedFlowError("no finite cut separates source from sink")

    reach = [False] * nn
    reach[s] = True
    queue = [s]
    for node in queue:
        for ridx in adj[node]:
            nxt = ends[ridx][1]
            if res[ridx] > 0 and not reach[nxt]:
                reach[nxt] = True
                queue.append(nxt)

    cut = frozenset(net.nodes[i] for i in range(nn) if reach[i])
    cut_capacity = Fraction(0)
    for e, arc in enumerate(arcs):
        u, v = index[arc.tail], index[arc.head]
        if reach[u] and not reach[v]:
            # a crossing INF arc would have forced value >= stand_in
            cut_capacity += Fraction(arc.capacity)

    flows = tuple(Fraction(res[2 * e + 1], scale) for e in range(len(arcs)))
    return FlowResult(value, flows, cut, cut_capacity)


def audit_flow(net: FlowNetwork, result: FlowResult) -> list[str]:
    """All the ways a flow result could be wrong; empty means certified."""
    problems = []
    excess: dict[object, Fraction] = {node: Fraction(0) for node in net.nodes}
    for arc, f in zip(net.arcs, result.flows):
        if f < 0:
            problems.append(f"negative flow {f} on {arc!r}")
        if is_finite(arc.capacity) and f > arc.capacity:
            problems.append(f"flow {f} exceeds capacity on {arc!r}")
        excess[arc.head] += f
        excess[arc.tail] -= f
    for node in net.nodes:
        if node is net.source or node is net.sink:
            continue
        if excess[node] != 0:
            problems.append(f"conservation fails at {node!r} by {excess[node]}")
    if -excess[net.source] != result.value:
        problems.append(f"source sends {-excess[net.source]}, claimed {result.value}")
    if excess[net.sink] != result.value:
        problems.append(f"sink receives {excess[net.sink]}, claimed {result.value}")
    if net.source not in result.cut or net.sink in result.cut:
        problems.append("cut does not separate source from sink")
    cap = Fraction(0)
    for arc in net.arcs:
        if arc.tail in result.cut and arc.head not in result.cut:
            if not is_finite(arc.capacity):
                problems.append(f"INF arc {arc!r} crosses the cut")
                continue
            cap += arc.capacity
    if cap != result.cut_capacity:
        problems.append(f"cut capacity {cap} mismatches recorded {result.cut_capacity}")
    if cap != result.value:
        problems.append(f"cut capacity {cap} does not certify value {result.value}")
    return problems


def _normalize_vector(g: Digraph, x: Mapping[str, object]) -> dict[str, Fraction]:
    if set(x) != set(g.vertices):
        raise ValueError("vector must assign exactly the vertices of the graph")
    return {v: Fraction(x[v]) for v in g.vertices}


def base_member(z: ExtBool, x: Mapping[str, object]) -> bool:
    """Is x in the base polytope of z?

    Requires the coordinate sum to hit the full-set value and x(A) to stay
    at or below z(A) for every subset A; INF constraints are vacuous.
    """
    if set(x) != set(z.ground):
        raise ValueError("vector must assign exactly the ground labels")
    coords = [Fraction(x[lab]) for lab in z.ground]
    if sum(coords) != z.values[-1]:
        return False
    n = len(z.ground)
    for mask in range(1 << n):
        v = z.values[mask]
        if not is_finite(v):
            continue
        total = sum(coords[i] for i in range(n) if mask >> i & 1)
        if total > v:
            return False
    return True


def cone_generators(g: Digraph) -> list[dict[str, int]]:
    """One vector per edge: +1 on the head, -1 on the tail, 0 elsewhere."""
    gens = []
    for u, v in g.edge_list:
        vec = {w: 0 for w in g.vertices}
        vec[u] = -1
        vec[v] = 1
        gens.append(vec)
    return gens


def build_flow_network(g: Digraph, x: Mapping[str, object]) -> FlowNetwork:
    """The membership network: graph edges get INF, terminals route x.

    Vertices with positive x feed the sink with capacity x(v); negative
    ones are fed from the source with capacity -x(v).  x must sum to zero.
    """
    vec = _normalize_vector(g, x)
    if sum(vec.values(), start=Fraction(0)) != 0:
        raise ValueError("membership network needs a vector summing to zero")
    arcs = [Arc(u, v, INF) for u, v in g.edge_list]
    for v in g.vertices:
        if vec[v] > 0:
            arcs.append(Arc(v, SINK, vec[v]))
        elif vec[v] < 0:
            arcs.append(Arc(SOURCE, v, -vec[v]))
    return FlowNetwork((SOURCE, *g.vertices, SINK), tuple(arcs))


def cone_member(g: Digraph, x: Mapping[str, object]) -> dict[tuple[str, str], Fraction] | None:
    """Non-negative edge weights writing x as a combination of generators.

    Returns {edge: weight} with x = sum of weight * (head - tail), or None
    when x is outside the cone.  The witness is re-checked before return.
    """
    vec = _normalize_vector(g, x)
    if sum(vec.values(), start=Fraction(0)) != 0:
        return None
    demand = sum((c for c in vec.values() if c > 0), start=Fraction(0))
    net = build_flow_network(g, vec)
    result = max_flow(net)
    if result.value != demand:
        return None

    edge_list = g.edge_list
    witness = {edge_list[e]: result.flows[e] for e in range(len(edge_list))}
    rebuilt = {v: Fraction(0) for v in g.vertices}
    for (u, v), w in witness.items():
        if w < 0:
            raise RuntimeError(f"negative witness weight {w} on {(u, v)}")
        rebuilt[v] += w
        rebuilt[u] -= w
    if rebuilt != vec:
        raise RuntimeError("flow certificate does not rebuild the vector")
    return witness


@dataclass(frozen=True)
class EquivalenceReport:
    """Base polytope versus cone membership over sampled vectors."""

    samples: int
    agreements: int
    mismatches: tuple
    audit_problems: tuple

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.audit_problems


def _sample_vectors(g: Digraph, samples: int, rng: random.Random) -> list[dict[str, Fraction]]:
    """A deterministic mix: conic combinations, perturbed ones, raw sum-zero."""
    gens = cone_generators(g)
    verts = g.vertices
    out = []
    for i in range(samples):
        kind = i % 3
        vec = {v: Fraction(0) for v in verts}
        if kind in (0, 1) and gens:
            for gen in gens:
                lam = Fraction(rng.randint(0, 6), rng.randint(1, 4))
                for v in verts:
                    vec[v] += lam * gen[v]
        if kind == 1 and len(verts) >= 2:
            u, w = rng.sample(verts, 2)
            delta = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            vec[u] += delta
            vec[w] -= delta
        if kind == 2 and verts:
            for v in verts[:-1]:
                vec[v] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            vec[verts[-1]] = -sum((vec[v] for v in verts[:-1]), start=Fraction(0))
        out.append(vec)
    return out


def check_cone_polytope_agreement(g: Digraph, *, samples: int = 200,
                                  seed: int = 0) -> EquivalenceReport:
    """Sampled agreement of base polytope and edge cone membership.

    Every sampled vector must land the same way under both tests, and
    every max-flow run must pass its audit.  Deterministic in the seed.
    """
    rng = random.Random(seed)
    z = lower_half_function(g)
    vectors = _sample_vectors(g, samples, rng)
    mismatches = []
    audit_problems = []
    agreements = 0
    for vec in vectors:
        in_base = base_member(z, vec)
        witness = cone_member(g, vec)
        if sum(vec.values(), start=Fraction(0)) == 0:
            net = build_flow_network(g, vec)
            result = max_flow(net)
            problems = audit_flow(net, result)
            if problems:
                audit_problems.append((vec, tuple(problems)))
        if in_base != (witness is not None):
            mismatches.append((vec, in_base, witness is not None))
        else:
            agreements += 1
    return EquivalenceReport(len(vectors), agreements,
                             tuple(mismatches), tuple(audit_problems))


def _count_gate(g: Digraph, points: int, override: int | None) -> None:
    budget = max_work(override)
    if points > budget:
        raise WorkLimitError(f"{points} points exceed work bound {budget}")


def generic_direction_count(g: Digraph, n: int, *, max_work: int | None = None) -> int:
    """Directions y into {1..n} whose maximum over the edge cone is the apex alone.

    These are exactly the maps strictly decreasing along every edge, so
    the count matches the strict invariant through y -> n+1-y.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    nv, tails, heads = g.edge_arrays()
    _count_gate(g, n ** nv, max_work)
    # decreasing along (u, v) means increasing along (v, u)
    return kernels.count_strict_colorings(nv, heads, tails, n)


def vertex_sum_count(g: Digraph, n: int, *, max_work: int | None = None) -> int:
    """Sum over directions y into {1..n} of the vertices of the y-maximal face.

    The cone of an acyclic graph is pointed, so each direction contributes
    1 when it is weakly decreasing along every edge (the apex is maximal)
    and 0 otherwise (the maximum is unattained).  Cyclic graphs have no
    vertex at all and are rejected.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if not g.is_acyclic():
        raise ValueError("the edge cone of a cyclic graph has no vertex")
    nv, tails, heads = g.edge_arrays()
    _count_gate(g, n ** nv, max_work)
    return kernels.count_weak_colorings(nv, heads, tails, n)


def ascent_polytope_points(g: Digraph, n: int, *, interior: bool,
                           max_work: int | None = None) -> int:
    """Lattice points of the dilated edge-order polytope in the unit cube.

    interior=True counts interior points of the (n+1)-fold dilation,
    interior=False counts all points of the (n-1)-fold dilation; n = 0
    closed is 0 by the empty-dilation convention.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    dilation = n + 1 if interior else n - 1
    nv, tails, heads = g.edge_arrays()
    _count_gate(g, max(dilation + 1, 0) ** nv, max_work)
    return kernels.count_dilation_points(nv, tails, heads, dilation, interior)
