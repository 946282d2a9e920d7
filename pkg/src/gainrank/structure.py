"""Structural analysis: cycle types, pendant reductions, base extraction.

The five cycle types drive every closed-form rank statement in
:mod:`gainrank.predictors`:

* even cycles are Type A when the product of gains around the cycle
  equals (-1)^(n/2), else Type B;
* odd cycles are Type C / D / E when the real part of
  (-1)^((n-1)/2) times the gain product is positive / negative / zero.

Both quantities are invariant under the choice of starting vertex and,
up to conjugation (which fixes the tests above), traversal direction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import (
    NotAPendant,
    NotBicyclic,
    NotConnected,
)
from .gaingraph import (
    BaseDescriptor,
    CycleWalk,
    GainGraph,
    components,
    cycle_walk,
    delete_vertices,
    induced_subgraph,
    is_connected,
)
from .inertia import DEFAULT_TOL


class CycleType(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"

    @property
    def even(self) -> bool:
        return self in (CycleType.A, CycleType.B)


#: Classifications whose decision margin falls within a decade of the
#: tolerance (on either side) are numerically fragile: a tiny gain
#: perturbation could flip them.
FRAGILE_BAND = 10.0


@dataclass(frozen=True)
class CycleClassification:
    """Cycle type plus the scalar the decision was made on.

    ``residual`` is the full test quantity (complex for even cycles,
    real for odd); ``margin`` is its distance from the decision boundary.
    """

    kind: CycleType
    residual: complex
    margin: float
    fragile: bool


def classify_cycle(c: CycleWalk, tol: float = DEFAULT_TOL) -> CycleClassification:
    """Classify a gain cycle as Type A/B (even) or C/D/E (odd)."""
    n = len(c)
    prod = c.gain_product()
    if n % 2 == 0:
        delta = prod - (-1.0) ** (n // 2)
        margin = abs(delta)
        kind = CycleType.A if margin <= tol else CycleType.B
        fragile = tol / FRAGILE_BAND < margin < tol * FRAGILE_BAND
        return CycleClassification(kind, delta, margin, fragile)
    s = ((-1.0) ** ((n - 1) // 2) * prod).real
    margin = abs(s)
    if s > tol:
        kind = CycleType.C
    elif s < -tol:
        kind = CycleType.D
    else:
        kind = CycleType.E
    fragile = tol / FRAGILE_BAND < margin < tol * FRAGILE_BAND
    return CycleClassification(kind, complex(s), margin, fragile)


def cycle_type(c: CycleWalk, tol: float = DEFAULT_TOL) -> CycleType:
    return classify_cycle(c, tol).kind


# -- pendant machinery ----------------------------------------------------


def find_pendant(g: GainGraph) -> tuple[int, int] | None:
    """Lowest-labeled degree-1 vertex and its unique neighbor, if any."""
    for v in range(1, g.n + 1):
        if g.degree(v) == 1:
            return v, g.neighbors(v)[0]
    return None


def pendant_twins(g: GainGraph) -> list[tuple[int, int]]:
    """All unordered pairs of pendant vertices sharing a neighbor."""
    by_neighbor: dict[int, list[int]] = {}
    for v in range(1, g.n + 1):
        if g.degree(v) == 1:
            by_neighbor.setdefault(g.neighbors(v)[0], []).append(v)
    out = []
    for leaves in by_neighbor.values():
        for i in range(len(leaves)):
            for j in range(i + 1, len(leaves)):
                out.append((leaves[i], leaves[j]))
    return out


def delete_pendant_pair(g: GainGraph, v: int, u: int) -> GainGraph:
    """Remove a pendant vertex and its neighbor; labels are compacted.

    Deleting the pair lowers both the positive and the negative inertia
    count by exactly one, so the rank drops by exactly 2.
    """
    if not (1 <= v <= g.n and g.degree(v) == 1 and g.neighbors(v) == (u,)):
        raise NotAPendant(f"{v} is not a pendant vertex with neighbor {u}")
    return delete_vertices(g, (v, u))[0]


@dataclass(frozen=True)
class PendantPairDeletion:
    """One pendant-pair removal; contributes 2 to the rank offset."""

    pendant: int
    neighbor: int


@dataclass(frozen=True)
class TwinDeletion:
    """Removal of one of two pendant twins; rank unchanged."""

    vertex: int


@dataclass(frozen=True)
class ReductionTrace:
    """Result of exhaustively applying the two rank-preserving moves.

    rank(g) = rank(residual) + rank_offset.  Step vertices refer to the
    labels of the original graph; ``vertex_map`` sends residual labels
    back to original ones.
    """

    steps: tuple
    residual: GainGraph
    rank_offset: int
    vertex_map: dict[int, int] = field(compare=False)


def reduce(g: GainGraph) -> ReductionTrace:
    """Delete pendant twins (rank-neutral) and pendant pairs (rank -2)
    until neither move applies.

    Twin deletions are preferred so residuals never carry twins; among
    ties the lowest-labeled candidates are processed first, keeping the
    trace deterministic.  The final rank identity holds for any order.
    """
    alive = set(range(1, g.n + 1))
    adj = {v: set(g.neighbors(v)) for v in alive}
    steps: list = []
    offset = 0

    def live_degree(v: int) -> int:
        return len(adj[v])

    def drop(v: int) -> None:
        alive.discard(v)
        for w in adj.pop(v):
            adj[w].discard(v)

    while True:
        pendants = sorted(v for v in alive if live_degree(v) == 1)
        if not pendants:
            break
        by_neighbor: dict[int, list[int]] = {}
        for v in pendants:
            (u,) = adj[v]
            by_neighbor.setdefault(u, []).append(v)
        twin_groups = {u: vs for u, vs in by_neighbor.items() if len(vs) >= 2}
        if twin_groups:
            u = min(twin_groups)
            doomed = max(twin_groups[u])
            steps.append(TwinDeletion(doomed))
            drop(doomed)
            continue
        v = pendants[0]
        (u,) = adj[v]
        steps.append(PendantPairDeletion(v, u))
        drop(v)
        drop(u)
        offset += 2

    residual, old2new = induced_subgraph(g, alive)
    new2old = {nv: ov for ov, nv in old2new.items()}
    return ReductionTrace(tuple(steps), residual, offset, new2old)


# -- base extraction -------------------------------------------------------


@dataclass(frozen=True)
class BaseExtraction:
    """Pendant-free core of a bicyclic graph.

    ``graph`` is the base compacted to labels 1..k; ``vertex_map`` sends
    those labels back to the host graph's labels; ``cycles`` lists the
    base's cycles as vertex sequences in host labels (two sequences for
    an infinity base, three for a theta base).
    """

    descriptor: BaseDescriptor
    graph: GainGraph
    vertex_map: dict[int, int] = field(compare=False)
    cycles: tuple[tuple[int, ...], ...] = ()


def _canonical_cycle(seq: list[int]) -> tuple[int, ...]:
    """Rotate/reflect so the minimum label leads and its smaller cyclic
    neighbor follows."""
    k = len(seq)
    i = seq.index(min(seq))
    nxt, prv = seq[(i + 1) % k], seq[(i - 1) % k]
    out = [seq[(i + j) % k] for j in range(k)]
    if prv < nxt:
        out = [out[0]] + out[1:][::-1]
    return tuple(out)


def _path_order(vertices: list[int], adj_in: dict[int, set[int]], start_hint: set[int]) -> list[int]:
    """Order a path component's vertices endpoint-to-endpoint.

    ``start_hint`` biases which endpoint comes first (endpoints adjacent
    to the hint set are preferred); single vertices are returned as-is.
    """
    if len(vertices) == 1:
        return list(vertices)
    inner = {v: adj_in[v] & set(vertices) for v in vertices}
    ends = sorted(v for v in vertices if len(inner[v]) <= 1)
    start = ends[0]
    for e in ends:
        if adj_in[e] & start_hint:
            start = e
            break
    out = [start]
    prev = None
    cur = start
    while len(out) < len(vertices):
        nxt = [w for w in inner[cur] if w != prev]
        prev, cur = cur, nxt[0]
        out.append(cur)
    return out


def bicyclic_base(g: GainGraph) -> BaseExtraction:
    """Strip pendant vertices (structure only) and classify the core.

    The residual of iterated leaf removal on a connected graph with
    m = n + 1 is either two cycles joined by a path (infinity shape) or
    two degree-3 vertices joined by three disjoint paths (theta shape).
    """
    if not is_connected(g):
        raise NotConnected(f"graph with {len(components(g))} components")
    if g.edge_count != g.n + 1:
        raise NotBicyclic(
            f"bicyclic graphs have m = n + 1; got n={g.n}, m={g.edge_count}"
        )
    alive = set(range(1, g.n + 1))
    adj = {v: set(g.neighbors(v)) for v in alive}
    while True:
        leaves = [v for v in alive if len(adj[v]) == 1]
        if not leaves:
            break
        for v in leaves:
            alive.discard(v)
            for w in adj.pop(v):
                adj[w].discard(v)

    base_graph, old2new = induced_subgraph(g, alive)
    new2old = {nv: ov for ov, nv in old2new.items()}
    adj_in = {v: set(g.neighbors(v)) & alive for v in alive}
    high = sorted(v for v in alive if len(adj_in[v]) >= 3)

    if len(high) == 1:
        w = high[0]
        if len(adj_in[w]) != 4:
            raise NotBicyclic("malformed base")
        rest = sorted(alive - {w})
        comp_sets = _components_within(rest, adj_in)
        if len(comp_sets) != 2:
            raise NotBicyclic("malformed base")
        seqs = []
        for comp in comp_sets:
            path = _path_order(sorted(comp), adj_in, {w})
            seqs.append([w] + path)
        seqs.sort(key=lambda s: (len(s), s))
        p, q = len(seqs[0]), len(seqs[1])
        desc = BaseDescriptor(BaseDescriptor.INFINITY, p, 1, q)
        cycles = tuple(_canonical_cycle(s) for s in seqs)
        return BaseExtraction(desc, base_graph, new2old, cycles)

    if len(high) != 2 or any(len(adj_in[v]) != 3 for v in high):
        raise NotBicyclic("malformed base")
    u, v = high
    rest = sorted(alive - {u, v})
    comp_sets = _components_within(rest, adj_in)
    direct = v in adj_in[u]
    infos = []
    for comp in comp_sets:
        eu = sum(1 for x in comp if x in adj_in[u])
        ev = sum(1 for x in comp if x in adj_in[v])
        infos.append((sorted(comp), eu, ev))

    if all(eu == 1 and ev == 1 for _, eu, ev in infos):
        # theta: three internally disjoint u-v paths (one may be the
        # direct edge)
        if len(infos) + (1 if direct else 0) != 3:
            raise NotBicyclic("malformed base")
        paths = [
            _path_order(comp, adj_in, {u}) for comp, _, _ in infos
        ]
        if direct:
            paths.append([])
        params = sorted(len(p) for p in paths)
        desc = BaseDescriptor(BaseDescriptor.THETA, *params)
        cycles = []
        for i in range(len(paths)):
            for j in range(i + 1, len(paths)):
                seq = [u] + paths[i] + [v] + paths[j][::-1]
                cycles.append(_canonical_cycle(seq))
        cycles.sort(key=lambda c: (len(c), c))
        return BaseExtraction(desc, base_graph, new2old, tuple(cycles))

    # infinity with a bridge of length >= 1: one cycle hangs on u, one
    # on v, optionally a middle path (or the direct edge u-v)
    cyc_u = [info for info in infos if info[1] == 2 and info[2] == 0]
    cyc_v = [info for info in infos if info[1] == 0 and info[2] == 2]
    mid = [info for info in infos if info[1] == 1 and info[2] == 1]
    if len(cyc_u) != 1 or len(cyc_v) != 1 or len(mid) + (1 if direct else 0) != 1:
        raise NotBicyclic("malformed base")
    seq_u = [u] + _path_order(cyc_u[0][0], adj_in, {u})
    seq_v = [v] + _path_order(cyc_v[0][0], adj_in, {v})
    l = 2 if direct else len(mid[0][0]) + 2
    seqs = sorted((seq_u, seq_v), key=lambda s: (len(s), s))
    p, q = len(seqs[0]), len(seqs[1])
    desc = BaseDescriptor(BaseDescriptor.INFINITY, p, l, q)
    cycles = tuple(_canonical_cycle(s) for s in seqs)
    return BaseExtraction(desc, base_graph, new2old, cycles)


def _components_within(vertices: list[int], adj: dict[int, set[int]]) -> list[set[int]]:
    vs = set(vertices)
    seen: set[int] = set()
    out = []
    for s in vertices:
        if s in seen:
            continue
        stack, comp = [s], set()
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.add(x)
            for y in adj[x] & vs:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(comp)
    return out


def fundamental_cycles(
    g: GainGraph, base: BaseExtraction | None = None
) -> list[CycleWalk]:
    """The base's cycles as walks of ``g``, deterministically oriented.

    Two walks for an infinity base (the disjoint cycles), three for a
    theta base (every pair of the three u-v paths), sorted by length and
    then lexicographically.
    """
    if base is None:
        base = bicyclic_base(g)
    walks = [cycle_walk(g, seq) for seq in base.cycles]
    walks.sort(key=lambda w: (len(w), w.vertices))
    return walks
