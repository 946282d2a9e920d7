"""Value model for complex unit gain graphs.

A gain graph here is a simple undirected graph on vertices 1..n whose
oriented edges carry unit-modulus complex labels.  Only one orientation
per edge is stored; the reverse orientation is the complex conjugate, so
the associated adjacency matrix is Hermitian.

All values in this module are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    GainMismatch,
    InvalidBase,
    InvalidGain,
    TooSmall,
    VertexOutOfRange,
)

#: Gains are renormalized at construction; afterwards they sit within this
#: band of the unit circle.
UNIT_TOL = 1e-12

#: How far an *input* may be from the unit circle before it is rejected.
INPUT_UNIT_TOL = 1e-9


def make_gain(angle_turns: float) -> complex:
    """Unit gain at the given angle, measured in turns (1 turn = 2*pi).

    ``make_gain(0.25)`` is ``i``; the map is periodic with period 1.
    """
    if not math.isfinite(angle_turns):
        raise InvalidGain(f"angle must be finite, got {angle_turns!r}")
    frac = angle_turns % 1.0
    theta = math.tau * frac
    return complex(math.cos(theta), math.sin(theta))


def as_unit_gain(z: complex, tol: float = INPUT_UNIT_TOL) -> complex:
    """Validate that ``z`` lies on the unit circle and renormalize it."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidGain(f"gain must be finite, got {z!r}")
    d = abs(z)
    if abs(d - 1.0) > tol:
        raise InvalidGain(f"gain modulus {d!r} is not 1 within {tol}")
    return z / d


class GainGraph:
    """Simple graph on vertices 1..n with unit gains on oriented edges.

    ``gains`` maps one oriented edge ``(u, v)`` per underlying edge to its
    complex unit gain; the reverse orientation is implied by conjugation.
    Instances are read-only: no method mutates the graph.
    """

    __slots__ = ("n", "_gains", "_adj")

    def __init__(self, n: int, gains: Mapping[tuple[int, int], complex]):
        if n < 0:
            raise VertexOutOfRange(f"vertex count must be >= 0, got {n}")
        self.n = int(n)
        store: dict[tuple[int, int], complex] = {}
        adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for (u, v), z in gains.items():
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRange(f"edge ({u},{v}) outside 1..{n}")
            if u == v:
                raise GainMismatch(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in store:
                raise GainMismatch(f"duplicate edge {{{u},{v}}}")
            g = as_unit_gain(z)
            store[key] = g if u < v else g.conjugate()
            adj[u].append(v)
            adj[v].append(u)
        self._gains = store
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    # -- basic queries -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self._gains)

    def edges(self) -> list[tuple[int, int]]:
        """Underlying edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted(self._gains)

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._gains

    def gain(self, u: int, v: int) -> complex:
        """Gain of the oriented edge ``u -> v``."""
        if u < v:
            try:
                return self._gains[(u, v)]
            except KeyError:
                raise GainMismatch(f"no edge {{{u},{v}}}") from None
        try:
            return self._gains[(v, u)].conjugate()
        except KeyError:
            raise GainMismatch(f"no edge {{{u},{v}}}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 1 <= v <= self.n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{self.n}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def gain_items(self) -> list[tuple[tuple[int, int], complex]]:
        """Stored orientations ``((u, v), gain)`` with ``u < v``, sorted."""
        return sorted(self._gains.items())

    # -- equality ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self.n == other.n and self._gains == other._gains

    __hash__ = None  # mutable-dict backed; not hashable

    def __repr__(self) -> str:
        return f"GainGraph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class CycleWalk:
    """A closed walk around a simple cycle, with its oriented gains.

    ``gains[i]`` is the gain of the step ``vertices[i] -> vertices[i+1]``
    (indices mod n).
    """

    vertices: tuple[int, ...]
    gains: tuple[complex, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def gain_product(self) -> complex:
        out = complex(1.0)
        for w in self.gains:
            out *= w
        return out


def cycle_walk(g: GainGraph, vertices: Sequence[int]) -> CycleWalk:
    """Build the closed walk of ``g`` through ``vertices`` in order.

    Raises ``NotACycle`` unless the vertices are distinct and consecutive
    pairs (including the closing pair) are edges of ``g``.
    """
    from .errors import NotACycle

    vs = tuple(int(v) for v in vertices)
    if len(vs) < 3:
        raise NotACycle(f"cycle needs >= 3 vertices, got {len(vs)}")
    if len(set(vs)) != len(vs):
        raise NotACycle(f"repeated vertex in {vs}")
    gains = []
    for i, u in enumerate(vs):
        v = vs[(i + 1) % len(vs)]
        if not g.has_edge(u, v):
            raise NotACycle(f"({u},{v}) is not an edge")
        gains.append(g.gain(u, v))
    return CycleWalk(vs, tuple(gains))


@dataclass(frozen=True)
class BaseDescriptor:
    """Shape of a pendant-free bicyclic graph.

    ``kind`` is ``"infinity"`` (two cycles of lengths p and q joined by a
    path on l vertices, l = 1 meaning a shared vertex) or ``"theta"``
    (two degree-3 vertices joined by three internally disjoint paths with
    p, l and q interior vertices).
    """

    kind: str
    p: int
    l: int
    q: int

    INFINITY = "infinity"
    THETA = "theta"

    def __post_init__(self):
        if self.kind == self.INFINITY:
            if not (self.p >= 3 and self.q >= 3 and self.l >= 1):
                raise InvalidBase(
                    f"infinity base needs p,q >= 3 and l >= 1, got "
                    f"({self.p},{self.l},{self.q})"
                )
        elif self.kind == self.THETA:
            params = (self.p, self.l, self.q)
            if min(params) < 0 or sum(1 for x in params if x == 0) > 1:
                raise InvalidBase(
                    f"theta base needs nonnegative parts with at most one "
                    f"zero, got {params}"
                )
        else:
            raise InvalidBase(f"unknown base kind {self.kind!r}")

    def canonical(self) -> "BaseDescriptor":
        """Sorted-parameter form: p <= q (infinity) or p <= l <= q (theta)."""
        if self.kind == self.INFINITY:
            p, q = sorted((self.p, self.q))
            return BaseDescriptor(self.kind, p, self.l, q)
        p, l, q = sorted((self.p, self.l, self.q))
        return BaseDescriptor(self.kind, p, l, q)

    def order(self) -> int:
        """Number of vertices of the base graph."""
        if self.kind == self.INFINITY:
            return self.p + self.q + self.l - 2
        return self.p + self.l + self.q + 2

    def size(self) -> int:
        """Number of edges of the base graph."""
        return self.order() + 1


def _gain_list(gains, m: int, what: str) -> list[complex]:
    """Normalize a builder gain argument to a list of m unit gains."""
    if gains is None:
        return [complex(1.0)] * m
    if isinstance(gains, (int, float, complex)):
        return [as_unit_gain(gains)] * m
    out = [as_unit_gain(z) for z in gains]
    if len(out) != m:
        raise GainMismatch(f"{what} needs {m} gains, got {len(out)}")
    return out


def empty_graph(n: int) -> GainGraph:
    return GainGraph(n, {})


def path_graph(n: int, gains=None) -> GainGraph:
    """Path 1-2-...-n; ``gains[i]`` labels the oriented edge (i+1, i+2)."""
    gs = _gain_list(gains, max(n - 1, 0), f"P{n}")
    return GainGraph(n, {(i, i + 1): gs[i - 1] for i in range(1, n)})


def star_graph(n: int, gains=None) -> GainGraph:
    """Star with center 1 and leaves 2..n; gains oriented center -> leaf."""
    gs = _gain_list(gains, max(n - 1, 0), f"S{n}")
    return GainGraph(n, {(1, v): gs[v - 2] for v in range(2, n + 1)})


def build_cycle(n: int, gains=None) -> GainGraph:
    """Cycle 1-2-...-n-1.

    ``gains[i]`` labels the oriented edge (i+1, i+2); the last gain labels
    (n, 1).  The reverse orientations are conjugates, automatically.
    """
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    gs = _gain_list(gains, n, f"C{n}")
    gmap: dict[tuple[int, int], complex] = {}
    for i in range(1, n):
        gmap[(i, i + 1)] = gs[i - 1]
    gmap[(n, 1)] = gs[n - 1]
    return GainGraph(n, gmap)


def infinity_edge_order(p: int, l: int, q: int) -> list[tuple[int, int]]:
    """Canonical oriented edge order for ``build_infinity``.

    Vertices: 1..p-1 around the first cycle, p..p+q-2 around the second,
    then the attachment vertex a1 = p+q-1, interior bridge vertices, and
    the second attachment a2 (a1 = a2 when l = 1).  Edges are listed
    first-cycle, second-cycle, then bridge path.
    """
    BaseDescriptor(BaseDescriptor.INFINITY, p, l, q)  # validates
    a1 = p + q - 1
    a2 = a1 if l == 1 else p + q + l - 2
    order: list[tuple[int, int]] = []
    cyc1 = list(range(1, p)) + [a1]
    order += [(cyc1[i], cyc1[(i + 1) % p]) for i in range(p)]
    cyc2 = list(range(p, p + q - 1)) + [a2]
    order += [(cyc2[i], cyc2[(i + 1) % q]) for i in range(q)]
    bridge = [a1] + list(range(p + q, p + q + l - 2)) + [a2]
    if l >= 2:
        order += [(bridge[i], bridge[i + 1]) for i in range(l - 1)]
    return order


def build_infinity(p: int, l: int, q: int, gains=None) -> GainGraph:
    """Two cycles of lengths p and q joined by a path on l vertices.

    Gains follow :func:`infinity_edge_order`; ``None`` means all ones.
    """
    order = infinity_edge_order(p, l, q)
    gs = _gain_list(gains, len(order), f"infinity({p},{l},{q})")
    n = p + q + l - 2
    return GainGraph(n, dict(zip(order, gs)))


def theta_edge_order(p: int, l: int, q: int) -> list[tuple[int, int]]:
    """Canonical oriented edge order for ``build_theta``.

    Vertices: u = 1 and v = 2 are the degree-3 vertices; interior vertices
    of the three u-v paths are numbered 3.. in path order (p-path first,
    then l-path, then q-path).  Each path's edges are oriented u -> v.
    """
    BaseDescriptor(BaseDescriptor.THETA, p, l, q)  # validates
    order: list[tuple[int, int]] = []
    nxt = 3
    for k in (p, l, q):
        inner = list(range(nxt, nxt + k))
        nxt += k
        chain = [1] + inner + [2]
        order += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return order


def build_theta(p: int, l: int, q: int, gains=None) -> GainGraph:
    """Two vertices joined by three internally disjoint paths.

    The paths have p, l and q interior vertices (at most one of them 0).
    Gains follow :func:`theta_edge_order`; ``None`` means all ones.
    """
    order = theta_edge_order(p, l, q)
    gs = _gain_list(gains, len(order), f"theta({p},{l},{q})")
    n = p + l + q + 2
    return GainGraph(n, dict(zip(order, gs)))


def attach_pendants(g: GainGraph, at: int, k: int, gains=None) -> GainGraph:
    """Join k new vertices n+1..n+k to vertex ``at``.

    Gains are oriented from ``at`` to each new leaf.
    """
    if not 1 <= at <= g.n:
        raise VertexOutOfRange(f"vertex {at} outside 1..{g.n}")
    if k < 1:
        raise GainMismatch(f"need k >= 1 pendants, got {k}")
    gs = _gain_list(gains, k, "pendants")
    gmap = {key: z for key, z in g.gain_items()}
    for i in range(k):
        gmap[(at, g.n + 1 + i)] = gs[i]
    return GainGraph(g.n + k, gmap)


def disjoint_union(a: GainGraph, b: GainGraph) -> GainGraph:
    """Disjoint union; b's vertex labels are shifted by a.n."""
    gmap = {key: z for key, z in a.gain_items()}
    for (u, v), z in b.gain_items():
        gmap[(u + a.n, v + a.n)] = z
    return GainGraph(a.n + b.n, gmap)


def relabel(g: GainGraph, mapping: Mapping[int, int]) -> GainGraph:
    """Apply a bijective relabeling old -> new covering all vertices."""
    if sorted(mapping) != list(range(1, g.n + 1)) or sorted(
        mapping.values()
    ) != list(range(1, g.n + 1)):
        raise VertexOutOfRange("relabeling must be a bijection on 1..n")
    gmap = {
        (mapping[u], mapping[v]): z for (u, v), z in g.gain_items()
    }
    return GainGraph(g.n, gmap)


def induced_subgraph(
    g: GainGraph, keep: Iterable[int]
) -> tuple[GainGraph, dict[int, int]]:
    """Induced subgraph on ``keep``, compacted to labels 1..k.

    Returns the subgraph and the old -> new label map (sorted order).
    """
    kept = sorted(set(keep))
    for v in kept:
        if not 1 <= v <= g.n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{g.n}")
    old2new = {v: i + 1 for i, v in enumerate(kept)}
    gmap = {
        (old2new[u], old2new[v]): z
        for (u, v), z in g.gain_items()
        if u in old2new and v in old2new
    }
    return GainGraph(len(kept), gmap), old2new


def delete_vertices(
    g: GainGraph, drop: Iterable[int]
) -> tuple[GainGraph, dict[int, int]]:
    """Remove vertices and incident edges; labels are compacted."""
    dropped = set(drop)
    return induced_subgraph(g, (v for v in range(1, g.n + 1) if v not in dropped))


def components(g: GainGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum."""
    seen: set[int] = set()
    out: list[list[int]] = []
    for s in range(1, g.n + 1):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: GainGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def gauge_transform(g: GainGraph, v: int, z: complex) -> GainGraph:
    """Multiply all gains leaving ``v`` by the unit ``z``.

    This is a diagonal unitary congruence of the adjacency matrix, so the
    inertia of the result equals that of ``g``.
    """
    if not 1 <= v <= g.n:
        raise VertexOutOfRange(f"vertex {v} outside 1..{g.n}")
    z = as_unit_gain(z)
    gmap: dict[tuple[int, int], complex] = {}
    for (u, w), gain in g.gain_items():
        if u == v:
            gain = z * gain
        elif w == v:
            gain = gain * z.conjugate()
        gmap[(u, w)] = gain
    return GainGraph(g.n, gmap)
