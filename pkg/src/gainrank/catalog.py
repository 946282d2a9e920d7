"""The fixed catalog of small bicyclic graphs G1..G22.

G1..G4 are the infinity-shaped bases small enough to have rank at most 6;
G5..G11 are the theta-shaped bases with at most 7 vertices.  G12..G22 are
the theta-based graphs with pendant vertices (and no pendant twins) that
can reach rank 4.  Vertex labels are frozen: the rank-condition tables in
:mod:`gainrank.predictors` refer to these exact labels.
"""

from __future__ import annotations

from .errors import GainMismatch, UnknownCatalogId
from .gaingraph import GainGraph, _gain_list

#: Frozen labeled edge lists.  Gains passed to :func:`catalog_graph` follow
#: this exact order, oriented u -> v for each listed (u, v).
CATALOG_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    # infinity bases: two triangles sharing vertex 5
    "G1": ((1, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)),
    # triangle {1,2,3} and quadrilateral {3,4,5,6} sharing vertex 3
    "G2": ((1, 2), (1, 3), (2, 3), (3, 4), (3, 6), (4, 5), (5, 6)),
    # quadrilaterals 1-2-4-3 and 4-5-6-7 sharing vertex 4
    "G3": ((1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 7), (5, 6), (6, 7)),
    # two triangles {1,2,5}, {3,4,6} joined by the edge 5-6
    "G4": ((1, 2), (1, 5), (2, 5), (3, 4), (3, 6), (4, 6), (5, 6)),
    # theta bases
    "G5": ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4)),
    "G6": ((1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)),
    "G7": ((1, 2), (1, 6), (2, 3), (2, 6), (3, 4), (4, 5), (5, 6)),
    "G8": ((1, 2), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5), (5, 6)),
    "G9": ((1, 2), (1, 4), (2, 3), (2, 5), (3, 4), (4, 5)),
    "G10": ((1, 2), (1, 5), (2, 3), (2, 6), (3, 4), (4, 5), (5, 6)),
    "G11": ((1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (4, 5), (5, 6), (6, 7)),
    # G5 plus one pendant: at the degree-2 vertex 4, or the degree-3 vertex 2
    "G12": ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)),
    "G13": ((1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4)),
    # G5 plus one pendant at each degree-3 vertex
    "G14": ((1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 6)),
    # G5 plus a hanging 2-path: at vertex 4, or at vertex 2
    "G15": ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6)),
    "G16": ((1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (5, 6)),
    # quadrilateral 1-2-3-4, triangle {1,2,5}, pendant 6 at 5
    "G17": ((1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4), (5, 6)),
    # G9 plus one pendant: at the degree-2 vertex 5, or the degree-3 vertex 2
    "G18": ((1, 2), (1, 4), (2, 3), (2, 5), (3, 4), (4, 5), (5, 6)),
    "G19": ((1, 2), (1, 4), (2, 3), (2, 5), (2, 6), (3, 4), (4, 5)),
    # G9 plus one pendant at each degree-3 vertex
    "G20": ((1, 2), (1, 4), (2, 3), (2, 5), (2, 6), (3, 4), (4, 5), (4, 7)),
    # G9 plus a hanging 2-path: at vertex 5, or at vertex 2
    "G21": ((1, 2), (1, 4), (2, 3), (2, 5), (3, 4), (4, 5), (5, 6), (6, 7)),
    "G22": ((1, 2), (1, 4), (2, 3), (2, 5), (2, 6), (3, 4), (4, 5), (6, 7)),
}

CATALOG_IDS: tuple[str, ...] = tuple(
    f"G{i}" for i in range(1, 23)
)

#: Pendant-free catalog entries (the bases).
BASE_IDS: tuple[str, ...] = tuple(f"G{i}" for i in range(1, 12))

#: Catalog entries with pendant vertices.
PENDANT_IDS: tuple[str, ...] = tuple(f"G{i}" for i in range(12, 23))


def catalog_order(gid: str) -> int:
    """Number of vertices of a catalog graph."""
    edges = catalog_edges(gid)
    return max(max(e) for e in edges)


def catalog_edges(gid: str) -> tuple[tuple[int, int], ...]:
    try:
        return CATALOG_EDGES[gid]
    except KeyError:
        raise UnknownCatalogId(f"unknown catalog id {gid!r}") from None


def catalog_graph(gid: str, gains=None) -> GainGraph:
    """Build a catalog graph with gains in the frozen edge order.

    ``gains`` may be None (all ones), a single unit value, or a sequence
    with one gain per edge of :func:`catalog_edges`.
    """
    edges = catalog_edges(gid)
    gs = _gain_list(gains, len(edges), gid)
    if len(gs) != len(edges):
        raise GainMismatch(f"{gid} has {len(edges)} edges, got {len(gs)} gains")
    return GainGraph(catalog_order(gid), dict(zip(edges, gs)))


def _edge_set(g: GainGraph) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(e) for e in g.edges())


def exact_catalog_id(g: GainGraph, ids=None) -> str | None:
    """Catalog id whose labeled edge set equals g's exactly, if any."""
    target = _edge_set(g)
    for gid in ids or CATALOG_IDS:
        if catalog_order(gid) == g.n and target == frozenset(
            frozenset(e) for e in catalog_edges(gid)
        ):
            return gid
    return None


def _find_isomorphism(g: GainGraph, edges, n: int) -> dict[int, int] | None:
    """Bijection g-labels -> catalog labels preserving adjacency, if any."""
    adj = [set() for _ in range(n + 1)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    gdeg = sorted(g.degree(v) for v in range(1, n + 1))
    cdeg = sorted(len(adj[v]) for v in range(1, n + 1))
    if gdeg != cdeg:
        return None

    # order g's vertices by descending degree for earlier pruning
    order = sorted(range(1, n + 1), key=lambda v: -g.degree(v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for c in range(1, n + 1):
            if c in used or len(adj[c]) != g.degree(v):
                continue
            ok = True
            for w in g.neighbors(v):
                if w in mapping and mapping[w] not in adj[c]:
                    ok = False
                    break
            # also require non-neighbors stay non-neighbors among mapped
            if ok:
                for w, cw in mapping.items():
                    if w not in g.neighbors(v) and cw in adj[c]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = c
            used.add(c)
            if extend(idx + 1):
                return True
            del mapping[v]
            used.discard(c)
        return False

    return dict(mapping) if extend(0) else None


def match_catalog(
    g: GainGraph, ids=None
) -> tuple[str, dict[int, int]] | None:
    """Find a catalog entry isomorphic to ``g``.

    Returns ``(gid, mapping)`` where ``mapping`` sends g's labels to the
    catalog labels, or None.  Tries an exact labeled match first.
    """
    ids = tuple(ids or CATALOG_IDS)
    gid = exact_catalog_id(g, ids)
    if gid is not None:
        return gid, {v: v for v in range(1, g.n + 1)}
    m = g.edge_count
    for gid in ids:
        edges = catalog_edges(gid)
        if catalog_order(gid) != g.n or len(edges) != m:
            continue
        iso = _find_isomorphism(g, edges, g.n)
        if iso is not None:
            return gid, iso
    return None
