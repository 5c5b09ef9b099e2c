"""Ribbon graphs: vertices with cyclic half-edge orders, edges with twists.

A ribbon graph is a neighborhood-of-a-graph surface: disks for vertices,
bands for edges.  A band may carry a half-twist (twist bit 1), which makes
the surface nonorientable.  The one statistic everything downstream needs
is the number of boundary components.

Boundary counting uses side-marked half-edges: every half-edge h carries
two side points (h, L) and (h, R).  Going around a vertex disk, the piece
of disk boundary after one attachment connects its L point to the next
attachment's R point; a band contributes two arcs, L-R and R-L across the
band when untwisted, L-L and R-R when twisted.  Every side point then has
exactly two incident boundary arcs, and boundary components are the cycles
of this pairing -- no orientability assumptions needed.
"""

from __future__ import annotations


class UnknownEdge(KeyError):
    pass


L, R = 0, 1


class RibbonGraph:
    """vertices: list of tuples of half-edge ids (cyclic, counterclockwise);
    edges: list of (h1, h2, twist) with twist in {0,1}."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        self.vertices = [tuple(v) for v in vertices]
        self.edges = [(h1, h2, t & 1) for (h1, h2, t) in edges]
        seen = {}
        for vi, cyc in enumerate(self.vertices):
            for h in cyc:
                assert h not in seen, "half-edge %r attached twice" % (h,)
                seen[h] = vi
        used = set()
        for h1, h2, _ in self.edges:
            for h in (h1, h2):
                assert h in seen, "half-edge %r not attached to a vertex" % (h,)
                assert h not in used, "half-edge %r in two edges" % (h,)
                used.add(h)
        assert used == set(seen), "every half-edge must belong to exactly one edge"

    def __repr__(self):
        return "RibbonGraph(vertices=%r, edges=%r)" % (self.vertices, self.edges)

    def to_json(self):
        return {
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["vertices"], data["edges"])

    def vertex_count(self):
        return len(self.vertices)

    def edge_count(self):
        return len(self.edges)

    def component_count(self):
        """Connected components of the underlying graph (isolated vertices count)."""
        owner = {}
        for vi, cyc in enumerate(self.vertices):
            for h in cyc:
                owner[h] = vi
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for h1, h2, _ in self.edges:
            a, b = find(owner[h1]), find(owner[h2])
            if a != b:
                parent[a] = b
        return len({find(v) for v in range(len(self.vertices))})


def boundary_components(r: RibbonGraph) -> int:
    """Number of boundary circles of the thickened surface."""
    arcs = {}  # side point -> list of partner side points (each gets two)

    def link(p, q):
        arcs.setdefault(p, []).append(q)
        arcs.setdefault(q, []).append(p)

    isolated = 0
    for cyc in r.vertices:
        if not cyc:
            isolated += 1
            continue
        k = len(cyc)
        for i in range(k):
            link((cyc[i], L), (cyc[(i + 1) % k], R))
    for h1, h2, twist in r.edges:
        if twist:
            link((h1, L), (h2, L))
            link((h1, R), (h2, R))
        else:
            link((h1, L), (h2, R))
            link((h1, R), (h2, L))

    for p, nb in arcs.items():
        assert len(nb) == 2, "side point %r has %d arcs" % (p, len(nb))

    seen = set()
    cycles = 0
    for start in arcs:
        if start in seen:
            continue
        cycles += 1
        prev, cur = None, start
        while True:
            seen.add(cur)
            nxt = arcs[cur][0] if arcs[cur][0] != prev else arcs[cur][1]
            prev, cur = cur, nxt
            if cur == start:
                break
    return cycles + isolated


def chord_diagram_to_ribbon(d) -> RibbonGraph:
    """One disk whose boundary carries the diagram word; each chord becomes
    a band, twisted when the chord framing is 1."""
    word = d.word
    pos = {}
    for i, lab in enumerate(word):
        pos.setdefault(lab, []).append(i)
    edges = [(p1, p2, d.framing[lab]) for lab, (p1, p2) in pos.items()]
    return RibbonGraph([tuple(range(len(word)))], edges)


def spanning_subgraph(r: RibbonGraph, keep) -> RibbonGraph:
    """Same vertices, only the selected edges (by index into r.edges)."""
    keep = set(keep)
    for e in keep:
        if not (0 <= e < len(r.edges)):
            raise UnknownEdge("edge index %r out of range" % (e,))
    kept_halves = set()
    edges = []
    for i, e in enumerate(r.edges):
        if i in keep:
            edges.append(e)
            kept_halves.add(e[0])
            kept_halves.add(e[1])
    vertices = [tuple(h for h in cyc if h in kept_halves) for cyc in r.vertices]
    return RibbonGraph(vertices, edges)


def euler_genus_data(r: RibbonGraph):
    """(components, V, E, boundary); for untwisted ribbon graphs
    V - E + boundary = 2*components - 2*genus with integer genus >= 0."""
    return (r.component_count(), r.vertex_count(), r.edge_count(), boundary_components(r))
