"""Framed, weighted graphs over F2 and their Vassiliev moves.

A graph is stored as a symmetric adjacency matrix over the two-element
field, one bitmask row per vertex.  The diagonal holds the framing (zero
diagonal = ordinary simple graph).  Vertices optionally carry positive
integer weights (used by the weighted chromatic polynomial; default 1).

The module provides the F2 linear algebra the invariants need
(nondegeneracy = parity of the determinant), the two Vassiliev moves and
4-term quadruples, the pivot operation from the interlace world,
isomorphism-class enumeration with exact automorphism counts, and the
directed intersection graph of a chord diagram together with its
characteristic polynomial.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .poly import MPoly, ONE


class BoundExceeded(ValueError):
    pass


class NotAnEdge(ValueError):
    pass


class FramedGraph:
    """Symmetric F2 adjacency matrix with framing on the diagonal.

    rows[i] is an integer bitmask; bit j is the (i,j) entry.  weights is a
    tuple of positive vertex weights.
    """

    __slots__ = ("n", "rows", "weights")

    def __init__(self, n, rows, weights=None):
        self.n = n
        self.rows = tuple(rows)
        self.weights = tuple(weights) if weights is not None else (1,) * n
        assert len(self.rows) == n and len(self.weights) == n

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, n, edges, framing=None, weights=None):
        rows = [0] * n
        for i, j in edges:
            assert i != j, "framing goes on the diagonal, not loops"
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        if framing:
            for i, f in enumerate(framing):
                if f & 1:
                    rows[i] |= 1 << i
        return cls(n, rows, weights)

    @classmethod
    def from_adj(cls, adj, weights=None):
        n = len(adj)
        rows = [sum((adj[i][j] & 1) << j for j in range(n)) for i in range(n)]
        for i in range(n):
            for j in range(n):
                assert (adj[i][j] & 1) == (adj[j][i] & 1), "matrix must be symmetric"
        return cls(n, rows, weights)

    @classmethod
    def empty(cls, n, weights=None):
        return cls(n, [0] * n, weights)

    @classmethod
    def complete(cls, n):
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << i) for i in range(n)])

    @classmethod
    def path(cls, n):
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n):
        assert n >= 3
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    # -- basic queries -----------------------------------------------------

    def adjacent(self, i, j):
        return (self.rows[i] >> j) & 1

    def framing(self, i):
        return (self.rows[i] >> i) & 1

    def framing_vector(self):
        return tuple(self.framing(i) for i in range(self.n))

    def neighbors_mask(self, i):
        """Off-diagonal neighbors of i as a bitmask."""
        return self.rows[i] & ~(1 << i)

    def degree(self, i):
        return bin(self.neighbors_mask(i)).count("1")

    def edges(self):
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.adjacent(i, j)
        ]

    def edge_count(self):
        return len(self.edges())

    def adj_matrix(self):
        return [[(self.rows[i] >> j) & 1 for j in range(self.n)] for i in range(self.n)]

    def key(self):
        return (self.n, self.rows, self.weights)

    def __eq__(self, other):
        return isinstance(other, FramedGraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "FramedGraph(n=%d, edges=%r, framing=%r, weights=%r)" % (
            self.n,
            self.edges(),
            self.framing_vector(),
            self.weights,
        )

    # -- elementary surgery --------------------------------------------------

    def toggle_edge(self, i, j):
        assert i != j
        rows = list(self.rows)
        rows[i] ^= 1 << j
        rows[j] ^= 1 << i
        return FramedGraph(self.n, rows, self.weights)

    def delete_vertices(self, drop):
        keep = [v for v in range(self.n) if v not in set(drop)]
        return self.induced(keep)

    def induced(self, keep):
        """Induced subgraph on the given vertex sequence (in that order)."""
        idx = {v: k for k, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            r = self.rows[v]
            m = 0
            for w in keep:
                if (r >> w) & 1:
                    m |= 1 << idx[w]
            rows[idx[v]] = m
        return FramedGraph(len(keep), rows, [self.weights[v] for v in keep])

    def delete_edge(self, i, j):
        assert self.adjacent(i, j)
        return self.toggle_edge(i, j)

    def contract_edge(self, i, j):
        """Contract edge ij; j is merged into i; weights add; parallel edges
        collapse (the result is again simple)."""
        assert self.adjacent(i, j) and i != j
        keep = [v for v in range(self.n) if v != j]
        idx = {v: k for k, v in enumerate(keep)}
        rows = [0] * len(keep)
        weights = [self.weights[v] for v in keep]
        weights[idx[i]] = self.weights[i] + self.weights[j]
        for v in keep:
            r = self.rows[v] | (self.rows[j] if v == i else 0)
            if (r >> j) & 1:  # adjacency to j becomes adjacency to the merger
                r |= 1 << i
            m = 0
            for w in keep:
                if (r >> w) & 1:
                    m |= 1 << idx[w]
            rows[idx[v]] = m
        # no loop at the merged vertex, and framings add over F2
        fused = (self.framing(i) + self.framing(j)) & 1
        rows[idx[i]] &= ~(1 << idx[i])
        if fused:
            rows[idx[i]] |= 1 << idx[i]
        return FramedGraph(len(keep), rows, weights)

    def disjoint_union(self, other):
        rows = list(self.rows) + [r << self.n for r in other.rows]
        return FramedGraph(self.n + other.n, rows, self.weights + other.weights)

    # -- connectivity --------------------------------------------------------

    def components(self):
        """Vertex sets of connected components, each a sorted list."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                m = self.neighbors_mask(v)
                while m:
                    w = (m & -m).bit_length() - 1
                    m &= m - 1
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self):
        return self.n == 0 or len(self.components()) == 1

    # -- JSON ----------------------------------------------------------------

    def to_json(self):
        return {
            "n": self.n,
            "adj": self.adj_matrix(),
            "framing": list(self.framing_vector()),
            "weights": list(self.weights),
        }

    @classmethod
    def from_json(cls, data):
        g = cls.from_adj(data["adj"], data.get("weights"))
        framing = data.get("framing")
        if framing is not None:
            rows = list(g.rows)
            for i, f in enumerate(framing):
                want = f & 1
                if ((rows[i] >> i) & 1) != want:
                    rows[i] ^= 1 << i
            g = cls(g.n, rows, g.weights)
        return g


# ---------------------------------------------------------------------------
# F2 linear algebra
# ---------------------------------------------------------------------------


def f2_rank(rows, ncols):
    """Rank over F2 of the matrix whose rows are the given bitmasks."""
    basis = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


def nondegeneracy(g: FramedGraph) -> int:
    """Parity of det A(G) over F2; the empty 0x0 matrix counts as 1."""
    return 1 if f2_rank(g.rows, g.n) == g.n else 0


# ---------------------------------------------------------------------------
# Vassiliev moves
# ---------------------------------------------------------------------------


def first_move(g: FramedGraph, a: int, b: int) -> FramedGraph:
    """G'_ab: toggle the edge ab."""
    return g.toggle_edge(a, b)


def second_move(g: FramedGraph, a: int, b: int) -> FramedGraph:
    """G~_ab: add row b to row a and column b to column a over F2.

    This is conjugation of the adjacency matrix by the elementary matrix
    with an extra unit in position (b,a).  For zero framing at b it toggles
    a's adjacency to the neighbors of b (b itself excluded) and adds
    framing(b) to framing(a).
    """
    assert a != b
    rows = list(g.rows)
    old_b = rows[b]
    new_a = rows[a] ^ old_b
    # the plain row-xor puts A_aa + A_ba on the diagonal; the conjugation
    # wants A_aa + A_bb there instead
    if (((old_b >> a) & 1) ^ ((old_b >> b) & 1)):
        new_a ^= 1 << a
    rows[a] = new_a
    for i in range(g.n):  # column a += column b
        if i != a and (g.rows[i] >> b) & 1:
            rows[i] ^= 1 << a
    return FramedGraph(g.n, rows, g.weights)


def graph_4t_quadruple(g: FramedGraph, a: int, b: int):
    """(G, G'_ab, G~_ab, G~'_ab); any 4-invariant f satisfies
    f(G) - f(G') - f(G~) + f(G~') = 0."""
    assert a != b
    gp = first_move(g, a, b)
    gt = second_move(g, a, b)
    gtp = first_move(gt, a, b)
    return g, gp, gt, gtp


def second_move_matrix_check(g: FramedGraph, a: int, b: int) -> bool:
    """Verify A(G~_ab) = I^t A(G) I with I = identity + E_{ba}, over F2."""
    n = g.n
    A = g.adj_matrix()
    I = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    I[b][a] = 1
    It = [[I[j][i] for j in range(n)] for i in range(n)]

    def matmul(X, Y):
        return [
            [sum(X[i][k] * Y[k][j] for k in range(n)) & 1 for j in range(n)]
            for i in range(n)
        ]

    return matmul(matmul(It, A), I) == second_move(g, a, b).adj_matrix()


def pivot(g: FramedGraph, a: int, b: int) -> FramedGraph:
    """Pivot along the edge ab: toggle all edges between the three classes
    "adjacent to a only", "adjacent to b only", "adjacent to both"."""
    if not g.adjacent(a, b):
        raise NotAnEdge("pivot needs an edge, %d-%d is not one" % (a, b))
    na = g.neighbors_mask(a) & ~(1 << b)
    nb = g.neighbors_mask(b) & ~(1 << a)
    only_a = na & ~nb
    only_b = nb & ~na
    both = na & nb
    rows = list(g.rows)

    def cross_toggle(mask1, mask2):
        m1 = mask1
        while m1:
            i = (m1 & -m1).bit_length() - 1
            m1 &= m1 - 1
            rows[i] ^= mask2
            m2 = mask2
            while m2:
                j = (m2 & -m2).bit_length() - 1
                m2 &= m2 - 1
                rows[j] ^= 1 << i

    cross_toggle(only_a, only_b)
    cross_toggle(only_a, both)
    cross_toggle(only_b, both)
    return FramedGraph(g.n, rows, g.weights)


# ---------------------------------------------------------------------------
# Canonical forms, enumeration, automorphisms
# ---------------------------------------------------------------------------


def _refine_colors(g: FramedGraph):
    """Iterated color refinement; returns a list of color ids per vertex.

    Colors start from (weight, framing, degree) and absorb sorted neighbor
    colors until stable.  Isomorphism-invariant by construction.
    """
    colors = [(g.weights[v], g.framing(v), g.degree(v)) for v in range(g.n)]
    ids = _compress(colors)
    while True:
        new = []
        for v in range(g.n):
            nb = []
            m = g.neighbors_mask(v)
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                nb.append(ids[w])
            new.append((ids[v], tuple(sorted(nb))))
        new_ids = _compress(new)
        if new_ids == ids:
            return ids
        ids = new_ids


def _compress(keys):
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _candidate_perms(g: FramedGraph):
    """Permutations compatible with the refined coloring: vertices of color
    class k are assigned (in every order) to the slots reserved for class k.
    Yields tuples perm with perm[v] = new label of v."""
    ids = _refine_colors(g)
    classes = {}
    for v, c in enumerate(ids):
        classes.setdefault(c, []).append(v)
    slot = 0
    ordered = []
    for c in sorted(classes):
        members = classes[c]
        ordered.append((members, list(range(slot, slot + len(members)))))
        slot += len(members)
    for assignment in itertools.product(
        *[itertools.permutations(slots) for _, slots in ordered]
    ):
        perm = [0] * g.n
        for (members, _), slots in zip(ordered, assignment):
            for v, s in zip(members, slots):
                perm[v] = s
        yield tuple(perm)


def relabel(g: FramedGraph, perm) -> FramedGraph:
    """Apply the vertex relabeling v -> perm[v]."""
    rows = [0] * g.n
    weights = [0] * g.n
    for v in range(g.n):
        m = g.rows[v]
        nm = 0
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            nm |= 1 << perm[w]
        rows[perm[v]] = nm
        weights[perm[v]] = g.weights[v]
    return FramedGraph(g.n, rows, weights)


def canonical_form(g: FramedGraph) -> FramedGraph:
    """Least relabeling among the refinement-compatible permutations; a
    complete isomorphism invariant (within classes the search is
    exhaustive, and the coloring itself is invariant)."""
    best = None
    for perm in _candidate_perms(g):
        cand = relabel(g, perm).key()
        if best is None or cand < best:
            best = cand
    return FramedGraph(*best)


def aut_order(g: FramedGraph) -> int:
    """Exact order of the automorphism group (label-preserving perms)."""
    count = 0
    key = g.key()
    ids = _refine_colors(g)
    classes = {}
    for v, c in enumerate(ids):
        classes.setdefault(c, []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    for assignment in itertools.product(
        *[itertools.permutations(members) for members in groups]
    ):
        perm = [0] * g.n
        for members, images in zip(groups, assignment):
            for v, w in zip(members, images):
                perm[v] = w
        if relabel(g, perm).key() == key:
            count += 1
    return count


def enumerate_graphs(n: int, bound: int = 7):
    """One representative per isomorphism class of simple graphs on n
    vertices (zero framing, unit weights), with exact automorphism count.

    Returns a sorted list of (FramedGraph, aut_order) pairs.
    """
    if n > bound:
        raise BoundExceeded("vertex count %d exceeds bound %d" % (n, bound))
    classes = {FramedGraph.empty(0).key()}
    for size in range(1, n + 1):
        next_classes = set()
        for key in classes:
            g = FramedGraph(*key)
            for nbhd in range(1 << (size - 1)):
                rows = [
                    g.rows[v] | (((nbhd >> v) & 1) << (size - 1))
                    for v in range(size - 1)
                ]
                rows.append(nbhd)
                bigger = FramedGraph(size, rows)
                next_classes.add(canonical_form(bigger).key())
        classes = next_classes
    out = [(FramedGraph(*key), aut_order(FramedGraph(*key))) for key in sorted(classes)]
    return out


# ---------------------------------------------------------------------------
# Directed intersection graphs
# ---------------------------------------------------------------------------


class DirectedIntersectionGraph:
    """Skew-symmetric {-1,0,1} matrix recording which of two crossing arcs
    starts first after cutting the circle."""

    __slots__ = ("n", "skew")

    def __init__(self, n, skew):
        self.n = n
        self.skew = tuple(tuple(row) for row in skew)
        for i in range(n):
            for j in range(n):
                assert self.skew[i][j] == -self.skew[j][i]

    def __eq__(self, other):
        return (
            isinstance(other, DirectedIntersectionGraph)
            and self.n == other.n
            and self.skew == other.skew
        )

    def __repr__(self):
        return "DirectedIntersectionGraph(%r)" % (self.skew,)

    def char_poly(self, var: str = "u") -> MPoly:
        """det(u*I - skew), exact, via the Faddeev-LeVerrier recursion."""
        n = self.n
        A = [[Fraction(x) for x in row] for row in self.skew]

        def matmul(X, Y):
            return [
                [sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]

        # char poly u^n + c_1 u^{n-1} + ... + c_n
        coeffs = [Fraction(1)]
        M = [[Fraction(0)] * n for _ in range(n)]
        for k in range(1, n + 1):
            for i in range(n):
                M[i][i] += coeffs[-1]
            M = matmul(A, M)
            c = -Fraction(sum(M[i][i] for i in range(n)), k)
            coeffs.append(c)
        u = MPoly.variable(var)
        total = MPoly()
        for k, c in enumerate(coeffs):
            total = total + MPoly.const(c) * u ** (n - k)
        return total
