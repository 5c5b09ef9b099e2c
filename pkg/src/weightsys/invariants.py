"""Graph and chord-diagram invariants: the classical 4-invariant zoo.

All invariants return exact MPoly values:

  chromatic            chi_G(c)      deletion--contraction
  weighted_chromatic   W_G(q_1,...)  deletion + weight-summing contraction
  stanley              S_G(p_1,...)  subset expansion over edge sets
  abel                 A_G(q_1,...)  spanning forests, i*q_i per i-vertex tree
  interlace_graph      L_G(x)        pivot recursion
  transition_chord     T_C(x;t,s)    3^n ribbon states, boundary counting
  skew_characteristic  Q_G(u)        nondegenerate induced subgraphs

The weighted chromatic polynomial and Stanley's symmetrized chromatic
polynomial are two dresses for the same invariant; translate between them
with stanley_to_weighted (see that docstring for the sign convention).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .poly import MPoly, ONE, q_var, p_var
from .graphs import FramedGraph, canonical_form, nondegeneracy, pivot
from .ribbon import RibbonGraph, boundary_components
from .diagrams import ChordDiagram

_chromatic_cache = {}


def chromatic(g: FramedGraph) -> MPoly:
    """Chromatic polynomial in the variable c."""
    assert not any(g.framing_vector()), "chromatic expects zero framing"
    key = canonical_form(g).key()
    cached = _chromatic_cache.get(key)
    if cached is not None:
        return cached
    g = FramedGraph(*key)
    edges = g.edges()
    if not edges:
        result = MPoly.variable("c", g.n) if g.n else ONE
    else:
        i, j = edges[0]
        result = chromatic(g.delete_edge(i, j)) - chromatic(g.contract_edge(i, j))
    _chromatic_cache[key] = result
    return result


_weighted_cache = {}


def weighted_chromatic(g: FramedGraph) -> MPoly:
    """W_G in the variables q_k: W_G = W_{G'_e} + W_{G''_e}, deletion plus
    contraction with weights adding; a lone vertex of weight n is q_n."""
    assert not any(g.framing_vector()), "weighted chromatic expects zero framing"
    key = canonical_form(g).key()
    cached = _weighted_cache.get(key)
    if cached is not None:
        return cached
    g = FramedGraph(*key)
    edges = g.edges()
    if not edges:
        result = ONE
        for w in g.weights:
            result = result * q_var(w)
    else:
        i, j = edges[0]
        result = weighted_chromatic(g.delete_edge(i, j)) + weighted_chromatic(
            g.contract_edge(i, j)
        )
    _weighted_cache[key] = result
    return result


def stanley(g: FramedGraph) -> MPoly:
    """Symmetrized chromatic polynomial in power sums:
    S_G = sum over edge subsets A of (-1)^|A| p_{lambda(A)},
    lambda(A) = component sizes of (V, A)."""
    assert not any(g.framing_vector()) and all(w == 1 for w in g.weights)
    edges = g.edges()
    n = g.n
    total = MPoly()
    for bits in range(1 << len(edges)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = bin(bits).count("1")
        for t, (i, j) in enumerate(edges):
            if (bits >> t) & 1:
                a, b = find(i), find(j)
                if a != b:
                    parent[a] = b
        sizes = {}
        for v in range(n):
            r = find(v)
            sizes[r] = sizes.get(r, 0) + 1
        term = ONE
        for s in sizes.values():
            term = term * p_var(s)
        total = total + (term if count % 2 == 0 else -term)
    return total


def stanley_to_weighted(s: MPoly, paper_rule: bool = False, n: int | None = None) -> MPoly:
    """Translate a Stanley value (p variables) to the weighted-chromatic
    convention (q variables).

    The verified-by-computation substitution is p_k -> (-1)^(k-1) q_k, which
    turns S_G into W_G exactly (checked on all small graphs).  The stated
    global-degree rule p_k -> (-1)^(n-k) q_k is available as paper_rule=True
    (n = quasihomogeneous degree, required then); the two differ by an
    overall sign (-1)^(n-...) bookkeeping on each monomial.
    """
    if not paper_rule:
        mapping = {}
        for v in s.variables():
            assert v.startswith("p")
            k = int(v[1:])
            mapping[v] = MPoly.const((-1) ** (k - 1)) * q_var(k)
        return s.substitute(mapping)
    assert n is not None, "paper_rule needs the degree n"
    mapping = {}
    for v in s.variables():
        k = int(v[1:])
        mapping[v] = MPoly.const((-1) ** (n - k)) * q_var(k)
    return s.substitute(mapping)


def chromatic_from_stanley(s: MPoly) -> MPoly:
    """Substitute p_i -> c for all i (collapses S_G to the chromatic polynomial)."""
    return s.substitute({v: MPoly.variable("c") for v in s.variables()})


def abel(g: FramedGraph) -> MPoly:
    """Abel polynomial: sum over spanning forests, each tree on i vertices
    contributing a factor i*q_i."""
    assert not any(g.framing_vector())
    edges = g.edges()
    n = g.n
    total = MPoly()
    for subset in range(1 << len(edges)):
        parent = list(range(n))
        size = [1] * n

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for t, (i, j) in enumerate(edges):
            if (subset >> t) & 1:
                a, b = find(i), find(j)
                if a == b:
                    acyclic = False
                    break
                parent[a] = b
                size[b] += size[a]
        if not acyclic:
            continue
        term = ONE
        for v in range(n):
            if find(v) == v:
                term = term * MPoly.const(size[v]) * q_var(size[v])
        total = total + term
    return total


def spanning_tree_count(g: FramedGraph) -> int:
    """Kirchhoff: any cofactor of the Laplacian (exact rational elimination)."""
    n = g.n
    if n == 0:
        return 1
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for i, j in g.edges():
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    m = [row[1:] for row in lap[1:]]
    det = Fraction(1)
    k = n - 1
    for col in range(k):
        piv = None
        for r in range(col, k):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, k):
            f = m[r][col] * inv
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    assert det.denominator == 1
    return abs(int(det))


_interlace_cache = {}


def interlace_graph(g: FramedGraph) -> MPoly:
    """Interlace polynomial: L_G = L_{G-a} + L_{G^{ab}-b} over any edge ab;
    edgeless graphs give x^n."""
    assert not any(g.framing_vector())
    key = canonical_form(g).key()
    cached = _interlace_cache.get(key)
    if cached is not None:
        return cached
    g = FramedGraph(*key)
    edges = g.edges()
    if not edges:
        result = MPoly.variable("x", g.n) if g.n else ONE
    else:
        a, b = edges[0]
        result = interlace_graph(g.delete_vertices([a])) + interlace_graph(
            pivot(g, a, b).delete_vertices([b])
        )
    _interlace_cache[key] = result
    return result


DZ22_WEIGHTS = {
    "phi": -MPoly.variable("t"),
    "chi": MPoly.variable("t"),
    "psi": MPoly.variable("s"),
}


def transition_chord(d: ChordDiagram, weights=None) -> MPoly:
    """Transition polynomial of a chord diagram.

    Every chord independently picks a state: phi (untwisted band),
    chi (half-twisted band), psi (removed).  A state s with boundary
    count c(s) contributes prod w(state) * x^(c(s)-1).  The default
    weights w(chi)=t, w(phi)=-t, w(psi)=s make this a weight system.
    """
    if weights is None:
        weights = DZ22_WEIGHTS
    word = d.word
    pos = {}
    for i, lab in enumerate(word):
        pos.setdefault(lab, []).append(i)
    labs = sorted(pos)
    x = MPoly.variable("x")
    total = MPoly()
    for states in itertools.product(("phi", "chi", "psi"), repeat=len(labs)):
        kept_halves = set()
        edges = []
        w = ONE
        for lab, st in zip(labs, states):
            w = w * weights[st]
            if st == "psi":
                continue
            p1, p2 = pos[lab]
            edges.append((p1, p2, 1 if st == "chi" else 0))
            kept_halves.add(p1)
            kept_halves.add(p2)
        cyc = tuple(i for i in range(len(word)) if i in kept_halves)
        c = boundary_components(RibbonGraph([cyc], edges))
        total = total + w * x ** (c - 1)
    return total


def skew_characteristic(g: FramedGraph) -> MPoly:
    """Q_G(u) = sum over vertex subsets U of nu(G|_U) u^(|V|-|U|)."""
    n = g.n
    u = MPoly.variable("u")
    total = MPoly()
    for mask in range(1 << n):
        keep = [v for v in range(n) if (mask >> v) & 1]
        if nondegeneracy(g.induced(keep)):
            total = total + u ** (n - len(keep))
    return total
