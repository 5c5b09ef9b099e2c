"""Weight systems from Lie algebras.

The sl2 weight system is computed by a reduction engine whose rules are the
multiplicativity of the weight system together with the two one-chord
relations (an isolated chord contributes a factor c, a chord crossing
exactly one other chord a factor c-1) and a six-term relation.  The
six-term relation is the diagram form of the sl2 tensor identity

    sum_i [x_i, y] (x) [z, x_i*]  =  -z (x) y + B(y, z) Omega,

valid for the invariant form B = 2 tr (trace in the defining
representation), where Omega = sum_i x_i (x) x_i* is the Casimir tensor of
B.  Applied at a chord v whose neighbouring ends alpha, beta belong to two
chords crossing v, it writes the diagram as a combination of three diagrams
with fewer crossings and two diagrams with fewer chords, which terminates.
The independent Verma-module oracle (weightsys.verma) certifies the engine.

The gl side follows the permutation calculus: the value on a permutation is
defined by w(sigma) = sum E_{i_1 i_sigma(1)} ... E_{i_m i_sigma(m)}, is
central, and satisfies a recurrence under transposing two neighbouring
vertices that reduces every permutation to concatenations of canonical
cycles, i.e. to monomials in the Casimir variables C_k.  The sl variant
uses the traceless generators: same recurrence, variables Ct_k, Ct_1 = 0.
"""

import itertools
from fractions import Fraction

from .diagrams import ChordDiagram, Permutation, complete_diagram, diagram_involution
from .graphs import BoundExceeded
from .poly import (
    MPoly,
    ONE,
    TruncSeries,
    ZERO,
    casimir_sl_var,
    casimir_var,
    continued_fraction_series,
    geometric_series,
    series_log,
)

C = MPoly.variable("c")
N_VAR = MPoly.variable("N")
NINV = MPoly.variable("Ninv")


class NotScalar(Exception):
    """The matrix oracle produced a non-scalar operator (centrality bug)."""


# ---------------------------------------------------------------------------
# sl2: reduction engine
# ---------------------------------------------------------------------------


def _positions(word):
    pos = {}
    for i, lab in enumerate(word):
        pos.setdefault(lab, []).append(i)
    return pos


def _crossing_sets(word):
    """lab -> set of labels whose ends interleave with lab's."""
    pos = _positions(word)
    labs = list(pos)
    cross = {lab: set() for lab in labs}
    for a, b in itertools.combinations(labs, 2):
        p, q = pos[a]
        r, s = pos[b]
        if (p < r < q < s) or (r < p < s < q):
            cross[a].add(b)
            cross[b].add(a)
    return cross


def six_term_words(word, i, j):
    """Companion words of the six-term relation at chord ends i, j.

    word[i] and word[j] must be the two ends of one chord v, and the arc
    from i to j (in increasing cyclic direction) must contain at least two
    chord ends; alpha denotes the end at i+1, beta the end at j-1.  With
    A, B the chords of alpha and beta, the relation reads

        w(word) = w(beta_out) + w(alpha_out) - w(both_out)
                  - w(exchange) + w(merge)            (A != B)
        w(word) = w(beta_out) + w(alpha_out) - w(both_out)
                  + 2 w(fused)                        (A == B)

    Returns ("general", dict) or ("degenerate", dict) accordingly.
    """
    L = len(word)
    v = word[i]
    assert word[j] == v and i != j
    rot = word[i:] + word[:i]
    jr = (j - i) % L
    k = jr - 1
    assert k >= 2, "the arc must contain at least two ends"
    alpha, beta = rot[1], rot[jr - 1]
    mid = rot[2 : jr - 1]
    out = rot[jr + 1 :]
    both_out = (alpha, v) + mid + (v, beta) + out
    beta_out = (v, alpha) + mid + (v, beta) + out
    alpha_out = (alpha, v) + mid + (beta, v) + out
    base = {"both_out": both_out, "beta_out": beta_out, "alpha_out": alpha_out}
    new1 = max(word) + 1
    if alpha == beta:
        base["fused"] = (new1,) + mid + (new1,) + out
        return "degenerate", base
    base["exchange"] = (beta,) + mid + (alpha,) + out
    new2 = new1 + 1
    base["merge"] = (
        (new1,)
        + mid
        + (new1,)
        + tuple(new2 if lab in (alpha, beta) else lab for lab in out)
    )
    return "general", base


class SL2Engine:
    """Reduction engine for w_sl2 with a memo table on canonical words.

    An rng (random.Random) makes the engine pick uniformly among admissible
    rule applications instead of the first one; results must not change.
    """

    def __init__(self, rng=None):
        self.memo = {}
        self.rng = rng

    def _pick(self, options):
        if self.rng is None:
            return options[0]
        return options[self.rng.randrange(len(options))]

    def value(self, word):
        if not word:
            return ONE
        key = ChordDiagram(word).canonical_key()
        if key in self.memo:
            return self.memo[key]
        result = self._reduce(key[0])
        self.memo[key] = result
        return result

    def _reduce(self, word):
        L = len(word)
        # multiplicativity: a cyclic interval closed under chords splits off
        for start in range(L):
            open_labs = set()
            for off in range(L - 1):
                lab = word[(start + off) % L]
                open_labs.symmetric_difference_update((lab,))
                if not open_labs:
                    part = tuple(word[(start + x) % L] for x in range(off + 1))
                    rest = tuple(word[(start + x) % L] for x in range(off + 1, L))
                    return self.value(part) * self.value(rest)
        cross = _crossing_sets(word)
        pos = _positions(word)
        isolated = [lab for lab in cross if not cross[lab]]
        if isolated:
            lab = self._pick(isolated)
            rest = tuple(x for x in word if x != lab)
            return C * self.value(rest)
        leaves = [lab for lab in cross if len(cross[lab]) == 1]
        if leaves:
            lab = self._pick(leaves)
            rest = tuple(x for x in word if x != lab)
            return (C - 1) * self.value(rest)
        # six-term sites: both neighbouring ends inside the arc must belong
        # to chords crossing v, so every term drops (chords, crossings)
        sites = []
        for lab, (p, q) in pos.items():
            for i, j in ((p, q), (q, p)):
                if (j - i) % L < 3:
                    continue
                alpha = word[(i + 1) % L]
                beta = word[(j - 1) % L]
                if alpha in cross[lab] and beta in cross[lab]:
                    sites.append((i, j))
        assert sites, "a diagram with all chords crossing >=2 has a site"
        i, j = self._pick(sites)
        kind, words = six_term_words(word, i, j)
        total = (
            self.value(words["beta_out"])
            + self.value(words["alpha_out"])
            - self.value(words["both_out"])
        )
        if kind == "general":
            total = total - self.value(words["exchange"]) + self.value(words["merge"])
        else:
            total = total + 2 * self.value(words["fused"])
        return total


_DEFAULT_SL2 = SL2Engine()


def w_sl2(d: ChordDiagram, engine: SL2Engine | None = None) -> MPoly:
    """Value of the sl2 weight system on a zero-framed chord diagram."""
    assert not any(d.framing.values()), "sl2 weight system needs zero framing"
    eng = _DEFAULT_SL2 if engine is None else engine
    return eng.value(tuple(d.word))


# ---------------------------------------------------------------------------
# sl2: operator iteration for complete diagrams
# ---------------------------------------------------------------------------


def _padd(p, q):
    out = list(p) + [ZERO] * (len(q) - len(p))
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return out


def _pscale(p, f):
    return [c * f for c in p]


def _apply_t(p):
    """The operator T on polynomials in x (coefficient lists over MPoly)."""
    while p and p[-1].is_zero():
        p = p[:-1]
    if not p:
        return []
    if len(p) == 1:
        return [ZERO, p[0]]
    if len(p) == 2:
        return [ZERO, p[0] - p[1], p[1]]
    f = p[2:]
    txf = _apply_t([ZERO] + f)
    tf = _apply_t(f)
    out = _padd(_pscale([ZERO] + txf, MPoly.const(2)), _pscale(txf, MPoly.const(-1)))
    out = _padd(out, _pscale(tf, 2 * C))
    out = _padd(out, _pscale([ZERO] + tf, MPoly.const(-1)))
    out = _padd(out, _pscale([ZERO, ZERO] + tf, MPoly.const(-1)))
    # trailing term (x - c)^2 * f
    out = _padd(out, _pscale([ZERO, ZERO] + f, ONE))
    out = _padd(out, _pscale([ZERO] + f, -2 * C))
    out = _padd(out, _pscale(f, C * C))
    # the degree-one remainder r1*x + r0
    out = _padd(out, [ZERO, p[0] - p[1], p[1]])
    return out


def zakorko_iterate(n: int) -> MPoly:
    """T^n(1) evaluated at x = c; equals w_sl2 on n mutually crossing chords."""
    assert n >= 0
    p = [ONE]
    for _ in range(n):
        p = _apply_t(p)
    total = ZERO
    for i, coeff in enumerate(p):
        total = total + coeff * C**i
    return total


def complete_graph_cf_series(order: int) -> TruncSeries:
    """Generating series sum_n w_sl2(K_n) t^n as a continued fraction.

    The level data a(m) = -c + m(m+1), b(m) = m^2 c - m^2 (m^2 - 1)/4
    expands to the same coefficients as zakorko_iterate.
    """
    def a(m):
        return MPoly.const(m * (m + 1)) - C

    def b(m):
        return C * (m * m) - Fraction(m * m * (m * m - 1), 4)

    return continued_fraction_series(a, b, order)


# ---------------------------------------------------------------------------
# sl2: generating series over complete bipartite diagrams
# ---------------------------------------------------------------------------

GM_BOUND = 6


def _s_row(m: int):
    """Coefficients s_{0,m}..s_{m,m} of the bipartite recurrence."""
    x = MPoly.variable("x")
    order = m
    one = TruncSeries.const(1, order)
    t = TruncSeries.gen(order)
    lin = one - x * t
    den = lin * lin + (one + x * t) * t - 2 * C * t * t
    total = lin.inverse() * (C * one + (C * C * t * t - x * t) * den.inverse())
    row = total.coeffs[m]
    return [row.coefficient("x", i) for i in range(m + 1)]


def complete_bipartite_series(m: int, order: int, bound: int = GM_BOUND) -> TruncSeries:
    """G_m: series in t whose t^n coefficient is w_sl2 on K_{m,n}."""
    if m > bound:
        raise BoundExceeded("bipartite side %d exceeds bound %d" % (m, bound))
    t = TruncSeries.gen(order)
    gs = [geometric_series(C, order)]
    for mm in range(1, m + 1):
        s = _s_row(mm)
        assert s[mm] == C - Fraction(mm * (mm + 1), 2)
        tail = TruncSeries.const(0, order)
        for i in range(mm):
            tail = tail + s[i] * gs[i]
        series = (TruncSeries.const(C**mm, order) + t * tail) * (
            TruncSeries.const(1, order) - s[mm] * t
        ).inverse()
        gs.append(series)
    return gs[m]


def c5n_series(order: int) -> TruncSeries:
    """Series for the five-cycle joined with n dominating vertices.

    Built from the bipartite series G_0..G_5; agrees with the closed
    partial-fraction form c5n_closed_form.
    """
    g = [complete_bipartite_series(i, order) for i in range(6)]
    return (
        ((C + 5) * C**2) * g[0]
        - (2 * (C - 1) * (7 * C + 3)) * g[1]
        + (5 * C**2 - 6 * C - 26) * g[2]
        + 29 * g[3]
        - 10 * g[4]
        + g[5]
    )


def c5n_closed_form(order: int) -> TruncSeries:
    """Partial-fraction form of c5n_series: three geometric progressions."""
    t1 = ((30 * C**4 - 60 * C**3 - 111 * C**2 + 64 * C + 36) * C / 70) * (
        geometric_series(C - 1, order)
    )
    t2 = ((C - 2) * (5 * C**2 - 15 * C + 9) * (4 * C - 3) * C / 45) * (
        geometric_series(C - 6, order)
    )
    t3 = ((C - 6) * (C - 2) * (4 * C - 15) * (4 * C - 3) * C / 126) * (
        geometric_series(C - 15, order)
    )
    return t1 + t2 + t3


def sl2_primitive_complete_values(nmax: int):
    """Values of w_sl2 on the primitive parts of complete diagrams.

    Computed as the exponential-generating-function logarithm of the
    sequence w_sl2(K_n); returns the list for n = 1..nmax.
    """
    fact = [1]
    for k in range(1, nmax + 1):
        fact.append(fact[-1] * k)
    coeffs = [
        w_sl2(complete_diagram(n)) / Fraction(fact[n]) for n in range(nmax + 1)
    ]
    logs = series_log(TruncSeries(coeffs, nmax))
    return [logs.coeffs[n] * Fraction(fact[n]) for n in range(1, nmax + 1)]


# ---------------------------------------------------------------------------
# gl / sl on permutations
# ---------------------------------------------------------------------------


class PermDigraph:
    """A permutation on cyclically ordered vertices 0..m-1.

    succ[i] is the head of the arrow leaving vertex i; every vertex has one
    incoming and one outgoing arrow.  Supports the local operations of the
    neighbour-transposition recurrence.
    """

    __slots__ = ("succ",)

    def __init__(self, succ):
        self.succ = tuple(succ)
        assert sorted(self.succ) == list(range(len(self.succ)))

    @classmethod
    def from_permutation(cls, p: Permutation) -> "PermDigraph":
        return cls(tuple(p(i) - 1 for i in range(1, p.m + 1)))

    @property
    def m(self):
        return len(self.succ)

    def canonical_key(self):
        """Least relabeling of the successor tuple over cyclic rotations."""
        m = len(self.succ)
        if m == 0:
            return ()
        return min(
            tuple((self.succ[(i + r) % m] - r) % m for i in range(m))
            for r in range(m)
        )

    def transpose_neighbors(self, k: int) -> "PermDigraph":
        """Conjugate by the transposition of the adjacent vertices k, k+1."""
        m = len(self.succ)
        assert 0 <= k < m - 1
        tau = list(range(m))
        tau[k], tau[k + 1] = k + 1, k
        new = [0] * m
        for v in range(m):
            new[tau[v]] = tau[self.succ[v]]
        return PermDigraph(new)

    def contract(self, removed, redirect) -> "PermDigraph":
        """Drop the removed vertices, rewriting arrows through redirect."""
        keep = [v for v in range(len(self.succ)) if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        return PermDigraph(
            tuple(index[redirect.get(v, self.succ[v])] for v in keep)
        )

    def __repr__(self):
        return "PermDigraph(%r)" % (list(self.succ),)


_GL_MEMO = {}
_SL_MEMO = {}


def _perm_value(g: PermDigraph, cyc, trace_elem, memo) -> MPoly:
    m = g.m
    if m == 0:
        return ONE
    succ = g.succ
    key = g.canonical_key()
    if key in memo:
        return memo[key]
    result = _perm_reduce(g, cyc, trace_elem, memo)
    memo[key] = result
    return result


def _perm_reduce(g: PermDigraph, cyc, trace_elem, memo):
    succ = g.succ
    m = g.m
    for i, s in enumerate(succ):
        if s == i:
            if trace_elem is None:
                return ZERO
            rest = g.contract({i}, {})
            return trace_elem * _perm_value(rest, cyc, trace_elem, memo)
    # concatenation: a closed prefix splits off multiplicatively
    reach = -1
    for j in range(m - 1):
        reach = max(reach, succ[j])
        if reach == j:
            left = PermDigraph(succ[: j + 1])
            right = PermDigraph(tuple(v - j - 1 for v in succ[j + 1 :]))
            return _perm_value(left, cyc, trace_elem, memo) * _perm_value(
                right, cyc, trace_elem, memo
            )
    if succ == tuple(range(1, m)) + (0,):
        return cyc(m)
    # rank vertices: cycles ordered by least vertex, walked from it
    rank = [None] * m
    r = 0
    for s in range(m):
        if rank[s] is not None:
            continue
        v = s
        while rank[v] is None:
            rank[v] = r
            r += 1
            v = succ[v]
    k = next(i for i in range(m - 1) if rank[i] > rank[i + 1])
    a = succ.index(k + 1)
    b = succ.index(k)
    c_, d = succ[k], succ[k + 1]
    # an arrow k -> k+1 would make rank[k+1] = rank[k] + 1
    assert c_ != k + 1
    total = _perm_value(g.transpose_neighbors(k), cyc, trace_elem, memo)
    if d == k:
        dropped = g.contract({k, k + 1}, {a: c_})
        merged = g.contract({k + 1}, {k: c_, a: k})
        if trace_elem is not None:
            total = total + trace_elem * _perm_value(dropped, cyc, trace_elem, memo)
        total = total - N_VAR * _perm_value(merged, cyc, trace_elem, memo)
    else:
        one_gone = g.contract({k + 1}, {k: d, a: c_})
        other_gone = g.contract({k}, {k + 1: c_, b: d})
        total = (
            total
            + _perm_value(one_gone, cyc, trace_elem, memo)
            - _perm_value(other_gone, cyc, trace_elem, memo)
        )
    return total


def _as_digraph(p) -> PermDigraph:
    if isinstance(p, PermDigraph):
        return p
    if isinstance(p, Permutation):
        return PermDigraph.from_permutation(p)
    return PermDigraph(tuple(p))


def w_gl(p) -> MPoly:
    """Universal gl weight system of a permutation (or its digraph)."""
    return _perm_value(_as_digraph(p), casimir_var, casimir_var(1), _GL_MEMO)


def w_sl(p) -> MPoly:
    """Universal sl weight system: Casimir variables Ct_k with Ct_1 = 0."""
    return _perm_value(_as_digraph(p), casimir_sl_var, None, _SL_MEMO)


def w_gl_diagram(d: ChordDiagram) -> MPoly:
    return w_gl(diagram_involution(d))


def w_sl_diagram(d: ChordDiagram) -> MPoly:
    return w_sl(diagram_involution(d))


# ---------------------------------------------------------------------------
# gl from sl via the Hopf decomposition
# ---------------------------------------------------------------------------


def sl_casimir_in_gl(k: int) -> MPoly:
    """Ct_k written in C_1..C_k, N and the formal inverse Ninv of N."""
    total = ZERO
    for i in range(k + 1):
        c_part = N_VAR if k == i else casimir_var(k - i)
        term = (
            MPoly.const(Fraction(_binom(k, i) * (-1) ** i))
            * c_part
            * (casimir_var(1) * NINV) ** i
        )
        total = total + term
    return total


def _binom(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _reduce_ninv(poly: MPoly) -> MPoly:
    """Cancel N against Ninv inside every monomial."""
    terms = {}
    for mono, coeff in poly.terms.items():
        d = dict(mono)
        a, b = d.pop("N", 0), d.pop("Ninv", 0)
        net = a - b
        if net > 0:
            d["N"] = net
        elif net < 0:
            d["Ninv"] = -net
        key = tuple(sorted(d.items()))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return MPoly({m: c for m, c in terms.items() if c})


def gl_from_sl(d: ChordDiagram) -> MPoly:
    """Reassemble w_gl(d) from sl values of all chord-subset restrictions.

    Uses w_gl = sum over splits I|J of (C_1^2/N)^|I| w_sl(d restricted to J),
    then rewrites Ct_k in gl variables; all Ninv factors must cancel.
    """
    labels = d.chords()
    total = ZERO
    c1sq_over_n = casimir_var(1) ** 2 * NINV
    for size in range(len(labels) + 1):
        for kept in itertools.combinations(labels, size):
            keep = set(kept)
            sub_word = tuple(lab for lab in d.word if lab in keep)
            part = (
                w_sl_diagram(ChordDiagram(sub_word)) if sub_word else ONE
            )
            total = total + c1sq_over_n ** (len(labels) - size) * part
    mapping = {
        "Ct%d" % k: sl_casimir_in_gl(k)
        for k in range(2, 2 * len(labels) + 1)
    }
    expanded = _reduce_ninv(total.substitute(mapping))
    assert expanded.degree_in("Ninv") == 0, "1/N factors must cancel"
    return expanded


# ---------------------------------------------------------------------------
# numeric oracles
# ---------------------------------------------------------------------------


def casimir_eigenvalues(n_val: int, lam, kmax: int):
    """Eigenvalues of C_1..C_kmax on the irreducible of highest weight lam.

    Expands  1 - N u - sum phi(C_k) u^{k+1} = prod (1-(x_i+1)u)/(1-x_i u)
    with the shifted coordinates x_i = lam_i + N - i.  Entries of lam may be
    rationals or polynomials (symbolic weights).
    """
    assert n_val >= 1 and len(lam) == n_val
    order = kmax + 1
    xs = []
    for i, li in enumerate(lam, start=1):
        li = li if isinstance(li, MPoly) else MPoly.const(li)
        xs.append(li + (n_val - i))
    num = TruncSeries.const(1, order, "u")
    den = TruncSeries.const(1, order, "u")
    for x in xs:
        num = num * TruncSeries([ONE, -(x + 1)], order, "u")
        den = den * TruncSeries([ONE, -x], order, "u")
    total = num * den.inverse()
    assert total.coeffs[1] == MPoly.const(-n_val)
    out = {}
    for k in range(1, kmax + 1):
        val = -total.coeffs[k + 1]
        out[k] = val.constant_term() if val.is_constant() else val
    return out


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [
        [sum(x * y for x, y in zip(row, col)) for col in bt] for row in a
    ]


def matrix_oracle(p, n_val: int, lam):
    """w_gl of a permutation evaluated on an explicit irreducible module.

    For gl(1) the module is the scalar lam_1; for gl(2) it is the symmetric
    power Sym^(lam1-lam2) of the defining representation twisted by
    det^lam2.  Sums the matrix products over all index tuples, checks the
    result is scalar, and returns the scalar.
    """
    g = _as_digraph(p)
    m = g.m
    assert m <= 8, "oracle is limited to eight letters"
    assert len(lam) == n_val
    if n_val == 1:
        a = lam[0]
        if isinstance(a, MPoly):
            return a**m
        return Fraction(a) ** m
    assert n_val == 2, "oracle modules are built for N <= 2 only"
    lam1, lam2 = lam
    d = lam1 - lam2
    assert d >= 0 and d + 1 <= 30, "module dimension out of range"
    dim = d + 1
    e_mats = {
        (1, 1): [[lam1 - j if i == j else 0 for j in range(dim)] for i in range(dim)],
        (2, 2): [[lam2 + j if i == j else 0 for j in range(dim)] for i in range(dim)],
        (1, 2): [[j if i == j - 1 else 0 for j in range(dim)] for i in range(dim)],
        (2, 1): [[d - j if i == j + 1 else 0 for j in range(dim)] for i in range(dim)],
    }
    if m == 0:
        return Fraction(1)
    total = [[0] * dim for _ in range(dim)]
    for tup in itertools.product((1, 2), repeat=m):
        mat = None
        for posn in range(m):
            factor = e_mats[(tup[posn], tup[g.succ[posn]])]
            mat = factor if mat is None else _matmul(mat, factor)
        for i in range(dim):
            row = total[i]
            for j in range(dim):
                row[j] += mat[i][j]
    scalar = total[0][0]
    for i in range(dim):
        for j in range(dim):
            if total[i][j] != (scalar if i == j else 0):
                raise NotScalar("operator is not a scalar matrix")
    return Fraction(scalar)
