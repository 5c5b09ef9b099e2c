"""Graded Hopf-algebra operations over combinatorial basis families.

Three families share one interface: graphs (disjoint union / vertex-set
splitting), chord diagrams (word concatenation / chord-set splitting) and
delta-matroids (disjoint union / ground-set splitting; registered lazily by
the deltamatroids module).  On top of the product and coproduct sit the
projection onto primitive elements, the convolution logarithm of a
multiplicative invariant, the rank of the grade-n quotient by 4-term
relations, and the averaged ("umbral") invariant series with its rescaling.
"""

import importlib
import math
from fractions import Fraction

from . import diagrams as _diagrams
from . import elimination
from . import graphs as _graphs
from .poly import MPoly, TruncSeries, p_var, schur_one_part, series_log


class FamilyMismatch(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


class ZeroScalingConstant(ArithmeticError):
    pass


class Family:
    """Canonical basis family: how to canonicalize, grade, split and glue."""

    __slots__ = ("tag", "canonical", "grade", "atoms", "restrict", "multiply", "unit")

    def __init__(self, tag, canonical, grade, atoms, restrict, multiply, unit):
        self.tag = tag
        self.canonical = canonical
        self.grade = grade
        self.atoms = atoms
        self.restrict = restrict
        self.multiply = multiply
        self.unit = unit


def _graph_restrict(g, subset):
    return _graphs.canonical_form(g.induced(sorted(subset)))


def _graph_multiply(a, b):
    return _graphs.canonical_form(a.disjoint_union(b))


def _diagram_atoms(d):
    return d.chords()


def _diagram_restrict(d, subset):
    keep = set(subset)
    word = tuple(lab for lab in d.word if lab in keep)
    framing = {lab: d.framing[lab] for lab in keep}
    return _diagrams.ChordDiagram(word, framing).canonical()


def _diagram_multiply(a, b):
    ca, cb = a.canonical(), b.canonical()
    off = ca.n
    word = tuple(ca.word) + tuple(lab + off for lab in cb.word)
    framing = dict(ca.framing)
    for lab, f in cb.framing.items():
        framing[lab + off] = f
    return _diagrams.ChordDiagram(word, framing).canonical()


_FAMILIES = {
    "graphs": Family(
        "graphs",
        canonical=_graphs.canonical_form,
        grade=lambda g: g.n,
        atoms=lambda g: list(range(g.n)),
        restrict=_graph_restrict,
        multiply=_graph_multiply,
        unit=lambda: _graphs.FramedGraph.empty(0),
    ),
    "diagrams": Family(
        "diagrams",
        canonical=lambda d: d.canonical(),
        grade=lambda d: d.n,
        atoms=_diagram_atoms,
        restrict=_diagram_restrict,
        multiply=_diagram_multiply,
        unit=lambda: _diagrams.ChordDiagram(()),
    ),
}


def register_family(family: Family):
    _FAMILIES[family.tag] = family


def get_family(tag: str) -> Family:
    if tag not in _FAMILIES and tag == "deltamatroids":
        importlib.import_module("weightsys.deltamatroids")
    if tag not in _FAMILIES:
        raise FamilyMismatch("unknown family %r" % tag)
    return _FAMILIES[tag]


class LinComb:
    """Formal rational linear combination of canonical basis elements."""

    __slots__ = ("family", "terms")

    def __init__(self, family, terms=None):
        if isinstance(family, str):
            family = get_family(family)
        self.family = family
        self.terms = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    self.terms[k] = v

    @classmethod
    def basis(cls, family, element, coeff=1):
        if isinstance(family, str):
            family = get_family(family)
        return cls(family, {family.canonical(element): Fraction(coeff)})

    @classmethod
    def zero(cls, family):
        return cls(family)

    @classmethod
    def one(cls, family):
        if isinstance(family, str):
            family = get_family(family)
        return cls(family, {family.canonical(family.unit()): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def grades(self):
        return sorted({self.family.grade(k) for k in self.terms})

    def homogeneous_part(self, n):
        g = self.family.grade
        return LinComb(self.family, {k: v for k, v in self.terms.items() if g(k) == n})

    def _check(self, other):
        if self.family.tag != other.family.tag:
            raise FamilyMismatch("%s vs %s" % (self.family.tag, other.family.tag))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return LinComb(self.family, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, a):
        a = Fraction(a)
        if not a:
            return LinComb(self.family)
        return LinComb(self.family, {k: v * a for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, LinComb):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return (
            isinstance(other, LinComb)
            and self.family.tag == other.family.tag
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "LinComb(%s, 0)" % self.family.tag
        bits = ["%s*%r" % (v, k) for k, v in self.terms.items()]
        return "LinComb(%s, %s)" % (self.family.tag, " + ".join(bits))

    def apply(self, f):
        """Evaluate a linear extension of the basis function f."""
        total = None
        for k, v in self.terms.items():
            piece = f(k) * v
            total = piece if total is None else total + piece
        return 0 if total is None else total


class TensorLinComb:
    """Rational combination of ordered pairs of basis elements."""

    __slots__ = ("family", "terms")

    def __init__(self, family, terms=None):
        if isinstance(family, str):
            family = get_family(family)
        self.family = family
        self.terms = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    self.terms[k] = v

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return TensorLinComb(self.family, out)

    def scale(self, a):
        a = Fraction(a)
        if not a:
            return TensorLinComb(self.family)
        return TensorLinComb(self.family, {k: v * a for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (
            isinstance(other, TensorLinComb)
            and self.family.tag == other.family.tag
            and self.terms == other.terms
        )

    def is_zero(self):
        return not self.terms

    def is_cocommutative(self):
        return all(self.terms.get((b, a)) == v for (a, b), v in self.terms.items())

    def __repr__(self):
        bits = ["%s*%r(x)%r" % (v, a, b) for (a, b), v in self.terms.items()]
        return "TensorLinComb(%s)" % (" + ".join(bits) or "0")


def product(a: LinComb, b: LinComb) -> LinComb:
    a._check(b)
    fam = a.family
    out = {}
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            key = fam.multiply(x, y)
            nv = out.get(key, 0) + cx * cy
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return LinComb(fam, out)


def _subsets(items):
    n = len(items)
    for mask in range(1 << n):
        yield [items[i] for i in range(n) if (mask >> i) & 1], [
            items[i] for i in range(n) if not (mask >> i) & 1
        ]


def coproduct(a: LinComb) -> TensorLinComb:
    """Sum of x|_U (x) x|_W over ordered two-part splittings of the atoms."""
    fam = a.family
    out = TensorLinComb(fam)
    acc = out.terms
    for x, cx in a.terms.items():
        atoms = fam.atoms(x)
        for left, right in _subsets(atoms):
            xl = fam.restrict(x, left)
            if xl is None:
                continue
            xr = fam.restrict(x, right)
            if xr is None:
                continue
            key = (xl, xr)
            nv = acc.get(key, 0) + cx
            if nv:
                acc[key] = nv
            else:
                acc.pop(key, None)
    return TensorLinComb(fam, acc)


def set_partitions(items):
    """All partitions of items into unordered nonempty blocks (tuples)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + (first,)] + part[i + 1 :]
        yield part + [(first,)]


def primitive_projection(a: LinComb) -> LinComb:
    """Projection onto primitives along products of lower-grade elements.

    pi(x) = sum over unordered partitions P of the atom set of
    (-1)^(|P|-1) (|P|-1)! times the product of the restrictions of x to the
    blocks of P.  Grade-0 elements project to zero.
    """
    fam = a.family
    total = LinComb(fam)
    for x, cx in a.terms.items():
        atoms = fam.atoms(x)
        if not atoms:
            continue
        acc = {}
        for part in set_partitions(atoms):
            pieces = []
            ok = True
            for block in part:
                r = fam.restrict(x, block)
                if r is None:
                    ok = False
                    break
                pieces.append(r)
            if not ok:
                continue
            prod = pieces[0]
            for piece in pieces[1:]:
                prod = fam.multiply(prod, piece)
            sign = -1 if (len(part) - 1) % 2 else 1
            coeff = cx * sign * math.factorial(len(part) - 1)
            nv = acc.get(prod, 0) + coeff
            if nv:
                acc[prod] = nv
            else:
                acc.pop(prod, None)
        total = total + LinComb(fam, acc)
    return total


def convolution_log(f, x, family) -> object:
    """(log f)(x) for a multiplicative invariant f with f(unit) = 1.

    Expanded over unordered partitions of the atom set, the convolution
    logarithm evaluates to sum over partitions P of
    (-1)^(|P|-1) (|P|-1)! times the product of f on the restrictions; for
    multiplicative f this equals f applied to the primitive projection.
    """
    fam = get_family(family) if isinstance(family, str) else family
    x = fam.canonical(x)
    atoms = fam.atoms(x)
    if not atoms:
        return 0
    total = 0
    for part in set_partitions(atoms):
        prod = None
        ok = True
        for block in part:
            r = fam.restrict(x, block)
            if r is None:
                ok = False
                break
            val = f(r)
            prod = val if prod is None else prod * val
        if not ok:
            continue
        sign = -1 if (len(part) - 1) % 2 else 1
        term = prod * (sign * math.factorial(len(part) - 1))
        total = term if total == 0 else total + term
    return total


# -- 4-term quotient ranks ----------------------------------------------------

_SECOND_PRIME = 2147483629


def four_term_relation_rows(n: int, family: str = "diagrams"):
    """Sparse 4-term relation vectors over the grade-n canonical basis.

    Returns (basis, rows): basis is the list of canonical grade-n elements,
    rows are dictionaries mapping basis index to an integer coefficient for
    one relation D - D' - Dt + Dt' each.
    """
    rows = []
    if family == "diagrams":
        basis = _diagrams.enumerate_diagrams(n, bound=max(n, 7))
        index = {d.canonical_key(): i for i, d in enumerate(basis)}
        for d in basis:
            for _a, _b, _p, quad in _diagrams.all_four_term_quadruples(d):
                row = {}
                for diag, s in zip(quad, (1, -1, -1, 1)):
                    i = index[diag.canonical_key()]
                    nv = row.get(i, 0) + s
                    if nv:
                        row[i] = nv
                    else:
                        row.pop(i, None)
                if row:
                    rows.append(row)
    elif family == "graphs":
        pairs = _graphs.enumerate_graphs(n, bound=max(n, 7))
        basis = [g for g, _aut in pairs]
        index = {g.key(): i for i, g in enumerate(basis)}
        for g in basis:
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    quad = _graphs.graph_4t_quadruple(g, a, b)
                    row = {}
                    for h, s in zip(quad, (1, -1, -1, 1)):
                        i = index[_graphs.canonical_form(h).key()]
                        nv = row.get(i, 0) + s
                        if nv:
                            row[i] = nv
                        else:
                            row.pop(i, None)
                    if row:
                        rows.append(row)
    else:
        raise FamilyMismatch("4T quotient ranks cover diagrams and graphs only")
    return basis, rows


def quotient_rank_4t(n: int, family: str = "diagrams", prime=None, bound: int = 7) -> int:
    """Dimension of grade-n basis elements modulo the span of 4T relations.

    With prime=None the elimination runs over the default 31-bit prime and is
    confirmed over a second prime; pass an explicit prime (or 0 for exact
    rational arithmetic) to select a single run.
    """
    if n > bound:
        raise BoundExceeded("grade %d above configured bound %d" % (n, bound))
    basis, rows = four_term_relation_rows(n, family)
    if prime is None:
        r1 = elimination.sparse_rank(rows, 2147483647)
        r2 = elimination.sparse_rank(rows, _SECOND_PRIME)
        assert r1 == r2, "prime eliminations disagree"
        rank = r1
    elif prime == 0:
        rank = elimination.sparse_rank(rows, None)
    else:
        rank = elimination.sparse_rank(rows, prime)
    return len(basis) - rank


# -- umbral averaging ---------------------------------------------------------

def _q_coefficient(poly: MPoly, n: int) -> Fraction:
    """Coefficient of the lone monomial q_n."""
    target = (("q%d" % n, 1),)
    return poly.terms.get(target, Fraction(0))


def umbral_average(invariant, max_n: int) -> TruncSeries:
    """Average an umbral graph invariant over all graphs, then rescale.

    The grade-n coefficient accumulates I_G / |Aut(G)| over all graphs with n
    vertices; the connected graphs determine the scaling constants
    i_n = n! * sum [q_n] I_G / |Aut(G)|, and the returned series has
    q_n replaced by 2^(n(n-1)/2) (n-1)!/i_n * p_n.  The bookkeeping variable
    z records the grading.
    """
    assert max_n >= 0
    coeffs = [MPoly.const(1)]
    scaling = {}
    for n in range(1, max_n + 1):
        layer = MPoly()
        i_n = Fraction(0)
        for g, aut in _graphs.enumerate_graphs(n, bound=max(n, 7)):
            value = invariant(g)
            layer = layer + value / aut
            if g.is_connected():
                i_n += _q_coefficient(value, n) / aut
        i_n *= math.factorial(n)
        if i_n == 0:
            raise ZeroScalingConstant("i_%d vanishes" % n)
        scaling[n] = i_n
        coeffs.append(layer)
    mapping = {}
    for n in range(1, max_n + 1):
        factor = Fraction(2 ** (n * (n - 1) // 2) * math.factorial(n - 1), 1) / scaling[n]
        mapping["q%d" % n] = p_var(n) * factor
    out = [c.substitute(mapping) for c in coeffs]
    return TruncSeries(out, max_n + 1, var="z")


def umbral_scaling_constants(invariant, max_n: int):
    """The constants i_n = n! * sum over connected graphs of [q_n]I/|Aut|."""
    out = {}
    for n in range(1, max_n + 1):
        i_n = Fraction(0)
        for g, aut in _graphs.enumerate_graphs(n, bound=max(n, 7)):
            if g.is_connected():
                i_n += _q_coefficient(invariant(g), n) / aut
        out[n] = i_n * math.factorial(n)
    return out


def schur_reference_series(max_n: int) -> TruncSeries:
    """1 + sum over n of 2^(n(n-1)/2) s_n, graded by the variable z."""
    coeffs = [MPoly.const(1)]
    for n in range(1, max_n + 1):
        coeffs.append(schur_one_part(n) * (2 ** (n * (n - 1) // 2)))
    return TruncSeries(coeffs, max_n + 1, var="z")


# -- KP residual --------------------------------------------------------------

def _p_weight(mono) -> int:
    w = 0
    for v, e in mono:
        assert v.startswith("p")
        w += int(v[1:]) * e
    return w


def weight_truncate(poly: MPoly, max_weight: int) -> MPoly:
    """Drop monomials in the p-variables of total weight above max_weight."""
    return MPoly({m: c for m, c in poly.terms.items() if _p_weight(m) <= max_weight})


def kp_residual(series: TruncSeries, max_weight: int) -> MPoly:
    """Residual of the first KP equation for F = log(series).

    The series must be graded by p-weight (coefficient n of z^n homogeneous
    of weight n) and known through weight max_weight + 4; the residual
    d2F/dp2^2 - d2F/dp1 dp3 + 1/2 (d2F/dp1^2)^2 + 1/12 d4F/dp1^4 is returned
    truncated to total weight max_weight.
    """
    assert series.order >= max_weight + 5, "series too short for the requested weight"
    logs = series_log(series)
    F = MPoly()
    for c in logs.coeffs:
        F = F + c
    f11 = F.derivative("p1").derivative("p1")
    term1 = F.derivative("p2").derivative("p2")
    term2 = F.derivative("p1").derivative("p3")
    term3 = f11 * f11 / 2
    term4 = f11.derivative("p1").derivative("p1") / 12
    residual = term1 - term2 + term3 + term4
    return weight_truncate(residual, max_weight)
