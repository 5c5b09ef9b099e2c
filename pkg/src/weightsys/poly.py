"""Sparse multivariate polynomials and truncated power series over Q.

Everything downstream (graph invariants, Lie-algebra weight systems, the
Hopf-algebra machinery) works with polynomials in a handful of named
commuting variables -- c, x, t, N, the power sums p_1, p_2, ..., the
Casimirs C_1, C_2, ... and so on.  Exact arithmetic is non-negotiable, so
coefficients are fractions.Fraction and a polynomial is a dict mapping
monomials to coefficients.

A monomial is a tuple of (variable, exponent) pairs sorted by variable
name, with zero exponents dropped; the empty tuple is the constant
monomial.  This keeps hashing cheap and the representation canonical.

Truncated power series in a single distinguished variable (with MPoly
coefficients) are layered on top; they carry exp/log, reciprocals, and the
continued-fraction expansion used by the sl(2) generating functions.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by variable name

ONE_MONO: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    """Merge two sorted exponent vectors."""
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _as_fraction(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, int):
        return Fraction(a)
    raise TypeError("expected int or Fraction, got %r" % (a,))


class MPoly:
    """Immutable sparse polynomial with Fraction coefficients.

    Supports +, -, *, ** with other polynomials and with plain integers /
    Fractions.  Construct via MPoly.const, MPoly.variable, or arithmetic.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict monomial -> Fraction; zero coefficients are dropped.
        if terms is None:
            terms = {}
        self.terms = {m: c for m, c in terms.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, a) -> "MPoly":
        a = _as_fraction(a)
        return cls({ONE_MONO: a}) if a else cls()

    @classmethod
    def variable(cls, name: str, exp: int = 1) -> "MPoly":
        assert exp >= 0
        if exp == 0:
            return cls.const(1)
        return cls({((name, exp),): Fraction(1)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(ONE_MONO, Fraction(0))

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(_mono_degree(m) for m in self.terms)

    def degree_in(self, var: str) -> int:
        d = -1
        for m in self.terms:
            for v, e in m:
                if v == var:
                    d = max(d, e)
                    break
            else:
                d = max(d, 0)
        return d

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def coefficient(self, var: str, exp: int) -> "MPoly":
        """The coefficient of var**exp, as a polynomial in the other variables."""
        out = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for v, k in m:
                if v == var:
                    e = k
                else:
                    rest.append((v, k))
            if e == exp:
                out[tuple(rest)] = out.get(tuple(rest), Fraction(0)) + c
        return MPoly(out)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        p = MPoly.__new__(MPoly)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly.__new__(MPoly)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self.terms) > len(other.terms):
            a, b = self, other
        else:
            a, b = other, self
        out = {}
        for m2, c2 in b.terms.items():
            for m1, c1 in a.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        p = MPoly.__new__(MPoly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        assert isinstance(n, int) and n >= 0
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        # Division by a nonzero constant only.
        other = _as_fraction(other) if not isinstance(other, MPoly) else other
        if isinstance(other, MPoly):
            assert other.is_constant() and not other.is_zero()
            other = other.constant_term()
        inv = Fraction(1) / other
        p = MPoly.__new__(MPoly)
        p.terms = {m: c * inv for m, c in self.terms.items()}
        return p

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, mapping) -> "MPoly":
        """Substitute polynomials (or numbers) for variables.

        mapping: dict var -> MPoly | int | Fraction.  Variables not in the
        mapping are left alone.
        """
        subs = {v: (p if isinstance(p, MPoly) else MPoly.const(p)) for v, p in mapping.items()}
        result = MPoly()
        pow_cache = {}
        for m, c in self.terms.items():
            term = MPoly.const(c)
            for v, e in m:
                if v in subs:
                    key = (v, e)
                    if key not in pow_cache:
                        pow_cache[key] = subs[v] ** e
                    term = term * pow_cache[key]
                else:
                    term = term * MPoly.variable(v, e)
            result = result + term
        return result

    def eval(self, values) -> Fraction:
        """Evaluate at a full assignment var -> int/Fraction."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for var, e in m:
                v *= _as_fraction(values[var]) ** e
            total += v
        return total

    def derivative(self, var: str) -> "MPoly":
        out = {}
        for m, c in self.terms.items():
            for i, (v, e) in enumerate(m):
                if v == var:
                    nm = m[:i] + (((v, e - 1),) if e > 1 else ()) + m[i + 1:]
                    out[nm] = out.get(nm, Fraction(0)) + c * e
                    break
        return MPoly(out)

    # -- presentation ------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=lambda mc: (-_mono_degree(mc[0]), mc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in m:
                factors.append(v if e == 1 else "%s^%d" % (v, e))
            body = "*".join(factors)
            if not body:
                chunk = str(abs(c))
            elif abs(c) == 1:
                chunk = body
            else:
                chunk = "%s*%s" % (abs(c), body)
            sign = "-" if c < 0 else "+"
            parts.append((sign, chunk))
        sign0, chunk0 = parts[0]
        text = ("-" if sign0 == "-" else "") + chunk0
        for sign, chunk in parts[1:]:
            text += " %s %s" % (sign, chunk)
        return text

    def __repr__(self):
        return "MPoly(%s)" % self

    def to_json(self):
        """Canonical JSON form: list of {"coeff": "p/q", "mono": {var: exp}}."""
        items = sorted(self.terms.items(), key=lambda mc: (_mono_degree(mc[0]), mc[0]))
        return [
            {"coeff": str(Fraction(c)), "mono": {v: e for v, e in m}}
            for m, c in items
        ]

    @classmethod
    def from_json(cls, data) -> "MPoly":
        out = {}
        for item in data:
            m = tuple(sorted(item["mono"].items()))
            out[m] = out.get(m, Fraction(0)) + Fraction(item["coeff"])
        return cls(out)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _coerce(other):
    if isinstance(other, MPoly):
        return other
    if isinstance(other, (int, Fraction)):
        return MPoly.const(other)
    return NotImplemented


ZERO = MPoly()
ONE = MPoly.const(1)


def variable(name: str) -> MPoly:
    return MPoly.variable(name)


def q_var(k: int) -> MPoly:
    return MPoly.variable("q%d" % k)


def p_var(k: int) -> MPoly:
    return MPoly.variable("p%d" % k)


def casimir_var(k: int) -> MPoly:
    """The k-th gl Casimir C_k as a polynomial variable."""
    return MPoly.variable("C%d" % k)


def casimir_sl_var(k: int) -> MPoly:
    """The k-th sl Casimir (written Ct_k) as a polynomial variable."""
    return MPoly.variable("Ct%d" % k)


def mul_add_substitute(poly: MPoly, mapping, scale=1, shift=0) -> MPoly:
    """scale * poly[mapping] + shift, all in one call.

    Convenience for the common "rescale a polynomial after a change of
    variables" step; mapping as in MPoly.substitute.
    """
    return MPoly.const(scale) * poly.substitute(mapping) + MPoly.const(shift)


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class TruncSeries:
    """Power series in one variable, truncated at a fixed order.

    coeffs[k] is the MPoly coefficient of var**k; len(coeffs) == order + 1.
    The truncation variable must not occur inside the coefficients.
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, coeffs, order: int, var: str = "t"):
        coeffs = list(coeffs)[: order + 1]
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        self.coeffs = [c if isinstance(c, MPoly) else MPoly.const(c) for c in coeffs]
        self.order = order
        self.var = var

    @classmethod
    def const(cls, a, order: int, var: str = "t") -> "TruncSeries":
        return cls([a if isinstance(a, MPoly) else MPoly.const(a)], order, var)

    @classmethod
    def gen(cls, order: int, var: str = "t") -> "TruncSeries":
        return cls([ZERO, ONE], order, var)

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.var == other.var
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        other = self._coerce(other)
        return TruncSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.var
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(out, n, self.var)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            assert other.var == self.var and other.order == self.order
            return other
        return TruncSeries.const(other, self.order, self.var)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; constant term must be a nonzero rational."""
        c0 = self.coeffs[0]
        assert c0.is_constant() and not c0.is_zero(), "series not invertible"
        inv0 = Fraction(1) / c0.constant_term()
        out = [MPoly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-acc * inv0)
        return TruncSeries(out, self.order, self.var)

    def truncate(self, order: int) -> "TruncSeries":
        assert order <= self.order
        return TruncSeries(self.coeffs[: order + 1], order, self.var)

    def as_poly(self) -> MPoly:
        t = MPoly.variable(self.var)
        total = ZERO
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                total = total + c * t ** k
        return total

    def __str__(self):
        body = str(self.as_poly())
        return "%s + O(%s^%d)" % (body, self.var, self.order + 1)

    __repr__ = __str__


def rational_to_series(num, den, order: int, var: str = "t") -> TruncSeries:
    """Expand the rational function num/den as a series up to the given order.

    num and den are TruncSeries or lists of MPoly coefficients; den must
    have invertible (nonzero rational) constant term.
    """
    if not isinstance(num, TruncSeries):
        num = TruncSeries(num, order, var)
    if not isinstance(den, TruncSeries):
        den = TruncSeries(den, order, var)
    return num * den.inverse()


def geometric_series(ratio: MPoly, order: int, var: str = "t") -> TruncSeries:
    """1/(1 - ratio*var) truncated at the given order."""
    coeffs = [ONE]
    for _ in range(order):
        coeffs.append(coeffs[-1] * ratio)
    return TruncSeries(coeffs, order, var)


def continued_fraction_series(a, b, order: int, var: str = "t") -> TruncSeries:
    """Expand the continued fraction

        1 / (1 + a(0)*t + b(1)*t^2 / (1 + a(1)*t + b(2)*t^2 / (1 + ...)))

    as a truncated series.  a and b are callables giving the level
    coefficients (MPoly or numbers).  Levels beyond depth
    ceil(order/2) + 1 cannot influence the first `order` coefficients, so
    the fraction is cut there.
    """
    depth = math.ceil(order / 2) + 1
    t = TruncSeries.gen(order, var)
    t2 = t * t

    def cell(a_k):
        a_k = a_k if isinstance(a_k, MPoly) else MPoly.const(a_k)
        return TruncSeries.const(1, order, var) + TruncSeries.const(a_k, order, var) * t

    tail = cell(a(depth - 1))
    for level in range(depth - 2, -1, -1):
        b_next = b(level + 1)
        b_next = b_next if isinstance(b_next, MPoly) else MPoly.const(b_next)
        tail = cell(a(level)) + TruncSeries.const(b_next, order, var) * t2 * tail.inverse()
    return tail.inverse()


def series_exp(s: TruncSeries) -> TruncSeries:
    """exp of a series with zero constant term."""
    assert s.coeffs[0].is_zero(), "exp needs vanishing constant term"
    n = s.order
    # f = exp(s)  =>  f' = s' f ;  n f_n = sum_{k>=1} k s_k f_{n-k}
    out = [ONE] + [ZERO] * n
    for m in range(1, n + 1):
        acc = ZERO
        for k in range(1, m + 1):
            if not s.coeffs[k].is_zero():
                acc = acc + MPoly.const(k) * s.coeffs[k] * out[m - k]
        out[m] = acc / Fraction(m)
    return TruncSeries(out, n, s.var)


def series_log(s: TruncSeries) -> TruncSeries:
    """log of a series with constant term 1."""
    assert s.coeffs[0] == ONE, "log needs constant term 1"
    n = s.order
    # g = log(s) => s g' = s' ; m s_0 g_m = m s_m - sum_{k=1}^{m-1} k g_k s_{m-k}
    out = [ZERO] * (n + 1)
    for m in range(1, n + 1):
        acc = MPoly.const(m) * s.coeffs[m]
        for k in range(1, m):
            if not out[k].is_zero() and not s.coeffs[m - k].is_zero():
                acc = acc - MPoly.const(k) * out[k] * s.coeffs[m - k]
        out[m] = acc / Fraction(m)
    return TruncSeries(out, n, s.var)


def series_exp_log(s: TruncSeries, mode: str) -> TruncSeries:
    """Dispatcher: mode is "exp" or "log"."""
    if mode == "exp":
        return series_exp(s)
    if mode == "log":
        return series_log(s)
    raise ValueError("mode must be 'exp' or 'log'")


def schur_one_part(n: int) -> MPoly:
    """The one-part Schur polynomial s_n in terms of power sums p_1..p_n.

    Defined by  sum_n s_n z^n = exp(sum_k p_k z^k / k); e.g.
    s_2 = p_1^2/2 + p_2/2 and s_3 = p_1^3/6 + p_1 p_2/2 + p_3/3.
    """
    assert n >= 0
    if n == 0:
        return ONE
    inner = TruncSeries(
        [ZERO] + [p_var(k) / Fraction(k) for k in range(1, n + 1)], n, "z"
    )
    return series_exp(inner).coeffs[n]
