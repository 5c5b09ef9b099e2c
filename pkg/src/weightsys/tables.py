"""Reference value tables and their golden-file verification.

Each table renders a deterministic text block from freshly computed values
(polynomials print in the canonical graded-lexicographic term order), and the
checked-in golden files under weightsys/golden/ must match byte for byte.
The golden values were certified against independent oracles when frozen:
the sl2 engine against the Verma-module oracle, the gl/sl tables against
the matrix oracle and the gl_from_sl reconstruction, and the partial
fractions against the bipartite recurrence.
"""

from fractions import Fraction
from importlib import resources

from .diagrams import complete_diagram
from .lie_ws import (
    C,
    c5n_closed_form,
    c5n_series,
    complete_bipartite_series,
    sl2_primitive_complete_values,
    w_gl_diagram,
    w_sl2,
    w_sl_diagram,
)

# Partial-fraction data for the bipartite series: G_m is a sum of terms
# coef / (1 - ratio*t).  Certified equal to complete_bipartite_series.
GM_PARTIAL_FRACTIONS = {
    0: ((Fraction(1), C),),
    1: ((C, C - 1),),
    2: (
        (C**2 / 3, C),
        (C / 2, C - 1),
        (C * (4 * C - 3) / 6, C - 3),
    ),
    3: (
        (C**2 / 6, C),
        (C * (3 * C**2 - 2 * C + 2) / 5, C - 1),
        (C * (4 * C - 3) / 3, C - 3),
        (C * (C - 2) * (4 * C - 3) / 10, C - 6),
    ),
}


def _render_sl2_complete():
    lines = ["w_sl2 on complete diagrams K_n (all chords mutually crossing)"]
    for n in range(7):
        lines.append("K_%d: %s" % (n, w_sl2(complete_diagram(n))))
    return "\n".join(lines) + "\n"


def _render_gl_complete():
    lines = ["w_gl on complete diagrams K_n (universal, C_k Casimir variables)"]
    for n in range(2, 6):
        lines.append("K_%d: %s" % (n, w_gl_diagram(complete_diagram(n))))
    return "\n".join(lines) + "\n"


def _render_sl_complete():
    lines = ["w_sl on complete diagrams K_n (traceless Casimir variables Ct_k)"]
    for n in range(2, 8):
        lines.append("K_%d: %s" % (n, w_sl_diagram(complete_diagram(n))))
    return "\n".join(lines) + "\n"


def _render_gm_partial_fractions():
    order = 6
    lines = [
        "bipartite series G_m as partial fractions; geo(r) = 1/(1 - r*t)",
    ]
    for m in range(4):
        terms = GM_PARTIAL_FRACTIONS[m]
        total = None
        for coef, ratio in terms:
            from .poly import geometric_series

            piece = coef * geometric_series(ratio, order)
            total = piece if total is None else total + piece
        reference = complete_bipartite_series(m, order)
        for k in range(order + 1):
            assert (total.coeffs[k] - reference.coeffs[k]).is_zero(), (m, k)
        body = " + ".join("(%s) geo(%s)" % (coef, ratio) for coef, ratio in terms)
        lines.append("G_%d = %s" % (m, body))
    return "\n".join(lines) + "\n"


def _render_egf_primitive():
    lines = ["w_sl2 on primitive parts of complete diagrams (EGF logarithm)"]
    for n, value in enumerate(sl2_primitive_complete_values(6), start=1):
        lines.append("n=%d: %s" % (n, value))
    return "\n".join(lines) + "\n"


def _render_c5n():
    order = 6
    series = c5n_series(order)
    closed = c5n_closed_form(order)
    for k in range(order + 1):
        assert (series.coeffs[k] - closed.coeffs[k]).is_zero(), k
    lines = ["series for the five-cycle with n dominating vertices (both forms agree)"]
    for k in range(order + 1):
        lines.append("t^%d: %s" % (k, series.coeffs[k]))
    return "\n".join(lines) + "\n"


TABLES = {
    "sl2-complete": _render_sl2_complete,
    "gl-complete": _render_gl_complete,
    "sl-complete": _render_sl_complete,
    "gm-partial-fractions": _render_gm_partial_fractions,
    "egf-primitive": _render_egf_primitive,
    "c5n": _render_c5n,
}


def table_names():
    return sorted(TABLES)


def render_table(name: str) -> str:
    return TABLES[name]()


def golden_text(name: str) -> str:
    ref = resources.files("weightsys") / "golden" / ("%s.txt" % name)
    return ref.read_text()


def verify_tables(names=None):
    """Render each table and compare with its golden file byte for byte.

    Returns a list of (name, ok) pairs.
    """
    results = []
    for name in names or table_names():
        results.append((name, render_table(name) == golden_text(name)))
    return results
