"""Exact sl2 weight-system oracle via the Verma-module transfer method.

A chord inserts the invariant tensor of the bilinear form B = 2 tr (trace in
the defining representation): with basis e, h, f the tensor is
(e(x)f + f(x)e)/2 + h(x)h/4, and the Casimir acts on the highest-weight
module of weight lam as c = (lam^2 + 2 lam)/4.  The product of all chord
letters around the circle is central, so its scalar on the highest-weight
vector of the Verma module determines the weight-system value; the scalar is
a polynomial in lam that descends to a polynomial in c.

This evaluation uses no relations beyond the module action itself, which
makes it an independent oracle for the reduction-based sl2 engine.
"""

from fractions import Fraction

from .poly import MPoly

LAM = MPoly.variable("lam")

# chord tensor: (letter at first end, letter at second end, weight)
CHORD_PAIRS = (
    ("e", "f", Fraction(1, 2)),
    ("f", "e", Fraction(1, 2)),
    ("h", "h", Fraction(1, 4)),
)


def _apply_letter(vec, letter):
    """Act by e, h or f on a vector {m: coeff} over the basis f^m v."""
    out = {}
    for m, coeff in vec.items():
        if letter == "f":
            key, factor = m + 1, MPoly.const(1)
        elif letter == "h":
            key, factor = m, LAM - 2 * m
        else:
            if m == 0:
                continue
            key, factor = m - 1, (LAM - (m - 1)) * m
        add = coeff * factor
        if key in out:
            out[key] = out[key] + add
        else:
            out[key] = add
    return {m: c for m, c in out.items() if not c.is_zero()}


def _scalar_on_highest_vector(word):
    """Scalar of the chord-word product acting on the highest-weight vector."""
    first_pos = {}
    for pos, lab in enumerate(word):
        if lab not in first_pos:
            first_pos[lab] = pos
    # states: pending-letter assignment for open chords -> vector
    states = {(): {0: MPoly.const(1)}}
    for pos in range(len(word) - 1, -1, -1):
        lab = word[pos]
        new_states = {}
        if pos != first_pos[lab]:
            # second end: choose the chord's tensor component
            for pending, vec in states.items():
                for left, right, weight in CHORD_PAIRS:
                    nv = _apply_letter(vec, right)
                    if not nv:
                        continue
                    nv = {m: c * weight for m, c in nv.items()}
                    key = pending + ((lab, left),)
                    if key in new_states:
                        tgt = new_states[key]
                        for m, c in nv.items():
                            tgt[m] = tgt.get(m, MPoly.const(0)) + c
                    else:
                        new_states[key] = nv
        else:
            for pending, vec in states.items():
                letter = dict(pending)[lab]
                nv = _apply_letter(vec, letter)
                key = tuple(kv for kv in pending if kv[0] != lab)
                if not nv:
                    continue
                if key in new_states:
                    tgt = new_states[key]
                    for m, c in nv.items():
                        tgt[m] = tgt.get(m, MPoly.const(0)) + c
                else:
                    new_states[key] = dict(nv)
        states = {
            k: {m: c for m, c in v.items() if not c.is_zero()}
            for k, v in new_states.items()
        }
        states = {k: v for k, v in states.items() if v}
    total = MPoly.const(0)
    for pending, vec in states.items():
        assert pending == ()
        for m, c in vec.items():
            # centrality: the result must be a multiple of the highest vector
            assert m == 0, "non-scalar action of a complete chord word"
            total = total + c
    return total


def lambda_to_casimir(poly: MPoly) -> MPoly:
    """Rewrite a polynomial in lam as a polynomial in c = (lam^2+2lam)/4."""
    c = MPoly.variable("c")
    mu = (LAM * LAM + 2 * LAM) / 4
    out = MPoly.const(0)
    work = poly
    while not work.is_zero():
        d = work.degree_in("lam")
        if d == 0:
            return out + work
        assert d % 2 == 0, "odd lambda-degree cannot come from the Casimir"
        k = d // 2
        lead = work.coefficient("lam", d)
        assert lead.is_constant()
        coeff = lead.constant_term() * 4**k
        out = out + MPoly.const(coeff) * c**k
        work = work - MPoly.const(coeff) * mu**k
    return out


def w_sl2_verma(diagram) -> MPoly:
    """sl2 weight-system value of a zero-framed chord diagram, in c."""
    assert not any(diagram.framing.values()), "sl2 values need zero framing"
    scalar = _scalar_on_highest_vector(tuple(diagram.word))
    return lambda_to_casimir(scalar)
