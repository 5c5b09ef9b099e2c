"""Chord diagrams, shares, and their Vassiliev moves.

A chord diagram of order n is a circle with 2n marked points paired into n
chords, considered up to orientation-preserving diffeomorphism -- i.e. a
cyclic word in which each of n labels occurs exactly twice, up to rotation
and relabeling.  Reflections are NOT quotiented.

Chords optionally carry framings in F2.  A share is a pair of linear words
(two disjoint arcs); shares are joined end-to-end to build the standard
diagram families K_n and K_{m,n}.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graphs import (
    BoundExceeded,
    DirectedIntersectionGraph,
    FramedGraph,
    canonical_form,
    first_move,
    second_move,
)


class MalformedWord(ValueError):
    pass


class NotNeighboring(ValueError):
    pass


def _chord_positions(word):
    pos = {}
    for i, lab in enumerate(word):
        pos.setdefault(lab, []).append(i)
    for lab, ps in pos.items():
        if len(ps) != 2:
            raise MalformedWord("label %r occurs %d times" % (lab, len(ps)))
    return pos


class ChordDiagram:
    """A cyclic word with every label twice, plus an F2 framing per chord.

    The word is stored as given; equality and hashing go through the
    canonical form (least rotation after relabeling chords by first
    occurrence, framings carried along and compared lexicographically).
    """

    __slots__ = ("word", "framing", "_ckey")

    def __init__(self, word, framing=None):
        self.word = tuple(word)
        pos = _chord_positions(self.word)
        if framing is None:
            framing = {lab: 0 for lab in pos}
        elif not isinstance(framing, dict):
            # sequence aligned with sorted labels
            labs = sorted(pos)
            framing = {lab: f & 1 for lab, f in zip(labs, framing)}
        else:
            framing = {lab: framing.get(lab, 0) & 1 for lab in pos}
        if set(framing) != set(pos):
            raise MalformedWord("framing keys do not match chord labels")
        self.framing = framing
        self._ckey = None

    @property
    def n(self):
        return len(self.word) // 2

    def chords(self):
        """Labels in order of first occurrence."""
        seen = []
        for lab in self.word:
            if lab not in seen:
                seen.append(lab)
        return seen

    def rotate(self, k):
        w = self.word
        k %= len(w) if w else 1
        return ChordDiagram(w[k:] + w[:k], dict(self.framing))

    # -- canonical form ------------------------------------------------------

    def canonical_key(self):
        if self._ckey is not None:
            return self._ckey
        w = self.word
        L = len(w)
        if L == 0:
            self._ckey = ((), ())
            return self._ckey
        best = None
        for r in range(L):
            relab = {}
            out = []
            for i in range(L):
                lab = w[(r + i) % L]
                if lab not in relab:
                    relab[lab] = len(relab) + 1
                out.append(relab[lab])
            fr = tuple(self.framing[lab] for lab in sorted(relab, key=relab.get))
            cand = (tuple(out), fr)
            if best is None or cand < best:
                best = cand
        self._ckey = best
        return best

    def canonical(self) -> "ChordDiagram":
        word, fr = self.canonical_key()
        return ChordDiagram(word, {i + 1: f for i, f in enumerate(fr)})

    def __eq__(self, other):
        return isinstance(other, ChordDiagram) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        if any(self.framing.values()):
            return "ChordDiagram(%r, framing=%r)" % (list(self.word), self.framing)
        return "ChordDiagram(%r)" % (list(self.word),)

    # -- intersection structure ----------------------------------------------

    def crossing(self, a, b):
        """1 if chords a and b interleave around the circle."""
        pos = _chord_positions(self.word)
        (a1, a2) = pos[a]
        inside = sum(1 for p in pos[b] if a1 < p < a2)
        return inside & 1

    def intersection_graph(self) -> FramedGraph:
        labs = self.chords()
        pos = _chord_positions(self.word)
        n = len(labs)
        rows = [0] * n
        for i in range(n):
            a1, a2 = pos[labs[i]]
            for j in range(i + 1, n):
                if (sum(1 for p in pos[labs[j]] if a1 < p < a2) & 1):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            if self.framing[labs[i]]:
                rows[i] |= 1 << i
        return FramedGraph(n, rows)

    # -- JSON ------------------------------------------------------------------

    def to_json(self):
        labs = sorted(_chord_positions(self.word))
        return {
            "n": self.n,
            "word": list(self.word),
            "framing": [self.framing[lab] for lab in labs],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["word"], data.get("framing"))


def canonicalize(d: ChordDiagram) -> ChordDiagram:
    """Canonical representative: least rotation + first-occurrence labels."""
    return d.canonical()


def intersection_graph(d: ChordDiagram) -> FramedGraph:
    return d.intersection_graph()


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _enumerate_words(n):
    """Canonical words of all diagrams with n chords (zero framing)."""
    if n == 0:
        return ((),)
    seen = set()
    word = [0] * (2 * n)

    def backtrack(pos, next_label):
        if pos == 2 * n:
            seen.add(ChordDiagram(tuple(word)).canonical_key()[0])
            return
        if word[pos]:
            backtrack(pos + 1, next_label)
            return
        # open a new chord here; its partner goes in any later free slot
        word[pos] = next_label
        for q in range(pos + 1, 2 * n):
            if not word[q]:
                word[q] = next_label
                backtrack(pos + 1, next_label + 1)
                word[q] = 0
        word[pos] = 0

    backtrack(0, 1)
    return tuple(sorted(seen))


def enumerate_diagrams(n: int, framed: bool = False, bound: int = 7):
    """One ChordDiagram per canonical class with n chords.

    With framed=True, all chord framings in F2^n are included, again one
    representative per canonical class (rotational symmetry may identify
    framings).
    """
    if n > bound:
        raise BoundExceeded("chord count %d exceeds bound %d" % (n, bound))
    words = _enumerate_words(n)
    if not framed:
        return [ChordDiagram(w) for w in words]
    out = {}
    for w in words:
        for bits in itertools.product((0, 1), repeat=n):
            d = ChordDiagram(w, {i + 1: b for i, b in enumerate(bits)})
            out.setdefault(d.canonical_key(), d)
    return [out[k] for k in sorted(out)]


# ---------------------------------------------------------------------------
# Vassiliev moves and 4T quadruples
# ---------------------------------------------------------------------------


def _neighbor_configs(word, a, b):
    """Positions p such that word[p] is an end of a and word[p+1] an end of
    b, or vice versa (cyclically).  Each is one 4T configuration; the
    sliding chord is always a."""
    L = len(word)
    out = []
    for p in range(L):
        x, y = word[p], word[(p + 1) % L]
        if {x, y} == {a, b} and a != b:
            out.append(p)
    return out


def _first_move_word(word, p):
    L = len(word)
    w = list(word)
    w[p], w[(p + 1) % L] = w[(p + 1) % L], w[p]
    return tuple(w)


def diagram_first_move(d: ChordDiagram, p: int) -> ChordDiagram:
    """Exchange the neighboring ends at positions p, p+1."""
    return ChordDiagram(_first_move_word(d.word, p), dict(d.framing))


def diagram_second_move(d: ChordDiagram, a, b, p: int) -> ChordDiagram:
    """Slide the end of a that is adjacent to an end of b (at configuration
    p) to the far end of b.

    The moving end lands on the same side of chord b when b is untwisted;
    a framing-1 chord b flips the side and adds its framing to a's (the
    end travels along b's half-twisted band).
    """
    L = len(d.word)
    w = list(d.word)
    x, y = w[p], w[(p + 1) % L]
    if {x, y} != {a, b}:
        raise NotNeighboring("no (a,b) ends at positions %d,%d" % (p, (p + 1) % L))
    if x == a:
        pa, before_near = p, True          # ...a b... : a-end just before b's end
    else:
        pa, before_near = (p + 1) % L, False  # ...b a... : a-end just after b's end
    # locate b's far end
    b_pos = [i for i, lab in enumerate(w) if lab == b]
    near = (p + 1) % L if x == a else p
    far = b_pos[0] if b_pos[1] == near else b_pos[1]
    # remove the moving end
    del w[pa]
    far2 = far if far < pa else far - 1
    # before the near end <-> "after the far end" keeps the same side of b
    insert_after_far = before_near
    if d.framing[b]:
        insert_after_far = not insert_after_far
    if insert_after_far:
        w.insert(far2 + 1, a)
    else:
        w.insert(far2, a)
    framing = dict(d.framing)
    framing[a] ^= framing[b]
    return ChordDiagram(tuple(w), framing)


def four_term_configurations(d: ChordDiagram, a, b):
    """All neighboring-end configurations for the ordered pair (a, b)."""
    return _neighbor_configs(d.word, a, b)


def four_term_quadruple(d: ChordDiagram, a, b, config: int | None = None):
    """(C, C'_ab, C~_ab, C~'_ab) at the given configuration.

    config is a position p as produced by four_term_configurations; if
    omitted, the first configuration is used.  Any weight system f
    satisfies f(C) - f(C') - f(C~) + f(C~') = 0.
    """
    configs = four_term_configurations(d, a, b)
    if not configs:
        raise NotNeighboring("chords %r and %r have no neighboring ends" % (a, b))
    p = configs[0] if config is None else config
    if p not in configs:
        raise NotNeighboring("position %d is not an (a,b) configuration" % p)
    c1 = d
    c2 = diagram_first_move(d, p)
    # the exchange keeps the two ends adjacent, so p is still an (a,b)
    # configuration of c2 and the moves compose cleanly
    c3 = diagram_second_move(d, a, b, p)
    c4 = diagram_second_move(c2, a, b, p)
    return c1, c2, c3, c4


def all_four_term_quadruples(d: ChordDiagram):
    """Every (a, b, config, quadruple) for the diagram."""
    labs = d.chords()
    out = []
    for a in labs:
        for b in labs:
            if a == b:
                continue
            for p in four_term_configurations(d, a, b):
                out.append((a, b, p, four_term_quadruple(d, a, b, p)))
    return out


# ---------------------------------------------------------------------------
# Shares and standard diagrams
# ---------------------------------------------------------------------------


class Share:
    """An ordered pair of arcs carrying chord ends; chords may live inside
    one arc or span both."""

    __slots__ = ("first", "second")

    def __init__(self, first, second):
        self.first = tuple(first)
        self.second = tuple(second)
        _chord_positions(self.first + self.second)  # validates

    @property
    def n(self):
        return len(self.first + self.second) // 2

    def cross_chords(self):
        """Labels with one end on each arc (these see every joined chord)."""
        return sorted(
            lab
            for lab in set(self.first + self.second)
            if (self.first.count(lab) == 1)
        )

    def relabeled(self, offset):
        relab = {}
        for lab in self.first + self.second:
            if lab not in relab:
                relab[lab] = len(relab) + 1 + offset
        return Share(
            [relab[lab] for lab in self.first], [relab[lab] for lab in self.second]
        )

    def closure(self) -> ChordDiagram:
        return ChordDiagram(self.first + self.second)

    def __repr__(self):
        return "Share(%r, %r)" % (list(self.first), list(self.second))


def join_shares(s1: Share, s2: Share) -> ChordDiagram:
    """Glue arc ends in circular order: s1 arc 1, s2 arc 1, s1 arc 2, s2 arc 2."""
    a = s1.relabeled(0)
    b = s2.relabeled(a.n)
    return ChordDiagram(a.first + b.first + a.second + b.second)


def share_power_x(m: int) -> Share:
    """m parallel chords, each with one end on each arc (the share x^m)."""
    labs = list(range(1, m + 1))
    return Share(labs, list(reversed(labs)))


def complete_diagram(n: int) -> ChordDiagram:
    """K_n: n mutually crossing chords (word 1..n 1..n)."""
    labs = list(range(1, n + 1))
    return ChordDiagram(labs + labs)


def complete_bipartite_diagram(m: int, n: int) -> ChordDiagram:
    """K_{m,n}: m parallel horizontal chords crossed by n parallel vertical."""
    return join_shares(share_power_x(m), share_power_x(n))


def build_standard(kind: str, *params):
    """Dispatcher for the standard families.

    kind: "K_n" (params: n), "K_mn" (params: m, n),
          "share_power_x" (params: m), "join" (params: two Shares).
    """
    if kind == "K_n":
        return complete_diagram(*params)
    if kind == "K_mn":
        return complete_bipartite_diagram(*params)
    if kind == "share_power_x":
        return share_power_x(*params)
    if kind == "join":
        return join_shares(*params)
    raise ValueError("unknown standard kind %r" % kind)


# ---------------------------------------------------------------------------
# Realizability
# ---------------------------------------------------------------------------


def realizable_as_intersection_graph(g: FramedGraph, bound: int = 6):
    """(realizable, witnesses): all canonical diagrams with |V| chords whose
    intersection graph is isomorphic to g.  Zero framing only."""
    if g.n > bound:
        raise BoundExceeded("vertex count %d exceeds bound %d" % (g.n, bound))
    assert not any(g.framing_vector()), "realizability test expects zero framing"
    target = canonical_form(g).key()
    witnesses = [
        d
        for d in enumerate_diagrams(g.n)
        if canonical_form(d.intersection_graph()).key() == target
    ]
    return bool(witnesses), witnesses


def directed_intersection_graph(d: ChordDiagram, cut: int = 0) -> DirectedIntersectionGraph:
    """Orient each intersection edge from the chord whose first end comes
    earlier after cutting the circle just before position `cut`."""
    word = d.word[cut:] + d.word[:cut]
    pos = {}
    for i, lab in enumerate(word):
        pos.setdefault(lab, []).append(i)
    labs = sorted(pos)
    n = len(labs)
    skew = [[0] * n for _ in range(n)]
    for i in range(n):
        a1, a2 = pos[labs[i]]
        for j in range(i + 1, n):
            b1, b2 = pos[labs[j]]
            if (a1 < b1 < a2 < b2) or (b1 < a1 < b2 < a2):
                if a1 < b1:
                    skew[i][j], skew[j][i] = 1, -1
                else:
                    skew[i][j], skew[j][i] = -1, 1
    return DirectedIntersectionGraph(n, skew)


# ---------------------------------------------------------------------------
# Permutations (chord diagrams are fixed-point-free involutions)
# ---------------------------------------------------------------------------


class Permutation:
    """A bijection of {1..m}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)
        assert sorted(self.images) == list(range(1, len(self.images) + 1))

    @property
    def m(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%r)" % (list(self.images),)

    @classmethod
    def from_cycles(cls, m, cycles):
        images = list(range(1, m + 1))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    def cycles(self):
        seen = set()
        out = []
        for s in range(1, self.m + 1):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            x = self(s)
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


def diagram_involution(d: ChordDiagram) -> Permutation:
    """The fixed-point-free involution pairing the 2n endpoints."""
    pos = _chord_positions(d.word)
    images = [0] * len(d.word)
    for p1, p2 in pos.values():
        images[p1] = p2 + 1
        images[p2] = p1 + 1
    return Permutation(images)
