"""Sparse rank computation over a prime field or the rationals.

Rows of a matrix are stored as dictionaries mapping column index to a
nonzero entry.  Rank is computed by elimination with a cheap Markowitz-style
pivot rule (smallest column first, sparsest row inside it) to limit fill-in,
so that the large 4-term relation matrices stay tractable.
"""

import heapq
from fractions import Fraction


def _prepare_rows(rows, p):
    work = []
    for row in rows:
        if p is None:
            d = {c: Fraction(v) for c, v in row.items() if v}
        else:
            d = {}
            for c, v in row.items():
                v %= p
                if v:
                    d[c] = v
        if d:
            work.append(d)
    return work


def sparse_rank(rows, p=None):
    """Rank of the matrix whose rows are {column: value} dictionaries.

    p: prime modulus, or None for exact rational arithmetic.
    """
    work = _prepare_rows(rows, p)
    col_rows = {}
    for i, row in enumerate(work):
        for c in row:
            col_rows.setdefault(c, set()).add(i)
    heap = [(len(s), c) for c, s in col_rows.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        cnt, c = heapq.heappop(heap)
        live = col_rows.get(c)
        if not live:
            continue
        if len(live) != cnt:
            heapq.heappush(heap, (len(live), c))
            continue
        r = min(live, key=lambda i: len(work[i]))
        piv = work[r]
        pv = piv[c]
        if p is None:
            inv = Fraction(1) / pv
            piv = {cc: vv * inv for cc, vv in piv.items()}
        else:
            inv = pow(pv, p - 2, p)
            piv = {cc: (vv * inv) % p for cc, vv in piv.items()}
        for cc in piv:
            col_rows[cc].discard(r)
        work[r] = None
        rank += 1
        targets = list(col_rows.get(c, ()))
        for i in targets:
            row = work[i]
            f = row[c]
            touched = []
            for cc, vv in piv.items():
                if p is None:
                    nv = row.get(cc, 0) - f * vv
                else:
                    nv = (row.get(cc, 0) - f * vv) % p
                if nv:
                    if cc not in row:
                        col_rows[cc].add(i)
                        touched.append(cc)
                    row[cc] = nv
                else:
                    if cc in row:
                        del row[cc]
                        col_rows[cc].discard(i)
                        touched.append(cc)
            if not row:
                work[i] = None
            for cc in touched:
                live2 = col_rows.get(cc)
                if live2:
                    heapq.heappush(heap, (len(live2), cc))
        col_rows.pop(c, None)
    return rank


def write_matrix_market(rows, n_cols, path):
    """Write integer relation rows as a Matrix Market coordinate file."""
    entries = []
    for i, row in enumerate(rows):
        for c, v in sorted(row.items()):
            if v:
                entries.append((i + 1, c + 1, v))
    with open(path, "w") as fh:
        fh.write("%%MatrixMarket matrix coordinate integer general\n")
        fh.write("%d %d %d\n" % (len(rows), n_cols, len(entries)))
        for i, j, v in entries:
            fh.write("%d %d %d\n" % (i, j, v))
