"""Command-line surface: compute, enumerate, verify, tabulate.

Exit codes: 0 success, 1 verification failure (a 4-term combination did not
vanish, a golden table mismatched, an acceptance criterion failed), 2 usage
errors, 3 bound violations.  JSON/CSV results go to stdout, progress notes to
stderr.  The environment variable WEIGHTSYS_THREADS caps sweep parallelism
(default: logical cores); results are deterministic regardless of the value.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import acceptance as acceptance_mod
from . import tables as tables_mod
from .deltamatroids import (
    DM_DZ22_WEIGHTS,
    DM_PLAIN_WEIGHTS,
    DeltaMatroid,
    dm_4t_quadruple,
    dm_from_graph,
    dm_from_ribbon,
    interlace_dm,
    is_delta_matroid,
    skew_char_dm,
    stanley_dm,
    transition_dm,
    twist,
)
from .diagrams import (
    ChordDiagram,
    all_four_term_quadruples,
    enumerate_diagrams,
    intersection_graph,
)
from .graphs import BoundExceeded, FramedGraph, enumerate_graphs, graph_4t_quadruple, canonical_form
from .hopf import (
    four_term_relation_rows,
    kp_residual,
    quotient_rank_4t,
    schur_reference_series,
    umbral_average,
)
from .invariants import (
    abel,
    chromatic,
    interlace_graph,
    skew_characteristic,
    stanley,
    stanley_to_weighted,
    transition_chord,
    weighted_chromatic,
)
from .lie_ws import (
    c5n_series,
    complete_bipartite_series,
    complete_graph_cf_series,
    sl2_primitive_complete_values,
    w_gl_diagram,
    w_sl2,
    w_sl_diagram,
)
from .poly import MPoly, TruncSeries
from .ribbon import RibbonGraph
from . import elimination


class UsageError(ValueError):
    """Bad input or flag combination; reported on stderr with exit code 2."""


class RunConfig:
    """Resolved run parameters shared by the subcommand handlers."""

    __slots__ = ("threads", "fmt", "stretch")

    def __init__(self, args):
        env = os.environ.get("WEIGHTSYS_THREADS", "")
        self.threads = int(env) if env.isdigit() and int(env) > 0 else (os.cpu_count() or 1)
        self.fmt = getattr(args, "format", "json")
        self.stretch = bool(getattr(args, "stretch", False))


# -- input loading -----------------------------------------------------------


def _load_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise UsageError("%s is not valid JSON: %s" % (path, exc))


def _as_object(data):
    """Recognize the owning-module JSON schema by its keys."""
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    if "word" in data:
        return ChordDiagram.from_json(data)
    if "adj" in data:
        return FramedGraph.from_json(data)
    if "vertices" in data and "edges" in data:
        return RibbonGraph.from_json(data)
    if "ground" in data and "feasible" in data:
        return DeltaMatroid.from_json(data)
    raise UsageError("unrecognized input schema (keys %s)" % sorted(data))


def _want_graph(obj):
    if isinstance(obj, FramedGraph):
        return obj
    if isinstance(obj, ChordDiagram):
        return intersection_graph(obj)
    raise UsageError("this invariant expects a graph or a chord diagram")


# -- output ------------------------------------------------------------------


def _print_poly(poly, fmt, out):
    if fmt == "pretty":
        out.write(str(poly) + "\n")
    elif fmt == "csv":
        terms = poly.sorted_terms()
        header = []
        for m, _c in terms:
            header.append("*".join("%s^%d" % (v, e) if e > 1 else v for v, e in m) or "1")
        out.write(",".join(header) + "\n")
        out.write(",".join(str(c) for _m, c in terms) + "\n")
    else:
        out.write(poly.dumps() + "\n")


def _print_series(series, fmt, out):
    if fmt == "pretty":
        out.write(str(series) + "\n")
    elif fmt == "csv":
        monos = {}
        for c in series.coeffs:
            for m, _v in c.terms.items():
                monos[m] = True
        order = sorted(monos, key=lambda m: (-sum(e for _v, e in m), m))
        header = ["k"] + [
            "*".join("%s^%d" % (v, e) if e > 1 else v for v, e in m) or "1" for m in order
        ]
        out.write(",".join(header) + "\n")
        for k, c in enumerate(series.coeffs):
            row = [str(k)] + [str(c.terms.get(m, Fraction(0))) for m in order]
            out.write(",".join(row) + "\n")
    else:
        body = {
            "var": series.var,
            "order": series.order,
            "coeffs": [c.to_json() for c in series.coeffs],
        }
        out.write(json.dumps(body) + "\n")


# -- subcommands -------------------------------------------------------------


def _cmd_enumerate(args, config, out):
    for d in enumerate_diagrams(args.chords, framed=args.framed, bound=max(args.chords, 7)):
        if args.framed:
            out.write(json.dumps(d.to_json()) + "\n")
        else:
            out.write(json.dumps(list(d.word)) + "\n")
    return 0


_GRAPH_INVARIANTS = {
    "chromatic": chromatic,
    "stanley": stanley,
    "weighted-chromatic": weighted_chromatic,
    "abel": abel,
    "interlace": interlace_graph,
    "skew-char": skew_characteristic,
}


def _cmd_invariant(args, config, out):
    obj = _as_object(_load_json(args.input))
    if args.name == "transition":
        if not isinstance(obj, ChordDiagram):
            raise UsageError("the transition polynomial expects a chord diagram")
        poly = transition_chord(obj)
    else:
        poly = _GRAPH_INVARIANTS[args.name](_want_graph(obj))
    _print_poly(poly, config.fmt, out)
    return 0


def _cmd_lie(args, config, out):
    obj = _as_object(_load_json(args.input))
    if not isinstance(obj, ChordDiagram):
        raise UsageError("lie expects a chord diagram JSON file")
    func = {"sl2": w_sl2, "gl": w_gl_diagram, "sl": w_sl_diagram}[args.algebra]
    _print_poly(func(obj), config.fmt, out)
    return 0


def _cmd_series(args, config, out):
    if args.which == "cf-sl2":
        series = complete_graph_cf_series(args.order)
    elif args.which == "Gm":
        if args.m is None:
            raise UsageError("--which Gm requires --m")
        series = complete_bipartite_series(args.m, args.order)
    elif args.which == "c5n":
        series = c5n_series(args.order)
    else:  # egf-primitive-Kn
        values = sl2_primitive_complete_values(args.order)
        series = TruncSeries([MPoly()] + values, args.order)
    _print_series(series, config.fmt, out)
    return 0


def _cmd_dims(args, config, out):
    n = args.chords
    bound = 7
    if n > bound:
        if not config.stretch:
            raise BoundExceeded(
                "grade %d above bound %d; pass --stretch to run anyway" % (n, bound)
            )
        basis_est = {8: 3113, 9: 46376}.get(n, 4 ** n)
        sys.stderr.write(
            "stretch run: grade %d, roughly %d basis elements; sparse rows may need "
            "on the order of %d MB\n" % (n, basis_est, max(1, basis_est * n * 40 // 10**6))
        )
        sys.stderr.flush()
        bound = n
    if args.export_matrix:
        basis, rows = four_term_relation_rows(n, args.family)
        elimination.write_matrix_market(rows, len(basis), args.export_matrix)
        sys.stderr.write(
            "wrote %d relation rows over %d basis elements to %s\n"
            % (len(rows), len(basis), args.export_matrix)
        )
    prime = 0 if args.rational else None
    out.write("%d\n" % quotient_rank_4t(n, args.family, prime=prime, bound=bound))
    return 0


def _dm_weights(name):
    return DM_DZ22_WEIGHTS if name == "signed" else DM_PLAIN_WEIGHTS


def _cmd_dm(args, config, out):
    if args.op == "4t-verify":
        return _dm_4t_verify(args, config, out)
    obj = _as_object(_load_json(args.input))
    if args.op == "check":
        if not isinstance(obj, DeltaMatroid):
            raise UsageError("check expects a delta-matroid JSON file")
        body = {
            "is_delta_matroid": is_delta_matroid(obj),
            "even": obj.is_even(),
            "nondegenerate": obj.is_nondegenerate(),
        }
        out.write(json.dumps(body) + "\n")
        return 0
    if args.op == "from-graph":
        if not isinstance(obj, FramedGraph):
            raise UsageError("from-graph expects a graph JSON file")
        out.write(json.dumps(dm_from_graph(obj).to_json()) + "\n")
        return 0
    if args.op == "from-ribbon":
        if not isinstance(obj, RibbonGraph):
            raise UsageError("from-ribbon expects a ribbon-graph JSON file")
        out.write(json.dumps(dm_from_ribbon(obj).to_json()) + "\n")
        return 0
    if not isinstance(obj, DeltaMatroid):
        raise UsageError("op %s expects a delta-matroid JSON file" % args.op)
    if args.op == "twist":
        if args.subset is None:
            raise UsageError("twist requires --subset")
        labels = [s for s in args.subset.split(",") if s != ""]
        ground_by_name = {str(x): x for x in obj.ground}
        try:
            subset = {ground_by_name[s] for s in labels}
        except KeyError as exc:
            raise UsageError("subset label %s not in the ground set" % exc)
        out.write(json.dumps(twist(obj, subset).to_json()) + "\n")
        return 0
    if args.op == "interlace":
        poly = interlace_dm(obj)
    elif args.op == "transition":
        poly = transition_dm(obj, _dm_weights(args.weights))
    else:  # skew-char
        poly = skew_char_dm(obj)
    _print_poly(poly, config.fmt, out)
    return 0


def _dm_4t_verify(args, config, out):
    weights = _dm_weights(args.weights)
    systems = {
        "interlace": interlace_dm,
        "transition": lambda d: transition_dm(d, weights),
        "skew-char": skew_char_dm,
        "stanley": stanley_dm,
    }
    nmax = args.max_vertices
    failures = 0
    checked = 0
    for n in range(2, nmax + 1):
        for g, _aut in enumerate_graphs(n):
            d = dm_from_graph(g)
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    quad = dm_4t_quadruple(d, a, b)
                    for name, func in systems.items():
                        v = [func(x) for x in quad]
                        if not (v[0] - v[1] - v[2] + v[3]).is_zero():
                            failures += 1
                            sys.stderr.write(
                                "nonzero %s on rows=%s (a=%d, b=%d)\n" % (name, g.rows, a, b)
                            )
                    checked += 1
    out.write(
        "dm 4t: %d quadruples x %d invariants, %d nonzero\n"
        % (checked, len(systems), failures)
    )
    return 1 if failures else 0


_DIAGRAM_SYSTEMS = {
    "sl2": w_sl2,
    "gl": w_gl_diagram,
    "sl": w_sl_diagram,
    "transition": transition_chord,
}

_GRAPH_SYSTEMS = {
    "chromatic": chromatic,
    "stanley": stanley,
    "weighted-chromatic": weighted_chromatic,
    "interlace": interlace_graph,
    "skew-char": skew_characteristic,
}

_DM_SYSTEMS = {
    "dm-interlace": interlace_dm,
    "dm-transition": lambda d: transition_dm(d, DM_DZ22_WEIGHTS),
    "dm-skew-char": skew_char_dm,
    "dm-stanley": stanley_dm,
}


def _verify_chunk(quads, func):
    bad = 0
    for quad in quads:
        v = [func(x) for x in quad]
        if not (v[0] - v[1] - v[2] + v[3]).is_zero():
            bad += 1
    return len(quads), bad


def _cmd_verify_4t(args, config, out):
    system = args.system
    work = []
    if system in _DIAGRAM_SYSTEMS:
        func = _DIAGRAM_SYSTEMS[system]
        nmax = args.max_chords
        for n in range(2, nmax + 1):
            for d in enumerate_diagrams(n):
                for _a, _b, _p, quad in all_four_term_quadruples(d):
                    work.append(quad)
    elif system in _GRAPH_SYSTEMS:
        raw = _GRAPH_SYSTEMS[system]
        memo = {}

        def func(g):
            key = g.key()
            if key not in memo:
                memo[key] = raw(g)
            return memo[key]

        nmax = args.max_vertices
        for n in range(2, nmax + 1):
            for g, _aut in enumerate_graphs(n):
                for a in range(n):
                    for b in range(n):
                        if a != b:
                            work.append(
                                tuple(canonical_form(h) for h in graph_4t_quadruple(g, a, b))
                            )
    elif system in _DM_SYSTEMS:
        func = _DM_SYSTEMS[system]
        nmax = args.max_vertices
        for n in range(2, nmax + 1):
            for g, _aut in enumerate_graphs(n):
                d = dm_from_graph(g)
                for a in range(n):
                    for b in range(n):
                        if a != b:
                            work.append(dm_4t_quadruple(d, a, b))
    else:
        raise UsageError("unknown system %r" % system)

    sys.stderr.write("%s: %d quadruples\n" % (system, len(work)))
    chunk = max(1, len(work) // (4 * config.threads) or 1)
    chunks = [work[i : i + chunk] for i in range(0, len(work), chunk)]
    total = 0
    bad = 0
    if config.threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            for n_done, n_bad in pool.map(lambda c: _verify_chunk(c, func), chunks):
                total += n_done
                bad += n_bad
    else:
        for c in chunks:
            n_done, n_bad = _verify_chunk(c, func)
            total += n_done
            bad += n_bad
    out.write("%s: %d quadruples, %d nonzero\n" % (system, total, bad))
    return 1 if bad else 0


_UMBRAL = {
    "abel": abel,
    "weighted-chromatic": weighted_chromatic,
    "stanley": lambda g: stanley_to_weighted(stanley(g)),
}


def _cmd_kp_check(args, config, out):
    invariant = _UMBRAL[args.invariant]
    max_n = args.max_n
    avg = umbral_average(invariant, max_n)
    ref = schur_reference_series(max_n)
    mismatch = [k for k in range(max_n + 1) if not (avg.coeffs[k] - ref.coeffs[k]).is_zero()]
    residual = kp_residual(schur_reference_series(max_n + 4), max_n)
    ok = not mismatch and residual.is_zero()
    body = {
        "invariant": args.invariant,
        "max_n": max_n,
        "matches_one_part_schur": not mismatch,
        "mismatched_grades": mismatch,
        "kp_residual_zero": residual.is_zero(),
    }
    out.write(json.dumps(body) + "\n")
    return 0 if ok else 1


def _cmd_tables(args, config, out):
    names = args.name or tables_mod.table_names()
    if args.show:
        for name in names:
            out.write(tables_mod.render_table(name))
        return 0
    failures = 0
    for name, ok in tables_mod.verify_tables(names):
        out.write("table %-22s %s\n" % (name, "OK" if ok else "MISMATCH"))
        if not ok:
            failures += 1
    return 1 if failures else 0


def _cmd_acceptance(args, config, out):
    indices = None
    if args.only:
        try:
            indices = {int(x) for x in args.only.split(",")}
        except ValueError:
            raise UsageError("--only expects a comma-separated list of criterion numbers")
    records = acceptance_mod.run_all(indices=indices, stream=out)
    return 0 if all(passed for _i, _n, passed, _d, _t in records) else 1


# -- parser ------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="weightsys",
        description="Weight systems on chord diagrams, graph invariants, and delta-matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream canonical chord diagrams, one per line")
    p.add_argument("--chords", type=int, required=True)
    p.add_argument("--framed", action="store_true")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("invariant", help="evaluate a graph/diagram invariant")
    p.add_argument("--name", required=True, choices=sorted(_GRAPH_INVARIANTS) + ["transition"])
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.set_defaults(handler=_cmd_invariant)

    p = sub.add_parser("lie", help="evaluate a Lie-algebra weight system on a diagram")
    p.add_argument("--algebra", required=True, choices=("sl2", "gl", "sl"))
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p.set_defaults(handler=_cmd_lie)

    p = sub.add_parser("series", help="generating series of sl2 values")
    p.add_argument(
        "--which", required=True, choices=("cf-sl2", "Gm", "c5n", "egf-primitive-Kn")
    )
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("dims", help="dimension of grade-n elements modulo 4-term relations")
    p.add_argument("--family", choices=("diagrams", "graphs"), default="diagrams")
    p.add_argument("--chords", type=int, required=True)
    p.add_argument("--stretch", action="store_true")
    p.add_argument("--rational", action="store_true", help="exact elimination (small grades)")
    p.add_argument("--export-matrix", metavar="PATH", help="write relations in Matrix Market form")
    p.set_defaults(handler=_cmd_dims)

    p = sub.add_parser("dm", help="delta-matroid constructions and invariants")
    p.add_argument(
        "--op",
        required=True,
        choices=(
            "check",
            "from-graph",
            "from-ribbon",
            "twist",
            "interlace",
            "transition",
            "skew-char",
            "4t-verify",
        ),
    )
    p.add_argument("--input")
    p.add_argument("--subset", help="comma-separated ground labels (twist)")
    p.add_argument(
        "--weights",
        choices=("plain", "signed"),
        default="signed",
        help="transition weights; 'signed' negates the orienting-state weight and satisfies 4T",
    )
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.set_defaults(handler=_cmd_dm)

    p = sub.add_parser("verify-4t", help="verify 4-term vanishing for one system")
    p.add_argument(
        "--system",
        required=True,
        choices=sorted(_DIAGRAM_SYSTEMS) + sorted(_GRAPH_SYSTEMS) + sorted(_DM_SYSTEMS),
    )
    p.add_argument("--max-chords", type=int, default=4)
    p.add_argument("--max-vertices", type=int, default=5)
    p.set_defaults(handler=_cmd_verify_4t)

    p = sub.add_parser("kp-check", help="umbral averaging against one-part Schur series")
    p.add_argument("--invariant", choices=sorted(_UMBRAL), default="abel")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(handler=_cmd_kp_check)

    p = sub.add_parser("tables", help="verify value tables against checked-in goldens")
    p.add_argument("--name", action="append", choices=tables_mod.table_names())
    p.add_argument("--show", action="store_true", help="print the rendered tables instead")
    p.set_defaults(handler=_cmd_tables)

    p = sub.add_parser("acceptance", help="run the acceptance criteria")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(handler=_cmd_acceptance)

    return parser


def run(argv=None, out=None):
    """Parse argv and dispatch; returns the process exit code."""
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    config = RunConfig(args)
    try:
        return args.handler(args, config, out)
    except UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except BoundExceeded as exc:
        sys.stderr.write("bound exceeded: %s\n" % exc)
        return 3


def main():
    return run()


if __name__ == "__main__":
    sys.exit(run())
