"""Command-line front end.

Exit status is 0 on success, 1 when a verification finds an inequality and 2
on any input error (bad document, unknown name, size guard).
"""

import argparse
import sys
from fractions import Fraction

from . import io
from ._guard import SqsymError, set_max_vertices
from .algebra import SqsExpr, TPoly, dimension, product
from .arrangement import chambers, verify_zaslavsky
from .chromatic import CHROMATIC_METHODS, chromatic, is_invariant_symmetric, specialize_count, theorem_terms
from .fundamental import FundamentalIndex, f_product, parse_findex, reduce_to_minimal
from .graphs import DirectedSignedGraph, build_named

OK, UNEQUAL, BAD_INPUT = 0, 1, 2


class Fail(Exception):
    pass


def _graph(source, directed=True):
    doc = io.load_document(source)
    if directed and doc.kind != "directed-graph":
        raise Fail(f"{source}: expected a directed signed graph (edges with tau_u/tau_v), got {doc.kind}")
    if doc.kind not in ("graph", "directed-graph"):
        raise Fail(f"{source}: expected a signed graph, got {doc.kind}")
    return doc.payload


def _operand(text):
    """An ``FundamentalIndex``, an ``SqsExpr`` or a ``TPoly`` from text or a document."""
    s = text.strip()
    if s.startswith("F["):
        return parse_findex(s)
    if s.startswith(("M[", "-", "0")) or (s[:1].isdigit() and "M[" in s):
        return io.parse_expr(s)
    if s.startswith("t^"):
        return io.parse_tpoly(s)
    doc = io.load_document(text)
    if doc.kind != "expression":
        raise Fail(f"expected an expression, got {doc.kind}")
    x = doc.payload
    if isinstance(x, dict):
        if len(x) != 1 or next(iter(x.values())) != 1:
            raise Fail("F documents used as operands must hold a single index with coefficient 1")
        return next(iter(x))
    return x


def _emit(args, text, obj):
    sys.stdout.write(io.dumps(obj) if args.format == "json" else text + "\n")


# ------------------------------------------------------------- commands


def cmd_chromatic(args):
    x = chromatic(_graph(args.graph), args.method)
    _emit(args, io.render_tpoly(x), io.tpoly_to_json(x))
    return OK


def cmd_symmetry(args):
    g = _graph(args.graph)
    sym = is_invariant_symmetric(chromatic(g, args.method))
    top = len(g.edges)
    _emit(args, f"signed-symmetric: {str(sym).lower()} (t-degrees 0..{top})", {"signed_symmetric": sym, "t_degrees": [0, top]})
    return OK


def cmd_chambers(args):
    g = _graph(args.graph, directed=False)
    cs = chambers(g)
    directed = isinstance(g, DirectedSignedGraph)
    lines, recs = [], []
    for c in cs:
        word = " ".join(str(x) for x in c.name)
        asc = f" asc={c.asc}" if directed else ""
        lines.append(f"{word}\tsize={len(c.regions)}{asc}\torientation={c.fingerprint()}")
        rec = {"region": list(c.name), "size": len(c.regions), "orientation": c.fingerprint()}
        if directed:
            rec["asc"] = c.asc
        recs.append(rec)
    _emit(args, "\n".join(lines), {"chambers": recs})
    return OK


def cmd_verify_theorem(args):
    g = _graph(args.graph)
    results = {name: fn(g) for name, fn in CHROMATIC_METHODS.items()}
    ref = results["oracle"]
    equal = all(x == ref for x in results.values())
    degrees = len(ref.degrees())
    terms = ref.n_terms()
    if equal:
        text = f"oracle == chambers == theorem: OK ({degrees} t-degrees, {terms} M-terms)"
    else:
        diff = [n for n, x in results.items() if x != ref]
        text = f"oracle == chambers == theorem: FAILED (differs: {', '.join(diff)})"
    if args.show_terms:
        fs = sorted(theorem_terms(g).items(), key=lambda t: (t[0][0], t[0][1].sort_key()))
        text += "\n" + "\n".join(f"t^{e} {c}*{fi}" for (e, fi), c in fs)
    _emit(args, text, {"equal": equal, "t_degrees": degrees, "m_terms": terms, **{n: io.tpoly_to_json(x) for n, x in results.items()}})
    return OK if equal else UNEQUAL


def cmd_verify_zaslavsky(args):
    rep = verify_zaslavsky(_graph(args.graph, directed=False))
    text = f"chambers={rep.chambers} acyclic={rep.acyclic} consistent={str(rep.region_map_consistent).lower()}"
    _emit(args, text, rep._asdict())
    return OK if rep.ok else UNEQUAL


def cmd_dims(args):
    if args.max < 0:
        raise Fail("--max must be nonnegative")
    dims = [dimension(n) for n in range(args.max + 1)]
    _emit(args, " ".join(map(str, dims)), {"dimensions": dims})
    return OK


def cmd_product(args):
    a, b = _operand(args.left), _operand(args.right)
    if isinstance(a, FundamentalIndex) and isinstance(b, FundamentalIndex):
        pi = tuple(int(x) for x in args.pi.split(",")) if args.pi else None
        pi2 = tuple(int(x) for x in args.pi2.split(",")) if args.pi2 else None
        res = f_product(a, b, pi, pi2)
        text = io.render_fcomb(res.terms)
        obj = {**io.fcomb_to_json(res.terms), "pi": list(res.pi), "pi2": list(res.pi2)}
        _emit(args, text, obj)
        return OK
    if isinstance(a, FundamentalIndex) or isinstance(b, FundamentalIndex):
        raise Fail("product of an F index needs another F index")
    if type(a) is not type(b):
        a, b = (TPoly.constant(x) if isinstance(x, SqsExpr) else x for x in (a, b))
    x = product(a, b)
    if isinstance(x, TPoly):
        _emit(args, io.render_tpoly(x), io.tpoly_to_json(x))
    else:
        _emit(args, io.render_expr(x), io.expr_to_json(x))
    return OK


def cmd_reduce(args):
    fi = _operand(args.index)
    if not isinstance(fi, FundamentalIndex):
        raise Fail("reduce needs a fundamental index such as 'F[d=2; S={}; eps=+-]'")
    comb = reduce_to_minimal(fi)
    _emit(args, io.render_fcomb(comb), io.fcomb_to_json(comb))
    return OK


def cmd_gen(args):
    g = build_named(args.name, *args.params)
    sys.stdout.write(io.dumps(io.graph_to_json(g)))
    return OK


def cmd_count(args):
    if args.m < 0:
        raise Fail("--m must be nonnegative")
    try:
        t = Fraction(args.t)
    except (ValueError, ZeroDivisionError):
        raise Fail(f"--t is not a rational: {args.t!r}") from None
    value = specialize_count(chromatic(_graph(args.graph), args.method), args.m, t)
    text = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    _emit(args, text, {"count": text})
    return OK


# ------------------------------------------------------------------ parser


def build_parser():
    p = argparse.ArgumentParser(prog="sqsym", description="Chromatic invariants of directed signed graphs and the algebra SQSym.")
    p.add_argument("--max-vertices", type=int, default=None, help="size guard for exhaustive enumerations (default 6)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)
    methods = sorted(CHROMATIC_METHODS)

    s = sub.add_parser("chromatic", help="the invariant X(x;t)")
    s.add_argument("graph")
    s.add_argument("--method", choices=methods, default="oracle")
    s.set_defaults(fn=cmd_chromatic)

    s = sub.add_parser("symmetry", help="whether every t-coefficient is signed symmetric")
    s.add_argument("graph")
    s.add_argument("--method", choices=methods, default="oracle")
    s.set_defaults(fn=cmd_symmetry)

    s = sub.add_parser("chambers", help="chambers of the graph's arrangement")
    s.add_argument("graph")
    s.set_defaults(fn=cmd_chambers)

    s = sub.add_parser("verify-theorem", help="compare the three computations of X")
    s.add_argument("graph")
    s.add_argument("--show-terms", action="store_true", help="also list the fundamental expansion")
    s.set_defaults(fn=cmd_verify_theorem)

    s = sub.add_parser("verify-zaslavsky", help="chambers versus acyclic orientations")
    s.add_argument("graph")
    s.set_defaults(fn=cmd_verify_zaslavsky)

    s = sub.add_parser("dims", help="dimensions of the graded pieces")
    s.add_argument("--max", type=int, required=True)
    s.set_defaults(fn=cmd_dims)

    s = sub.add_parser("product", help="product of two expressions or two F indices")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--pi", help="descent representative of the left F index, e.g. 2,1")
    s.add_argument("--pi2", help="descent representative of the right F index")
    s.set_defaults(fn=cmd_product)

    s = sub.add_parser("reduce", help="rewrite an F index over minimal chains")
    s.add_argument("index")
    s.set_defaults(fn=cmd_reduce)

    s = sub.add_parser("gen", help="print a named graph as JSON")
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("count", help="count proper colorings with colors in -m..m, weighted by t")
    s.add_argument("graph")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--t", default="1")
    s.add_argument("--method", choices=methods, default="oracle")
    s.set_defaults(fn=cmd_count)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.max_vertices is not None:
        set_max_vertices(args.max_vertices)
    try:
        return args.fn(args)
    except (SqsymError, Fail) as exc:
        print(f"sqsym: error: {exc}", file=sys.stderr)
        return BAD_INPUT
    finally:
        if args.max_vertices is not None:
            set_max_vertices(None)


if __name__ == "__main__":
    sys.exit(main())
