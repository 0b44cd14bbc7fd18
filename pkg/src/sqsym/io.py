"""Text and JSON forms of graphs, posets, expressions and fundamental indices.

Text rendering is deterministic: terms follow the ``MonomialIndex`` order and
t-degrees increase.  ``parse_expr`` / ``parse_tpoly`` invert the renderers.
"""

import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, NamedTuple

from ._guard import InvalidInput
from .algebra import MonomialIndex, SqsExpr, TPoly
from .fundamental import FundamentalIndex
from .graphs import DirectedSignedGraph, SignedGraph, sign_char
from .posets import SignedPoset

# ------------------------------------------------------------------- text


def render_monomial(m):
    cols = ",".join(f"({a},{b})" for a, b in m.lam)
    return f"M[{m.k};{cols}]"


def _render_coef(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_terms(items, render_key):
    parts = []
    for key, c in items:
        body = render_key(key)
        mag = abs(c)
        text = body if mag == 1 else f"{_render_coef(mag)}*{body}"
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {text}")
    return " ".join(parts) if parts else "0"


def render_expr(f):
    return _render_terms(f.items(), render_monomial)


def render_tpoly(x):
    if not x:
        return "0"
    return " + ".join(f"t^{e}*( {render_expr(c)} )" for e, c in x.items())


def render_fcomb(comb):
    """Text of ``{FundamentalIndex: coef}`` in index order."""
    items = sorted(comb.items(), key=lambda t: t[0].sort_key())
    return _render_terms([(fi, Fraction(c)) for fi, c in items if c], str)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?M\[\s*(\d+)\s*;((?:\s*\(\s*\d+\s*,\s*\d+\s*\)\s*,?)*)\]\s*")
_COL = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_expr(text):
    text = text.strip()
    if text == "0":
        return SqsExpr()
    pos, terms, first = 0, {}, True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or (not first and not m.group(1)):
            raise InvalidInput(f"cannot parse expression at column {pos + 1}: {text[pos:pos + 20]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2) or 1) * sign
        key = MonomialIndex.of(int(m.group(3)), [(int(a), int(b)) for a, b in _COL.findall(m.group(4))])
        terms[key] = terms.get(key, 0) + coef
        pos, first = m.end(), False
    return SqsExpr(terms)


_TBLOCK = re.compile(r"\s*\+?\s*t\^(\d+)\*\(\s*(.*?)\s*\)\s*(?=\+\s*t\^|$)")


def parse_tpoly(text):
    text = text.strip()
    if text == "0":
        return TPoly()
    pos, coeffs = 0, {}
    while pos < len(text):
        m = _TBLOCK.match(text, pos)
        if not m:
            raise InvalidInput(f"cannot parse t-polynomial at column {pos + 1}")
        coeffs[int(m.group(1))] = parse_expr(m.group(2))
        pos = m.end()
    return TPoly(coeffs)


# ------------------------------------------------------------------- json


def _coef_json(c):
    return _render_coef(Fraction(c))


def expr_to_json(f):
    return {"terms": [{"k": m.k, "lam": [list(col) for col in m.lam], "coef": _coef_json(c)} for m, c in f.items()]}


def tpoly_to_json(x):
    return {"tpoly": [{"t": e, **expr_to_json(c)} for e, c in x.items()]}


def findex_to_json(fi):
    return {"d": fi.d, "S": sorted(fi.strict), "eps": "".join(sign_char(s) for s in fi.signs)}


def fcomb_to_json(comb):
    items = sorted(comb.items(), key=lambda t: t[0].sort_key())
    return {"F": [{**findex_to_json(fi), "coef": _coef_json(c)} for fi, c in items if c]}


def graph_to_json(g):
    out = []
    if isinstance(g, DirectedSignedGraph):
        for e, (tu, tv) in zip(g.edges, g.taus):
            out.append({"u": e.u, "v": e.v, "sign": sign_char(e.sign), "tau_u": sign_char(tu), "tau_v": sign_char(tv)})
    else:
        for e in g.edges:
            out.append({"u": e.u, "v": e.v, "sign": sign_char(e.sign)})
    return {"d": g.d, "edges": out}


def poset_to_json(p):
    covers = sorted(p.covers())
    return {"d": p.d, "covers": [list(c) for c in covers], "strict": []}


def dumps(obj):
    """Canonical JSON text (sorted keys, two-space indent, trailing newline)."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------- loading


class Document(NamedTuple):
    kind: str  # graph, directed-graph, poset, expression
    payload: Any


def _field(obj, key, path):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInput(f"missing field {path}{'.' if path else ''}{key}")
    return obj[key]


def _int(x, path):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidInput(f"field {path} must be an integer, got {x!r}")
    return x


def _coef(x, path):
    try:
        if isinstance(x, bool) or not isinstance(x, (str, int)):
            raise ValueError
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"field {path} is not a rational 'p/q': {x!r}") from None


def graph_from_json(obj):
    d = _int(_field(obj, "d", ""), "d")
    edges = _field(obj, "edges", "")
    if not isinstance(edges, list):
        raise InvalidInput("field edges must be a list")
    directed = any("tau_u" in e or "tau_v" in e for e in edges if isinstance(e, dict))
    recs, taus = [], []
    for idx, e in enumerate(edges):
        where = f"edges[{idx}]"
        u = _int(_field(e, "u", where), f"{where}.u")
        v = _int(_field(e, "v", where), f"{where}.v")
        s = _field(e, "sign", where)
        if s not in ("+", "-"):
            raise InvalidInput(f"field {where}.sign must be '+' or '-', got {s!r}")
        recs.append((u, v, s))
        if directed:
            tu, tv = _field(e, "tau_u", where), _field(e, "tau_v", where)
            if tu not in ("+", "-") or tv not in ("+", "-"):
                raise InvalidInput(f"field {where}.tau_u/tau_v must be '+' or '-'")
            taus.append((tu, tv))
    if directed:
        return DirectedSignedGraph(d, tuple(recs), tuple(taus))
    return SignedGraph(d, tuple(recs))


def poset_from_json(obj):
    """``(SignedPoset, strict pairs)``; strict pairs are mirrored like covers."""
    d = _int(_field(obj, "d", ""), "d")
    pairs = []
    for name in ("covers", "strict"):
        raw = obj.get(name, []) if isinstance(obj, dict) else []
        out = []
        for idx, pr in enumerate(raw):
            if not (isinstance(pr, list) and len(pr) == 2):
                raise InvalidInput(f"field {name}[{idx}] must be a pair [i, j]")
            out.append((_int(pr[0], f"{name}[{idx}][0]"), _int(pr[1], f"{name}[{idx}][1]")))
        pairs.append(out)
    covers, strict = pairs
    p = SignedPoset(d, frozenset(covers))
    strict_set = frozenset(strict) | frozenset((-y, -x) for x, y in strict)
    if not strict_set <= p.relation:
        raise InvalidInput("every strict pair must be a relation of the poset")
    return p, strict_set


def _lam(raw, path):
    if not isinstance(raw, list):
        raise InvalidInput(f"field {path} must be a list of [a, b] columns")
    return [(_int(c[0], f"{path}"), _int(c[1], f"{path}")) for c in raw]


def expr_from_json(obj):
    terms = {}
    for idx, t in enumerate(_field(obj, "terms", "")):
        where = f"terms[{idx}]"
        key = MonomialIndex.of(_int(_field(t, "k", where), f"{where}.k"), _lam(_field(t, "lam", where), f"{where}.lam"))
        terms[key] = terms.get(key, 0) + _coef(t.get("coef", "1"), f"{where}.coef")
    return SqsExpr(terms)


def tpoly_from_json(obj):
    coeffs = {}
    for idx, block in enumerate(_field(obj, "tpoly", "")):
        e = _int(_field(block, "t", f"tpoly[{idx}]"), f"tpoly[{idx}].t")
        coeffs[e] = coeffs.get(e, SqsExpr()) + expr_from_json(block)
    return TPoly(coeffs)


def fcomb_from_json(obj):
    out = {}
    for idx, t in enumerate(_field(obj, "F", "")):
        where = f"F[{idx}]"
        d = _int(_field(t, "d", where), f"{where}.d")
        fi = FundamentalIndex(d, frozenset(_field(t, "S", where)), tuple(_field(t, "eps", where)))
        out[fi] = out.get(fi, 0) + _coef(t.get("coef", "1"), f"{where}.coef")
    return out


def parse_document(obj):
    if not isinstance(obj, dict):
        raise InvalidInput("document must be a JSON object")
    if "edges" in obj:
        g = graph_from_json(obj)
        return Document("directed-graph" if isinstance(g, DirectedSignedGraph) else "graph", g)
    if "covers" in obj:
        return Document("poset", poset_from_json(obj))
    if "tpoly" in obj:
        return Document("expression", tpoly_from_json(obj))
    if "terms" in obj:
        return Document("expression", expr_from_json(obj))
    if "F" in obj:
        return Document("expression", fcomb_from_json(obj))
    raise InvalidInput("unrecognised document: expected edges, covers, terms, tpoly or F")


def read_text(source):
    """Contents of a path, ``-`` for stdin, or the literal itself when it
    looks like JSON."""
    if isinstance(source, Path):
        return source.read_text()
    if source == "-":
        return sys.stdin.read()
    if source.lstrip().startswith(("{", "[")):
        return source
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {source}: {exc.strerror}") from None


def load_document(source):
    text = read_text(source)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_document(obj)
