"""Plain-text graph and cost files.

Graph file: first line ``n m``, then ``m`` lines ``u v`` with ``u < v``.
Cost file: lines ``u v c`` where ``c`` is a decimal or ``inf``.  Blank lines
are ignored in both.
"""
from __future__ import annotations

from decimal import Decimal, InvalidOperation

from .costs import INF, CostFn
from .errors import ParseError
from .graph import Graph

__all__ = ["parse_graph", "format_graph", "read_graph", "parse_costs", "read_costs"]


def _lines(text):
    for i, line in enumerate(text.splitlines(), 1):
        if line.strip():
            yield i, line.split()


def _int(tok, line, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line, f"{what} is not an integer: {tok!r}") from None


def parse_graph(text):
    """Parse the graph format.

    Raises
    ------
    ParseError
        With the 1-based line number of the first offending line.
    """
    rows = list(_lines(text))
    if not rows:
        raise ParseError(1, "missing header 'n m'")
    line, head = rows[0]
    if len(head) != 2:
        raise ParseError(line, "header must be 'n m'")
    n, m = _int(head[0], line, "n"), _int(head[1], line, "m")
    if n < 0 or m < 0:
        raise ParseError(line, "n and m must be non-negative")
    if len(rows) - 1 != m:
        raise ParseError(rows[-1][0] if len(rows) > 1 else line,
                         f"header announces {m} edges, found {len(rows) - 1}")
    seen = set()
    for line, tok in rows[1:]:
        if len(tok) != 2:
            raise ParseError(line, "edge line must be 'u v'")
        u, v = _int(tok[0], line, "u"), _int(tok[1], line, "v")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line, f"vertex out of range 0..{n - 1}")
        if u >= v:
            raise ParseError(line, "edge must satisfy u < v")
        if (u, v) in seen:
            raise ParseError(line, f"duplicate edge {u} {v}")
        seen.add((u, v))
    return Graph(n, seen)


def format_graph(g):
    """Canonical text form: header then edges in lexicographic order, LF-terminated."""
    out = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def read_graph(path):
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def parse_costs(text, n=None, scale=1, default=INF):
    """Parse the cost format into a :class:`CostFn`.

    Parameters
    ----------
    scale : int
        Every finite cost is multiplied by ``scale``; the product must be an
        integer.  This lets decimal costs be used exactly.
    n : int, optional
        If given, endpoints are range-checked.
    default : int or INF
        Cost of unlisted pairs.
    """
    costs = {}
    for line, tok in _lines(text):
        if len(tok) != 3:
            raise ParseError(line, "cost line must be 'u v c'")
        u, v = _int(tok[0], line, "u"), _int(tok[1], line, "v")
        if u < 0 or v < 0 or (n is not None and (u >= n or v >= n)):
            raise ParseError(line, "vertex out of range")
        if u == v:
            raise ParseError(line, "a cost pair needs two distinct vertices")
        if tok[2].lower() in ("inf", "infinity"):
            c = INF
        else:
            try:
                value = Decimal(tok[2]) * scale
            except InvalidOperation:
                raise ParseError(line, f"bad cost {tok[2]!r}") from None
            if not value.is_finite() or value < 0 or value != value.to_integral_value():
                raise ParseError(line, f"cost {tok[2]} times scale {scale} is not a non-negative integer")
            c = int(value)
        key = (min(u, v), max(u, v))
        if key in costs:
            raise ParseError(line, f"duplicate pair {key[0]} {key[1]}")
        costs[key] = c
    return CostFn(costs, default=default)


def read_costs(path, n=None, scale=1, default=INF):
    with open(path, encoding="ascii") as fh:
        return parse_costs(fh.read(), n=n, scale=scale, default=default)
