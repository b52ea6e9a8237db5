"""Cost functions on unordered vertex pairs.

Costs are non-negative integers; :data:`INF` marks a forbidden pair.
Sums stay exact because ``int + inf`` is ``inf``.
"""
from __future__ import annotations

import math

__all__ = ["INF", "CostFn", "total_cost"]

INF = math.inf


def _key(u, v):
    return (u, v) if u <= v else (v, u)


class CostFn:
    """Symmetric cost map.

    Parameters
    ----------
    costs : mapping, optional
        ``{(u, v): c}`` with ``c`` an int or :data:`INF`.  Keys are unordered;
        ``(x, x)`` keys are allowed and are used for loops of tree problems.
    default : int or INF
        Cost of any pair with ``u != v`` not listed in ``costs``.
    """

    __slots__ = ("_c", "default")

    def __init__(self, costs=None, default=INF):
        self._c = {}
        for (u, v), c in (costs or {}).items():
            if c != INF and (c < 0 or int(c) != c):
                raise ValueError(f"cost of ({u}, {v}) must be a non-negative integer or INF")
            self._c[_key(u, v)] = c if c == INF else int(c)
        self.default = default

    @classmethod
    def uniform(cls, value=1):
        return cls(default=value)

    def __call__(self, u, v):
        key = _key(u, v)
        if key in self._c:
            return self._c[key]
        return INF if u == v else self.default

    def listed(self):
        """The explicitly listed ``(pair, cost)`` items, sorted by pair."""
        return sorted(self._c.items())

    def loops(self):
        return [(k, c) for k, c in self.listed() if k[0] == k[1] and c != INF]

    def restricted(self, pairs):
        """A new :class:`CostFn` listing only ``pairs`` (default INF)."""
        return CostFn({p: self(*p) for p in pairs})

    def __repr__(self):
        return f"CostFn({dict(self._c)!r}, default={self.default!r})"


def total_cost(c, pairs):
    return sum((c(u, v) for u, v in pairs), 0)
