"""Named small graphs shared by the test suites and the CLI examples."""
from itertools import combinations

from .graph import Graph

__all__ = ["K4", "K4E", "C4", "P3", "W4", "K5", "K5E", "TWOK4", "TRIK4", "FIXTURES"]


def _clique(vs):
    return list(combinations(vs, 2))


K4 = Graph.complete(4)
K4E = K4.remove_edges([(2, 3)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
P3 = Graph(3, [(0, 1), (1, 2)])
# hub 4, rim 0-1-2-3
W4 = Graph(5, [(0, 1), (1, 2), (2, 3), (0, 3)] + [(i, 4) for i in range(4)])
K5 = Graph.complete(5)
K5E = K5.remove_edges([(3, 4)])
TWOK4 = Graph(6, _clique([0, 1, 2, 3]) + _clique([2, 3, 4, 5]))
TRIK4 = Graph(8, _clique([0, 1, 2, 3]) + _clique([0, 1, 4, 5]) + _clique([0, 1, 6, 7]))

FIXTURES = {
    "K4": K4,
    "K4e": K4E,
    "C4": C4,
    "P3": P3,
    "W4": W4,
    "K5": K5,
    "K5e": K5E,
    "TWOK4": TWOK4,
    "TRIK4": TRIK4,
}
