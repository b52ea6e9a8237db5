"""Rigidity and globally rigid augmentation of graphs in the plane."""
from .costs import INF, CostFn
from .errors import PreconditionError, RigaugError
from .graph import Graph
from .kernels import BACKEND
from .rigidity import is_globally_rigid2, is_rigid2, r2_rank

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "CostFn",
    "INF",
    "RigaugError",
    "PreconditionError",
    "BACKEND",
    "r2_rank",
    "is_rigid2",
    "is_globally_rigid2",
]
