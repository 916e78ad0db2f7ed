"""Private pliable index coding with size-s circular-h shift side information."""

from .bounds import BoundReport, CaseTag, classify, is_infeasible
from .gf2 import BitMatrix, BitVector, gaussian_binomial, rank, rref, span_contains
from .instance import Instance, Nth, build_nth, find_one_factor, has_one_factor, new_instance
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "BitMatrix",
    "BitVector",
    "BoundReport",
    "CaseTag",
    "Instance",
    "Nth",
    "build_nth",
    "classify",
    "find_one_factor",
    "gaussian_binomial",
    "has_one_factor",
    "is_infeasible",
    "new_instance",
    "rank",
    "rref",
    "span_contains",
]
