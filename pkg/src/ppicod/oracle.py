"""Exhaustive search for the shortest valid scalar-linear code.

Validity of a linear code depends only on its row space, so it suffices to
visit one canonical RREF basis per subspace, dimension by dimension. The
subspace stream is split by pivot pattern; with several workers each
pattern is scanned independently and the reducer keeps the canonically
first hit, so witnesses never depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import kernels
from .errors import CapExceeded, ParameterError
from .gf2 import BitMatrix, free_positions, gaussian_binomial, pivot_patterns, subspace_from_index
from .instance import Instance

# Largest search the oracle will run: every subspace of GF(2)^10 up to dimension 3.
SEARCH_BUDGET = sum(gaussian_binomial(10, k) for k in range(1, 4))
PROOF_MAX_M = 8


@dataclass(frozen=True)
class OracleResult:
    status: str  # Found | InfeasibleLinear | Inconclusive
    ell_star: int | None
    witness: "Scheme | None"
    searched_up_to: int
    subspaces_checked: int
    checked_by_dim: dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == "Found"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "ell_star": self.ell_star,
            "searched_up_to": self.searched_up_to,
            "subspaces_checked": self.subspaces_checked,
            "checked_by_dim": {str(k): v for k, v in sorted(self.checked_by_dim.items())},
            "elapsed_seconds": round(self.elapsed, 6),
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def search_cost(m: int, ell_max: int) -> int:
    return sum(gaussian_binomial(m, k) for k in range(1, ell_max + 1))


def check_budget(m: int, ell_max: int) -> None:
    cost = search_cost(m, ell_max)
    if cost > SEARCH_BUDGET:
        raise CapExceeded(
            f"searching m={m} up to dimension {ell_max} visits {cost} subspaces "
            f"(cap {SEARCH_BUDGET}, i.e. m=10 up to dimension 3)"
        )


def _scan_job(args):
    m, pivots, side_masks, stop_first = args
    return kernels.scan_pattern(m, pivots, side_masks, stop_first)


def _batches(items: list, size: int) -> Iterator[list]:
    for i in range(0, len(items), size):
        yield items[i : i + size]


def scan_dimension(
    inst: Instance, k: int, stop_first: bool = True, workers: int = 1
) -> tuple[int, tuple[tuple[int, ...], int] | None, int]:
    """Scan all k-dimensional subspaces in canonical order.

    Returns (checked, first hit as (pivots, index) or None, valid count).
    When stopping at the first hit, ``checked`` counts subspaces up to and
    including it, and the valid count is only what was seen.
    """
    patterns = list(pivot_patterns(inst.m, k))
    masks = inst.side_masks
    checked = count = 0
    first = None
    if workers <= 1:
        results = (kernels.scan_pattern(inst.m, p, masks, stop_first) for p in patterns)
        for pat, (c, t, n) in zip(patterns, results):
            checked += c
            count += n
            if t >= 0 and first is None:
                first = (pat, t)
                if stop_first:
                    break
        return checked, first, count
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for batch in _batches(patterns, 4 * workers):
            jobs = [(inst.m, p, masks, stop_first) for p in batch]
            for pat, (c, t, n) in zip(batch, pool.map(_scan_job, jobs)):
                checked += c
                count += n
                if t >= 0 and first is None:
                    first = (pat, t)
                    if stop_first:
                        break
            if first is not None and stop_first:
                break
    return checked, first, count


def search_dimension(inst: Instance, k: int, workers: int = 1) -> BitMatrix | None:
    """First valid k-dimensional code in canonical order, if any."""
    _, first, _ = scan_dimension(inst, k, True, workers)
    if first is None:
        return None
    return subspace_from_index(inst.m, *first)


def optimal_linear_length(inst: Instance, ell_max: int, workers: int = 1) -> OracleResult:
    from .schemes import Scheme
    from .validator import validate_linear

    if not 1 <= ell_max <= inst.m:
        raise ParameterError(f"need 1 <= ell_max <= m, got {ell_max}")
    check_budget(inst.m, ell_max)
    t0 = time.perf_counter()
    total = 0
    by_dim = {}
    for k in range(1, ell_max + 1):
        checked, first, _ = scan_dimension(inst, k, True, workers)
        total += checked
        by_dim[k] = checked
        if first is not None:
            gen = subspace_from_index(inst.m, *first)
            verdict = validate_linear(gen, inst)
            assert verdict.valid, "kernel and validator disagree"
            witness = Scheme(inst, gen, dict(verdict.induced_assignment), "oracle-witness")
            return OracleResult("Found", k, witness, k, total, by_dim, time.perf_counter() - t0)
    status = "InfeasibleLinear" if ell_max == inst.m else "Inconclusive"
    return OracleResult(status, None, None, ell_max, total, by_dim, time.perf_counter() - t0)


def prove_linear_infeasible(inst: Instance, workers: int = 1) -> bool:
    if inst.m > PROOF_MAX_M:
        raise CapExceeded(f"infeasibility proofs are limited to m <= {PROOF_MAX_M}")
    return optimal_linear_length(inst, inst.m, workers).status == "InfeasibleLinear"


def count_valid_codes(inst: Instance, ell: int, workers: int = 1) -> int:
    if inst.m > PROOF_MAX_M:
        raise CapExceeded(f"code counting is limited to m <= {PROOF_MAX_M}")
    if not 1 <= ell <= inst.m:
        raise ParameterError(f"need 1 <= ell <= m, got {ell}")
    return scan_dimension(inst, ell, False, workers)[2]


def valid_codes(inst: Instance, k: int) -> Iterator[BitMatrix]:
    """Every valid k-dimensional row space, as canonical RREF bases."""
    if inst.m > PROOF_MAX_M:
        raise CapExceeded(f"code enumeration is limited to m <= {PROOF_MAX_M}")
    for pat in pivot_patterns(inst.m, k):
        hits: list = []
        kernels.scan_pattern(inst.m, pat, inst.side_masks, False, hits)
        for t in hits:
            yield subspace_from_index(inst.m, pat, t)


def pattern_sizes(m: int, k: int) -> list[int]:
    return [1 << len(free_positions(m, p)) for p in pivot_patterns(m, k)]
