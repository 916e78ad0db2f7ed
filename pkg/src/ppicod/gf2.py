"""Bit-packed linear algebra over GF(2).

Vectors and matrix rows are stored as Python ints; bit ``c`` holds column
``c`` (0-based). Messages are 1-based everywhere else in the package, so
message ``j`` lives in column ``j - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch

MAX_COLUMNS = 64


def _check_width(m: int) -> None:
    if not 1 <= m <= MAX_COLUMNS:
        raise ValueError(f"column count must be in [1, {MAX_COLUMNS}], got {m}")


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int

    def __post_init__(self):
        _check_width(self.length)
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits exceed vector length")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "BitVector":
        bits = 0
        for c, x in enumerate(values):
            if x & 1:
                bits |= 1 << c
        return cls(len(values), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        """Build from 0-based column indices."""
        bits = 0
        for c in support:
            bits |= 1 << c
        return cls(length, bits)

    def support(self) -> frozenset[int]:
        return frozenset(c for c in range(self.length) if self.bits >> c & 1)

    def to_list(self) -> list[int]:
        return [self.bits >> c & 1 for c in range(self.length)]

    def __getitem__(self, c: int) -> int:
        return self.bits >> c & 1


@dataclass(frozen=True)
class BitMatrix:
    m: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_width(self.m)
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        for r in self.rows:
            if r < 0 or r >> self.m:
                raise ValueError("row exceeds column count")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        if not rows:
            raise ValueError("need at least one row to infer the width")
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise DimensionMismatch("rows have different lengths")
        return cls(widths.pop(), tuple(BitVector.from_list(r).bits for r in rows))

    @classmethod
    def from_messages(cls, m: int, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        """Build from rows given as 1-based message indices with coefficient 1."""
        packed = []
        for msgs in rows:
            r = 0
            for j in msgs:
                if not 1 <= j <= m:
                    raise ValueError(f"message index {j} outside [1, {m}]")
                r ^= 1 << (j - 1)
            packed.append(r)
        return cls(m, tuple(packed))

    @property
    def ell(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [[r >> c & 1 for c in range(self.m)] for r in self.rows]

    def to_messages(self) -> list[list[int]]:
        return [[c + 1 for c in range(self.m) if r >> c & 1] for r in self.rows]

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.m, r) for r in self.rows]

    def append(self, row: int) -> "BitMatrix":
        return BitMatrix(self.m, self.rows + (row,))


def rref_rows(rows: Sequence[int], m: int) -> tuple[list[int], int]:
    """Row-reduce packed rows; returns all rows (zeros last) and the rank."""
    work = list(rows)
    rank = 0
    for col in range(m):
        bit = 1 << col
        pivot = None
        for r in range(rank, len(work)):
            if work[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r] & bit:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return work, rank


def rank_rows(rows: Sequence[int], m: int) -> int:
    return rref_rows(rows, m)[1]


def rref(M: BitMatrix) -> tuple[BitMatrix, int]:
    if not M.rows:
        raise ValueError("rref needs at least one row")
    rows, rank = rref_rows(M.rows, M.m)
    return BitMatrix(M.m, tuple(rows)), rank


def rank(M: BitMatrix) -> int:
    return rank_rows(M.rows, M.m)


def _as_bits(M: BitMatrix, v: BitVector | int) -> int:
    if isinstance(v, BitVector):
        if v.length != M.m:
            raise DimensionMismatch(f"vector length {v.length} != matrix width {M.m}")
        return v.bits
    if v < 0 or v >> M.m:
        raise DimensionMismatch("vector wider than matrix")
    return v


def reduce_against(basis: Sequence[int], v: int) -> int:
    """Reduce ``v`` by a basis in RREF (leftmost pivots); zero iff v is in the span."""
    for b in basis:
        if b and v & (b & -b):
            v ^= b
    return v


def span_contains(M: BitMatrix, v: BitVector | int) -> bool:
    bits = _as_bits(M, v)
    basis, _ = rref_rows(M.rows, M.m)
    return reduce_against(basis, bits) == 0


def span_vector_with_support(
    M: BitMatrix, allowed: Iterable[int], pivot: int
) -> BitVector | None:
    """Find v in Span(M) with support inside ``allowed | {pivot}`` and v[pivot] = 1.

    Column indices are 0-based. Rows are eliminated on the forbidden columns
    first; the rows left without a forbidden pivot span exactly the part of
    the row space that vanishes there.
    """
    allowed = frozenset(allowed)
    if pivot in allowed:
        raise ValueError("pivot must not be in the allowed set")
    if pivot >= M.m or any(c < 0 or c >= M.m for c in allowed):
        raise DimensionMismatch("column index outside matrix width")
    forbidden = [c for c in range(M.m) if c != pivot and c not in allowed]
    work = list(M.rows)
    used = [False] * len(work)
    for col in forbidden:
        bit = 1 << col
        p = next((r for r in range(len(work)) if not used[r] and work[r] & bit), None)
        if p is None:
            continue
        used[p] = True
        for r in range(len(work)):
            if r != p and work[r] & bit:
                work[r] ^= work[p]
    for r, row in enumerate(work):
        if not used[r] and row >> pivot & 1:
            return BitVector(M.m, row)
    return None


def gaussian_binomial(m: int, k: int) -> int:
    """Number of k-dimensional subspaces of GF(2)^m."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    num = den = 1
    for i in range(k):
        num *= (1 << m) - (1 << i)
        den *= (1 << k) - (1 << i)
    return num // den


def pivot_patterns(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """Pivot-column patterns of k-dim RREF matrices, lexicographic."""
    return combinations(range(m), k)


def free_positions(m: int, pivots: Sequence[int]) -> list[tuple[int, int]]:
    """(row, column) slots that may hold either bit, ordered row-major."""
    pset = set(pivots)
    return [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, m) if c not in pset]


def subspace_from_index(m: int, pivots: Sequence[int], t: int) -> BitMatrix:
    """The t-th RREF matrix for a pivot pattern.

    The first free slot is the most significant bit of ``t``, so increasing
    ``t`` walks the free-entry tuples in lexicographic order.
    """
    slots = free_positions(m, pivots)
    rows = [1 << p for p in pivots]
    nfree = len(slots)
    for b, (r, c) in enumerate(slots):
        if t >> (nfree - 1 - b) & 1:
            rows[r] |= 1 << c
    return BitMatrix(m, tuple(rows))


def enumerate_subspaces(
    m: int, k: int, pivots: Sequence[int] | None = None
) -> Iterator[BitMatrix]:
    """One canonical RREF basis per k-dimensional subspace of GF(2)^m.

    Passing ``pivots`` restricts the stream to a single pivot pattern, which
    is how the search is split across workers.
    """
    _check_width(m)
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    if k == 0:
        yield BitMatrix(m, ())
        return
    patterns = [tuple(pivots)] if pivots is not None else pivot_patterns(m, k)
    for pat in patterns:
        nfree = len(free_positions(m, pat))
        for t in range(1 << nfree):
            yield subspace_from_index(m, pat, t)
