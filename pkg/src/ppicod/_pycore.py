"""Pure-Python kernels. Must stay in lockstep with ``_core.pyx``."""

from __future__ import annotations

from typing import Sequence

from .gf2 import free_positions, rref_rows

BACKEND = "python"


def decodable_masks(rows: Sequence[int], side_masks: Sequence[int], m: int) -> list[int]:
    """Per user, the packed set of messages it can linearly decode.

    A user with side information A decodes message j iff the unit vector e_j
    lies in the row space projected onto the complement of A, which in
    RREF means some reduced row is exactly e_j.
    """
    full = (1 << m) - 1
    out = []
    for a in side_masks:
        comp = full & ~a
        reduced, rank = rref_rows([r & comp for r in rows], m)
        mask = 0
        for r in reduced[:rank]:
            if r & (r - 1) == 0:
                mask |= r
        out.append(mask)
    return out


def span_is_valid(basis: Sequence[int], side_masks: Sequence[int]) -> bool:
    """Validity of Span(basis) via its 2^k elements (basis must be independent)."""
    k = len(basis)
    if k == 0:
        return False
    dec = [0] * len(side_masks)
    v = 0
    for idx in range(1, 1 << k):
        v ^= basis[(idx & -idx).bit_length() - 1]
        for u, a in enumerate(side_masks):
            w = v & ~a
            if w and w & (w - 1) == 0:
                d = dec[u] | w
                if d & (d - 1):
                    return False
                dec[u] = d
    return all(dec)


def scan_pattern(
    m: int,
    pivots: Sequence[int],
    side_masks: Sequence[int],
    stop_first: bool,
    hits: list | None = None,
) -> tuple[int, int, int]:
    """Check every subspace of one pivot pattern in canonical order.

    Returns (checked, first_valid_index or -1, valid_count). With
    ``stop_first`` the scan ends at the first valid subspace; ``hits``, if
    given, collects the index of every valid subspace.
    """
    slots = free_positions(m, pivots)
    nfree = len(slots)
    # bit b of the counter drives slot nfree-1-b
    slot_row = [slots[nfree - 1 - b][0] for b in range(nfree)]
    slot_bit = [1 << slots[nfree - 1 - b][1] for b in range(nfree)]
    rows = [1 << p for p in pivots]
    total = 1 << nfree
    first = -1
    count = 0
    checked = 0
    for t in range(total):
        if t:
            changed = t ^ (t - 1)
            b = 0
            while changed:
                if changed & 1:
                    rows[slot_row[b]] ^= slot_bit[b]
                changed >>= 1
                b += 1
        checked += 1
        if span_is_valid(rows, side_masks):
            count += 1
            if hits is not None:
                hits.append(t)
            if first < 0:
                first = t
                if stop_first:
                    break
    return checked, first, count
