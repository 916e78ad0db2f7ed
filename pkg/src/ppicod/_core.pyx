# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Must stay in lockstep with ``_pycore.py``."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

ctypedef uint64_t u64

BACKEND = "cython"

cdef enum:
    MAXW = 64


cdef inline int _ctz(u64 x) nogil:
    cdef int b = 0
    while not (x & 1):
        x >>= 1
        b += 1
    return b


cdef inline bint _single(u64 w) nogil:
    return w != 0 and (w & (w - 1)) == 0


cdef int _rref(u64* work, int nrows, int m) nogil:
    cdef int rank = 0, col, r, p
    cdef u64 bit, tmp
    for col in range(m):
        bit = (<u64>1) << col
        p = -1
        for r in range(rank, nrows):
            if work[r] & bit:
                p = r
                break
        if p < 0:
            continue
        tmp = work[rank]
        work[rank] = work[p]
        work[p] = tmp
        for r in range(nrows):
            if r != rank and (work[r] & bit):
                work[r] ^= work[rank]
        rank += 1
        if rank == nrows:
            break
    return rank


def decodable_masks(rows, side_masks, int m):
    cdef int nrows = len(rows)
    cdef int nusers = len(side_masks)
    cdef u64 full = (~(<u64>0)) if m == 64 else (((<u64>1) << m) - 1)
    cdef u64 comp, mask, r
    cdef int i, u, rank
    cdef u64* base = <u64*>malloc(max(nrows, 1) * sizeof(u64))
    cdef u64* work = <u64*>malloc(max(nrows, 1) * sizeof(u64))
    out = []
    try:
        for i in range(nrows):
            base[i] = <u64>rows[i]
        for u in range(nusers):
            comp = full & ~(<u64>side_masks[u])
            for i in range(nrows):
                work[i] = base[i] & comp
            rank = _rref(work, nrows, m)
            mask = 0
            for i in range(rank):
                r = work[i]
                if _single(r):
                    mask |= r
            out.append(mask)
    finally:
        free(base)
        free(work)
    return out


cdef bint _span_valid(u64* basis, int k, u64* notside, u64* dec, int nusers) nogil:
    cdef u64 v = 0, w, d
    cdef unsigned long idx, top
    cdef int u
    if k == 0:
        return False
    for u in range(nusers):
        dec[u] = 0
    top = (<unsigned long>1) << k
    for idx in range(1, top):
        v ^= basis[_ctz(idx)]
        for u in range(nusers):
            w = v & notside[u]
            if _single(w):
                d = dec[u] | w
                if d & (d - 1):
                    return False
                dec[u] = d
    for u in range(nusers):
        if dec[u] == 0:
            return False
    return True


def span_is_valid(basis, side_masks):
    cdef int k = len(basis)
    cdef int nusers = len(side_masks)
    cdef u64 rows[MAXW]
    cdef u64* notside = <u64*>malloc(max(nusers, 1) * sizeof(u64))
    cdef u64* dec = <u64*>malloc(max(nusers, 1) * sizeof(u64))
    cdef int i
    try:
        for i in range(k):
            rows[i] = <u64>basis[i]
        for i in range(nusers):
            notside[i] = ~(<u64>side_masks[i])
        return bool(_span_valid(rows, k, notside, dec, nusers))
    finally:
        free(notside)
        free(dec)


def scan_pattern(int m, pivots, side_masks, bint stop_first, list hits=None):
    cdef int k = len(pivots)
    cdef int nusers = len(side_masks)
    cdef u64 rows[MAXW]
    cdef int slot_row[MAXW * MAXW]
    cdef u64 slot_bit[MAXW * MAXW]
    cdef u64* notside = <u64*>malloc(max(nusers, 1) * sizeof(u64))
    cdef u64* dec = <u64*>malloc(max(nusers, 1) * sizeof(u64))
    cdef long long t, total, first = -1, count = 0, checked = 0
    cdef unsigned long long changed
    cdef int i, b, r, c, nfree = 0, p
    cdef char ispivot[MAXW]
    cdef bint collect = hits is not None

    for c in range(m):
        ispivot[c] = 0
    for i in range(k):
        p = pivots[i]
        ispivot[p] = 1
        rows[i] = (<u64>1) << p
    # slot order is row-major; counter bit b drives slot nfree-1-b
    slots = []
    for r in range(k):
        p = pivots[r]
        for c in range(p + 1, m):
            if not ispivot[c]:
                slots.append((r, c))
    nfree = len(slots)
    if nfree >= 63:
        free(notside)
        free(dec)
        raise OverflowError("pattern has too many free entries to enumerate")
    for b in range(nfree):
        r, c = slots[nfree - 1 - b]
        slot_row[b] = r
        slot_bit[b] = (<u64>1) << c
    for i in range(nusers):
        notside[i] = ~(<u64>side_masks[i])
    total = (<long long>1) << nfree

    try:
        with nogil:
            t = 0
            while t < total:
                if t:
                    changed = <unsigned long long>(t ^ (t - 1))
                    b = 0
                    while changed:
                        if changed & 1:
                            rows[slot_row[b]] ^= slot_bit[b]
                        changed >>= 1
                        b += 1
                checked += 1
                if _span_valid(rows, k, notside, dec, nusers):
                    count += 1
                    if collect:
                        with gil:
                            hits.append(t)
                    if first < 0:
                        first = t
                        if stop_first:
                            break
                t += 1
    finally:
        free(notside)
        free(dec)
    return checked, first, count
