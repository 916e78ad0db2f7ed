"""Decodability and privacy checks for codes on an instance.

Linear codes are judged by the span criterion: user i decodes w_j iff some
vector of the row space is supported on A_i plus j with a one at j. Any
encoder given as a full truth table can instead be judged exactly by
enumerating all 2^m message tuples.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Sequence

import numpy as np

from . import kernels
from .gf2 import BitMatrix, DimensionMismatch
from .instance import Instance

EXHAUSTIVE_MAX_M = 24
ENTROPY_MAX_M = 20


class Status(str, Enum):
    VALID = "Valid"
    DECODE_FAILURE = "DecodeFailure"
    PRIVACY_VIOLATION = "PrivacyViolation"


@dataclass(frozen=True)
class Verdict:
    per_user_decodable: Mapping[int, frozenset[int]]
    status: Status
    decode_failures: tuple[int, ...] = ()
    privacy_violations: tuple[int, ...] = ()
    induced_assignment: Mapping[int, int] | None = None

    @property
    def valid(self) -> bool:
        return self.status is Status.VALID

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "decode_failures": list(self.decode_failures),
            "privacy_violations": list(self.privacy_violations),
            "per_user_decodable": {
                str(i): sorted(d) for i, d in sorted(self.per_user_decodable.items())
            },
            "induced_assignment": (
                None
                if self.induced_assignment is None
                else {str(i): j for i, j in sorted(self.induced_assignment.items())}
            ),
        }


def _verdict(decodable: dict[int, frozenset[int]], leaky: Sequence[int] = ()) -> Verdict:
    failures = tuple(i for i, d in decodable.items() if not d)
    leaky = set(leaky)
    violations = tuple(i for i, d in decodable.items() if len(d) >= 2 or i in leaky)
    if failures:
        status = Status.DECODE_FAILURE
    elif violations:
        status = Status.PRIVACY_VIOLATION
    else:
        status = Status.VALID
    induced = None
    if status is Status.VALID:
        induced = {i: next(iter(d)) for i, d in decodable.items()}
    return Verdict(decodable, status, failures, violations, induced)


def _unpack(mask: int) -> frozenset[int]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return frozenset(out)


def _check_dims(E: BitMatrix, inst: Instance) -> None:
    if E.m != inst.m:
        raise DimensionMismatch(f"generator has {E.m} columns, instance has m={inst.m}")


def decodable_set_linear(E: BitMatrix, inst: Instance, i: int) -> frozenset[int]:
    _check_dims(E, inst)
    inst.side_info(i)
    return _unpack(kernels.decodable_masks(E.rows, [inst.side_masks[i - 1]], inst.m)[0])


def decodable_sets_linear(E: BitMatrix, inst: Instance) -> dict[int, frozenset[int]]:
    _check_dims(E, inst)
    masks = kernels.decodable_masks(E.rows, inst.side_masks, inst.m)
    return {i: _unpack(mk) for i, mk in zip(inst.users, masks)}


def validate_linear(E: BitMatrix, inst: Instance) -> Verdict:
    return _verdict(decodable_sets_linear(E, inst))


@dataclass(frozen=True, eq=False)
class EncoderTable:
    """Codeword for every message tuple; tuple index bit j-1 carries w_j."""

    m: int
    ell: int
    table: np.ndarray

    def __post_init__(self):
        if self.table.shape != (1 << self.m,):
            raise ValueError("encoder table must cover all 2^m message tuples")


def truth_table(E: BitMatrix) -> EncoderTable:
    if E.m > EXHAUSTIVE_MAX_M:
        raise ValueError(f"truth tables are limited to m <= {EXHAUSTIVE_MAX_M}")
    w = np.arange(1 << E.m, dtype=np.uint64)
    x = np.zeros_like(w)
    for r, row in enumerate(E.rows):
        parity = np.bitwise_count(w & np.uint64(row)) & 1
        x |= parity.astype(np.uint64) << np.uint64(r)
    return EncoderTable(E.m, E.ell, x)


def encoder_from_function(m: int, ell: int, f: Callable[[tuple[int, ...]], int]) -> EncoderTable:
    """Tabulate ``f``, which maps (w_1, ..., w_m) to a packed ell-bit codeword."""
    if m > EXHAUSTIVE_MAX_M:
        raise ValueError(f"truth tables are limited to m <= {EXHAUSTIVE_MAX_M}")
    vals = [f(tuple(t >> c & 1 for c in range(m))) for t in range(1 << m)]
    return EncoderTable(m, ell, np.asarray(vals, dtype=np.uint64))


def _observation_classes(enc: EncoderTable, side_mask: int):
    """Group message tuples by what the user sees: (codeword, side information)."""
    w = np.arange(1 << enc.m, dtype=np.uint64)
    key = (enc.table.astype(np.uint64) << np.uint64(enc.m)) | (w & np.uint64(side_mask))
    _, inv = np.unique(key, return_inverse=True)
    return w, inv, np.bincount(inv)


def _check_exhaustive(enc: EncoderTable, inst: Instance, cap: int) -> None:
    if enc.m != inst.m:
        raise DimensionMismatch(f"encoder has m={enc.m}, instance has m={inst.m}")
    if enc.m > cap:
        raise ValueError(f"exhaustive evaluation is limited to m <= {cap}")


def decodable_set_exhaustive(enc: EncoderTable, inst: Instance, i: int) -> frozenset[int]:
    """Messages outside A_i that are a deterministic function of user i's view."""
    _check_exhaustive(enc, inst, EXHAUSTIVE_MAX_M)
    a = inst.side_info(i)
    w, inv, counts = _observation_classes(enc, inst.side_masks[i - 1])
    out = set()
    for j in range(1, inst.m + 1):
        if j in a:
            continue
        bit = ((w >> np.uint64(j - 1)) & np.uint64(1)).astype(np.int64)
        ones = np.bincount(inv, weights=bit, minlength=len(counts))
        if np.all((ones == 0) | (ones == counts)):
            out.add(j)
    return frozenset(out)


def _binary_entropy(p: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        h = -(p * np.log2(p) + (1 - p) * np.log2(1 - p))
    return np.where((p == 0) | (p == 1), 0.0, np.where(p == 0.5, 1.0, h))


def privacy_entropy_report(enc: EncoderTable, inst: Instance) -> dict[tuple[int, int], float]:
    """H(w_j | x, W_{A_i}) in bits for every user i and every j outside A_i.

    Messages are uniform and independent, so the entropy is the
    class-weighted binary entropy of w_j within each observation class.
    """
    _check_exhaustive(enc, inst, ENTROPY_MAX_M)
    total = float(1 << enc.m)
    report = {}
    for i in inst.users:
        a = inst.side_info(i)
        w, inv, counts = _observation_classes(enc, inst.side_masks[i - 1])
        for j in range(1, inst.m + 1):
            if j in a:
                continue
            bit = ((w >> np.uint64(j - 1)) & np.uint64(1)).astype(np.int64)
            ones = np.bincount(inv, weights=bit, minlength=len(counts))
            h = _binary_entropy(ones / counts)
            report[(i, j)] = float(np.dot(counts, h) / total)
    return report


def validate_exhaustive(enc: EncoderTable, inst: Instance, strict: bool = True) -> Verdict:
    """Verdict for an arbitrary encoder.

    In strict mode any partial leak (entropy below one bit) about a message
    the user must not learn is a privacy violation, not just full decoding.
    """
    decodable = {i: decodable_set_exhaustive(enc, inst, i) for i in inst.users}
    leaky = []
    if strict:
        report = privacy_entropy_report(enc, inst)
        for i, d in decodable.items():
            allowed = d if len(d) == 1 else frozenset()
            if any(h < 1.0 for (u, j), h in report.items() if u == i and j not in allowed):
                leaky.append(i)
    return _verdict(decodable, leaky)


def entropy_report_csv(report: Mapping[tuple[int, int], float]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["user", "message", "entropy_bits"])
    for (i, j), h in sorted(report.items()):
        writer.writerow([i, j, repr(h)])
    return buf.getvalue()
