"""Closed-form code-length predictions for circular-shift private PICOD(1)."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

from .instance import Instance


class CaseTag(str, Enum):
    INFEASIBLE = "Infeasible"
    TIGHT_IT = "TightIT"
    LINEAR_BAND = "LinearBand"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class BoundReport:
    case_tag: CaseTag
    it_optimal: int | None = None
    lin_lower: int | None = None
    lin_upper: int | None = None

    @property
    def upper(self) -> int | None:
        """Length the constructive schemes are expected to hit."""
        return self.it_optimal if self.case_tag is CaseTag.TIGHT_IT else self.lin_upper

    def to_dict(self) -> dict:
        d = asdict(self)
        d["case_tag"] = self.case_tag.value
        return d


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def disjoint_users_bound(m: int, s: int) -> int:
    """ceil(floor(m/s) / 2): half the number of users with disjoint windows."""
    return _ceil_div(m // s, 2)


def infeasibility_clause(inst: Instance) -> str | None:
    if inst.m % 2 == 1 and inst.g == 1:
        if inst.s == 1:
            return "m odd, g=1, s=1"
        if inst.s == inst.m - 2:
            return "m odd, g=1, s=m-2"
    return None


def is_infeasible(inst: Instance) -> bool:
    return infeasibility_clause(inst) is not None


def classify(inst: Instance, one_factor: bool) -> BoundReport:
    m, s, g = inst.m, inst.s, inst.g
    if is_infeasible(inst):
        return BoundReport(CaseTag.INFEASIBLE)
    if s == 0:
        return BoundReport(CaseTag.UNCLASSIFIED)
    tight = 1 if one_factor else 2
    # s = m/2 belongs to the large-s regime
    if 2 * s >= m:
        return BoundReport(CaseTag.TIGHT_IT, it_optimal=tight)
    if g >= 3 or (g == 2 and s != 2):
        return BoundReport(CaseTag.TIGHT_IT, it_optimal=tight)
    lower = disjoint_users_bound(m, s)
    upper = lower if m % s == 0 else lower + 1
    return BoundReport(CaseTag.LINEAR_BAND, lin_lower=lower, lin_upper=upper)
