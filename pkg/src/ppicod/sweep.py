"""Parameter sweeps tabulating bounds, constructions and oracle results."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Iterable

from .bounds import CaseTag, classify
from .errors import CapExceeded, InfeasibleInstance, PicodError
from .instance import Instance, build_nth, find_one_factor
from .oracle import SEARCH_BUDGET, optimal_linear_length, search_cost
from .schemes import construct

CSV_HEADER = [
    "m", "s", "h", "g", "n", "one_factor", "case",
    "lin_lower", "lin_upper", "constructed_ell", "oracle_ell", "verdict",
]


@dataclass(frozen=True)
class SweepRow:
    m: int
    s: int
    h: int
    g: int
    n: int
    one_factor: bool
    case: str
    lin_lower: int | None
    lin_upper: int | None
    constructed_ell: int | None
    oracle_ell: int | None
    verdict: str


def parse_range(text: str) -> list[int]:
    """'4..12', '5..9:2', '3' or '1,2,5' (ranges are inclusive)."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        step = 1
        if ":" in part:
            part, step_text = part.split(":", 1)
            step = int(step_text)
            if step < 1:
                raise ValueError(f"bad step in {text!r}")
        if ".." in part:
            lo, hi = (int(x) for x in part.split("..", 1))
            out.extend(range(lo, hi + 1, step))
        else:
            out.append(int(part))
    return out


def sweep_row(inst: Instance, oracle_cap: int | None = None) -> SweepRow:
    factor = find_one_factor(build_nth(inst))
    report = classify(inst, factor is not None)
    constructed = oracle = None
    if report.case_tag is CaseTag.INFEASIBLE:
        verdict = "Infeasible"
    elif report.case_tag is CaseTag.UNCLASSIFIED:
        verdict = "Unclassified"
    else:
        try:
            constructed = construct(inst).ell
            verdict = "Valid"
        except InfeasibleInstance:
            verdict = "Infeasible"
        except PicodError as e:
            verdict = f"Error: {e}"
    if oracle_cap and verdict == "Valid":
        ell_max = min(oracle_cap, inst.m)
        if search_cost(inst.m, ell_max) <= SEARCH_BUDGET:
            try:
                res = optimal_linear_length(inst, ell_max)
            except CapExceeded:
                res = None
            if res is not None and res.found:
                oracle = res.ell_star
    return SweepRow(
        inst.m, inst.s, inst.h, inst.g, inst.n, factor is not None, report.case_tag.value,
        report.lin_lower, report.lin_upper, constructed, oracle, verdict,
    )


def _row_job(args):
    m, s, h, cap = args
    return sweep_row(Instance(m, s, h), cap)


def sweep(
    ms: Iterable[int],
    ss: Iterable[int],
    hs: Iterable[int],
    oracle_cap: int | None = None,
    workers: int = 1,
) -> list[SweepRow]:
    """One row per valid (m, s, h); combinations with s > m-1 are skipped."""
    ss, hs = list(ss), list(hs)
    jobs = [
        (m, s, h, oracle_cap)
        for m in ms for s in ss for h in hs
        if m >= 2 and 0 <= s <= m - 1 and h >= 1
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row_job, jobs, chunksize=4))
    else:
        rows = [_row_job(j) for j in jobs]
    return sorted(rows, key=lambda r: (r.m, r.s, r.h))


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([_cell(getattr(r, name)) for name in CSV_HEADER])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[SweepRow]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    types = {f.name: f.type for f in fields(SweepRow)}
    out = []
    for rec in reader:
        vals = {}
        for name in CSV_HEADER:
            raw = rec[name]
            kind = types[name]
            if kind == "bool":
                vals[name] = raw == "true"
            elif kind == "str":
                vals[name] = raw
            elif raw == "":
                vals[name] = None
            else:
                vals[name] = int(raw)
        out.append(SweepRow(**vals))
    return out


def rows_to_json(rows: Iterable[SweepRow]) -> list[dict]:
    return [asdict(r) for r in rows]
