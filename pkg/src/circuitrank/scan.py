"""Per-graph verification pipeline, invariant records and report writers."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from . import bounds, exact
from .bounds import BoundReport, GraphProfile
from .cycles import DEFAULT_CYCLE_CAP, DEFAULT_NODE_BUDGET
from .graph import Graph

SCHEMA = "1"
REPORT_FIELDS = ("graph_index", "case", "lhs", "rhs", "holds", "equality", "tau_exact", "notes")
DEFAULT_ALPHAS = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))


@dataclass
class ScanConfig:
    input: str = "-"
    theorems: frozenset[str] | None = None  # None means every case
    jobs: int = 1
    tau_mode: str = "exact"
    tau_budget: int = DEFAULT_NODE_BUDGET
    cycle_cap: int = DEFAULT_CYCLE_CAP
    output_format: str = "csv"
    output: str = "-"
    alphas: Sequence[Fraction] = DEFAULT_ALPHAS
    # restrict the eigenvalue sweep to one value; None sweeps all candidates
    lam: Fraction | None = None
    kinds: Sequence[str] = exact.KINDS

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.tau_budget < 0:
            raise ValueError("tau budget must be >= 0")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.tau_mode not in ("exact", "greedy"):
            raise ValueError(f"unknown tau mode {self.tau_mode!r}")
        if self.theorems is not None:
            bad = [t for t in self.theorems if not any(c.startswith(t) for c in bounds.CASE_IDS)]
            if bad:
                raise ValueError(f"unknown case ids: {', '.join(sorted(bad))}")

        self._wanted = frozenset(
            c for c in bounds.CASE_IDS if self.theorems is None or any(c.startswith(t) for t in self.theorems)
        )

    def wants(self, case_id: str) -> bool:
        return case_id in self._wanted

    def wants_any(self, *prefixes: str) -> bool:
        return any(c.startswith(p) for p in prefixes for c in self._wanted)


def verify_graph(g: Graph | GraphProfile, config: ScanConfig, ref=0) -> list[BoundReport]:
    """Run every selected check on one graph, in a fixed order.

    A prebuilt ``GraphProfile`` may be passed to reuse (or inspect) its invariants.
    """
    if isinstance(g, GraphProfile):
        p, g = g, g.graph
    else:
        p = GraphProfile(g, ref, config.tau_mode, config.tau_budget, config.cycle_cap)
    out: list[BoundReport] = []
    if config.wants_any("THMMAIN", "THMEV", "THMTIRT", "INQ_"):
        out += bounds.check_2nullity_bounds(p)
    if config.wants_any("LEMTAU", "PROPMAIN"):
        out += bounds.check_lemtau_propmain(p)
    if config.wants_any("LEMNULL", "THETHM"):
        for kind in config.kinds:
            lams = [config.lam] if config.lam is not None else exact.integer_eigenvalue_candidates(g, kind)
            lams = [x for x in lams if Fraction(x).denominator == 1]
            p.multiplicities(kind, lams)
            for lam in lams:
                lam = int(lam)
                out.append(bounds.check_lemnull(p, kind, lam))
                out.append(bounds.check_thethm(p, kind, lam))
    if config.wants_any("TABLE1"):
        for alpha in config.alphas:
            lams = [config.lam] if config.lam is not None else exact.alpha_eigenvalue_candidates(g, alpha)
            out += bounds.check_table1_many(p, alpha, lams)
    if config.wants_any("PRIOR"):
        out.append(bounds.check_prior_bound(p))
    if config.wants_any("LEM8"):
        out += bounds.check_lem8(p)
    return [r for r in out if config.wants(r.case.id)]


def invariants_record(g: Graph, ref=0, tau_mode="exact", tau_budget=DEFAULT_NODE_BUDGET,
                      cycle_cap=DEFAULT_CYCLE_CAP) -> dict:
    p = GraphProfile(g, ref, tau_mode, tau_budget, cycle_cap)
    s = p.stats
    nul = p.nullities
    return {
        "graph_index": ref,
        "v": s.v,
        "e": s.e,
        "c": s.c,
        "c_e": s.c_e,
        "v_e": s.v_e,
        "v_o": s.v_o,
        "theta": s.theta,
        "beta": p.beta,
        "tau": p.tau.value,
        "tau_exact": p.tau.exact,
        "null2_A": nul["A"],
        "null2_A_plus_I": nul["A+I"],
        "null2_P": nul["P"],
        "null2_P_plus_I": nul["P+I"],
    }


INVARIANT_FIELDS = tuple(invariants_record(Graph(0, ())).keys()) + ("error",)


def report_row(r: BoundReport) -> dict:
    return {
        "graph_index": r.graph_ref,
        "case": str(r.case),
        "lhs": r.lhs,
        "rhs": r.rhs,
        "holds": r.holds,
        "equality": r.equality,
        "tau_exact": r.tau_exact,
        "notes": r.notes,
    }


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


class RowWriter:
    """Writes dict rows as CSV (header first) or JSON lines (schema line first)."""

    def __init__(self, stream, fmt: str, fields: Sequence[str]):
        self.stream = stream
        self.fmt = fmt
        self.fields = tuple(fields)
        if fmt == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(self.fields)
        else:
            stream.write(json.dumps({"schema": SCHEMA, "fields": list(self.fields)}) + "\n")

    def write(self, row: dict) -> None:
        if self.fmt == "csv":
            self._csv.writerow([_csv_value(row.get(k)) for k in self.fields])
        else:
            self.stream.write(json.dumps({k: row.get(k) for k in self.fields}) + "\n")


def _verify_task(args):
    index, g, config = args
    if isinstance(g, Exception):
        return index, g
    return index, verify_graph(g, config, index)


def iter_verified(items: Iterable[tuple[int, object]], config: ScanConfig) -> Iterator[tuple[int, object]]:
    """Yield ``(index, reports-or-error)`` in input order, using ``config.jobs`` workers."""
    tasks = ((i, g, config) for i, g in items)
    if config.jobs == 1:
        yield from map(_verify_task, tasks)
        return
    with Pool(config.jobs) as pool:
        yield from pool.imap(_verify_task, tasks, chunksize=8)


@dataclass
class ScanSummary:
    graphs: int = 0
    parse_errors: int = 0
    counts: Counter = field(default_factory=Counter)

    @property
    def failures(self) -> int:
        return self.counts["failure"]

    def __str__(self) -> str:
        parts = [f"graphs={self.graphs}", f"parse_errors={self.parse_errors}"]
        parts += [f"{k}={self.counts[k]}" for k in ("holds", "equality", "not_falsifiable", "inapplicable", "failure")]
        return " ".join(parts)


def run_verify(items: Iterable[tuple[int, object]], config: ScanConfig, stream) -> ScanSummary:
    writer = RowWriter(stream, config.output_format, REPORT_FIELDS)
    summary = ScanSummary()
    for _, result in iter_verified(items, config):
        if isinstance(result, Exception):
            summary.parse_errors += 1
            continue
        summary.graphs += 1
        for r in result:
            summary.counts[r.status] += 1
            writer.write(report_row(r))
    return summary


def verify_to_string(graphs: Sequence[Graph], config: ScanConfig) -> str:
    buf = io.StringIO()
    run_verify(enumerate(graphs), config, buf)
    return buf.getvalue()
