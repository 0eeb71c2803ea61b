"""Batch sweeps: exact dimension plus every applicable construction, as CSV rows."""
from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from . import constructions
from .exceptions import BoundExceeded, BudgetExceeded, ResolveDimError
from .families import SEEDED, FamilySpec, generate
from .graph import Graph
from .metric import alike_partition, metric_dimension_exact
from .recognition import chromatic_coloring, is_bipyramid

COLUMNS = ["family", "params", "n_total", "beta_exact", "method", "bound_size",
           "bound_formula", "verified", "seconds"]
CONJECTURE_COLUMN = "beta_minus_2n5"


@dataclass
class SweepRow:
    family: str
    params: str
    n_total: int
    beta_exact: int | None
    method: str
    bound_size: int | None
    bound_formula: int | None
    verified: bool
    seconds: float | None = None
    beta_minus_2n5: int | None = None
    error: str = ""

    def as_record(self, conjecture: bool) -> list[str]:
        def cell(x) -> str:
            if x is None:
                return ""
            if isinstance(x, bool):
                return "true" if x else "false"
            if isinstance(x, float):
                return f"{x:.4f}"
            return str(x)

        out = [self.family, self.params, self.n_total, self.beta_exact, self.method,
               self.bound_size, self.bound_formula, self.verified, self.seconds]
        if conjecture:
            out.append(self.beta_minus_2n5)
        out.append(self.error)
        return [cell(x) for x in out]


def header(conjecture: bool) -> list[str]:
    return COLUMNS + ([CONJECTURE_COLUMN] if conjecture else []) + ["error"]


def bound_formula(g: Graph, method: str, budget: int | None = None) -> int | None:
    n = g.n
    if method == "hamiltonian":
        return constructions.ceil_half(n)
    if method == "outerplanar":
        return 2 * n // 3
    if method == "maxplanar":
        return 3 * n // 4
    if method == "bipyramid":
        return constructions.bipyramid_dimension(is_bipyramid(g).rim_size)
    if method == "coloring":
        chi = chromatic_coloring(g, budget).num_colors
        return constructions.coloring_bound(n, chi, alike_partition(g).s)
    return None


def _label(g: Graph) -> tuple[str, str]:
    fam = g.family or {"name": "graph", "params": {}}
    return fam["name"], FamilySpec(fam["name"], fam["params"]).label()


def graph_rows(g: Graph, budget: int | None = None, timing: bool = False,
               conjecture: bool = False) -> Iterator[SweepRow]:
    """One row per applicable construction on ``g``."""
    family, params = _label(g)
    beta: int | None = None
    beta_error = ""
    t0 = time.perf_counter()
    try:
        beta = metric_dimension_exact(g, budget).beta
    except BudgetExceeded:
        beta_error = "BudgetExceeded"
    beta_secs = time.perf_counter() - t0
    gap = beta - 2 * g.n // 5 if (conjecture and beta is not None) else None
    for method in constructions.applicable_methods(g):
        t0 = time.perf_counter()
        size = None
        verified = False
        error = beta_error
        try:
            report = constructions.construct(g, method, budget)
            size, formula, verified = report.size, report.bound, report.verified
        except ResolveDimError as exc:
            error = type(exc).__name__
            try:
                formula = bound_formula(g, method, budget)
            except ResolveDimError:
                formula = None
            if isinstance(exc, BoundExceeded):
                formula = exc.bound
        secs = (time.perf_counter() - t0 + beta_secs) if timing else None
        yield SweepRow(family, params, g.n, beta, method, size, formula, verified, secs, gap, error)


def family_specs(names: Iterable[str], n_values: Iterable[int], seed: int) -> list[FamilySpec]:
    specs = []
    for name in names:
        for n in n_values:
            params = {"n": n}
            if name in SEEDED:
                params["seed"] = seed
            specs.append(FamilySpec(name, params))
    return specs


def write_sweep(graphs: Iterable[Graph], out: IO[str], budget: int | None = None,
                timing: bool = False, conjecture: bool = False) -> int:
    """Write rows for ``graphs`` in the given order; returns the row count.
    Rows are flushed as they are produced so an interrupted sweep leaves a
    usable prefix."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header(conjecture))
    count = 0
    for g in graphs:
        for row in graph_rows(g, budget, timing, conjecture):
            writer.writerow(row.as_record(conjecture))
            count += 1
        out.flush()
    return count


def generate_all(specs: Iterable[FamilySpec]) -> Iterator[Graph]:
    for spec in specs:
        yield generate(spec)
