from __future__ import annotations

import csv
import math
import time
from pathlib import Path
from typing import Callable, Iterable, List, Tuple

import numpy as np

from specht_brauer.config import Settings
from specht_brauer.core.brauer import brauer_image_nonzero
from specht_brauer.core.combinatorics import (
    Partition,
    column_standard_tableaux,
    greatest_tableau,
    hook_dimension,
    is_p_core,
    partitions_of,
    standard_tableaux,
)
from specht_brauer.core.errors import ResourceLimitError
from specht_brauer.core.groups import cyclic_p_subgroups, h_group
from specht_brauer.core.linalg import FpVector, rank
from specht_brauer.core.pipeline import Processor
from specht_brauer.core.specht import specht_module

CONFIG_PATH = Path("config.sweeps.yaml")

STRAIGHTEN_MAX_N = 7
VERTEX_MAX_N = 7
INITIAL_MAX_N = 20
MINIMALITY_MAX_N = 14
HEIGHT_MAX_N = 10
TWO_ROW_RANGE = range(4, 13)
ENDO_MAX_N = 6

# A check yields (case label, passed) pairs.
Check = Callable[[Processor], Iterable[Tuple[str, bool]]]


def straightening(processor: Processor) -> Iterable[Tuple[str, bool]]:
    for n in range(1, STRAIGHTEN_MAX_N + 1):
        for shape in partitions_of(n):
            for t in column_standard_tableaux(shape):
                for p in (2, 3):
                    yield f"{t} p={p}", bool(processor.straighten(t, p).triangular)


def standard_basis(processor: Processor) -> Iterable[Tuple[str, bool]]:
    for n in range(1, VERTEX_MAX_N + 1):
        shapes = partitions_of(n)
        total = sum(processor.dimension(shape).dimension ** 2 for shape in shapes)
        yield f"n={n}", total == math.factorial(n)
        for shape in shapes:
            for p in (2, 3, 5):
                module = specht_module(shape, p, [], max_dim=processor.limits.max_dim, cap=processor.limits.max_group_order)
                ok = module.dimension == len(standard_tableaux(shape)) == hook_dimension(shape)
                yield f"{shape} p={p} rank", ok and rank(module.embedding.data, p) == module.dimension


def vertex_lower_bounds(processor: Processor) -> Iterable[Tuple[str, bool]]:
    for n in range(1, VERTEX_MAX_N + 1):
        for shape in partitions_of(n):
            for p in (2, 3):
                yield f"{shape} p={p}", processor.vertex_certificate(shape, p).nonzero
                yield from _cyclic_survivals(processor, shape, p)


def initial_dimensions(processor: Processor) -> Iterable[Tuple[str, bool]]:
    for p in (2, 3, 5):
        for size in range(INITIAL_MAX_N + 1):
            for core in (shape for shape in partitions_of(size) if is_p_core(shape, p)):
                for w in range((INITIAL_MAX_N - size) // p + 1):
                    report = processor.initial(core, w, p).dimension
                    ok = report.equality_holds
                    if size + w * p <= MINIMALITY_MAX_N:
                        ok = ok and report.minimality_holds
                    yield f"core={core} w={w} p={p}", ok


def height_zero(processor: Processor) -> Iterable[Tuple[str, bool]]:
    for p in (2, 3):
        for n in range(1, HEIGHT_MAX_N + 1):
            for summary in processor.block(n, p).summaries:
                ok = summary.consistent and (summary.witness is None) == (summary.weight < p)
                yield f"n={n} p={p} core={summary.label.core}", ok


def two_row(processor: Processor) -> Iterable[Tuple[str, bool]]:
    for p in (3, 5, 7):
        for n in TWO_ROW_RANGE:
            report = processor.two_row(n, p)
            ok = report.dimension == n * (n - 3) // 2 and report.core_matches and report.consistent is not False
            if report.case == "coprime":
                ok = ok and report.vertex_is_defect_group is True
            yield f"n={n} p={p}", ok


def endomorphisms(processor: Processor) -> Iterable[Tuple[str, bool]]:
    for n in range(1, ENDO_MAX_N + 1):
        for shape in partitions_of(n):
            if _distinct(shape):
                yield f"{shape} p=2", processor.endomorphisms(shape, 2).verdict == "indecomposable"
            yield f"{shape} p=3", processor.endomorphisms(shape, 3).verdict == "indecomposable"
    report = processor.endomorphisms(Partition((5, 1, 1)), 2)
    yield "5,1,1 p=2", report.verdict == "decomposable" and report.module_dim == hook_dimension(Partition((5, 1, 1)))


SWEEPS: Tuple[Tuple[str, Check], ...] = (
    ("straightening", straightening),
    ("standard_basis", standard_basis),
    ("vertex_lower_bounds", vertex_lower_bounds),
    ("initial_dimensions", initial_dimensions),
    ("height_zero", height_zero),
    ("two_row", two_row),
    ("endomorphisms", endomorphisms),
)


def _cyclic_survivals(processor: Processor, shape: Partition, p: int) -> Iterable[Tuple[str, bool]]:
    """e_t survives at every cyclic p-subgroup of H(t)."""

    t = greatest_tableau(shape)
    module = specht_module(shape, p, max_dim=processor.limits.max_dim, cap=processor.limits.max_group_order)
    e_t = FpVector(p, np.eye(module.dimension, dtype=np.int64)[module.tableaux.index(t)])
    for q in cyclic_p_subgroups(h_group(t, processor.limits.max_group_order), p):
        if q.order > 1:
            yield f"{shape} p={p} <{q.generators[0]}>", brauer_image_nonzero(module.module, e_t, q)


def _distinct(shape: Partition) -> bool:
    return len(set(shape.parts)) == len(shape.parts)


def run_sweep(processor: Processor, name: str, check: Check) -> Tuple[object, ...]:
    started = time.perf_counter()
    cases = 0
    violations: List[str] = []
    skipped = 0
    try:
        for label, ok in check(processor):
            cases += 1
            if not ok:
                violations.append(label)
    except ResourceLimitError as exc:
        skipped += 1
        violations.append(f"stopped: {exc}")
    elapsed = round(time.perf_counter() - started, 2)
    return (name, cases, len(violations) - skipped, skipped, elapsed, "; ".join(violations[:5]))


def main() -> None:
    settings = Settings.load(CONFIG_PATH)
    processor = Processor(settings)

    reports_dir = Path("reports")
    reports_dir.mkdir(parents=True, exist_ok=True)
    scoreboard_path = reports_dir / "scoreboard.csv"

    rows: List[Tuple[object, ...]] = [
        ("sweep", "cases", "violations", "stopped_by_limit", "seconds", "first_failures"),
    ]
    for name, check in SWEEPS:
        row = run_sweep(processor, name, check)
        rows.append(row)
        print(f"{name}: {row[1]} cases, {row[2]} violations")

    with scoreboard_path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerows(rows)

    print("Verification sweeps completed. Scoreboard available at", scoreboard_path)


if __name__ == "__main__":
    main()
