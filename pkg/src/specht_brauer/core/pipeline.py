"""High level orchestration: one method per command, configured by ``Settings``."""

from __future__ import annotations

import logging
import random
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..config import Settings
from .blocks import (
    block_report,
    blocks_of,
    height_zero_report,
    two_row_report,
    verify_initial_dimension,
    verify_local_structure,
)
from .brauer import brauer_image_nonzero, brauer_quotient, vertex_certificate
from .combinatorics import (
    Partition,
    Tableau,
    character_height,
    classify_tableau,
    greatest_tableau,
    hook_dimension,
    hook_lengths,
    p_core_and_weight,
    p_quotient,
    row_straighten,
    tableau_dominates,
)
from .errors import InvalidInputError
from .groups import Permutation, generate, h_group_generators, h_group_order, standard_generators
from .linalg import FpVector
from .models import (
    BlocksReport,
    BrauerReport,
    CoreReport,
    DimensionReport,
    EndomorphismReport,
    HGroupReport,
    InitialReport,
    StraightenReport,
    StraightenTerm,
    TwoRowReport,
    VertexCertificate,
)
from .specht import SpechtModule, endomorphism_dimension, format_vector, is_indecomposable, specht_module
from .utils import dump_json, load_json, now_timestamp, require_prime


LOGGER = logging.getLogger(__name__)


def parse_generators(text: str, degree: int) -> List[Permutation]:
    """Parse ``"(1,2);(3,4,5)"`` into permutations of ``degree``."""

    if text is None or not text.strip():
        raise InvalidInputError("Expected at least one generator")
    return [Permutation.parse(chunk, degree) for chunk in text.split(";") if chunk.strip()]


def _tableau_label(t: Tableau) -> str:
    return "e[" + "|".join(",".join(str(entry) for entry in row) for row in t.rows) + "]"


class Processor:
    """Runs the verification pipelines under the configured limits."""

    def __init__(self, settings: Settings) -> None:
        self.settings = settings
        self.limits = settings.limits
        self._bases: Dict[Tuple[Partition, int], SpechtModule] = {}

    def _standard_basis(self, shape: Partition, p: int) -> SpechtModule:
        """S^shape without generator actions, reused across straightening calls."""

        key = (shape, p)
        if key not in self._bases:
            self._bases[key] = specht_module(shape, p, [], max_dim=self.limits.max_dim, cap=self.limits.max_group_order)
        return self._bases[key]

    def _rng(self) -> random.Random:
        return random.Random(self.settings.random_seed)

    def core(self, shape: Partition, p: int) -> CoreReport:
        label = p_core_and_weight(shape, p)
        return CoreReport(
            shape=shape,
            label=label,
            quotient=p_quotient(shape, p),
            dimension=hook_dimension(shape),
            height=character_height(shape, p),
        )

    def dimension(self, shape: Partition) -> DimensionReport:
        table = hook_lengths(shape).hook_length
        rows = [[table[(row, column)] for column in range(1, length + 1)] for row, length in enumerate(shape.parts, start=1)]
        return DimensionReport(shape=shape, dimension=hook_dimension(shape), hook_rows=rows)

    def straighten(self, tableau: Tableau, p: int) -> StraightenReport:
        require_prime(p)
        module = self._standard_basis(tableau.shape, p)
        coordinates = module.coordinates_of(tableau)
        flags = classify_tableau(tableau)
        leading = row_straighten(tableau)
        terms: List[StraightenTerm] = []
        leading_coefficient: Optional[int] = None
        for index in coordinates.support():
            s = module.tableaux[index]
            value = int(coordinates.data[index])
            if s == leading:
                leading_coefficient = value
            terms.append(StraightenTerm(_tableau_label(s), value, s != leading and tableau_dominates(leading, s)))
        triangular = None
        if flags.column_standard:
            triangular = leading_coefficient == 1 and all(term.dominated for term in terms if term.tableau != _tableau_label(leading))
        return StraightenReport(
            tableau=str(tableau),
            p=p,
            column_standard=flags.column_standard,
            row_straightened=str(leading),
            terms=terms,
            leading_coefficient=leading_coefficient,
            triangular=triangular,
            formatted=format_vector(coordinates, [_tableau_label(s) for s in module.tableaux]),
        )

    def hgroup(self, shape: Partition) -> HGroupReport:
        t = greatest_tableau(shape)
        return HGroupReport(shape=shape, tableau=str(t), generators=h_group_generators(t), order=h_group_order(t))

    def vertex_certificate(self, shape: Partition, p: int) -> VertexCertificate:
        require_prime(p)
        return vertex_certificate(shape, p, max_dim=self.limits.max_dim, cap=self.limits.max_group_order)

    def brauer(self, shape: Partition, p: int, q_text: str) -> BrauerReport:
        require_prime(p)
        q = generate(parse_generators(q_text, shape.n), self.limits.max_group_order, degree=shape.n)
        module = specht_module(
            shape,
            p,
            standard_generators(shape.n) + list(q.generators),
            max_dim=self.limits.max_dim,
            cap=self.limits.max_group_order,
        )
        bq = brauer_quotient(module.module, q, cap=self.limits.max_group_order)
        t = greatest_tableau(shape)
        e_t = FpVector(p, np.eye(module.dimension, dtype=np.int64)[module.tableaux.index(t)])
        fixed = bq.fixed.contains(e_t)
        return BrauerReport(
            shape=shape,
            p=p,
            q_generators=list(q.generators),
            q_order=q.order,
            specht_dim=module.dimension,
            fixed_dim=bq.fixed.dimension,
            radical_dim=bq.radical.dimension,
            quotient_dim=bq.dimension,
            e_t_fixed=fixed,
            e_t_nonzero=brauer_image_nonzero(module.module, e_t, q, quotient=bq) if fixed else None,
        )

    def block(self, n: int, p: int, core: Optional[Partition] = None) -> BlocksReport:
        require_prime(p)
        if n < 0:
            raise InvalidInputError(f"n must be nonnegative, got {n}")
        cores = [core] if core is not None else list(blocks_of(n, p))
        blocks = [block_report(n, p, current) for current in cores]
        summaries_by_core = {summary.label.core: summary for summary in height_zero_report(n, p).blocks}
        return BlocksReport(n=n, p=p, blocks=blocks, summaries=[summaries_by_core[current] for current in cores])

    def initial(self, core: Partition, w: int, p: int, r: Optional[int] = None) -> InitialReport:
        require_prime(p)
        dimension = verify_initial_dimension(core, w, p)
        local = None
        if r is not None:
            local = verify_local_structure(
                core,
                w,
                r,
                p,
                max_dim=self.limits.max_dim,
                cap=self.limits.max_group_order,
                search_limit=self.limits.normalizer_search,
                entry_limit=self.limits.intertwiner_entries,
                rng=self._rng(),
            )
        return InitialReport(dimension=dimension, local=local)

    def two_row(self, n: int, p: int) -> TwoRowReport:
        return two_row_report(n, p, max_dim=self.limits.max_dim, cap=self.limits.max_group_order)

    def endomorphisms(self, shape: Partition, p: int) -> EndomorphismReport:
        require_prime(p)
        module = specht_module(shape, p, max_dim=self.limits.max_dim, cap=self.limits.max_group_order).module
        dimension = endomorphism_dimension(module, entry_limit=self.limits.intertwiner_entries)
        indecomposable = is_indecomposable(
            module,
            entry_limit=self.limits.intertwiner_entries,
            enumeration_limit=self.limits.endomorphism_enumeration,
            random_trials=self.limits.random_trials,
            rng=self._rng(),
        )
        return EndomorphismReport(
            shape=shape,
            p=p,
            module_dim=module.dimension,
            endomorphism_dim=dimension,
            verdict="indecomposable" if indecomposable else "decomposable",
        )

    def persist_record(self, command: str, arguments: dict, record: dict, *, exit_code: int = 0) -> Optional[Path]:
        """Write ``run_<timestamp>.json`` to the log folder when one is configured."""

        log_folder = self.settings.paths.log_folder
        if log_folder is None:
            return None
        run_id = now_timestamp()
        log_path = log_folder / f"run_{run_id}.json"
        payload = {
            "run_id": run_id,
            "created_at": datetime.now(timezone.utc).isoformat(),
            "command": command,
            "arguments": arguments,
            "exit_code": exit_code,
            "limits": self.limits.dict(),
            "record": record,
        }
        dump_json(log_path, payload)
        LOGGER.info("Run %s (%s) written to %s", run_id, command, log_path)
        return log_path

    def list_runs(self) -> List[dict]:
        log_folder = self.settings.paths.log_folder
        if log_folder is None or not log_folder.exists():
            return []
        runs = [load_json(path) for path in sorted(log_folder.glob("run_*.json"))]
        runs.sort(key=lambda entry: entry.get("created_at", ""), reverse=True)
        return runs


__all__ = ["Processor", "parse_generators"]
