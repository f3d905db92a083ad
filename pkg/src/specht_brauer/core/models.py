"""Dataclasses describing the reports produced by the pipelines.

Each report renders to a JSON-compatible record with a fixed key order via
``to_record()``; partitions print as ``"6,5,2"`` (``"-"`` when empty) and
permutations in cycle notation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .combinatorics import BlockLabel, Partition


def _partitions(values) -> List[str]:
    return [str(value) for value in values]


def _permutations(values) -> List[str]:
    return [str(value) for value in values]


@dataclass
class CoreReport:
    shape: Partition
    label: BlockLabel
    quotient: Tuple[Partition, ...]
    dimension: int
    height: int

    def to_record(self) -> dict:
        return {
            "lambda": str(self.shape),
            "p": self.label.p,
            "core": str(self.label.core),
            "weight": self.label.weight,
            "quotient": _partitions(self.quotient),
            "defect_exponent": self.label.defect_exponent,
            "dimension": self.dimension,
            "height": self.height,
        }


@dataclass
class DimensionReport:
    shape: Partition
    dimension: int
    hook_rows: List[List[int]]

    def to_record(self) -> dict:
        return {"lambda": str(self.shape), "dimension": self.dimension, "hook_lengths": self.hook_rows}


@dataclass
class StraightenTerm:
    tableau: str
    coefficient: int
    dominated: bool


@dataclass
class StraightenReport:
    tableau: str
    p: int
    column_standard: bool
    row_straightened: str
    terms: List[StraightenTerm]
    leading_coefficient: Optional[int]
    triangular: Optional[bool]
    formatted: str

    def to_record(self) -> dict:
        return {
            "tableau": self.tableau,
            "p": self.p,
            "column_standard": self.column_standard,
            "row_straightened": self.row_straightened,
            "expansion": [
                {"tableau": term.tableau, "coefficient": term.coefficient, "dominated": term.dominated}
                for term in self.terms
            ],
            "leading_coefficient": self.leading_coefficient,
            "triangular": self.triangular,
            "formatted": self.formatted,
        }


@dataclass
class HGroupReport:
    shape: Partition
    tableau: str
    generators: list
    order: int

    def to_record(self) -> dict:
        return {
            "lambda": str(self.shape),
            "tableau": self.tableau,
            "generators": _permutations(self.generators),
            "order": self.order,
        }


@dataclass
class VertexCertificate:
    """Lower-bound certificate: a Sylow p-subgroup of H(t) lies in a vertex."""

    shape: Partition
    p: int
    h_generators: list
    h_order: int
    sylow_generators: list
    sylow_order: int
    specht_dim: int
    quotient_dim: Optional[int]
    e_t_nonzero: bool
    method: str = "specht"

    @property
    def nonzero(self) -> bool:
        return self.e_t_nonzero

    def to_record(self) -> dict:
        return {
            "lambda": str(self.shape),
            "p": self.p,
            "h_generators": _permutations(self.h_generators),
            "h_order": self.h_order,
            "sylow_generators": _permutations(self.sylow_generators),
            "sylow_order": self.sylow_order,
            "specht_dim": self.specht_dim,
            "quotient_dim": self.quotient_dim,
            "e_t_nonzero": self.e_t_nonzero,
            "method": self.method,
        }


@dataclass
class BrauerReport:
    shape: Partition
    p: int
    q_generators: list
    q_order: int
    specht_dim: int
    fixed_dim: int
    radical_dim: int
    quotient_dim: int
    e_t_fixed: bool
    e_t_nonzero: Optional[bool]

    def to_record(self) -> dict:
        return {
            "lambda": str(self.shape),
            "p": self.p,
            "q_generators": _permutations(self.q_generators),
            "q_order": self.q_order,
            "specht_dim": self.specht_dim,
            "fixed_dim": self.fixed_dim,
            "radical_dim": self.radical_dim,
            "quotient_dim": self.quotient_dim,
            "e_t_fixed": self.e_t_fixed,
            "e_t_nonzero": self.e_t_nonzero,
        }


@dataclass
class BlockReport:
    label: BlockLabel
    n: int
    a: int
    b: int
    partitions: List[Partition]
    heights: Dict[Partition, int] = field(default_factory=dict)

    def to_record(self) -> dict:
        return {
            "p": self.label.p,
            "core": str(self.label.core),
            "weight": self.label.weight,
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "partitions": _partitions(self.partitions),
            "heights": {str(shape): self.heights[shape] for shape in self.partitions},
        }


@dataclass
class BlockHeightSummary:
    label: BlockLabel
    all_heights_zero: bool
    witness: Optional[Partition]
    witness_height: Optional[int]
    constructed_witness: Optional[Partition] = None

    @property
    def weight(self) -> int:
        return self.label.weight

    @property
    def consistent(self) -> bool:
        return self.all_heights_zero == (self.label.weight < self.label.p)

    def to_record(self) -> dict:
        return {
            "core": str(self.label.core),
            "weight": self.label.weight,
            "all_heights_zero": self.all_heights_zero,
            "witness": str(self.witness) if self.witness is not None else None,
            "witness_height": self.witness_height,
            "constructed_witness": str(self.constructed_witness) if self.constructed_witness is not None else None,
            "consistent": self.consistent,
        }


@dataclass
class HeightZeroReport:
    n: int
    p: int
    blocks: List[BlockHeightSummary]

    def to_record(self) -> dict:
        return {"n": self.n, "p": self.p, "blocks": [block.to_record() for block in self.blocks]}


@dataclass
class BlocksReport:
    """Blocks of S_n with their members, heights and height-zero verdicts."""

    n: int
    p: int
    blocks: List[BlockReport]
    summaries: List[BlockHeightSummary]

    def to_record(self) -> dict:
        records = []
        for block, summary in zip(self.blocks, self.summaries):
            record = block.to_record()
            summary_record = summary.to_record()
            for key in ("all_heights_zero", "witness", "witness_height", "constructed_witness", "consistent"):
                record[key] = summary_record[key]
            records.append(record)
        return {"n": self.n, "p": self.p, "blocks": records}


@dataclass
class InitialDimensionReport:
    core: Partition
    weight: int
    p: int
    partition: Partition
    a: int
    b: int
    initial_exponent: int
    exponents: Dict[Partition, int]

    @property
    def equality_holds(self) -> bool:
        return self.initial_exponent == self.a - self.b

    @property
    def minimality_holds(self) -> bool:
        return all(value >= self.a - self.b for value in self.exponents.values())

    def to_record(self) -> dict:
        return {
            "core": str(self.core),
            "w": self.weight,
            "p": self.p,
            "partition": str(self.partition),
            "a": self.a,
            "b": self.b,
            "initial_exponent": self.initial_exponent,
            "equality_holds": self.equality_holds,
            "minimality_holds": self.minimality_holds,
            "exponents": {str(shape): value for shape, value in self.exponents.items()},
        }


@dataclass
class LocalStructureReport:
    core: Partition
    weight: int
    r: int
    p: int
    partition: Partition
    x_points: List[int]
    y_points: List[int]
    q_generators: list
    q_order: int
    quotient_dim: int
    submodule_dim: int
    target: Partition
    target_dim: int
    submodule_isomorphic: bool
    normalizer_generators: list
    normalizer_acts_trivially: bool
    sylow_dimension_matches: Optional[bool]

    @property
    def passed(self) -> bool:
        return (
            self.submodule_isomorphic
            and self.normalizer_acts_trivially
            and self.sylow_dimension_matches is not False
        )

    def to_record(self) -> dict:
        return {
            "core": str(self.core),
            "w": self.weight,
            "r": self.r,
            "p": self.p,
            "partition": str(self.partition),
            "x": self.x_points,
            "y": self.y_points,
            "q_generators": _permutations(self.q_generators),
            "q_order": self.q_order,
            "quotient_dim": self.quotient_dim,
            "submodule_dim": self.submodule_dim,
            "target": str(self.target),
            "target_dim": self.target_dim,
            "submodule_isomorphic": self.submodule_isomorphic,
            "normalizer_generators": _permutations(self.normalizer_generators),
            "normalizer_acts_trivially": self.normalizer_acts_trivially,
            "sylow_dimension_matches": self.sylow_dimension_matches,
            "passed": self.passed,
        }


@dataclass
class InitialReport:
    dimension: InitialDimensionReport
    local: Optional[LocalStructureReport]

    def to_record(self) -> dict:
        return {
            "dimension": self.dimension.to_record(),
            "local_structure": self.local.to_record() if self.local is not None else None,
        }


@dataclass
class TwoRowReport:
    n: int
    p: int
    shape: Partition
    dimension: int
    dimension_formula: int
    dimension_exponent: int
    label: BlockLabel
    case: str
    expected_core: Optional[Partition]
    a: int
    lower_bound_order: Optional[int]
    lower_bound_source: Optional[str] = None

    @property
    def core_matches(self) -> bool:
        return self.expected_core is None or self.expected_core == self.label.core

    @property
    def defect_order(self) -> int:
        return self.p ** self.label.defect_exponent

    @property
    def consistent(self) -> Optional[bool]:
        """The certified vertex order does not exceed the defect group order."""

        if self.lower_bound_order is None:
            return None
        return self.lower_bound_order <= self.defect_order

    @property
    def vertex_is_defect_group(self) -> Optional[bool]:
        """The certified lower bound already reaches the defect group order."""

        if self.lower_bound_order is None:
            return None
        return self.lower_bound_order == self.defect_order

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "lambda": str(self.shape),
            "dimension": self.dimension,
            "dimension_formula": self.dimension_formula,
            "dimension_exponent": self.dimension_exponent,
            "case": self.case,
            "core": str(self.label.core),
            "expected_core": str(self.expected_core) if self.expected_core is not None else None,
            "core_matches": self.core_matches,
            "weight": self.label.weight,
            "a": self.a,
            "b": self.label.defect_exponent,
            "defect_order": self.defect_order,
            "lower_bound_order": self.lower_bound_order,
            "lower_bound_source": self.lower_bound_source,
            "consistent": self.consistent,
            "vertex_is_defect_group": self.vertex_is_defect_group,
        }


@dataclass
class EndomorphismReport:
    shape: Partition
    p: int
    module_dim: int
    endomorphism_dim: int
    verdict: str

    def to_record(self) -> dict:
        return {
            "lambda": str(self.shape),
            "p": self.p,
            "module_dim": self.module_dim,
            "endomorphism_dim": self.endomorphism_dim,
            "verdict": self.verdict,
        }


__all__ = [
    "CoreReport",
    "DimensionReport",
    "StraightenTerm",
    "StraightenReport",
    "HGroupReport",
    "VertexCertificate",
    "BrauerReport",
    "BlockReport",
    "BlockHeightSummary",
    "HeightZeroReport",
    "BlocksReport",
    "InitialDimensionReport",
    "LocalStructureReport",
    "InitialReport",
    "TwoRowReport",
    "EndomorphismReport",
]
