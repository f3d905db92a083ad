"""Block arithmetic of symmetric groups and the end-to-end verification reports."""

from __future__ import annotations

import itertools
import logging
import random
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .brauer import brauer_quotient, quotient_module, vertex_certificate
from .combinatorics import (
    BlockLabel,
    Partition,
    character_height,
    from_core_and_quotient,
    greatest_tableau,
    hook_dimension,
    initial_partition,
    is_p_core,
    nu_p,
    nu_p_factorial,
    p_core_and_weight,
    partitions_of,
)
from .errors import InvalidInputError, ResourceLimitError
from .groups import DEFAULT_GROUP_CAP, DEFAULT_NORMALIZER_SEARCH, Permutation, standard_generators, support_normalizer, sylow_generators, sylow_p
from .linalg import DEFAULT_INTERTWINER_ENTRIES, FpVector, matmul_mod
from .models import (
    BlockHeightSummary,
    BlockReport,
    HeightZeroReport,
    InitialDimensionReport,
    LocalStructureReport,
    TwoRowReport,
)
from .specht import is_isomorphic, restrict_to_submodule, specht_module, submodule_generated
from .utils import require_prime


LOGGER = logging.getLogger(__name__)


def _label(core: Partition, w: int, p: int) -> BlockLabel:
    return BlockLabel(p=p, core=core, weight=w, defect_exponent=nu_p_factorial(w * p, p))


def _admissible_weight(n: int, p: int, core: Partition) -> int:
    require_prime(p)
    if not is_p_core(core, p):
        raise InvalidInputError(f"{core} is not a {p}-core")
    difference = n - core.n
    if difference < 0 or difference % p:
        raise InvalidInputError(f"No {p}-block of S_{n} has core {core}")
    return difference // p


def block_members(n: int, p: int, core: Partition) -> List[Partition]:
    """Partitions of ``n`` with p-core ``core``."""

    _admissible_weight(n, p, core)
    return [shape for shape in partitions_of(n) if p_core_and_weight(shape, p).core == core]


def blocks_of(n: int, p: int) -> Dict[Partition, List[Partition]]:
    """Partitions of ``n`` grouped by p-core, cores in order of first appearance."""

    require_prime(p)
    grouped: Dict[Partition, List[Partition]] = {}
    for shape in partitions_of(n):
        grouped.setdefault(p_core_and_weight(shape, p).core, []).append(shape)
    return grouped


def block_report(n: int, p: int, core: Partition) -> BlockReport:
    w = _admissible_weight(n, p, core)
    members = block_members(n, p, core)
    label = _label(core, w, p)
    return BlockReport(
        label=label,
        n=n,
        a=nu_p_factorial(n, p),
        b=label.defect_exponent,
        partitions=members,
        heights={shape: character_height(shape, p) for shape in members},
    )


def verify_initial_dimension(core: Partition, w: int, p: int) -> InitialDimensionReport:
    """ν_p of dim S^μ over the block, against ``a - b`` attained at γ + wp."""

    initial = initial_partition(core, w, p)
    n = initial.n
    exponents = {shape: nu_p(hook_dimension(shape), p) for shape in block_members(n, p, core)}
    report = InitialDimensionReport(
        core=core,
        weight=w,
        p=p,
        partition=initial,
        a=nu_p_factorial(n, p),
        b=nu_p_factorial(w * p, p),
        initial_exponent=exponents[initial],
        exponents=exponents,
    )
    LOGGER.debug("Initial partition %s: exponent %s, a - b = %s", initial, report.initial_exponent, report.a - report.b)
    return report


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multipartitions(total: int, parts: int) -> Iterator[Tuple[Partition, ...]]:
    for sizes in _compositions(total, parts):
        for components in itertools.product(*(partitions_of(size) for size in sizes)):
            yield tuple(components)


def _quotient_height(components: Sequence[Partition], w: int, p: int) -> int:
    multinomial = nu_p_factorial(w, p) - sum(nu_p_factorial(component.n, p) for component in components)
    return multinomial + sum(nu_p(hook_dimension(component), p) for component in components)


def constructed_height_witness(core: Partition, w: int, p: int) -> Tuple[Partition, int]:
    """A partition of nonzero height in the block (γ, w) when ``w ≥ p``.

    Single-row quotient components with a multinomial coefficient divisible by
    ``p`` are tried first; when no composition of ``w`` gives one (for
    instance ``p = 2, w = 3``) any quotient of nonzero height is used.
    """

    require_prime(p)
    if w < p:
        raise InvalidInputError(f"Blocks of weight {w} < {p} have only height-zero characters")
    if not is_p_core(core, p):
        raise InvalidInputError(f"{core} is not a {p}-core")
    for sizes in _compositions(w, p):
        components = tuple(Partition((size,)) if size else Partition(()) for size in sizes)
        height = _quotient_height(components, w, p)
        if height > 0:
            return from_core_and_quotient(core, components, p), height
    for components in _multipartitions(w, p):
        height = _quotient_height(components, w, p)
        if height > 0:
            return from_core_and_quotient(core, components, p), height
    raise InvalidInputError(f"No quotient of nonzero height for weight {w} and p = {p}")


def height_zero_report(n: int, p: int) -> HeightZeroReport:
    summaries: List[BlockHeightSummary] = []
    for core, members in blocks_of(n, p).items():
        w = (n - core.n) // p
        heights = {shape: character_height(shape, p) for shape in members}
        nonzero = [shape for shape in members if heights[shape] > 0]
        witness = nonzero[0] if nonzero else None
        constructed = constructed_height_witness(core, w, p)[0] if w >= p else None
        summary = BlockHeightSummary(
            label=_label(core, w, p),
            all_heights_zero=not nonzero,
            witness=witness,
            witness_height=heights[witness] if witness is not None else None,
            constructed_witness=constructed,
        )
        if not summary.consistent:
            LOGGER.warning("Block with core %s and weight %s breaks the height-zero pattern", core, w)
        summaries.append(summary)
    return HeightZeroReport(n=n, p=p, blocks=summaries)


def defect_group_generators(core: Partition, w: int, p: int) -> List[Permutation]:
    """Sylow p-subgroup of the symmetric group on the last ``wp`` entries of row 1 of γ + wp."""

    initial = initial_partition(core, w, p)
    start = core.part(1)
    return sylow_generators(list(range(start + 1, start + w * p + 1)), p, initial.n)


def _points_map(points: Sequence[int]) -> Dict[int, int]:
    return {index: point for index, point in enumerate(points, start=1)}


def verify_local_structure(
    core: Partition,
    w: int,
    r: int,
    p: int,
    *,
    max_dim: Optional[int] = None,
    cap: int = DEFAULT_GROUP_CAP,
    search_limit: int = DEFAULT_NORMALIZER_SEARCH,
    entry_limit: int = DEFAULT_INTERTWINER_ENTRIES,
    rng: Optional[random.Random] = None,
) -> LocalStructureReport:
    """Check the structure of S^{γ+wp}(Q) for Q Sylow in the symmetric group on Y.

    (i) the S_X-submodule generated by the image of e_t is isomorphic to
    S^{γ+(w-r)p}; (ii) N_{S_Y}(Q) acts trivially on it; (iii) for ``r = w``
    the quotient has dimension dim S^γ.
    """

    if not 0 <= r <= w:
        raise InvalidInputError(f"Need 0 ≤ r ≤ w, got r = {r}, w = {w}")
    shape = initial_partition(core, w, p)
    n = shape.n
    first = core.part(1)
    y_points = list(range(first + (w - r) * p + 1, first + w * p + 1))
    x_points = [point for point in range(1, n + 1) if point not in set(y_points)]

    q = sylow_p(y_points, p, degree=n, cap=cap)
    x_generators = [g.relabel(_points_map(x_points), n) for g in standard_generators(len(x_points))]
    local_normalizer = support_normalizer(q, cap=cap, search_limit=search_limit)
    y_generators = list(local_normalizer.generators)

    module = specht_module(shape, p, standard_generators(n) + list(q.generators), max_dim=max_dim, cap=cap)
    bq = brauer_quotient(module.module, q, cap=cap)
    t = greatest_tableau(shape)
    e_t = FpVector(p, np.eye(module.dimension, dtype=np.int64)[module.tableaux.index(t)])
    image = bq.project(e_t)

    x_module = quotient_module(bq, x_generators)
    submodule = submodule_generated(x_module, image[None, :])
    restricted = restrict_to_submodule(x_module, submodule)

    target_shape = initial_partition(core, w - r, p)
    target = specht_module(target_shape, p, standard_generators(len(x_points)), max_dim=max_dim, cap=cap).module
    target = target.relabelled(_points_map(x_points), n)
    isomorphic = is_isomorphic(restricted, target, entry_limit=entry_limit, rng=rng)

    y_module = quotient_module(bq, y_generators)
    trivial = all(
        np.array_equal(matmul_mod(submodule.basis, action.data, p), submodule.basis) for action in y_module.actions
    )
    dimension_matches = bq.dimension == hook_dimension(core) if r == w else None

    report = LocalStructureReport(
        core=core,
        weight=w,
        r=r,
        p=p,
        partition=shape,
        x_points=x_points,
        y_points=y_points,
        q_generators=list(q.generators),
        q_order=q.order,
        quotient_dim=bq.dimension,
        submodule_dim=submodule.dimension,
        target=target_shape,
        target_dim=target.dimension,
        submodule_isomorphic=isomorphic,
        normalizer_generators=y_generators,
        normalizer_acts_trivially=trivial,
        sylow_dimension_matches=dimension_matches,
    )
    LOGGER.info("Local structure of S^(%s) at |Q| = %s: passed=%s", shape, q.order, report.passed)
    return report


def _two_row_case(n: int, p: int) -> Tuple[str, Optional[Partition]]:
    if p == 3 and n % 3 == 0:
        return "p=3", Partition((4, 2))
    if n % p == 0:
        return "p|n", Partition((p - 2, 2))
    if (n - 3) % p == 0:
        return "p|n-3", Partition((p + 1, 2))
    return "coprime", None


def two_row_report(
    n: int,
    p: int,
    *,
    max_dim: Optional[int] = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> TwoRowReport:
    """Dimension, block and vertex lower bound of S^(n-2,2) over an odd prime."""

    require_prime(p)
    if p == 2:
        raise InvalidInputError("Characteristic 2 is not supported for two-row partitions")
    if n < 4:
        raise InvalidInputError(f"Need n ≥ 4, got {n}")
    shape = Partition((n - 2, 2))
    dimension = hook_dimension(shape)
    label = p_core_and_weight(shape, p)
    case, expected = _two_row_case(n, p)
    dimension_exponent = nu_p(dimension, p)
    a = nu_p_factorial(n, p)
    lower: Optional[int]
    if dimension_exponent == 0:
        # A module of p'-dimension has a Sylow p-subgroup of S_n as vertex.
        lower, source = p ** a, "p'-dimension"
    else:
        try:
            certificate = vertex_certificate(shape, p, max_dim=max_dim, cap=cap)
            lower, source = (certificate.sylow_order if certificate.e_t_nonzero else 1), "brauer-quotient"
        except ResourceLimitError as exc:
            LOGGER.warning("Vertex certificate for %s skipped: %s", shape, exc)
            lower, source = None, None
    return TwoRowReport(
        n=n,
        p=p,
        shape=shape,
        dimension=dimension,
        dimension_formula=n * (n - 3) // 2,
        dimension_exponent=dimension_exponent,
        label=label,
        case=case,
        expected_core=expected,
        a=a,
        lower_bound_order=lower,
        lower_bound_source=source,
    )


__all__ = [
    "block_members",
    "blocks_of",
    "block_report",
    "verify_initial_dimension",
    "constructed_height_witness",
    "height_zero_report",
    "defect_group_generators",
    "verify_local_structure",
    "two_row_report",
]
