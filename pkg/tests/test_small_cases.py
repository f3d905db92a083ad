"""Exhaustive checks over every partition of a small n."""

import numpy as np
import pytest

from specht_brauer.config import Settings
from specht_brauer.core.brauer import brauer_image_nonzero
from specht_brauer.core.combinatorics import (
    column_standard_tableaux,
    greatest_tableau,
    hook_dimension,
    partitions_of,
    row_standard_tableaux,
    standard_tableaux,
    tableau_dominates,
)
from specht_brauer.core.groups import cyclic_p_subgroups, h_group, h_group_generators, sylow_of_h_group
from specht_brauer.core.linalg import FpVector, rank
from specht_brauer.core.pipeline import Processor
from specht_brauer.core.specht import Tabloid, polytabloid, specht_module, tabloid_basis


@pytest.fixture(scope="module")
def processor() -> Processor:
    return Processor(Settings())


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", range(1, 8))
def test_every_column_standard_polytabloid_straightens_triangularly(processor, n, p):
    for shape in partitions_of(n):
        for t in column_standard_tableaux(shape):
            report = processor.straighten(t, p)
            assert report.leading_coefficient == 1, str(t)
            assert report.triangular is True, str(t)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", range(1, 8))
def test_greatest_polytabloid_survives_at_p_subgroups_of_h_group(n, p):
    for shape in partitions_of(n):
        t = greatest_tableau(shape)
        module = specht_module(shape, p)
        e_t = FpVector(p, np.eye(module.dimension, dtype=np.int64)[module.tableaux.index(t)])
        h = h_group(t)
        assert all(e_t @ module.module.matrix_of(g) == e_t for g in h.generators), str(shape)
        for q in [sylow_of_h_group(t, p), *cyclic_p_subgroups(h, p)]:
            assert brauer_image_nonzero(module.module, e_t, q), f"{shape} at {q}"


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", range(1, 8))
def test_standard_polytabloids_are_independent(n, p):
    for shape in partitions_of(n):
        module = specht_module(shape, p, [])
        assert module.dimension == len(standard_tableaux(shape)) == hook_dimension(shape)
        assert rank(module.embedding.data, p) == module.dimension, str(shape)


def _dominance_counts(row_vectors: np.ndarray, row_count: int) -> np.ndarray:
    """``counts[s, i, r]``: entries ``x ≤ i + 1`` of tabloid ``s`` lying in rows ``0..r``."""

    in_rows = row_vectors[:, :, None] <= np.arange(row_count)[None, None, :]
    return np.cumsum(in_rows, axis=1)


@pytest.mark.parametrize("n", range(1, 9))
def test_greatest_tableau_dominates_every_row_standard_tableau(n):
    for shape in partitions_of(n):
        t = greatest_tableau(shape)
        basis = tabloid_basis(shape)
        counts = _dominance_counts(basis.row_vectors, len(shape.parts))
        greatest = counts[basis.index_of(Tabloid.of(t))]
        assert np.all(counts <= greatest[None]), str(shape)
        if n <= 5:
            assert all(tableau_dominates(t, s) for s in row_standard_tableaux(shape)), str(shape)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", range(1, 9))
def test_greatest_polytabloid_is_fixed_by_h_group(n, p):
    for shape in partitions_of(n):
        t = greatest_tableau(shape)
        basis = tabloid_basis(shape)
        e_t = polytabloid(t, p).data
        for g in h_group_generators(t):
            moved = np.zeros_like(e_t)
            moved[basis.permutation_indices(g)] = e_t
            assert np.array_equal(moved, e_t), f"{shape} under {g}"
