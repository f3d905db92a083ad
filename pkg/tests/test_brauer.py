import random

import numpy as np
import pytest

from specht_brauer.core.brauer import (
    all_subgroup_radical,
    brauer_image_nonzero,
    brauer_quotient,
    fixed_subspace,
    permutation_module_quotient,
    quotient_module,
    relative_trace_image,
    vertex_certificate,
)
from specht_brauer.core.combinatorics import Partition, greatest_tableau
from specht_brauer.core.errors import InvalidInputError
from specht_brauer.core.groups import (
    PermGroup,
    Permutation,
    cyclic_p_subgroups,
    generate,
    h_group,
    standard_generators,
    sylow_of_h_group,
    sylow_p,
)
from specht_brauer.core.linalg import FpVector
from specht_brauer.core.specht import specht_module, young_module


def P(text: str) -> Partition:
    return Partition.parse(text)


def perm(text: str, degree: int) -> Permutation:
    return Permutation.parse(text, degree)


def _module_with(shape: Partition, p: int, q: PermGroup):
    return specht_module(shape, p, standard_generators(shape.n) + list(q.generators))


def _e_t(module, t) -> FpVector:
    return FpVector(module.p, np.eye(module.dimension, dtype=np.int64)[module.tableaux.index(t)])


def test_fixed_points_of_permutation_module():
    q = generate([perm("(1,2)", 3)])
    module = young_module(P("2,1"), 2, list(q.generators))
    assert fixed_subspace(module, q).dimension == 2


def test_brauer_quotient_of_four_one_in_characteristic_two():
    shape = P("4,1")
    q = generate([perm("(3,4)", 5)])
    module = _module_with(shape, 2, q)
    bq = brauer_quotient(module.module, q)
    assert bq.dimension == 2
    assert bq.fixed.dimension - bq.radical.dimension == 2


def test_brauer_quotient_of_four_one_in_characteristic_three():
    shape = P("4,1")
    q = generate([perm("(2,3,4)", 5)])
    module = _module_with(shape, 3, q)
    assert brauer_quotient(module.module, q).dimension == 1


def test_brauer_quotient_requires_p_group():
    shape = P("2,1")
    q = generate(standard_generators(3))
    module = _module_with(shape, 2, q)
    with pytest.raises(InvalidInputError):
        brauer_quotient(module.module, q)


def test_trivial_group_gives_whole_module():
    shape = P("3,1")
    q = PermGroup(4, [])
    module = specht_module(shape, 3)
    bq = brauer_quotient(module.module, q)
    assert bq.dimension == module.dimension


def test_relative_trace_does_not_depend_on_transversal():
    shape = P("3,2")
    q = sylow_p([1, 2, 3, 4], 2, degree=5)
    module = _module_with(shape, 2, q).module
    for r in cyclic_p_subgroups(q, 2):
        reference = relative_trace_image(module, r, q)
        for seed in range(3):
            assert relative_trace_image(module, r, q, rng=random.Random(seed)) == reference


def test_maximal_subgroups_give_the_full_radical():
    shape = P("3,2")
    q = sylow_p([1, 2, 3, 4], 2, degree=5)
    module = _module_with(shape, 2, q).module
    assert brauer_quotient(module, q).radical == all_subgroup_radical(module, q)


@pytest.mark.parametrize("text, p", [("3,1", 3), ("2,2", 2), ("3,3", 3), ("2,2,2", 3), ("3,3", 2)])
def test_greatest_polytabloid_survives_at_sylow_of_h_group(text, p):
    shape = P(text)
    t = greatest_tableau(shape)
    sylow = sylow_of_h_group(t, p)
    module = _module_with(shape, p, sylow)
    e_t = _e_t(module, t)
    assert all((e_t @ module.module.matrix_of(g)) == e_t for g in h_group(t).generators)
    assert brauer_image_nonzero(module.module, e_t, sylow)


def test_brauer_image_requires_fixed_vector():
    shape = P("2,1")
    q = generate([perm("(1,2)", 3)])
    module = _module_with(shape, 2, q)
    with pytest.raises(InvalidInputError):
        brauer_image_nonzero(module.module, FpVector(2, np.array([1, 0])), q)


def test_quotient_module_under_normalizer():
    shape = P("4,1")
    q = generate([perm("(3,4)", 5)])
    module = _module_with(shape, 2, q)
    bq = brauer_quotient(module.module, q)
    acting = [perm("(1,2)", 5), perm("(1,2,5)", 5), perm("(3,4)", 5)]
    rep = quotient_module(bq, acting)
    assert rep.dimension == 2
    assert rep.matrix_of(perm("(3,4)", 5)).to_lists() == [[1, 0], [0, 1]]
    with pytest.raises(InvalidInputError):
        quotient_module(bq, [perm("(2,3)", 5)])


def test_permutation_module_quotient_counts_fixed_tabloids():
    q = generate([perm("(1,2)", 4)])
    oracle = permutation_module_quotient(P("2,2"), q)
    assert oracle.dimension == 2
    assert oracle.labels == ["[1,2|3,4]", "[3,4|1,2]"]


def test_vertex_certificate_for_small_shape():
    certificate = vertex_certificate(P("2,2"), 2)
    assert certificate.h_order == 2
    assert certificate.sylow_order == 2
    assert certificate.e_t_nonzero
    assert certificate.method == "specht"


def test_vertex_certificate_falls_back_to_permutation_module():
    certificate = vertex_certificate(P("3,3"), 3, max_dim=1)
    assert certificate.method == "permutation-module"
    assert certificate.quotient_dim is None
    assert certificate.sylow_order == 3
    assert certificate.nonzero
