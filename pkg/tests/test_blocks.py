import random

import pytest

from specht_brauer.core.blocks import (
    block_members,
    block_report,
    blocks_of,
    constructed_height_witness,
    defect_group_generators,
    height_zero_report,
    two_row_report,
    verify_initial_dimension,
    verify_local_structure,
)
from specht_brauer.core.combinatorics import Partition, character_height, partitions_of
from specht_brauer.core.errors import InvalidInputError
from specht_brauer.core.groups import generate


def P(text: str) -> Partition:
    return Partition.parse(text)


EMPTY = Partition(())


def test_blocks_partition_every_shape():
    grouped = blocks_of(6, 3)
    assert sum(len(members) for members in grouped.values()) == len(partitions_of(6))
    assert P("6") in grouped[EMPTY]
    assert grouped[EMPTY][0] == P("6")


def test_block_members_and_report():
    members = block_members(4, 2, EMPTY)
    assert P("2,2") in members and P("4") in members
    report = block_report(4, 2, EMPTY)
    assert report.label.weight == 2
    assert report.a == 3 and report.b == 3
    assert report.heights[P("2,2")] == 1
    assert report.to_record()["heights"]["2,2"] == 1


def test_block_report_rejects_bad_cores():
    with pytest.raises(InvalidInputError):
        block_report(4, 2, P("2"))
    with pytest.raises(InvalidInputError):
        block_report(4, 3, P("2,1"))


def test_initial_dimension_equality_and_minimality():
    report = verify_initial_dimension(P("2,1"), 2, 2)
    assert report.partition == P("6,1")
    assert report.initial_exponent == 1
    assert report.a - report.b == 1
    assert report.equality_holds
    assert report.minimality_holds


@pytest.mark.parametrize("core, w, p", [("-", 3, 2), ("1", 2, 3), ("2,1", 2, 2), ("-", 2, 5), ("1,1", 1, 3)])
def test_initial_dimension_over_several_blocks(core, w, p):
    report = verify_initial_dimension(P(core), w, p)
    assert report.equality_holds
    assert report.minimality_holds


def test_height_zero_pattern_in_small_cases():
    for n in range(1, 9):
        for p in (2, 3):
            for summary in height_zero_report(n, p).blocks:
                assert summary.consistent
                assert (summary.witness is None) == (summary.weight < p)


def test_height_zero_witness_for_n_four():
    summaries = {summary.label.core: summary for summary in height_zero_report(4, 2).blocks}
    empty = summaries[EMPTY]
    assert not empty.all_heights_zero
    assert empty.witness_height == 1
    assert character_height(empty.constructed_witness, 2) > 0


def test_constructed_witness_falls_back_past_single_rows():
    shape, height = constructed_height_witness(P("1"), 3, 2)
    assert height > 0
    assert character_height(shape, 2) == height
    with pytest.raises(InvalidInputError):
        constructed_height_witness(EMPTY, 1, 2)


def test_defect_group_generators_have_sylow_order():
    gens = defect_group_generators(P("1"), 2, 2)
    assert generate(gens, degree=5).order == 8


def test_local_structure_of_four_one_in_characteristic_two():
    report = verify_local_structure(P("2,1"), 1, 1, 2, rng=random.Random(5))
    assert report.partition == P("4,1")
    assert report.y_points == [3, 4]
    assert report.x_points == [1, 2, 5]
    assert report.quotient_dim == 2
    assert report.submodule_dim == 2
    assert report.target == P("2,1")
    assert report.submodule_isomorphic
    assert report.normalizer_acts_trivially
    assert report.sylow_dimension_matches
    assert report.passed


def test_local_structure_in_characteristic_three():
    report = verify_local_structure(P("1,1"), 1, 1, 3)
    assert report.quotient_dim == 1
    assert report.passed


def test_local_structure_rejects_bad_r():
    with pytest.raises(InvalidInputError):
        verify_local_structure(P("2,1"), 1, 2, 2)


@pytest.mark.parametrize(
    "n, p, case, core, weight",
    [
        (9, 3, "p=3", "4,2", 1),
        (10, 5, "p|n", "3,2", 1),
        (8, 5, "p|n-3", "6,2", 0),
        (7, 5, "coprime", None, None),
    ],
)
def test_two_row_cases(n, p, case, core, weight):
    report = two_row_report(n, p)
    assert report.case == case
    assert report.dimension == report.dimension_formula == n * (n - 3) // 2
    assert report.core_matches
    if core is not None:
        assert report.label.core == P(core)
        assert report.label.weight == weight
    if report.lower_bound_order is not None:
        assert report.lower_bound_order <= report.defect_order


@pytest.mark.parametrize("n, p", [(7, 5), (7, 3), (8, 3), (5, 3)])
def test_two_row_coprime_vertex_is_sylow(n, p):
    report = two_row_report(n, p)
    assert report.case == "coprime"
    assert report.dimension_exponent == 0
    assert report.lower_bound_source == "p'-dimension"
    assert report.lower_bound_order == p ** report.a == report.defect_order
    assert report.consistent is True
    assert report.vertex_is_defect_group is True


def test_two_row_rejects_characteristic_two():
    with pytest.raises(InvalidInputError):
        two_row_report(6, 2)
    with pytest.raises(InvalidInputError):
        two_row_report(3, 3)
