import pytest

from specht_brauer.core.combinatorics import (
    Composition,
    Partition,
    Tableau,
    character_height,
    classify_tableau,
    column_standard_tableaux,
    dominates,
    from_core_and_quotient,
    greatest_tableau,
    height_from_quotient,
    hook_dimension,
    hook_lengths,
    initial_partition,
    is_p_core,
    nu_p,
    nu_p_factorial,
    p_core_and_weight,
    p_quotient,
    partitions_of,
    removable_rim_hooks,
    row_standard_tableaux,
    row_straighten,
    shape_leq,
    standard_tableaux,
    tableau_dominates,
)
from specht_brauer.core.errors import InvalidInputError


def P(text: str) -> Partition:
    return Partition.parse(text)


def test_partition_parse_and_format():
    assert P("6,5,2").parts == (6, 5, 2)
    assert str(P("6,5,2")) == "6,5,2"
    assert P("-").parts == ()
    assert str(Partition(())) == "-"
    with pytest.raises(InvalidInputError):
        P("2,3")
    with pytest.raises(InvalidInputError):
        P("2,x")


def test_conjugate():
    assert P("4,2,1").conjugate() == P("3,2,1,1")
    assert P("3").conjugate() == P("1,1,1")


def test_dominance_on_compositions():
    assert dominates(P("3,1"), P("2,2"))
    assert not dominates(P("2,2"), P("3,1"))
    assert dominates(Composition((2, 0, 2)), Composition((1, 1, 2)))
    with pytest.raises(InvalidInputError):
        dominates(P("2"), P("3"))


def test_row_straightening_example():
    u = Tableau(((4, 7, 6, 1), (2, 5, 3), (8,)))
    straightened = row_straighten(u)
    assert straightened.rows == ((1, 4, 6, 7), (2, 3, 5), (8,))
    assert shape_leq(straightened, 8) == Composition((4, 3, 1))
    assert shape_leq(straightened, 5) == Composition((2, 3, 0))


def test_shape_leq_requires_row_standard():
    with pytest.raises(InvalidInputError):
        shape_leq(Tableau(((2, 1),)), 1)


def test_classify_tableau():
    flags = classify_tableau(Tableau.parse("1,3;2"))
    assert flags.standard
    flags = classify_tableau(Tableau.parse("2,1;3"))
    assert flags.column_standard and not flags.row_standard


def test_tableau_dominance():
    greatest = Tableau.parse("1,2;3")
    other = Tableau.parse("1,3;2")
    assert tableau_dominates(greatest, other)
    assert not tableau_dominates(other, greatest)


def test_tableau_parse_rejects_bad_entries():
    with pytest.raises(InvalidInputError):
        Tableau.parse("1,2;2")
    with pytest.raises(InvalidInputError):
        Tableau.parse("1,4;2")


def test_greatest_tableau_is_first_standard():
    shape = P("3,2")
    greatest = greatest_tableau(shape)
    assert greatest.rows == ((1, 2, 3), (4, 5))
    assert standard_tableaux(shape)[0] == greatest


@pytest.mark.parametrize("text", ["2,1", "3,2", "2,2,1", "4,1", "3,2,1"])
def test_standard_tableaux_count_matches_hook_formula(text):
    shape = P(text)
    tableaux = standard_tableaux(shape)
    assert len(tableaux) == hook_dimension(shape)
    assert all(classify_tableau(t).standard for t in tableaux)


def test_row_and_column_standard_counts():
    shape = P("2,1")
    assert len(row_standard_tableaux(shape)) == 3
    assert len(column_standard_tableaux(shape)) == 3
    assert all(classify_tableau(t).column_standard for t in column_standard_tableaux(shape))


def test_hook_lengths_and_dimensions():
    table = hook_lengths(P("3,1")).hook_length
    assert table[(1, 1)] == 4
    assert table[(1, 2)] == 2
    assert table[(2, 1)] == 1
    assert hook_dimension(P("5,1,1")) == 15
    assert hook_dimension(P("2,2")) == 2
    assert hook_dimension(Partition(())) == 1


def test_partitions_of():
    shapes = partitions_of(4)
    assert shapes[0] == P("4")
    assert shapes[-1] == P("1,1,1,1")
    assert len(shapes) == 5
    assert len(partitions_of(7)) == 15
    assert partitions_of(0) == [Partition(())]


def test_valuations():
    assert nu_p(12, 2) == 2
    assert nu_p(7, 3) == 0
    assert nu_p_factorial(10, 2) == 8
    assert nu_p_factorial(9, 3) == 4
    with pytest.raises(InvalidInputError):
        nu_p(0, 2)
    with pytest.raises(InvalidInputError):
        nu_p(4, 4)


def test_core_and_weight_example():
    label = p_core_and_weight(P("6,5,2"), 3)
    assert label.core == P("3,1")
    assert label.weight == 3
    assert label.defect_exponent == 4
    assert label.n == 13


def test_core_independent_of_removal_order():
    import random

    shape = P("6,5,2")
    expected = p_core_and_weight(shape, 3)
    for seed in range(5):
        assert p_core_and_weight(shape, 3, rng=random.Random(seed)) == expected


def test_p_cores():
    assert is_p_core(P("2,1"), 2)
    assert is_p_core(P("3,1"), 3)
    assert not is_p_core(P("2"), 2)
    assert removable_rim_hooks(P("2,2"), 2)


def test_p_quotient_and_inverse():
    quotient = p_quotient(P("6,5,2"), 3)
    assert quotient == (P("2"), Partition(()), P("1"))
    assert from_core_and_quotient(P("3,1"), quotient, 3) == P("6,5,2")


def test_initial_partition():
    assert initial_partition(P("2,1"), 2, 2) == P("6,1")
    assert initial_partition(Partition(()), 2, 3) == P("6")
    assert initial_partition(P("3,1"), 0, 3) == P("3,1")
    with pytest.raises(InvalidInputError):
        initial_partition(P("2"), 1, 2)


def test_heights():
    assert character_height(P("2,2"), 2) == 1
    assert height_from_quotient(P("2,2"), 2) == 1
    for shape in partitions_of(6):
        assert character_height(shape, 3) == 0
