import random

import pytest

from specht_brauer.core.combinatorics import Partition, greatest_tableau
from specht_brauer.core.errors import InvalidInputError, ResourceLimitError
from specht_brauer.core.groups import (
    PermGroup,
    Permutation,
    column_group,
    cyclic_p_subgroups,
    equal_length_column_runs,
    frattini_subgroup,
    generate,
    h_group,
    h_group_generators,
    h_group_order,
    maximal_subgroups,
    normal_closure,
    normalizer,
    right_transversal,
    row_stabilizer,
    standard_generators,
    subgroups,
    support_normalizer,
    sylow_of_h_group,
    sylow_p,
)


def perm(text: str, degree: int) -> Permutation:
    return Permutation.parse(text, degree)


def test_parse_and_format_cycles():
    g = perm("(1,2,3)(4,5)", 5)
    assert g.images == (2, 3, 1, 5, 4)
    assert str(g) == "(1,2,3)(4,5)"
    assert str(Permutation.identity(3)) == "()"
    assert perm("()", 3).is_identity()


@pytest.mark.parametrize("text", ["(1,2", "(1,1)", "(1,x)", "1,2"])
def test_parse_rejects_malformed_cycles(text):
    with pytest.raises(InvalidInputError):
        Permutation.parse(text, 4)


def test_parse_rejects_points_beyond_degree():
    with pytest.raises(InvalidInputError):
        Permutation.parse("(1,5)", 4)


def test_right_action_composition():
    a = perm("(1,2)", 3)
    b = perm("(2,3)", 3)
    assert a * b == perm("(1,3,2)", 3)
    assert (a * b).image(1) == b.image(a.image(1))
    assert a.conjugate(b) == perm("(1,3)", 3)


def test_order_sign_and_powers():
    g = perm("(1,2)(3,4,5)", 5)
    assert g.order() == 6
    assert g.sign() == -1
    assert g.cycle_type() == (3, 2)
    assert (g ** 6).is_identity()
    assert g ** -1 == g.inverse()


def test_relabel_moves_points():
    g = perm("(1,2)", 2)
    assert g.relabel({1: 3, 2: 5}, 5) == perm("(3,5)", 5)


def test_symmetric_group_order():
    assert generate(standard_generators(4)).order == 24
    assert generate(standard_generators(1), degree=1).order == 1


def test_group_cap_raises():
    with pytest.raises(ResourceLimitError):
        generate(standard_generators(6), cap=100)


def test_column_group_and_row_stabilizer():
    t = greatest_tableau(Partition((3, 2)))
    assert column_group(t).order == 4
    assert row_stabilizer(t).order == 12


def test_h_group_of_example_shape():
    t = greatest_tableau(Partition((8, 4, 1)))
    assert equal_length_column_runs(t) == [[0], [1, 2, 3], [4, 5, 6, 7]]
    assert len(h_group_generators(t)) == 4
    assert h_group_order(t) == 144
    assert h_group(t).order == 144


def test_h_group_two_columns_has_no_swap():
    t = greatest_tableau(Partition((2, 2)))
    gens = h_group_generators(t)
    assert gens == [perm("(1,2)(3,4)", 4)]
    assert h_group_order(t) == 2


def test_sylow_of_h_group_orders():
    t = greatest_tableau(Partition((8, 4, 1)))
    assert sylow_of_h_group(t, 2).order == 16
    assert sylow_of_h_group(t, 3).order == 9
    assert sylow_of_h_group(t, 5).order == 1


@pytest.mark.parametrize(
    "size, p, order",
    [(4, 2, 8), (6, 2, 16), (9, 3, 81), (5, 5, 5), (4, 3, 3), (2, 3, 1)],
)
def test_sylow_orders(size, p, order):
    q = sylow_p(list(range(1, size + 1)), p, degree=size)
    assert q.order == order
    assert q.is_p_group(p)


def test_sylow_rejects_repeated_points():
    with pytest.raises(InvalidInputError):
        sylow_p([1, 1, 2], 2)


def test_normalizers():
    c3 = generate([perm("(1,2,3)", 4)])
    assert support_normalizer(c3).order == 6
    assert normalizer(4, c3).order == 6
    v = generate([perm("(1,2)(3,4)", 4)])
    assert normalizer(4, v).order == 8
    c2 = generate([perm("(1,2)", 5)])
    assert normalizer(5, c2).order == 12


def test_normalizer_by_orbits_matches_brute_force():
    q = sylow_p([1, 2, 3, 4], 2, degree=4)
    brute = support_normalizer(q)
    searched = support_normalizer(q, search_limit=20)
    assert brute.same_elements(searched)
    assert brute.order == 8


def test_frattini_and_maximal_subgroups():
    d8 = sylow_p([1, 2, 3, 4], 2, degree=4)
    assert frattini_subgroup(d8, 2).order == 2
    maximal = maximal_subgroups(d8)
    assert len(maximal) == 3
    assert all(m.order == 4 and m.is_subgroup_of(d8) for m in maximal)

    klein = generate([perm("(1,2)", 4), perm("(3,4)", 4)])
    assert sorted(m.order for m in maximal_subgroups(klein)) == [2, 2, 2]

    c4 = generate([perm("(1,2,3,4)", 4)])
    assert [m.order for m in maximal_subgroups(c4)] == [2]


def test_maximal_subgroups_rejects_non_p_groups():
    with pytest.raises(InvalidInputError):
        maximal_subgroups(generate(standard_generators(3)))


def test_right_transversal():
    c3 = generate([perm("(1,2,3)", 3)])
    trivial = PermGroup(3, [])
    reps = right_transversal(trivial, c3, random.Random(1))
    assert len(reps) == 3
    s3 = generate(standard_generators(3))
    reps = right_transversal(c3, s3)
    assert len(reps) == 2
    with pytest.raises(InvalidInputError):
        right_transversal(s3, c3)


def test_subgroup_enumeration():
    s3 = generate(standard_generators(3))
    assert [group.order for group in subgroups(s3)] == [1, 2, 2, 2, 3, 6]
    assert len(cyclic_p_subgroups(s3, 3)) == 2
    assert len(cyclic_p_subgroups(s3, 2)) == 4


def test_order_and_membership_do_not_enumerate():
    s8 = generate(standard_generators(8), cap=100_000)
    assert s8.order == 40320
    assert perm("(1,5,8)(2,3)", 8) in s8
    assert perm("(1,2)", 7) not in s8
    assert "elements" not in s8.__dict__


def test_elements_start_with_identity_and_are_distinct():
    d8 = sylow_p([1, 2, 3, 4], 2, degree=4)
    assert d8.elements[0].is_identity()
    assert len(d8.element_set) == d8.order == 8


def test_degree_zero_group():
    trivial = PermGroup(0, [])
    assert trivial.order == 1
    assert trivial.elements == (Permutation(()),)
    assert Permutation(()) in trivial


def test_right_transversal_of_non_normal_subgroup_splits_right_cosets():
    s3 = generate(standard_generators(3))
    r = generate([perm("(1,2)", 3)])
    reps = right_transversal(r, s3)
    cosets = [frozenset(h * g for h in r.elements) for g in reps]
    assert len(reps) == 3
    assert len(set(cosets)) == 3
    assert frozenset().union(*cosets) == s3.element_set
    shuffled = right_transversal(r, s3, random.Random(7))
    assert {frozenset(h * g for h in r.elements) for g in shuffled} == set(cosets)


def test_maximal_subgroups_of_sylow_two_subgroup_of_s8():
    q = sylow_p(list(range(1, 9)), 2, degree=8)
    assert q.order == 128
    frattini = frattini_subgroup(q, 2)
    assert frattini.is_normal_in(q)
    maximal = maximal_subgroups(q)
    # Q/Φ(Q) has rank 3 for the iterated wreath product of three C2.
    assert len(maximal) == 7
    assert all(m.order == 64 and m.is_normal_in(q) and frattini.is_subgroup_of(m) for m in maximal)
    assert len({m.element_set for m in maximal}) == 7


def test_normal_closure_of_a_transposition_in_s4():
    s4 = generate(standard_generators(4))
    assert normal_closure(s4, [perm("(1,2)", 4)]).order == 24
    assert normal_closure(s4, [perm("(1,2)(3,4)", 4)]).order == 4
    assert normal_closure(s4, [Permutation.identity(4)]).order == 1
