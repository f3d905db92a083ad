import math
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from specht_brauer.config import Settings
from specht_brauer.core.combinatorics import (
    character_height,
    column_standard_tableaux,
    from_core_and_quotient,
    height_from_quotient,
    hook_dimension,
    p_core_and_weight,
    p_quotient,
    partitions_of,
)
from specht_brauer.core.groups import Permutation
from specht_brauer.core.pipeline import Processor

primes = st.sampled_from([2, 3, 5])


def partitions(min_n: int = 1, max_n: int = 14):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def permutations(degree: int):
    return st.permutations(list(range(1, degree + 1))).map(lambda images: Permutation(tuple(images)))


@given(partitions(), primes, st.integers(0, 2 ** 16))
def test_core_does_not_depend_on_removal_order(shape, p, seed):
    assert p_core_and_weight(shape, p, rng=random.Random(seed)) == p_core_and_weight(shape, p)


@given(partitions(), primes)
def test_core_and_quotient_determine_the_partition(shape, p):
    label = p_core_and_weight(shape, p)
    quotient = p_quotient(shape, p)
    assert sum(component.n for component in quotient) == label.weight
    assert from_core_and_quotient(label.core, quotient, p) == shape


@given(partitions(), primes)
def test_height_agrees_with_product_formula(shape, p):
    height = character_height(shape, p)
    assert height >= 0
    assert height == height_from_quotient(shape, p)


@given(st.integers(1, 10))
def test_sum_of_squared_dimensions(n):
    assert sum(hook_dimension(shape) ** 2 for shape in partitions_of(n)) == math.factorial(n)


@settings(max_examples=25, deadline=None)
@given(partitions(2, 5).flatmap(lambda shape: st.sampled_from(column_standard_tableaux(shape))), primes)
def test_column_standard_polytabloids_are_triangular(t, p):
    report = Processor(Settings()).straighten(t, p)
    assert report.leading_coefficient == 1
    assert report.triangular is True


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(permutations(n), permutations(n), permutations(n))))
def test_permutation_group_laws(triple):
    a, b, c = triple
    identity = Permutation.identity(a.degree)
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == identity
    assert a ** a.order() == identity
    assert (a * b).sign() == a.sign() * b.sign()
    for point in range(1, a.degree + 1):
        assert (a * b).image(point) == b.image(a.image(point))
