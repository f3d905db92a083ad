"""Permutations of ``{1..n}`` and permutation groups backed by ``sympy.combinatorics``.

Permutations act on the right: ``i·(gh) = (i·g)·h``, which is also the
product convention of :class:`sympy.combinatorics.Permutation`.  Points are
1-based here and 0-based inside sympy.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy import factorint
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from .combinatorics import Tableau, nu_p_factorial
from .errors import InvalidInputError, ResourceLimitError
from .utils import require_prime


LOGGER = logging.getLogger(__name__)

DEFAULT_GROUP_CAP = 1_000_000
DEFAULT_NORMALIZER_SEARCH = 10_000_000

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


def _sympy_size(degree: int) -> int:
    # sympy groups need at least one point; S_0 is modelled on one fixed point.
    return max(degree, 1)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}``; ``images[i - 1]`` is ``i·g``."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(value) for value in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidInputError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", images)
        return perm

    @classmethod
    def from_sympy(cls, perm: SymPermutation, degree: int) -> "Permutation":
        array = perm.array_form
        images = tuple(value + 1 for value in array[:degree]) + tuple(range(len(array) + 1, degree + 1))
        return cls._trusted(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(1, degree + 1)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], degree: int) -> "Permutation":
        return cls(tuple(mapping.get(point, point) for point in range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        shifted: List[List[int]] = []
        touched = set()
        for cycle in cycles:
            cycle = [int(point) for point in cycle]
            for point in cycle:
                if not 1 <= point <= degree:
                    raise InvalidInputError(f"Point {point} outside 1..{degree}")
                if point in touched:
                    raise InvalidInputError(f"Point {point} appears twice in cycle notation")
                touched.add(point)
            if len(cycle) > 1:
                shifted.append([point - 1 for point in cycle])
        if not shifted:
            return cls.identity(degree)
        return cls.from_sympy(SymPermutation(shifted, size=_sympy_size(degree)), degree)

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "Permutation":
        """Parse cycle notation such as ``"(1,2,3)(4,5)"``; ``"()"`` is the identity."""

        stripped = "".join((text or "").split())
        if not stripped:
            raise InvalidInputError("Empty permutation text")
        if _CYCLE_PATTERN.sub("", stripped):
            raise InvalidInputError(f"Malformed cycle notation '{text}'")
        cycles: List[List[int]] = []
        for body in _CYCLE_PATTERN.findall(stripped):
            if not body:
                continue
            try:
                cycles.append([int(token) for token in body.split(",")])
            except ValueError as exc:
                raise InvalidInputError(f"Malformed cycle '({body})' in '{text}'") from exc
        largest = max((max(cycle) for cycle in cycles), default=0)
        if degree is None:
            degree = largest
        elif largest > degree:
            raise InvalidInputError(f"'{text}' moves point {largest} beyond degree {degree}")
        return cls.from_cycles(cycles, degree)

    @cached_property
    def sympy(self) -> SymPermutation:
        return SymPermutation([value - 1 for value in self.images] or [0])

    @property
    def degree(self) -> int:
        return len(self.images)

    def image(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise InvalidInputError(f"Degree mismatch {self.degree} vs {other.degree}")
        return Permutation.from_sympy(self.sympy * other.sympy, self.degree)

    def inverse(self) -> "Permutation":
        return Permutation.from_sympy(~self.sympy, self.degree)

    def __pow__(self, exponent: int) -> "Permutation":
        return Permutation.from_sympy(self.sympy ** exponent, self.degree)

    def conjugate(self, by: "Permutation") -> "Permutation":
        """``by⁻¹ · self · by``."""

        if self.degree != by.degree:
            raise InvalidInputError(f"Degree mismatch {self.degree} vs {by.degree}")
        return Permutation.from_sympy(self.sympy ^ by.sympy, self.degree)

    def is_identity(self) -> bool:
        return self.sympy.is_Identity

    def support(self) -> List[int]:
        return [point + 1 for point in self.sympy.support()]

    def cycles(self) -> List[Tuple[int, ...]]:
        return [tuple(point + 1 for point in cycle) for cycle in self.sympy.cyclic_form]

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(cycle) for cycle in self.sympy.cyclic_form), reverse=True))

    def order(self) -> int:
        return int(self.sympy.order())

    def sign(self) -> int:
        return int(self.sympy.signature())

    def extended(self, degree: int) -> "Permutation":
        if degree < self.degree:
            raise InvalidInputError(f"Cannot shrink degree {self.degree} to {degree}")
        return Permutation._trusted(self.images + tuple(range(self.degree + 1, degree + 1)))

    def relabel(self, point_map: Mapping[int, int], degree: int) -> "Permutation":
        """The permutation moving ``point_map[i]`` to ``point_map[i·g]``."""

        mapping = {point_map.get(point, point): point_map.get(value, value) for point, value in enumerate(self.images, start=1)}
        return Permutation.from_mapping(mapping, degree)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(point) for point in cycle) + ")" for cycle in cycles)


class PermGroup:
    """A permutation group given by generators, with a :class:`PermutationGroup` behind it.

    ``order`` and membership come from Schreier-Sims; ``elements`` is only
    enumerated on demand and refuses groups above ``cap``.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation], *, cap: int = DEFAULT_GROUP_CAP) -> None:
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        for generator in self.generators:
            if generator.degree != degree:
                raise InvalidInputError(f"Generator {generator} has degree {generator.degree}, expected {degree}")
        self.cap = cap

    @classmethod
    def from_sympy(cls, group: PermutationGroup, degree: int, *, cap: int = DEFAULT_GROUP_CAP) -> "PermGroup":
        gens = [Permutation.from_sympy(generator, degree) for generator in group.generators]
        return cls(degree, [generator for generator in gens if not generator.is_identity()], cap=cap)

    @cached_property
    def sympy(self) -> PermutationGroup:
        gens = [generator.sympy for generator in self.generators]
        return PermutationGroup(gens or [SymPermutation(_sympy_size(self.degree) - 1)])

    @cached_property
    def order(self) -> int:
        return int(self.sympy.order())

    def check_cap(self) -> None:
        if self.order > self.cap:
            raise ResourceLimitError(
                f"Group generated by {len(self.generators)} permutations of degree {self.degree} "
                f"has {self.order} elements, above the limit {self.cap}"
            )

    @cached_property
    def elements(self) -> Tuple[Permutation, ...]:
        """Every element, identity first, in Dimino order."""

        self.check_cap()
        elements = tuple(
            Permutation._trusted(tuple(value + 1 for value in array[: self.degree]))
            for array in self.sympy.generate_dimino(af=True)
        )
        LOGGER.debug("Enumerated group of degree %s with %s elements", self.degree, len(elements))
        return elements

    @cached_property
    def element_set(self) -> FrozenSet[Permutation]:
        return frozenset(self.elements)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, element: Permutation) -> bool:
        return element.degree == self.degree and bool(self.sympy.contains(element.sympy))

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and bool(self.sympy.is_subgroup(other.sympy))

    def same_elements(self, other: "PermGroup") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def is_normal_in(self, other: "PermGroup") -> bool:
        return self.is_subgroup_of(other) and bool(self.sympy.is_normal(other.sympy))

    def is_trivial(self) -> bool:
        return all(generator.is_identity() for generator in self.generators)

    def prime_of(self) -> Optional[int]:
        """The prime ``p`` when the order is a nontrivial power of ``p``."""

        factors = factorint(self.order)
        if len(factors) != 1:
            return None
        return next(iter(factors))

    def is_p_group(self, p: int) -> bool:
        return self.order == 1 or self.prime_of() == p

    def support(self) -> List[int]:
        return sorted({point for generator in self.generators for point in generator.support()})

    def orbits(self) -> List[List[int]]:
        """Orbits on the moved points, each sorted, ordered by their smallest point."""

        moved = set(self.support())
        orbits = [sorted(point + 1 for point in orbit) for orbit in self.sympy.orbits()]
        return sorted((orbit for orbit in orbits if orbit[0] in moved), key=lambda orbit: orbit[0])

    def __repr__(self) -> str:
        gens = ", ".join(str(generator) for generator in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"


def generate(gens: Sequence[Permutation], cap: int = DEFAULT_GROUP_CAP, *, degree: Optional[int] = None) -> PermGroup:
    """The group generated by ``gens`` (``degree`` required when ``gens`` is empty), checked against ``cap``."""

    if degree is None:
        if not gens:
            raise InvalidInputError("The degree must be given when there are no generators")
        degree = gens[0].degree
    group = PermGroup(degree, gens, cap=cap)
    group.check_cap()
    return group


def _subgroup_from_elements(degree: int, elements: Sequence[Permutation], cap: int) -> PermGroup:
    """Wrap a known subgroup, choosing a small generating set greedily."""

    generators: List[Permutation] = []
    current = PermGroup(degree, [], cap=cap)
    for element in elements:
        if element in current:
            continue
        generators.append(element)
        current = PermGroup(degree, generators, cap=cap)
    if current.order != len(set(elements)):
        raise InvalidInputError("Element list is not closed under multiplication")
    return current


def standard_generators(n: int) -> List[Permutation]:
    """``(1,2)`` and ``(1,2,…,n)``."""

    if n < 2:
        return []
    transposition = Permutation.from_cycles([(1, 2)], n)
    cycle = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    return [transposition] if cycle == transposition else [transposition, cycle]


def symmetric_group_generators(points: Sequence[int], degree: int) -> List[Permutation]:
    return [Permutation.from_cycles([(points[index], points[index + 1])], degree) for index in range(len(points) - 1)]


def column_group(t: Tableau, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """C(t): permutations fixing every column of ``t`` setwise."""

    gens = [gen for column in t.columns() for gen in symmetric_group_generators(column, t.n)]
    return generate(gens, cap, degree=t.n)


def row_stabilizer(t: Tableau, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    gens = [gen for row in t.rows for gen in symmetric_group_generators(row, t.n)]
    return generate(gens, cap, degree=t.n)


def equal_length_column_runs(t: Tableau) -> List[List[int]]:
    """Maximal runs of consecutive columns (0-based) of equal length."""

    columns = t.columns()
    runs: List[List[int]] = []
    for index, column in enumerate(columns):
        if runs and len(columns[runs[-1][-1]]) == len(column):
            runs[-1].append(index)
        else:
            runs.append([index])
    return runs


def _column_block_permutation(t: Tableau, column_map: Mapping[int, int]) -> Permutation:
    """Lift a permutation of columns of equal length to entries, row by row."""

    columns = t.columns()
    mapping: Dict[int, int] = {}
    for source, target in column_map.items():
        for entry, image in zip(columns[source], columns[target]):
            mapping[entry] = image
    return Permutation.from_mapping(mapping, t.n)


def h_group_generators(t: Tableau) -> List[Permutation]:
    """For each run of equal-length columns: the column cycle, then the swap of its first two columns."""

    gens: List[Permutation] = []
    for run in equal_length_column_runs(t):
        if len(run) < 2:
            continue
        cycle = {run[index]: run[(index + 1) % len(run)] for index in range(len(run))}
        gens.append(_column_block_permutation(t, cycle))
        if len(run) > 2:
            gens.append(_column_block_permutation(t, {run[0]: run[1], run[1]: run[0]}))
    return gens


def h_group_order(t: Tableau) -> int:
    """|H(t)|, the product of factorials of the run lengths."""

    return math.prod(math.factorial(len(run)) for run in equal_length_column_runs(t))


def h_group(t: Tableau, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """H(t): permutes, as blocks, the entries of columns of equal length in ``t``."""

    return generate(h_group_generators(t), cap, degree=t.n)


def _wreath_generators(block: Sequence[int], p: int, level: int, degree: int) -> List[Permutation]:
    if level == 0:
        return []
    size = p ** (level - 1)
    pieces = [block[index * size:(index + 1) * size] for index in range(p)]
    gens = _wreath_generators(pieces[0], p, level - 1, degree)
    shift = {pieces[index][offset]: pieces[(index + 1) % p][offset] for index in range(p) for offset in range(size)}
    gens.append(Permutation.from_mapping(shift, degree))
    return gens


def sylow_generators(support: Sequence[int], p: int, degree: int) -> List[Permutation]:
    """Generators of a Sylow p-subgroup of the symmetric group on ``support``.

    ``|support|`` is written in base ``p``; each digit ``a_k`` contributes
    ``a_k`` blocks carrying the iterated wreath product of ``k`` cyclic groups.
    """

    require_prime(p)
    points = list(support)
    digits: List[int] = []
    remaining = len(points)
    while remaining:
        digits.append(remaining % p)
        remaining //= p
    gens: List[Permutation] = []
    offset = 0
    for level in range(len(digits) - 1, -1, -1):
        for _ in range(digits[level]):
            block = points[offset:offset + p ** level]
            gens.extend(_wreath_generators(block, p, level, degree))
            offset += p ** level
    return gens


def sylow_p(support: Sequence[int], p: int, *, degree: Optional[int] = None, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    points = list(support)
    if len(set(points)) != len(points):
        raise InvalidInputError(f"Support {points} repeats a point")
    if degree is None:
        degree = max(points, default=0)
    group = generate(sylow_generators(points, p, degree), cap, degree=degree)
    LOGGER.debug("Sylow %s-subgroup on %s points has order %s (expected p^%s)", p, len(points), group.order, nu_p_factorial(len(points), p))
    return group


def sylow_of_h_group(t: Tableau, p: int, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """A Sylow p-subgroup of H(t), built class by class on column blocks."""

    gens: List[Permutation] = []
    for run in equal_length_column_runs(t):
        if len(run) < 2:
            continue
        for column_perm in sylow_generators(list(range(1, len(run) + 1)), p, len(run)):
            column_map = {run[index]: run[column_perm.image(index + 1) - 1] for index in range(len(run))}
            gens.append(_column_block_permutation(t, column_map))
    return generate(gens, cap, degree=t.n)



def _conjugates_stay_inside(q: PermGroup, element_images: Tuple[int, ...], inverse_images: Tuple[int, ...], members) -> bool:
    for generator in q.generators:
        conj = tuple(element_images[generator.images[inverse_images[point] - 1] - 1] for point in range(q.degree))
        if conj not in members:
            return False
    return True


def _normalizer_brute_force(q: PermGroup, support: List[int]) -> List[Permutation]:
    members = {element.images for element in q.elements}
    found: List[Permutation] = []
    base = list(range(1, q.degree + 1))
    for arrangement in itertools.permutations(support):
        images = list(base)
        for point, value in zip(support, arrangement):
            images[point - 1] = value
        forward = tuple(images)
        backward = [0] * q.degree
        for point, value in enumerate(forward, start=1):
            backward[value - 1] = point
        if _conjugates_stay_inside(q, forward, tuple(backward), members):
            found.append(Permutation._trusted(forward))
    return found


def _normalizer_by_orbits(q: PermGroup, support: List[int], limit: int) -> List[Permutation]:
    """Solve ``q_i^g = r_i`` for every admissible tuple of targets ``r_i``.

    Given ``x·g`` for one point of each Q-orbit, ``(x·q_i)·g = (x·g)·r_i``
    propagates ``g`` over the orbit.
    """

    orbits = q.orbits()
    targets = [[element for element in q.elements if element.cycle_type() == generator.cycle_type()] for generator in q.generators]
    total = math.prod(len(choices) for choices in targets)
    if total > limit:
        raise ResourceLimitError(f"Normalizer search over {total} target tuples exceeds {limit}")
    found = set()
    for choice in itertools.product(*targets):
        def extend(index: int, assignment: Dict[int, int], used: set) -> None:
            if index == len(orbits):
                images = [assignment.get(point, point) for point in range(1, q.degree + 1)]
                found.add(Permutation._trusted(tuple(images)))
                return
            rep = orbits[index][0]
            for candidate in support:
                if candidate in used:
                    continue
                local = dict(assignment)
                local_used = set(used)
                local[rep] = candidate
                local_used.add(candidate)
                queue = deque([rep])
                consistent = True
                while queue and consistent:
                    x = queue.popleft()
                    for generator, target in zip(q.generators, choice):
                        source, image = generator.image(x), target.image(local[x])
                        if source in local:
                            if local[source] != image:
                                consistent = False
                                break
                        elif image in local_used:
                            consistent = False
                            break
                        else:
                            local[source] = image
                            local_used.add(image)
                            queue.append(source)
                if consistent:
                    extend(index + 1, local, local_used)

        extend(0, {}, set())
    return sorted(found, key=lambda perm: perm.images)


def support_normalizer(
    q: PermGroup,
    *,
    cap: int = DEFAULT_GROUP_CAP,
    search_limit: int = DEFAULT_NORMALIZER_SEARCH,
) -> PermGroup:
    """N_{S_support}(Q): normalizing permutations that fix every point outside the support of ``q``."""

    support = q.support()
    if math.factorial(len(support)) <= search_limit:
        local = _normalizer_brute_force(q, support)
    else:
        LOGGER.info("Support of size %s too large for brute force; searching by orbit structure", len(support))
        local = _normalizer_by_orbits(q, support, search_limit)
    return _subgroup_from_elements(q.degree, local, cap)


def normalizer(
    ambient_degree: int,
    q: PermGroup,
    *,
    cap: int = DEFAULT_GROUP_CAP,
    search_limit: int = DEFAULT_NORMALIZER_SEARCH,
) -> PermGroup:
    """N_{S_n}(Q) = S_{fixed points} × N_{S_support}(Q)."""

    if q.degree != ambient_degree:
        raise InvalidInputError(f"Q has degree {q.degree}, expected {ambient_degree}")
    support = set(q.support())
    fixed = [point for point in range(1, ambient_degree + 1) if point not in support]
    local_group = support_normalizer(q, cap=cap, search_limit=search_limit)
    gens = symmetric_group_generators(fixed, ambient_degree) + list(local_group.generators)
    return generate(gens, cap, degree=ambient_degree)


def right_transversal(r: PermGroup, q: PermGroup, rng: Optional[random.Random] = None) -> List[Permutation]:
    """One representative per right coset ``Rg`` of ``R`` in ``Q`` (random ones when ``rng`` is given)."""

    if not r.is_subgroup_of(q):
        raise InvalidInputError("R is not a subgroup of Q")
    q.check_cap()
    representatives = [Permutation.from_sympy(g, q.degree) for g in q.sympy.coset_transversal(r.sympy)]
    if r.order == 1:
        representatives.sort(key=lambda perm: perm.images)
    if rng is None:
        return representatives
    members = r.elements
    return [rng.choice(members) * representative for representative in representatives]


def normal_closure(group: PermGroup, elements: Iterable[Permutation], cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """The smallest normal subgroup of ``group`` containing ``elements``."""

    moved = [element.sympy for element in elements if not element.is_identity()]
    if not moved:
        return PermGroup(group.degree, [], cap=cap)
    return PermGroup.from_sympy(group.sympy.normal_closure(moved), group.degree, cap=cap)


def frattini_subgroup(q: PermGroup, p: int, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """Φ(Q) = Q^p [Q, Q] for a p-group ``Q``.

    Modulo ``[Q, Q]`` the p-th powers of the generators already generate ``Q^p``.
    """

    derived = PermGroup.from_sympy(q.sympy.derived_subgroup(), q.degree, cap=cap)
    powers = [generator ** p for generator in q.generators]
    gens = list(derived.generators) + [power for power in powers if not power.is_identity()]
    return PermGroup(q.degree, gens, cap=cap)


def maximal_subgroups(q: PermGroup, cap: int = DEFAULT_GROUP_CAP) -> List[PermGroup]:
    """Index-p subgroups of a p-group: preimages of hyperplanes of ``Q/Φ(Q)``.

    With ``b_1..b_r`` a basis of ``Q/Φ(Q)`` and a functional ``f`` scaled so that
    its first nonzero entry ``f_j`` is 1, the kernel is generated by ``Φ(Q)``
    and ``b_i · b_j^(-f_i)`` for ``i != j``.
    """

    if q.order == 1:
        return []
    p = q.prime_of()
    if p is None:
        raise InvalidInputError(f"Group of order {q.order} is not a p-group")
    frattini = frattini_subgroup(q, p, cap)

    basis: List[Permutation] = []
    span = frattini
    for generator in q.generators:
        if generator in span:
            continue
        basis.append(generator)
        span = PermGroup(q.degree, list(frattini.generators) + basis, cap=cap)
    rank = len(basis)

    result: List[PermGroup] = []
    for functional in itertools.product(range(p), repeat=rank):
        pivots = [index for index, value in enumerate(functional) if value]
        if not pivots or functional[pivots[0]] != 1:
            continue
        j = pivots[0]
        gens = list(frattini.generators) + [
            basis[i] * basis[j] ** ((-functional[i]) % p) for i in range(rank) if i != j
        ]
        result.append(PermGroup(q.degree, [gen for gen in gens if not gen.is_identity()], cap=cap))
    LOGGER.debug("Q of order %s: Frattini quotient of rank %s, %s maximal subgroups", q.order, rank, len(result))
    return result


def cyclic_subgroup(element: Permutation) -> PermGroup:
    return PermGroup(element.degree, [] if element.is_identity() else [element])


def cyclic_p_subgroups(group: PermGroup, p: int) -> List[PermGroup]:
    """Every cyclic subgroup of p-power order, the trivial one included."""

    require_prime(p)
    seen = set()
    result: List[PermGroup] = []
    for element in group.elements:
        order = element.order()
        if order != 1 and set(factorint(order)) != {p}:
            continue
        subgroup = cyclic_subgroup(element)
        key = subgroup.element_set
        if key in seen:
            continue
        seen.add(key)
        result.append(subgroup)
    return result


def subgroups(group: PermGroup, cap: int = DEFAULT_GROUP_CAP) -> List[PermGroup]:
    """All subgroups, by joining cyclic subgroups until nothing new appears."""

    cyclic: Dict[FrozenSet[Permutation], PermGroup] = {}
    for element in group.elements:
        subgroup = cyclic_subgroup(element)
        cyclic.setdefault(subgroup.element_set, subgroup)
    found: Dict[FrozenSet[Permutation], PermGroup] = dict(cyclic)
    frontier = list(found.values())
    while frontier:
        fresh: List[PermGroup] = []
        for subgroup in frontier:
            for key, generator_group in cyclic.items():
                if key <= subgroup.element_set:
                    continue
                joined = generate(list(subgroup.generators) + list(generator_group.generators), cap, degree=group.degree)
                if joined.element_set not in found:
                    found[joined.element_set] = joined
                    fresh.append(joined)
        frontier = fresh
    return sorted(found.values(), key=lambda subgroup: subgroup.order)


__all__ = [
    "DEFAULT_GROUP_CAP",
    "DEFAULT_NORMALIZER_SEARCH",
    "Permutation",
    "PermGroup",
    "generate",
    "standard_generators",
    "symmetric_group_generators",
    "column_group",
    "row_stabilizer",
    "equal_length_column_runs",
    "h_group_generators",
    "h_group",
    "h_group_order",
    "sylow_generators",
    "sylow_p",
    "sylow_of_h_group",
    "support_normalizer",
    "normalizer",
    "right_transversal",
    "normal_closure",
    "frattini_subgroup",
    "maximal_subgroups",
    "cyclic_subgroup",
    "cyclic_p_subgroups",
    "subgroups",
]
