"""Partitions, tableaux and the p-adic combinatorics of Young diagrams.

Everything here is a pure function on immutable values.  Cells are indexed
``(row, column)`` starting from 1 in the English convention, tableau entries
are the integers ``1..n`` and the abacus used for p-quotients always carries a
number of beads that is a multiple of ``p``.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import multiplicity
from sympy.utilities.iterables import partitions as sympy_partitions

from .errors import InvalidInputError
from .utils import format_int_list, parse_int_list, require_prime


LOGGER = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: Tuple[int, ...]
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(int(part) for part in self.parts)
        for index, part in enumerate(parts):
            if part < 1:
                raise InvalidInputError(f"Partition parts must be positive, got {parts}")
            if index and parts[index - 1] < part:
                raise InvalidInputError(f"Partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def from_parts(cls, values: Iterable[int]) -> "Partition":
        """Build a partition, dropping zero parts (as produced by bead arithmetic)."""

        return cls(tuple(value for value in values if value != 0))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(tuple(parse_int_list(text)))

    def __str__(self) -> str:
        return format_int_list(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def part(self, row: int) -> int:
        """Length of ``row`` (1-based); rows beyond the diagram have length 0."""

        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def cells(self) -> List[Cell]:
        return [(row, column) for row, length in enumerate(self.parts, start=1) for column in range(1, length + 1)]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for part in self.parts if part >= column) for column in range(1, self.parts[0] + 1)))


@dataclass(frozen=True)
class Composition:
    """A finite sequence of nonnegative integers."""

    parts: Tuple[int, ...]
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(int(part) for part in self.parts)
        if any(part < 0 for part in parts):
            raise InvalidInputError(f"Composition parts must be nonnegative, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of a Young diagram by ``1..n``."""

    rows: Tuple[Tuple[int, ...], ...]
    shape: Partition = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(entry) for entry in row) for row in self.rows)
        if any(not row for row in rows):
            raise InvalidInputError("Tableau rows must be nonempty")
        shape = Partition(tuple(len(row) for row in rows))
        entries = sorted(entry for row in rows for entry in row)
        if entries != list(range(1, shape.n + 1)):
            raise InvalidInputError(f"Tableau entries must be exactly 1..{shape.n}, got {entries}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", shape)

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        if text is None or not text.strip():
            raise InvalidInputError("Empty tableau text")
        return cls(tuple(tuple(parse_int_list(chunk)) for chunk in text.split(";")))

    def __str__(self) -> str:
        return ";".join(",".join(str(entry) for entry in row) for row in self.rows)

    @property
    def n(self) -> int:
        return self.shape.n

    def columns(self) -> List[Tuple[int, ...]]:
        if not self.rows:
            return []
        return [
            tuple(row[column] for row in self.rows if len(row) > column)
            for column in range(len(self.rows[0]))
        ]

    def row_of(self) -> Tuple[int, ...]:
        """``row_of()[x - 1]`` is the 0-based row holding entry ``x``."""

        rows = [0] * self.n
        for index, row in enumerate(self.rows):
            for entry in row:
                rows[entry - 1] = index
        return tuple(rows)

    def relabel(self, image: Callable[[int], int]) -> "Tableau":
        """Replace each entry ``x`` by ``image(x)`` (the tableau ``t·g``)."""

        return Tableau(tuple(tuple(image(entry) for entry in row) for row in self.rows))


@dataclass(frozen=True)
class TableauClass:
    row_standard: bool
    column_standard: bool

    @property
    def standard(self) -> bool:
        return self.row_standard and self.column_standard


@dataclass(frozen=True)
class HookData:
    shape: Partition
    hook_length: Dict[Cell, int]

    def product(self) -> int:
        return math.prod(self.hook_length.values())


@dataclass(frozen=True)
class BlockLabel:
    """Nakayama label of a p-block: p-core and weight, plus ``b = ν_p((wp)!)``."""

    p: int
    core: Partition
    weight: int
    defect_exponent: int

    @property
    def n(self) -> int:
        return self.core.n + self.weight * self.p


CompositionLike = Union[Composition, Partition, Sequence[int]]


def _as_composition(value: CompositionLike) -> Composition:
    if isinstance(value, Composition):
        return value
    if isinstance(value, Partition):
        return Composition(value.parts)
    return Composition(tuple(value))


def dominates(a: CompositionLike, b: CompositionLike) -> bool:
    """Dominance order on compositions of the same ``n`` (missing parts read as 0)."""

    first, second = _as_composition(a), _as_composition(b)
    if first.n != second.n:
        raise InvalidInputError(f"Cannot compare compositions of {first.n} and {second.n}")
    total_a = total_b = 0
    for index in range(max(len(first.parts), len(second.parts))):
        total_a += first.parts[index] if index < len(first.parts) else 0
        total_b += second.parts[index] if index < len(second.parts) else 0
        if total_a < total_b:
            return False
    return True


def classify_tableau(t: Tableau) -> TableauClass:
    row_standard = all(all(x < y for x, y in zip(row, row[1:])) for row in t.rows)
    column_standard = all(all(x < y for x, y in zip(column, column[1:])) for column in t.columns())
    return TableauClass(row_standard=row_standard, column_standard=column_standard)


def _require_row_standard(t: Tableau) -> None:
    if not classify_tableau(t).row_standard:
        raise InvalidInputError(f"Tableau {t} is not row-standard")


def shape_leq(t: Tableau, i: int) -> Composition:
    """Composition counting, row by row, the entries of ``t`` that are at most ``i``."""

    _require_row_standard(t)
    if not 1 <= i <= t.n:
        raise InvalidInputError(f"Entry bound {i} outside 1..{t.n}")
    return Composition(tuple(sum(1 for entry in row if entry <= i) for row in t.rows))


def _dominance_key_from_rows(row_of: Sequence[int], row_count: int) -> Tuple[int, ...]:
    counts = [0] * row_count
    key: List[int] = []
    for row in row_of:
        counts[row] += 1
        key.extend(counts)
    return tuple(key)


def dominance_key(t: Tableau) -> Tuple[int, ...]:
    """Concatenation of ``shape_leq(t, 1), ..., shape_leq(t, n)``.

    Lexicographic comparison of these keys is a linear extension of the
    dominance order on row-standard tableaux (and on tabloids).
    """

    return _dominance_key_from_rows(t.row_of(), len(t.rows))


def tableau_dominates(s: Tableau, t: Tableau) -> bool:
    if s.shape != t.shape:
        raise InvalidInputError(f"Tableaux have different shapes {s.shape} and {t.shape}")
    _require_row_standard(s)
    _require_row_standard(t)
    return all(dominates(shape_leq(s, i), shape_leq(t, i)) for i in range(1, s.n + 1))


def row_straighten(u: Tableau) -> Tableau:
    return Tableau(tuple(tuple(sorted(row)) for row in u.rows))


def greatest_tableau(shape: Partition) -> Tableau:
    """The tableau whose j-th row holds ``λ_1+…+λ_{j-1}+1, …, λ_1+…+λ_j``."""

    rows: List[Tuple[int, ...]] = []
    start = 1
    for length in shape.parts:
        rows.append(tuple(range(start, start + length)))
        start += length
    return Tableau(tuple(rows))


@lru_cache(maxsize=256)
def _standard_tableaux(shape: Partition) -> Tuple[Tableau, ...]:
    n = shape.n
    found: List[Tableau] = []
    filling: List[List[int]] = [[] for _ in shape.parts]

    def place(entry: int) -> None:
        if entry > n:
            found.append(Tableau(tuple(tuple(row) for row in filling)))
            return
        for index, length in enumerate(shape.parts):
            if len(filling[index]) >= length:
                continue
            if index and len(filling[index - 1]) <= len(filling[index]):
                continue
            filling[index].append(entry)
            place(entry + 1)
            filling[index].pop()

    place(1)
    found.sort(key=dominance_key, reverse=True)
    return tuple(found)


def standard_tableaux(shape: Partition) -> List[Tableau]:
    """All standard tableaux of ``shape`` in basis order (dominance-greatest first)."""

    return list(_standard_tableaux(shape))


def _fillings_by_blocks(block_sizes: Sequence[int], entries: Tuple[int, ...]) -> Iterable[List[Tuple[int, ...]]]:
    if not block_sizes:
        yield []
        return
    size, rest = block_sizes[0], block_sizes[1:]
    for chosen in itertools.combinations(entries, size):
        remaining = tuple(entry for entry in entries if entry not in chosen)
        for tail in _fillings_by_blocks(rest, remaining):
            yield [chosen] + tail


def row_standard_tableaux(shape: Partition) -> List[Tableau]:
    """Row-standard tableaux of ``shape`` (one per tabloid), lexicographic in the row reading word."""

    entries = tuple(range(1, shape.n + 1))
    return [Tableau(tuple(rows)) for rows in _fillings_by_blocks(shape.parts, entries)]


def column_standard_tableaux(shape: Partition) -> List[Tableau]:
    conjugate = shape.conjugate()
    entries = tuple(range(1, shape.n + 1))
    tableaux: List[Tableau] = []
    for columns in _fillings_by_blocks(conjugate.parts, entries):
        rows = tuple(
            tuple(column[row] for column in columns if len(column) > row) for row in range(len(shape.parts))
        )
        tableaux.append(Tableau(rows))
    return tableaux


def hook_lengths(shape: Partition) -> HookData:
    conjugate = shape.conjugate()
    table: Dict[Cell, int] = {}
    for row, column in shape.cells():
        arm = shape.part(row) - column
        leg = conjugate.part(column) - row
        table[(row, column)] = arm + leg + 1
    return HookData(shape=shape, hook_length=table)


@lru_cache(maxsize=1024)
def hook_dimension(shape: Partition) -> int:
    """``n! / Π h_α`` (the Hook Formula)."""

    return math.factorial(shape.n) // hook_lengths(shape).product()


def partitions_of(n: int) -> List[Partition]:
    """All partitions of ``n``, in decreasing lexicographic order."""

    if n < 0:
        raise InvalidInputError(f"Cannot enumerate partitions of {n}")
    if n == 0:
        return [Partition(())]
    result = []
    for multiplicities in sympy_partitions(n):
        parts: List[int] = []
        for part, count in multiplicities.items():
            if part > 0:
                parts.extend([part] * count)
        result.append(Partition(tuple(sorted(parts, reverse=True))))
    result.sort(key=lambda partition: partition.parts, reverse=True)
    return result


def nu_p(m: int, p: int) -> int:
    """Exponent of the largest power of ``p`` dividing ``m``."""

    require_prime(p)
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"ν_p is defined for positive integers, got {m!r}")
    return int(multiplicity(p, m))


def nu_p_factorial(m: int, p: int) -> int:
    """``ν_p(m!)`` by Legendre's sum, without forming ``m!``."""

    require_prime(p)
    if m < 0:
        raise InvalidInputError(f"Factorial of negative integer {m}")
    total = 0
    power = p
    while power <= m:
        total += m // power
        power *= p
    return total


def beta_numbers(shape: Partition, beads: int) -> List[int]:
    """First-column hook lengths padded to ``beads`` entries (``λ_i - i + beads``)."""

    if beads < len(shape):
        raise InvalidInputError(f"{beads} beads cannot encode a partition with {len(shape)} parts")
    return [shape.part(row) - row + beads for row in range(1, beads + 1)]


def partition_from_beta(betas: Iterable[int]) -> Partition:
    ordered = sorted(betas, reverse=True)
    if len(set(ordered)) != len(ordered) or (ordered and ordered[-1] < 0):
        raise InvalidInputError(f"Invalid bead positions {ordered}")
    count = len(ordered)
    return Partition.from_parts(beta + row - count for row, beta in enumerate(ordered, start=1))


def removable_rim_hooks(shape: Partition, length: int) -> List[Tuple[Cell, Partition]]:
    """Cells of hook length ``length`` with the partition left after stripping their rim hook."""

    table = hook_lengths(shape).hook_length
    betas = beta_numbers(shape, len(shape))
    result: List[Tuple[Cell, Partition]] = []
    for (row, column), hook in sorted(table.items()):
        if hook != length:
            continue
        moved = list(betas)
        moved[row - 1] -= length
        result.append(((row, column), partition_from_beta(moved)))
    return result


def is_p_core(shape: Partition, p: int) -> bool:
    require_prime(p)
    return not removable_rim_hooks(shape, p)


def p_core_and_weight(shape: Partition, p: int, rng: Optional[random.Random] = None) -> BlockLabel:
    """Strip rim p-hooks until none is left.

    The first removable hook (top-most cell) is stripped at each step unless an
    ``rng`` is supplied, in which case a random one is chosen.
    """

    require_prime(p)
    current = shape
    weight = 0
    while True:
        hooks = removable_rim_hooks(current, p)
        if not hooks:
            break
        _, current = rng.choice(hooks) if rng is not None else hooks[0]
        weight += 1
    return BlockLabel(p=p, core=current, weight=weight, defect_exponent=nu_p_factorial(weight * p, p))


def _normalised_beads(length: int, p: int) -> int:
    return -(-length // p) * p


def p_quotient(shape: Partition, p: int) -> Tuple[Partition, ...]:
    """p-quotient read off an abacus whose bead count is a multiple of ``p``.

    Runner ``j`` carries the beads congruent to ``j`` mod ``p``; its bead
    positions ``k_1 > … > k_m`` give the component ``(k_i - (m - i))``.
    """

    require_prime(p)
    betas = beta_numbers(shape, _normalised_beads(len(shape), p))
    components: List[Partition] = []
    for runner in range(p):
        positions = sorted((beta // p for beta in betas if beta % p == runner), reverse=True)
        count = len(positions)
        components.append(Partition.from_parts(position - (count - index) for index, position in enumerate(positions, start=1)))
    return tuple(components)


def from_core_and_quotient(core: Partition, quotient: Sequence[Partition], p: int) -> Partition:
    """Reassemble the partition with p-core ``core`` and p-quotient ``quotient``.

    Inverse of :func:`p_quotient` under the same bead normalization.
    """

    require_prime(p)
    if len(quotient) != p:
        raise InvalidInputError(f"A {p}-quotient has {p} components, got {len(quotient)}")
    if not is_p_core(core, p):
        raise InvalidInputError(f"{core} is not a {p}-core")
    beads = _normalised_beads(len(core), p)
    while True:
        betas = beta_numbers(core, beads)
        counts = [sum(1 for beta in betas if beta % p == runner) for runner in range(p)]
        if all(counts[runner] >= len(quotient[runner]) for runner in range(p)):
            break
        beads += p
    moved: List[int] = []
    for runner in range(p):
        count = counts[runner]
        component = quotient[runner]
        for index in range(1, count + 1):
            position = component.part(index) + count - index
            moved.append(position * p + runner)
    return partition_from_beta(moved)


def initial_partition(core: Partition, w: int, p: int) -> Partition:
    """``γ + wp = (γ_1 + wp, γ_2, …, γ_k)``; ``core`` must be a p-core."""

    if w < 0:
        raise InvalidInputError(f"Weight must be nonnegative, got {w}")
    if not is_p_core(core, p):
        raise InvalidInputError(f"{core} is not a {p}-core")
    if w == 0:
        return core
    if not core.parts:
        return Partition((w * p,))
    return Partition((core.parts[0] + w * p,) + core.parts[1:])


def character_height(shape: Partition, p: int) -> int:
    """``h`` with ``[dim S^λ]_p = p^{a-b+h}``, ``a = ν_p(n!)``, ``b = ν_p((wp)!)``."""

    label = p_core_and_weight(shape, p)
    a = nu_p_factorial(shape.n, p)
    return nu_p(hook_dimension(shape), p) - (a - label.defect_exponent)


def height_from_quotient(shape: Partition, p: int) -> int:
    """Height via the product formula: ``ν_p(multinomial(w; c_i)) + Σ ν_p(dim S^{μ(i)})``."""

    label = p_core_and_weight(shape, p)
    components = p_quotient(shape, p)
    multinomial = nu_p_factorial(label.weight, p) - sum(nu_p_factorial(component.n, p) for component in components)
    return multinomial + sum(nu_p(hook_dimension(component), p) for component in components)


__all__ = [
    "Partition",
    "Composition",
    "Tableau",
    "TableauClass",
    "HookData",
    "BlockLabel",
    "dominates",
    "shape_leq",
    "dominance_key",
    "tableau_dominates",
    "row_straighten",
    "classify_tableau",
    "greatest_tableau",
    "standard_tableaux",
    "row_standard_tableaux",
    "column_standard_tableaux",
    "hook_lengths",
    "hook_dimension",
    "partitions_of",
    "nu_p",
    "nu_p_factorial",
    "beta_numbers",
    "partition_from_beta",
    "removable_rim_hooks",
    "is_p_core",
    "p_core_and_weight",
    "p_quotient",
    "from_core_and_quotient",
    "initial_partition",
    "character_height",
    "height_from_quotient",
]
