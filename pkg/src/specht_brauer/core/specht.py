"""Young permutation modules, polytabloids and Specht modules over F_p.

A tabloid is stored as its *row vector*: position ``x - 1`` holds the
(0-based) row of entry ``x``.  Tabloid bases are ordered lexicographically by
the row reading word of the row-standard representative, and Specht modules
use the standard polytabloids ordered dominance-greatest first.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .combinatorics import Partition, Tableau, hook_dimension, row_standard_tableaux, standard_tableaux
from .errors import InvalidInputError, NotInSpanError, ResourceLimitError
from .groups import DEFAULT_GROUP_CAP, Permutation, column_group, standard_generators
from .linalg import DEFAULT_INTERTWINER_ENTRIES, FpMatrix, FpVector, MatrixSpace, Subspace, commutant, intertwiners, matmul_mod, rank
from .utils import require_prime


LOGGER = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 2 ** 20
DEFAULT_RANDOM_TRIALS = 200


@dataclass(frozen=True)
class Tabloid:
    """A tableau up to reordering within rows; ``rows`` are sorted."""

    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, t: Tableau) -> "Tabloid":
        return cls(tuple(tuple(sorted(row)) for row in t.rows))

    @classmethod
    def from_row_vector(cls, row_of: Sequence[int], row_count: int) -> "Tabloid":
        rows: List[List[int]] = [[] for _ in range(row_count)]
        for entry, row in enumerate(row_of, start=1):
            rows[int(row)].append(entry)
        return cls(tuple(tuple(row) for row in rows))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def row_vector(self) -> Tuple[int, ...]:
        n = sum(len(row) for row in self.rows)
        result = [0] * n
        for index, row in enumerate(self.rows):
            for entry in row:
                result[entry - 1] = index
        return tuple(result)

    def __str__(self) -> str:
        return "[" + "|".join(",".join(str(entry) for entry in row) for row in self.rows) + "]"


class TabloidBasis:
    """The tabloids of one shape with a vectorised index lookup."""

    def __init__(self, shape: Partition) -> None:
        self.shape = shape
        self.n = shape.n
        self.row_count = max(len(shape), 1)
        representatives = row_standard_tableaux(shape)
        self.row_vectors = np.array([t.row_of() for t in representatives], dtype=np.int64).reshape(len(representatives), self.n)
        # Keys read a row vector as a base-row_count number; past int64 they are Python ints.
        fits = self.row_count ** self.n <= np.iinfo(np.int64).max
        self._key_dtype = np.int64 if fits else object
        self._weights = np.array([self.row_count ** power for power in range(self.n)], dtype=self._key_dtype)
        keys = self._keys(self.row_vectors)
        self._order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._order]
        LOGGER.debug("Tabloid basis of %s has %s elements", shape, len(representatives))

    @property
    def size(self) -> int:
        return int(self.row_vectors.shape[0])

    def __len__(self) -> int:
        return self.size

    def tabloid(self, index: int) -> Tabloid:
        return Tabloid.from_row_vector(self.row_vectors[index], len(self.shape))

    def labels(self) -> Tuple[str, ...]:
        return tuple(str(self.tabloid(index)) for index in range(self.size))

    def _keys(self, row_vectors: np.ndarray) -> np.ndarray:
        return np.asarray(row_vectors, dtype=np.int64).astype(self._key_dtype) @ self._weights

    def indices_of(self, row_vectors: np.ndarray) -> np.ndarray:
        keys = self._keys(row_vectors)
        positions = np.searchsorted(self._sorted_keys, keys)
        if np.any(positions >= self.size) or np.any(self._sorted_keys[np.minimum(positions, self.size - 1)] != keys):
            raise InvalidInputError(f"Row vectors do not describe tabloids of shape {self.shape}")
        return self._order[positions]

    def index_of(self, tabloid: Tabloid) -> int:
        if tabloid.shape != self.shape:
            raise InvalidInputError(f"Tabloid {tabloid} does not have shape {self.shape}")
        return int(self.indices_of(np.array([tabloid.row_vector()]))[0])

    def act(self, row_vectors: np.ndarray, g: Permutation) -> np.ndarray:
        """Row vectors of ``{t}·g``: entry ``x·g`` takes the row of ``x``."""

        if g.degree != self.n:
            raise InvalidInputError(f"Permutation of degree {g.degree} cannot act on tabloids of {self.shape}")
        images = np.asarray(g.images, dtype=np.int64) - 1
        moved = np.empty_like(row_vectors)
        moved[:, images] = row_vectors
        return moved

    def permutation_indices(self, g: Permutation) -> np.ndarray:
        """``perm[i]`` is the index of ``tabloid(i)·g``."""

        return self.indices_of(self.act(self.row_vectors, g))

    def permutation_matrix(self, g: Permutation, p: int) -> FpMatrix:
        perm = self.permutation_indices(g)
        data = np.zeros((self.size, self.size), dtype=np.int64)
        data[np.arange(self.size), perm] = 1
        return FpMatrix(p, data)

    def fixed_indices(self, generators: Sequence[Permutation]) -> List[int]:
        fixed = np.ones(self.size, dtype=bool)
        for generator in generators:
            fixed &= self.permutation_indices(generator) == np.arange(self.size)
        return [int(index) for index in np.flatnonzero(fixed)]


@lru_cache(maxsize=64)
def tabloid_basis(shape: Partition) -> TabloidBasis:
    return TabloidBasis(shape)


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """A matrix representation: one matrix per generator, acting on row vectors.

    ``matrix_function`` (when present) computes the matrix of any permutation
    of the ambient degree, so elements outside ``generators`` can be queried.
    """

    p: int
    degree: int
    labels: Tuple[str, ...]
    generators: Tuple[Permutation, ...]
    actions: Tuple[FpMatrix, ...]
    name: str = ""
    matrix_function: Optional[Callable[[Permutation], FpMatrix]] = field(default=None, repr=False)
    _cache: Dict[Permutation, FpMatrix] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if len(self.generators) != len(self.actions):
            raise InvalidInputError("Every generator needs exactly one action matrix")
        for generator, action in zip(self.generators, self.actions):
            if generator.degree != self.degree:
                raise InvalidInputError(f"Generator {generator} does not have degree {self.degree}")
            if action.shape != (self.dimension, self.dimension) or action.p != self.p:
                raise InvalidInputError(f"Action of {generator} has shape {action.shape}, expected {self.dimension}")
        for generator, action in zip(self.generators, self.actions):
            self._cache.setdefault(generator, action)

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def identity(self) -> FpMatrix:
        return FpMatrix.identity(self.dimension, self.p)

    def matrix_of(self, g: Permutation) -> FpMatrix:
        if g.degree != self.degree:
            raise InvalidInputError(f"Permutation {g} has degree {g.degree}, module has degree {self.degree}")
        cached = self._cache.get(g)
        if cached is not None:
            return cached
        if g.is_identity():
            return self.identity()
        if self.matrix_function is None:
            raise InvalidInputError(f"Module {self.name or '?'} has no action recorded for {g}")
        matrix = self.matrix_function(g)
        self._cache[g] = matrix
        return matrix

    def matrix_of_word(self, word: Sequence[Permutation]) -> FpMatrix:
        result = self.identity()
        for letter in word:
            result = result @ self.matrix_of(letter)
        return result

    def with_generators(self, generators: Sequence[Permutation]) -> "ModuleRep":
        """The same module presented on ``generators`` (matrices computed on demand)."""

        gens = tuple(generators)
        return ModuleRep(
            self.p,
            self.degree,
            self.labels,
            gens,
            tuple(self.matrix_of(g) for g in gens),
            self.name,
            self.matrix_function,
        )

    def relabelled(self, point_map: Mapping[int, int], degree: int) -> "ModuleRep":
        """Transport the action along an injection of points ``i ↦ point_map[i]``."""

        inverse = {image: point for point, image in point_map.items()}
        if len(inverse) != len(point_map):
            raise InvalidInputError("Point map is not injective")

        def pull_back(g: Permutation) -> Permutation:
            moved = g.support()
            if any(point not in inverse for point in moved):
                raise InvalidInputError(f"{g} moves points outside the relabelled range")
            return Permutation.from_mapping({inverse[point]: inverse[g.image(point)] for point in moved}, self.degree)

        gens = tuple(g.relabel(point_map, degree) for g in self.generators)
        source = self
        return ModuleRep(
            self.p,
            degree,
            self.labels,
            gens,
            self.actions,
            f"{self.name} relabelled" if self.name else "relabelled",
            lambda g: source.matrix_of(pull_back(g)),
        )


def young_module(shape: Partition, p: int, gens: Optional[Sequence[Permutation]] = None) -> ModuleRep:
    """M^λ on the tabloid basis."""

    require_prime(p)
    basis = tabloid_basis(shape)
    gens = tuple(gens) if gens is not None else tuple(standard_generators(shape.n))
    return ModuleRep(
        p,
        shape.n,
        basis.labels(),
        gens,
        tuple(basis.permutation_matrix(g, p) for g in gens),
        f"M^({shape})",
        lambda g: basis.permutation_matrix(g, p),
    )


def polytabloid(t: Tableau, p: int, *, cap: int = DEFAULT_GROUP_CAP) -> FpVector:
    """``e_t = Σ_{g ∈ C(t)} sgn(g) {t·g}`` in the tabloid basis of ``t.shape``."""

    require_prime(p)
    basis = tabloid_basis(t.shape)
    group = column_group(t, cap)
    elements = group.elements
    images = np.array([g.images for g in elements], dtype=np.int64).reshape(len(elements), t.n) - 1
    moved = np.empty_like(images)
    moved[np.arange(len(elements))[:, None], images] = np.asarray(t.row_of(), dtype=np.int64)
    vector = np.zeros(basis.size, dtype=np.int64)
    np.add.at(vector, basis.indices_of(moved), [g.sign() for g in elements])
    return FpVector(p, vector)


def _entry_map(source: Tableau, target: Tableau) -> Permutation:
    """σ with ``source·σ = target``."""

    return Permutation.from_mapping(
        {a: b for row_a, row_b in zip(source.rows, target.rows) for a, b in zip(row_a, row_b)},
        source.n,
    )


class SpechtModule:
    """S^λ on the standard polytabloid basis, with its embedding into M^λ."""

    def __init__(self, shape: Partition, p: int, gens: Optional[Sequence[Permutation]] = None, *, cap: int = DEFAULT_GROUP_CAP) -> None:
        require_prime(p)
        self.shape = shape
        self.p = p
        self.tableaux = standard_tableaux(shape)
        self.tabloids = tabloid_basis(shape)
        self.embedding = self._build_embedding(cap)
        self.lead_columns = self.tabloids.indices_of(np.array([t.row_of() for t in self.tableaux], dtype=np.int64).reshape(len(self.tableaux), shape.n))
        self._triangle = self.embedding.data[:, self.lead_columns]
        self._triangle_support = [np.flatnonzero(self._triangle[k, k + 1:]) + k + 1 for k in range(self.dimension)]
        gens = tuple(gens) if gens is not None else tuple(standard_generators(shape.n))
        self.module = ModuleRep(
            p,
            shape.n,
            tuple(str(t) for t in self.tableaux),
            gens,
            tuple(self.action_matrix(g) for g in gens),
            f"S^({shape})",
            self.action_matrix,
        )
        LOGGER.info("Built S^(%s) over F_%s: dimension %s inside %s tabloids", shape, p, self.dimension, self.tabloids.size)

    @property
    def dimension(self) -> int:
        return len(self.tableaux)

    def _build_embedding(self, cap: int) -> FpMatrix:
        basis = self.tabloids
        if not self.tableaux:
            return FpMatrix(self.p, np.zeros((0, basis.size), dtype=np.int64))
        reference = self.tableaux[0]
        seed = polytabloid(reference, self.p, cap=cap).data
        support = np.flatnonzero(seed)
        coefficients = seed[support]
        support_rows = basis.row_vectors[support]
        data = np.zeros((self.dimension, basis.size), dtype=np.int64)
        for row, t in enumerate(self.tableaux):
            sigma = _entry_map(reference, t)
            data[row, basis.indices_of(basis.act(support_rows, sigma))] = coefficients
        return FpMatrix(self.p, data)

    def polytabloid(self, t: Tableau) -> FpVector:
        if t.shape != self.shape:
            raise InvalidInputError(f"Tableau {t} does not have shape {self.shape}")
        return polytabloid(t, self.p)

    def straighten(self, vectors: np.ndarray, *, check: bool = True) -> np.ndarray:
        """Standard-basis coordinates of a stack of tabloid-basis vectors.

        Elimination runs against the leading tabloids of the standard
        polytabloids, which form a unitriangular system in basis order.
        """

        p = self.p
        data = np.mod(np.asarray(vectors, dtype=np.int64), p)
        single = data.ndim == 1
        rows = data[None, :] if single else data
        if rows.shape[1] != self.tabloids.size:
            raise InvalidInputError(f"Expected vectors of length {self.tabloids.size}, got {rows.shape[1]}")
        work = rows[:, self.lead_columns].copy()
        coords = np.zeros_like(work)
        for k in range(self.dimension):
            column = work[:, k] % p
            coords[:, k] = column
            support = self._triangle_support[k]
            if support.size and column.any():
                work[:, support] = (work[:, support] - np.outer(column, self._triangle[k, support])) % p
        if check and not np.array_equal(matmul_mod(coords, self.embedding.data, p), rows):
            raise NotInSpanError("Vector is not a combination of polytabloids")
        return coords[0] if single else coords

    def straighten_vector(self, v: FpVector) -> FpVector:
        return FpVector(self.p, self.straighten(v.data))

    def coordinates_of(self, t: Tableau) -> FpVector:
        """Coordinates of ``e_t`` for any tableau ``t`` of the shape."""

        return self.straighten_vector(self.polytabloid(t))

    def action_matrix(self, g: Permutation) -> FpMatrix:
        perm = self.tabloids.permutation_indices(g)
        moved = np.empty_like(self.embedding.data)
        moved[:, perm] = self.embedding.data
        return FpMatrix(self.p, self.straighten(moved, check=False))


def specht_module(
    shape: Partition,
    p: int,
    gens: Optional[Sequence[Permutation]] = None,
    *,
    max_dim: Optional[int] = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> SpechtModule:
    dimension = hook_dimension(shape)
    if max_dim is not None and dimension > max_dim:
        raise ResourceLimitError(f"dim S^({shape}) = {dimension} exceeds the limit {max_dim}", partial=dimension)
    return SpechtModule(shape, p, gens, cap=cap)


def straighten_vector(module: SpechtModule, v: FpVector) -> FpVector:
    return module.straighten_vector(v)


def endomorphism_dimension(m: ModuleRep, *, entry_limit: int = DEFAULT_INTERTWINER_ENTRIES) -> int:
    return endomorphism_algebra(m, entry_limit=entry_limit).dimension


def endomorphism_algebra(m: ModuleRep, *, entry_limit: int = DEFAULT_INTERTWINER_ENTRIES) -> MatrixSpace:
    return commutant(list(m.actions), m.p, size=m.dimension, entry_limit=entry_limit)


def _power_rank(matrix: FpMatrix) -> int:
    """Rank of ``X^k`` for some ``k ≥ dim`` (the Fitting rank)."""

    size = matrix.shape[0]
    power = matrix
    steps = 1
    while steps < size:
        power = power @ power
        steps *= 2
    return rank(power.data, matrix.p)


def _normalised_coefficients(dimension: int, p: int):
    """Nonzero coefficient tuples whose first nonzero entry is 1."""

    for lead in range(dimension):
        for tail in itertools.product(range(p), repeat=dimension - lead - 1):
            yield (0,) * lead + (1,) + tail


def _random_coefficients(dimension: int, p: int, rng: random.Random) -> Tuple[int, ...]:
    while True:
        coefficients = tuple(rng.randrange(p) for _ in range(dimension))
        if any(coefficients):
            return coefficients


def is_indecomposable(
    m: ModuleRep,
    *,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
    random_trials: int = DEFAULT_RANDOM_TRIALS,
    rng: Optional[random.Random] = None,
    entry_limit: int = DEFAULT_INTERTWINER_ENTRIES,
) -> bool:
    """True iff End(m) is local, i.e. every endomorphism is nilpotent or invertible."""

    if m.dimension == 0:
        return False
    algebra = endomorphism_algebra(m, entry_limit=entry_limit)
    k = algebra.dimension
    if k == 1:
        return True
    size = m.dimension
    if m.p ** k <= enumeration_limit:
        for coefficients in _normalised_coefficients(k, m.p):
            if 0 < _power_rank(algebra.combination(coefficients)) < size:
                return False
        return True
    LOGGER.warning("End has dimension %s over F_%s; searching %s random elements for a splitting", k, m.p, random_trials)
    rng = rng or random.Random(0)
    for _ in range(random_trials):
        if 0 < _power_rank(algebra.combination(_random_coefficients(k, m.p, rng))) < size:
            return False
    raise ResourceLimitError(
        f"Could not decide locality of an endomorphism algebra of dimension {k} over F_{m.p}",
        partial=k,
    )


def _require_matching(m: ModuleRep, n: ModuleRep) -> None:
    if m.p != n.p:
        raise InvalidInputError(f"Modules over F_{m.p} and F_{n.p} cannot be compared")
    if m.generators != n.generators:
        raise InvalidInputError("Modules are presented on different generators")


def hom_space(m: ModuleRep, n: ModuleRep, *, entry_limit: int = DEFAULT_INTERTWINER_ENTRIES) -> MatrixSpace:
    """Module maps ``m → n``: matrices ``X`` with ``A_m X = X A_n`` for each generator."""

    _require_matching(m, n)
    return intertwiners(list(m.actions), list(n.actions), m.p, rows=m.dimension, cols=n.dimension, entry_limit=entry_limit)


def is_isomorphic(
    m: ModuleRep,
    n: ModuleRep,
    *,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
    random_trials: int = DEFAULT_RANDOM_TRIALS,
    rng: Optional[random.Random] = None,
    entry_limit: int = DEFAULT_INTERTWINER_ENTRIES,
) -> bool:
    _require_matching(m, n)
    if m.dimension != n.dimension:
        return False
    if m.dimension == 0:
        return True
    homs = hom_space(m, n, entry_limit=entry_limit)
    k = homs.dimension
    if k == 0:
        return False
    if m.p ** k <= enumeration_limit:
        return any(homs.combination(c).is_invertible() for c in _normalised_coefficients(k, m.p))
    rng = rng or random.Random(0)
    for _ in range(random_trials):
        if homs.combination(_random_coefficients(k, m.p, rng)).is_invertible():
            return True
    raise ResourceLimitError(f"No invertible map found among {random_trials} random elements of a {k}-dimensional Hom space", partial=k)


def submodule_generated(m: ModuleRep, vectors) -> Subspace:
    """Smallest subspace containing ``vectors`` and stable under every generator."""

    space = Subspace.span(vectors, m.p, m.dimension)
    while True:
        images = [space.basis] + [matmul_mod(space.basis, action.data, m.p) for action in m.actions]
        grown = Subspace.span(np.vstack(images), m.p, m.dimension)
        if grown.dimension == space.dimension:
            return space
        space = grown


def restrict_to_submodule(m: ModuleRep, sub: Subspace) -> ModuleRep:
    """The action of ``m`` on an invariant subspace, in ``sub``'s echelon coordinates."""

    actions = []
    for action in m.actions:
        images = matmul_mod(sub.basis, action.data, m.p)
        actions.append(FpMatrix(m.p, sub.coordinates(images)))
    labels = tuple(f"w{index + 1}" for index in range(sub.dimension))
    return ModuleRep(m.p, m.degree, labels, m.generators, tuple(actions), f"submodule of {m.name}".strip())


def looks_simple(m: ModuleRep, *, trials: int = 20, rng: Optional[random.Random] = None) -> bool:
    """End(m) is scalar and random nonzero vectors each generate the whole module."""

    if m.dimension == 0 or endomorphism_dimension(m) != 1:
        return False
    rng = rng or random.Random(0)
    for _ in range(trials):
        vector = _random_coefficients(m.dimension, m.p, rng)
        if submodule_generated(m, np.array([vector])).dimension != m.dimension:
            return False
    return True


def format_vector(v: FpVector, labels: Sequence[str]) -> str:
    """Formal sum such as ``[1,3|2] - [2,3|1]``; residues above ``p/2`` print as negatives."""

    terms: List[str] = []
    for index in v.support():
        value = int(v.data[index])
        signed = value - v.p if value > v.p // 2 else value
        magnitude = abs(signed)
        body = labels[index] if magnitude == 1 else f"{magnitude}{labels[index]}"
        if not terms:
            terms.append(body if signed > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if signed > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


__all__ = [
    "Tabloid",
    "TabloidBasis",
    "tabloid_basis",
    "ModuleRep",
    "young_module",
    "polytabloid",
    "SpechtModule",
    "specht_module",
    "straighten_vector",
    "endomorphism_dimension",
    "endomorphism_algebra",
    "is_indecomposable",
    "hom_space",
    "is_isomorphic",
    "submodule_generated",
    "restrict_to_submodule",
    "looks_simple",
    "format_vector",
]
