"""Exact dense linear algebra over the prime field F_p.

Vectors are rows and matrices act on the right (``v ↦ vA``), matching the
right action of permutations on tabloids.  Arrays are ``int64`` residues;
characteristic 2 eliminates on bit-packed rows.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import InvalidInputError, ResourceLimitError
from .utils import require_prime


LOGGER = logging.getLogger(__name__)

_FLOAT_EXACT = 2 ** 53
_INT_EXACT = 2 ** 62

ArrayLike = Union[np.ndarray, Sequence[Sequence[int]], "FpMatrix"]


def reduce_mod(values, p: int) -> np.ndarray:
    return np.mod(np.asarray(values, dtype=np.int64), p)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` without overflow (float64 BLAS whenever that is exact)."""

    inner = a.shape[-1] if a.ndim else 0
    bound = max(inner, 1) * (p - 1) ** 2
    if bound < _FLOAT_EXACT:
        product = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.mod(np.rint(product).astype(np.int64), p)
    if bound < _INT_EXACT:
        return np.mod(np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64), p)
    product = np.asarray(a, dtype=object) @ np.asarray(b, dtype=object)
    return np.mod(product, p).astype(np.int64)


def _rref_gf2(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    rows, cols = matrix.shape
    packed = np.packbits((matrix & 1).astype(np.uint8), axis=1)
    pivots: List[int] = []
    rank = 0
    for column in range(cols):
        if rank == rows:
            break
        byte, shift = column >> 3, 7 - (column & 7)
        bits = (packed[:, byte] >> shift) & 1
        candidates = np.flatnonzero(bits[rank:])
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            packed[[rank, pivot]] = packed[[pivot, rank]]
            bits[[rank, pivot]] = bits[[pivot, rank]]
        mask = bits.astype(bool)
        mask[rank] = False
        if mask.any():
            packed[mask] ^= packed[rank]
        pivots.append(column)
        rank += 1
    reduced = np.unpackbits(packed[:rank], axis=1, count=cols).astype(np.int64)
    return reduced, pivots


def _rref_prime(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    work = matrix.copy()
    rows, cols = work.shape
    pivots: List[int] = []
    rank = 0
    for column in range(cols):
        if rank == rows:
            break
        candidates = np.flatnonzero(work[rank:, column])
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        inverse = pow(int(work[rank, column]), p - 2, p)
        work[rank] = (work[rank] * inverse) % p
        factors = work[:, column].copy()
        factors[rank] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            work[targets] = (work[targets] - np.outer(factors[targets], work[rank])) % p
        pivots.append(column)
        rank += 1
    return work[:rank], pivots


def rref(matrix: ArrayLike, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form (nonzero rows only) and the pivot columns."""

    data = reduce_mod(matrix.data if isinstance(matrix, FpMatrix) else matrix, p)
    if data.ndim != 2:
        raise InvalidInputError(f"Expected a 2-dimensional array, got shape {data.shape}")
    if data.shape[0] == 0 or data.shape[1] == 0:
        return np.zeros((0, data.shape[1]), dtype=np.int64), []
    if p == 2:
        return _rref_gf2(data)
    return _rref_prime(data, p)


def rank(matrix: ArrayLike, p: int) -> int:
    return len(rref(matrix, p)[1])


def nullspace(matrix: ArrayLike, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : A xᵀ = 0}``."""

    data = reduce_mod(matrix.data if isinstance(matrix, FpMatrix) else matrix, p)
    cols = data.shape[1]
    reduced, pivots = rref(data, p)
    free = [column for column in range(cols) if column not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for index, column in enumerate(free):
        basis[index, column] = 1
        for row, pivot in enumerate(pivots):
            basis[index, pivot] = (-reduced[row, column]) % p
    return basis


def left_nullspace(matrix: ArrayLike, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : x A = 0}``."""

    data = matrix.data if isinstance(matrix, FpMatrix) else np.asarray(matrix)
    return nullspace(np.asarray(data).T, p)


@dataclass(frozen=True)
class LinearSolution:
    """Result of ``solve``: one particular solution plus the kernel, or inconsistency."""

    consistent: bool
    particular: Optional[np.ndarray]
    kernel: np.ndarray


def solve(matrix: ArrayLike, rhs, p: int) -> LinearSolution:
    """Solve ``A x = b`` over F_p."""

    data = reduce_mod(matrix.data if isinstance(matrix, FpMatrix) else matrix, p)
    b = reduce_mod(rhs.data if isinstance(rhs, FpVector) else rhs, p)
    if data.ndim != 2 or b.ndim != 1 or data.shape[0] != b.shape[0]:
        raise InvalidInputError(f"Cannot solve system with matrix {data.shape} and right-hand side {b.shape}")
    cols = data.shape[1]
    kernel = nullspace(data, p)
    reduced, pivots = rref(np.hstack([data, b[:, None]]), p)
    if pivots and pivots[-1] == cols:
        return LinearSolution(False, None, kernel)
    particular = np.zeros(cols, dtype=np.int64)
    for row, pivot in enumerate(pivots):
        particular[pivot] = reduced[row, cols]
    return LinearSolution(True, particular, kernel)


@dataclass(frozen=True, eq=False)
class FpVector:
    p: int
    data: np.ndarray

    def __post_init__(self) -> None:
        require_prime(self.p)
        data = reduce_mod(self.data, self.p)
        if data.ndim != 1:
            raise InvalidInputError(f"A vector needs one dimension, got shape {data.shape}")
        object.__setattr__(self, "data", data)

    @classmethod
    def zeros(cls, length: int, p: int) -> "FpVector":
        return cls(p, np.zeros(length, dtype=np.int64))

    def __len__(self) -> int:
        return int(self.data.shape[0])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FpVector) and self.p == other.p and np.array_equal(self.data, other.data)

    def __add__(self, other: "FpVector") -> "FpVector":
        return FpVector(self.p, self.data + other.data)

    def __sub__(self, other: "FpVector") -> "FpVector":
        return FpVector(self.p, self.data - other.data)

    def scaled(self, scalar: int) -> "FpVector":
        return FpVector(self.p, self.data * scalar)

    def __matmul__(self, matrix: "FpMatrix") -> "FpVector":
        return FpVector(self.p, matmul_mod(self.data[None, :], matrix.data, self.p)[0])

    def is_zero(self) -> bool:
        return not self.data.any()

    def support(self) -> List[int]:
        return [int(index) for index in np.flatnonzero(self.data)]

    def to_list(self) -> List[int]:
        return [int(value) for value in self.data]


@dataclass(frozen=True, eq=False)
class FpMatrix:
    p: int
    data: np.ndarray

    def __post_init__(self) -> None:
        require_prime(self.p)
        data = reduce_mod(self.data, self.p)
        if data.ndim != 2:
            raise InvalidInputError(f"A matrix needs two dimensions, got shape {data.shape}")
        object.__setattr__(self, "data", data)

    @classmethod
    def identity(cls, size: int, p: int) -> "FpMatrix":
        return cls(p, np.eye(size, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @property
    def shape(self) -> Tuple[int, int]:
        return int(self.data.shape[0]), int(self.data.shape[1])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FpMatrix) and self.p == other.p and np.array_equal(self.data, other.data)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.shape[1] != other.shape[0]:
            raise InvalidInputError(f"Cannot multiply {self.shape} by {other.shape}")
        return FpMatrix(self.p, matmul_mod(self.data, other.data, self.p))

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.p, self.data + other.data)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.p, self.data - other.data)

    def scaled(self, scalar: int) -> "FpMatrix":
        return FpMatrix(self.p, self.data * scalar)

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.p, self.data.T.copy())

    def rank(self) -> int:
        return rank(self.data, self.p)

    def rref(self) -> Tuple[np.ndarray, List[int]]:
        return rref(self.data, self.p)

    def nullspace(self) -> np.ndarray:
        return nullspace(self.data, self.p)

    def left_nullspace(self) -> np.ndarray:
        return left_nullspace(self.data, self.p)

    def is_invertible(self) -> bool:
        rows, cols = self.shape
        return rows == cols and self.rank() == rows

    def inverse(self) -> "FpMatrix":
        rows, cols = self.shape
        if rows != cols:
            raise InvalidInputError(f"Only square matrices are invertible, got {self.shape}")
        reduced, pivots = rref(np.hstack([self.data, np.eye(rows, dtype=np.int64)]), self.p)
        if pivots[:rows] != list(range(rows)):
            raise InvalidInputError("Matrix is singular")
        return FpMatrix(self.p, reduced[:, rows:])

    def power(self, exponent: int) -> "FpMatrix":
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = FpMatrix.identity(self.shape[0], self.p)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def to_lists(self) -> List[List[int]]:
        return [[int(value) for value in row] for row in self.data]

    def to_text(self) -> str:
        rows, cols = self.shape
        lines = [f"p {self.p} rows {rows} cols {cols}"]
        lines.extend(" ".join(str(int(value)) for value in row) for row in self.data)
        return "\n".join(lines)


class Subspace:
    """A subspace of F_p^ambient stored by its canonical RREF basis."""

    def __init__(self, p: int, ambient: int, basis: np.ndarray, pivots: Sequence[int]) -> None:
        self.p = p
        self.ambient = ambient
        self.basis = basis
        self.pivots = list(pivots)
        self.basis.flags.writeable = False

    @classmethod
    def span(cls, vectors, p: int, ambient: Optional[int] = None) -> "Subspace":
        if isinstance(vectors, FpMatrix):
            vectors = vectors.data
        data = np.asarray(vectors, dtype=np.int64)
        if data.size == 0:
            if ambient is None:
                if data.ndim != 2:
                    raise InvalidInputError("Ambient dimension required for an empty spanning set")
                ambient = data.shape[1]
            return cls.zero(ambient, p)
        if data.ndim == 1:
            data = data[None, :]
        if ambient is not None and data.shape[1] != ambient:
            raise InvalidInputError(f"Vectors of length {data.shape[1]} do not live in dimension {ambient}")
        reduced, pivots = rref(data, p)
        return cls(p, data.shape[1], reduced, pivots)

    @classmethod
    def zero(cls, ambient: int, p: int) -> "Subspace":
        return cls(p, ambient, np.zeros((0, ambient), dtype=np.int64), [])

    @classmethod
    def full(cls, ambient: int, p: int) -> "Subspace":
        return cls(p, ambient, np.eye(ambient, dtype=np.int64), list(range(ambient)))

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.p != other.p or self.ambient != other.ambient:
            raise InvalidInputError(
                f"Incompatible subspaces: F_{self.p}^{self.ambient} vs F_{other.p}^{other.ambient}"
            )

    def coordinates(self, vectors) -> np.ndarray:
        """Coordinates with respect to ``basis``; raises when a vector lies outside."""

        data = reduce_mod(vectors.data if isinstance(vectors, (FpVector, FpMatrix)) else vectors, self.p)
        single = data.ndim == 1
        rows = data[None, :] if single else data
        coords = rows[:, self.pivots]
        if not np.array_equal(matmul_mod(coords, self.basis, self.p), rows):
            raise InvalidInputError("Vector does not lie in the subspace")
        return coords[0] if single else coords

    def contains(self, item) -> bool:
        if isinstance(item, Subspace):
            self._check_compatible(item)
            return self.contains_vectors(item.basis)
        data = item.data if isinstance(item, (FpVector, FpMatrix)) else item
        return self.contains_vectors(data)

    def contains_vectors(self, vectors) -> bool:
        rows = reduce_mod(vectors, self.p)
        if rows.ndim == 1:
            rows = rows[None, :]
        if rows.shape[0] == 0:
            return True
        coords = rows[:, self.pivots]
        return bool(np.array_equal(matmul_mod(coords, self.basis, self.p), rows))

    def __contains__(self, item) -> bool:
        return self.contains(item)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.p == other.p
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.dimension == 0 or other.dimension == 0:
            return Subspace.zero(self.ambient, self.p)
        stacked = np.vstack([self.basis, (-other.basis) % self.p])
        relations = left_nullspace(stacked, self.p)
        if relations.shape[0] == 0:
            return Subspace.zero(self.ambient, self.p)
        vectors = matmul_mod(relations[:, : self.dimension], self.basis, self.p)
        return Subspace.span(vectors, self.p, self.ambient)

    def __repr__(self) -> str:
        return f"Subspace(p={self.p}, ambient={self.ambient}, dimension={self.dimension})"


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._check_compatible(v)
    return Subspace.span(np.vstack([u.basis, v.basis]), u.p, u.ambient)


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """``W/U``: representatives of a complement basis and the projection to quotient coordinates."""

    whole: Subspace
    sub: Subspace
    representatives: np.ndarray
    _pivot_positions: List[int] = field(repr=False)
    _free_positions: List[int] = field(repr=False)
    _relations: np.ndarray = field(repr=False)

    @property
    def dimension(self) -> int:
        return int(self.representatives.shape[0])

    def project(self, vectors) -> np.ndarray:
        """Quotient coordinates of vectors of ``W`` (a row or a stack of rows)."""

        coords = self.whole.coordinates(vectors)
        single = coords.ndim == 1
        rows = coords[None, :] if single else coords
        p = self.whole.p
        result = rows[:, self._free_positions]
        if self._pivot_positions:
            correction = matmul_mod(rows[:, self._pivot_positions], self._relations[:, self._free_positions], p)
            result = (result - correction) % p
        return result[0] if single else result

    def lift(self, coordinates) -> np.ndarray:
        return matmul_mod(np.asarray(coordinates, dtype=np.int64), self.representatives, self.whole.p)


def subspace_quotient(whole: Subspace, sub: Subspace) -> QuotientSpace:
    whole._check_compatible(sub)
    if not whole.contains(sub):
        raise InvalidInputError("The subspace to factor out is not contained in the ambient subspace")
    p = whole.p
    if sub.dimension:
        relations, pivot_positions = rref(sub.basis[:, whole.pivots], p)
    else:
        relations, pivot_positions = np.zeros((0, whole.dimension), dtype=np.int64), []
    free_positions = [index for index in range(whole.dimension) if index not in set(pivot_positions)]
    representatives = whole.basis[free_positions] if free_positions else np.zeros((0, whole.ambient), dtype=np.int64)
    LOGGER.debug("Quotient of a %s-dimensional space by a %s-dimensional one", whole.dimension, sub.dimension)
    return QuotientSpace(whole, sub, representatives, list(pivot_positions), free_positions, relations)


@dataclass(frozen=True, eq=False)
class MatrixSpace:
    """A space of ``rows × cols`` matrices, stored as a subspace of flattened (row-major) matrices."""

    p: int
    rows: int
    cols: int
    space: Subspace

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def matrices(self) -> List[FpMatrix]:
        return [FpMatrix(self.p, vector.reshape(self.rows, self.cols)) for vector in self.space.basis]

    def combination(self, coefficients: Sequence[int]) -> FpMatrix:
        flat = matmul_mod(np.asarray(coefficients, dtype=np.int64)[None, :], self.space.basis, self.p)[0]
        return FpMatrix(self.p, flat.reshape(self.rows, self.cols))

    def contains(self, matrix: FpMatrix) -> bool:
        return matrix.shape == (self.rows, self.cols) and self.space.contains_vectors(matrix.data.reshape(-1))


DEFAULT_INTERTWINER_ENTRIES = 20_000_000


class _Echelon:
    """Rows kept in reduced echelon form, extended one vector at a time."""

    def __init__(self, size: int, p: int) -> None:
        self.p = p
        self.rows = np.zeros((0, size), dtype=np.int64)
        self.pivots: List[int] = []

    def reduce(self, vector: np.ndarray) -> np.ndarray:
        if not self.pivots:
            return reduce_mod(vector, self.p)
        return (vector - matmul_mod(vector[None, self.pivots], self.rows, self.p)[0]) % self.p

    def add(self, vector: np.ndarray) -> bool:
        """Adjoin ``vector`` and report whether it was independent of the rows so far."""

        residue = self.reduce(vector)
        nonzero = np.flatnonzero(residue)
        if not nonzero.size:
            return False
        pivot = int(nonzero[0])
        residue = residue * pow(int(residue[pivot]), -1, self.p) % self.p
        if self.pivots:
            self.rows = (self.rows - np.outer(self.rows[:, pivot], residue)) % self.p
        self.rows = np.vstack([self.rows, residue])
        self.pivots.append(pivot)
        return True


def spin_basis(mats: Sequence[FpMatrix], p: int, size: int) -> Tuple[np.ndarray, List[Tuple[int, int, int]]]:
    """A basis of ``F_p^size`` reached by spinning unit vectors under ``mats``.

    Row ``k`` of the basis comes with ``(seed, parent, generator)``: either
    ``parent == -1`` and the row is the unit vector ``e_seed``, or the row is
    ``basis[parent] @ mats[generator]``.
    """

    echelon = _Echelon(size, p)
    basis: List[np.ndarray] = []
    origins: List[Tuple[int, int, int]] = []
    for seed in range(size):
        if len(basis) == size:
            break
        unit = np.zeros(size, dtype=np.int64)
        unit[seed] = 1
        if not echelon.add(unit):
            continue
        basis.append(unit)
        origins.append((seed, -1, -1))
        cursor = len(basis) - 1
        while cursor < len(basis):
            for generator, matrix in enumerate(mats):
                image = matmul_mod(basis[cursor][None, :], matrix.data, p)[0]
                if echelon.add(image):
                    basis.append(image)
                    origins.append((seed, cursor, generator))
            cursor += 1
    stacked = np.array(basis, dtype=np.int64).reshape(len(basis), size)
    return stacked, origins


def _spun_candidates(
    left: Sequence[FpMatrix], right: Sequence[FpMatrix], p: int, rows: int, cols: int, entry_limit: int
) -> np.ndarray:
    """Matrices ``X`` fixed by their values on the seeds of a spun basis of the left module.

    Every intertwiner is determined by the images of the seeds, so the
    intertwiners lie in the span of the returned (flattened) matrices.
    """

    basis, origins = spin_basis(left, p, rows)
    seeds = [index for index, (_, parent, _) in enumerate(origins) if parent == -1]
    entries = len(seeds) * rows * cols * cols
    if entries > entry_limit:
        raise ResourceLimitError(
            f"Intertwiners of {rows}×{cols} matrices from {len(seeds)} seeds need {entries} entries, above {entry_limit}"
        )
    slot_of = {index: slot for slot, index in enumerate(seeds)}
    images = np.zeros((rows, cols, cols), dtype=np.int64)
    slots = np.zeros(rows, dtype=np.int64)
    for index, (_, parent, generator) in enumerate(origins):
        if parent == -1:
            images[index] = np.eye(cols, dtype=np.int64)
            slots[index] = slot_of[index]
        else:
            images[index] = matmul_mod(images[parent], right[generator].data, p)
            slots[index] = slots[parent]
    inverse = FpMatrix(p, basis).inverse().data
    blocks = []
    for slot in range(len(seeds)):
        masked = np.where((slots == slot)[:, None, None], images, 0)
        # masked[k, j] is the image of basis row k when seed ``slot`` goes to e_j.
        solved = matmul_mod(inverse, np.transpose(masked, (1, 0, 2)), p)
        blocks.append(solved.reshape(cols, rows * cols))
    return np.vstack(blocks) if blocks else np.zeros((0, rows * cols), dtype=np.int64)


def intertwiners(
    left: Sequence[FpMatrix],
    right: Sequence[FpMatrix],
    p: int,
    *,
    rows: Optional[int] = None,
    cols: Optional[int] = None,
    entry_limit: int = DEFAULT_INTERTWINER_ENTRIES,
) -> MatrixSpace:
    """All ``X`` with ``L_i X = X R_i`` for each pair ``(L_i, R_i)``.

    The unknowns are the images of the seeds of a spun basis of the left
    module (``seeds × cols`` of them, ``cols`` for a cyclic module); the
    candidates are then cut down generator by generator.  ``entry_limit``
    bounds ``seeds · rows · cols · cols``, the entries of the candidate tensor.
    """

    if len(left) != len(right):
        raise InvalidInputError(f"Got {len(left)} left matrices but {len(right)} right matrices")
    if rows is None:
        rows = left[0].shape[0] if left else None
    if cols is None:
        cols = right[0].shape[0] if right else None
    if rows is None or cols is None:
        raise InvalidInputError("Matrix sizes are required when no matrices are given")
    for a, b in zip(left, right):
        if a.shape != (rows, rows) or b.shape != (cols, cols):
            raise InvalidInputError(f"Expected {rows}×{rows} and {cols}×{cols} matrices, got {a.shape} and {b.shape}")
    if rows == 0 or cols == 0:
        return MatrixSpace(p, rows, cols, Subspace.zero(rows * cols, p))
    candidates = _spun_candidates(left, right, p, rows, cols, entry_limit)
    LOGGER.debug("Intertwiner candidates from spinning: %s", candidates.shape[0])
    for a, b in zip(left, right):
        if candidates.shape[0] == 0:
            break
        stack = candidates.reshape(-1, rows, cols)
        images = (matmul_mod(a.data, stack, p) - matmul_mod(stack, b.data, p)) % p
        relations = left_nullspace(images.reshape(candidates.shape[0], -1), p)
        candidates = matmul_mod(relations, candidates, p) if relations.shape[0] else np.zeros((0, rows * cols), dtype=np.int64)
        LOGGER.debug("Intertwiner candidates after one generator: %s", candidates.shape[0])
    return MatrixSpace(p, rows, cols, Subspace.span(candidates, p, rows * cols))


def commutant(
    mats: Sequence[FpMatrix],
    p: int,
    *,
    size: Optional[int] = None,
    entry_limit: int = DEFAULT_INTERTWINER_ENTRIES,
) -> MatrixSpace:
    """``{X : XA = AX for all A}``."""

    if size is None:
        if not mats:
            raise InvalidInputError("Matrix size required for an empty list")
        size = mats[0].shape[0]
    return intertwiners(mats, mats, p, rows=size, cols=size, entry_limit=entry_limit)


__all__ = [
    "FpVector",
    "FpMatrix",
    "Subspace",
    "QuotientSpace",
    "MatrixSpace",
    "LinearSolution",
    "reduce_mod",
    "matmul_mod",
    "rref",
    "rank",
    "nullspace",
    "left_nullspace",
    "solve",
    "subspace_sum",
    "subspace_quotient",
    "spin_basis",
    "intertwiners",
    "commutant",
    "DEFAULT_INTERTWINER_ENTRIES",
]
