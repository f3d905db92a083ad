"""Fixed points, relative traces and Brauer quotients of matrix representations."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .combinatorics import Partition, greatest_tableau, hook_dimension
from .errors import InvalidInputError
from .groups import (
    DEFAULT_GROUP_CAP,
    PermGroup,
    Permutation,
    h_group_generators,
    h_group_order,
    maximal_subgroups,
    right_transversal,
    standard_generators,
    subgroups,
    sylow_of_h_group,
)
from .linalg import FpMatrix, FpVector, QuotientSpace, Subspace, left_nullspace, matmul_mod, subspace_quotient
from .models import VertexCertificate
from .specht import ModuleRep, polytabloid, specht_module, tabloid_basis


LOGGER = logging.getLogger(__name__)


def _check_acts(m: ModuleRep, group: PermGroup) -> None:
    if group.degree != m.degree:
        raise InvalidInputError(f"Group of degree {group.degree} cannot act on a module for S_{m.degree}")


def fixed_subspace(m: ModuleRep, q: PermGroup) -> Subspace:
    """M^Q: vectors fixed by every generator of ``q``."""

    _check_acts(m, q)
    candidates = np.eye(m.dimension, dtype=np.int64)
    for generator in q.generators:
        if candidates.shape[0] == 0:
            break
        action = m.matrix_of(generator).data
        moved = (matmul_mod(candidates, action, m.p) - candidates) % m.p
        relations = left_nullspace(moved, m.p)
        if relations.shape[0] == 0:
            candidates = np.zeros((0, m.dimension), dtype=np.int64)
        else:
            candidates = matmul_mod(relations, candidates, m.p)
    return Subspace.span(candidates, m.p, m.dimension)


def trace_matrix(m: ModuleRep, elements: Sequence[Permutation]) -> FpMatrix:
    total = np.zeros((m.dimension, m.dimension), dtype=np.int64)
    for element in elements:
        total = (total + m.matrix_of(element).data) % m.p
    return FpMatrix(m.p, total)


def relative_trace_image(
    m: ModuleRep,
    r: PermGroup,
    q: PermGroup,
    *,
    rng: Optional[random.Random] = None,
) -> Subspace:
    """Tr_R^Q(M^R): ``M^R`` summed over a right transversal of ``R`` in ``Q``."""

    _check_acts(m, q)
    transversal = right_transversal(r, q, rng)
    fixed = fixed_subspace(m, r)
    if fixed.dimension == 0:
        return Subspace.zero(m.dimension, m.p)
    image = matmul_mod(fixed.basis, trace_matrix(m, transversal).data, m.p)
    return Subspace.span(image, m.p, m.dimension)


@dataclass(frozen=True, eq=False)
class BrauerQuotient:
    """M(Q) = M^Q / Σ_{R<Q} Tr_R^Q(M^R)."""

    source: ModuleRep
    q: PermGroup
    fixed: Subspace
    radical: Subspace
    quotient: QuotientSpace

    @property
    def dimension(self) -> int:
        return self.quotient.dimension

    def project(self, vectors) -> np.ndarray:
        return self.quotient.project(vectors.data if isinstance(vectors, FpVector) else vectors)


def _require_p_group(m: ModuleRep, q: PermGroup) -> None:
    if not q.is_p_group(m.p):
        raise InvalidInputError(f"Q of order {q.order} is not a {m.p}-group")


def radical_from(m: ModuleRep, q: PermGroup, subgroups_of_q: Sequence[PermGroup], rng: Optional[random.Random] = None) -> Subspace:
    radical = Subspace.zero(m.dimension, m.p)
    for subgroup in subgroups_of_q:
        radical = radical + relative_trace_image(m, subgroup, q, rng=rng)
    return radical


def brauer_quotient(m: ModuleRep, q: PermGroup, *, cap: int = DEFAULT_GROUP_CAP) -> BrauerQuotient:
    """Brauer quotient with the radical summed over the maximal subgroups of ``q``."""

    _check_acts(m, q)
    _require_p_group(m, q)
    fixed = fixed_subspace(m, q)
    radical = radical_from(m, q, maximal_subgroups(q, cap))
    quotient = subspace_quotient(fixed, radical)
    LOGGER.info(
        "Brauer quotient of %s at a group of order %s: fixed %s, radical %s, quotient %s",
        m.name or "module",
        q.order,
        fixed.dimension,
        radical.dimension,
        quotient.dimension,
    )
    return BrauerQuotient(m, q, fixed, radical, quotient)


def all_subgroup_radical(m: ModuleRep, q: PermGroup, *, cap: int = DEFAULT_GROUP_CAP) -> Subspace:
    """Σ Tr_R^Q(M^R) over every proper subgroup ``R`` (small ``q`` only)."""

    _check_acts(m, q)
    proper = [subgroup for subgroup in subgroups(q, cap) if subgroup.order < q.order]
    return radical_from(m, q, proper)


def brauer_image_nonzero(m: ModuleRep, v: FpVector, q: PermGroup, *, quotient: Optional[BrauerQuotient] = None) -> bool:
    """Whether the Q-fixed vector ``v`` survives in M(Q)."""

    bq = quotient if quotient is not None else brauer_quotient(m, q)
    if not bq.fixed.contains(v):
        raise InvalidInputError("Vector is not fixed by Q")
    return not bq.radical.contains(v)


def quotient_module(bq: BrauerQuotient, acting_gens: Sequence[Permutation]) -> ModuleRep:
    """M(Q) as a module for the given elements of N(Q), on quotient coordinates."""

    gens = tuple(acting_gens)
    for generator in gens:
        if generator.degree != bq.q.degree:
            raise InvalidInputError(f"{generator} has the wrong degree")
        if any(element.conjugate(generator) not in bq.q for element in bq.q.generators):
            raise InvalidInputError(f"{generator} does not normalize Q")
    source = bq.source
    actions = []
    for generator in gens:
        images = matmul_mod(bq.quotient.representatives, source.matrix_of(generator).data, source.p)
        actions.append(FpMatrix(source.p, bq.project(images).reshape(bq.dimension, bq.dimension)))
    labels = tuple(f"q{index + 1}" for index in range(bq.dimension))
    return ModuleRep(source.p, source.degree, labels, gens, tuple(actions), f"{source.name}(Q)")


@dataclass(frozen=True)
class PermutationQuotient:
    """M^λ(Q) for the Young module: spanned by the images of the Q-fixed tabloids."""

    shape: Partition
    fixed_indices: List[int]
    labels: List[str]

    @property
    def dimension(self) -> int:
        return len(self.fixed_indices)

    def project(self, v: FpVector) -> np.ndarray:
        return v.data[self.fixed_indices]


def permutation_module_quotient(shape: Partition, q: PermGroup) -> PermutationQuotient:
    basis = tabloid_basis(shape)
    if q.degree != shape.n:
        raise InvalidInputError(f"Group of degree {q.degree} cannot act on tabloids of {shape}")
    indices = basis.fixed_indices(q.generators)
    return PermutationQuotient(shape, indices, [str(basis.tabloid(index)) for index in indices])


def vertex_certificate(
    shape: Partition,
    p: int,
    *,
    max_dim: Optional[int] = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> VertexCertificate:
    """Certify that a Sylow p-subgroup of H(t), t greatest, lies in a vertex of S^λ.

    Above ``max_dim`` the image of ``e_t`` is tested in the Brauer quotient of
    M^λ instead, which is enough because the inclusion S^λ → M^λ commutes with
    the Brauer homomorphism; the quotient dimension is then not reported.
    """

    t = greatest_tableau(shape)
    sylow = sylow_of_h_group(t, p, cap)
    dimension = hook_dimension(shape)
    if max_dim is None or dimension <= max_dim:
        module = specht_module(shape, p, standard_generators(shape.n) + list(sylow.generators), cap=cap)
        index = module.tableaux.index(t)
        e_t = FpVector(p, np.eye(module.dimension, dtype=np.int64)[index])
        bq = brauer_quotient(module.module, sylow, cap=cap)
        nonzero = brauer_image_nonzero(module.module, e_t, sylow, quotient=bq)
        quotient_dim: Optional[int] = bq.dimension
        method = "specht"
    else:
        LOGGER.warning("dim S^(%s) = %s exceeds %s; certifying through the permutation module", shape, dimension, max_dim)
        oracle = permutation_module_quotient(shape, sylow)
        nonzero = bool(oracle.project(polytabloid(t, p, cap=cap)).any())
        quotient_dim = None
        method = "permutation-module"
    return VertexCertificate(
        shape=shape,
        p=p,
        h_generators=h_group_generators(t),
        h_order=h_group_order(t),
        sylow_generators=list(sylow.generators),
        sylow_order=sylow.order,
        specht_dim=dimension,
        quotient_dim=quotient_dim,
        e_t_nonzero=nonzero,
        method=method,
    )


__all__ = [
    "fixed_subspace",
    "trace_matrix",
    "relative_trace_image",
    "BrauerQuotient",
    "brauer_quotient",
    "all_subgroup_radical",
    "brauer_image_nonzero",
    "quotient_module",
    "PermutationQuotient",
    "permutation_module_quotient",
    "vertex_certificate",
]
