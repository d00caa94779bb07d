# resolution/engine.py
"""
Brute-force minimal free resolution of the residue field k over a
FiniteLocalAlgebra A.

Free modules A^n are handled as k-spaces of dimension n*D, with a vector in
A^n stored as a flat sparse row (block r = coordinates of the r-th component).
Step i: K_i = ker d_i (as a k-linear map), m*K_i spanned by g*v for the
minimal generators g of m, and a complement of m*K_i in K_i gives the
b_(i+1) minimal generators (Nakayama), used verbatim as the columns of d_(i+1).
"""
import logging
from typing import Dict, List

from pydantic import BaseModel
from sympy.polys.matrices import DomainMatrix

from algebra.core import AlgebraElement, FiniteLocalAlgebra, minimal_generators
from algebra.linalg import SparseRow, Subspace, complement_basis, from_sparse_rows, kernel_basis, sparse_rows
from models.errors import InvalidParametersError
from utils.tracking import stopwatch, track_step

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 5
DEFAULT_DIM_CAP = 20000


# ============================================================
# FREE MODULE MAPS
class FreeModuleMap:
    """d: A^source_rank -> A^target_rank, column j = image of the j-th basis vector."""

    def __init__(self, algebra: FiniteLocalAlgebra, source_rank: int, target_rank: int, columns: List[SparseRow]):
        if len(columns) != source_rank:
            raise ValueError(f"expected {source_rank} columns, got {len(columns)}")
        self.algebra = algebra
        self.source_rank = source_rank
        self.target_rank = target_rank
        self.columns = [dict(c) for c in columns]

    def entry_sparse(self, r: int, j: int) -> SparseRow:
        D = self.algebra.dim
        return {idx - r * D: c for idx, c in self.columns[j].items() if r * D <= idx < (r + 1) * D}

    def entry(self, r: int, j: int) -> AlgebraElement:
        return self.algebra.from_sparse(self.entry_sparse(r, j))

    def klinear(self) -> DomainMatrix:
        """Matrix of d as a k-linear map k^(source*D) -> k^(target*D); block (r, j) = mult_matrix(entry r,j)."""
        A = self.algebra
        D = A.dim
        dod: Dict[int, Dict[int, object]] = {}
        for j in range(self.source_rank):
            blocks: Dict[int, SparseRow] = {}
            for idx, c in self.columns[j].items():
                blocks.setdefault(idx // D, {})[idx % D] = c
            for r, entry in blocks.items():
                for k, row in A.mult_matrix(entry).to_dod().items():
                    target = dod.setdefault(r * D + k, {})
                    for beta, x in row.items():
                        target[j * D + beta] = x
        return DomainMatrix.from_dod(dod, (self.target_rank * D, self.source_rank * D), A.domain)

    def column_matrix(self) -> DomainMatrix:
        """(target*D) x source matrix whose columns are the generators' images."""
        return from_sparse_rows(self.columns, self.target_rank * self.algebra.dim, self.algebra.domain).transpose()


class ResolutionStep(BaseModel):
    i: int
    module_dim: int
    kernel_dim: int
    m_kernel_dim: int
    new_rank: int
    elapsed_ms: int


class MinimalResolution:
    def __init__(self, algebra: FiniteLocalAlgebra, steps: int, dim_cap: int):
        self.algebra = algebra
        self.steps = steps
        self.dim_cap = dim_cap
        self.maps: List[FreeModuleMap] = []
        self.betti: List[int] = [1]
        self.truncated = False
        self.log: List[ResolutionStep] = []

    def __repr__(self) -> str:
        flag = ", truncated" if self.truncated else ""
        return f"MinimalResolution({self.algebra.name}, betti={self.betti}{flag})"


# ============================================================
# ENGINE
def _block_diagonal(M: DomainMatrix, blocks: int) -> DomainMatrix:
    D = M.shape[0]
    base = M.to_dod()
    dod = {}
    for r in range(blocks):
        for k, row in base.items():
            dod[r * D + k] = {r * D + g: x for g, x in row.items()}
    return DomainMatrix.from_dod(dod, (blocks * D, blocks * D), M.domain)


def times_maximal_ideal(A: FiniteLocalAlgebra, kernel: Subspace, rank: int, generators: List[SparseRow]) -> Subspace:
    """m*K for an A-submodule K of A^rank: span of g*v over minimal generators g of m."""
    if kernel.is_zero() or not generators:
        return Subspace.zero(kernel.ambient_dim, A.domain)
    rows: List[SparseRow] = []
    for g in generators:
        product = kernel.basis * _block_diagonal(A.mult_matrix(g).transpose(), rank)
        rows.extend(r for r in sparse_rows(product) if r)
    return Subspace.span_sparse(rows, kernel.ambient_dim, A.domain)


def minimal_resolution(A: FiniteLocalAlgebra, steps: int = DEFAULT_DEPTH, dim_cap: int = DEFAULT_DIM_CAP) -> MinimalResolution:
    if steps < 0:
        raise InvalidParametersError(f"steps must be >= 0, got {steps}")
    res = MinimalResolution(A, steps, dim_cap)
    if steps == 0:
        return res

    D = A.dim
    generators = minimal_generators(A)
    # d_1: A^(b_1) -> A, entries the minimal generators of m
    res.maps.append(FreeModuleMap(A, len(generators), 1, generators))
    res.betti.append(len(generators))

    for i in range(1, steps):
        b_i = res.betti[i]
        if b_i == 0:
            res.betti.extend([0] * (steps - i))
            break
        if b_i * D > dim_cap:
            logger.warning("dim_cap %d exceeded at step %d (A^%d has dimension %d); truncating", dim_cap, i, b_i, b_i * D)
            res.truncated = True
            break

        with stopwatch() as t:
            kernel = kernel_basis(res.maps[-1].klinear())
            m_kernel = times_maximal_ideal(A, kernel, b_i, generators)
            fresh = complement_basis(m_kernel, kernel, check=False)
        step = ResolutionStep(
            i=i,
            module_dim=b_i * D,
            kernel_dim=kernel.dim,
            m_kernel_dim=m_kernel.dim,
            new_rank=len(fresh),
            elapsed_ms=t["ms"],
        )
        res.log.append(step)
        track_step(A.name, i, step.model_dump(exclude={"i", "elapsed_ms"}), step.elapsed_ms)

        res.maps.append(FreeModuleMap(A, len(fresh), b_i, fresh))
        res.betti.append(len(fresh))

    return res


def betti_numbers(A: FiniteLocalAlgebra, steps: int = DEFAULT_DEPTH, dim_cap: int = DEFAULT_DIM_CAP) -> List[int]:
    return minimal_resolution(A, steps, dim_cap).betti
