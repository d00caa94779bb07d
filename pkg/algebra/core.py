# algebra/core.py
"""
Finite-dimensional commutative local algebras given by a monomial-labelled
basis and a multiplication table, plus the operations the change-of-rings
chain needs: ideals, quotients, socle, powers of m and the Hilbert function.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from algebra.linalg import (
    SparseRow,
    Subspace,
    complement_basis,
    contains,
    kernel_basis,
    sparse_rows,
)
from algebra.monomials import MonomialLabel
from models.errors import AlgebraMismatchError, IdealError, StructureError
from models.params import FieldSpec, HilbertFunction

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[Tuple[object, ...], ...], ...]


# ============================================================
# ALGEBRA
class FiniteLocalAlgebra:
    """
    Commutative local k-algebra with basis[0] = 1 and table[i][j] = coordinates
    of basis[i]*basis[j]. The maximal ideal is spanned by basis[1:].
    """

    def __init__(
        self,
        field: FieldSpec,
        basis: Sequence[MonomialLabel],
        table: Sequence[Sequence[Sequence]],
        name: str = "",
        validate: bool = True,
    ):
        self.field = field
        self.domain = field.domain
        self.basis: Tuple[MonomialLabel, ...] = tuple(basis)
        self.table: Table = tuple(tuple(tuple(cell) for cell in row) for row in table)
        self.name = name or f"algebra(D={len(self.basis)})"
        self._index = {str(b): i for i, b in enumerate(self.basis)}
        self._mult: Optional[List[DomainMatrix]] = None
        self._powers: Optional[List[Subspace]] = None
        self._socle: Optional[Subspace] = None
        if validate:
            problems = check_structure(self)
            if problems:
                raise StructureError(f"{self.name}: " + "; ".join(problems[:5]))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"FiniteLocalAlgebra({self.name}, D={self.dim}, field={self.field})"

    # ------------------------------------------------------------
    # Elements
    def element(self, label) -> "AlgebraElement":
        key = str(label)
        if key not in self._index:
            raise KeyError(f"{key} is not a basis label of {self.name}")
        return self.basis_element(self._index[key])

    def basis_element(self, i: int) -> "AlgebraElement":
        K = self.domain
        return AlgebraElement(self, tuple(K.one if k == i else K.zero for k in range(self.dim)))

    def one(self) -> "AlgebraElement":
        return self.basis_element(0)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self.domain.zero for _ in range(self.dim)))

    def from_sparse(self, v: SparseRow) -> "AlgebraElement":
        K = self.domain
        return AlgebraElement(self, tuple(v.get(k, K.zero) for k in range(self.dim)))

    def index_of(self, label) -> int:
        return self._index[str(label)]

    # ------------------------------------------------------------
    # Multiplication matrices: mult_matrix(b)[k][g] = coefficient of basis[k] in b*basis[g]
    @property
    def mult_matrices(self) -> List[DomainMatrix]:
        if self._mult is None:
            D = self.dim
            mats = []
            for b in range(D):
                dod: Dict[int, Dict[int, object]] = {}
                for g in range(D):
                    for k, c in enumerate(self.table[b][g]):
                        if c:
                            dod.setdefault(k, {})[g] = c
                mats.append(DomainMatrix.from_dod(dod, (D, D), self.domain))
            self._mult = mats
        return self._mult

    def mult_matrix(self, u: SparseRow) -> DomainMatrix:
        """Matrix of v -> u*v for u given by sparse coordinates."""
        D = self.dim
        acc: Dict[int, Dict[int, object]] = {}
        for b, c in u.items():
            for k, g, x in _dod_items(self.mult_matrices[b].to_dod()):
                row = acc.setdefault(k, {})
                y = row.get(g, self.domain.zero) + c * x
                if y:
                    row[g] = y
                else:
                    row.pop(g, None)
        acc = {k: r for k, r in acc.items() if r}
        return DomainMatrix.from_dod(acc, (D, D), self.domain)

    def product_sparse(self, u: SparseRow, v: SparseRow) -> SparseRow:
        out: SparseRow = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = a * b
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        y = out.get(k, self.domain.zero) + ab * c
                        if y:
                            out[k] = y
                        else:
                            out.pop(k, None)
        return out

    # ------------------------------------------------------------
    # Cached structure
    def powers_of_m(self) -> List[Subspace]:
        """[m^0 = A, m^1, ..., m^N = 0]."""
        if self._powers is None:
            self._powers = _powers_of_maximal_ideal(self)
        return self._powers


def _dod_items(dod):
    for i, row in dod.items():
        for j, x in row.items():
            yield i, j, x


# ============================================================
# ELEMENTS
@dataclass(frozen=True)
class AlgebraElement:
    algebra: FiniteLocalAlgebra
    coords: Tuple[object, ...]

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise AlgebraMismatchError(f"expected {self.algebra.dim} coordinates, got {len(self.coords)}")

    @property
    def sparse(self) -> SparseRow:
        return {k: c for k, c in enumerate(self.coords) if c}

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _same(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise AlgebraMismatchError("elements belong to different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and other.algebra is self.algebra and other.coords == self.coords

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __str__(self) -> str:
        K = self.algebra.domain
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            label = str(self.algebra.basis[k])
            coeff = format_scalar(K, c, short=True)
            if label == "1":
                terms.append(coeff)
            elif coeff == "1":
                terms.append(label)
            elif coeff == "-1":
                terms.append("-" + label)
            else:
                terms.append(f"{coeff}*{label}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def format_scalar(domain, c, short: bool = False) -> str:
    r = domain.to_sympy(c)
    if short and r.q == 1:
        return str(r.p)
    return f"{r.p}/{r.q}"


# ============================================================
# OPERATIONS
def multiply(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    if not isinstance(v, AlgebraElement) or u.algebra is not v.algebra:
        raise AlgebraMismatchError("cannot multiply elements of different algebras")
    A = u.algebra
    return A.from_sparse(A.product_sparse(u.sparse, v.sparse))


def _times_maximal_ideal(A: FiniteLocalAlgebra, sub: Subspace) -> List[SparseRow]:
    """Generators of m*sub: products of every non-unit basis element with every vector of sub."""
    if sub.is_zero():
        return []
    rows = sub.basis
    out: List[SparseRow] = []
    for b in range(1, A.dim):
        out.extend(r for r in sparse_rows(rows * A.mult_matrices[b].transpose()) if r)
    return out


def ideal_subspace(A: FiniteLocalAlgebra, gens: Iterable[AlgebraElement]) -> Subspace:
    """Smallest subspace containing gens and closed under multiplication by A."""
    vecs = []
    for g in gens:
        if g.algebra is not A:
            raise AlgebraMismatchError("generator from another algebra")
        if not g.is_zero():
            vecs.append(g.sparse)
    current = Subspace.span_sparse(vecs, A.dim, A.domain)
    while True:
        grown = Subspace.span_sparse(current.sparse_vectors() + _times_maximal_ideal(A, current), A.dim, A.domain)
        if grown.dim == current.dim:
            return current
        current = grown


def is_ideal(A: FiniteLocalAlgebra, sub: Subspace) -> bool:
    return all(contains(sub, v) for v in _times_maximal_ideal(A, sub))


def _powers_of_maximal_ideal(A: FiniteLocalAlgebra) -> List[Subspace]:
    K = A.domain
    powers = [Subspace.full(A.dim, K)]
    if A.dim == 1:
        powers.append(Subspace.zero(1, K))
        return powers
    m = Subspace.span_sparse([{k: K.one} for k in range(1, A.dim)], A.dim, K)
    powers.append(m)
    while not powers[-1].is_zero():
        nxt = Subspace.span_sparse(_times_maximal_ideal(A, powers[-1]), A.dim, K)
        if nxt.dim >= powers[-1].dim:
            raise StructureError(f"{A.name}: maximal ideal is not nilpotent (m^{len(powers)} does not shrink)")
        powers.append(nxt)
    return powers


def socle(A: FiniteLocalAlgebra) -> Subspace:
    """(0 : m), the kernel of the stacked multiplication maps of m's basis."""
    if A._socle is None:
        if A.dim == 1:
            A._socle = Subspace.full(1, A.domain)
        else:
            stacked = A.mult_matrices[1].vstack(*A.mult_matrices[2:])
            A._socle = kernel_basis(stacked)
    return A._socle


def hilbert_function(A: FiniteLocalAlgebra) -> HilbertFunction:
    """H(n) = dim m^n - dim m^(n+1), from the ideal-power chain (relations need not be homogeneous)."""
    powers = A.powers_of_m()
    values = [powers[n].dim - powers[n + 1].dim for n in range(len(powers) - 1)]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return HilbertFunction(values=values)


def multiplicity(A: FiniteLocalAlgebra) -> int:
    return A.dim


def embedding_dimension(A: FiniteLocalAlgebra) -> int:
    return hilbert_function(A)[1]


def is_gorenstein(A: FiniteLocalAlgebra) -> bool:
    return socle(A).dim == 1


def socle_degree(A: FiniteLocalAlgebra) -> int:
    return hilbert_function(A).socle_degree


def minimal_generators(A: FiniteLocalAlgebra) -> List[SparseRow]:
    """A basis of a complement of m^2 in m; by Nakayama these generate m."""
    powers = A.powers_of_m()
    if A.dim == 1:
        return []
    return complement_basis(powers[2], powers[1])


# ============================================================
# QUOTIENTS
def quotient_with_map(
    A: FiniteLocalAlgebra, ideal: Subspace, name: str = ""
) -> Tuple[FiniteLocalAlgebra, Callable[[AlgebraElement], AlgebraElement]]:
    """A/ideal on the basis elements outside the ideal's pivot positions, and the projection A -> A/ideal."""
    if ideal.ambient_dim != A.dim or ideal.domain != A.domain:
        raise IdealError("ideal lives in a different ambient space")
    if contains(ideal, A.one().sparse):
        raise IdealError("ideal contains the unit")
    if not is_ideal(A, ideal):
        raise IdealError("subspace is not closed under multiplication")

    pivots = set(ideal.pivots)
    kept = [k for k in range(A.dim) if k not in pivots]
    K = A.domain

    def reduce(v: SparseRow) -> Tuple[object, ...]:
        r = ideal.reduce(v)
        return tuple(r.get(k, K.zero) for k in kept)

    table = [
        [reduce(dict((k, c) for k, c in enumerate(A.table[i][j]) if c)) for j in kept]
        for i in kept
    ]
    Q = FiniteLocalAlgebra(
        A.field,
        [A.basis[k] for k in kept],
        table,
        name=name or f"{A.name}/I",
    )

    def project(u: AlgebraElement) -> AlgebraElement:
        if u.algebra is not A:
            raise AlgebraMismatchError("projection applied to an element of another algebra")
        return AlgebraElement(Q, reduce(u.sparse))

    logger.debug("quotient %s -> %s (D %d -> %d)", A.name, Q.name, A.dim, Q.dim)
    return Q, project


def quotient(A: FiniteLocalAlgebra, ideal: Subspace, name: str = "") -> FiniteLocalAlgebra:
    return quotient_with_map(A, ideal, name)[0]


def quotient_by_socle(A: FiniteLocalAlgebra) -> FiniteLocalAlgebra:
    return quotient(A, socle(A), name=f"{A.name}/(0:m)")


# ============================================================
# STRUCTURE CHECKS
def check_structure(A: FiniteLocalAlgebra) -> List[str]:
    """Violated invariants (empty list = valid local algebra)."""
    D = A.dim
    K = A.domain
    problems: List[str] = []
    if D == 0:
        return ["empty basis"]
    if not A.basis[0].is_unit:
        problems.append(f"basis[0] is {A.basis[0]}, expected the unit")
    if len(set(str(b) for b in A.basis)) != D:
        problems.append("basis labels are not pairwise distinct")
    if len(A.table) != D or any(len(row) != D or any(len(c) != D for c in row) for row in A.table):
        problems.append("table dimensions do not match the basis")
        return problems

    for i in range(D):
        e_i = tuple(K.one if k == i else K.zero for k in range(D))
        if A.table[0][i] != e_i or A.table[i][0] != e_i:
            problems.append(f"unit law fails at {A.basis[i]}")
        for j in range(i + 1, D):
            if A.table[i][j] != A.table[j][i]:
                problems.append(f"commutativity fails at {A.basis[i]}*{A.basis[j]}")
    if problems:
        return problems

    rows = [[{k: c for k, c in enumerate(A.table[i][j]) if c} for j in range(D)] for i in range(D)]
    for i in range(1, D):
        for j in range(1, D):
            ij = rows[i][j]
            for l in range(1, D):
                left = A.product_sparse(ij, {l: K.one})
                right = A.product_sparse({i: K.one}, rows[j][l])
                if left != right:
                    problems.append(f"associativity fails at ({A.basis[i]}*{A.basis[j]})*{A.basis[l]}")
                    return problems
    try:
        A.powers_of_m()
    except StructureError as e:
        problems.append(str(e))
    return problems


def same_table(A: FiniteLocalAlgebra, B: FiniteLocalAlgebra) -> bool:
    """True iff A and B have the same labels and identical products after matching labels."""
    if A.dim != B.dim or A.domain != B.domain:
        return False
    if sorted(map(str, A.basis)) != sorted(map(str, B.basis)):
        return False
    perm = [B.index_of(b) for b in A.basis]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = {perm[k]: c for k, c in enumerate(A.table[i][j]) if c}
            rhs = {k: c for k, c in enumerate(B.table[perm[i]][perm[j]]) if c}
            if lhs != rhs:
                return False
    return True
