# algebra/linalg.py
"""
Exact linear algebra over QQ or GF(p).

Matrices are sympy `DomainMatrix` objects (kept in sparse form internally,
results are exact either way). A `Subspace` stores its canonical basis: the
nonzero rows of a reduced row-echelon form, so two subspaces are equal as
sets iff their stored bases are identical.
"""
import logging
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from sympy import Rational
from sympy.polys.matrices import DomainMatrix

from models.errors import AmbientMismatchError, ContainmentError
from models.params import to_rational

logger = logging.getLogger(__name__)

Matrix = DomainMatrix
Vector = List  # dense list of domain elements
SparseRow = Dict[int, object]


# ----------------------------------------
# Construction helpers
def matrix(rows: Sequence[Sequence], domain, ncols: int = None) -> DomainMatrix:
    """Dense-looking constructor: entries may be ints, "p/q" strings or domain elements."""
    nrows = len(rows)
    ncols = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    dod = {}
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise AmbientMismatchError(f"row {i} has {len(row)} entries, expected {ncols}")
        r = {}
        for j, x in enumerate(row):
            v = _to_domain(x, domain)
            if v:
                r[j] = v
        if r:
            dod[i] = r
    return DomainMatrix.from_dod(dod, (nrows, ncols), domain)


def from_sparse_rows(rows: Sequence[SparseRow], ncols: int, domain) -> DomainMatrix:
    dod = {i: dict(r) for i, r in enumerate(rows) if r}
    return DomainMatrix.from_dod(dod, (len(rows), ncols), domain)


def sparse_rows(m: DomainMatrix) -> List[SparseRow]:
    dod = m.to_dod()
    return [dict(dod.get(i, {})) for i in range(m.shape[0])]


def dense_rows(m: DomainMatrix) -> List[Vector]:
    return m.to_dense().to_list()


def _to_domain(x, domain):
    if isinstance(x, (int, str, Rational)):
        q = to_rational(x)
        return domain.convert(int(q.p)) / domain.convert(int(q.q))
    return domain.convert(x)


# ============================================================
# RREF / KERNEL
def rref(m: DomainMatrix) -> Tuple[int, DomainMatrix, List[int]]:
    """(rank, reduced row-echelon form, pivot columns) of m."""
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return 0, m.to_sparse(), []
    reduced, pivots = m.to_sparse().rref()
    pivots = list(pivots)
    return len(pivots), reduced.to_sparse(), pivots


def kernel_basis(m: DomainMatrix) -> "Subspace":
    """The subspace {v : m·v = 0} of the column space k^cols."""
    K = m.domain
    nrows, ncols = m.shape
    rank, reduced, pivots = rref(m)
    pivot_set = set(pivots)
    red = reduced.to_dod()
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = {f: K.one}
        for k, p in enumerate(pivots):
            c = red.get(k, {}).get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return Subspace.span_sparse(basis, ncols, K)


# ============================================================
# SUBSPACE
class Subspace:
    """
    Subspace of k^n held by its canonical basis (RREF rows, no zero rows).
    Immutable.
    """

    __slots__ = ("_ambient_dim", "_basis", "_pivots", "_rows")

    def __init__(self, reduced_basis: DomainMatrix, pivots: Sequence[int]):
        self._basis = reduced_basis.to_sparse()
        self._ambient_dim = reduced_basis.shape[1]
        self._pivots = tuple(pivots)
        self._rows = self._basis.to_dod()

    # ------------------------------------------------------------
    # Constructors
    @classmethod
    def span_matrix(cls, rows: DomainMatrix) -> "Subspace":
        rank, reduced, pivots = rref(rows)
        dod = {i: r for i, r in reduced.to_dod().items() if i < rank}
        basis = DomainMatrix.from_dod(dod, (rank, rows.shape[1]), rows.domain)
        return cls(basis, pivots)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int, domain) -> "Subspace":
        vectors = [list(v) for v in vectors]
        return cls.span_matrix(matrix(vectors, domain, ncols=ambient_dim))

    @classmethod
    def span_sparse(cls, vectors: Sequence[SparseRow], ambient_dim: int, domain) -> "Subspace":
        return cls.span_matrix(from_sparse_rows(vectors, ambient_dim, domain))

    @classmethod
    def zero(cls, ambient_dim: int, domain) -> "Subspace":
        return cls(DomainMatrix.from_dod({}, (0, ambient_dim), domain), ())

    @classmethod
    def full(cls, ambient_dim: int, domain) -> "Subspace":
        return cls(DomainMatrix.eye(ambient_dim, domain), range(ambient_dim))

    # ------------------------------------------------------------
    # Accessors
    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def dim(self) -> int:
        return self._basis.shape[0]

    @property
    def domain(self):
        return self._basis.domain

    @property
    def basis(self) -> DomainMatrix:
        return self._basis

    @property
    def pivots(self) -> Tuple[int, ...]:
        return self._pivots

    def vectors(self) -> List[Vector]:
        return dense_rows(self._basis)

    def sparse_vectors(self) -> List[SparseRow]:
        return sparse_rows(self._basis)

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self._ambient_dim == other._ambient_dim
            and self.domain == other.domain
            and self._rows == other._rows
        )

    def __hash__(self):
        items = tuple(sorted((i, tuple(sorted(r.items()))) for i, r in self._rows.items()))
        return hash((self._ambient_dim, self._pivots, items))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self._ambient_dim})"

    # ------------------------------------------------------------
    # Coordinates
    def coordinates(self, v: SparseRow) -> SparseRow:
        """Coefficients of v on the canonical basis, read off the pivot positions."""
        return {k: v[p] for k, p in enumerate(self._pivots) if v.get(p)}

    def reduce(self, v: SparseRow) -> SparseRow:
        """v minus its projection along the pivot positions; zero iff v lies in the subspace."""
        out = dict(v)
        rows = self._rows
        for k, p in enumerate(self._pivots):
            c = out.get(p)
            if not c:
                continue
            for j, x in rows.get(k, {}).items():
                y = out.get(j, self.domain.zero) - c * x
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out


# ============================================================
# SUBSPACE OPERATIONS
def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim or a.domain != b.domain:
        raise AmbientMismatchError(
            f"ambient mismatch: {a.ambient_dim} over {a.domain} vs {b.ambient_dim} over {b.domain}"
        )


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.span_matrix(a.basis.vstack(b.basis))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Solves Σ α_i a_i = Σ β_j b_j; the α half of the solutions spans the intersection."""
    _check_ambient(a, b)
    K = a.domain
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.ambient_dim, K)
    system = a.basis.transpose().hstack(-b.basis.transpose())
    sols = kernel_basis(system)
    alphas = [{i: c for i, c in v.items() if i < a.dim} for v in sols.sparse_vectors()]
    if not alphas:
        return Subspace.zero(a.ambient_dim, K)
    coeffs = from_sparse_rows(alphas, a.dim, K)
    return Subspace.span_matrix(coeffs * a.basis)


def contains(a: Subspace, v: Union[Sequence, SparseRow]) -> bool:
    if not isinstance(v, dict):
        if len(v) != a.ambient_dim:
            raise AmbientMismatchError(f"vector of length {len(v)} in ambient {a.ambient_dim}")
        v = {j: _to_domain(x, a.domain) for j, x in enumerate(v) if x}
    return not a.reduce(v)


def is_subspace(sub: Subspace, ambient: Subspace) -> bool:
    _check_ambient(sub, ambient)
    return all(not ambient.reduce(v) for v in sub.sparse_vectors())


def complement_basis(sub: Subspace, ambient: Subspace, check: bool = True) -> List[SparseRow]:
    """
    Vectors completing sub's basis to a basis of ambient.

    sub is written in the coordinates of ambient's canonical basis; the ambient
    basis vectors sitting at the non-pivot positions of that coordinate echelon
    form are returned, in increasing index order.
    """
    _check_ambient(sub, ambient)
    if check and not is_subspace(sub, ambient):
        raise ContainmentError(f"{sub!r} is not contained in {ambient!r}")
    K = ambient.domain
    coords = [ambient.coordinates(v) for v in sub.sparse_vectors()]
    _, _, pivots = rref(from_sparse_rows(coords, ambient.dim, K))
    taken = set(pivots)
    amb = ambient.sparse_vectors()
    return [amb[k] for k in range(ambient.dim) if k not in taken]
