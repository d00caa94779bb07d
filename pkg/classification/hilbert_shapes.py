# classification/hilbert_shapes.py
"""
Stretched / almost stretched recognition from the Hilbert function, and the
enumeration of Hilbert functions an Artinian reduction of multiplicity e and
embedding dimension h can have.
"""
import logging
from sympy import binomial
from typing import List, Optional, Tuple

from algebra.core import FiniteLocalAlgebra, hilbert_function, is_gorenstein
from models.enums import GorensteinKind
from models.errors import ClassificationError
from models.params import GorensteinClass, HilbertEnumeration, HilbertFunction

logger = logging.getLogger(__name__)


# ============================================================
# CLASSIFICATION
def classify(A: FiniteLocalAlgebra) -> GorensteinClass:
    # m^2 = 0 counts as principal
    hf = hilbert_function(A)
    if hf[2] <= 1:
        kind = GorensteinKind.STRETCHED
    elif hf[2] == 2:
        kind = GorensteinKind.ALMOST_STRETCHED
    else:
        kind = GorensteinKind.OTHER
    return GorensteinClass(kind=kind, witness=hf, gorenstein=is_gorenstein(A))


def is_stretched_shape(hf: HilbertFunction) -> bool:
    """1, h, 1, ..., 1 with at least one trailing 1."""
    v = hf.values
    return len(v) >= 3 and v[1] >= 1 and all(x == 1 for x in v[2:])


def remark2_shape_params(hf: HilbertFunction) -> Optional[Tuple[int, int]]:
    """(s, t) if hf is 1, h, 2 (t-1 times), 1 (s-t times) with h >= 2 and s >= t+1 >= 3."""
    v = hf.values
    if len(v) < 4 or v[1] < 2:
        return None
    twos = 0
    while 2 + twos < len(v) and v[2 + twos] == 2:
        twos += 1
    ones = len(v) - 2 - twos
    if twos < 1 or ones < 1 or any(x != 1 for x in v[2 + twos:]):
        return None
    return len(v) - 1, twos + 1


def _matches_a_shape(hf: HilbertFunction) -> bool:
    return is_stretched_shape(hf) or remark2_shape_params(hf) is not None


# ============================================================
# ENUMERATION
def macaulay_bound(a: int, n: int) -> int:
    """a^<n>: the largest H(n+1) an O-sequence allows after H(n) = a."""
    if a == 0:
        return 0
    bound, rest, k = 0, a, n
    while rest > 0 and k > 0:
        top = k
        while binomial(top + 1, k) <= rest:
            top += 1
        rest -= binomial(top, k)
        bound += binomial(top + 1, k + 1)
        k -= 1
    return int(bound)


def _check_range(e: int, h: int) -> None:
    if h < 2 or e < h + 1:
        raise ClassificationError(f"need e >= h+1 >= 3, got e={e}, h={h}")


def _excluded(hf: HilbertFunction) -> bool:
    # Gorenstein in codimension two is a complete intersection
    return hf[1] == 2 and hf[2] == 3


def _sort_key(hf: HilbertFunction):
    return len(hf), tuple(-x for x in hf.values)


def _o_sequences(e: int, h: int) -> List[HilbertFunction]:
    found: List[HilbertFunction] = []

    def grow(values: List[int], remaining: int) -> None:
        if remaining == 0:
            if len(values) >= 3 and values[-1] == 1:
                found.append(HilbertFunction(values=values))
            return
        n = len(values) - 1
        for nxt in range(min(macaulay_bound(values[-1], n), remaining), 0, -1):
            grow(values + [nxt], remaining - nxt)

    grow([1, h], e - 1 - h)
    return found


def enumerate_candidate_hf(e: int, h: int) -> List[HilbertFunction]:
    """O-sequences 1, h, ..., 1 of length >= 3 and sum e, after the codimension-two exclusion."""
    _check_range(e, h)
    return sorted((hf for hf in _o_sequences(e, h) if not _excluded(hf)), key=_sort_key)


def enumerate_possible_hf(e: int, h: int) -> List[HilbertFunction]:
    _check_range(e, h)
    return [hf for hf in enumerate_candidate_hf(e, h) if _matches_a_shape(hf)]


def hilbert_enumeration(e: int, h: int) -> HilbertEnumeration:
    _check_range(e, h)
    sequences = sorted(_o_sequences(e, h), key=_sort_key)
    result = HilbertEnumeration(
        e=e,
        h=h,
        possible=[hf for hf in sequences if not _excluded(hf) and _matches_a_shape(hf)],
        excluded=[hf for hf in sequences if _excluded(hf)],
        other=[hf for hf in sequences if not _excluded(hf) and not _matches_a_shape(hf)],
    )
    logger.info(
        "Enumerated e=%d h=%d → %d possible, %d excluded, %d other",
        e, h, len(result.possible), len(result.excluded), len(result.other),
    )
    return result


# ============================================================
# RATIONALITY
MINIMAL_MULTIPLICITY = "minimal multiplicity bound (e = h+1)"
MULTIPLICITY_SEVEN = "multiplicity-seven bound (e <= 7)"
SMALL_EXCESS = "small-excess bound (e <= h+4)"


def rationality_guarantee(e: int, h: int) -> Tuple[bool, str]:
    """(guaranteed, name of the bound that applies); the e <= 7 bound wins over e <= h+4."""
    _check_range(e, h)
    if e == h + 1:
        return True, MINIMAL_MULTIPLICITY
    if e <= 7:
        return True, MULTIPLICITY_SEVEN
    if e <= h + 4:
        return True, SMALL_EXCESS
    return False, f"no guarantee for e={e}, h={h}"
