# algebra/io.py
"""
Algebra JSON schema:

    {"field": "rational" | {"prime": p},
     "basis": ["1", "x1", "x1^2", ...],
     "table": D x D arrays of coordinate vectors, entries "num/den"}

Import validates every FiniteLocalAlgebra invariant, so hand-written algebras
such as k[x]/(x^n) can be fed to the resolution engine as oracle cases.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from algebra.core import FiniteLocalAlgebra, format_scalar
from algebra.monomials import MonomialLabel
from models.errors import AlgebraError, PoincareError
from models.params import FieldSpec

logger = logging.getLogger(__name__)


def algebra_to_dict(A: FiniteLocalAlgebra) -> Dict[str, Any]:
    K = A.domain
    return {
        "field": A.field.to_json(),
        "basis": [str(b) for b in A.basis],
        "table": [[[format_scalar(K, c) for c in cell] for cell in row] for row in A.table],
    }


def algebra_to_json(A: FiniteLocalAlgebra) -> str:
    return json.dumps(algebra_to_dict(A), indent=2, ensure_ascii=False)


def algebra_from_dict(data: Dict[str, Any], name: str = "") -> FiniteLocalAlgebra:
    try:
        field = FieldSpec.parse(data.get("field", "rational"))
        basis = [MonomialLabel.parse(str(b)) for b in data["basis"]]
        table = [
            [[field.scalar(str(c)) for c in cell] for cell in row]
            for row in data["table"]
        ]
    except PoincareError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise AlgebraError(f"malformed algebra JSON: {e}") from e
    return FiniteLocalAlgebra(field, basis, table, name=name or "imported")


def load_algebra(path: Union[str, Path]) -> FiniteLocalAlgebra:
    p = Path(path)
    if not p.exists():
        raise AlgebraError(f"Algebra file not found: {path}")
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise AlgebraError(f"Failed to parse {path}") from e
    algebra = algebra_from_dict(data, name=p.stem)
    logger.info("Loaded algebra %s from %s (D=%d)", algebra.name, p, algebra.dim)
    return algebra


def save_algebra(A: FiniteLocalAlgebra, path: Union[str, Path]) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(algebra_to_json(A), encoding="utf-8")
    logger.info("Saved algebra %s → %s", A.name, p)
    return p
