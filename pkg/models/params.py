# models/params.py
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import GF, QQ, Rational, isprime

from models.enums import GorensteinKind


# ============================================================
# SCALARS
def to_rational(value) -> Rational:
    """Exact sympy Rational from an int, a "p/q" or decimal string, or a Rational."""
    try:
        q = Rational(str(value)) if isinstance(value, float) else Rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {value!r}") from e
    return q


# ============================================================
# GROUND FIELD
class FieldSpec(BaseModel):
    """
    Ground field descriptor.

    `prime is None` means exact rationals (the default, characteristic zero);
    otherwise the prime field GF(p), which is only a heuristic cross-check.
    """
    model_config = ConfigDict(frozen=True)

    prime: Optional[int] = None

    @field_validator("prime")
    @classmethod
    def odd_prime(cls, v: Optional[int]) -> Optional[int]:
        if v is None:
            return v
        if v <= 2 or not isprime(v):
            raise ValueError(f"prime field needs an odd prime, got {v}")
        return v

    @classmethod
    def parse(cls, text: Union[str, dict, "FieldSpec", None]) -> "FieldSpec":
        """Accepts "rational", "prime:P", {"prime": P} or the JSON string "rational"."""
        if text is None or isinstance(text, FieldSpec):
            return text or cls()
        if isinstance(text, dict):
            return cls(prime=int(text["prime"]))
        t = str(text).strip().lower()
        if t in ("rational", "qq", "q"):
            return cls()
        if t.startswith("prime:"):
            return cls(prime=int(t.split(":", 1)[1]))
        raise ValueError(f"unknown field mode: {text!r}")

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    @property
    def domain(self):
        return QQ if self.prime is None else GF(self.prime, symmetric=False)

    def scalar(self, value: Union[int, str, Rational]):
        """Convert an int / "p/q" string / Rational into a domain element."""
        q = to_rational(value)
        K = self.domain
        return K.convert(int(q.p)) / K.convert(int(q.q))

    def to_json(self) -> Union[str, dict]:
        return "rational" if self.prime is None else {"prime": self.prime}

    def __str__(self) -> str:
        return "rational" if self.prime is None else f"prime:{self.prime}"


# ============================================================
# ALMOST STRETCHED PARAMETERS
class AlmostStretchedParams(BaseModel):
    """(h, s, t, a) of the generator list of I; t = 1 only with `stretched=True`."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    h: int = Field(..., ge=2)
    s: int
    t: int
    a: Rational = Rational(0)
    stretched: bool = False

    @field_validator("a", mode="before")
    @classmethod
    def exact_a(cls, v) -> Rational:
        try:
            return to_rational(v)
        except ValueError as e:
            raise ValueError(f"a must be a rational number, got {v!r}") from e

    @model_validator(mode="after")
    def check_range(self):
        if self.stretched:
            if self.t != 1 or self.s < 2:
                raise ValueError(f"stretched extension needs t = 1 and s >= 2, got s={self.s}, t={self.t}")
        elif not (self.s >= self.t + 1 >= 3):
            raise ValueError(f"need s >= t+1 >= 3, got s={self.s}, t={self.t}")
        return self

    @property
    def a_text(self) -> str:
        return str(self.a)


# ============================================================
# HILBERT FUNCTION
class HilbertFunction(BaseModel):
    model_config = ConfigDict(frozen=True)

    values: Tuple[int, ...]

    @field_validator("values", mode="before")
    @classmethod
    def check_values(cls, v):
        v = tuple(int(x) for x in v)
        if not v or v[0] != 1:
            raise ValueError("H(0) must be 1")
        if any(x < 0 for x in v):
            raise ValueError("Hilbert values must be non-negative")
        if v[-1] == 0:
            raise ValueError("trailing Hilbert value must be positive")
        return v

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n] if 0 <= n < len(self.values) else 0

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.values) + "}"


class GorensteinClass(BaseModel):
    kind: GorensteinKind
    witness: HilbertFunction
    gorenstein: bool


class HilbertEnumeration(BaseModel):
    e: int
    h: int
    possible: List[HilbertFunction] = Field(default_factory=list)
    excluded: List[HilbertFunction] = Field(default_factory=list)
    other: List[HilbertFunction] = Field(default_factory=list)
