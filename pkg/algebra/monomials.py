# algebra/monomials.py
import logging
import re
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from models.errors import StructureError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]          # exponents of x1..xn
Poly = Dict[Exponent, object]       # exponent -> nonzero domain element

LABEL_TOKEN = re.compile(r"^x(\d+)(?:\^(\d+))?$")
MAX_REWRITE_STEPS = 100_000


# ============================================================
# MONOMIAL LABEL
class MonomialLabel(BaseModel):
    """x1^e1 * x2^e2 * x_extra (extra = 0 means none, otherwise 3 <= extra)."""
    model_config = ConfigDict(frozen=True)

    e1: int = Field(0, ge=0)
    e2: int = Field(0, ge=0)
    extra: int = 0

    @property
    def is_unit(self) -> bool:
        return self.e1 == 0 and self.e2 == 0 and self.extra == 0

    def exponent(self, nvars: int) -> Exponent:
        exps = [0] * nvars
        if nvars >= 1:
            exps[0] = self.e1
        if self.e2:
            exps[1] = self.e2
        if self.extra:
            exps[self.extra - 1] = 1
        return tuple(exps)

    @classmethod
    def from_exponent(cls, exps: Exponent) -> "MonomialLabel":
        e1 = exps[0] if len(exps) > 0 else 0
        e2 = exps[1] if len(exps) > 1 else 0
        extras = [j + 1 for j in range(2, len(exps)) if exps[j]]
        if len(extras) > 1 or any(exps[j - 1] != 1 for j in extras) or (extras and (e1 or e2)):
            raise StructureError(f"monomial {exps} has no label")
        return cls(e1=e1, e2=e2, extra=extras[0] if extras else 0)

    @classmethod
    def parse(cls, text: str) -> "MonomialLabel":
        """Parses "1", "x1^2", "x1*x2", "x3", "x1^2*x2"."""
        t = text.replace(" ", "")
        if t == "1":
            return cls()
        e1 = e2 = extra = 0
        for tok in t.split("*"):
            m = LABEL_TOKEN.match(tok)
            if not m:
                raise ValueError(f"cannot parse monomial label {text!r}")
            var, exp = int(m.group(1)), int(m.group(2) or 1)
            if var == 1:
                e1 += exp
            elif var == 2:
                e2 += exp
            elif exp == 1 and extra == 0 and var >= 3:
                extra = var
            else:
                raise ValueError(f"unsupported monomial label {text!r}")
        return cls(e1=e1, e2=e2, extra=extra)

    def __str__(self) -> str:
        parts = []
        if self.e1:
            parts.append("x1" if self.e1 == 1 else f"x1^{self.e1}")
        if self.e2:
            parts.append("x2" if self.e2 == 1 else f"x2^{self.e2}")
        if self.extra:
            parts.append(f"x{self.extra}")
        return "*".join(parts) or "1"


# ============================================================
# REWRITING
class RewriteRule(NamedTuple):
    name: str
    lhs: Exponent
    rhs: Poly


def monomial(nvars: int, **powers: int) -> Exponent:
    """monomial(3, x1=2, x3=1) -> (2, 0, 1)"""
    exps = [0] * nvars
    for var, e in powers.items():
        exps[int(var[1:]) - 1] = e
    return tuple(exps)


def _divides(lhs: Exponent, mono: Exponent) -> bool:
    return all(a <= b for a, b in zip(lhs, mono))


class RewriteSystem:
    """
    Ordered list of rules lhs -> rhs applied until no rule fires.

    Confluence is not proved here; builders validate the resulting
    multiplication table (associativity over all basis triples).
    """

    def __init__(self, nvars: int, rules: Sequence[RewriteRule], domain):
        self.nvars = nvars
        self.rules = list(rules)
        self.domain = domain

    def _first_rule(self, mono: Exponent) -> Optional[RewriteRule]:
        for rule in self.rules:
            if _divides(rule.lhs, mono):
                return rule
        return None

    def normal_form(self, poly: Poly) -> Poly:
        work = dict(poly)
        result: Poly = {}
        steps = 0
        while work:
            mono, c = work.popitem()
            rule = self._first_rule(mono)
            if rule is None:
                _accumulate(result, mono, c)
                continue
            steps += 1
            if steps > MAX_REWRITE_STEPS:
                raise StructureError("rewriting did not terminate")
            rest = tuple(m - l for m, l in zip(mono, rule.lhs))
            for m2, c2 in rule.rhs.items():
                _accumulate(work, tuple(a + b for a, b in zip(rest, m2)), c * c2)
        return result

    def product(self, u: Exponent, v: Exponent) -> Poly:
        return self.normal_form({tuple(a + b for a, b in zip(u, v)): self.domain.one})

    def is_normal(self, mono: Exponent) -> bool:
        return self._first_rule(mono) is None


def _accumulate(poly: Poly, mono: Exponent, c) -> None:
    v = poly.get(mono)
    v = c if v is None else v + c
    if v:
        poly[mono] = v
    else:
        poly.pop(mono, None)
