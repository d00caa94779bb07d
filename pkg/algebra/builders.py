# algebra/builders.py
"""
Builders for the four rings of the change-of-rings chain

    A   = R/I   almost stretched Gorenstein, socle x1^s
    R/K = A/(0:m)
    S/V = k[[x1,x2]]/(x2^2 - a x1 x2 - x1^(s-t+1), x1^t x2)
    S/L = S/V modulo x1^s

each given by its monomial basis and a multiplication table computed by
exhaustive rewriting. t = 1 is admitted only with `stretched=True`.
"""
import logging
from typing import List, Optional

from pydantic import ValidationError

from algebra.core import FiniteLocalAlgebra
from algebra.monomials import MonomialLabel, RewriteRule, RewriteSystem, monomial
from models.errors import InvalidParametersError, StructureError
from models.params import AlmostStretchedParams, FieldSpec

logger = logging.getLogger(__name__)


# ----------------------------------------
# Parameters
def make_params(h: int, s: int, t: int, a=0, stretched: bool = False) -> AlmostStretchedParams:
    try:
        return AlmostStretchedParams(h=h, s=s, t=t, a=a, stretched=stretched)
    except ValidationError as e:
        raise InvalidParametersError(f"invalid (h={h}, s={s}, t={t}, a={a}): {e.errors()[0]['msg']}") from e


def _check_field(p: AlmostStretchedParams, field: FieldSpec) -> None:
    if field.prime is not None and field.prime <= 2 * (p.s + 2):
        raise InvalidParametersError(f"prime {field.prime} must exceed 2(s+2) = {2 * (p.s + 2)}")


# ----------------------------------------
# Rewrite rules, in the order of the generator list of I (resp. K, V, L)
def rewrite_rules(p: AlmostStretchedParams, nvars: int, kill_x1_s: bool, domain) -> List[RewriteRule]:
    one = domain.one
    a = domain.convert(int(p.a.p)) / domain.convert(int(p.a.q))
    s, t = p.s, p.t
    x = lambda **kw: monomial(nvars, **kw)
    rules: List[RewriteRule] = []

    for j in range(3, nvars + 1):
        rules.append(RewriteRule(f"x1*x{j} -> 0", x(x1=1, **{f"x{j}": 1}), {}))
    for j in range(3, nvars + 1):
        rules.append(RewriteRule(f"x2*x{j} -> 0", x(x2=1, **{f"x{j}": 1}), {}))
    for j in range(3, nvars + 1):
        for l in range(j + 1, nvars + 1):
            rules.append(RewriteRule(f"x{j}*x{l} -> 0", x(**{f"x{j}": 1, f"x{l}": 1}), {}))
    for j in range(3, nvars + 1):
        if kill_x1_s:
            rules.append(RewriteRule(f"x{j}^2 -> 0", x(**{f"x{j}": 2}), {}))
        else:
            rules.append(RewriteRule(f"x{j}^2 -> x1^{s}", x(**{f"x{j}": 2}), {x(x1=s): one}))

    rhs = {x(x1=s - t + 1): one}
    if a:
        rhs[x(x1=1, x2=1)] = a
    rules.append(RewriteRule(f"x2^2 -> {p.a_text}*x1*x2 + x1^{s - t + 1}", x(x2=2), rhs))
    rules.append(RewriteRule(f"x1^{t}*x2 -> 0", x(x1=t, x2=1), {}))
    if kill_x1_s:
        rules.append(RewriteRule(f"x1^{s} -> 0", x(x1=s), {}))
    else:
        rules.append(RewriteRule(f"x1^{s + 1} -> 0", x(x1=s + 1), {}))
    return rules


def monomial_basis(p: AlmostStretchedParams, nvars: int, kill_x1_s: bool) -> List[MonomialLabel]:
    """Unit, x1 powers ascending, x1^i*x2 ascending, then x3..xh."""
    top = p.s - 1 if kill_x1_s else p.s
    basis = [MonomialLabel()]
    basis += [MonomialLabel(e1=i) for i in range(1, top + 1)]
    basis += [MonomialLabel(e1=i, e2=1) for i in range(0, p.t)]
    basis += [MonomialLabel(extra=j) for j in range(3, nvars + 1)]
    return basis


def _build(name: str, p: AlmostStretchedParams, nvars: int, kill_x1_s: bool, field: Optional[FieldSpec]) -> FiniteLocalAlgebra:
    field = field or FieldSpec()
    _check_field(p, field)
    K = field.domain
    system = RewriteSystem(nvars, rewrite_rules(p, nvars, kill_x1_s, K), K)
    basis = monomial_basis(p, nvars, kill_x1_s)
    exps = [b.exponent(nvars) for b in basis]
    index = {e: i for i, e in enumerate(exps)}

    for e in exps:
        if not system.is_normal(e):
            raise StructureError(f"{name}: basis monomial {MonomialLabel.from_exponent(e)} is reducible")

    table = []
    for u in exps:
        row = []
        for v in exps:
            coords = [K.zero] * len(basis)
            for mono, c in system.product(u, v).items():
                if mono not in index:
                    raise StructureError(f"{name}: normal form {mono} lies outside the basis")
                coords[index[mono]] = c
            row.append(coords)
        table.append(row)

    algebra = FiniteLocalAlgebra(field, basis, table, name=name)
    logger.info("Built %s → D=%d over %s", name, algebra.dim, field)
    return algebra


# ============================================================
# PUBLIC BUILDERS
def build_almost_stretched(p: AlmostStretchedParams, field: Optional[FieldSpec] = None) -> FiniteLocalAlgebra:
    return _build(f"A(h={p.h},s={p.s},t={p.t},a={p.a_text})", p, p.h, False, field)


def build_R_mod_K(p: AlmostStretchedParams, field: Optional[FieldSpec] = None) -> FiniteLocalAlgebra:
    return _build(f"R/K(h={p.h},s={p.s},t={p.t},a={p.a_text})", p, p.h, True, field)


def build_S_mod_V(s: int, t: int, a=0, field: Optional[FieldSpec] = None, stretched: bool = False) -> FiniteLocalAlgebra:
    p = make_params(2, s, t, a, stretched)
    return _build(f"S/V(s={s},t={t},a={p.a_text})", p, 2, False, field)


def build_S_mod_L(s: int, t: int, a=0, field: Optional[FieldSpec] = None, stretched: bool = False) -> FiniteLocalAlgebra:
    p = make_params(2, s, t, a, stretched)
    return _build(f"S/L(s={s},t={t},a={p.a_text})", p, 2, True, field)


def build_hypersurface(n: int, field: Optional[FieldSpec] = None) -> FiniteLocalAlgebra:
    """k[x]/(x^n), the periodic-resolution anchor."""
    if n < 1:
        raise InvalidParametersError(f"k[x]/(x^n) needs n >= 1, got {n}")
    field = field or FieldSpec()
    K = field.domain
    basis = [MonomialLabel(e1=i) for i in range(n)]
    table = [
        [[K.one if (i + j < n and k == i + j) else K.zero for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return FiniteLocalAlgebra(field, basis, table, name=f"k[x]/(x^{n})")
