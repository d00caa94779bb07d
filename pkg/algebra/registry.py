# algebra/registry.py
from typing import Callable, Dict, Optional

from algebra.builders import build_almost_stretched, build_R_mod_K, build_S_mod_L, build_S_mod_V
from algebra.core import FiniteLocalAlgebra
from models.enums import Variant
from models.params import AlmostStretchedParams, FieldSpec

Builder = Callable[[AlmostStretchedParams, Optional[FieldSpec]], FiniteLocalAlgebra]

ALGEBRA_REGISTRY: Dict[Variant, Builder] = {
    Variant.A: build_almost_stretched,
    Variant.RK: build_R_mod_K,
    Variant.SL: lambda p, field=None: build_S_mod_L(p.s, p.t, p.a, field=field, stretched=p.stretched),
    Variant.SV: lambda p, field=None: build_S_mod_V(p.s, p.t, p.a, field=field, stretched=p.stretched),
}


def get_builder(variant: Variant) -> Builder:
    """
    Returns the builder for one of the four rings of the chain.
    FILE algebras are loaded with algebra.io.load_algebra instead.
    """
    if variant not in ALGEBRA_REGISTRY:
        raise KeyError(f"No builder registered for: {variant}")
    return ALGEBRA_REGISTRY[variant]
