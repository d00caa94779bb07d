# pipeline/dispatcher.py
import logging
from typing import Optional

from algebra import registry
from algebra.core import FiniteLocalAlgebra
from models.enums import Variant
from models.params import AlmostStretchedParams, FieldSpec

logger = logging.getLogger(__name__)

# Normalize common variant spellings
VARIANT_ALIASES = {
    "A": Variant.A,
    "R/I": Variant.A,
    "RK": Variant.RK,
    "R/K": Variant.RK,
    "SL": Variant.SL,
    "S/L": Variant.SL,
    "SV": Variant.SV,
    "S/V": Variant.SV,
    "FILE": Variant.FILE,
}


def normalize_variant(name) -> Variant:
    if isinstance(name, Variant):
        return name
    key = str(name).strip().upper().replace(" ", "")
    if key not in VARIANT_ALIASES:
        raise KeyError(f"Unknown variant: {name!r}")
    return VARIANT_ALIASES[key]


def build_variant(variant, p: AlmostStretchedParams, field: Optional[FieldSpec] = None) -> FiniteLocalAlgebra:
    """
    Builds the ring named by `variant` (any accepted spelling) for parameters p.
    """
    v = normalize_variant(variant)
    try:
        builder = registry.get_builder(v)
    except KeyError:
        logger.error("No builder registered for %s", v.value)
        raise
    logger.info("Dispatcher → building %s for h=%d s=%d t=%d a=%s", v.value, p.h, p.s, p.t, p.a_text)
    return builder(p, field)
