# series/__init__.py
from .rational_series import IntPolynomial, RationalSeries, expand
from .theorem import closed_form_theorem, derive_via_proof_chain

__all__ = ["IntPolynomial", "RationalSeries", "expand", "closed_form_theorem", "derive_via_proof_chain"]
