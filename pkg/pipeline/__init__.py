# pipeline/__init__.py
"""
Pipeline for:
1. Resolving variant names to algebra builders
2. Computing oracle Betti numbers of the four rings of the chain
3. Producing the verification report
"""


from .dispatcher import build_variant, normalize_variant
from .run_pipeline import VerificationPipeline, run_verification

__all__ = ["build_variant", "normalize_variant", "VerificationPipeline", "run_verification"]
