# resolution/__init__.py
from .engine import MinimalResolution, betti_numbers, minimal_resolution
from .verify import verify_resolution

__all__ = ["MinimalResolution", "betti_numbers", "minimal_resolution", "verify_resolution"]
