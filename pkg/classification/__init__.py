# classification/__init__.py
from .hilbert_shapes import classify, enumerate_possible_hf, rationality_guarantee, remark2_shape_params

__all__ = ["classify", "enumerate_possible_hf", "rationality_guarantee", "remark2_shape_params"]
