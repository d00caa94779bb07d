# resolution/export.py
"""Betti tables (CSV / text) and full-map JSON export for audit."""
import json
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from tabulate import tabulate

from algebra.core import format_scalar
from resolution.engine import MinimalResolution


def betti_frame(betti: Sequence[int], expected: Optional[Sequence[int]] = None) -> pd.DataFrame:
    df = pd.DataFrame({"i": list(range(len(betti))), "b_i": list(betti)})
    if expected is not None:
        df["series"] = list(expected[: len(betti)])
        df["match"] = ["yes" if b == c else "no" for b, c in zip(df["b_i"], df["series"])]
    return df


def betti_csv(betti: Sequence[int], expected: Optional[Sequence[int]] = None) -> str:
    return betti_frame(betti, expected).to_csv(index=False)


def betti_text(betti: Sequence[int], expected: Optional[Sequence[int]] = None) -> str:
    df = betti_frame(betti, expected)
    return tabulate(df.values.tolist(), headers=list(df.columns), tablefmt="simple")


def resolution_to_dict(r: MinimalResolution) -> Dict[str, Any]:
    A = r.algebra
    D = A.dim
    maps: List[Dict[str, Any]] = []
    for i, d in enumerate(r.maps, start=1):
        entries = [
            [[format_scalar(A.domain, col.get(row * D + k, A.domain.zero)) for k in range(D)] for col in d.columns]
            for row in range(d.target_rank)
        ]
        maps.append({"i": i, "source_rank": d.source_rank, "target_rank": d.target_rank, "entries": entries})
    return {
        "algebra": A.name,
        "basis": [str(b) for b in A.basis],
        "betti": list(r.betti),
        "truncated": r.truncated,
        "maps": maps,
    }


def resolution_to_json(r: MinimalResolution) -> str:
    return json.dumps(resolution_to_dict(r), indent=2, ensure_ascii=False)
