# resolution/verify.py
"""
Invariant checks for a computed MinimalResolution. Failures are report
entries, never exceptions.
"""
import logging

from algebra.linalg import kernel_basis, rref
from models.reports import Report
from resolution.engine import MinimalResolution

logger = logging.getLogger(__name__)


def verify_resolution(r: MinimalResolution) -> Report:
    A = r.algebra
    D = A.dim
    report = Report(command="verify_resolution", params={"algebra": A.name, "betti": list(r.betti)})

    report.add("b_0", 1, r.betti[0])

    for i, d in enumerate(r.maps, start=1):
        report.add(f"ranks d_{i}", (r.betti[i], r.betti[i - 1]), (d.source_rank, d.target_rank))

    # minimality: no column touches the unit coordinate of any block
    for i, d in enumerate(r.maps, start=1):
        units = sum(1 for col in d.columns for idx in col if idx % D == 0)
        report.add(f"minimality d_{i}", 0, units)

    if r.maps:
        # image(d_1) = m, i.e. coker d_1 = k
        rank_1, _, _ = rref(r.maps[0].klinear())
        report.add("image d_1 = m", D - 1, rank_1)

    for i in range(1, len(r.maps)):
        d_i, d_next = r.maps[i - 1], r.maps[i]
        phi = d_i.klinear()
        composite = phi * d_next.column_matrix() if d_next.source_rank else None
        nonzero = 0 if composite is None else sum(len(row) for row in composite.to_dod().values())
        report.add(f"d_{i} o d_{i + 1} = 0", 0, nonzero)

        kernel_dim = kernel_basis(phi).dim
        image_dim, _, _ = rref(d_next.klinear())
        report.add(f"exactness at F_{i}", kernel_dim, image_dim)

    if not report.all_passed:
        logger.warning("resolution of %s failed %s", A.name, report.first_failure.name)
    return report
