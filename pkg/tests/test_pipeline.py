import pytest

from algebra.builders import make_params
from models.enums import Variant
from models.errors import StructureError
from models.params import FieldSpec
from pipeline import run_pipeline
from pipeline.dispatcher import build_variant, normalize_variant
from pipeline.run_pipeline import PRIME_WATERMARK, VerificationPipeline, chain_hypothesis_failures, run_verification
from series.rational_series import RationalSeries

CHECK_ORDER = ["betti_A", "betti_RK", "betti_SL", "betti_SV", "chain_hypotheses", "proof_chain_final", "resolutions_verified"]


# ----------------------------------------
# Dispatcher
@pytest.mark.parametrize(
    "name,variant",
    [("A", Variant.A), ("r/i", Variant.A), ("R/K", Variant.RK), (" s/l ", Variant.SL), ("SV", Variant.SV), ("file", Variant.FILE)],
)
def test_variant_aliases(name, variant):
    assert normalize_variant(name) is variant


def test_unknown_variant():
    with pytest.raises(KeyError):
        normalize_variant("S/W")
    with pytest.raises(KeyError):
        build_variant("FILE", make_params(3, 3, 2))


def test_build_variant_dimensions():
    p = make_params(3, 4, 2, 1)
    assert build_variant("A", p).dim == 8
    assert build_variant("R/K", p).dim == 7
    assert build_variant("S/V", p).dim == 7
    assert build_variant("S/L", p).dim == 6


# ----------------------------------------
# Verification
def test_verification_passes():
    report = run_verification(3, 3, 2, 0, depth=4)
    assert [c.name for c in report.checks] == CHECK_ORDER
    assert report.all_passed, report.first_failure
    assert report.checks[0].actual == "[1, 3, 8, 21, 55]"
    assert report.watermark is None
    assert report.params["h"] == 3 and report.params["field"] == "rational"
    assert report.to_dict()["checks"][0]["pass"] is True


def test_tampered_expectation_fails():
    report = run_verification(3, 3, 2, 0, depth=4, expected_override=RationalSeries.of([1], [1, -2]))
    assert not report.all_passed
    assert report.first_failure.name == "betti_A"
    assert report.first_failure.expected == "[1, 2, 4, 8, 16]"


def test_positive_dimension_lift():
    report = run_verification(2, 4, 3, 1, d=2, depth=4)
    assert report.all_passed, report.first_failure
    final = next(c for c in report.checks if c.name == "proof_chain_final")
    assert final.actual == "(1 + z)^2 / (1 - 2z + z^2)"


def test_prime_field_is_watermarked():
    report = run_verification(3, 3, 2, 0, depth=3, field=FieldSpec(prime=101))
    assert report.watermark == PRIME_WATERMARK
    assert report.params["field"] == "prime:101"
    assert report.all_passed, report.first_failure


def test_status_messages():
    messages = []
    pipeline = VerificationPipeline(depth=2, status_callback=messages.append)
    report = pipeline.verify(make_params(2, 3, 2))
    assert report.all_passed
    assert messages[0] == "Resolving A to depth 2..."
    assert messages[-1].startswith("Verification passed")
    assert set(pipeline.resolutions) == {Variant.A, Variant.RK, Variant.SL, Variant.SV}


def test_stage_errors_become_failed_checks(monkeypatch):
    def broken(variant, p, field=None):
        raise StructureError("associativity fails")

    monkeypatch.setattr(run_pipeline, "build_variant", broken)
    report = run_verification(3, 3, 2, 0, depth=2)
    assert len(report.checks) == 7
    failed = [c for c in report.checks if not c.passed]
    assert [c.name for c in failed] == CHECK_ORDER[:5]
    assert all("error:" in c.actual for c in failed)


# ----------------------------------------
# Chain hypotheses
@pytest.mark.parametrize(
    "h,s,t,a,stretched",
    [(2, 3, 2, 0, False), (3, 3, 2, 0, False), (4, 4, 2, 1, False), (3, 4, 3, "1/2", False), (3, 3, 1, 0, True)],
)
def test_chain_hypotheses_hold(h, s, t, a, stretched):
    assert chain_hypothesis_failures(make_params(h, s, t, a, stretched)) == []


def test_chain_hypotheses_hold_over_prime_field():
    assert chain_hypothesis_failures(make_params(3, 3, 2), FieldSpec(prime=101)) == []


def test_mismatched_s_mod_l_is_reported(monkeypatch):
    def shifted(variant, p, field=None):
        if normalize_variant(variant) is Variant.SL:
            return build_variant(variant, make_params(p.h, p.s + 1, p.t, p.a), field)
        return build_variant(variant, p, field)

    monkeypatch.setattr(run_pipeline, "build_variant", shifted)
    assert chain_hypothesis_failures(make_params(3, 3, 2)) == ["R/K modulo (x3..xh) differs from S/L"]

    report = run_verification(3, 3, 2, 0, depth=2)
    check = next(c for c in report.checks if c.name == "chain_hypotheses")
    assert not check.passed
    assert check.actual == "R/K modulo (x3..xh) differs from S/L"


def test_non_gorenstein_s_mod_v_is_reported(monkeypatch):
    def swapped(variant, p, field=None):
        if normalize_variant(variant) is Variant.SV:
            return build_variant(Variant.RK, p, field)
        return build_variant(variant, p, field)

    monkeypatch.setattr(run_pipeline, "build_variant", swapped)
    failures = chain_hypothesis_failures(make_params(3, 3, 2))
    assert len(failures) == 1
    assert failures[0].startswith("S/V has socle dimension")
