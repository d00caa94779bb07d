# cli.py
"""
poincare-scan command line.

    python cli.py build 3 4 2 0
    python cli.py betti A 3 3 2 0 --depth 5
    python cli.py betti FILE --algebra-file data/algebras/kx_mod_x3.json
    python cli.py verify 3 3 2 0 --d 0 --depth 5
    python cli.py classify 7 3
    python cli.py poincare 1 2 --expand 3

Exit codes: 0 ok, 1 verification mismatch, 2 invalid input / computation error.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
import typer
from pydantic import BaseModel, ValidationError
from tabulate import tabulate

from algebra.builders import build_almost_stretched, make_params
from algebra.core import hilbert_function, is_gorenstein, socle
from algebra.io import algebra_to_dict, load_algebra
from classification.hilbert_shapes import classify, hilbert_enumeration, rationality_guarantee, remark2_shape_params
from models.enums import OutputFormat, Variant
from models.errors import InvalidParametersError, PoincareError
from models.params import AlmostStretchedParams, FieldSpec
from models.reports import Report
from pipeline.dispatcher import build_variant, normalize_variant
from pipeline.run_pipeline import PRIME_WATERMARK, VerificationPipeline
from resolution.engine import minimal_resolution
from resolution.export import betti_csv, betti_text, resolution_to_dict
from series.rational_series import RationalSeries, expand
from series.theorem import closed_form_theorem, derive_via_proof_chain, variant_series
from utils.config import Settings, load_settings
from utils.logging_setup import configure_logging
from utils.tracking import stopwatch

logger = logging.getLogger(__name__)

app = typer.Typer(add_completion=False, no_args_is_help=True, help="Betti numbers and Poincaré series of almost stretched Gorenstein algebras.")


# ============================================================
# RUN CONFIG
class RunConfig(BaseModel):
    command: str
    h: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    a: str = "0"
    d: int = 0
    depth: int = 5
    dim_cap: int = 20000
    field: FieldSpec = FieldSpec()
    output_format: OutputFormat = OutputFormat.TEXT
    output: Optional[Path] = None
    stretched: bool = False
    timing: bool = True

    def params(self) -> AlmostStretchedParams:
        return make_params(self.h, self.s, self.t, self.a, self.stretched)

    @property
    def watermark(self) -> Optional[str]:
        return None if self.field.is_rational else PRIME_WATERMARK

    def echo_params(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for key in ("h", "s", "t"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        if self.h is not None or self.s is not None:
            out["a"] = self.a
        return out


def _settings(ctx: typer.Context) -> Settings:
    return ctx.obj if isinstance(ctx.obj, Settings) else load_settings()


def _config(ctx: typer.Context, **kw) -> RunConfig:
    settings = _settings(ctx)
    if kw.get("depth") is None:
        kw["depth"] = settings.depth
    if kw.get("dim_cap") is None:
        kw["dim_cap"] = settings.dim_cap
    try:
        kw["field"] = FieldSpec.parse(kw.get("field") or settings.field_mode)
        return RunConfig(**kw)
    except ValidationError as e:
        raise InvalidParametersError(f"invalid arguments: {e.errors()[0]['msg']}") from e
    except ValueError as e:
        raise InvalidParametersError(str(e)) from e


def _emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output is not None:
        cfg.output.parent.mkdir(parents=True, exist_ok=True)
        cfg.output.write_text(text, encoding="utf-8")
        logger.info("Wrote %s output → %s", cfg.command, cfg.output)
    else:
        typer.echo(text, nl=False)


def _dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _fail(e: Exception) -> None:
    typer.echo(f"error: {e}", err=True)
    raise typer.Exit(code=2)


def _ints(values: List[str], names: List[str]) -> Dict[str, Any]:
    if len(values) not in (len(names) - 1, len(names)):
        raise InvalidParametersError(f"expected {' '.join(names)} (last optional), got {len(values)} value(s)")
    out: Dict[str, Any] = {}
    for name, raw in zip(names, values):
        if name == "a":
            out[name] = raw
            continue
        try:
            out[name] = int(raw)
        except ValueError as e:
            raise InvalidParametersError(f"{name} must be an integer, got {raw!r}") from e
    return out


# ------------------------------------------------------------
# Shared options
FieldOpt = typer.Option(None, "--field", help='"rational" (default) or "prime:P" (heuristic)')
FormatOpt = typer.Option(OutputFormat.TEXT, "--format", help="text | json | csv")
OutputOpt = typer.Option(None, "--output", help="Write to this file instead of stdout")
DepthOpt = typer.Option(None, "--depth", help="Number of resolution steps")
DimCapOpt = typer.Option(None, "--dim-cap", help="Largest free-module k-dimension to resolve")
NoTimingOpt = typer.Option(False, "--no-timing", help="Report runtime_ms = 0 (byte-identical runs)")


@app.callback()
def main(ctx: typer.Context, log_level: Optional[str] = typer.Option(None, "--log-level")):
    try:
        settings = load_settings()
    except PoincareError as e:
        _fail(e)
    if log_level:
        settings = settings.model_copy(update={"log_level": log_level.upper()})
    configure_logging(settings.log_level, settings.log_dir)
    ctx.obj = settings


# ============================================================
# build
@app.command()
def build(
    ctx: typer.Context,
    h: int,
    s: int,
    t: int,
    a: str = typer.Argument("0"),
    stretched: bool = typer.Option(False, "--stretched", help="Admit t = 1 (stretched case)"),
    field: Optional[str] = FieldOpt,
    output_format: OutputFormat = FormatOpt,
    output: Optional[Path] = OutputOpt,
):
    """Build A(h, s, t, a) and summarise its structure."""
    try:
        cfg = _config(ctx, command="build", h=h, s=s, t=t, a=a, stretched=stretched,
                      field=field, output_format=output_format, output=output)
        A = build_almost_stretched(cfg.params(), cfg.field)
        hf = hilbert_function(A)
        shape = remark2_shape_params(hf)
        summary = {
            "algebra": A.name,
            "dimension": A.dim,
            "hilbert_function": str(hf),
            "socle_dim": socle(A).dim,
            "gorenstein": is_gorenstein(A),
            "class": classify(A).kind.value,
            "shape_params": None if shape is None else {"s": shape[0], "t": shape[1]},
            "shape_matches": shape == (cfg.s, cfg.t),
        }
    except PoincareError as e:
        _fail(e)

    if cfg.output_format is OutputFormat.JSON:
        _emit(cfg, _dumps({"summary": summary, "algebra": algebra_to_dict(A), "watermark": cfg.watermark}))
    elif cfg.output_format is OutputFormat.CSV:
        row = {**summary, "shape_params": "" if shape is None else f"{shape[0]},{shape[1]}"}
        _emit(cfg, pd.DataFrame([row]).to_csv(index=False))
    else:
        rows = [[k, "-" if v is None else (f"s={v['s']}, t={v['t']}" if isinstance(v, dict) else v)] for k, v in summary.items()]
        text = tabulate(rows, tablefmt="plain")
        if cfg.watermark:
            text += f"\n[{cfg.watermark}]"
        _emit(cfg, text)


# ============================================================
# betti
@app.command()
def betti(
    ctx: typer.Context,
    variant: str,
    params: Optional[List[str]] = typer.Argument(None, help="A/RK: h s t [a]; SL/SV: s t [a]"),
    depth: Optional[int] = DepthOpt,
    dim_cap: Optional[int] = DimCapOpt,
    algebra_file: Optional[Path] = typer.Option(None, "--algebra-file", help="Algebra JSON for variant FILE"),
    stretched: bool = typer.Option(False, "--stretched"),
    maps: bool = typer.Option(False, "--maps", help="Include the differentials in JSON output"),
    field: Optional[str] = FieldOpt,
    output_format: OutputFormat = FormatOpt,
    output: Optional[Path] = OutputOpt,
    no_timing: bool = NoTimingOpt,
):
    """Betti numbers of k over one ring of the chain, next to the predicted series."""
    params = params or []
    try:
        v = normalize_variant(variant)
        if v is Variant.FILE:
            if algebra_file is None:
                raise InvalidParametersError("variant FILE needs --algebra-file")
            cfg = _config(ctx, command="betti", depth=depth, dim_cap=dim_cap, field=field,
                          output_format=output_format, output=output, timing=not no_timing)
            A = load_algebra(algebra_file)
            series = None
        else:
            names = ["h", "s", "t", "a"] if v in (Variant.A, Variant.RK) else ["s", "t", "a"]
            values = _ints(params, names)
            if "h" not in values:
                values["h"] = 2
            cfg = _config(ctx, command="betti", depth=depth, dim_cap=dim_cap, stretched=stretched, field=field,
                          output_format=output_format, output=output, timing=not no_timing, **values)
            A = build_variant(v, cfg.params(), cfg.field)
            series = closed_form_theorem(0, cfg.h) if v is Variant.A else variant_series(v, cfg.h)

        with stopwatch() as t:
            res = minimal_resolution(A, cfg.depth, cfg.dim_cap)
    except KeyError as e:
        _fail(InvalidParametersError(str(e)))
    except PoincareError as e:
        _fail(e)

    expected = expand(series, cfg.depth) if series is not None else None
    match = None if expected is None else expected[: len(res.betti)] == res.betti
    if cfg.output_format is OutputFormat.JSON:
        data = {
            "command": "betti",
            "variant": v.value,
            "algebra": A.name,
            "params": {**(cfg.echo_params() if v is not Variant.FILE else {"file": str(algebra_file)}), "depth": cfg.depth},
            "betti": res.betti,
            "series": None if series is None else str(series),
            "expected": expected,
            "match": match,
            "truncated": res.truncated,
            "runtime_ms": t["ms"] if cfg.timing else 0,
            "watermark": cfg.watermark,
        }
        if maps:
            data["resolution"] = resolution_to_dict(res)
        _emit(cfg, _dumps(data))
    elif cfg.output_format is OutputFormat.CSV:
        _emit(cfg, betti_csv(res.betti, expected))
    else:
        lines = [f"{A.name}  (D={A.dim})", betti_text(res.betti, expected)]
        if series is not None:
            lines.append(f"series: {series}")
            lines.append(f"match: {'yes' if match else 'no'}")
        if res.truncated:
            lines.append(f"truncated: dim_cap {cfg.dim_cap} reached after b_{len(res.betti) - 1}")
        if cfg.watermark:
            lines.append(f"[{cfg.watermark}]")
        _emit(cfg, "\n".join(lines))


# ============================================================
# verify
def _report_text(report: Report) -> str:
    rows = [[c.name, c.expected, c.actual, "PASS" if c.passed else "FAIL"] for c in report.checks]
    verdict = f"{'PASS' if report.all_passed else 'FAIL'} ({len(report.checks)} checks)"
    text = tabulate(rows, headers=["check", "expected", "actual", "result"], tablefmt="simple") + "\n" + verdict
    if report.watermark:
        text += f"\n[{report.watermark}]"
    return text


@app.command()
def verify(
    ctx: typer.Context,
    h: int,
    s: int,
    t: int,
    a: str = typer.Argument("0"),
    d: int = typer.Option(0, "--d", help="Krull dimension of the lifted ring"),
    depth: Optional[int] = DepthOpt,
    dim_cap: Optional[int] = DimCapOpt,
    stretched: bool = typer.Option(False, "--stretched"),
    expected_series: Optional[str] = typer.Option(None, "--expected-series", hidden=True),
    field: Optional[str] = FieldOpt,
    output_format: OutputFormat = FormatOpt,
    output: Optional[Path] = OutputOpt,
    no_timing: bool = NoTimingOpt,
):
    """Oracle Betti numbers of A, R/K, S/L, S/V and the symbolic chain, all compared."""
    try:
        cfg = _config(ctx, command="verify", h=h, s=s, t=t, a=a, d=d, depth=depth, dim_cap=dim_cap,
                      stretched=stretched, field=field, output_format=output_format, output=output,
                      timing=not no_timing)
        if cfg.d < 0:
            raise InvalidParametersError(f"d must be >= 0, got {cfg.d}")
        override = RationalSeries.parse(expected_series) if expected_series else None
        p = cfg.params()
    except PoincareError as e:
        _fail(e)

    report = VerificationPipeline(cfg.field, cfg.depth, cfg.dim_cap).verify(p, cfg.d, override)
    if not cfg.timing:
        report.runtime_ms = 0

    if cfg.output_format is OutputFormat.JSON:
        _emit(cfg, _dumps(report.to_dict()))
    elif cfg.output_format is OutputFormat.CSV:
        _emit(cfg, pd.DataFrame(report.to_dict()["checks"]).to_csv(index=False))
    else:
        _emit(cfg, _report_text(report))

    if not report.all_passed:
        failure = report.first_failure
        typer.echo(f"FAIL {failure.name}: expected {failure.expected}, got {failure.actual}", err=True)
        raise typer.Exit(code=1)


# ============================================================
# classify
@app.command("classify")
def classify_cmd(
    ctx: typer.Context,
    e: int,
    h: int,
    output_format: OutputFormat = FormatOpt,
    output: Optional[Path] = OutputOpt,
):
    """Possible Hilbert functions for multiplicity e, embedding dimension h, and the rationality verdict."""
    try:
        cfg = _config(ctx, command="classify", output_format=output_format, output=output)
        enum = hilbert_enumeration(e, h)
        rational, reason = rationality_guarantee(e, h)
    except PoincareError as err:
        _fail(err)

    if cfg.output_format is OutputFormat.JSON:
        _emit(cfg, _dumps({
            "command": "classify",
            "params": {"e": e, "h": h},
            "possible": [str(x) for x in enum.possible],
            "excluded": [str(x) for x in enum.excluded],
            "other": [str(x) for x in enum.other],
            "rational": rational,
            "reason": reason,
        }))
    elif cfg.output_format is OutputFormat.CSV:
        rows = [{"status": status, "hilbert_function": str(x)}
                for status, group in (("possible", enum.possible), ("excluded", enum.excluded), ("other", enum.other))
                for x in group]
        _emit(cfg, pd.DataFrame(rows, columns=["status", "hilbert_function"]).to_csv(index=False))
    else:
        lines = ["; ".join(str(x) for x in enum.possible) or "(none)"]
        if enum.excluded:
            lines.append("excluded: " + "; ".join(str(x) for x in enum.excluded))
        lines.append(f"rational: {'yes' if rational else 'no'} ({reason})")
        _emit(cfg, "\n".join(lines))


# ============================================================
# poincare
@app.command()
def poincare(
    ctx: typer.Context,
    d: int,
    h: int,
    n: int = typer.Option(5, "--expand", help="Number of coefficients after the constant term"),
    trace: bool = typer.Option(False, "--trace", help="Show the change-of-rings replay"),
    output_format: OutputFormat = FormatOpt,
    output: Optional[Path] = OutputOpt,
):
    """Closed-form Poincaré series (1+z)^d / (1 - hz + z^2) and its first coefficients."""
    try:
        cfg = _config(ctx, command="poincare", h=h, d=d, output_format=output_format, output=output)
        if n < 0:
            raise InvalidParametersError(f"--expand must be >= 0, got {n}")
        series = closed_form_theorem(d, h)
        coeffs = expand(series, n)
        steps = derive_via_proof_chain(d, h)[1].steps if trace else []
    except PoincareError as err:
        _fail(err)

    if cfg.output_format is OutputFormat.JSON:
        data = {"command": "poincare", "params": {"d": d, "h": h}, "series": str(series),
                **series.to_json(), "coefficients": coeffs}
        if trace:
            data["trace"] = [{"stage": s.stage.value, "rule": s.rule, "series": str(s.series)} for s in steps]
        _emit(cfg, _dumps(data))
    elif cfg.output_format is OutputFormat.CSV:
        _emit(cfg, pd.DataFrame({"i": list(range(len(coeffs))), "c_i": coeffs}).to_csv(index=False))
    else:
        lines = [str(series), str(coeffs)]
        if trace:
            lines.append(tabulate([[s.stage.value, s.rule, str(s.series)] for s in steps],
                                  headers=["stage", "rule", "series"], tablefmt="simple"))
        _emit(cfg, "\n".join(lines))


if __name__ == "__main__":
    app()
