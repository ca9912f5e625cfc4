"""Command-line driver: single values, verification suites and crystal graphs.

Exit codes: 0 success or all cells pass, 1 some identity failed, 2 usage error.
"""

from __future__ import annotations

import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click
from pydantic import ValidationError

from models.classical_type import ClassicalType, Diamond
from models.exceptions import InvalidInputError, OneDimError
from models.reports import SuiteReport
from models.run_config import RunConfig

from .settings import configure_logging, load_settings

logger = logging.getLogger(__name__)

FORMATS = click.Choice(["table", "json", "latex"])
KINDS = click.Choice(["empty", "0", "1", "2", "11"])
FAMILIES = click.Choice(["A", "B", "C", "D"], case_sensitive=False)


def _config(**fields: Any) -> RunConfig:
    """Build the RunConfig for this invocation; validation problems become usage errors."""
    try:
        return RunConfig(**{k: v for k, v in fields.items() if v is not None})
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first.get("loc", ()))
        raise click.UsageError(f"{where}: {first['msg']}") from exc


def _int_list(text: Optional[str]):
    if text is None or not text.strip():
        return None
    try:
        return [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise click.BadParameter(f"expected a comma-separated integer list, got {text!r}") from exc


def _emit(config: RunConfig, payload: Dict[str, Any], plain: str, latex: str) -> None:
    if config.output_format == "json":
        click.echo(json.dumps(payload, ensure_ascii=False))
    elif config.output_format == "latex":
        click.echo(latex)
    else:
        click.echo(plain)


@click.group()
@click.option("--log-level", default=None, help="Overrides ONEDIM_LOG_LEVEL.")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]) -> None:
    """One-dimensional sums, K-polynomials and Lusztig q-analogues."""
    settings = load_settings()
    configure_logging(log_level or settings.log_level)
    ctx.obj = settings


@cli.command("x")
@click.option("--kind", type=KINDS, default="11", show_default=True)
@click.option("--lambda", "lam", default="", help='Partition, e.g. "2,1"; "" is empty.')
@click.option("--mu", default="")
@click.option("--rank", type=int, default=None)
@click.option("--format", "output_format", type=FORMATS, default="table")
def cmd_x(kind: str, lam: str, mu: str, rank: Optional[int], output_format: str) -> None:
    """Print the 1-d sum X̄^kind_{λ,μ}(q)."""
    from onedim.sums import default_rank, x_sum

    config = _config(command="x", lam=lam, mu=mu, diamond=Diamond.parse(kind), rank=rank,
                     output_format=output_format)
    m = max(config.lam.length, config.mu.length)
    n = config.rank or default_rank(config.diamond, m)
    try:
        result = x_sum(config.lam, config.mu, config.diamond, n)
    except InvalidInputError as exc:
        raise click.UsageError(str(exc)) from exc
    payload = {"lambda": config.lam.as_list(), "mu": config.mu.as_list(), "kind": config.diamond.value,
               "rank": n, "x": str(result.value), "vertices": result.vertices}
    _emit(config, payload, str(result.value), result.value.to_latex())


@cli.command("kostka")
@click.option("--lambda", "lam", default="")
@click.option("--mu", default="")
@click.option("--route", type=click.Choice(["kl", "charge", "onedim"]), default="kl", show_default=True)
@click.option("--cocharge", is_flag=True, help="Print K̄ = q^{||μ||} K(q^{-1}) instead of K.")
@click.option("--format", "output_format", type=FORMATS, default="table")
def cmd_kostka(lam: str, mu: str, route: str, cocharge: bool, output_format: str) -> None:
    """Print the Kostka–Foulkes polynomial K_{λ,μ}(q)."""
    from kostka.foulkes import cocharge_kf, kostka_foulkes

    config = _config(command="kostka", lam=lam, mu=mu, route=route, output_format=output_format)
    compute = cocharge_kf if cocharge else kostka_foulkes
    value = compute(config.lam, config.mu, config.route)
    payload = {"lambda": config.lam.as_list(), "mu": config.mu.as_list(), "route": config.route,
               "cocharge": cocharge, "value": str(value)}
    _emit(config, payload, str(value), value.to_latex())


@cli.command("kl")
@click.option("--type", "family", type=FAMILIES, required=True)
@click.option("--rank", type=int, required=True)
@click.option("--lambda", "lam", required=True, help="Weakly decreasing integers, zero-padded to the rank.")
@click.option("--mu", required=True)
@click.option("--stable", is_flag=True, help="Sum over S_n only (∞KL).")
@click.option("--l-short", type=int, default=None, help="L on the short roots of B_n, in half-units.")
@click.option("--format", "output_format", type=FORMATS, default="table")
def cmd_kl(family: str, rank: int, lam: str, mu: str, stable: bool, l_short: Optional[int], output_format: str) -> None:
    """Print KL^{g,L}_{λ,μ}(q) or, with --stable, ∞KL."""
    from lusztig.kl import kl_poly, stable_kl
    from weights.lattice import pad
    from weights.roots import root_system

    lam_v, mu_v = _int_list(lam) or [], _int_list(mu) or []
    if len(lam_v) > rank or len(mu_v) > rank:
        raise click.BadParameter(f"weights have more than {rank} entries")
    config = _config(command="kl", family=family.upper(), rank=rank, stable=stable, l_short=l_short,
                     lam_weight=lam_v + [0] * (rank - len(lam_v)), mu_weight=mu_v + [0] * (rank - len(mu_v)),
                     output_format=output_format)
    try:
        t = ClassicalType(family=config.family, n=config.rank)
    except ValidationError as exc:
        raise click.UsageError(exc.errors()[0]["msg"]) from exc
    if config.l_short is not None and t.family != "B":
        raise click.BadParameter("--l-short only applies to type B", param_hint="--l-short")
    rs = root_system(t, 2, config.l_short)
    compute = stable_kl if config.stable else kl_poly
    try:
        value = compute(config.lam_weight, config.mu_weight, t, rs)
    except InvalidInputError as exc:
        raise click.UsageError(str(exc)) from exc
    payload = {"type": str(t), "lambda": list(config.lam_weight.coords), "mu": list(config.mu_weight.coords),
               "stable": config.stable, "value": str(value)}
    _emit(config, payload, str(value), value.to_latex())


def _table(report: SuiteReport) -> str:
    lines = []
    for cell in report.cells:
        status = "ok" if cell.passed else "FAIL"
        lam = ",".join(map(str, cell.lam)) or "∅"
        mu = ",".join(map(str, cell.mu)) or "∅"
        line = f"{status:4} {cell.kind:>6} n={cell.rank:<2} λ={lam:<10} μ={mu:<10} {cell.x} | {cell.k}"
        if cell.detail:
            line += f"  [{cell.detail}]"
        lines.append(line)
    lines.append(f"{report.suite}: {'pass' if report.passed else 'FAIL'} "
                 f"({len(report.cells) - len(report.failures())}/{len(report.cells)} cells)")
    return "\n".join(lines)


_PLAIN_POWER = re.compile(r"q\^(-?\d+)")


def _latex_text(text: str) -> str:
    """A cell value printed by QPoly.__str__, rewritten with braced exponents."""
    return "$" + _PLAIN_POWER.sub(r"q^{\1}", text) + "$"


def _latex_table(report: SuiteReport) -> str:
    lines = [r"\begin{tabular}{llllll}", r"\hline",
             r"kind & $n$ & $\lambda$ & $\mu$ & $X$ & $K$ \\", r"\hline"]
    for cell in report.cells:
        lam = "(" + ",".join(map(str, cell.lam)) + ")" if cell.lam else r"$\emptyset$"
        mu = "(" + ",".join(map(str, cell.mu)) + ")" if cell.mu else r"$\emptyset$"
        mark = "" if cell.passed else r" \textbf{FAIL}"
        lines.append(f"{cell.kind} & {cell.rank} & {lam} & {mu} & {_latex_text(cell.x)} & {_latex_text(cell.k)}{mark} \\\\")
    lines += [r"\hline", r"\end{tabular}"]
    lines.append(f"% {report.suite}: {'pass' if report.passed else 'FAIL'} "
                 f"({len(report.cells) - len(report.failures())}/{len(report.cells)} cells)")
    return "\n".join(lines)


@cli.command("verify")
@click.argument("suite", required=False)
@click.option("--list", "list_suites", is_flag=True, help="List suite names and exit.")
@click.option("--max-mu", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--rank", type=int, default=None)
@click.option("--ranks", default=None, help="Comma-separated ranks for the stability suite.")
@click.option("--diamond", "--kind", "diamond", type=KINDS, default=None)
@click.option("--type", "family", type=FAMILIES, default=None)
@click.option("--nvars", type=int, default=None)
@click.option("--cap", "degree_cap", type=int, default=None)
@click.option("--kmax", type=int, default=None)
@click.option("--mu", default=None)
@click.option("--workers", type=int, default=None)
@click.option("--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--format", "output_format", type=FORMATS, default="table")
@click.pass_obj
def cmd_verify(settings, suite: Optional[str], list_suites: bool, max_mu, m, rank, ranks, diamond, family,
               nvars, degree_cap, kmax, mu, workers, cache_dir, out, output_format) -> None:
    """Run a verification suite over its grid; exit 1 if any cell fails."""
    from services.grid import GridRunner
    from services.report_cache import ReportCache
    from services.suites import SUITES
    from services.verification_service import VerificationService

    if list_suites:
        for name, s in SUITES.items():
            click.echo(f"{name:12} {s.description}")
        return
    if not suite:
        raise click.UsageError("Missing suite name; see verify --list")
    if suite not in SUITES:
        raise click.BadParameter(f"unknown suite {suite!r}; see verify --list", param_hint="SUITE")
    config = _config(
        command="verify", suite=suite, max_mu=max_mu, m=m, rank=rank, ranks=_int_list(ranks),
        diamond=Diamond.parse(diamond) if diamond else None, family=family.upper() if family else None,
        nvars=nvars, degree_cap=degree_cap if degree_cap is not None else settings.degree_cap, kmax=kmax,
        mu=mu, workers=workers or settings.workers, cache_dir=settings.cache_dir or cache_dir,
        out=out, output_format=output_format,
    )
    service = VerificationService(GridRunner(config.workers), ReportCache(config.cache_dir))
    try:
        report = service.run(config)
    except InvalidInputError as exc:
        raise click.UsageError(str(exc)) from exc
    if config.out is not None:
        config.out.parent.mkdir(parents=True, exist_ok=True)
        config.out.write_text(report.to_json() + "\n", encoding="utf-8")
    if config.output_format == "json":
        click.echo(report.to_json())
    elif config.output_format == "latex":
        click.echo(_latex_table(report))
    else:
        click.echo(_table(report))
    if not report.passed:
        sys.exit(1)


@cli.command("graph")
@click.option("--type", "family", type=click.Choice(["A", "C", "D"], case_sensitive=False), required=True)
@click.option("--rank", type=int, required=True)
@click.option("--mu", required=True, help="Shape of the tensor product, e.g. 1,1.")
@click.option("--colors", default=None, help="Comma-separated colors; default all.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def cmd_graph(family: str, rank: int, mu: str, colors: Optional[str], out: Optional[Path]) -> None:
    """Write the crystal graph of B_μ in DOT format."""
    from crystal.dot import crystal_dot

    config = _config(command="graph", family=family.upper(), rank=rank, mu=mu, colors=_int_list(colors), out=out)
    if config.mu.length == 0:
        raise click.BadParameter("the shape must be non-empty", param_hint="--mu")
    try:
        ClassicalType(family=config.family, n=config.rank)
        dot = crystal_dot(config.family, config.rank, config.mu.parts, config.colors or None)
    except (ValidationError, InvalidInputError) as exc:
        raise click.UsageError(str(exc)) from exc
    if config.out is None:
        click.echo(dot, nl=False)
    else:
        config.out.write_text(dot, encoding="utf-8")


def main() -> None:
    try:
        cli(standalone_mode=True)
    except OneDimError as exc:
        logger.error("%s", exc)
        sys.exit(1)


if __name__ == "__main__":
    main()
