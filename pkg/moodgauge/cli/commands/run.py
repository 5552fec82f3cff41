from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

import click
from click_option_group import optgroup

from moodgauge.cli.const import EXIT_DATA_ERROR, MANIFEST_FILE
from moodgauge.cli.manifest import RunManifest
from moodgauge.cli.util import noop_report, rprint
from moodgauge.const import SCALE_MAX
from moodgauge.enums import WindowMode
from moodgauge.errors import CountryEmpty, IndicatorError, ReportError
from moodgauge.helpers import parse_country_codes, parse_week_range
from moodgauge.indicators import zeta_grid
from moodgauge.ingestion import DiagnosticsReport, build_panel
from moodgauge.pipeline import compute_all
from moodgauge.report import build_artifacts

if TYPE_CHECKING:
    from typing import Mapping

    from moodgauge.cli.commands.cli_context import CliContextObj
    from moodgauge.helpers import WeekRange

log = logging.getLogger(__name__)


def _week_range_callback(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> WeekRange | None:
    if value is None:
        return None
    try:
        return parse_week_range(value)
    except ValueError as err:
        raise click.BadParameter(str(err), ctx=ctx, param=param) from err


def _countries_callback(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> tuple[str, ...]:
    if value is None:
        return ()
    try:
        return parse_country_codes(value)
    except ValueError as err:
        raise click.BadParameter(str(err), ctx=ctx, param=param) from err


def write_files(out_dir: Path, files: Mapping[str, bytes]) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, content in files.items():
        log.debug("writing %s (%s bytes)", name, len(content))
        (out_dir / name).write_bytes(content)


@click.command(
    short_help="Compute every indicator and write the reports",
    context_settings={
        "help_option_names": ["-h", "--help"],
    },
)
@click.option(
    "-o",
    "--out",
    "out_dir",
    default=None,
    type=click.Path(file_okay=False),
    help="Directory for the report files, overrides 'output_dir' of the config",
)
@optgroup.group("Threshold sweep")
@optgroup.option(
    "--zeta-min",
    "zeta_min",
    default=None,
    type=click.IntRange(0, SCALE_MAX),
    help="Smallest threshold of the sweep",
)
@optgroup.option(
    "--zeta-max",
    "zeta_max",
    default=None,
    type=click.IntRange(0, SCALE_MAX),
    help="Largest threshold of the sweep",
)
@optgroup.group("Selection")
@optgroup.option(
    "--window-mode",
    "window_mode",
    default=None,
    type=click.Choice([mode.value for mode in WindowMode]),
    help="How trading days are grouped into weekly windows",
)
@optgroup.option(
    "--weeks",
    "weeks",
    default=None,
    callback=_week_range_callback,
    help="Keep only weeks in A:B, as week numbers (10:11) or labels (2020-W10:2020-W11)",
)
@optgroup.option(
    "--countries",
    "countries",
    default=None,
    callback=_countries_callback,
    help="Comma separated ISO 3166-1 alpha-3 codes to restrict the run to",
)
@click.option(
    "--threads",
    "threads",
    default=None,
    type=click.IntRange(min=1),
    help="Number of workers, overrides MOODGAUGE_THREADS and the config",
)
@click.pass_obj
def run(
    cli_ctx: CliContextObj,
    out_dir: str | None = None,
    zeta_min: int | None = None,
    zeta_max: int | None = None,
    window_mode: str | None = None,
    weeks: WeekRange | None = None,
    countries: tuple[str, ...] = (),
    threads: int | None = None,
) -> None:
    """
    Ingest the panel, compute the weekly mood index and the threshold indicators
    of every country, rank the weeks and write every report file together with
    a manifest of their digests.
    """
    ctx = click.get_current_context()
    runtime = cli_ctx.runtime_ctx
    noop = runtime.global_cli_options.noop

    low = runtime.zeta_bounds[0] if zeta_min is None else zeta_min
    high = runtime.zeta_bounds[1] if zeta_max is None else zeta_max
    if low > high:
        ctx.fail(f"--zeta-min ({low}) cannot exceed --zeta-max ({high})")

    mode = WindowMode(window_mode) if window_mode else runtime.window_mode
    workers = threads or runtime.threads
    output_dir = Path(out_dir).resolve() if out_dir else runtime.output_dir

    panel_config = runtime.panel
    if countries:
        try:
            panel_config = panel_config.select(countries)
        except ValueError as err:
            ctx.fail(str(err))
    if not panel_config.countries:
        ctx.fail("the configuration lists no countries to run")

    report = DiagnosticsReport()
    try:
        panels = build_panel(
            panel_config,
            runtime.file_resolver,
            diagnostics=report,
            max_workers=workers,
        )
    except CountryEmpty as err:
        click.echo(str(err), err=True)
        if noop:
            noop_report(f"would have written diagnostics.csv to {output_dir}")
        else:
            write_files(output_dir, {"diagnostics.csv": report.to_csv_bytes()})
        ctx.exit(EXIT_DATA_ERROR)

    week_filter = weeks.contains_label if weeks else None
    try:
        results = compute_all(
            panels,
            grid=zeta_grid(low, high),
            mode=mode,
            week_filter=week_filter,
            max_workers=workers,
        )
        files = build_artifacts(results, diagnostics=report)
    except (IndicatorError, ReportError) as err:
        click.echo(f"{type(err).__name__}: {err}", err=True)
        ctx.exit(EXIT_DATA_ERROR)

    manifest = RunManifest(
        config_path=runtime.config_path,
        output_dir=output_dir,
        zeta_min=low,
        zeta_max=high,
        window_mode=mode,
        weeks="" if weeks is None else f"{_bound(weeks.start)}:{_bound(weeks.end)}",
        countries=tuple(str(result.country) for result in results),
    )
    manifest.record(files)

    if noop:
        noop_report(f"would have written {len(files)} report files to {output_dir}")
        return

    write_files(output_dir, files)
    manifest.write(output_dir / MANIFEST_FILE)
    rprint(
        f"[bold green]wrote {len(files)} report files for {len(results)} countries "
        f"to {output_dir}"
    )
    if report:
        rprint(f"[bold yellow]{len(report)} pairs were skipped, see diagnostics.csv")


def _bound(value: tuple[int, int] | int) -> str:
    if isinstance(value, int):
        return str(value)
    year, week = value
    return f"{year}-W{week:02d}"
