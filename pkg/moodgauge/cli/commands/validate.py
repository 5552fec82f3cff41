from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import click

from moodgauge.cli.const import EXIT_DATA_ERROR, EXIT_OK
from moodgauge.cli.util import noop_report, rprint
from moodgauge.errors import CountryEmpty
from moodgauge.ingestion import DiagnosticsReport, build_panel

if TYPE_CHECKING:
    from moodgauge.cli.commands.cli_context import CliContextObj

log = logging.getLogger(__name__)


@click.command(
    short_help="Check that every input pair ingests cleanly",
    context_settings={
        "help_option_names": ["-h", "--help"],
    },
)
@click.option(
    "--diagnostics",
    "diagnostics_file",
    default=None,
    type=click.Path(dir_okay=False, writable=True),
    help="Write the diagnostics CSV to this file instead of stdout",
)
@click.pass_obj
def validate(cli_ctx: CliContextObj, diagnostics_file: str | None = None) -> None:
    """
    Read and align every (country, index) pair of the configuration.

    Exits 0 when all pairs ingest cleanly. Otherwise the diagnostics CSV
    (country,index_id,error_code,detail) is written and the exit code is 1.
    """
    ctx = click.get_current_context()
    runtime = cli_ctx.runtime_ctx

    report = DiagnosticsReport()
    try:
        panels = build_panel(
            runtime.panel,
            runtime.file_resolver,
            diagnostics=report,
            max_workers=runtime.threads,
        )
    except CountryEmpty as err:
        log.warning(str(err))
        panels = err.panels

    n_pairs = sum(panel.K for panel in panels)
    if not report:
        rprint(f"[bold green]{n_pairs} pairs over {len(panels)} countries are valid")
        ctx.exit(EXIT_OK)

    rprint(
        f"[bold red]{len(report)} pairs failed to ingest, {n_pairs} pairs are valid"
    )
    content = report.to_csv_bytes()
    if diagnostics_file is None:
        click.echo(content, nl=False)
    elif runtime.global_cli_options.noop:
        noop_report(f"would have written diagnostics to {diagnostics_file}")
    else:
        with open(diagnostics_file, "wb") as fd:
            fd.write(content)
        log.info("diagnostics written to %s", diagnostics_file)

    ctx.exit(EXIT_DATA_ERROR)
