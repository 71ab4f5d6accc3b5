"""
CLI Interface for hingeset

Every command reads one JSON payload (a file path, inline JSON, or
stdin), runs the matching operation and prints canonical JSON (or SVG
for ``render``) to stdout or to ``--output``.
"""

import sys
from pathlib import Path
from typing import Optional

import typer

from .commands import CommandOptions, run_text
from .config import config
from .logging_config import setup_logging

app = typer.Typer(
    name="hingeset",
    help="Positivity sets of planar hinge functions: decide, construct, verify",
    no_args_is_help=True,
)

INPUT = typer.Option(None, "--input", "-i", help="Payload: a JSON file path or inline JSON (default: stdin)")
OUTPUT = typer.Option(None, "--output", "-o", help="Write the result here instead of stdout")


def _read_input(source: Optional[str]) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    if source.lstrip().startswith(("{", "[")):
        return source
    path = Path(source)
    if not path.exists():
        typer.echo(f"input not found: {source}", err=True)
        raise typer.Exit(code=1)
    return path.read_text()


def _execute(verb: str, source: Optional[str], output: Optional[str], options: Optional[CommandOptions] = None) -> None:
    result = run_text(verb, _read_input(source), options)
    text = result.text()
    if output:
        Path(output).write_text(text)
    else:
        typer.echo(text, nl=False)
    raise typer.Exit(code=result.exit_code)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(
        None,
        "--log-level", "-l",
        help="DEBUG, INFO, WARNING or ERROR (default from HINGESET_LOG_LEVEL)",
    ),
):
    """Exact decisions and constructions for one-layer ReLU positivity sets."""
    setup_logging(log_level or config.LOGGING.LEVEL, config.LOGGING.FILE)


@app.command("check-cone")
def check_cone(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Decide whether a cone is the positivity set of a hinge function."""
    _execute("check-cone", input, output)


@app.command("synth-cone")
def synth_cone(
    input: Optional[str] = INPUT,
    output: Optional[str] = OUTPUT,
    trace: bool = typer.Option(False, "--trace", help="Include the synthesis trace (frame, cases, profile)"),
):
    """Construct a verified hinge function whose positivity set is the cone."""
    _execute("synth-cone", input, output, CommandOptions(trace=trace))


@app.command("check-set")
def check_set(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Run the local cone condition at every boundary vertex of a set."""
    _execute("check-set", input, output)


@app.command("positivity-set")
def positivity_set(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Exact positivity set of a hinge function with its labeled arrangement."""
    _execute("positivity-set", input, output)


@app.command("components")
def components(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Connected components of a set or of a hinge function's positivity set."""
    _execute("components", input, output)


@app.command("synth-triangle")
def synth_triangle(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Hinge function positive exactly on an open triangle."""
    _execute("synth-triangle", input, output)


@app.command("synth-polygon")
def synth_polygon(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Hinge function positive exactly on an open convex polygon."""
    _execute("synth-polygon", input, output)


@app.command("boundary-complement")
def boundary_complement(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Hinge function positive exactly off the boundary of a convex polygon."""
    _execute("boundary-complement", input, output)


@app.command("eval")
def evaluate(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Exact value of a hinge function at a point."""
    _execute("eval", input, output)


@app.command("verify")
def verify(input: Optional[str] = INPUT, output: Optional[str] = OUTPUT):
    """Compare a hinge function's positivity set with a cone or a set."""
    _execute("verify", input, output)


@app.command("render")
def render(
    input: Optional[str] = INPUT,
    output: Optional[str] = OUTPUT,
    viewbox: Optional[str] = typer.Option(None, "--viewbox", help='"xmin,ymin,xmax,ymax" in rationals'),
    arrangement: bool = typer.Option(False, "--arrangement", help="Draw the labeled break-line arrangement instead"),
):
    """SVG of a hinge function (or set): filled region, valleys, mountains."""
    _execute("render", input, output, CommandOptions(viewbox=viewbox, arrangement=arrangement))


if __name__ == "__main__":
    app()
