"""Command-line front end.

A thin client over the service layer (the same code path the HTTP API
serves), so documents printed here are identical to service responses.

Exit codes: 0 success, 1 usage or input error, 2 verification deviation.
"""

from __future__ import annotations

import sys

import click
from pydantic import ValidationError

from . import __version__
from .errors import SpecjoinError
from .schemas import SpectrumDocument, SpectrumRequest, VerifyReport, VerifyRequest
from .service import build_document, run_verify
from .spectra import COMPARE_TOL

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DEVIATION = 2


def _fail(message: str) -> int:
    click.echo(f"error: {message}", err=True)
    return EXIT_USAGE


def _format_spectrum_table(doc: SpectrumDocument) -> str:
    lines = [f"# {doc.descriptor}  order={doc.order}  method={doc.method}"]
    lines.append(f"{'value':>18}  {'multiplicity':>12}  source")
    for entry in doc.eigenvalues:
        lines.append(f"{entry.value:>18.12g}  {entry.multiplicity:>12d}  {entry.source}")
    if doc.deviations is not None:
        d = doc.deviations
        verdict = "within" if d.passed else "EXCEEDS"
        lines.append(
            f"# structural vs oracle: max deviation {d.max_deviation:.12g} "
            f"{verdict} tol {d.tol:.12g}"
        )
    if doc.timestamp:
        lines.append(f"# generated {doc.timestamp}")
    return "\n".join(lines)


def _format_spectrum_csv(doc: SpectrumDocument) -> str:
    lines = ["value,multiplicity,source"]
    lines.extend(
        f"{e.value:.12g},{e.multiplicity},{e.source}" for e in doc.eigenvalues
    )
    return "\n".join(lines)


def _format_verify_table(report: VerifyReport) -> str:
    lines = [
        f"# suite={report.suite}  max-n={report.max_n}  tol={report.tol:.12g}"
    ]
    for case in report.cases:
        dev = f"  dev={case.deviation:.3e}" if case.deviation is not None else ""
        detail = f"  {case.detail}" if case.detail else ""
        lines.append(f"{case.status:<4} {case.name}{dev}{detail}")
    counts = "  ".join(f"{k}={v}" for k, v in sorted(report.counts.items()))
    lines.append(f"# {counts}")
    lines.append(f"# overall: {'PASS' if report.passed else 'FAIL'}")
    if report.timestamp:
        lines.append(f"# generated {report.timestamp}")
    return "\n".join(lines)


@click.group()
@click.version_option(version=__version__, prog_name="specjoin")
def main():
    """Spectra of joined unions of regular graphs and power graphs of Z_n."""


@main.command()
@click.option("--power-n", type=int, default=None, help="Order n of the cyclic group Z_n.")
@click.option(
    "--family",
    default=None,
    help=(
        "Family descriptor name:param1,param2. Families: complete_bipartite:a,b, "
        "multipartite:n1,n2,..., equal_multipartite:p,t, complete_split:omega,n, "
        "cone:a,b, wheel:n, friendship:n, firefly:p,n, multistep_wheel:a,b."
    ),
)
@click.option(
    "--edges",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Edge-list file: first line N, then 'u v' per line (0-based).",
)
@click.option(
    "--method",
    type=click.Choice(["structural", "oracle", "both"]),
    default="both",
    show_default=True,
    help="Structural route, dense-oracle route, or both with a deviation check.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json", "csv"]),
    default="table",
    show_default=True,
)
@click.option("--tol", type=float, default=COMPARE_TOL, show_default=True,
              help="Deviation tolerance for --method both.")
@click.option("--timestamp", is_flag=True, default=False,
              help="Include a generation timestamp (off for byte-stable output).")
def spectrum(power_n, family, edges, method, fmt, tol, timestamp):
    """Compute the normalized Laplacian spectrum of one graph."""
    try:
        edges_text = None
        descriptor = None
        if edges is not None:
            with open(edges) as fh:
                edges_text = fh.read()
            descriptor = f"edges:{edges}"
        request = SpectrumRequest(
            power_n=power_n,
            family=family,
            edges=edges_text,
            descriptor=descriptor,
            method=method,
            tol=tol,
        )
        doc = build_document(request, timestamp=timestamp)
    except (ValidationError, SpecjoinError, ValueError, OSError) as exc:
        sys.exit(_fail(str(exc)))
    if fmt == "json":
        click.echo(doc.model_dump_json(by_alias=True, indent=2))
    elif fmt == "csv":
        click.echo(_format_spectrum_csv(doc))
        if doc.deviations is not None and not doc.deviations.passed:
            click.echo(
                f"deviation {doc.deviations.max_deviation:.12g} exceeds tol {doc.deviations.tol:.12g}",
                err=True,
            )
    else:
        click.echo(_format_spectrum_table(doc))
    if doc.deviations is not None and not doc.deviations.passed:
        sys.exit(EXIT_DEVIATION)


@main.command()
@click.option(
    "--suite",
    type=click.Choice(["joined-union", "power", "families", "all"]),
    default="all",
    show_default=True,
)
@click.option("--max-n", type=int, default=300, show_default=True,
              help="Upper bound for the power-graph sweeps.")
@click.option("--tol", type=float, default=COMPARE_TOL, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker threads for independent cases.")
@click.option("--cases", type=int, default=200, show_default=True,
              help="Randomized joined-union instances.")
@click.option("--seed", type=int, default=1883, show_default=True,
              help="Seed for the randomized instances.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@click.option("--timestamp", is_flag=True, default=False)
def verify(suite, max_n, tol, jobs, cases, seed, fmt, timestamp):
    """Run verification suites: structural-vs-oracle equivalence plus
    recomputation of published per-family constants (reported as WARN when
    they disagree with the oracle; only oracle-equivalence failures fail)."""
    try:
        request = VerifyRequest(
            suite=suite, max_n=max_n, tol=tol, jobs=jobs, cases=cases, seed=seed
        )
        report = run_verify(request, timestamp=timestamp)
    except (ValidationError, SpecjoinError, ValueError) as exc:
        sys.exit(_fail(str(exc)))
    if fmt == "json":
        click.echo(report.model_dump_json(by_alias=True, indent=2))
    else:
        click.echo(_format_verify_table(report))
    if not report.passed:
        sys.exit(EXIT_DEVIATION)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Serve the HTTP API (endpoints: GET /health, POST /spectrum, POST /verify)."""
    import uvicorn

    uvicorn.run("specjoin.api:app", host=host, port=port)


if __name__ == "__main__":
    main()
