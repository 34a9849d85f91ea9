import json
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd
import typer
import uvicorn
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src import __version__
from src.combinatorics.characters import CharacterTable
from src.combinatorics.hurwitz import frobenius_terms
from src.combinatorics.partitions import (
    Partition,
    class_size,
    conjugate,
    dimension,
    enumerate_partitions,
    hook_product,
    z_of,
)
from src.combinatorics.permutations import count_brickwork_solutions, count_solutions
from src.combinatorics.schur import PowerSumSpec, schur_from_power_sums
from src.config import configure_logging, get_settings
from src.exceptions import BrickworkError, CalibrationError, InvalidInputError
from src.graph.workflow import VerificationOrchestrator
from src.integrals.monte_carlo import (
    mc_moment,
    mc_normal_trace_moment,
    mc_schur_average,
    mc_schur_split,
    mc_weingarten_monomial,
    normal_second_moment,
)
from src.integrals.weingarten import balance_numbers, monomial_integral, weingarten_value
from src.integrals.wick import WICK_FACTOR_CAP, gaussian_schur_average, word_moment
from src.models.db import CharacterStore
from src.models.schemas import (
    EnsembleConfig,
    EnsembleKind,
    MCEstimate,
    ModelKind,
    ModelSpec,
    MonomialSpec,
    OutputDocument,
    OutputFormat,
    Representation,
    RunConfig,
    TraceWord,
    VerificationOptions,
    format_rational,
)
from src.series.calibration import DEFAULT_N_VALUES, calibrate_normalization
from src.series.engine import build_series, check_normal_proportionality, normal_model_coefficient
from src.suites import SUITES
from src.suites.prop1_suite import sample_pair
from src.suites.report import ReportBuilder

app = typer.Typer(help="Brickwork Hurwitz numbers, Weingarten integrals and product-matrix series")
mc_app = typer.Typer(
    help="Monte Carlo estimators (reproducible from --seed). The normal ensemble draws its eigenvalues"
    " from Ginibre with entry variance 2/N, so E[tr M M^dag] = N + 1, not N."
)
app.add_typer(mc_app, name="mc")
console = Console()
err_console = Console(stderr=True)

FORMAT_OPTION = typer.Option(OutputFormat.JSON, "--format", "-f", help="json, csv or pretty")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Write the document here instead of stdout")


@app.callback()
def main(log_level: Optional[str] = typer.Option(None, "--log-level", help="Overrides BRICKWORK_LOG_LEVEL")):
    configure_logging(log_level)


def _partitions(text: str) -> List[Partition]:
    """'2,1,1;4;2,2' -> three partitions."""
    return [Partition.parse(part) for part in text.split(";")]


def _indices(text: str) -> List[int]:
    return [int(t) for t in text.split(",") if t.strip()] if text.strip() not in ("", "0") else []


def _matrix(obj: Any, N: Optional[int] = None) -> np.ndarray:
    """A matrix given as [re, im] pairs, either as rows or flat row-major."""
    pairs = np.asarray(obj, dtype=float)
    if pairs.shape[-1] != 2:
        raise InvalidInputError("matrix entries must be [re, im] pairs")
    values = pairs[..., 0] + 1j * pairs[..., 1]
    if values.ndim == 1:
        size = N or int(round(np.sqrt(values.size)))
        if size * size != values.size:
            raise InvalidInputError(f"{values.size} entries do not form a square matrix")
        values = values.reshape(size, size)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {values.shape}")
    return values


def _read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInputError(f"cannot read {path}: {e}") from e


def _estimate_json(estimate: MCEstimate, exact: Optional[complex] = None) -> Dict[str, Any]:
    out = estimate.model_dump()
    if exact is not None:
        exact = complex(exact)
        out["exact"] = [exact.real, exact.imag]
        out["within_4se"] = estimate.agrees_with(exact)
    return out


def _write(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
        err_console.print(f"[green]Written to {output}[/green]")
    else:
        typer.echo(text)


def _emit(config: RunConfig, result: Dict[str, Any], rows: Optional[List[Dict[str, Any]]] = None) -> None:
    """Writes the self-describing output document in the configured format."""
    document = OutputDocument(version=__version__, config=config, result=result)
    if config.format == OutputFormat.JSON:
        _write(document.model_dump_json(indent=2), config.output)
    elif config.format == OutputFormat.CSV:
        frame = pd.DataFrame(rows if rows is not None else [{k: v for k, v in result.items() if not isinstance(v, (list, dict))}])
        _write(frame.to_csv(index=False), config.output)
    else:
        if rows:
            table = Table(title=config.subcommand)
            for column in rows[0]:
                table.add_column(str(column), style="cyan" if column == "value" else None)
            for row in rows:
                table.add_row(*("" if v is None else str(v) for v in row.values()))
            console.print(table)
        else:
            body = "\n".join(f"[bold]{k}:[/bold] {v}" for k, v in result.items())
            console.print(Panel(body, title=f"{config.subcommand} (v{__version__})", border_style="blue"))


def _run(action: Callable[[], None]) -> None:
    """Maps engine errors onto exit statuses: 2 validation, 3 cap or window, 4 calibration."""
    try:
        action()
    except CalibrationError as e:
        err_console.print(f"[bold red]Calibration failed:[/bold red] {e}")
        if e.table:
            err_console.print_json(json.dumps(e.table[:20], default=str))
        raise typer.Exit(code=e.exit_code)
    except BrickworkError as e:
        err_console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=e.exit_code)
    except ValidationError as e:
        err_console.print(f"[bold red]Invalid input:[/bold red] {e}")
        raise typer.Exit(code=2)


@app.command()
def partitions(
    d: int = typer.Option(..., "--d", help="Degree"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    List the partitions of d with their hook, dimension, z and class-size data.
    """
    def action():
        config = RunConfig(subcommand="partitions", arguments={"d": d}, output=output, format=fmt)
        rows = [
            {
                "partition": lam.encode(),
                "conjugate": conjugate(lam).encode(),
                "hook_product": hook_product(lam),
                "dimension": dimension(lam),
                "z": z_of(lam),
                "class_size": class_size(lam),
            }
            for lam in enumerate_partitions(d)
        ]
        _emit(config, {"degree": d, "count": len(rows), "partitions": rows}, rows)

    _run(action)


@app.command()
def characters(
    degree: int = typer.Option(..., "--degree", "-d"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Dump the full character table of S_d.
    """
    def action():
        config = RunConfig(subcommand="characters", arguments={"degree": degree}, output=output, format=fmt)
        if not 0 <= degree <= 10:
            raise InvalidInputError(f"degree must lie in 0..10, got {degree}")
        table = CharacterTable.build(degree, store=CharacterStore.from_settings(get_settings()))
        payload = table.to_json()
        rows = [dict(zip(["lambda"] + payload["columns"], [r] + v)) for r, v in zip(payload["rows"], payload["values"])]
        _emit(config, payload, rows)

    _run(action)


@app.command()
def schur(
    lam: str = typer.Option(..., "--lambda", help="Partition, e.g. 2,1"),
    p: str = typer.Option(..., "--p", help='Power sums, e.g. "1:1,2:1/2"'),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Evaluate s_lambda at a point given by its power sums (exact when every value is rational).
    """
    def action():
        config = RunConfig(subcommand="schur", arguments={"lambda": lam, "p": p}, output=output, format=fmt)
        spec = PowerSumSpec.parse(p)
        value = schur_from_power_sums(Partition.parse(lam), spec)
        shown = format_rational(value) if spec.exact else [value.real, value.imag]
        _emit(config, {"value": shown, "power_sums": spec.to_json()})

    _run(action)


@app.command()
def hurwitz(
    profiles: str = typer.Option(..., "--profiles", help='Profiles separated by ";", e.g. "2,1,1;4;2,2"'),
    euler: int = typer.Option(2, "--euler", help="Euler characteristic of the base surface"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Hurwitz number by the Frobenius formula.
    """
    def action():
        config = RunConfig(subcommand="hurwitz", arguments={"profiles": profiles, "euler": euler}, output=output, format=fmt)
        parsed = _partitions(profiles)
        terms = frobenius_terms(parsed, euler)
        value = sum(terms.values(), Fraction(0))
        _emit(
            config,
            {"value": format_rational(value), "degree": parsed[0].weight, "terms": sum(1 for t in terms.values() if t)},
        )

    _run(action)


@app.command()
def oracle(
    kappa: Optional[str] = typer.Option(None, "--kappa"),
    mu: Optional[str] = typer.Option(None, "--mu"),
    bricks: int = typer.Option(1, "--bricks", help="Number of (2^k) profiles"),
    profiles: Optional[str] = typer.Option(None, "--profiles", help="General profile list instead of kappa/mu"),
    cap: Optional[int] = typer.Option(None, "--cap", help="Enumeration cap on the degree"),
    workers: int = typer.Option(1, "--workers", help="Processes for the brute-force count; the result does not depend on it"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Brute-force count of permutation factorizations of the identity.
    """
    def action():
        arguments = {"kappa": kappa, "mu": mu, "bricks": bricks, "profiles": profiles}
        config = RunConfig(subcommand="oracle", arguments=arguments, cap=cap, workers=workers, output=output, format=fmt)
        if profiles:
            parsed = _partitions(profiles)
            d = parsed[0].weight
            raw = count_solutions(parsed, d, cap, workers)
        elif kappa is not None and mu is not None:
            k_part, m_part = Partition.parse(kappa), Partition.parse(mu)
            d = k_part.weight
            raw = count_brickwork_solutions(k_part, m_part, bricks, cap, workers)
        else:
            raise InvalidInputError("give --profiles, or --kappa and --mu")
        value = Fraction(raw, factorial(d))
        _emit(config, {"value": format_rational(value), "count_over_factorial": format_rational(value), "raw_count": raw})

    _run(action)


@app.command()
def wg(
    mu: str = typer.Option(..., "--mu"),
    N: int = typer.Option(..., "--N"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Unitary Weingarten function Wg_N(mu).
    """
    def action():
        config = RunConfig(subcommand="wg", arguments={"mu": mu}, N=N, output=output, format=fmt)
        _emit(config, {"value": format_rational(weingarten_value(Partition.parse(mu), N))})

    _run(action)


@app.command()
def uintegral(
    a: str = typer.Option(..., "--a"),
    b: str = typer.Option(..., "--b"),
    ap: str = typer.Option("", "--ap"),
    bp: str = typer.Option("", "--bp"),
    N: int = typer.Option(..., "--N"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Haar integral of U_{a_1 b_1} ... U_{a_d b_d} (U^dag)_{b'_1 a'_1} ... by Collins' formula.
    """
    def action():
        config = RunConfig(subcommand="uintegral", arguments={"a": a, "b": b, "ap": ap, "bp": bp}, N=N, output=output, format=fmt)
        m = MonomialSpec(a=_indices(a), b=_indices(b), a_prime=_indices(ap), b_prime=_indices(bp), N=N)
        _emit(config, {"value": format_rational(monomial_integral(m)), "balance": list(balance_numbers(m))})

    _run(action)


@app.command()
def series(
    model_kind: ModelKind = typer.Option(ModelKind.HERMITIAN, "--model"),
    n: int = typer.Option(1, "--n", help="Number of random factors"),
    N: int = typer.Option(..., "--N"),
    max_degree: int = typer.Option(4, "--max-degree"),
    repr_: str = typer.Option("moment,schur,hurwitz", "--repr", help="Comma list of moment, schur, hurwitz, source; or both / all"),
    spectrum_file: Optional[str] = typer.Option(None, "--spectrum-file", help="JSON list of [re, im] eigenvalues of C"),
    ignore_window: bool = typer.Option(False, "--ignore-window", help="Compute past 2k <= N and label the terms"),
    calibrate: Optional[int] = typer.Option(None, "--calibrate", help="Calibrate the exponent rule up to this k first"),
    json_path: Optional[str] = typer.Option(None, "--json", help="Shorthand for --format json --output PATH"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Exact series coefficients of the product-matrix model.
    """
    def action():
        if json_path:
            fmt_, out_ = OutputFormat.JSON, json_path
        else:
            fmt_, out_ = fmt, output
        names = {"both": ["schur", "hurwitz"], "all": [r.value for r in Representation]}
        tokens = [r for token in repr_.split(",") for r in names.get(token.strip(), [token.strip()])]
        unknown = [t for t in tokens if t not in {r.value for r in Representation}]
        if unknown:
            raise InvalidInputError(f"unknown representation(s) {unknown}")
        reprs = [Representation(t) for t in tokens]
        spectrum = [tuple(z) for z in _read_json(spectrum_file)] if spectrum_file else None
        config = RunConfig(
            subcommand="series",
            arguments={"model": model_kind.value, "max_degree": max_degree, "repr": repr_, "ignore_window": ignore_window,
                       "spectrum_file": spectrum_file, "calibrate": calibrate},
            N=N, n=n, output=out_, format=fmt_,
        )
        model = ModelSpec(N=N, n=n, kind=model_kind, source_spectrum=spectrum)
        calibration = None
        if calibrate:
            calibration = calibrate_normalization(ModelSpec(N=N, n=n), calibrate, DEFAULT_N_VALUES)
            model = model.model_copy(update={"normalization": calibration.rule()})
        document = build_series(model, max_degree, reprs, ignore_window)
        document.calibration = calibration
        payload = document.model_dump(mode="json")
        rows = [
            {"degree": c["degree"], "mu": c["mu"], "kappa": c["kappa"], "repr": c["repr"], "value": c["value"]}
            | ({"profiles": ";".join(c["profiles"])} if c["profiles"] else {})
            | ({"outside_window": True} if c["outside_window"] else {})
            for c in payload["coefficients"]
        ]
        _emit(config, payload, rows)

    _run(action)


@app.command(name="calibrate")
def calibrate_command(
    n: int = typer.Option(1, "--n"),
    max_k: int = typer.Option(2, "--max-k"),
    n_values: str = typer.Option("3,4,5", "--N-values"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Measure the power of N relating the Hurwitz sum to the exact moments.
    """
    def action():
        values = _indices(n_values)
        config = RunConfig(subcommand="calibrate", arguments={"max_k": max_k, "N_values": n_values}, n=n, output=output, format=fmt)
        report = calibrate_normalization(ModelSpec(N=max(values or [3]), n=n), max_k, values)
        payload = report.model_dump(mode="json")
        _emit(config, payload, payload["table"])

    _run(action)


@app.command()
def normal(
    n: int = typer.Option(1, "--n"),
    k: int = typer.Option(1, "--k"),
    N: int = typer.Option(4, "--N"),
    kappa: Optional[str] = typer.Option(None, "--kappa"),
    mu: Optional[str] = typer.Option(None, "--mu"),
    ts: Optional[str] = typer.Option(None, "--ts", help='n profiles separated by ";"'),
    strict: bool = typer.Option(False, "--strict", help="Exit 4 when the two forms are not proportional"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Normal-matrix model: one coefficient, or the proportionality report for degree 2k.
    """
    def action():
        arguments = {"k": k, "kappa": kappa, "mu": mu, "ts": ts, "strict": strict}
        config = RunConfig(subcommand="normal", arguments=arguments, N=N, n=n, output=output, format=fmt)
        model = ModelSpec(N=N, n=n, kind=ModelKind.NORMAL)
        if kappa is not None and mu is not None:
            profiles = _partitions(ts) if ts else []
            c = normal_model_coefficient(model, Partition.parse(kappa), Partition.parse(mu), profiles)
            _emit(config, c.model_dump(mode="json"))
            return
        report = check_normal_proportionality(model, k, strict=strict)
        payload = report.model_dump(mode="json")
        _emit(config, payload, payload["mismatches"] or None)

    _run(action)


def _ensemble(N: int, kind: EnsembleKind, seed: int, workers: Optional[int]) -> EnsembleConfig:
    settings = get_settings()
    return EnsembleConfig(N=N, kind=kind, seed=seed, workers=workers or settings.workers, chunk_size=settings.chunk_size)


SAMPLES_OPTION = typer.Option(100_000, "--samples")
SEED_OPTION = typer.Option(0, "--seed")
WORKERS_OPTION = typer.Option(
    None, "--workers", help="Threads over Monte Carlo chunks only; exact lambda sums ignore it. Results do not depend on it"
)


@mc_app.command("moment")
def mc_moment_command(
    n: int = typer.Option(1, "--n"),
    N: int = typer.Option(..., "--N"),
    mu: str = typer.Option(..., "--mu"),
    sources_file: Optional[str] = typer.Option(None, "--sources-file", help="JSON list of n matrices of [re, im] pairs"),
    samples: int = SAMPLES_OPTION,
    seed: int = SEED_OPTION,
    workers: Optional[int] = WORKERS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    E[prod_i tr (H_1 C_1 ... H_n C_n)^{mu_i}] by sampling, with the exact value when the sources are identities.
    """
    def action():
        config = RunConfig(subcommand="mc moment", arguments={"mu": mu, "sources_file": sources_file}, N=N, n=n,
                           seed=seed, samples=samples, workers=workers, output=output, format=fmt)
        partition = Partition.parse(mu)
        sources = [_matrix(c, N) for c in _read_json(sources_file)] if sources_file else None
        estimate = mc_moment(TraceWord(n=n, sources=sources), partition, samples, _ensemble(N, EnsembleKind.GUE, seed, workers))
        exact = None
        if sources is None and partition.weight <= WICK_FACTOR_CAP:
            exact = word_moment(partition, N, n)
        result = _estimate_json(estimate, exact)
        if exact is not None:
            result["exact_rational"] = format_rational(exact)
        _emit(config, result)

    _run(action)


@mc_app.command("prop1")
def mc_prop1_command(
    lam: str = typer.Option(..., "--lambda"),
    N: int = typer.Option(..., "--N"),
    matrix_file: Optional[str] = typer.Option(None, "--matrix-file", help='JSON {"A": ..., "B": ...} of [re, im] pairs'),
    samples: int = SAMPLES_OPTION,
    seed: int = SEED_OPTION,
    workers: Optional[int] = WORKERS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Haar average of s_lambda(U A U^dag B) against s_lambda(A) s_lambda(B) / s_lambda(I_N).
    """
    def action():
        config = RunConfig(subcommand="mc prop1", arguments={"lambda": lam, "matrix_file": matrix_file}, N=N,
                           seed=seed, samples=samples, workers=workers, output=output, format=fmt)
        if matrix_file:
            data = _read_json(matrix_file)
            A, B = _matrix(data["A"], N), _matrix(data["B"], N)
        else:
            A, B = sample_pair(seed, N)
        estimate, rhs = mc_schur_split(Partition.parse(lam), A, B, samples, _ensemble(N, EnsembleKind.HAAR_UNITARY, seed, workers))
        _emit(config, _estimate_json(estimate, rhs))

    _run(action)


@mc_app.command("monomial")
def mc_monomial_command(
    a: str = typer.Option(..., "--a"),
    b: str = typer.Option(..., "--b"),
    ap: str = typer.Option("", "--ap"),
    bp: str = typer.Option("", "--bp"),
    N: int = typer.Option(..., "--N"),
    samples: int = SAMPLES_OPTION,
    seed: int = SEED_OPTION,
    workers: Optional[int] = WORKERS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Haar average of a U / U^dag monomial, next to Collins' exact value.
    """
    def action():
        config = RunConfig(subcommand="mc monomial", arguments={"a": a, "b": b, "ap": ap, "bp": bp}, N=N,
                           seed=seed, samples=samples, workers=workers, output=output, format=fmt)
        m = MonomialSpec(a=_indices(a), b=_indices(b), a_prime=_indices(ap), b_prime=_indices(bp), N=N)
        estimate = mc_weingarten_monomial(m, samples, _ensemble(N, EnsembleKind.HAAR_UNITARY, seed, workers))
        _emit(config, _estimate_json(estimate, complex(monomial_integral(m))))

    _run(action)


@mc_app.command("schur")
def mc_schur_command(
    lam: str = typer.Option(..., "--lambda"),
    N: int = typer.Option(..., "--N"),
    samples: int = SAMPLES_OPTION,
    seed: int = SEED_OPTION,
    workers: Optional[int] = WORKERS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    E[s_lambda(H)] over GUE against the Wick oracle.
    """
    def action():
        config = RunConfig(subcommand="mc schur", arguments={"lambda": lam}, N=N, seed=seed, samples=samples,
                           workers=workers, output=output, format=fmt)
        partition = Partition.parse(lam)
        estimate = mc_schur_average(partition, samples, _ensemble(N, EnsembleKind.GUE, seed, workers))
        _emit(config, _estimate_json(estimate, complex(gaussian_schur_average(partition, N))))

    _run(action)


@mc_app.command("normal")
def mc_normal_command(
    N: int = typer.Option(..., "--N"),
    samples: int = SAMPLES_OPTION,
    seed: int = SEED_OPTION,
    workers: Optional[int] = WORKERS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    E[tr M M^dag] for the normal-matrix ensemble against quadrature.

    The eigenvalue law is Ginibre with entry variance 2/N, so the exact value is N + 1.
    """
    def action():
        config = RunConfig(subcommand="mc normal", N=N, seed=seed, samples=samples, workers=workers, output=output, format=fmt)
        estimate = mc_normal_trace_moment(samples, _ensemble(N, EnsembleKind.NORMAL, seed, workers))
        _emit(config, _estimate_json(estimate, normal_second_moment(N)))

    _run(action)


@app.command()
def verify(
    suites: List[str] = typer.Argument(None, help=f"Suites to run: {', '.join(SUITES)} or all"),
    samples: int = typer.Option(100_000, "--samples"),
    seed: int = typer.Option(1, "--seed"),
    workers: int = typer.Option(
        1, "--workers", help="Monte Carlo threads and oracle processes; exact lambda sums ignore it"
    ),
    cap: Optional[int] = typer.Option(None, "--cap"),
    fmt: OutputFormat = typer.Option(OutputFormat.PRETTY, "--format", "-f"),
    output: Optional[str] = OUTPUT_OPTION,
):
    """
    Run acceptance suites and print a pass/fail table.
    """
    def action():
        options = VerificationOptions(samples=samples, seed=seed, workers=workers, cap=cap)
        config = RunConfig(subcommand="verify", arguments={"suites": suites or ["all"]}, seed=seed, samples=samples,
                           cap=cap, workers=workers, output=output, format=fmt)
        report = VerificationOrchestrator().verify(suites or [], options)

        if fmt == OutputFormat.PRETTY:
            table = Table(title=f"Verification (v{__version__}, seed {seed})")
            table.add_column("Suite", style="cyan")
            table.add_column("Checks", justify="right")
            table.add_column("Failed", justify="right", style="red")
            table.add_column("Runtime (s)", justify="right")
            table.add_column("Result")
            for s in report.suites:
                failed = sum(1 for c in s.checks if not c.passed)
                result = "[green]pass[/green]" if s.passed else f"[red]FAIL[/red] {s.error or ''}"
                table.add_row(s.suite, str(len(s.checks)), str(failed), f"{s.runtime_seconds:.1f}", result)
            console.print(table)
            for line in ReportBuilder.failed_checks(report):
                err_console.print(f"[red]failed:[/red] {line}")
        if output or fmt != OutputFormat.PRETTY:
            rows = [
                {"suite": s.suite, **c.model_dump()} for s in report.suites for c in s.checks
            ]
            _emit(config.model_copy(update={"format": OutputFormat.JSON if fmt == OutputFormat.PRETTY else fmt}),
                  report.model_dump(mode="json"), rows)
        if not report.passed:
            raise typer.Exit(code=1)

    _run(action)


@app.command()
def serve(host: str = "127.0.0.1", port: int = 8000, reload: bool = False):
    """
    Start the API server.
    """
    console.print(f"[green]Starting server at http://{host}:{port}[/green]")
    uvicorn.run("src.api.main:app", host=host, port=port, reload=reload)


if __name__ == "__main__":
    app()
