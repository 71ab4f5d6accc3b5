"""
CLI Interface for Evaluation Framework

Provides command-line interface for running the property suites.
"""

import typer
from typing import List, Optional

from .config import SUITES, EvalConfig

app = typer.Typer(
    name="evals",
    help="hingeset property suites: randomized exact checks of the realizability theory"
)


@app.command()
def run(
    config: Optional[str] = typer.Option(
        None,
        "--config", "-c",
        help="Path to configuration YAML file"
    ),
    suite: Optional[List[str]] = typer.Option(
        None,
        "--suite", "-S",
        help=f"Suite(s) to run: {', '.join(SUITES)}"
    ),
    samples: Optional[int] = typer.Option(
        None,
        "--samples", "-n",
        help="Override the number of random samples per suite"
    ),
    seed: Optional[int] = typer.Option(
        None,
        "--seed", "-s",
        help="Random seed for reproducibility"
    ),
    workers: Optional[int] = typer.Option(
        None,
        "--workers", "-w",
        help="Number of parallel workers"
    ),
    output_dir: Optional[str] = typer.Option(
        None,
        "--output", "-o",
        help="Output directory for results"
    ),
):
    """
    Run the property suites

    Examples:

        # Run with config file
        python -m evals.cli run --config evals/configs/full.yaml

        # Quick pass over two suites
        python -m evals.cli run --suite cone_realizability --suite decomposition --samples 10
    """
    from .runner import EvaluationRunner

    if config:
        eval_config = EvalConfig.from_yaml(config)
        print(f"✓ Loaded configuration from: {config}")
    else:
        eval_config = EvalConfig()

    try:
        if suite:
            eval_config = eval_config.select(list(suite))
    except ValueError as e:
        typer.echo(str(e), err=True)
        raise typer.Exit(code=1)

    if samples is not None:
        for suite_config in eval_config.suites.values():
            suite_config.samples = samples
    if seed is not None:
        eval_config.random_seed = seed
    if workers is not None:
        eval_config.parallel_workers = workers
    if output_dir is not None:
        eval_config.output_dir = output_dir

    runner = EvaluationRunner(eval_config)
    results = runner.run()

    print("\n" + "="*80)
    print("EVALUATION COMPLETE")
    print("="*80)

    failed = 0
    for name, summary in results.items():
        failed += summary.failed
        print(f"  {name:24s}: {summary.pass_rate:.2%} ({summary.passed}/{summary.total})")

    print(f"\nResults saved to: {runner.logger.run_dir}")
    if failed:
        raise typer.Exit(code=1)


@app.command()
def analyze(
    run_id: str = typer.Argument(..., help="Run ID to analyze"),
    summary: bool = typer.Option(False, "--summary", help="Show summary report"),
    suite: Optional[str] = typer.Option(None, "--suite", help="Filter by suite"),
    failures: bool = typer.Option(False, "--failures", help="Show only failures"),
    output_dir: str = typer.Option("evals/results", "--output", "-o", help="Results directory"),
):
    """
    Analyze evaluation results

    Examples:

        # Summary report
        python -m evals.cli analyze run_20260112_100431 --summary

        # Failures of one suite
        python -m evals.cli analyze run_20260112_100431 --suite local_condition --failures
    """
    from .logging.deep_logger import DeepLogger

    # Strip run_ prefix if user passed it (DeepLogger adds it)
    if run_id.startswith("run_"):
        run_id = run_id[4:]

    logger = DeepLogger(output_dir=output_dir, run_id=run_id, enabled=False)

    if summary:
        logger.print_summary()
        return

    logs = logger.load_logs()

    if not logs:
        print(f"No logs found for run: {run_id}")
        return

    if suite:
        logs = [log for log in logs if log['suite'] == suite]
        print(f"\nFiltered to {len(logs)} cases of suite '{suite}'")

    if failures:
        logs = [log for log in logs if not log['passed']]
        print(f"\nShowing {len(logs)} failed cases")

    for log in logs:
        print("\n" + "="*80)
        print(f"Case: {log['case_id']} ({'passed' if log['passed'] else 'FAILED'}, {log['duration_ms']:.1f} ms)")
        if log.get('subject') is not None:
            print(f"Subject: {log['subject']}")
        print(f"Details: {log['details']}")
        if log.get('error'):
            print(f"Error: {log['error']}")


if __name__ == "__main__":
    app()
