"""Command-line interface: ingest, build, query, eval, serve.

Each subcommand is a thin wrapper over the core package; ``query`` can also
act as a pure HTTP client against a running server via ``--addr``. The data
directory defaults to the RETRORANK_DATA_DIR environment variable.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from retrorank import artifacts, evalkit, ranker, sentiment
from retrorank.corpus import BugStore, ingest_directory
from retrorank.errors import MissingArtifactError, RetroRankError
from retrorank.evalkit import ModeEvaluation
from retrorank.ranker import MODES, RankConfig

DATA_DIR_OPTION = click.option(
    "--data-dir",
    envvar="RETRORANK_DATA_DIR",
    default="data",
    show_default=True,
    type=click.Path(path_type=Path),
    help="Directory holding per-project stores and built artifacts.",
)

# Rank depth used when marking goldset positions; deep enough to observe
# positions well past the top-10 cutoff reported to users.
EVAL_DEPTH = 100


@click.group()
def main() -> None:
    """Rank bug-fixing comments from resolved bugs against a query."""


@main.command()
@click.option("--input", "input_dir", required=True, type=click.Path(exists=True, file_okay=False, path_type=Path), help="Directory of Bugzilla XML export files.")
@click.option("--project", required=True, help="Project name the bugs belong to.")
@DATA_DIR_OPTION
def ingest(input_dir: Path, project: str, data_dir: Path) -> None:
    """Parse XML exports into the local bug store."""
    store = BugStore(data_dir)
    try:
        count, issues = ingest_directory(store, input_dir, project)
    except RetroRankError as exc:
        raise click.ClickException(str(exc))
    for issue in issues:
        click.echo(f"warning: record {issue.bug_index}: {issue.message}", err=True)
    click.echo(f"ingested {count} bugs into {data_dir / project}")


@main.command()
@click.option("--project", required=True)
@click.option("--top-n", default=1000, show_default=True, help="Keyword dictionary size.")
@click.option("--lexicon", "lexicon_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None, help="Sentiment lexicon TSV (defaults to the bundled one).")
@DATA_DIR_OPTION
def build(project: str, top_n: int, lexicon_path: Path | None, data_dir: Path) -> None:
    """Build the index, sentiment dictionaries, and keyword dictionary."""
    lexicon = sentiment.load_lexicon(lexicon_path) if lexicon_path else None
    try:
        summary = artifacts.build_project(data_dir, project, lexicon=lexicon, top_n=top_n)
    except RetroRankError as exc:
        raise click.ClickException(str(exc))
    click.echo(
        f"built {project}: {summary.resolved_comments} resolved comments, "
        f"{summary.vocabulary_size} terms, "
        f"{summary.bonus_terms} bonus / {summary.penalty_terms} penalty words, "
        f"{summary.tr_terms} keyword scores "
        f"(converged={summary.tr_converged} after {summary.tr_iterations} sweeps)"
    )


def _format_results(results) -> str:
    rows = [["rank", "bug", "comment", "final", "vsm", "sa", "tr", "snippet"]]
    for r in results:
        rows.append(
            [
                str(r.rank),
                f"{r.ref.project}:{r.ref.bug_id}",
                f"C{r.ref.comment_id}",
                f"{r.final_score:.4f}",
                f"{r.vsm_score:.4f}",
                f"{r.sa_boost:.4f}",
                f"{r.tr_boost:.4f}",
                r.snippet[:60].replace("\n", " "),
            ]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows
    )


@main.command()
@click.argument("query_text", nargs=-1, required=True)
@click.option("--project", required=True)
@click.option("--mode", type=click.Choice(MODES), default="vsm_sa_tr", show_default=True)
@click.option("--top-k", default=10, show_default=True)
@click.option("--addr", default=None, help="Query a running server (http://host:port) instead of local artifacts.")
@DATA_DIR_OPTION
def query(query_text: tuple[str, ...], project: str, mode: str, top_k: int, addr: str | None, data_dir: Path) -> None:
    """Rank comments against a free-text query."""
    text = " ".join(query_text)
    if addr is not None:
        _remote_query(addr, project, text, mode, top_k)
        return
    try:
        snapshot = artifacts.load_snapshot(data_dir, project)
    except MissingArtifactError as exc:
        raise click.ClickException(f"{exc} (run `retrorank {exc.stage}`)")
    output = ranker.rank(text, snapshot, RankConfig(mode=mode, top_k=top_k))
    if output.no_match:
        click.echo("no match: no query term is in the index vocabulary")
        return
    click.echo(_format_results(output.results))


def _remote_query(addr: str, project: str, text: str, mode: str, top_k: int) -> None:
    import httpx

    from retrorank.corpus import CommentRef
    from retrorank.ranker import RankedResult

    response = httpx.post(
        f"{addr.rstrip('/')}/api/query",
        json={"project": project, "query_text": text, "mode": mode, "top_k": top_k},
        timeout=30.0,
    )
    if response.status_code != 200:
        raise click.ClickException(f"server returned {response.status_code}: {response.text}")
    payload = response.json()
    if payload["no_match"]:
        click.echo("no match: no query term is in the index vocabulary")
        return
    results = [
        RankedResult(
            rank=r["rank"],
            ref=CommentRef(r["project"], r["bug_id"], r["comment_id"]),
            final_score=r["final_score"],
            vsm_score=r["vsm_score"],
            sa_boost=r["sa_boost"],
            tr_boost=r["tr_boost"],
            snippet=r["snippet"],
        )
        for r in payload["results"]
    ]
    click.echo(_format_results(results))


@main.command(name="eval")
@click.option("--project", default=None)
@click.option("--goldset", "goldset_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None)
@click.option("--positions", "positions_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None, help="Precomputed positions TSV instead of live retrieval.")
@click.option("--modes", "modes_csv", default="vsm,vsm_sa,vsm_tr,vsm_sa_tr", show_default=True)
@DATA_DIR_OPTION
def eval_command(project: str | None, goldset_path: Path | None, positions_path: Path | None, modes_csv: str, data_dir: Path) -> None:
    """Emit the ranking-performance report and the statistics table."""
    modes = [m.strip() for m in modes_csv.split(",") if m.strip()]
    for mode in modes:
        if mode not in MODES:
            raise click.BadParameter(f"unknown mode {mode!r}", param_hint="--modes")

    if positions_path is not None:
        table = evalkit.load_positions_table(positions_path)
        evaluations = [
            ModeEvaluation(mode, table[mode]) for mode in modes if mode in table
        ]
    elif goldset_path is not None and project is not None:
        try:
            snapshot = artifacts.load_snapshot(data_dir, project)
        except MissingArtifactError as exc:
            raise click.ClickException(f"{exc} (run `retrorank {exc.stage}`)")
        goldset = evalkit.load_goldset(goldset_path)
        evaluations = []
        for mode in modes:
            cfg = RankConfig(mode=mode, top_k=EVAL_DEPTH)
            records = []
            for entry in goldset:
                output = ranker.rank(entry.query_text, snapshot, cfg)
                ranked_refs = [r.ref for r in output.results]
                records.append(evalkit.rank_positions(entry.query_id, ranked_refs, entry.gold))
            evaluations.append(ModeEvaluation(mode, records))
    else:
        raise click.UsageError("provide either --positions, or --goldset with --project")

    click.echo(evalkit.performance_report(evaluations), nl=False)
    if len(evaluations) > 1:
        click.echo("")
        click.echo(evalkit.stats_report(evaluations), nl=False)


@main.command()
@click.option("--addr", default="127.0.0.1:8461", show_default=True, help="host:port to listen on.")
@click.option("--blind", is_flag=True, default=False, help="Label study arms Tool A/Tool B instead of mode names.")
@click.option("--web-dir", type=click.Path(path_type=Path), default=Path("web/dist"), show_default=True, help="Static UI bundle to serve at /.")
@DATA_DIR_OPTION
def serve(addr: str, blind: bool, web_dir: Path, data_dir: Path) -> None:
    """Start the HTTP service over the built artifacts."""
    import uvicorn

    from retrorank.server import create_app

    host, _, port = addr.partition(":")
    app = create_app(data_dir, blind=blind, web_dir=web_dir if web_dir.is_dir() else None)
    if not web_dir.is_dir():
        click.echo(f"note: no web bundle at {web_dir}, serving API only", err=True)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8461))


if __name__ == "__main__":
    sys.exit(main())
