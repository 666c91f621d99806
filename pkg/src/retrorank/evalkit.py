"""Ranking-evaluation machinery: goldset positions, mean rank position,
MAP@k / MRR@k, descriptive statistics, and significance tests.

Conventions, chosen to reproduce the reference result tables:

* A goldset lists its comments in priority order (primary fix comment
  first). ``rank_positions`` records one 1-based position per gold comment,
  0 when it was not retrieved.
* ``mean_position`` flattens every per-gold position, including 0s for
  misses, into one observation list and averages it.
* MRR@k takes, per query, the reciprocal rank of the first-listed gold
  comment retrieved within the top k (0 when none was).
* MAP@k uses standard average precision over gold positions within the
  top k, divided by min(|gold|, k).
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from pathlib import Path

from retrorank.corpus import CommentRef
from retrorank.errors import ConfigError
from retrorank.stats import (
    AnovaResult,
    TTestResult,
    anova_oneway as _anova_oneway,
    cohens_d_from_summary,
    pooled_t_test,
)

DEFAULT_K = 10


@dataclass
class GoldsetEntry:
    query_id: str
    query_text: str
    gold: list[CommentRef]

    def __post_init__(self) -> None:
        if not self.gold:
            raise ValueError(f"goldset entry {self.query_id!r} has no gold comments")
        if not self.query_text:
            raise ValueError(f"goldset entry {self.query_id!r} has empty query text")


@dataclass
class PositionRecord:
    """Per-query 1-based rank of each gold comment; 0 means not retrieved."""

    query_id: str
    positions: list[int]

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.positions):
            raise ValueError("positions must be >= 0")


@dataclass
class StatSummary:
    n: int
    minimum: float
    maximum: float
    median: float
    mean: float
    std: float


def load_goldset(path: str | Path) -> list[GoldsetEntry]:
    """Load goldset.tsv rows: query_id<TAB>query_text<TAB>ref[,ref...]."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"goldset file not found: {path}")
    entries = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("\t")
        if len(parts) != 3:
            raise ConfigError(f"{path}:{lineno}: expected 3 tab-separated fields")
        query_id, query_text, refs = parts
        gold = [CommentRef.parse(r.strip()) for r in refs.split(",") if r.strip()]
        entries.append(GoldsetEntry(query_id=query_id, query_text=query_text, gold=gold))
    return entries


def rank_positions(
    query_id: str, ranked_refs: list[CommentRef], gold: list[CommentRef]
) -> PositionRecord:
    """Rank of each gold comment within an ordered result list (0 if absent)."""
    index = {ref: position for position, ref in enumerate(ranked_refs, start=1)}
    return PositionRecord(
        query_id=query_id, positions=[index.get(ref, 0) for ref in gold]
    )


def flatten_positions(records: list[PositionRecord]) -> list[int]:
    return [p for record in records for p in record.positions]


def mean_position(records: list[PositionRecord]) -> float:
    """Mean over all per-gold positions, counting misses as 0."""
    observations = flatten_positions(records)
    if not observations:
        raise ValueError("no position observations")
    return sum(observations) / len(observations)


def mrr_at_k(records: list[PositionRecord], k: int = DEFAULT_K) -> float:
    """Mean reciprocal rank of the first-listed gold comment within top k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not records:
        raise ValueError("no records")
    total = 0.0
    for record in records:
        for position in record.positions:
            if 1 <= position <= k:
                total += 1.0 / position
                break
    return total / len(records)


def average_precision(positions: list[int], k: int = DEFAULT_K) -> float:
    """AP for one query from its gold positions, restricted to the top k."""
    retrieved = sorted(p for p in positions if 1 <= p <= k)
    if not retrieved:
        return 0.0
    score = sum(hits / position for hits, position in enumerate(retrieved, start=1))
    return score / min(len(positions), k)


def map_at_k(records: list[PositionRecord], k: int = DEFAULT_K) -> float:
    """Mean average precision at k over all queries."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not records:
        raise ValueError("no records")
    return sum(average_precision(r.positions, k) for r in records) / len(records)


def summary(values: list[float]) -> StatSummary:
    """Descriptive statistics: n, min, max, median, mean, sample std-dev."""
    if not values:
        raise ValueError("summary of empty input")
    return StatSummary(
        n=len(values),
        minimum=min(values),
        maximum=max(values),
        median=statistics.median(values),
        mean=sum(values) / len(values),
        std=statistics.stdev(values) if len(values) > 1 else 0.0,
    )


def students_t(a: StatSummary, b: StatSummary, confidence: float = 0.95) -> TTestResult:
    """Two-sample pooled-variance t-test from summary statistics."""
    return pooled_t_test(a.n, a.mean, a.std, b.n, b.mean, b.std, confidence)


def cohens_d(a: StatSummary, b: StatSummary) -> float:
    """Pooled-standard-deviation effect size between two summarized groups."""
    return cohens_d_from_summary(a.n, a.mean, a.std, b.n, b.mean, b.std)


def anova_oneway(groups: list[list[float]], confidence: float = 0.95) -> AnovaResult:
    return _anova_oneway(groups, confidence)


# ---------------------------------------------------------------------------
# Positions fixture loading and report emission
# ---------------------------------------------------------------------------

def load_positions_table(path: str | Path) -> dict[str, list[PositionRecord]]:
    """Load a positions TSV: header `query_id<TAB>mode...`, one row per query,
    cells holding comma-separated positions for multi-gold queries."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"positions file not found: {path}")
    lines = [
        line for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.startswith("#")
    ]
    if not lines:
        raise ConfigError(f"positions file {path} is empty")
    header = lines[0].split("\t")
    if header[0] != "query_id":
        raise ConfigError(f"{path}: first header column must be query_id")
    modes = header[1:]
    table: dict[str, list[PositionRecord]] = {mode: [] for mode in modes}
    for line in lines[1:]:
        cells = line.split("\t")
        if len(cells) != len(header):
            raise ConfigError(f"{path}: row {cells[0]!r} has {len(cells)} cells, expected {len(header)}")
        query_id = cells[0]
        for mode, cell in zip(modes, cells[1:]):
            positions = [int(p) for p in cell.split(",")]
            table[mode].append(PositionRecord(query_id=query_id, positions=positions))
    return table


@dataclass
class ModeEvaluation:
    mode: str
    records: list[PositionRecord] = field(default_factory=list)

    @property
    def mean_position(self) -> float:
        return mean_position(self.records)

    @property
    def map_10(self) -> float:
        return map_at_k(self.records, DEFAULT_K)

    @property
    def mrr_10(self) -> float:
        return mrr_at_k(self.records, DEFAULT_K)


# Hypothesis pairs mirrored by the stats report, in emission order.
REPORT_PAIRS = (
    ("H1", "vsm_sa_tr", "vsm_sa"),
    ("H2", "vsm_sa_tr", "vsm_tr"),
    ("H3", "vsm", "vsm_tr"),
    ("H4", "vsm", "vsm_sa"),
    ("H5", "vsm", "vsm_sa_tr"),
)


def performance_report(evaluations: list[ModeEvaluation]) -> str:
    """Per-query positions with mean position, MAP@10 and MRR@10 footers."""
    modes = [e.mode for e in evaluations]
    by_query: dict[str, dict[str, str]] = {}
    for evaluation in evaluations:
        for record in evaluation.records:
            cell = ",".join(str(p) for p in record.positions)
            by_query.setdefault(record.query_id, {})[evaluation.mode] = cell

    rows = [["query_id", *modes]]
    for query_id, cells in by_query.items():
        rows.append([query_id, *(cells.get(mode, "-") for mode in modes)])
    rows.append(["mean_position", *(f"{e.mean_position:.1f}" for e in evaluations)])
    rows.append(["MAP@10", *(f"{e.map_10:.3f}" for e in evaluations)])
    rows.append(["MRR@10", *(f"{e.mrr_10:.3f}" for e in evaluations)])

    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def stats_report(evaluations: list[ModeEvaluation]) -> str:
    """Pairwise t-test / effect-size table over flattened rank positions."""
    available = {e.mode: e for e in evaluations}
    header = ["hypothesis", "groups", "n", "mean", "std", "t", "t_crit", "p", "cohens_d", "decision"]
    rows = [header]
    for name, mode_a, mode_b in REPORT_PAIRS:
        if mode_a not in available or mode_b not in available:
            continue
        group_a = [float(p) for p in flatten_positions(available[mode_a].records)]
        group_b = [float(p) for p in flatten_positions(available[mode_b].records)]
        summary_a = summary(group_a)
        summary_b = summary(group_b)
        test = students_t(summary_a, summary_b)
        effect = cohens_d(summary_a, summary_b)
        rows.append(
            [
                name,
                f"{mode_a}/{mode_b}",
                f"{summary_a.n}/{summary_b.n}",
                f"{summary_a.mean:.1f}/{summary_b.mean:.1f}",
                f"{summary_a.std:.1f}/{summary_b.std:.1f}",
                f"{test.t:.4f}",
                f"{test.t_crit:.4f}",
                f"{test.p:.1e}",
                f"{effect:.4f}",
                "Reject" if test.reject else "Accept",
            ]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"
