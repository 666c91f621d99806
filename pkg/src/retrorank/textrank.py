"""Co-occurrence term graph and iterative keyword ranking.

Vertices are preprocessed terms from resolved comments; an undirected edge
joins two terms that appear in the same comment, weighted by the fraction of
comments containing both. Scores start at 1 and are updated with synchronous
sweeps of

    score(v) = (1 - d) + d * sum over neighbors n of
               weight(n, v) / sum over m in neighbors(n) of weight(n, m)
               * score(n)

until the largest per-vertex change drops below ``tol``. An isolated vertex
settles at 1 - d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

DEFAULT_DAMPING = 0.85
DEFAULT_TOL = 1e-4
DEFAULT_MAX_ITER = 100
DEFAULT_TOP_N = 1000


@dataclass
class TermGraph:
    """Symmetric weighted adjacency over terms, plus the comment count."""

    adjacency: dict[str, dict[str, float]] = field(default_factory=dict)
    comment_count: int = 0

    @property
    def vertices(self) -> list[str]:
        return list(self.adjacency)

    def weight(self, a: str, b: str) -> float:
        return self.adjacency.get(a, {}).get(b, 0.0)


@dataclass
class TextRankScores:
    scores: dict[str, float]
    converged: bool
    iterations: int


@dataclass
class TrDictionary:
    """Top-N terms by converged score."""

    scores: dict[str, float]
    top_n: int

    def max_score(self) -> float:
        return max(self.scores.values()) if self.scores else 0.0


def build_graph(
    comments: Iterable[Sequence[str]], window: int | None = None
) -> TermGraph:
    """Build the co-occurrence graph over a stream of preprocessed term lists.

    With ``window=None`` (default) every pair of distinct terms in a comment
    co-occurs; an integer window restricts pairs to terms at most ``window``
    positions apart. Edge weight = co-occurring comments / total comments.
    """
    pair_counts: dict[tuple[str, str], int] = {}
    vertices: dict[str, None] = {}
    comment_count = 0
    for terms in comments:
        comment_count += 1
        for term in terms:
            vertices.setdefault(term)
        pairs: set[tuple[str, str]] = set()
        if window is None:
            distinct = sorted(set(terms))
            for i, a in enumerate(distinct):
                for b in distinct[i + 1 :]:
                    pairs.add((a, b))
        else:
            for i, a in enumerate(terms):
                for b in terms[i + 1 : i + 1 + window]:
                    if a != b:
                        pairs.add((a, b) if a < b else (b, a))
        # Sorted iteration keeps insertion order independent of hash seeds,
        # so downstream float summation order is stable across runs.
        for pair in sorted(pairs):
            pair_counts[pair] = pair_counts.get(pair, 0) + 1

    graph = TermGraph(comment_count=comment_count)
    for term in vertices:
        graph.adjacency[term] = {}
    for (a, b), count in pair_counts.items():
        weight = count / comment_count
        graph.adjacency[a][b] = weight
        graph.adjacency[b][a] = weight
    return graph


def textrank_scores(
    graph: TermGraph,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> TextRankScores:
    """Iterate the update rule with synchronous sweeps until convergence."""
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must be in (0, 1)")
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    scores = {term: 1.0 for term in graph.adjacency}
    out_weight = {
        term: sum(neighbors.values()) for term, neighbors in graph.adjacency.items()
    }
    base = 1.0 - damping
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        updated: dict[str, float] = {}
        for term, neighbors in graph.adjacency.items():
            acc = 0.0
            for neighbor, weight in neighbors.items():
                acc += weight / out_weight[neighbor] * scores[neighbor]
            updated[term] = base + damping * acc
        delta = max(
            (abs(updated[t] - scores[t]) for t in updated), default=0.0
        )
        scores = updated
        if delta < tol:
            converged = True
            break
    return TextRankScores(scores=scores, converged=converged, iterations=iterations)


def build_tr_dictionary(scores: dict[str, float], top_n: int = DEFAULT_TOP_N) -> TrDictionary:
    """Keep the top-N terms, sorted by descending score then term."""
    if not scores:
        raise ValueError("scores must be non-empty")
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:top_n]
    return TrDictionary(scores=dict(ranked), top_n=top_n)


def save_tr_dictionary(tr_dict: TrDictionary, path: str | Path) -> None:
    """Persist as term<TAB>score rows in rank order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    ranked = sorted(tr_dict.scores.items(), key=lambda kv: (-kv[1], kv[0]))
    lines = [f"{term}\t{score:.10f}" for term, score in ranked]
    path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def load_tr_dictionary(path: str | Path) -> TrDictionary:
    scores: dict[str, float] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        term, raw = line.split("\t")
        scores[term] = float(raw)
    return TrDictionary(scores=scores, top_n=len(scores))
