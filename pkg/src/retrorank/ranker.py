"""Score combination and top-k retrieval.

Candidates come from the TF-IDF cosine ranking; sentiment and keyword-graph
boosts then adjust each candidate's score according to the active mode:

    final = vsm * (1 + lambda_sa * sa + lambda_tr * tr)

with each boost term present only when its component is enabled. The vsm
factor gates relevance: a comment the query does not match at all stays at 0
no matter how positive its language. An additive combination
(vsm + lambda_sa * sa + lambda_tr * tr) is available via ``combine="add"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

from retrorank import textprep, vsm
from retrorank.corpus import CommentRef
from retrorank.textrank import TrDictionary

if TYPE_CHECKING:
    from retrorank.artifacts import ProjectSnapshot

MODES = ("vsm", "vsm_sa", "vsm_tr", "vsm_sa_tr")
COMBINE_RULES = ("multiply", "add")

SNIPPET_LENGTH = 200


@dataclass
class RankConfig:
    mode: str = "vsm_sa_tr"
    lambda_sa: float = 1.0
    lambda_tr: float = 1.0
    top_k: int = 10
    combine: str = "multiply"

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.combine not in COMBINE_RULES:
            raise ValueError(f"unknown combine rule {self.combine!r}")
        if self.top_k < 1:
            raise ValueError("top_k must be >= 1")
        if self.lambda_sa < 0 or self.lambda_tr < 0:
            raise ValueError("lambda weights must be >= 0")

    @property
    def sa_enabled(self) -> bool:
        return self.mode in ("vsm_sa", "vsm_sa_tr")

    @property
    def tr_enabled(self) -> bool:
        return self.mode in ("vsm_tr", "vsm_sa_tr")


@dataclass
class RankedResult:
    rank: int
    ref: CommentRef
    final_score: float
    vsm_score: float
    sa_boost: float
    tr_boost: float
    snippet: str


@dataclass
class RankOutput:
    results: list[RankedResult] = field(default_factory=list)
    no_match: bool = False


def sa_boost(text: str, polarity_map: dict[str, float]) -> float:
    """Sentiment boost in [0, 1]: mean word polarity mapped by (m + 1) / 2.

    The mean runs over the comment's tokenized, lowercased words so long
    comments are not favored merely by length. Empty text is neutral (0.5).
    """
    words = textprep.normalize(textprep.tokenize(text))
    if not words:
        return 0.5
    mean = sum(polarity_map.get(w, 0.0) for w in words) / len(words)
    mean = max(-1.0, min(1.0, mean))
    return (mean + 1.0) / 2.0


def tr_boost(terms: Sequence[str], tr_dict: TrDictionary) -> float:
    """Keyword-importance boost in [0, 1].

    Mean over the comment's distinct preprocessed terms of the term's score
    normalized by the dictionary maximum; terms missing from the dictionary
    contribute 0. No terms gives 0.
    """
    distinct = sorted(set(terms))
    if not distinct:
        return 0.0
    max_score = tr_dict.max_score()
    if max_score <= 0.0:
        return 0.0
    total = sum(tr_dict.scores.get(t, 0.0) / max_score for t in distinct)
    return total / len(distinct)


def combined_score(vsm_score: float, sa: float, tr: float, cfg: RankConfig) -> float:
    """Combine the base score with enabled boosts; mode vsm returns it as-is."""
    sa_term = cfg.lambda_sa * sa if cfg.sa_enabled else 0.0
    tr_term = cfg.lambda_tr * tr if cfg.tr_enabled else 0.0
    if cfg.combine == "add":
        if not cfg.sa_enabled and not cfg.tr_enabled:
            return vsm_score
        return vsm_score + sa_term + tr_term
    return vsm_score * (1.0 + sa_term + tr_term)


def make_snippet(text: str) -> str:
    return text[:SNIPPET_LENGTH]


def rank(query_text: str, snapshot: "ProjectSnapshot", cfg: RankConfig) -> RankOutput:
    """Retrieve the top-k comments for a free-text query.

    The query goes through the same preprocessing pipeline as the indexed
    comments. Output ordering is deterministic: final score descending,
    then ascending comment reference.
    """
    query_terms = textprep.preprocess(query_text)
    if not snapshot.index.matching_terms(query_terms):
        return RankOutput(results=[], no_match=True)

    candidates = vsm.vsm_rank(query_terms, snapshot.index)
    if not candidates:
        return RankOutput(results=[], no_match=True)

    polarity_map = snapshot.sa_dicts.polarity_map()
    scored: list[RankedResult] = []
    for ref, vsm_score in candidates:
        text = snapshot.comment_text(ref)
        sa = sa_boost(text, polarity_map) if cfg.sa_enabled else 0.0
        tr = tr_boost(textprep.preprocess(text), snapshot.tr_dict) if cfg.tr_enabled else 0.0
        final = combined_score(vsm_score, sa, tr, cfg)
        scored.append(
            RankedResult(
                rank=0,
                ref=ref,
                final_score=final,
                vsm_score=vsm_score,
                sa_boost=sa,
                tr_boost=tr,
                snippet=make_snippet(text),
            )
        )
    scored.sort(key=lambda r: (-r.final_score, r.ref))
    top = scored[: cfg.top_k]
    for position, result in enumerate(top, start=1):
        result.rank = position
    return RankOutput(results=top, no_match=False)
