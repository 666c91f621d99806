"""Lexicon-based, document-level sentiment scoring of comments.

The lexicon maps surface words (lowercase, unstemmed) to polarity in
[-1.0, 1.0]. A comment's polarity is the sum of its words' polarities over
the tokenized, lowercased text; words missing from the lexicon count as
neutral. Lexicon words observed in the resolved-comment stream are split
into bonus (polarity > 0) and penalty (polarity < 0) dictionaries.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from retrorank import textprep
from retrorank.corpus import Comment, CommentRef
from retrorank.errors import LexiconError

logger = logging.getLogger(__name__)

SentimentLexicon = dict[str, float]

AGGREGATES = ("sum", "mean")


@dataclass
class SaDictionaries:
    bonus: dict[str, float] = field(default_factory=dict)
    penalty: dict[str, float] = field(default_factory=dict)

    def polarity_map(self) -> dict[str, float]:
        merged = dict(self.penalty)
        merged.update(self.bonus)
        return merged


def load_lexicon(path: str | Path) -> SentimentLexicon:
    """Load a TSV lexicon (term<TAB>polarity). '#' lines are comments.

    Duplicate terms keep the last entry (with a warning). A polarity outside
    [-1, 1] or a malformed row raises :class:`LexiconError` naming the line.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon {path}: {exc}") from exc

    lexicon: SentimentLexicon = {}
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"{path}:{lineno}: expected term<TAB>polarity")
        term, raw_polarity = parts[0].strip().lower(), parts[1].strip()
        try:
            polarity = float(raw_polarity)
        except ValueError as exc:
            raise LexiconError(f"{path}:{lineno}: bad polarity {raw_polarity!r}") from exc
        if not -1.0 <= polarity <= 1.0:
            raise LexiconError(
                f"{path}:{lineno}: polarity {polarity} outside [-1.0, 1.0]"
            )
        if term in lexicon:
            logger.warning("%s:%d: duplicate term %r; last entry wins", path, lineno, term)
        lexicon[term] = polarity
    if not lexicon:
        raise LexiconError(f"lexicon {path} is empty")
    return lexicon


def default_lexicon() -> SentimentLexicon:
    """The lexicon bundled with the package (data/lexicon.tsv)."""
    with resources.as_file(resources.files("retrorank").joinpath("data/lexicon.tsv")) as p:
        return load_lexicon(p)


def term_polarity(term: str, lexicon: SentimentLexicon) -> float:
    """Polarity of one term; absent terms are neutral (0.0)."""
    return lexicon.get(term, 0.0)


def _words(text: str) -> list[str]:
    # Surface forms: tokenized and lowercased, but not stopword-filtered
    # or stemmed, so lexicon keys like "fixed" match directly.
    return textprep.normalize(textprep.tokenize(text))


def comment_polarity(text: str, lexicon: SentimentLexicon, aggregate: str = "sum") -> float:
    """Document-level polarity of a comment.

    ``sum`` (default) adds each word's polarity; ``mean`` divides the sum by
    the word count. Empty text scores 0.0.
    """
    if aggregate not in AGGREGATES:
        raise ValueError(f"unknown aggregate {aggregate!r}")
    words = _words(text)
    if not words:
        return 0.0
    total = sum(term_polarity(w, lexicon) for w in words)
    if aggregate == "mean":
        return total / len(words)
    return total


def build_sa_dictionaries(
    comments: Iterable[tuple[CommentRef, Comment]], lexicon: SentimentLexicon
) -> SaDictionaries:
    """Split lexicon terms observed in the resolved-comment stream into
    bonus (polarity > 0) and penalty (polarity < 0) groups."""
    dicts = SaDictionaries()
    for _ref, comment in comments:
        for word in _words(comment.text):
            polarity = lexicon.get(word)
            if polarity is None or polarity == 0.0:
                continue
            if polarity > 0.0:
                dicts.bonus.setdefault(word, polarity)
            else:
                dicts.penalty.setdefault(word, polarity)
    return dicts


def expand_lexicon(
    seed: SentimentLexicon,
    comments: Iterable[tuple[CommentRef, Comment]],
    threshold: float,
) -> SentimentLexicon:
    """Grow a seed lexicon from co-occurrence with seed words.

    A non-seed word co-occurring (same comment) with seed words is assigned
    the co-occurrence-weighted mean polarity of those seeds, and added when
    |mean| >= threshold. Seed entries are never overwritten.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must be in (0, 1]")
    weighted: dict[str, float] = {}
    weights: dict[str, int] = {}
    for _ref, comment in comments:
        words = sorted(set(_words(comment.text)))
        seeds_here = [w for w in words if w in seed]
        if not seeds_here:
            continue
        for word in words:
            if word in seed:
                continue
            for seed_word in seeds_here:
                weighted[word] = weighted.get(word, 0.0) + seed[seed_word]
                weights[word] = weights.get(word, 0) + 1

    expanded = dict(seed)
    for word, total in weighted.items():
        mean = total / weights[word]
        if abs(mean) >= threshold:
            expanded[word] = mean
    return expanded


def save_sa_dictionaries(dicts: SaDictionaries, path: str | Path) -> None:
    """Persist as term<TAB>polarity rows, bonus then penalty, each sorted."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{t}\t{dicts.bonus[t]:.6f}" for t in sorted(dicts.bonus)]
    lines += [f"{t}\t{dicts.penalty[t]:.6f}" for t in sorted(dicts.penalty)]
    path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def load_sa_dictionaries(path: str | Path) -> SaDictionaries:
    dicts = SaDictionaries()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        term, raw = line.split("\t")
        polarity = float(raw)
        if polarity > 0:
            dicts.bonus[term] = polarity
        elif polarity < 0:
            dicts.penalty[term] = polarity
    return dicts
