"""Text preprocessing applied identically to comments and queries.

Four steps, in order: tokenization, normalization, stop-word removal,
Porter stemming. All functions are pure; the stopword list ships with the
package as ``data/stopwords.txt``.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from retrorank import porter
from retrorank.errors import ConfigError

# ASCII alphanumeric runs; everything else is a boundary. Numerals are kept
# because bug ids and version numbers are useful query terms.
_TOKEN_RE = re.compile(r"[A-Za-z0-9]+")

_DEFAULT_STOPWORDS: frozenset[str] | None = None


def tokenize(text: str) -> list[str]:
    """Split text on non-alphanumeric boundaries, preserving case and order."""
    return _TOKEN_RE.findall(text)


def normalize(tokens: list[str]) -> list[str]:
    """Lowercase tokens, dropping any that become empty."""
    return [t.lower() for t in tokens if t]


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Load a one-word-per-line stopword file."""
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"stopword file not found: {p}")
    words = [line.strip() for line in p.read_text(encoding="utf-8").splitlines()]
    return frozenset(w for w in words if w)


def default_stopwords() -> frozenset[str]:
    """The bundled 127-entry English stopword list."""
    global _DEFAULT_STOPWORDS
    if _DEFAULT_STOPWORDS is None:
        ref = resources.files("retrorank").joinpath("data/stopwords.txt")
        if not ref.is_file():
            raise ConfigError("bundled stopword file data/stopwords.txt is missing")
        words = ref.read_text(encoding="utf-8").splitlines()
        _DEFAULT_STOPWORDS = frozenset(w.strip() for w in words if w.strip())
    return _DEFAULT_STOPWORDS


def remove_stopwords(tokens: list[str], stopwords: frozenset[str] | None = None) -> list[str]:
    """Drop stopword tokens, preserving the relative order of the rest."""
    if stopwords is None:
        stopwords = default_stopwords()
    return [t for t in tokens if t not in stopwords]


def stem(token: str) -> str:
    """Porter-stem a lowercase alphabetic token; anything else passes through."""
    if token.isalpha() and token.isascii():
        return porter.stem(token)
    return token


def preprocess(text: str, stopwords: frozenset[str] | None = None) -> list[str]:
    """Full pipeline: tokenize, normalize, remove stopwords, stem."""
    return [stem(t) for t in remove_stopwords(normalize(tokenize(text)), stopwords)]
