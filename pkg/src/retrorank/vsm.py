"""TF-IDF weighting and cosine-similarity ranking of comments against a query.

Weights are w(t, d) = tf(t, d) * idf(t) with tf the raw term count and
idf = ln(N / df(t)). Terms present in every document have idf 0 and are
dropped from the stored vectors. Cosine similarity of two weighted vectors
ranks comments; ties break on ascending comment reference.
"""

from __future__ import annotations

import json
import math
import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from retrorank.corpus import CommentRef
from retrorank.errors import EmptyCorpusError, StorageError

TermVector = dict[int, float]

INDEX_MAGIC = b"RRIX"
INDEX_VERSION = 1

IDF_SCHEMES = ("ln", "ln-smooth")


def _idf(doc_count: int, df: int, scheme: str) -> float:
    if scheme == "ln":
        return math.log(doc_count / df)
    if scheme == "ln-smooth":
        return math.log(1.0 + doc_count / df)
    raise ValueError(f"unknown idf scheme {scheme!r}")


@dataclass
class TfIdfIndex:
    vocabulary: dict[str, int]
    doc_count: int
    df: dict[int, int]
    vectors: dict[CommentRef, TermVector]
    norms: dict[CommentRef, float] = field(default_factory=dict)
    scheme: str = "ln"

    def idf(self, term_id: int) -> float:
        return _idf(self.doc_count, self.df[term_id], self.scheme)

    def matching_terms(self, terms: Sequence[str]) -> list[str]:
        """The subset of terms known to the index vocabulary, in input order."""
        return [t for t in terms if t in self.vocabulary]

    def query_vector(self, terms: Sequence[str]) -> TermVector:
        """Vectorize a preprocessed query with this index's idf weights."""
        counts: dict[int, int] = {}
        for term in terms:
            term_id = self.vocabulary.get(term)
            if term_id is not None:
                counts[term_id] = counts.get(term_id, 0) + 1
        vector: TermVector = {}
        for term_id, count in counts.items():
            weight = count * self.idf(term_id)
            if weight > 0.0:
                vector[term_id] = weight
        return vector


def build_index(
    comments: Iterable[tuple[CommentRef, Sequence[str]]],
    scheme: str = "ln",
) -> TfIdfIndex:
    """Build a TF-IDF index over a stream of (ref, preprocessed terms).

    Comments with an empty term list keep an empty vector. Raises
    :class:`EmptyCorpusError` on an empty stream.
    """
    vocabulary: dict[str, int] = {}
    df_by_id: dict[int, int] = {}
    term_counts: dict[CommentRef, dict[int, int]] = {}

    for ref, terms in comments:
        counts: dict[int, int] = {}
        for term in terms:
            term_id = vocabulary.setdefault(term, len(vocabulary))
            counts[term_id] = counts.get(term_id, 0) + 1
        for term_id in counts:
            df_by_id[term_id] = df_by_id.get(term_id, 0) + 1
        term_counts[ref] = counts

    if not term_counts:
        raise EmptyCorpusError("cannot build an index over an empty comment stream")

    doc_count = len(term_counts)
    vectors: dict[CommentRef, TermVector] = {}
    norms: dict[CommentRef, float] = {}
    for ref, counts in term_counts.items():
        vector: TermVector = {}
        for term_id, count in counts.items():
            weight = count * _idf(doc_count, df_by_id[term_id], scheme)
            if weight > 0.0:
                vector[term_id] = weight
        vectors[ref] = vector
        norms[ref] = math.sqrt(sum(w * w for w in vector.values()))

    return TfIdfIndex(
        vocabulary=vocabulary,
        doc_count=doc_count,
        df=df_by_id,
        vectors=vectors,
        norms=norms,
        scheme=scheme,
    )


def vector_norm(vector: TermVector) -> float:
    return math.sqrt(sum(w * w for w in vector.values()))


def cosine_similarity(a: TermVector, b: TermVector) -> float:
    """Cosine similarity of two sparse vectors; 0 when either norm is 0."""
    if len(b) < len(a):
        a, b = b, a
    dot = sum(w * b[t] for t, w in a.items() if t in b)
    if dot == 0.0:
        return 0.0
    norm_a = vector_norm(a)
    norm_b = vector_norm(b)
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (norm_a * norm_b)


def vsm_rank(
    query_terms: Sequence[str], index: TfIdfIndex
) -> list[tuple[CommentRef, float]]:
    """Rank all indexed comments against a preprocessed query.

    Returns (ref, score) pairs with score > 0, sorted by descending score
    with ties broken by ascending ref. A query with no indexed terms yields
    an empty list; use ``index.matching_terms`` to distinguish no-match.
    """
    query = index.query_vector(query_terms)
    if not query:
        return []
    query_norm = vector_norm(query)
    scored: list[tuple[CommentRef, float]] = []
    for ref, vector in index.vectors.items():
        if not vector:
            continue
        dot = sum(w * vector[t] for t, w in query.items() if t in vector)
        if dot == 0.0:
            continue
        # Cauchy-Schwarz bounds the score by 1; clamp rounding overshoot.
        score = min(1.0, dot / (query_norm * index.norms[ref]))
        scored.append((ref, score))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored


def save_index(index: TfIdfIndex, path: str | Path) -> None:
    """Persist an index as a versioned binary file (see docs/formats.md)."""
    payload = json.dumps(
        {
            "scheme": index.scheme,
            "doc_count": index.doc_count,
            "vocabulary": index.vocabulary,
            "df": {str(k): v for k, v in index.df.items()},
            "vectors": {
                ref.key(): {str(t): w for t, w in vector.items()}
                for ref, vector in index.vectors.items()
            },
            "norms": {ref.key(): n for ref, n in index.norms.items()},
        },
        sort_keys=True,
        separators=(",", ":"),
    ).encode("utf-8")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".bin.tmp")
    with tmp.open("wb") as fh:
        fh.write(INDEX_MAGIC)
        fh.write(struct.pack("<I", INDEX_VERSION))
        fh.write(struct.pack("<Q", len(payload)))
        fh.write(payload)
    tmp.replace(path)


def load_index(path: str | Path) -> TfIdfIndex:
    path = Path(path)
    try:
        blob = path.read_bytes()
    except OSError as exc:
        raise StorageError(f"cannot read index {path}: {exc}") from exc
    if blob[:4] != INDEX_MAGIC:
        raise StorageError(f"{path} is not an index file (bad magic)")
    (version,) = struct.unpack("<I", blob[4:8])
    if version != INDEX_VERSION:
        raise StorageError(f"unsupported index version {version} in {path}")
    (length,) = struct.unpack("<Q", blob[8:16])
    payload = json.loads(blob[16 : 16 + length].decode("utf-8"))
    return TfIdfIndex(
        vocabulary=payload["vocabulary"],
        doc_count=payload["doc_count"],
        df={int(k): v for k, v in payload["df"].items()},
        vectors={
            CommentRef.parse(key): {int(t): w for t, w in vector.items()}
            for key, vector in payload["vectors"].items()
        },
        norms={CommentRef.parse(key): n for key, n in payload["norms"].items()},
        scheme=payload["scheme"],
    )
