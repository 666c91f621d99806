"""Build pipeline and immutable per-project snapshots.

``build_project`` turns an ingested store into the three retrieval
artifacts: the TF-IDF index (`index.bin`), the sentiment bonus/penalty
dictionaries (`sadict.tsv`), and the keyword-importance dictionary
(`trdict.tsv`). ``load_snapshot`` loads them back for querying; snapshots
are immutable after load and safe to share across threads.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from retrorank import sentiment, textprep, textrank, vsm
from retrorank.corpus import BugStore, CommentRef
from retrorank.errors import MissingArtifactError
from retrorank.sentiment import SaDictionaries, SentimentLexicon
from retrorank.textrank import TrDictionary
from retrorank.vsm import TfIdfIndex

logger = logging.getLogger(__name__)

INDEX_FILENAME = "index.bin"
TRDICT_FILENAME = "trdict.tsv"
SADICT_FILENAME = "sadict.tsv"


@dataclass
class ProjectPaths:
    data_dir: Path
    project: str

    @property
    def project_dir(self) -> Path:
        return self.data_dir / self.project

    @property
    def bugs(self) -> Path:
        return self.project_dir / "bugs.ndrec"

    @property
    def index(self) -> Path:
        return self.project_dir / INDEX_FILENAME

    @property
    def trdict(self) -> Path:
        return self.project_dir / TRDICT_FILENAME

    @property
    def sadict(self) -> Path:
        return self.project_dir / SADICT_FILENAME


@dataclass
class BuildSummary:
    project: str
    resolved_comments: int
    vocabulary_size: int
    bonus_terms: int
    penalty_terms: int
    tr_terms: int
    tr_converged: bool
    tr_iterations: int


def build_project(
    data_dir: str | Path,
    project: str,
    lexicon: SentimentLexicon | None = None,
    top_n: int = textrank.DEFAULT_TOP_N,
    damping: float = textrank.DEFAULT_DAMPING,
    tol: float = textrank.DEFAULT_TOL,
    max_iter: int = textrank.DEFAULT_MAX_ITER,
    idf_scheme: str = "ln",
) -> BuildSummary:
    """Build and persist all retrieval artifacts for one project."""
    paths = ProjectPaths(Path(data_dir), project)
    if not paths.bugs.is_file():
        raise MissingArtifactError(
            f"no ingested bugs for project {project!r} in {data_dir}; run ingest first",
            stage="ingest",
        )
    store = BugStore(paths.data_dir)
    if lexicon is None:
        lexicon = sentiment.default_lexicon()

    resolved = list(store.resolved_comments(project))
    preprocessed = [(ref, textprep.preprocess(c.text)) for ref, c in resolved]

    index = vsm.build_index(iter(preprocessed), scheme=idf_scheme)
    vsm.save_index(index, paths.index)

    sa_dicts = sentiment.build_sa_dictionaries(iter(resolved), lexicon)
    sentiment.save_sa_dictionaries(sa_dicts, paths.sadict)

    graph = textrank.build_graph(terms for _ref, terms in preprocessed)
    result = textrank.textrank_scores(graph, damping=damping, tol=tol, max_iter=max_iter)
    if not result.converged:
        logger.warning(
            "textrank did not converge for %s after %d sweeps", project, result.iterations
        )
    tr_dict = textrank.build_tr_dictionary(result.scores, top_n=top_n)
    textrank.save_tr_dictionary(tr_dict, paths.trdict)

    return BuildSummary(
        project=project,
        resolved_comments=len(resolved),
        vocabulary_size=len(index.vocabulary),
        bonus_terms=len(sa_dicts.bonus),
        penalty_terms=len(sa_dicts.penalty),
        tr_terms=len(tr_dict.scores),
        tr_converged=result.converged,
        tr_iterations=result.iterations,
    )


@dataclass
class ProjectSnapshot:
    """All artifacts needed to answer queries for one project."""

    project: str
    index: TfIdfIndex
    sa_dicts: SaDictionaries
    tr_dict: TrDictionary
    comments: dict[CommentRef, str] = field(default_factory=dict)

    def comment_text(self, ref: CommentRef) -> str:
        return self.comments.get(ref, "")


def load_snapshot(data_dir: str | Path, project: str) -> ProjectSnapshot:
    """Load the built artifacts for a project.

    Raises :class:`MissingArtifactError` naming the pipeline stage that has
    not run yet.
    """
    paths = ProjectPaths(Path(data_dir), project)
    if not paths.bugs.is_file():
        raise MissingArtifactError(
            f"no ingested bugs for project {project!r}; run ingest first",
            stage="ingest",
        )
    for path in (paths.index, paths.sadict, paths.trdict):
        if not path.is_file():
            raise MissingArtifactError(
                f"index not built for project {project!r} (missing {path.name}); run build first",
                stage="build",
            )
    store = BugStore(paths.data_dir)
    comments: dict[CommentRef, str] = {}
    for bug in store.load_bugs(project):
        for comment in bug.comments:
            comments[CommentRef(project, bug.bug_id, comment.comment_id)] = comment.text
    return ProjectSnapshot(
        project=project,
        index=vsm.load_index(paths.index),
        sa_dicts=sentiment.load_sa_dictionaries(paths.sadict),
        tr_dict=textrank.load_tr_dictionary(paths.trdict),
        comments=comments,
    )
