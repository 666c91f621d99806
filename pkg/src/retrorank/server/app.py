"""HTTP facade over the retrieval pipeline.

Artifacts are loaded once at application creation and served as immutable
snapshots; concurrent queries are safe, rating appends are serialized by the
log. A static web bundle (``web/dist``) is mounted at ``/`` when present,
and the JSON API lives under ``/api`` (documented in docs/api.md).
"""

from __future__ import annotations

import logging
import time
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles

from retrorank import ranker
from retrorank.artifacts import ProjectSnapshot, load_snapshot
from retrorank.corpus import BugStore
from retrorank.errors import MissingArtifactError
from retrorank.ranker import RankConfig
from retrorank.server.ratings import RatingsLog
from retrorank.server.schemas import (
    BugReportModel,
    HealthResponse,
    ModeOption,
    QueryRequest,
    QueryResponse,
    RankedResultModel,
    RatingAck,
    RatingIn,
    RatingRecord,
)

logger = logging.getLogger(__name__)

OPEN_MODE_OPTIONS = [
    ModeOption(id="vsm", label="vsm"),
    ModeOption(id="vsm_sa", label="vsm_sa"),
    ModeOption(id="vsm_tr", label="vsm_tr"),
    ModeOption(id="vsm_sa_tr", label="vsm_sa_tr"),
]

# Under blind labeling raters only see the study arms, not what they are.
BLIND_MODE_OPTIONS = [
    ModeOption(id="vsm_sa_tr", label="Tool A"),
    ModeOption(id="vsm", label="Tool B"),
]


def create_app(
    data_dir: str | Path,
    blind: bool = False,
    web_dir: str | Path | None = None,
) -> FastAPI:
    """Build the application, loading every built project in ``data_dir``."""
    data_dir = Path(data_dir)
    store = BugStore(data_dir)
    snapshots: dict[str, ProjectSnapshot] = {}
    for project in store.projects():
        try:
            snapshots[project] = load_snapshot(data_dir, project)
        except MissingArtifactError as exc:
            logger.warning("skipping project %s: %s", project, exc)
    ratings = RatingsLog(data_dir)

    app = FastAPI(title="retrorank", version="0.1.0")

    def get_snapshot(project: str) -> ProjectSnapshot:
        snapshot = snapshots.get(project)
        if snapshot is None:
            raise HTTPException(
                status_code=404, detail=f"unknown or unbuilt project {project!r}"
            )
        return snapshot

    @app.get("/api/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(
            projects=sorted(snapshots),
            blind=blind,
            modes=BLIND_MODE_OPTIONS if blind else OPEN_MODE_OPTIONS,
        )

    @app.post("/api/query", response_model=QueryResponse)
    def query(request: QueryRequest) -> QueryResponse:
        snapshot = get_snapshot(request.project)
        cfg = RankConfig(mode=request.mode, top_k=request.top_k)
        started = time.perf_counter()
        output = ranker.rank(request.query_text, snapshot, cfg)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        return QueryResponse(
            results=[RankedResultModel.from_result(r) for r in output.results],
            no_match=output.no_match,
            elapsed_ms=elapsed_ms,
        )

    @app.post("/api/ratings", response_model=RatingAck)
    def rate(rating: RatingIn) -> RatingAck:
        get_snapshot(rating.ref.project)
        ratings.append(rating)
        return RatingAck(total=len(ratings.export()))

    @app.get("/api/ratings/export", response_model=list[RatingRecord])
    def export_ratings() -> list[RatingRecord]:
        return ratings.export()

    @app.get("/api/bugs/{project}/{bug_id}", response_model=BugReportModel)
    def get_bug(project: str, bug_id: int) -> BugReportModel:
        get_snapshot(project)
        bug = store.get_bug(project, bug_id)
        if bug is None:
            raise HTTPException(status_code=404, detail=f"no bug {bug_id} in {project!r}")
        return BugReportModel.from_bug(bug)

    if web_dir is not None and Path(web_dir).is_dir():
        app.mount("/", StaticFiles(directory=web_dir, html=True), name="web")

    return app
