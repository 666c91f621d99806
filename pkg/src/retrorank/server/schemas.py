"""Pydantic request/response models for the HTTP API (see docs/api.md)."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from retrorank.corpus import BugReport, CommentRef
from retrorank.ranker import RankedResult

Mode = Literal["vsm", "vsm_sa", "vsm_tr", "vsm_sa_tr"]


class QueryRequest(BaseModel):
    project: str
    query_text: str = Field(min_length=1)
    mode: Mode = "vsm_sa_tr"
    top_k: int = Field(default=10, ge=1, le=100)


class RankedResultModel(BaseModel):
    rank: int
    project: str
    bug_id: int
    comment_id: int
    final_score: float
    vsm_score: float
    sa_boost: float
    tr_boost: float
    snippet: str

    @classmethod
    def from_result(cls, result: RankedResult) -> "RankedResultModel":
        return cls(
            rank=result.rank,
            project=result.ref.project,
            bug_id=result.ref.bug_id,
            comment_id=result.ref.comment_id,
            final_score=result.final_score,
            vsm_score=result.vsm_score,
            sa_boost=result.sa_boost,
            tr_boost=result.tr_boost,
            snippet=result.snippet,
        )


class QueryResponse(BaseModel):
    results: list[RankedResultModel]
    no_match: bool
    elapsed_ms: float


class CommentRefModel(BaseModel):
    project: str
    bug_id: int
    comment_id: int

    def to_ref(self) -> CommentRef:
        return CommentRef(self.project, self.bug_id, self.comment_id)


class RatingIn(BaseModel):
    rater_id: str = Field(min_length=1)
    query_text: str
    ref: CommentRefModel
    score: int = Field(ge=1, le=4)


class RatingRecord(RatingIn):
    rated_at: int


class RatingAck(BaseModel):
    status: Literal["ok"] = "ok"
    total: int


class CommentModel(BaseModel):
    comment_id: int
    author: str
    created: int
    text: str


class BugReportModel(BaseModel):
    bug_id: int
    project: str
    title: str
    description: str
    status: str
    priority: str
    comments: list[CommentModel]

    @classmethod
    def from_bug(cls, bug: BugReport) -> "BugReportModel":
        return cls(
            bug_id=bug.bug_id,
            project=bug.project,
            title=bug.title,
            description=bug.description,
            status=bug.status,
            priority=bug.priority,
            comments=[
                CommentModel(
                    comment_id=c.comment_id, author=c.author, created=c.created, text=c.text
                )
                for c in bug.comments
            ],
        )


class ModeOption(BaseModel):
    id: Mode
    label: str


class HealthResponse(BaseModel):
    status: Literal["ok"] = "ok"
    projects: list[str]
    blind: bool
    modes: list[ModeOption]
