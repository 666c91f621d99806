"""Bug-report ingestion and the on-disk bug store.

Bugzilla XML exports are parsed into :class:`BugReport` records and persisted
as newline-delimited JSON records, one bug per line, under
``<data_dir>/<project>/bugs.ndrec`` (see ``docs/formats.md``). The first
comment in a thread (index 0) is the bug description.
"""

from __future__ import annotations

import datetime
import json
import logging
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from retrorank.errors import StorageError, XmlParseError

logger = logging.getLogger(__name__)

KNOWN_STATUSES = frozenset(
    {"UNCONFIRMED", "NEW", "ASSIGNED", "RESOLVED", "VERIFIED", "CLOSED"}
)
RESOLVED_STATUSES = frozenset({"RESOLVED", "VERIFIED", "CLOSED"})
PRIORITIES = frozenset({"P1", "P2", "P3", "P4"})

BUGS_FILENAME = "bugs.ndrec"


def status_category(status: str) -> str:
    """Map a raw status string onto the known set, or OTHER."""
    return status if status in KNOWN_STATUSES else "OTHER"


@dataclass(frozen=True, order=True)
class CommentRef:
    """Stable address of one comment: (project, bug_id, comment_id)."""

    project: str
    bug_id: int
    comment_id: int

    def key(self) -> str:
        return f"{self.project}:{self.bug_id}:{self.comment_id}"

    @classmethod
    def parse(cls, text: str) -> "CommentRef":
        project, bug_id, comment_id = text.rsplit(":", 2)
        return cls(project, int(bug_id), int(comment_id))


@dataclass
class Comment:
    comment_id: int
    author: str
    created: int  # UTC seconds
    text: str


@dataclass
class BugReport:
    bug_id: int
    project: str
    title: str
    description: str
    status: str  # raw status string, preserved verbatim; see status_category()
    priority: str  # P1..P4 or UNKNOWN
    comments: list[Comment] = field(default_factory=list)

    @property
    def is_resolved(self) -> bool:
        return self.status in RESOLVED_STATUSES

    def to_record(self) -> dict:
        return {
            "bug_id": self.bug_id,
            "project": self.project,
            "title": self.title,
            "description": self.description,
            "status": self.status,
            "priority": self.priority,
            "comments": [
                {
                    "comment_id": c.comment_id,
                    "author": c.author,
                    "created": c.created,
                    "text": c.text,
                }
                for c in self.comments
            ],
        }

    @classmethod
    def from_record(cls, record: dict) -> "BugReport":
        return cls(
            bug_id=record["bug_id"],
            project=record["project"],
            title=record["title"],
            description=record["description"],
            status=record["status"],
            priority=record["priority"],
            comments=[
                Comment(
                    comment_id=c["comment_id"],
                    author=c["author"],
                    created=c["created"],
                    text=c["text"],
                )
                for c in record["comments"]
            ],
        )


@dataclass
class ParseIssue:
    """Record-level problem; the rest of the document is still parsed."""

    bug_index: int
    message: str


@dataclass
class ParseResult:
    bugs: list[BugReport]
    issues: list[ParseIssue] = field(default_factory=list)


_TIME_FORMATS = (
    "%Y-%m-%d %H:%M:%S %z",
    "%Y-%m-%d %H:%M:%S",
    "%Y-%m-%dT%H:%M:%S%z",
)


def parse_timestamp(raw: str) -> int:
    """Parse a Bugzilla timestamp to UTC seconds; unparseable input gives 0."""
    raw = raw.strip()
    if raw.endswith(" UTC"):
        raw = raw[:-4] + " +0000"
    for fmt in _TIME_FORMATS:
        try:
            dt = datetime.datetime.strptime(raw, fmt)
            if dt.tzinfo is None:
                dt = dt.replace(tzinfo=datetime.timezone.utc)
            return int(dt.timestamp())
        except ValueError:
            continue
    return 0


def _text(elem: ET.Element | None) -> str:
    if elem is None or elem.text is None:
        return ""
    return elem.text


def parse_bugzilla_xml(xml_text: str, project: str) -> ParseResult:
    """Parse a Bugzilla export (show_bug.cgi ctype=xml shape) into bug reports.

    Malformed XML raises :class:`XmlParseError` with line/column. A <bug>
    missing its bug_id is reported as a :class:`ParseIssue` and skipped;
    the remaining bugs are still returned.
    """
    try:
        root = ET.fromstring(xml_text)
    except ET.ParseError as exc:
        line, column = exc.position
        raise XmlParseError(str(exc.msg) if exc.msg else "malformed XML", line, column) from exc

    bugs: list[BugReport] = []
    issues: list[ParseIssue] = []
    for index, bug_elem in enumerate(root.iter("bug")):
        bug_id_text = _text(bug_elem.find("bug_id")).strip()
        if not bug_id_text:
            issues.append(ParseIssue(index, "missing bug_id"))
            continue
        try:
            bug_id = int(bug_id_text)
        except ValueError:
            issues.append(ParseIssue(index, f"non-numeric bug_id {bug_id_text!r}"))
            continue

        status = _text(bug_elem.find("bug_status")).strip().upper() or "OTHER"
        raw_priority = _text(bug_elem.find("priority")).strip().upper()
        priority = raw_priority if raw_priority in PRIORITIES else "UNKNOWN"

        comments: list[Comment] = []
        for comment_id, desc in enumerate(bug_elem.findall("long_desc")):
            comments.append(
                Comment(
                    comment_id=comment_id,
                    author=_text(desc.find("who")).strip(),
                    created=parse_timestamp(_text(desc.find("bug_when"))),
                    text=_text(desc.find("thetext")),
                )
            )

        bugs.append(
            BugReport(
                bug_id=bug_id,
                project=project,
                title=_text(bug_elem.find("short_desc")),
                description=comments[0].text if comments else "",
                status=status,
                priority=priority,
                comments=comments,
            )
        )
    return ParseResult(bugs=bugs, issues=issues)


class BugStore:
    """Per-project newline-delimited record store.

    One writer during ingestion; once written, any number of readers may
    stream it concurrently (files are replaced atomically).
    """

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)

    def _bugs_path(self, project: str) -> Path:
        return self.data_dir / project / BUGS_FILENAME

    def projects(self) -> list[str]:
        if not self.data_dir.is_dir():
            return []
        return sorted(
            p.name for p in self.data_dir.iterdir() if (p / BUGS_FILENAME).is_file()
        )

    def store_bugs(self, bugs: list[BugReport]) -> int:
        """Idempotent upsert keyed by (project, bug_id). Returns bugs stored."""
        by_project: dict[str, dict[int, BugReport]] = {}
        for bug in bugs:
            project_map = by_project.setdefault(bug.project, {})
            if bug.bug_id in project_map:
                logger.warning(
                    "duplicate bug %s:%s in batch; last write wins", bug.project, bug.bug_id
                )
            project_map[bug.bug_id] = bug

        stored = 0
        for project, project_map in by_project.items():
            existing = {b.bug_id: b for b in self.load_bugs(project)}
            existing.update(project_map)
            self._write_project(project, existing)
            stored += len(project_map)
        return stored

    def _write_project(self, project: str, bugs_by_id: dict[int, BugReport]) -> None:
        path = self._bugs_path(project)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".ndrec.tmp")
            with tmp.open("w", encoding="utf-8") as fh:
                for bug_id in sorted(bugs_by_id):
                    record = bugs_by_id[bug_id].to_record()
                    fh.write(json.dumps(record, sort_keys=True, separators=(",", ":")))
                    fh.write("\n")
            tmp.replace(path)
        except OSError as exc:
            raise StorageError(f"cannot write store for project {project!r}: {exc}") from exc

    def load_bugs(self, project: str) -> list[BugReport]:
        path = self._bugs_path(project)
        if not path.is_file():
            return []
        bugs = []
        try:
            with path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        bugs.append(BugReport.from_record(json.loads(line)))
        except OSError as exc:
            raise StorageError(f"cannot read store for project {project!r}: {exc}") from exc
        return bugs

    def get_bug(self, project: str, bug_id: int) -> BugReport | None:
        for bug in self.load_bugs(project):
            if bug.bug_id == bug_id:
                return bug
        return None

    def resolved_comments(self, project: str) -> Iterator[tuple[CommentRef, Comment]]:
        """Comments of RESOLVED/VERIFIED/CLOSED bugs, in CommentRef order."""
        for bug in sorted(self.load_bugs(project), key=lambda b: b.bug_id):
            if not bug.is_resolved:
                continue
            for comment in sorted(bug.comments, key=lambda c: c.comment_id):
                yield CommentRef(project, bug.bug_id, comment.comment_id), comment


def ingest_directory(store: BugStore, input_dir: str | Path, project: str) -> tuple[int, list[ParseIssue]]:
    """Parse every .xml file in a directory and store the results."""
    input_dir = Path(input_dir)
    xml_files = sorted(input_dir.glob("*.xml"))
    if not xml_files:
        raise StorageError(f"no .xml files found in {input_dir}")
    bugs: list[BugReport] = []
    issues: list[ParseIssue] = []
    for xml_file in xml_files:
        result = parse_bugzilla_xml(xml_file.read_text(encoding="utf-8"), project)
        bugs.extend(result.bugs)
        issues.extend(result.issues)
    count = store.store_bugs(bugs)
    return count, issues


__all__ = [
    "BUGS_FILENAME",
    "BugReport",
    "BugStore",
    "Comment",
    "CommentRef",
    "KNOWN_STATUSES",
    "PRIORITIES",
    "ParseIssue",
    "ParseResult",
    "RESOLVED_STATUSES",
    "ingest_directory",
    "parse_bugzilla_xml",
    "parse_timestamp",
    "status_category",
]
