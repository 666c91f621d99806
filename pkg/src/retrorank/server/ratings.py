"""Append-only relevance-ratings log.

One JSON record per line in ``<data_dir>/ratings.ndrec``. Appends go through
a single lock so concurrent raters cannot interleave partial lines; export
returns records in file order, which makes it monotone over time.
"""

from __future__ import annotations

import json
import threading
import time
from pathlib import Path

from retrorank.server.schemas import RatingIn, RatingRecord

RATINGS_FILENAME = "ratings.ndrec"


class RatingsLog:
    def __init__(self, data_dir: str | Path):
        self.path = Path(data_dir) / RATINGS_FILENAME
        self._lock = threading.Lock()

    def append(self, rating: RatingIn, rated_at: int | None = None) -> RatingRecord:
        record = RatingRecord(
            rater_id=rating.rater_id,
            query_text=rating.query_text,
            ref=rating.ref,
            score=rating.score,
            rated_at=int(time.time()) if rated_at is None else rated_at,
        )
        line = json.dumps(record.model_dump(), sort_keys=True, separators=(",", ":"))
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line)
                fh.write("\n")
                fh.flush()
        return record

    def export(self) -> list[RatingRecord]:
        if not self.path.is_file():
            return []
        records = []
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    records.append(RatingRecord.model_validate(json.loads(line)))
        return records
