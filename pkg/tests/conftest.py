from __future__ import annotations

from pathlib import Path

import pytest

from retrorank import artifacts
from retrorank.corpus import BugStore, parse_bugzilla_xml

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def mini_bugs():
    xml = (FIXTURES / "mini_corpus.xml").read_text(encoding="utf-8")
    result = parse_bugzilla_xml(xml, "mini")
    assert not result.issues
    return result.bugs


@pytest.fixture(scope="session")
def mini_data_dir(tmp_path_factory, mini_bugs) -> Path:
    """A data dir with the mini corpus ingested and built."""
    data_dir = tmp_path_factory.mktemp("mini-data")
    store = BugStore(data_dir)
    store.store_bugs(mini_bugs)
    artifacts.build_project(data_dir, "mini")
    return data_dir


@pytest.fixture(scope="session")
def mini_store(mini_data_dir) -> BugStore:
    return BugStore(mini_data_dir)


@pytest.fixture(scope="session")
def mini_snapshot(mini_data_dir):
    return artifacts.load_snapshot(mini_data_dir, "mini")


@pytest.fixture(scope="session")
def alignment_data_dir(tmp_path_factory) -> Path:
    """A data dir with the alignment-bugs corpus ingested and built."""
    data_dir = tmp_path_factory.mktemp("alignment-data")
    xml = (FIXTURES / "alignment_bugs.xml").read_text(encoding="utf-8")
    result = parse_bugzilla_xml(xml, "libreoffice")
    assert not result.issues
    BugStore(data_dir).store_bugs(result.bugs)
    artifacts.build_project(data_dir, "libreoffice")
    return data_dir
