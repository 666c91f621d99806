from __future__ import annotations

import shutil
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from retrorank import evalkit
from retrorank.cli import main
from retrorank.server import create_app

WEB_DIST = Path(__file__).resolve().parent.parent / "web" / "dist"


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture(scope="module")
def client(mini_data_dir):
    app = create_app(mini_data_dir)
    with TestClient(app) as test_client:
        yield test_client


class TestCli:
    def test_ingest_build_query_pipeline(self, runner, tmp_path, fixtures_dir):
        input_dir = tmp_path / "xml"
        input_dir.mkdir()
        shutil.copy(fixtures_dir / "mini_corpus.xml", input_dir)
        data_dir = tmp_path / "data"

        result = runner.invoke(main, [
            "ingest", "--input", str(input_dir), "--project", "mini",
            "--data-dir", str(data_dir),
        ])
        assert result.exit_code == 0, result.output
        assert "ingested 30 bugs" in result.output

        result = runner.invoke(main, ["build", "--project", "mini", "--data-dir", str(data_dir)])
        assert result.exit_code == 0, result.output
        assert "72 resolved comments" in result.output
        assert "converged=True" in result.output

        result = runner.invoke(main, [
            "query", "--project", "mini", "--mode", "vsm_sa_tr",
            "--data-dir", str(data_dir), "border", "render", "glitch",
        ])
        assert result.exit_code == 0, result.output
        assert "mini:1020" in result.output
        first_data_row = result.output.splitlines()[1]
        assert first_data_row.startswith("1")
        assert "mini:1020" in first_data_row

    def test_query_unbuilt_project_names_missing_stage(self, runner, tmp_path):
        result = runner.invoke(main, [
            "query", "--project", "ghost", "--data-dir", str(tmp_path), "anything",
        ])
        assert result.exit_code != 0
        assert "ingest" in result.output

    def test_query_unknown_mode_is_usage_error(self, runner, tmp_path):
        result = runner.invoke(main, [
            "query", "--project", "x", "--mode", "bm25", "--data-dir", str(tmp_path), "q",
        ])
        assert result.exit_code == 2

    def test_eval_positions_fixture_reproduces_footers(self, runner, fixtures_dir):
        result = runner.invoke(main, [
            "eval", "--positions", str(fixtures_dir / "eval1_positions.tsv"),
        ])
        assert result.exit_code == 0, result.output
        footer = next(
            line for line in result.output.splitlines() if line.startswith("mean_position")
        )
        for value in ("9.1", "3.4", "3.7", "1.8"):
            assert value in footer
        assert "H5" in result.output
        assert "Reject" in result.output

    def test_eval_report_byte_identical_across_runs(self, runner, fixtures_dir):
        args = ["eval", "--positions", str(fixtures_dir / "eval1_positions.tsv")]
        first = runner.invoke(main, args)
        second = runner.invoke(main, args)
        assert first.output == second.output

    def test_eval_over_goldset_runs_retrieval(self, runner, alignment_data_dir, fixtures_dir):
        result = runner.invoke(main, [
            "eval", "--project", "libreoffice",
            "--goldset", str(fixtures_dir / "goldset_alignment.tsv"),
            "--modes", "vsm,vsm_sa_tr",
            "--data-dir", str(alignment_data_dir),
        ])
        assert result.exit_code == 0, result.output
        assert "Q1" in result.output
        assert "mean_position" in result.output

    def test_eval_requires_input_source(self, runner):
        result = runner.invoke(main, ["eval"])
        assert result.exit_code == 2

    def test_query_modes_differ_on_planted_fixture(self, runner, mini_data_dir):
        base = ["--project", "mini", "--data-dir", str(mini_data_dir), "border", "render", "glitch"]
        vsm_result = runner.invoke(main, ["query", "--mode", "vsm", *base])
        full_result = runner.invoke(main, ["query", "--mode", "vsm_sa_tr", *base])
        vsm_first = vsm_result.output.splitlines()[1]
        full_first = full_result.output.splitlines()[1]
        assert "mini:1010" in vsm_first
        assert "mini:1020" in full_first


class TestHttpApi:
    def test_health(self, client):
        payload = client.get("/api/health").json()
        assert payload["status"] == "ok"
        assert payload["projects"] == ["mini"]
        assert payload["blind"] is False
        assert [m["id"] for m in payload["modes"]] == ["vsm", "vsm_sa", "vsm_tr", "vsm_sa_tr"]

    def test_query_returns_ranked_results(self, client):
        response = client.post("/api/query", json={
            "project": "mini", "query_text": "border render glitch",
            "mode": "vsm_sa_tr", "top_k": 10,
        })
        assert response.status_code == 200
        payload = response.json()
        assert payload["no_match"] is False
        assert payload["elapsed_ms"] >= 0
        assert payload["results"][0]["bug_id"] == 1020
        assert payload["results"][0]["rank"] == 1
        assert len(payload["results"]) <= 10

    def test_query_is_deterministic_modulo_timing(self, client):
        request = {"project": "mini", "query_text": "document patch", "mode": "vsm_sa_tr", "top_k": 10}
        a = client.post("/api/query", json=request).json()
        b = client.post("/api/query", json=request).json()
        a.pop("elapsed_ms")
        b.pop("elapsed_ms")
        assert a == b

    def test_query_no_match(self, client):
        payload = client.post("/api/query", json={
            "project": "mini", "query_text": "zzzz qqqq",
        }).json()
        assert payload["no_match"] is True
        assert payload["results"] == []

    def test_query_unknown_project_404(self, client):
        response = client.post("/api/query", json={"project": "nope", "query_text": "x"})
        assert response.status_code == 404

    def test_query_invalid_mode_422(self, client):
        response = client.post("/api/query", json={
            "project": "mini", "query_text": "x", "mode": "bm25",
        })
        assert response.status_code == 422

    def test_rating_out_of_range_rejected(self, client):
        response = client.post("/api/ratings", json={
            "rater_id": "p1", "query_text": "q",
            "ref": {"project": "mini", "bug_id": 1001, "comment_id": 1},
            "score": 5,
        })
        assert response.status_code == 422

    def test_rating_round_trip_and_summary(self, client):
        for score in (4, 3, 3, 4):
            response = client.post("/api/ratings", json={
                "rater_id": "p1", "query_text": "border render glitch",
                "ref": {"project": "mini", "bug_id": 1020, "comment_id": 2},
                "score": score,
            })
            assert response.status_code == 200

        exported = client.get("/api/ratings/export").json()
        scores = [r["score"] for r in exported]
        assert scores == [4, 3, 3, 4]
        assert exported[0]["rater_id"] == "p1"
        assert exported[0]["ref"] == {"project": "mini", "bug_id": 1020, "comment_id": 2}
        assert evalkit.summary([float(s) for s in scores]).mean == pytest.approx(3.5)

    def test_export_is_append_only_monotone(self, client):
        before = client.get("/api/ratings/export").json()
        client.post("/api/ratings", json={
            "rater_id": "p2", "query_text": "q",
            "ref": {"project": "mini", "bug_id": 1001, "comment_id": 0},
            "score": 2,
        })
        after = client.get("/api/ratings/export").json()
        assert after[: len(before)] == before
        assert len(after) == len(before) + 1

    def test_get_bug(self, client):
        payload = client.get("/api/bugs/mini/1020").json()
        assert payload["bug_id"] == 1020
        assert payload["status"] == "RESOLVED"
        assert len(payload["comments"]) == 4
        assert payload["comments"][2]["text"] == "Border render glitch fixed"

    def test_get_bug_not_found(self, client):
        assert client.get("/api/bugs/mini/99999").status_code == 404
        assert client.get("/api/bugs/ghost/1").status_code == 404


class TestBlindAndStatic:
    def test_blind_flag_hides_mode_names(self, mini_data_dir):
        app = create_app(mini_data_dir, blind=True)
        with TestClient(app) as client:
            payload = client.get("/api/health").json()
        assert payload["blind"] is True
        labels = [m["label"] for m in payload["modes"]]
        assert labels == ["Tool A", "Tool B"]
        assert all("vsm" not in label for label in labels)

    def test_api_works_without_web_bundle(self, mini_data_dir):
        app = create_app(mini_data_dir, web_dir=None)
        with TestClient(app) as client:
            assert client.get("/api/health").status_code == 200

    @pytest.mark.skipif(not WEB_DIST.is_dir(), reason="web bundle not built")
    def test_web_bundle_served_at_root(self, mini_data_dir):
        app = create_app(mini_data_dir, web_dir=WEB_DIST)
        with TestClient(app) as client:
            page = client.get("/")
            assert page.status_code == 200
            assert "results-table" in page.text
            assert client.get("/js/main.js").status_code == 200
            assert client.get("/api/health").status_code == 200
