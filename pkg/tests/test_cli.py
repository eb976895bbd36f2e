"""Command-line interface: exit codes, output formats, the live server.

Click 8.2+ keeps stdout and stderr separate in CliRunner results; human
diagnostics go to stderr, machine output (--json) to stdout.
"""
import json
import socket
import subprocess
import sys
import time
import urllib.request

import pytest
from click.testing import CliRunner

from artemus import BodyCategory, EdgeKind, serialize_graph
from artemus.cli import main
from artemus.datasets import dataset_bytes

from builders import lt, mk_edge, mk_graph, mk_node


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def housing_file(tmp_path):
    path = tmp_path / "housing.json"
    path.write_bytes(dataset_bytes("housing"))
    return str(path)


@pytest.fixture
def blanked_welsh_file(tmp_path):
    doc = json.loads(dataset_bytes("housing"))
    doc["nodes"][0]["title"]["cy"] = ""
    path = tmp_path / "blanked.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


class TestValidate:
    def test_publishable_file_passes(self, runner, housing_file):
        result = runner.invoke(main, ["validate", housing_file])
        assert result.exit_code == 0
        assert result.stderr == "0 error(s), 0 warning(s)\n"

    def test_blanked_welsh_fails_with_e004(self, runner, blanked_welsh_file):
        result = runner.invoke(main, ["validate", blanked_welsh_file])
        assert result.exit_code == 1
        assert "E004" in result.stderr
        assert "1 error(s), 0 warning(s)" in result.stderr

    def test_unparseable_file_exits_two(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_bytes(b"{nope")
        result = runner.invoke(main, ["validate", str(path)])
        assert result.exit_code == 2
        assert result.stderr.startswith("MalformedJson")

    def test_json_output(self, runner, blanked_welsh_file):
        result = runner.invoke(main, ["validate", blanked_welsh_file, "--json"])
        assert result.exit_code == 1
        doc = json.loads(result.output)
        assert doc["publishable"] is False
        assert [d["code"] for d in doc["diagnostics"]] == ["E004"]

    def test_json_output_for_parse_failure(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_bytes(b"{nope")
        result = runner.invoke(main, ["validate", str(path), "--json"])
        assert result.exit_code == 2
        doc = json.loads(result.output)
        assert doc["publishable"] is False
        assert doc["diagnostics"][0]["code"] == "MalformedJson"

    def test_strict_promotes_warnings(self, runner, tmp_path):
        # detail == summary is W001: fine normally, fatal under --strict.
        graph = mk_graph(
            nodes=[
                mk_node("a", detail=lt("summary a")),
                mk_node("end", BodyCategory.OUTCOME),
            ],
            edges=[mk_edge("go", "a", "end", EdgeKind.SIGNPOST)],
        )
        path = tmp_path / "warned.json"
        path.write_bytes(serialize_graph(graph))
        relaxed = runner.invoke(main, ["validate", str(path)])
        assert relaxed.exit_code == 0
        assert "W001" in relaxed.stderr
        strict = runner.invoke(main, ["validate", str(path), "--strict"])
        assert strict.exit_code == 1


class TestRoutes:
    def test_housing_route_listing(self, runner, housing_file):
        result = runner.invoke(main, ["routes", housing_file, "--entry", "homelessness-entry"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "get-advice => advice-service"
        assert (
            "reconsider -> county-appeal -> jr-admin-court => admin-court"
            "  [legal claim, tightest limit 21d]" in lines
        )
        assert lines[-1] == "7 routes"

    def test_depth_truncation_is_reported(self, runner, housing_file):
        result = runner.invoke(
            main, ["routes", housing_file, "--entry", "homelessness-entry", "--max-depth", "2"]
        )
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == "4 routes (some routes truncated at depth 2)"

    def test_unknown_entry_exits_one(self, runner, housing_file):
        result = runner.invoke(main, ["routes", housing_file, "--entry", "nope"])
        assert result.exit_code == 1
        assert "UnknownEntryPoint" in result.stderr

    def test_json_output(self, runner, housing_file):
        result = runner.invoke(
            main, ["routes", housing_file, "--entry", "homelessness-entry", "--json"]
        )
        doc = json.loads(result.output)
        assert len(doc["routes"]) == 7
        assert doc["depthExceeded"] is False
        first = doc["routes"][0]
        assert set(first) == {"entryPointId", "edges", "terminalNode", "abandoned", "flags"}

    def test_abandonments_flag(self, runner, housing_file):
        result = runner.invoke(
            main,
            ["routes", housing_file, "--entry", "homelessness-entry", "--include-abandonments"],
        )
        assert result.exit_code == 0
        assert "(no action) => la-homelessness  [abandoned]" in result.output.splitlines()
        assert result.output.splitlines()[-1] == "10 routes"


class TestSearch:
    def test_human_output(self, runner, housing_file):
        result = runner.invoke(
            main, ["search", housing_file, "I have just been made homeless", "--lang", "en"]
        )
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == (
            "homelessness-entry  score=4  (made homeless, homeless)"
        )

    def test_no_matches(self, runner, housing_file):
        result = runner.invoke(main, ["search", housing_file, "zzz qqq", "--lang", "en"])
        assert result.exit_code == 0
        assert result.output == "no matches\n"

    def test_json_output(self, runner, housing_file):
        result = runner.invoke(
            main, ["search", housing_file, "eviction", "--lang", "en", "--json"]
        )
        doc = json.loads(result.output)
        assert doc["matches"][0]["entryPointId"] == "homelessness-entry"


class TestExportDot:
    def test_deterministic_digraph(self, runner, housing_file):
        first = runner.invoke(main, ["export-dot", housing_file])
        second = runner.invoke(main, ["export-dot", housing_file])
        assert first.exit_code == 0
        assert first.output == second.output
        assert first.output.startswith('digraph "housing" {')
        assert 'kind="Complaint", legend="green"' in first.output
        assert '"la-review" -> "ombudsman"' in first.output


def _free_port():
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


class TestServe:
    def test_server_boots_and_answers(self):
        port = _free_port()
        process = subprocess.Popen(
            ["artemus", "serve", "--port", str(port)],
            stdout=subprocess.DEVNULL,
            stderr=subprocess.DEVNULL,
        )
        base = f"http://127.0.0.1:{port}"
        try:
            deadline = time.monotonic() + 20
            while True:
                try:
                    with urllib.request.urlopen(f"{base}/healthz", timeout=1) as response:
                        assert response.read() == b"ok"
                        break
                except OSError:
                    if time.monotonic() > deadline:
                        pytest.fail("server did not come up")
                    time.sleep(0.2)
            with urllib.request.urlopen(f"{base}/api/graphs", timeout=5) as response:
                listing = json.loads(response.read())
            assert [g["id"] for g in listing] == ["education", "housing"]
        finally:
            process.terminate()
            process.wait(timeout=10)
