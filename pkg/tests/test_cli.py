"""CLI surface tests, both in-process and against a live server."""

import socket
import threading
import time

import pytest
import uvicorn

from avgorder.cli import main


class TestStats:
    def test_entry(self, capsys):
        assert main(["stats", "A4"]) == 0
        out = capsys.readouterr().out
        assert "31/12" in out and "2.583333" in out

    def test_entry_by_key(self, capsys):
        assert main(["stats", "12/5"]) == 0
        assert "A4" in capsys.readouterr().out

    def test_inline(self, capsys):
        assert main(["stats", "--gen", "(0 1 2)", "--gen", "(0 1)", "--degree", "3"]) == 0
        assert "order 6" in capsys.readouterr().out

    def test_unknown_entry(self, capsys):
        assert main(["stats", "Zilch"]) == 1
        assert "error:" in capsys.readouterr().err


class TestClassifyVerifyBounds:
    def test_classify(self, capsys):
        assert main(["classify", "D8"]) == 0
        out = capsys.readouterr().out
        assert "TwoGroupCase" in out and "19/8" in out

    def test_verify_a5_spot_check(self, capsys):
        # A5 is past the catalog range; the family route covers it
        assert main(["verify", "--family", "alternating", "--params", "5"]) == 0
        out = capsys.readouterr().out
        assert "211/60" in out and "above" in out

    def test_bounds(self, capsys):
        assert main(["bounds", "A4"]) == 0
        out = capsys.readouterr().out
        assert "spectrum_123_frobenius" in out and "holds" in out


class TestFamilies:
    def test_listing(self, capsys):
        assert main(["families"]) == 0
        assert "frobenius32" in capsys.readouterr().out

    def test_construct(self, capsys):
        assert main(["families", "frobenius32", "4"]) == 0
        assert "order 162" in capsys.readouterr().out

    def test_max_order_flag(self, capsys):
        assert main(["--max-order", "100", "families", "frobenius32", "5"]) == 1
        assert "error:" in capsys.readouterr().err


class TestCensus:
    def test_table(self, capsys):
        assert main(["census"]) == 0
        out = capsys.readouterr().out
        assert "A4" in out and "equal" in out

    def test_structured_deterministic(self, capsys):
        assert main(["census", "--format", "structured"]) == 0
        first = capsys.readouterr().out
        assert main(["census", "--format", "structured", "--jobs", "3"]) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_custom_threshold(self, capsys):
        assert main(["census", "--threshold", "211/60", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out.count("below") > 10

    def test_catalog_listing(self, capsys):
        assert main(["catalog"]) == 0
        assert "92 entries" in capsys.readouterr().out

    def test_custom_catalog_file(self, capsys, tmp_path):
        path = tmp_path / "two_groups.txt"
        path.write_text("3/1/C3/3\n(0 1 2)\n\n6/1/S3/3\n(0 1 2)\n(0 1)\n")
        assert main(["--catalog", str(path), "census", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out.count("\n") == 3  # header + two rows
        assert main(["--catalog", str(path), "stats", "S3"]) == 0
        assert "13/6" in capsys.readouterr().out


@pytest.fixture(scope="module")
def live_server():
    from avgorder.service.app import create_app

    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    config = uvicorn.Config(create_app(), host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 10
    while not server.started:
        if time.time() > deadline:
            raise RuntimeError("server did not start")
        time.sleep(0.05)
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=5)


class TestRemoteMode:
    def test_stats_over_http(self, live_server, capsys):
        assert main(["--server", live_server, "stats", "A4"]) == 0
        assert "31/12" in capsys.readouterr().out

    def test_census_over_http_matches_local(self, live_server, capsys):
        assert main(["census", "--format", "structured"]) == 0
        local = capsys.readouterr().out
        assert main(["--server", live_server, "census", "--format", "structured"]) == 0
        remote = capsys.readouterr().out
        assert local == remote

    def test_server_error_surfaces(self, live_server, capsys):
        assert main(["--server", live_server, "stats", "Zilch"]) == 1
        assert "error:" in capsys.readouterr().err
