import json
import sys
import threading
import time
import urllib.parse
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from condhol.prover import (GRACE, URL_ENV, ProverConfig, SzsStatus, dispatch, format_report,
                            load_registry, parse_szs, run_suite)


@pytest.mark.parametrize("text, status", [
    ("% SZS status Theorem for P1", SzsStatus.THEOREM),
    ("foo\n# SZS status CounterSatisfiable for x\n", SzsStatus.COUNTER_SATISFIABLE),
    ("SZS status Satisfiable", SzsStatus.SATISFIABLE),
    ("SZS status GaveUp", SzsStatus.UNKNOWN),
    ("SZS status Timeout", SzsStatus.UNKNOWN),
    ("no verdict", SzsStatus.UNKNOWN),
    ("", SzsStatus.UNKNOWN),
    ("SZS status Theorem\nSZS status CounterSatisfiable", SzsStatus.THEOREM),
])
def test_parse_szs(text, status):
    assert parse_szs(text) is status


def test_short_names():
    assert [s.short for s in SzsStatus] == ["THM", "CSA", "SAT", "Unknown", "Timeout", "Error"]


def _fake(tmp_path, name, body):
    script = tmp_path / f"{name}.py"
    script.write_text("import sys, time\n" + body + "\n")
    return ProverConfig(name, "local-binary", f"{sys.executable} {script} {{file}}", 3)


@pytest.fixture
def problem(tmp_path):
    p = tmp_path / "x.p"
    p.write_text("thf(conj, conjecture, $true).\n")
    return p


def test_local_prover(tmp_path, problem):
    cfg = _fake(tmp_path, "says_thm", "print('% SZS status Theorem for', sys.argv[1])")
    r = dispatch(problem, cfg)
    assert r.status is SzsStatus.THEOREM and r.wall_time < 3


def test_local_timeout_is_bounded(tmp_path, problem):
    cfg = _fake(tmp_path, "sleeper", "time.sleep(60)")
    cfg = ProverConfig(cfg.name, cfg.kind, cfg.invocation, 1)
    t0 = time.perf_counter()
    r = dispatch(problem, cfg)
    assert r.status is SzsStatus.TIMEOUT
    assert time.perf_counter() - t0 < 1 + GRACE


def test_missing_file_is_error(tmp_path):
    cfg = _fake(tmp_path, "says_thm", "print('SZS status Theorem')")
    r = dispatch(tmp_path / "nope.p", cfg)
    assert r.status is SzsStatus.ERROR and "nope.p" in r.message


def test_missing_binary_is_error(problem):
    r = dispatch(problem, ProverConfig("ghost", "local-binary", "/no/such/prover {file}", 2))
    assert r.status is SzsStatus.ERROR


@pytest.mark.parametrize("kwargs", [
    dict(kind="shell", invocation="x {file}"),
    dict(kind="local-binary", invocation="x"),
    dict(kind="remote-http", invocation="ftp://host"),
    dict(kind="local-binary", invocation="x {file}", timeout_seconds=0),
])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        ProverConfig("p", **kwargs)


class _Handler(BaseHTTPRequestHandler):
    seen: list = []

    def do_POST(self):
        n = int(self.headers["Content-Length"])
        fields = urllib.parse.parse_qs(self.rfile.read(n).decode())
        _Handler.seen.append(fields)
        body = b"% SZS status CounterSatisfiable for problem\n"
        self.send_response(200)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture
def server():
    srv = HTTPServer(("127.0.0.1", 0), _Handler)
    t = threading.Thread(target=srv.serve_forever, daemon=True)
    t.start()
    yield f"http://127.0.0.1:{srv.server_port}/run"
    srv.shutdown()


def test_remote_prover(server, problem, monkeypatch):
    monkeypatch.delenv(URL_ENV, raising=False)
    cfg = ProverConfig("Leo", "remote-http", server, 5, system="LEO-II---1.7")
    r = dispatch(problem, cfg)
    assert r.status is SzsStatus.COUNTER_SATISFIABLE
    fields = _Handler.seen[-1]
    assert fields["System___LEO-II---1.7"] == ["LEO-II---1.7"]
    assert fields["TimeLimit___LEO-II---1.7"] == ["5"]
    assert "conjecture" in fields["FORMULAEProblem"][0]


def test_remote_url_from_environment(server, problem, monkeypatch):
    monkeypatch.setenv(URL_ENV, server)
    cfg = ProverConfig("Leo", "remote-http", "http://127.0.0.1:9/unused", 5)
    assert dispatch(problem, cfg).status is SzsStatus.COUNTER_SATISFIABLE


def test_remote_unreachable_is_error(problem, monkeypatch):
    monkeypatch.delenv(URL_ENV, raising=False)
    cfg = ProverConfig("Leo", "remote-http", "http://127.0.0.1:9/run", 2)
    assert dispatch(problem, cfg).status is SzsStatus.ERROR


def test_registry(tmp_path):
    reg = tmp_path / "provers.json"
    reg.write_text(json.dumps({"provers": [
        {"name": "a", "kind": "local-binary", "invocation": "a {file}", "timeout": 7},
        {"name": "b", "kind": "remote-http", "invocation": "https://x/y", "system": "B"},
    ]}))
    a, b = load_registry(reg)
    assert a.timeout_seconds == 7 and b.timeout_seconds == 60 and b.system == "B"


def _manifest(tmp_path, rows):
    out = []
    for name, expected in rows:
        p = tmp_path / f"{name}.p"
        p.write_text(f"% Problem  : {name}\n")
        out.append({"name": name, "expected": expected, "path": str(p)})
    return out


def test_run_suite_flags(tmp_path):
    # the first prover answers THM for everything, the second CSA for names
    # containing "fwd" and THM otherwise
    thm = _fake(tmp_path, "thm", "print('SZS status Theorem')")
    mixed = _fake(tmp_path, "mixed",
                  "print('SZS status', 'CounterSatisfiable' if 'fwd' in sys.argv[1] else 'Theorem')")
    quiet = _fake(tmp_path, "quiet", "print('gave up')")
    m = _manifest(tmp_path, [("a_bwd", "THM"), ("b_fwd", "CSA"), ("c_fwd", "Unknown")])
    report = run_suite(m, [thm, mixed, quiet], max_workers=3)
    rows = {r["name"]: r for r in report["rows"]}
    assert rows["a_bwd"]["agrees"] and not rows["a_bwd"]["conflict"]
    assert rows["a_bwd"]["matching_results"] == 2
    assert rows["b_fwd"]["mismatch"] and rows["b_fwd"]["conflict"]
    assert rows["c_fwd"]["conflict"] and not rows["c_fwd"]["mismatch"]
    assert rows["c_fwd"]["agrees"] is None
    assert rows["a_bwd"]["cells"]["quiet"]["status"] == "Unknown"
    s = report["summary"]
    assert (s["problems"], s["confirmed"], s["mismatches"], s["conflicts"]) == (3, 3, 1, 2)
    text = format_report(report)
    assert "MISMATCH,CONFLICT" in text and text.splitlines()[0].startswith("Problem")


def test_run_suite_subset_and_concurrency(tmp_path):
    slow = _fake(tmp_path, "slow", "time.sleep(0.5); print('SZS status Theorem')")
    m = _manifest(tmp_path, [(f"p{k}", "THM") for k in range(4)])
    t0 = time.perf_counter()
    report = run_suite(m, [slow], max_workers=4)
    assert time.perf_counter() - t0 < 1.8
    assert report["summary"]["confirmed"] == 4
    assert run_suite(m, [slow], names={"p1"})["summary"]["problems"] == 1
