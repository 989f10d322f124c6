"""Running THF problems through external reasoners and reading SZS verdicts.

Two kinds of prover are supported.  A ``local-binary`` prover is a
command template with ``{file}`` and optionally ``{timeout}``
placeholders.  A ``remote-http`` prover POSTs the problem text as form
fields in the style of SystemOnTPTP; the endpoint comes from the
template or from the ``CONDHOL_REMOTE_URL`` environment variable.

Each cell is bounded by its timeout plus :data:`GRACE` seconds.
External provers are optional; nothing else in the package needs them.
"""
from __future__ import annotations

import enum
import json
import os
import re
import shlex
import signal
import subprocess
import time
import urllib.error
import urllib.parse
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
from pathlib import Path

__all__ = ["SzsStatus", "ProverConfig", "ProverResult", "parse_szs", "dispatch",
           "run_suite", "load_registry", "format_report", "GRACE", "URL_ENV",
           "DEFINITIVE"]

GRACE = 2.0
URL_ENV = "CONDHOL_REMOTE_URL"


class SzsStatus(enum.Enum):
    THEOREM = "Theorem"
    COUNTER_SATISFIABLE = "CounterSatisfiable"
    SATISFIABLE = "Satisfiable"
    UNKNOWN = "Unknown"
    TIMEOUT = "Timeout"
    ERROR = "Error"

    @property
    def short(self) -> str:
        return _SHORT.get(self, self.value)


_SHORT = {SzsStatus.THEOREM: "THM", SzsStatus.COUNTER_SATISFIABLE: "CSA",
          SzsStatus.SATISFIABLE: "SAT"}
DEFINITIVE = frozenset(_SHORT)

_SZS = re.compile(r"SZS\s+status\s+([A-Za-z]+)")


def parse_szs(output: str) -> SzsStatus:
    """Status from the first ``SZS status <Word>`` line; anything else is Unknown."""
    m = _SZS.search(output or "")
    if not m:
        return SzsStatus.UNKNOWN
    word = m.group(1)
    for s in (SzsStatus.THEOREM, SzsStatus.COUNTER_SATISFIABLE, SzsStatus.SATISFIABLE):
        if word == s.value:
            return s
    return SzsStatus.UNKNOWN


@dataclass(frozen=True)
class ProverConfig:
    name: str
    kind: str
    invocation: str
    timeout_seconds: int = 60
    system: str | None = None  # remote system name; defaults to ``name``

    def __post_init__(self):
        if self.kind not in ("local-binary", "remote-http"):
            raise ValueError(f"{self.name}: kind must be local-binary or remote-http")
        if not isinstance(self.timeout_seconds, int) or self.timeout_seconds <= 0:
            raise ValueError(f"{self.name}: timeout must be a positive integer")
        if self.kind == "local-binary" and "{file}" not in self.invocation:
            raise ValueError(f"{self.name}: command template needs a {{file}} placeholder")
        if self.kind == "remote-http" and not re.match(r"https?://", self.invocation):
            raise ValueError(f"{self.name}: remote invocation must be an http(s) URL")


@dataclass(frozen=True)
class ProverResult:
    status: SzsStatus
    wall_time: float
    message: str = ""


def _run_local(path: Path, cfg: ProverConfig) -> tuple[SzsStatus, str]:
    argv = [a.format(file=str(path), timeout=cfg.timeout_seconds)
            for a in shlex.split(cfg.invocation)]
    try:
        proc = subprocess.Popen(argv, stdout=subprocess.PIPE, stderr=subprocess.STDOUT,
                                text=True, start_new_session=True)
    except OSError as e:
        return SzsStatus.ERROR, f"cannot start {argv[0]}: {e}"
    try:
        out, _ = proc.communicate(timeout=cfg.timeout_seconds)
    except subprocess.TimeoutExpired:
        try:
            os.killpg(proc.pid, signal.SIGKILL)
        except ProcessLookupError:
            pass
        try:
            proc.communicate(timeout=GRACE)
        except subprocess.TimeoutExpired:
            pass
        return SzsStatus.TIMEOUT, ""
    return parse_szs(out), out


def _run_remote(path: Path, cfg: ProverConfig) -> tuple[SzsStatus, str]:
    url = os.environ.get(URL_ENV) or cfg.invocation
    system = cfg.system or cfg.name
    fields = {
        "ProblemSource": "FORMULAE",
        "FORMULAEProblem": path.read_text(encoding="utf-8"),
        "QuietFlag": "-q01",
        "SubmitButton": "RunSelectedSystems",
        f"System___{system}": system,
        f"TimeLimit___{system}": str(cfg.timeout_seconds),
    }
    data = urllib.parse.urlencode(fields).encode()
    req = urllib.request.Request(url, data=data, method="POST")
    try:
        with urllib.request.urlopen(req, timeout=cfg.timeout_seconds + GRACE / 2) as resp:
            body = resp.read().decode("utf-8", "replace")
    except TimeoutError:
        return SzsStatus.TIMEOUT, ""
    except urllib.error.URLError as e:
        if isinstance(e.reason, TimeoutError):
            return SzsStatus.TIMEOUT, ""
        return SzsStatus.ERROR, f"request failed: {e.reason}"
    except OSError as e:
        return SzsStatus.ERROR, f"request failed: {e}"
    return parse_szs(body), body


def dispatch(problem_file, cfg: ProverConfig) -> ProverResult:
    """Run one problem; never raises and never outlives timeout + grace."""
    path = Path(problem_file)
    t0 = time.perf_counter()
    if not path.is_file():
        return ProverResult(SzsStatus.ERROR, 0.0, f"no such problem file: {path}")
    run = _run_local if cfg.kind == "local-binary" else _run_remote
    status, out = run(path, cfg)
    msg = out if status is SzsStatus.ERROR else ""
    return ProverResult(status, time.perf_counter() - t0, msg)


def load_registry(path) -> list[ProverConfig]:
    """Read ``{"provers": [{name, kind, invocation, timeout, system?}, ...]}``."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    items = data["provers"] if isinstance(data, dict) else data
    return [ProverConfig(d["name"], d["kind"], d["invocation"], int(d.get("timeout", 60)),
                         d.get("system")) for d in items]


def _row(entry, cells) -> dict:
    definitive = {c["status"] for c in cells.values() if c["status"] in ("THM", "CSA", "SAT")}
    expected = entry["expected"]
    mismatch = expected != "Unknown" and any(s != expected for s in definitive)
    votes = [c["status"] for c in cells.values() if c["status"] in ("THM", "CSA", "SAT")]
    return {
        "name": entry["name"],
        "expected": expected,
        "cells": cells,
        "confirmed": bool(definitive),
        "agrees": bool(definitive) and not mismatch if expected != "Unknown" else None,
        "mismatch": mismatch,
        "conflict": len(definitive) > 1,
        "matching_results": max((votes.count(s) for s in definitive), default=0),
    }


def run_suite(manifest, provers: list[ProverConfig], max_workers: int = 4,
              names=None) -> dict:
    """Dispatch every (problem, prover) cell with bounded concurrency."""
    entries = [e for e in manifest if names is None or e["name"] in names]
    jobs = [(e, p) for e in entries for p in provers]
    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as pool:
        results = list(pool.map(lambda job: dispatch(job[0]["path"], job[1]), jobs))
    cells: dict[str, dict] = {e["name"]: {} for e in entries}
    for (e, p), r in zip(jobs, results):
        cells[e["name"]][p.name] = {"status": r.status.short, "time": round(r.wall_time, 3),
                                    "message": r.message[:500]}
    rows = [_row(e, cells[e["name"]]) for e in entries]
    return {
        "provers": [asdict(p) for p in provers],
        "rows": rows,
        "summary": {
            "problems": len(rows),
            "confirmed": sum(r["confirmed"] for r in rows),
            "mismatches": sum(r["mismatch"] for r in rows),
            "conflicts": sum(r["conflict"] for r in rows),
            "two_or_more_matching": sum(r["matching_results"] >= 2 for r in rows),
        },
    }


def format_report(report: dict) -> str:
    names = [p["name"] for p in report["provers"]]
    head = ["Problem", "Expected"] + names + ["Flags"]
    body = []
    for r in report["rows"]:
        cells = [f"{r['cells'][n]['status']} {r['cells'][n]['time']:.2f}" for n in names]
        flags = [f for f, on in (("MISMATCH", r["mismatch"]), ("CONFLICT", r["conflict"])) if on]
        body.append([r["name"], r["expected"]] + cells + [",".join(flags)])
    widths = [max(len(str(x)) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip()
             for row in [head] + body]
    s = report["summary"]
    lines.append(f"{s['problems']} problems, {s['confirmed']} confirmed, "
                 f"{s['mismatches']} mismatches, {s['conflicts']} conflicts")
    return "\n".join(lines)
