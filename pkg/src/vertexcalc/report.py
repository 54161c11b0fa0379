"""Check scheduling and deterministic reports.

A Check is a named, lazily evaluated verification instance.  Results
keep per-check wall time for the human table, but the JSON report
contains no timing, so fixed parameters give byte-identical files no
matter how many worker threads ran the sweep.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from time import perf_counter
from typing import Callable, Optional

from . import __version__


@dataclass
class Check:
    ident: str
    instance: str
    fn: Callable


@dataclass
class CheckResult:
    ident: str
    instance: str
    status: str
    witness: Optional[str]
    seconds: float


def _run_one(chk: Check) -> CheckResult:
    t0 = perf_counter()
    try:
        out = chk.fn()
    except Exception as exc:
        return CheckResult(chk.ident, chk.instance, "fail",
                           f"error: {exc!r}", perf_counter() - t0)
    ok, witness = out if isinstance(out, tuple) else (out, None)
    if not ok and witness is None:
        witness = "sides differ"
    return CheckResult(chk.ident, chk.instance, "pass" if ok else "fail",
                       witness, perf_counter() - t0)


def run_checks(checks, threads: int = 1) -> list[CheckResult]:
    """Run every check, preserving the announced order in the output."""
    if threads <= 1:
        return [_run_one(c) for c in checks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run_one, checks))


def report_dict(suite: str, params: dict, results) -> dict:
    entries = []
    for r in results:
        e = {"id": r.ident, "instance": r.instance, "status": r.status}
        if r.witness is not None:
            e["witness"] = r.witness
        entries.append(e)
    passed = sum(1 for r in results if r.status == "pass")
    return {
        "suite": suite,
        "params": {k: params[k] for k in sorted(params) if params[k] is not None},
        "engine": __version__,
        "entries": entries,
        "summary": {"total": len(results), "passed": passed,
                    "failed": len(results) - passed},
    }


def report_json(suite: str, params: dict, results) -> str:
    return json.dumps(report_dict(suite, params, results),
                      sort_keys=True, separators=(",", ":")) + "\n"


def render_human(suite: str, results, elapsed: float) -> str:
    lines = []
    width = max((len(r.ident) for r in results), default=0)
    for r in results:
        mark = "pass" if r.status == "pass" else "FAIL"
        line = f"  {mark}  {r.ident.ljust(width)}  {r.instance}  ({r.seconds:.2f}s)"
        if r.status != "pass" and r.witness:
            line += f"\n        {r.witness}"
        elif r.witness:
            line += f"  [{r.witness}]"
        lines.append(line)
    passed = sum(1 for r in results if r.status == "pass")
    failed = len(results) - passed
    lines.append(f"{suite}: {passed} passed, {failed} failed in {elapsed:.1f}s")
    return "\n".join(lines)
