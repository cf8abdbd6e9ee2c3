#!/usr/bin/env python3
"""Regenerate the expected-output files bundled with the fixtures.

Each entry of ``fixtures/expected/manifest.json`` names one CLI
invocation and the file its stdout is frozen into.  Run this after a
deliberate output-format change, eyeball the diff, and commit.
"""

from __future__ import annotations

import contextlib
import io
import json
from pathlib import Path

import res
from res import cli

EXPECTED = Path(res.__file__).parent / "fixtures" / "expected"


def run_case(case: dict) -> str:
    fixture = str(res.fixture_path(case["fixture"]))
    argv = [fixture if part == "<fixture>" else part for part in case["argv"]]
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = cli.main(argv)
    if code != 0:
        raise SystemExit(f"{case['output']}: exit code {code}")
    return out.getvalue()


def main() -> None:
    manifest = json.loads((EXPECTED / "manifest.json").read_text())
    for case in manifest:
        target = EXPECTED / case["output"]
        content = run_case(case)
        changed = not target.exists() or target.read_text() != content
        target.write_text(content)
        print(("wrote " if changed else "kept  ") + case["output"])


if __name__ == "__main__":
    main()
