"""
Regenerate the golden reports used by the CLI tests.

Runs every command listed in tests/golden/commands.json through the CLI and
writes its report next to it as <name>.json, or <name>.csv for commands with
``"format": "csv"``. Commands with a ``state_file`` entry first run that
command and pass its output file in place of ``{state_file}``. Keys listed
under ``unchecked`` are dropped from the frozen report. Review the diff before
committing: goldens are the reference values the test suite checks against.
"""

import contextlib
import io
import json
import os
import sys
import tempfile
from typing import Any, Dict, List

# Add parent directory to path to import project modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from entgeo.main import run

GOLDEN_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "tests", "golden"
)


def load_commands() -> List[Dict[str, Any]]:
    with open(os.path.join(GOLDEN_DIR, "commands.json"), "r", encoding="utf-8") as f:
        return json.load(f)


def capture(name: str, argv: List[str]) -> str:
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = run(argv)
    if code != 0:
        raise RuntimeError(f"{name} exited with status {code}")
    return buffer.getvalue()


def freeze(command: Dict[str, Any], workdir: str) -> str:
    argv = command["argv"]
    if "state_file" in command:
        state_path = os.path.join(workdir, f"{command['name']}.state.json")
        with open(state_path, "w", encoding="utf-8") as f:
            f.write(capture(command["name"], command["state_file"]))
        argv = [state_path if arg == "{state_file}" else arg for arg in argv]
    output = capture(command["name"], argv)

    if command.get("format") == "csv":
        path = os.path.join(GOLDEN_DIR, f"{command['name']}.csv")
    else:
        path = os.path.join(GOLDEN_DIR, f"{command['name']}.json")
        unchecked = command.get("unchecked", [])
        if unchecked:
            report = json.loads(output)
            output = json.dumps({k: v for k, v in report.items() if k not in unchecked}, indent=2) + "\n"
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(output)
    return path


def main():
    commands = load_commands()
    with tempfile.TemporaryDirectory() as workdir:
        for command in commands:
            path = freeze(command, workdir)
            print(f"✓ {' '.join(command['argv'])} -> {path}")
    print(f"  {len(commands)} goldens written")


if __name__ == "__main__":
    main()
