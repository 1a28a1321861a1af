"""Run the acceptance suite and print its PASS/FAIL lines."""
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-s", "tests/test_acceptance.py"],
                          cwd=ROOT, capture_output=True, text=True)
    lines = [ln for ln in proc.stdout.splitlines() if ln.startswith(("[PASS]", "[FAIL]"))]
    for ln in dict.fromkeys(lines):
        print(ln)
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
