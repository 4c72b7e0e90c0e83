"""The thirteen acceptance criteria, one test and one printed line each.

C1-C12 are the exact verification battery from quantcat.selftest, run
here at full budget with the default seed; C13 drives the installed CLI
end to end: deterministic reports and a presheaf fragment that parses
back to the category it came from.  Every comparison is exact equality.
"""

import json
import subprocess
import sys

import pytest

from quantcat import selftest
from quantcat.cli import parse_workspace


def _settle(result):
    line = f"{result['name']} {result['label']}: {result['verdict'].upper()}"
    if result["witness"]:
        line += f"  ({result['witness']})"
    print(line)
    assert result["verdict"] == "pass", result


@pytest.mark.parametrize("criterion", selftest.CRITERIA,
                         ids=[f"C{i}" for i in range(1, 13)])
def test_criterion(criterion):
    _settle(criterion())


def _cli(*argv, cwd=None):
    return subprocess.run([sys.executable, "-m", "quantcat.cli", *argv],
                          capture_output=True, text=True, cwd=cwd)


def test_c13_cli_round_trip(tmp_path):
    ws = tmp_path / "ws.json"
    ws.write_text(json.dumps({
        "quantales": [{"name": "B", "kind": "boolean2"}],
        "categories": [{"name": "C2", "quantale": "B",
                        "objects": ["p", "q"], "hom": [[1, 1], [0, 1]]}],
    }))

    first = _cli("selftest", "--format", "json")
    second = _cli("selftest", "--format", "json")
    ok = first.returncode == second.returncode == 0
    ok = ok and first.stdout == second.stdout
    verdicts = [c["verdict"] for c in json.loads(first.stdout)["checks"]] \
        if ok else []
    ok = ok and verdicts == ["pass"] * 12

    emitted = _cli("compute", "presheaf", "--category", "C2",
                   "--format", "json", "--workspace", str(ws))
    ok = ok and emitted.returncode == 0
    if ok:
        fragment = json.loads(emitted.stdout)["workspace"]
        frag_path = tmp_path / "frag.json"
        frag_path.write_text(json.dumps(fragment))
        back = parse_workspace(str(frag_path))
        ok = ok and not back.failures
        orig = parse_workspace(str(ws)).category("C2")
        PX = back.category("P(C2)")
        y = back.functor("y_C2")
        ok = ok and back.category("C2").same_shape(orig)
        ok = ok and PX.objects == ("[0,0]", "[1,0]", "[1,1]")
        ok = ok and y.dom.same_shape(orig) and y.cod.same_shape(PX)
        ok = ok and [y.on_label(x) for x in orig.objects] == ["[1,0]", "[1,1]"]

    print(f"C13 CLI determinism and workspace round-trip: "
          f"{'PASS' if ok else 'FAIL'}")
    assert ok
