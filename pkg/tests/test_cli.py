import io
import json
import subprocess
import sys

import pytest

from hooklength.cli import run
from hooklength.verify import VerificationReport


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_enum_example():
    code, out, err = call("verify", "--id", "postnikov-19", "--n-max", "6", "--mode", "enum")
    lines = out.splitlines()
    assert code == 0 and err == ""
    assert len(lines) == 6 and all(line.startswith("pass postnikov-19 ") for line in lines)
    assert lines[2] == "pass postnikov-19 n=3 mode=enum: lhs=16 rhs=16"


def test_enum_hooks_example():
    code, out, _ = call("enum", "--family", "plane-tree", "--n", "3", "--hooks")
    assert code == 0
    assert out.splitlines() == ["((()))\t{3,2,1}", "(()())\t{3,1,1}"]


def test_enum_weights():
    code, out, _ = call("enum", "--family", "binary", "--n", "3", "--weights", "postnikov-19")
    assert code == 0
    products = sorted(line.split("\t")[1] for line in out.splitlines())
    assert products == ["16/3", "4", "4", "4", "4"]
    code, out, _ = call("enum", "--family", "kary", "--k", "2", "--n", "2", "--weights", "kary-18",
                        "--subst", "a=1,z=2")
    assert code == 0 and len(out.splitlines()) == 2


def test_derive_rho_example():
    code, out, _ = call("derive-rho", "--family", "kary", "--k", "2", "--series", "exp", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["rho(1) = 1", "rho(2) = 1/4", "rho(3) = 1/12"]
    code, out, _ = call("derive-rho", "--family", "plane-forest", "--series", "coeffs:1,1,1/2,1/6", "--n", "3")
    assert out.splitlines() == ["rho(1) = 1", "rho(2) = -1/2", "rho(3) = 1/3"]
    code, out, _ = call("derive-rho", "--family", "labeled-forest", "--series", "id:f-25", "--n", "1")
    assert out.strip() == "rho(1) = z*a"


def test_series_and_rebuild():
    code, out, _ = call("series", "--id", "pt-10", "--n", "3")
    assert code == 0 and out.splitlines() == ["[x^0] 0", "[x^1] 1", "[x^2] 1/2", "[x^3] 1/2"]
    code, out, _ = call("series", "--id", "kary-18", "--k", "2", "--n", "1", "--subst", "a=2,z=3")
    assert out.splitlines() == ["[x^0] 1", "[x^1] 6"]
    code, out, _ = call("rebuild", "--family", "plane-tree", "--weights", "pt-10", "--n", "3")
    assert code == 0 and out.splitlines()[-1] == "[x^3] 1/2"


def test_registry():
    code, out, _ = call("registry", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 30
    code, out, _ = call("registry")
    assert out.splitlines()[0].startswith("kary-18\tkary\tsum\t")


def test_json_lines_round_trip():
    code, out, _ = call("verify", "--id", "f-25", "--n-max", "3", "--mode", "enum", "--subst", "a=1/2,z=3", "--json")
    assert code == 0
    for line in out.splitlines():
        d = json.loads(line)
        assert list(d) == ["id", "n", "mode", "subst", "lhs", "rhs", "pass", "micros"]
        assert isinstance(d["n"], int) and isinstance(d["pass"], bool) and isinstance(d["micros"], int)
        assert d["subst"] == {"a": "1/2", "z": "3"}
        assert VerificationReport.from_json(line).to_json() == line


def test_verify_all_is_deterministic():
    first = call("verify", "--all", "--json", "--no-timing")
    second = call("verify", "--all", "--json", "--no-timing")
    assert first[0] == 0 and first == second
    ids = {json.loads(line)["id"] for line in first[1].splitlines()}
    assert "gesselseo-28" in ids and "f-35->f-36" in ids
    assert call("verify", "--all") == call("verify", "--all")


def test_failure_exit_code(monkeypatch):
    import dataclasses

    from hooklength import catalog

    entry = catalog.get("pt-10")
    monkeypatch.setitem(catalog.REGISTRY, "pt-10", dataclasses.replace(entry, rhs_rule=lambda n, k: 1))
    catalog.rhs.cache_clear()
    try:
        code, out, err = call("verify", "--id", "pt-10", "--n-max", "3")
    finally:
        catalog.rhs.cache_clear()
    assert code == 1
    assert "verification failed: id=pt-10 n=3 mode=dp" in err
    assert "FAIL pt-10 n=3" in out


@pytest.mark.parametrize("argv", [
    [],
    ["verify"],
    ["verify", "--id", "x", "--all"],
    ["verify", "--id", "eq-99"],
    ["verify", "--id", "lt-16", "--mode", "enum", "--n-max", "9"],
    ["verify", "--id", "lt-16", "--n-max", "0"],
    ["verify", "--id", "lt-16", "--subst", "q=1"],
    ["derive-rho", "--family", "kary", "--series", "exp", "--n", "3"],
    ["derive-rho", "--family", "plane-tree", "--series", "exp", "--n", "3"],
    ["derive-rho", "--family", "binary", "--series", "nope", "--n", "3"],
    ["enum", "--family", "labeled-forest", "--n", "7"],
    ["enum", "--family", "hedge", "--n", "2"],
    ["verify", "--id", "f-25", "--n-max", "3", "--subst", "a=1/2,z=-3"],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_error_message_names_command():
    code, _, err = call("verify", "--id", "eq-99")
    assert err.strip() == "hooklength verify: error: unknown identity id 'eq-99'"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hooklength", "verify", "--id", "lt-16", "--n-max", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "pass lt-16 n=3 mode=dp: lhs=2 rhs=2"
