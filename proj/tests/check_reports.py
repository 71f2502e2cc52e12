"""Runs each CLI command, validates the JSON report against its schema,
checks that text mode carries the same values and that repeated runs are
byte-identical."""

import json
import pathlib
import subprocess
import sys

import jsonschema

TOOL = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

RUNS = [
    ["base-size", "--group", "sym(8)", "--subgroup", "young-wreath(4,2)"],
    ["base-size", "--group", "sym(5)", "--subgroup", "sym(5)"],
    ["reg-count", "--group", "sym(5)", "--subgroup", "stab(sym(5),5)", "--k", "4"],
    ["intersections", "--group", "sym(5)", "--subgroup", "agl(5)"],
    ["intersections", "--group", "sym(5)", "--subgroup", "agl(5)", "--k", "2"],
    ["partition", "--group", "cyc(4)"],
    ["wreath-lift", "--group", "sym(4)", "--top", "sym(2)", "--k", "6"],
    ["random-base", "--group", "sym(4)", "--k", "6", "--trials", "20000", "--seed", "3"],
    ["random-base", "--group", "sym(5)", "--subgroup", "stab(sym(5),5)", "--k", "2", "--trials", "100"],
    ["verify-examples"],
    ["analyze", "--group", "sym(5)", "--subgroup", "stab(sym(5),5)"],
    ["analyze", "--group", "sym(5)", "--subgroup", "sym(5)"],
]


def run(args):
    out = subprocess.run([TOOL, *args, "--no-timing"], capture_output=True, text=True, check=True)
    return out.stdout


def flatten(value, prefix, out):
    if isinstance(value, dict):
        for key, sub in value.items():
            flatten(sub, f"{prefix}.{key}" if prefix else key, out)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, sub in enumerate(value):
            flatten(sub, f"{prefix}[{i}]", out)
    else:
        out[prefix] = value


failures = 0
for args in RUNS:
    label = " ".join(args)
    try:
        first = run([*args, "--format", "json"])
        second = run([*args, "--format", "json"])
        report = json.loads(first)
        schema = json.loads((SCHEMAS / f"{args[0]}.schema.json").read_text())
        jsonschema.validate(report, schema)
        assert first == second, "json output differs between runs"
        assert json.loads(json.dumps(report)) == report, "round trip changed the report"

        text = {}
        for line in run(args).splitlines():
            key, _, value = line.partition(": ")
            text[key] = value
        expected = {}
        flatten(report, "", expected)
        for key, value in expected.items():
            got = text.get(key)
            assert got is not None, f"text output lacks {key}"
            parsed = value if isinstance(value, str) else json.loads(got)
            if isinstance(value, float):
                assert abs(parsed - value) <= 1e-12 * max(1.0, abs(value)), f"{key}: {got} != {value}"
            else:
                assert parsed == value or got == value, f"{key}: {got} != {value}"
        print(f"ok   {label}")
    except Exception as exc:  # noqa: BLE001
        failures += 1
        print(f"FAIL {label}: {exc}")

sys.exit(1 if failures else 0)
