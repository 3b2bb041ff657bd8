"""Runs the CLI with --format json on a set of configurations and validates every
report against docs/report.schema.json."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    (["verify-relations", "--rep", "DEl"], 0),
    (["verify-relations", "--rep", "DE"], 0),
    (["verify-relations", "--rep", "bogus"], 64),
    (["decompose", "--rep", "DE"], 0),
    (["probe"], 0),
    (["probe", "--block", "D1", "--E", "0", "--lambda", "0"], 64),
    (["intertwine"], 0),
    (["mechanics", "--L", "L2", "--on-shell"], 0),
    (["mechanics", "--action1", "--g", "mu*x*xbar"], 2),
    (["dump", "relations"], 0),
    (["dump", "systems"], 0),
]


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    for args, want in CASES:
        proc = subprocess.run([exe, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != want:
            print(f"FAIL {label}: exit {proc.returncode}, expected {want}")
            bad += 1
            continue
        report = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        if errors or report["exit_code"] != want:
            bad += 1
            print(f"FAIL {label}")
            for e in errors[:5]:
                print("   ", list(e.path), e.message[:200])
        else:
            print(f"ok   {label}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
