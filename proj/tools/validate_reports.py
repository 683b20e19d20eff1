#!/usr/bin/env python3
"""Run every qcr command with --json on the test inputs and validate the output."""
import json
import subprocess
import sys

import jsonschema


def main():
    qcr, schema_path, data = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    cases = [
        (["check", "builtin"], 0),
        (["check", f"{data}/paper_model.json"], 0),
        (["check", f"{data}/duplicate_forms.json"], 1),
        (["check", f"{data}/two_var_model.json"], 1),
        (["check", f"{data}/nonhermitian.json"], 2),
        (["check", f"{data}/malformed.json"], 2),
        (["check", f"{data}/bad_entry.json"], 2),
        (["tangency", "builtin", "T"], 0),
        (["tangency", "builtin", f"{data}/not_tangent_field.json"], 1),
        (["solve", "builtin", "--weights", "-2..0"], 0),
        (["solve", "builtin", "--weight", "-3"], 2),
        (["jetdet", "builtin", "--jet-order", "2", "--max-weight", "4"], 0),
        (["jetdet", "builtin", "--jet-order", "2", "--max-weight", "2"], 1),
        (["paper-demo"], 0),
        (["paper-demo", "--model", f"{data}/corrupted_model.json"], 1),
    ]
    failed = 0
    for args, expected in cases:
        proc = subprocess.run([qcr, "--json", *args], capture_output=True, text=True)
        label = " ".join(args)
        try:
            report = json.loads(proc.stdout)
            validator.validate(report)
            ok = proc.returncode == expected == report["exit_code"]
            reason = f"exit {proc.returncode}, expected {expected}"
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            ok, reason = False, str(e).splitlines()[0]
        print(("ok   " if ok else "FAIL ") + label + ("" if ok else f" ({reason})"))
        failed += not ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
