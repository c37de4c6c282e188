#!/usr/bin/env python3
"""Validate `ehrkit --json analyze` output for every corpus entry against the shipped schema.

usage: validate_schema.py EHRKIT SCHEMA CORPUS_DIR
"""
import json
import pathlib
import subprocess
import sys

import jsonschema


def main():
    ehrkit, schema_path, corpus = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    inputs = sorted(p for p in corpus.glob("*.json") if ".golden." not in p.name)
    for path in inputs:
        golden = corpus / (path.stem + ".golden.json")
        args = [ehrkit, "--json"]
        if golden.exists():
            m = json.loads(golden.read_text()).get("options", {}).get("m")
            if m is not None:
                args += ["--m", str(m)]
        args += ["analyze", str(path)]
        out = subprocess.run(args, capture_output=True, text=True)
        if out.returncode != 0:
            print(f"FAIL {path.stem}: exit {out.returncode}: {out.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(out.stdout)), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {path.stem}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {path.stem}")
    print(f"{len(inputs)} reports, {failures} invalid")
    return 1 if failures or not inputs else 0


if __name__ == "__main__":
    sys.exit(main())
