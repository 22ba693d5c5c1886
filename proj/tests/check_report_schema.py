"""Validates the JSON and CSV output of the zetakit binary."""

import csv
import io
import json
import subprocess
import sys

import jsonschema

ELLIPTIC = "y^2*z - x^3 - x*z^2 mod 3"

JSON_RUNS = [
    ["curve-zeta", ELLIPTIC],
    ["curve-zeta", "y^2*z - x^3 mod 5"],
    ["explicit-formula", '{"1": "1", "-2": "3/4"}', "--curve", ELLIPTIC, "--random", "5"],
    ["explicit-formula", "bump center=0 halfwidth=1", "--T", "30"],
    ["abszeta", "SL2", "closed", "s=5"],
    ["abszeta", "P1", "limit", "s=3"],
    ["abszeta", "cc-constant", "K=100"],
    ["abszeta", "cc-check", "s=2"],
    ["zeros", "info"],
    ["category-zeta", "--s", "2", "--s-imag", "1", "--bound", "500"],
]

CSV_RUNS = [
    ["curve-zeta", ELLIPTIC],
    ["abszeta", "SL2", "closed", "s=5"],
    ["abszeta", "SL2", "plot-data", "from=4", "to=6", "n=11"],
    ["zeros", "verify"],
]


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True)
    if proc.returncode not in (0, 1):
        sys.exit(f"{args}: exit {proc.returncode}: {proc.stderr.decode()}")
    return proc.stdout.decode()


def check_csv(text, args):
    if not text.endswith("\r\n"):
        sys.exit(f"{args}: CSV does not end with CRLF")
    body = text[:-2].split("\r\n")
    if any("\n" in line and line.count('"') % 2 == 0 for line in body):
        sys.exit(f"{args}: bare LF outside a quoted field")
    rows = list(csv.reader(io.StringIO(text, newline=""), strict=True))
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        sys.exit(f"{args}: ragged CSV rows")


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    for args in JSON_RUNS:
        doc = json.loads(run(binary, [*args, "--format", "json"]))
        errors = sorted(validator.iter_errors(doc), key=str)
        if errors:
            sys.exit(f"{args}: {errors[0].message}")
    for args in CSV_RUNS:
        check_csv(run(binary, [*args, "--format", "csv"]), args)
    print(f"{len(JSON_RUNS)} JSON and {len(CSV_RUNS)} CSV outputs valid")


if __name__ == "__main__":
    main()
