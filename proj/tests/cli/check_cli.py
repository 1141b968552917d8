#!/usr/bin/env python3
"""Runs the CLI over the corpus, validates every report against
schemas/report.schema.json and checks the exit-code contract.

    check_cli.py HAMPLANE_BINARY SCHEMA_FILE
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BINARY, SCHEMA = sys.argv[1], Path(sys.argv[2])
VALIDATOR = jsonschema.Draft202012Validator(json.loads(SCHEMA.read_text()))
jsonschema.Draft202012Validator.check_schema(VALIDATOR.schema)

failures = []


def run(args, want_code, want_json=True):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=120)
    label = " ".join(args)
    if proc.returncode != want_code:
        failures.append(f"{label}: exit {proc.returncode}, expected {want_code}\n{proc.stderr}")
        return None
    if not want_json:
        return proc.stdout
    try:
        doc = json.loads(proc.stdout)
    except json.JSONDecodeError as err:
        failures.append(f"{label}: stdout is not JSON ({err})")
        return None
    errors = sorted(VALIDATOR.iter_errors(doc), key=lambda e: list(e.path))
    if errors:
        failures.append(f"{label}: schema violation at {list(errors[0].path)}: {errors[0].message}")
    return doc


def expect(cond, message):
    if not cond:
        failures.append(message)


listing = run(["corpus", "list"], 0)
names = [e["name"] for e in listing["entries"]] if listing else []
for required in ["triangle", "chorded-square", "k4", "k24", "prism", "herschel", "petersen", "dodecahedron",
                 "grinberg-graph", "tutte"]:
    expect(required in names, f"corpus list is missing {required}")

# Verdicts that follow from the graphs themselves.
plane_codes = {"triangle": 0, "chorded-square": 0, "k4": 0, "k24": 1, "prism": 0, "herschel": 1, "petersen": 1,
               "dodecahedron": 0, "grinberg-graph": 3, "tutte": 3}
oracle_codes = {"triangle": 0, "chorded-square": 0, "k4": 0, "k24": 1, "prism": 0, "herschel": 1, "petersen": 1,
                "dodecahedron": 0, "grinberg-graph": 1, "tutte": 1}
grinberg_codes = {"herschel": 1, "grinberg-graph": 1, "dodecahedron": 0, "k24": 0, "chorded-square": 0}

for entry in listing["entries"] if listing else []:
    name = entry["name"]
    src = f"corpus:{name}"
    basis = run(["basis", src], 0)
    if basis:
        expect(basis["basis"]["dimension"] == entry["m"] - entry["n"] + 1, f"{name}: basis dimension")
    run(["plane", src, "--max-seconds", "30"], plane_codes.get(name, 0))
    run(["oracle", src], oracle_codes.get(name, 0))
    if entry["rotation"]:
        run(["basis", src, "--basis", "face"], 0)
        run(["grinberg", src], grinberg_codes.get(name, 0))
        run(["grinberg", src, "--inside", "0"], 3 if name not in ("triangle",) else 0)
    else:
        run(["grinberg", src], 2, want_json=False)

herschel = run(["grinberg", "corpus:herschel"], 1)
if herschel:
    cert = herschel["certificate"]
    expect(cert and cert["modulus"] == 2 and cert["form"] == "inside", "herschel: modulus-2 inside certificate")
grinberg = run(["grinberg", "corpus:grinberg-graph"], 1)
if grinberg:
    cert = grinberg["certificate"]
    expect(cert and cert["modulus"] == 3 and cert["form"] == "full", "grinberg-graph: modulus-3 full certificate")
dodeca = run(["grinberg", "corpus:dodecahedron"], 0)
if dodeca:
    expect(dodeca["solutions"] == [{"5": 6}], "dodecahedron: unique solution x_5 = 6")

k24 = run(["plane", "corpus:k24"], 1)
if k24:
    reports = k24["counterexamples"]["reports"]
    expect(len(k24["planes"]) == 0 and len(reports) == 1, "k24: 0 planes, 1 counterexample")
    expect(reports and reports[0]["pairs"]["counts"]["V0"] == 1, "k24: counterexample pair is V0")

square = run(["plane", "corpus:chorded-square"], 0)
if square:
    expect(len(square["planes"]) == 1, "chorded-square: one plane")
    plane = square["planes"][0] if square["planes"] else None
    expect(plane and plane["pairs"]["pairs"][0]["class"] == "VE" and plane["audit"]["passes"],
           "chorded-square: VE pair, audit passes")

# Parallel runs must print the same report as sequential ones.
seq = run(["plane", "corpus:dodecahedron", "--basis", "face", "--indent", "-1"], 0)
par = run(["plane", "corpus:dodecahedron", "--basis", "face", "--indent", "-1", "--workers", "4"], 0)
if seq and par:
    seq["budget"].pop("workers")
    par["budget"].pop("workers")
    expect(seq == par, "dodecahedron: --workers 4 report differs from sequential")

# A budget that cannot finish the fallback is inconclusive.
run(["plane", "corpus:petersen", "--max-subsets", "10"], 3)

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    run(["corpus", "emit", "herschel", "--out", str(tmp)], 0, want_json=False)
    expect((tmp / "herschel.edges").exists() and (tmp / "herschel.rot").exists(), "emit --out wrote both files")
    emitted = run(["grinberg", str(tmp / "herschel.edges"), "--rotation", str(tmp / "herschel.rot")], 1)
    if emitted:
        expect(emitted["graph"] == {"n": 11, "m": 18, "dimension": 8}, "emitted herschel: 11 vertices, 18 edges")
        expect(emitted["faces"]["count"] == 9, "emitted herschel: 9 faces")

    (tmp / "bad.edges").write_text("0 1\n1 2\n0 1\n")
    run(["basis", str(tmp / "bad.edges")], 2, want_json=False)
    (tmp / "tri.g6").write_text("Bw\n")
    tri = run(["basis", str(tmp / "tri.g6")], 0)
    expect(tri and tri["basis"]["dimension"] == 1, "graph6 triangle: dimension 1")

run(["corpus", "emit", "nosuch"], 2, want_json=False)
run(["basis", "corpus:nosuch"], 2, want_json=False)
run(["basis", "/nonexistent/file.edges"], 2, want_json=False)
run(["grinberg", "corpus:herschel", "--inside", "99"], 2, want_json=False)
run(["plane", "corpus:petersen", "--basis", "face"], 2, want_json=False)
run(["bogus"], 2, want_json=False)

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
