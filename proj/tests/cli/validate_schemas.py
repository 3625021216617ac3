"""Runs every JSON-emitting subcommand and validates its output."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli = sys.argv[1]
schemas = pathlib.Path(sys.argv[2])


def load(name):
    return json.loads((schemas / f"{name}.schema.json").read_text())


def run(args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return json.loads(proc.stdout)


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    perm = tmp / "p.txt"
    perm.write_text("1 5 3 2 4\n")
    pts = tmp / "pts.txt"
    pts.write_text("# two points on the right edge\n3 1\n3 2\n")
    bad = tmp / "bad.txt"
    bad.write_text("1 2\n2 1\n2 2\n")

    cases = [
        ("solve", ["solve", "--k", "1", "--mode", "inc", "--input", str(perm), "--json"], 0),
        ("solve", ["solve", "--k", "2", "--input", str(perm), "--witness", "--json"], 0),
        ("labels", ["labels", "--scheme", "t1", "--k", "1", "--input", str(perm), "--json"], 0),
        ("rows", ["check", "--theorem", "t1", "--k", "1", "--input", str(perm), "--json"], 0),
        ("rows", ["check", "--theorem", "t2", "--k", "1", "--input", str(perm), "--json"], 0),
        ("rows", ["check", "--theorem", "t3", "--k", "3", "--slack", "0",
                  "--input", str(perm), "--json", "--strict"], 1),
        ("rows", ["sweep", "--k", "1..2", "--n", "30", "--samples", "2", "--seed", "5", "--json"], 0),
        ("rows", ["sweep", "--k", "1..2", "--family", "perm", "--t", "2..3", "--json"], 0),
        ("minimize", ["minimize", "--n", "1..5", "--k", "1..2", "--json"], 0),
        ("tightness", ["tightness", "--family", "strong", "--k", "2,4", "--t", "2..3", "--json"], 0),
        ("lattice", ["lattice", "--N", "3", "--mode", "maxfree", "--json"], 0),
        ("lattice", ["lattice", "--N", "2", "--mode", "scan", "--points", str(bad), "--json"], 0),
        ("lattice", ["lattice", "--N", "3", "--mode", "shift", "--points", str(pts), "--json"], 0),
    ]
    for name, args, expect in cases:
        doc = run(args, expect)
        jsonschema.validate(doc, load(name))
        print(f"ok  {' '.join(args[:1])} -> {name}.schema.json")

    solved = run(["solve", "--k", "1", "--mode", "inc", "--input", str(perm), "--json"])
    assert solved["length"] == 4, solved
