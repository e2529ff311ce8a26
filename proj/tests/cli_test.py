"""End-to-end checks of the epgcolor command line. Usage: cli_test.py EPGCOLOR DATA_DIR"""

import json
import os
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET

exe, data = sys.argv[1], sys.argv[2]
sun3 = os.path.join(data, "sun3.json")
failures = []


def run(*args):
    return subprocess.run([exe, *args], capture_output=True, text=True)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


with tempfile.TemporaryDirectory() as tmp:
    coloring = os.path.join(tmp, "sun3.coloring.json")
    r = run("color", sun3, "-o", coloring)
    check("color exits 0", r.returncode == 0, r.stderr)
    doc = json.load(open(coloring))
    check("color covers every path", sorted(doc["colors"]) == ["1", "2", "3", "4", "5", "6"], doc)
    check("colors lie in 1..4", all(1 <= c <= 4 for c in doc["colors"].values()), doc)

    r = run("verify", sun3, coloring)
    check("verify accepts the pipeline coloring", r.returncode == 0 and r.stdout == "", r.stdout + r.stderr)

    bad = os.path.join(tmp, "bad.json")
    json.dump({"colors": {str(i): 1 for i in range(1, 7)}}, open(bad, "w"))
    r = run("verify", sun3, bad)
    lines = r.stdout.splitlines()
    check("verify rejects a monochrome coloring", r.returncode == 1, r.stderr)
    check("one line per monocolored clique", len(lines) == 4 and "{2,3,5}" in r.stdout, r.stdout)

    r = run("color", os.path.join(data, "empty_segment.json"))
    check("invalid input exits 2", r.returncode == 2 and "empty segment" in r.stderr, r.stderr)
    r = run("color", os.path.join(tmp, "missing.json"))
    check("missing file exits 2", r.returncode == 2, r.stderr)
    r = run("frobnicate")
    check("unknown subcommand exits 2", r.returncode == 2)

    r = run("cliques", sun3)
    lines = r.stdout.splitlines()
    check("cliques lists four cliques", len(lines) == 4, r.stdout)
    check("exactly one claw", [l for l in lines if l.startswith("claw")] == ["claw {2,3,5} center=(2,2) stem=N"],
          r.stdout)

    inst = os.path.join(tmp, "gen.json")
    r = run("gen", "--paths", "120", "--grid", "30x20", "--seed", "0x2a", "--preset", "clustered", "-o", inst)
    check("gen exits 0", r.returncode == 0, r.stderr)
    again = run("gen", "--paths", "120", "--grid", "30x20", "--seed", "42", "--preset", "clustered")
    check("gen is reproducible and seeds accept hex", open(inst).read().strip() == again.stdout.strip())
    out = os.path.join(tmp, "gen.coloring.json")
    check("generated instance colors", run("color", inst, "-o", out).returncode == 0)
    check("generated instance verifies", run("verify", inst, out).returncode == 0)

    r = run("graph", sun3)
    check("graph emits DOT", r.returncode == 0 and r.stdout.startswith("graph G {") and r.stdout.count("--") == 9,
          r.stdout)

    svg = os.path.join(tmp, "sun3.svg")
    r = run("render", sun3, "--coloring", coloring, "-o", svg)
    check("render exits 0", r.returncode == 0, r.stderr)
    root = ET.parse(svg).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    polylines = [e for e in root.iter(ns + "polyline") if e.get("class") == "path"]
    check("render draws one polyline per path", len(polylines) == 6, len(polylines))

    r = run("bench", "--sizes", "1k,2k", "--reps", "1")
    check("bench prints a row per size", r.returncode == 0 and len(r.stdout.splitlines()) == 3, r.stdout)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
