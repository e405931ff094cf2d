#!/usr/bin/env python3
"""End-to-end checks of the command line tool against the JSON fixtures."""
import json
import math
import subprocess
import sys
import tempfile
import os

CLI = sys.argv[1]
FIXTURES = sys.argv[2]

failures = []


def run(*args, expect_code=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect_code}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def fixture(name):
    return os.path.join(FIXTURES, name)


def qmul(a, b):
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return [
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ]


def qdist(a, b):
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


# ddet of the eigenvector matrix is 1
out = run("ddet", "--input", fixture("eigvec_pair.json")).stdout.strip()
assert abs(float(out) - 1.0) <= 1e-9, f"ddet: {out}"

# det of an upper-triangular commuting example
run("det", "--input", fixture("eigvec_pair.json"))

# exp(A t) of the zero system is the identity at any t
out = run("expat", "--input", fixture("zero.json"), "--t", "5", "--format", "json").stdout
rows = json.loads(out)["rows"]
for r, row in enumerate(rows):
    for c, q in enumerate(row):
        expected = [1.0, 0, 0, 0] if r == c else [0, 0, 0, 0]
        assert qdist(q, expected) <= 1e-12, f"expat zero: {q} at {r},{c}"

# JSON output is stable under a round trip (full-precision arrays)
out1 = run("expat", "--input", fixture("triangular2.json"), "--t", "0.7", "--format", "json").stdout
out2 = run("expat", "--input", fixture("triangular2.json"), "--t", "0.7", "--format", "json").stdout
m1 = json.loads(out1)["rows"]
m2 = json.loads(out2)["rows"]
for row1, row2 in zip(m1, m2):
    for q1, q2 in zip(row1, row2):
        assert qdist(q1, q2) <= 1e-12, "expat round trip"

# eigen and series methods agree
outs = run("expat", "--input", fixture("triangular2.json"), "--t", "0.7", "--format", "json",
           "--method", "series").stdout
ms = json.loads(outs)["rows"]
for row1, row2 in zip(m1, ms):
    for q1, q2 in zip(row1, row2):
        assert qdist(q1, q2) <= 1e-8, "eigen vs series"

# IVP solution: x0 = (1,1) rides the 1+i eigenline, x(t) = (1,1) e^{(1+i) t}
t = 1.0
out = run("solve", "--input", fixture("triangular2.json"), "--t", str(t), "--format", "json").stdout
x = json.loads(out)
e = [math.exp(t) * math.cos(t), math.exp(t) * math.sin(t), 0.0, 0.0]
for entry in x:
    assert qdist(entry, e) <= 1e-9, f"solve: {entry} vs {e}"

# spectra of the defective system: lambda = i twice, one chain of length 2
out = run("eig", "--input", fixture("defective2.json"), "--format", "json").stdout
spec = json.loads(out)
assert len(spec) == 1, "eig entries"
assert qdist(spec[0]["lambda"], [0, 1, 0, 0]) <= 1e-9, "eig lambda"
assert spec[0]["multiplicity"] == 2, "eig multiplicity"
assert len(spec[0]["chains"]) == 1 and len(spec[0]["chains"][0]) == 2, "eig chain shape"

# fundamental matrix JSON carries the quasi-polynomial structure
out = run("fundmat", "--input", fixture("defective2.json"), "--format", "json", "--t", "0").stdout
fm = json.loads(out)
assert len(fm["columns"]) == 2, "fundmat columns"
assert len(fm["columns"][1]["coeffs"]) == 2, "second column has the t-term"
assert "at_t" in fm, "fundmat --t evaluation"

# check runs the gate table and passes on well-posed systems
out = run("check", "--input", fixture("triangular2.json")).stdout
assert out.count("PASS") == 5 and "FAIL" not in out, f"check gates:\n{out}"
run("check", "--input", fixture("defective2.json"))

# a perturbed (non-solution) basis must fail the gates
good = json.loads(run("fundmat", "--input", fixture("defective2.json"), "--format", "json").stdout)
good["columns"][1]["coeffs"][0]["vector"][1][3] += 0.25  # flip one component
bad_problem = {"matrix": json.load(open(fixture("defective2.json")))["matrix"], "basis": good}
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump(bad_problem, f)
    bad_path = f.name
proc = run("check", "--input", bad_path, expect_code=1)
assert "FAIL" in proc.stdout, "perturbed basis must fail a gate"
os.unlink(bad_path)

# diagonal time-varying solve: x(1) = exp(1.5 j) x0 for a(t) = j (1 + t)
out = run("diag-solve", "--input", fixture("diag_ramp.json"), "--t", "1",
          "--format", "json").stdout
x = json.loads(out)
phase = 1.0 + 0.5  # integral of (1 + t) over [0, 1]
ej = [math.cos(phase), 0.0, math.sin(phase), 0.0]
expected = qmul(ej, [0.7, -0.1, 0.4, 0.2])
assert qdist(x[0], expected) <= 1e-9, f"diag-solve: {x[0]} vs {expected}"

# the non-commuting diagonal coefficient is a numerical-failure exit
proc = run("diag-solve", "--input", fixture("diag_bad.json"), "--t", "1", expect_code=3)
assert "commute" in proc.stderr, f"diagnostic: {proc.stderr}"

# liouville reports the measured factor; a real 1x1 system pins it via
# W = |x|^2/2 brute force (factor log(W ratio)/a = 2 by direct computation)
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"matrix": {"rows": [[0.8]]}}, f)
    scalar_path = f.name
out = run("liouville", "--input", scalar_path, "--t", "1", "--format", "json").stdout
rep = json.loads(out)
brute = math.log(math.exp(2 * 0.8 * 1.0)) / 0.8
assert abs(rep["factor"] - brute) <= 1e-9, f"liouville factor {rep}"
assert rep["max_rel_err"] <= 1e-9, f"liouville fit {rep}"
os.unlink(scalar_path)

# --x0 file beats the problem-file initial value
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump(["1", "0"], f)
    x0_path = f.name
out = run("solve", "--input", fixture("triangular2.json"), "--x0", x0_path, "--t", "0.5",
          "--format", "json").stdout
x = json.loads(out)
e_half = [math.cos(0.5), math.sin(0.5), 0.0, 0.0]  # (1,0) rides the i eigenline
assert qdist(x[0], e_half) <= 1e-9, f"solve --x0: {x[0]}"
assert qdist(x[1], [0, 0, 0, 0]) <= 1e-9, f"solve --x0: {x[1]}"
os.unlink(x0_path)

# a required flag that is missing is a usage error
run("det", expect_code=2)

# parse failures exit 2
run("det", "--input", os.path.join(FIXTURES, "missing.json"), expect_code=2)
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    f.write("{not json")
    garbled = f.name
run("det", "--input", garbled, expect_code=2)
os.unlink(garbled)

# text output renders quaternion literals
out = run("det", "--input", fixture("defective2.json")).stdout.strip()
assert any(u in out for u in "ijk") or out.lstrip("-").replace(".", "").isdigit(), out

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli checks passed")
