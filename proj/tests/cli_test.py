"""End-to-end checks of the command-line tool."""

import json
import math
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, condition, detail=""):
    print(("ok   " if condition else "FAIL ") + name + (f"  {detail}" if detail and not condition else ""))
    if not condition:
        failures.append(name)


def load(out, stem):
    with open(os.path.join(out, stem + ".json"), encoding="utf-8") as f:
        return json.load(f)


with tempfile.TemporaryDirectory() as out:
    r = run("seminorms", "--spec", "trig k=0 a=2.5", "--jgrid", "10", "--out", out)
    check("seminorms on a constant exits 0", r.returncode == 0, r.stderr)
    norms = load(out, "seminorms")["result"]["norms"]
    check("constant: sup-based norms equal |c|",
          all(math.isclose(norms[k], 2.5, rel_tol=1e-12) for k in ("sup", "direct_holder", "wavelet_lip", "poisson")),
          str(norms))
    check("constant: zygmund reported at s = 1", "zygmund" in norms)
    check("seminorms CSV written", os.path.exists(os.path.join(out, "seminorms.csv")))

    r = run("seminorms", "--spec", "trig k=1 a=1", "--jgrid", "10", "--s", "0.5", "--out", out)
    report = load(out, "seminorms")
    ratios = [x["value"] for x in report["result"]["ratios"]]
    check("trig: ratios within the band", all(1 / 50 <= v <= 50 for v in ratios), str(ratios))
    check("no zygmund entry when s < 1", "zygmund" not in report["result"]["norms"])

    r = run("seminorms", "--spec", "trig k=1 a=", "--out", out)
    check("bad spec exits 2", r.returncode == 2, str(r.returncode))
    r = run("seminorms", "--spec", "trig k=1 a=1", "--s", "3", "--out", out)
    check("bad s exits 2", r.returncode == 2, str(r.returncode))
    r = run("distance", "--out", out)
    check("missing spec exits 2", r.returncode == 2, str(r.returncode))

    r = run("sets", "--spec", "weierstrass s=1 levels=10", "--jgrid", "12", "--eps", "1e9", "--method", "secdiff",
            "--out", out)
    sets = load(out, "sets")["result"]
    check("huge eps gives an empty set", r.returncode == 0 and max(sets["carleson"]["M_J"]) == 0.0, r.stderr)
    r = run("sets", "--spec", "weierstrass s=1 levels=10", "--jgrid", "12", "--eps", "0", "--method", "wavelet",
            "--out", out)
    sets = load(out, "sets")["result"]
    check("eps = 0 on a Weierstrass series diverges", sets["carleson"]["diverging"], json.dumps(sets["carleson"]))
    check("set CSV and field CSV written",
          os.path.exists(os.path.join(out, "sets.csv")) and os.path.exists(os.path.join(out, "sets_field.csv")))
    r = run("sets", "--spec", "trig k=1 a=1", "--eps", "1", "--method", "fourier", "--out", out)
    check("unknown method exits 2", r.returncode == 2, str(r.returncode))

    cfg = os.path.join(out, "run.cfg")
    with open(cfg, "w", encoding="utf-8") as f:
        f.write("jgrid = 12\njmin = 5\njmax = 10\ns = 0.5\n")
    r = run("distance", "--config", cfg, "--s", "1", "--spec", "wavelet-atom l=1 j=4 k=3", "--out", out)
    report = load(out, "distance")
    check("flags override the config file", report["config"]["s"] == 1.0 and report["config"]["J_grid"] == 12)
    estimates = list(report["result"]["estimates"].values())
    check("atom: three zero distances",
          r.returncode == 0 and all(e["epsilon_star"] <= e["resolution"] for e in estimates), r.stderr)
    first = dict(report)

    run("distance", "--config", cfg, "--s", "1", "--spec", "wavelet-atom l=1 j=4 k=3", "--out", out)
    second = load(out, "distance")
    first.pop("generated_at")
    second.pop("generated_at")
    check("identical runs give identical reports", first == second)

    r = run("distance", "--spec", "weierstrass s=1 levels=10", "--jgrid", "12", "--out", out)
    estimates = list(load(out, "distance")["result"]["estimates"].values())
    check("Weierstrass: three positive distances",
          all(e["epsilon_star"] > 0.05 * e["epsilon_hi"] for e in estimates), json.dumps(estimates)[:400])

    r = run("inclusion", "--spec", "weierstrass s=1 levels=10", "--jgrid", "12", "--source", "wavelet",
            "--target", "secdiff", "--out", out)
    inc = load(out, "inclusion")["result"]
    check("inclusion report has the full grid", r.returncode == 0 and len(inc["fraction"]) == 4, r.stderr)

    r = run("validate", "--criteria", "1,2", "--out", out)
    val = load(out, "validate")["result"]
    check("validate runs selected criteria", r.returncode == 0 and len(val["criteria"]) == 2, r.stdout + r.stderr)
    check("validate prints one line per criterion", r.stdout.count("criterion ") == 2, r.stdout)

    r = run("validate", "--criteria", "7", "--theta", "10", "--out", out)
    check("absurd theta fails the divergence criterion", r.returncode == 3, r.stdout)

    r = run("validate", "--criteria", "4", "--jgrid", "4", "--out", out)
    check("tiny grid warns about resolution", "under-resolved" in r.stderr, r.stderr)

sys.exit(1 if failures else 0)
