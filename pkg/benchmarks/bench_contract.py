"""Compare the compiled and pure-Python sparse kernels on real workloads.

The kernel backend is chosen at import time, so this script re-executes
itself in a subprocess with TRIGGAUDIN_PURE_PYTHON=1 to time the
fallback, then prints both timings side by side.

Usage: python benchmarks/bench_contract.py
"""

import os
import subprocess
import sys
import time


def workload():
    from triggaudin import kernels
    from triggaudin.rationals import rational
    from triggaudin import gaudin, qside

    results = {}

    rep = gaudin.GaudinRep(2, [rational(1), rational(3)])
    t0 = time.perf_counter()
    gaudin.theta_mbar(rep, 3)
    results["theta recursion m=3 (2 sites, N=2)"] = time.perf_counter() - t0

    rep3 = gaudin.GaudinRep(3, [rational(1), rational(3)])
    t0 = time.perf_counter()
    fam = gaudin.extract_family(rep3, 2)
    gaudin.commutativity_report(fam)
    results["family + commutators m<=2 (2 sites, N=3)"] = time.perf_counter() - t0

    qrep = qside.QRep(2, [rational(1), rational(3)])
    t0 = time.perf_counter()
    qside.rll_check(qrep)
    results["bivariate exchange relation (2 sites, N=2)"] = time.perf_counter() - t0

    return kernels.BACKEND, results


def main():
    if os.environ.get("BENCH_CHILD") == "1":
        backend, results = workload()
        for name, dt in results.items():
            print("%s\t%s\t%.3f" % (backend, name, dt))
        return

    rows = []
    for pure in ("0", "1"):
        env = dict(os.environ)
        env["BENCH_CHILD"] = "1"
        env["TRIGGAUDIN_PURE_PYTHON"] = pure
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__)],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        ).stdout
        for line in out.strip().splitlines():
            backend, name, dt = line.split("\t")
            rows.append((backend, name, float(dt)))

    width = max(len(name) for _, name, _ in rows)
    by_name = {}
    for backend, name, dt in rows:
        by_name.setdefault(name, {})[backend] = dt
    print("%-*s  %10s  %10s  %7s" % (width, "workload", "cython", "python", "ratio"))
    for name, t in by_name.items():
        cy = t.get("cython")
        py = t.get("python")
        if cy is None:
            # no compiled extension available: both runs used the fallback
            print("%-*s  %10s  %9.3fs  %7s" % (width, name, "n/a", py, "n/a"))
        else:
            print(
                "%-*s  %9.3fs  %9.3fs  %6.2fx"
                % (width, name, cy, py, py / cy if cy else float("inf"))
            )


if __name__ == "__main__":
    main()
