"""Benchmark the compiled rational backend (gmpy2) against the pure one.

Every hot loop in the package is bignum-rational arithmetic; the two
interchangeable scalar backends are selected at import time, so each
measurement runs in a subprocess with LAMBDAEQ_BACKEND set.  Usage:

    python benchmarks/backend_bench.py
"""

import json
import os
import subprocess
import sys
import time

WORKLOADS = {
    "assemble A_13 (m=7)": "from lambdaeq import assemble; assemble(13)",
    "row-1 solve p=97 (m=49)": "from lambdaeq import row1_stats, params_for; row1_stats(params_for(97))",
    "master-series vanish A_13": (
        "from lambdaeq import assemble, verify_global_vanish; "
        "verify_global_vanish(assemble(13))"
    ),
    "ODE residual, order 50": "from lambdaeq import ode_residual; ode_residual(50)",
    "scan primes <= 149": (
        "from lambdaeq import row1_stats, params_for, is_odd_prime; "
        "[row1_stats(params_for(p)) for p in range(3, 150, 2) if is_odd_prime(p)]"
    ),
}

RUNNER = r"""
import json, sys, time
import lambdaeq
body = sys.argv[1]
repeats = int(sys.argv[2])
exec(body)  # warm caches once
best = None
for _ in range(repeats):
    t0 = time.perf_counter()
    exec(body)
    dt = time.perf_counter() - t0
    best = dt if best is None else min(best, dt)
print(json.dumps({"backend": lambdaeq.BACKEND, "seconds": best}))
"""


def measure(backend, body, repeats=3):
    env = dict(os.environ, LAMBDAEQ_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", RUNNER, body, str(repeats)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    payload = json.loads(out.stdout)
    assert payload["backend"] == backend
    return payload["seconds"]


def main():
    backends = ["fractions"]
    try:
        import gmpy2  # noqa: F401

        backends.insert(0, "gmpy2")
    except ImportError:
        print("gmpy2 not installed; timing the pure backend only\n")

    width = max(len(name) for name in WORKLOADS)
    header = "%-*s" % (width, "workload")
    for b in backends:
        header += "  %12s" % b
    if len(backends) == 2:
        header += "  %8s" % "speedup"
    print(header)
    print("-" * len(header))
    for name, body in WORKLOADS.items():
        times = [measure(b, body) for b in backends]
        line = "%-*s" % (width, name)
        for t in times:
            line += "  %10.4fs" % t
        if len(times) == 2 and times[0] > 0:
            line += "  %7.1fx" % (times[1] / times[0])
        print(line)


if __name__ == "__main__":
    main()
