#!/usr/bin/env python3
"""Compare the compiled kernel against the pure-Python fallback.

Runs each workload in a fresh subprocess per backend (cold caches, fixed
backend selected at import) and prints a timing table.

    python benchmarks/bench_backends.py
"""

import json
import os
import subprocess
import sys
from time import perf_counter

WORKLOADS = ["staircase-table", "catalan-convolution", "hankel-inverse-product"]


def run_workload(name):
    from nccatalan import NCPoly, catalan, hankel, hankel_inverse, shift, truncated_tilde

    if name == "staircase-table":
        start = perf_counter()
        for n in range(13):
            for k in range(n + 1):
                truncated_tilde(n, k)
        return perf_counter() - start
    if name == "catalan-convolution":
        # one step of the quadratic recursion at size 12 (208k result terms)
        parts = [catalan(k) for k in range(12)]
        x0i = NCPoly.from_word(((0, -1),))
        start = perf_counter()
        total = NCPoly.sum(parts[k] * x0i * shift(parts[11 - k], 1)
                           for k in range(12))
        elapsed = perf_counter() - start
        assert total == catalan(12)
        return elapsed
    if name == "hankel-inverse-product":
        from nccatalan import mat_identity

        H = hankel(1, 3)
        Hi = hankel_inverse(1, 3)
        start = perf_counter()
        prod = H * Hi
        elapsed = perf_counter() - start
        assert prod == mat_identity(4)
        return elapsed
    raise ValueError(f"unknown workload {name!r}")


def worker():
    from nccatalan.backend import BACKEND

    timings = {name: run_workload(name) for name in WORKLOADS}
    print(json.dumps({"backend": BACKEND, "timings": timings}))


def launch(pure):
    env = dict(os.environ)
    if pure:
        env["NCCATALAN_PURE"] = "1"
    else:
        env.pop("NCCATALAN_PURE", None)
    out = subprocess.run([sys.executable, __file__, "--worker"],
                         capture_output=True, text=True, env=env, check=True)
    return json.loads(out.stdout)


def main():
    if "--worker" in sys.argv:
        worker()
        return
    compiled = launch(pure=False)
    pure = launch(pure=True)
    if compiled["backend"] != "cython":
        print("note: compiled kernel unavailable; both runs use the pure backend")
    print(f"{'workload':<26} {'pure (ms)':>10} {compiled['backend']+' (ms)':>12} {'speedup':>8}")
    for name in WORKLOADS:
        p = pure["timings"][name] * 1000
        c = compiled["timings"][name] * 1000
        ratio = p / c if c else float("inf")
        print(f"{name:<26} {p:>10.1f} {c:>12.1f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
