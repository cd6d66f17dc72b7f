"""Compare the compiled kernels with the interpreted/numpy fallback.

Each backend runs in its own interpreter because the JIT switch is read at
import time.  Compilation is excluded: every workload is run once before it
is timed.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
import turanlab as tl
from turanlab.hypercore import complete

repeat = int(sys.argv[1])
fano = tl.Hypergraph(3, 7, ((0,1,2),(0,3,4),(0,5,6),(1,3,5),(1,4,6),(2,3,6),(2,4,5)))
s5 = tl.build_steiner(11, 5, use_cache=False).base
rng = np.random.default_rng(0)
mu = rng.dirichlet(np.ones(s5.n))
k8 = complete(8, 3)
fano2 = tl.blow_up(tl.BlowupSpec.from_part_sizes(fano, [2] * 7))  # sigma-free: full scan

workloads = {
    "steiner(11,5) dlx": lambda: tl.build_steiner(11, 5, use_cache=False),
    "lambda_grad s5 x200": lambda: [tl.lambda_grad(s5, mu) for _ in range(200)],
    "maximize_lambda s5 (10 restarts)": lambda: tl.maximize_lambda(s5, restarts=10),
    "sigma scan doubled fano x20": lambda: [tl.find_sigma_member(fano2) for _ in range(20)],
    "search ex(6, sigma3)": lambda: tl.max_free_edges(6, 3, "sigma"),
    "search ex(7, K3)": lambda: tl.max_free_edges(7, 2, "clique"),
    "distance exact fano-1": lambda: tl.distance_to_blowups(fano.with_edges(fano.edges[1:]), fano),
    "distance heuristic K8 vs fano": lambda: tl.distance_to_blowups(k8, fano, mode="heuristic", restarts=5),
}
out = {"backend": tl.backend(), "seconds": {}}
for name, fn in workloads.items():
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    out["seconds"][name] = best
print(json.dumps(out))
"""


def measure(disable_jit: bool, repeat: int) -> dict:
    env = dict(os.environ, TURANLAB_DISABLE_JIT="1" if disable_jit else "0")
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)], capture_output=True, text=True, env=env, check=True
    )
    return json.loads(proc.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timed runs per workload (best is kept)")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)

    jit = measure(False, args.repeat)
    plain = measure(True, args.repeat)
    rows = []
    for name, t_jit in jit["seconds"].items():
        t_plain = plain["seconds"][name]
        rows.append({"workload": name, "numba_s": t_jit, "numpy_s": t_plain, "speedup": t_plain / max(t_jit, 1e-9)})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for r in rows:
        print(f"{r['workload']:<{width}}  {r['numba_s']:>9.4f}s  {r['numpy_s']:>9.4f}s  {r['speedup']:>7.1f}x")


if __name__ == "__main__":
    main()
