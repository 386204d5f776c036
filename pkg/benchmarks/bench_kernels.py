"""Compare the compiled kernel against the pure-Python fallback.

Runs the same workloads in two subprocesses, one per backend (selected
through SPINHECKE_KERNEL), and prints a timing table.  Workloads cover the
raw kernel hot spots (monomial products, module action, echelon reduction)
and three end-to-end verification checks.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time
from itertools import permutations

K = 5


def _rand_elem(rng, perms, nterms):
    from spinhecke.scalars import Q, Scalar

    out = {}
    for _ in range(nterms):
        key = (rng.getrandbits(K), perms[rng.randrange(len(perms))])
        out[key] = Scalar(Q(rng.randint(-4, 4)), Q(rng.randint(-4, 4)))
    return {key: val for key, val in out.items() if val}


def bench_terms_mul():
    from spinhecke import kernel

    rng = random.Random(7)
    perms = list(permutations(range(K)))
    a = _rand_elem(rng, perms, 60)
    b = _rand_elem(rng, perms, 60)
    acc = a
    for _ in range(12):
        acc = kernel.terms_mul(acc, b)
        if len(acc) > 1200:
            # keep the product from saturating all 2^k k! monomials
            acc = dict(sorted(acc.items())[:400])
    return len(acc)


def bench_terms_apply():
    from spinhecke import kernel
    from spinhecke.scalars import ONE

    rng = random.Random(11)
    perms = list(permutations(range(K)))
    words = [tuple(rng.randrange(6) for _ in range(K)) for _ in range(400)]
    elems = [_rand_elem(rng, perms, 50) for _ in range(6)]
    total = 0
    for e in elems:
        for w in words:
            total += len(kernel.terms_apply(e, {w: ONE}))
    return total


def bench_tau_span():
    from spinhecke.verify import verify_tau_span

    return verify_tau_span(5).status


def bench_sergeev():
    from spinhecke.verify import verify_sergeev_idempotent

    return verify_sergeev_idempotent(5).status


def bench_specht():
    from spinhecke.tableaux import StrictPartition
    from spinhecke.verify import verify_specht_centralizer

    return verify_specht_centralizer(StrictPartition((3, 1)), 2).status


WORKLOADS = [
    ("terms_mul chain k=5", bench_terms_mul),
    ("terms_apply 2400 words", bench_terms_apply),
    ("tau span closure k=5", bench_tau_span),
    ("sergeev idempotent k=5", bench_sergeev),
    ("specht centralizer (3,1)", bench_specht),
]


def run_worker(repeat):
    from spinhecke import kernel

    results = {"backend": kernel.BACKEND}
    for name, fn in WORKLOADS:
        best = min(_timed(fn) for _ in range(repeat))
        results[name] = best
    json.dump(results, sys.stdout)


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def run_backend(backend, repeat):
    env = dict(os.environ, SPINHECKE_KERNEL=backend)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker",
         "--repeat", str(repeat)],
        env=env, capture_output=True, text=True)
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        raise SystemExit(f"{backend} worker failed")
    results = json.loads(proc.stdout)
    assert results.pop("backend") == backend
    return results


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1,
                        help="repetitions per workload; best time wins")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)

    if args.worker:
        run_worker(args.repeat)
        return 0

    py = run_backend("py", args.repeat)
    cy = run_backend("cy", args.repeat)
    width = max(len(name) for name, _ in WORKLOADS)
    print(f"{'workload'.ljust(width)}  {'py':>8}  {'cy':>8}  speedup")
    for name, _ in WORKLOADS:
        ratio = py[name] / cy[name] if cy[name] else float("inf")
        print(f"{name.ljust(width)}  {py[name]:7.3f}s  {cy[name]:7.3f}s  "
              f"{ratio:6.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
