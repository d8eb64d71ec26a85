"""Compare the compiled and pure-Python canonicalisation kernels.

    python3 benchmarks/bench_canon.py [--count 2000] [--repeat 5]

Two measurements: the ``tree_code`` kernel alone on random positions, and
an end-to-end play enumeration run once per backend in a subprocess
(``LLGAMES_PURE=1`` selects the pure-Python kernel).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from llgames.game import _canon_py, random_positions

try:
    from llgames.game import _canon as _canon_c
except ImportError:
    _canon_c = None

END_TO_END = """
import time
from llgames.game import Caps, all_plays, gen_positions, canon
ps = list(gen_positions(5, seed=3, count=150, depth=2))
t = time.perf_counter()
n = sum(all_plays(p, 'lltn', Caps(2, 10**6), True).positions for p in ps)
print(canon.BACKEND, n, time.perf_counter() - t)
"""


def kernel_inputs(count, seed=0):
    out = []
    for p in random_positions(random.Random(seed), count, 6, depth=3, teams=("P", "P'", "O")):
        verts = list(p.teams)
        edges = [(e.src, e.dst, e.label) for e in p.edges]
        out.append((verts, dict(p.teams), edges, p.token or verts[0]))
    return out


def time_kernel(mod, inputs, repeat):
    def run():
        table, vlabels = {}, {}
        for verts, labels, edges, root in inputs:
            mod.tree_code(verts, labels, edges, root, None, table, vlabels)
    return min(timeit.repeat(run, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--no-end-to-end", action="store_true")
    args = ap.parse_args(argv)

    inputs = kernel_inputs(args.count)
    py = time_kernel(_canon_py, inputs, args.repeat)
    print(f"tree_code on {len(inputs)} positions, best of {args.repeat}")
    print(f"  python  {py * 1e3:8.1f} ms")
    if _canon_c is None:
        print("  cython  (extension not built)")
    else:
        cy = time_kernel(_canon_c, inputs, args.repeat)
        print(f"  cython  {cy * 1e3:8.1f} ms   speedup x{py / cy:.2f}")

    if not args.no_end_to_end:
        print("all_plays over 150 positions (5 vertices, expo_cap 2, exotic)")
        for pure in ("1", ""):
            env = dict(os.environ, LLGAMES_PURE=pure)
            r = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                               capture_output=True, text=True, check=True)
            backend, n, secs = r.stdout.split()
            print(f"  {backend:7} {float(secs):8.2f} s   ({n} positions)")


if __name__ == "__main__":
    main()
