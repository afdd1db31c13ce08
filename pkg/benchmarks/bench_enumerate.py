"""Compare the compiled and pure-Python enumeration cores.

Run as: python3 benchmarks/bench_enumerate.py [--repeat N]
"""

import argparse
import time

from altcox import engine
from altcox._tc_py import enumerate_core as py_core
from altcox.coxeter import standard_matrix
from altcox.presentations import (chain_presentation, coxeter_presentation,
                                  universal_extension)
from altcox.words import Word

try:
    from altcox._tc_core import enumerate_core as c_core
except ImportError:
    c_core = None


CASES = [
    ("A5 symmetric, regular", coxeter_presentation(standard_matrix("A", 5)), ()),
    ("A6 alternating edge, regular", chain_presentation("A", "edge", 6), ()),
    ("B4 alternating bourbaki, regular", chain_presentation("B", "bourbaki", 4), ()),
    ("D5 alternating carmichael, regular",
     chain_presentation("D", "carmichael", 5), ()),
    ("A5 six-fold cover, regular", universal_extension("A5"), ()),
    ("A7 alternating edge over first 5 gens",
     chain_presentation("A", "edge", 7),
     tuple(Word.gen(k) for k in range(5))),
]


def run(core, p, sub, cap=500_000):
    ncols = 2 * p.rank
    rel = [engine._columns(w) for w in p.relators]
    sw = [engine._columns(w) for w in sub]
    t0 = time.perf_counter()
    core(ncols, rel, sw, cap)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':45s} {'python':>9s} {'compiled':>9s} {'speedup':>8s}")
    for name, p, sub in CASES:
        t_py = min(run(py_core, p, sub) for _ in range(args.repeat))
        if c_core is None:
            print(f"{name:45s} {t_py:8.4f}s {'n/a':>9s} {'n/a':>8s}")
            continue
        t_c = min(run(c_core, p, sub) for _ in range(args.repeat))
        print(f"{name:45s} {t_py:8.4f}s {t_c:8.4f}s {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
