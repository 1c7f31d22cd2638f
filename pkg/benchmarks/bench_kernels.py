"""Time the compiled and pure-Python construction kernels on prefixes of x, y, z, t.

    python benchmarks/bench_kernels.py --min-exp 12 --max-exp 18
"""

import argparse
import time

from wordprobe import kernels
from wordprobe.generators import prefix


def best_of(fn, arg, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-exp", type=int, default=12)
    parser.add_argument("--max-exp", type=int, default=17)
    parser.add_argument("--words", default="x,y,z,t")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = sorted(kernels.BACKENDS)
    if "compiled" not in backends:
        print("compiled extension not available; timing the Python fallback only")
    header = f"{'word':<5}{'length':>9}  {'kernel':<8}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name in args.words.split(","):
        for exp in range(args.min_exp, args.max_exp + 1):
            codes = prefix(name, 1 << exp).codes
            for kernel in ("sa_build", "eertree_build"):
                times = [best_of(getattr(kernels.BACKENDS[b], kernel), codes, args.repeat) for b in backends]
                line = f"{name:<5}{1 << exp:>9}  {kernel[:-6]:<8}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
                if len(times) == 2:
                    line += f"{times[1] / times[0]:>9.1f}x"
                print(line)


if __name__ == "__main__":
    main()
