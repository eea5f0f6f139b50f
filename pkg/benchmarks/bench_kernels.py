"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one line per workload with the best-of-N time for each backend and the
speedup.  Results are checked for equality before timing.
"""

from __future__ import annotations

import argparse
import random
import timeit

from fillsurg.kernels import available_backends, get_backend


def workloads(rng: random.Random):
    def word(n, length):
        return [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]

    polys = [[rng.randint(-9, 9) for _ in range(40)] for _ in range(2)]
    words = [(6, word(6, 60)) for _ in range(20)]
    matrix = [[[rng.randint(-3, 3) for _ in range(4)] for _ in range(7)] for _ in range(7)]
    return {
        "poly_mul 40x40": lambda k: k.poly_mul(*polys),
        "poly_det 7x7 (deg 3 entries)": lambda k: k.poly_det(matrix),
        "burau_poly_matrix 20 words, n=6, len 60": lambda k: [k.burau_poly_matrix(n, w) for n, w in words],
        "square_sum_table 10^5": lambda k: k.square_sum_table(100_000, 2),
        "square_partitions r=300, sum=60": lambda k: k.square_partitions(300, 60),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = available_backends()
    backends = {n: get_backend(n) for n in names}
    if "cython" not in names:
        print("compiled kernels not built; timing the Python backend only")
    print(f"{'workload':<42}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in workloads(random.Random(0)).items():
        results = {n: fn(k) for n, k in backends.items()}
        first = results[names[0]]
        assert all(r == first for r in results.values()), label
        times = {}
        for n, k in backends.items():
            number = 1
            while timeit.timeit(lambda: fn(k), number=number) < 0.05:
                number *= 2
            times[n] = min(timeit.repeat(lambda: fn(k), number=number, repeat=args.repeat)) / number
        line = f"{label:<42}" + "".join(f"{times[n] * 1e3:>10.3f}ms" for n in names)
        if len(names) > 1:
            line += f"{times['python'] / times['cython']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
