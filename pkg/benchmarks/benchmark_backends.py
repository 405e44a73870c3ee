"""Time the census kernels against each other on a few graph families.

Run as a script:  python benchmarks/benchmark_backends.py [--repeat N]

Every backend must produce identical censuses; the table reports the
median wall time per backend and the speedup of the compiled kernel
over the pure-Python one when both are available.
"""

import argparse
import statistics
import time
from fractions import Fraction

from clique_census import (
    available_backends,
    census,
    complete_multipartite_222,
    path_power,
    random_gnp,
)


def cases():
    return [
        ("path_power(4000, 8)", path_power(4000, 8)),
        ("multipartite k=12", complete_multipartite_222(12)),
        ("gnp(60, 1/2, seed=1)", random_gnp(60, Fraction(1, 2), seed=1)),
        ("gnp(150, 1/5, seed=2)", random_gnp(150, Fraction(1, 5), seed=2)),
        ("gnp(28, 4/5, seed=3)", random_gnp(28, Fraction(4, 5), seed=3)),
    ]


def run(repeat: int) -> None:
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    header = f"{'case':<24}{'cliques':>16}" + "".join(
        f"{b:>12}" for b in backends
    )
    print(header)
    print("-" * len(header))
    for name, g in cases():
        times = {}
        total = None
        for backend in backends:
            samples = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                result = census(g, backend=backend)
                samples.append(time.perf_counter() - t0)
            if total is None:
                total = result.total
            elif result.total != total:
                raise SystemExit(
                    f"backend disagreement on {name}: "
                    f"{result.total} != {total}"
                )
            times[backend] = statistics.median(samples)
        row = f"{name:<24}{total:>16}" + "".join(
            f"{times[b]:>11.4f}s" for b in backends
        )
        if "compiled" in times and "pure" in times and times["compiled"] > 0:
            row += f"   x{times['pure'] / times['compiled']:.1f}"
        print(row)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--repeat", type=int, default=3, help="samples per case (default 3)"
    )
    args = parser.parse_args()
    run(args.repeat)


if __name__ == "__main__":
    main()
