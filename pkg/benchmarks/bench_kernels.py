"""Benchmark the numba kernels against the pure-numpy fallback.

Two workloads:
* raw batched octonion multiplication at several batch sizes, and
* the order-conversion matrix inner loop (T tree products -> T inverses ->
  T^2 pairwise products), sized like the 6-, 7- and 8-factor matrices.

Run:  python benchmarks/bench_kernels.py
(set OCTALG_NO_NUMBA=1 to check which path the package itself would pick)
"""

import time

import numpy as np

from octalg import kernels

RNG = np.random.default_rng(20240)


def _random_batch(n: int) -> np.ndarray:
    return RNG.uniform(-9.0, 9.0, size=(n, 8))


def _time(func, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - start)
    return best


def bench_multiply(impl, n: int) -> float:
    a = _random_batch(n)
    b = _random_batch(n)
    impl.multiply(a[:16], b[:16])  # warmup (JIT compile)
    return _time(lambda: impl.multiply(a, b))


def bench_matrix(impl, trees: int) -> float:
    products = _random_batch(trees)
    impl.inverse(products[:4])
    impl.multiply(products[:4], products[:4])

    def run():
        inverses = impl.inverse(products)
        left = np.repeat(inverses, trees, axis=0)
        right = np.tile(products, (trees, 1))
        impl.multiply(left, right)

    return _time(run)


def main() -> None:
    impls = [kernels.NUMPY_IMPL]
    if kernels.NUMBA_IMPL is not None:
        impls.append(kernels.NUMBA_IMPL)
    print(f"active implementation for the package: {kernels.IMPLEMENTATION}")

    print("\nbatched multiply, seconds per call (best of 5):")
    print(f"{'batch':>10} " + " ".join(f"{impl.name:>12}" for impl in impls))
    for n in (1_000, 10_000, 100_000):
        times = [bench_multiply(impl, n) for impl in impls]
        row = " ".join(f"{t:12.6f}" for t in times)
        speedup = f"  ({times[0] / times[-1]:.1f}x)" if len(times) > 1 else ""
        print(f"{n:>10} {row}{speedup}")

    print("\norder-conversion matrix workload (T inverses + T^2 products):")
    print(f"{'T trees':>10} " + " ".join(f"{impl.name:>12}" for impl in impls))
    for trees in (42, 132, 429):
        times = [bench_matrix(impl, trees) for impl in impls]
        row = " ".join(f"{t:12.6f}" for t in times)
        speedup = f"  ({times[0] / times[-1]:.1f}x)" if len(times) > 1 else ""
        print(f"{trees:>10} {row}{speedup}")


if __name__ == "__main__":
    main()
