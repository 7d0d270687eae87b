"""Benchmark the numba kernels against the numpy fallback.

Run with: python -m lcmlat.bench [--size-rank R] [--repeats N]

Builds Boolean lattices (the worst case for the sweeps, since nothing
fails early) and random lcm-lattices, then times each kernel under both
backends and prints a small table.
"""

from __future__ import annotations

import argparse
import time

from . import kernels
from .audit import GeneratorConfig, SplitMix64, random_monomial_ideal
from .lattice import boolean_lattice, build_lcm_lattice


def _time(fn, *args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _pairs():
    yield "modular_violation", kernels.modular_violation_numpy, 3
    yield "distributive_violation", kernels.distributive_violation_numpy, 2
    yield "pentagon_search", kernels.pentagon_search_numpy, 3
    yield "diamond_search", kernels.diamond_search_numpy, 3


def run(size_rank: int, repeats: int) -> None:
    if not kernels.HAVE_NUMBA:
        print("numba not available; nothing to compare")
        return

    cases = [(f"boolean rank {size_rank}", boolean_lattice(size_rank))]
    rng = SplitMix64(42)
    cfg = GeneratorConfig(n_range=(5, 7), m_range=(7, 9), max_exponent=2)
    I = random_monomial_ideal(cfg, rng)
    cases.append((f"random lcm-lattice ({len(I.generators)} gens)",
                  build_lcm_lattice(I).lattice))

    numba_fns = {
        "modular_violation": kernels.modular_violation_numba,
        "distributive_violation": kernels.distributive_violation_numba,
        "pentagon_search": kernels.pentagon_search_numba,
        "diamond_search": kernels.diamond_search_numba,
    }

    print(f"{'case':<34} {'kernel':<24} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for case_name, L in cases:
        tables = (L.join_table, L.meet_table, L.leq)
        for name, numpy_fn, nargs in _pairs():
            args = tables[:nargs]
            numba_fn = numba_fns[name]
            numba_fn(*args)  # warm up / compile
            t_np = _time(numpy_fn, *args, repeats=repeats)
            t_nb = _time(numba_fn, *args, repeats=repeats)
            print(
                f"{case_name:<34} {name:<24} {t_np * 1e3:>8.2f}ms "
                f"{t_nb * 1e3:>8.2f}ms {t_np / t_nb:>7.1f}x"
            )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size-rank", type=int, default=8,
                        help="rank of the Boolean benchmark lattice")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    run(args.size_rank, args.repeats)


if __name__ == "__main__":
    main()
