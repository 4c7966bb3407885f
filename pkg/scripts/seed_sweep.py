"""Run the Monte Carlo check over many seeds and tabulate z-scores."""

import argparse
import time

from laplace_series.montecarlo import DEFAULT_SEED, SimConfig, simulate


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=20)
    parser.add_argument("--samples", type=int, default=1_000_000)
    parser.add_argument("--truncation", type=int, default=1_000)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    seeds = [DEFAULT_SEED] + list(range(1, args.seeds))
    excursions = {}
    for seed in seeds:
        t0 = time.perf_counter()
        result = simulate(SimConfig(master_seed=seed, samples=args.samples, truncation=args.truncation), args.workers)
        cells = []
        for r in result.moments + result.mgf:
            key = f"{r.kind[0]}{r.order_or_point:g}"
            cells.append(f"{key}:{r.z_score:+5.2f}")
            if abs(r.z_score) >= 4:
                excursions[key] = excursions.get(key, 0) + 1
        print(f"{seed:#20x}  {' '.join(cells)}  ({time.perf_counter() - t0:.1f}s)", flush=True)
    print("excursions |z| >= 4:", excursions or "none")


if __name__ == "__main__":
    main()
