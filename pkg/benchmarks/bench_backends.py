"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_backends.py [--repeat 3] [--bound 40]

Workloads: solving the full product of a random two-counter game (attractor
kernel inside Zielonka) and the repetition number of a random function on
``2 ** 14`` points (rho-length kernel). Both backends must agree.
"""
import argparse
import time

import numpy as np

from paramgames import _kernels
from paramgames.gameform import repetition_number
from paramgames.gameform.functions import BoolFunction
from paramgames.randgen import random_param_game
from paramgames.solver import IndexedGame, zielonka
from paramgames.unfold import product_arrays


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--bound", type=int, default=40, help="per-counter bound of the product")
    ap.add_argument("--bits", type=int, default=14, help="arity of the random function")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    pg = random_param_game(rng, 12, (3, 2), n_leaves=2, max_out=3, n_priorities=5)
    src, dst, owner, prio, _ = product_arrays(pg, (args.bound, args.bound))
    game = IndexedGame(len(owner), src, dst, owner, prio)
    f = BoolFunction.from_map(args.bits, rng.integers(0, 1 << args.bits, size=1 << args.bits))

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if _kernels.HAVE_NUMBA:
        # compile outside the timed region
        _kernels.set_backend("numba")
        zielonka(IndexedGame(2, [0, 1], [1, 0], [0, 1], [0, 1]))
        repetition_number(BoolFunction.from_map(1, [1, 0]))

    print(f"product states: {game.n}, edges: {len(src)}; function on 2^{args.bits} points")
    print(f"{'workload':<22}{'backend':<8}{'seconds':>10}")
    answers = {}
    for label, fn in (("zielonka product", lambda: zielonka(game)[0][0].sum()),
                      ("repetition number", lambda: repetition_number(f))):
        for name in backends:
            _kernels.set_backend(name)
            secs, ans = best_of(fn, args.repeat)
            answers.setdefault(label, set()).add(int(ans))
            print(f"{label:<22}{name:<8}{secs:>10.4f}")
    for label, vals in answers.items():
        if len(vals) != 1:
            raise SystemExit(f"backends disagree on {label}: {sorted(vals)}")
    print("backends agree")


if __name__ == "__main__":
    main()
