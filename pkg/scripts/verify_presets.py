"""Verify every preset matrix and print shape, subgroup size and timing."""

import time

from doobcodes.check_matrix import verify_perfect
from doobcodes.constructions import PRESETS


def main():
    for name, build in PRESETS.items():
        start = time.perf_counter()
        M = build()
        r = verify_perfect(M)
        elapsed = time.perf_counter() - start
        s = M.shape
        print(
            f"{name:10s} shape=({s.m},{s.nprime},{s.npp}) perfect={r.is_perfect} "
            f"subgroup={r.subgroup_size} time={elapsed:.2f}s"
        )


if __name__ == "__main__":
    main()
