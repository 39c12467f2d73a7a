"""Tabulate admissible parameters and whether the package constructs and verifies each one."""

import argparse
from dataclasses import dataclass

from doobcodes.check_matrix import verify_perfect
from doobcodes.constructions import UnsupportedParams, admissible_params, construct


@dataclass(frozen=True)
class TableConfig:
    max_gamma: int = 2
    max_delta: int = 5


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-gamma", type=int, default=TableConfig.max_gamma)
    ap.add_argument("--max-delta", type=int, default=TableConfig.max_delta)
    cfg = TableConfig(**{k: v for k, v in vars(ap.parse_args()).items()})
    for gamma in range(0, cfg.max_gamma + 1, 2):
        for delta in range(2, cfg.max_delta + 1):
            for p in admissible_params(gamma, delta):
                try:
                    status = str(verify_perfect(construct(gamma, delta, p.npp)).is_perfect).lower()
                except UnsupportedParams:
                    status = "unsupported"
                print(f"gamma={gamma} delta={delta} m={p.m} nprime={p.nprime} npp={p.npp} perfect={status}")


if __name__ == "__main__":
    main()
