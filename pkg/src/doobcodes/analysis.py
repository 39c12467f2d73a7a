"""
Things done with a verified check matrix: single-error decoding, the
weight-3 count on the K4-over-Z4 coordinates, and the xi-multiplication
permutation of quasi-cyclic codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .check_matrix import CheckMatrix, pack, syndrome, verify_perfect, weight1_syndromes
from .doob_space import Vertex, enumerate_weight1
from .galois_ring import GaloisRing, preset_ring


class NotPerfect(ValueError):
    pass


class NotQuasiCyclic(ValueError):
    pass


@dataclass(frozen=True)
class DecoderTable:
    matrix: CheckMatrix
    lookup: dict[int, Vertex]  # packed syndrome -> weight-1 error


def build_decoder(M: CheckMatrix) -> DecoderTable:
    report = verify_perfect(M)
    if not report.is_perfect:
        raise NotPerfect("decoder needs a matrix that verifies 1-perfect")
    shape = M.shape
    codes = pack(weight1_syndromes(M)).tolist()
    lookup = {c: p.to_vertex(shape) for c, p in zip(codes, enumerate_weight1(shape))}
    return DecoderTable(M, lookup)


def decode(table: DecoderTable, z: Vertex) -> Vertex:
    """The unique codeword within distance 1 of z."""
    s = syndrome(table.matrix, z)
    if not any(s):
        return z
    code = sum(v << (2 * k) for k, v in enumerate(s))
    return z - table.lookup[code]


@dataclass(frozen=True)
class Weight3Report:
    order2_count: int
    order4_count: int


def weight3_last_part(M: CheckMatrix) -> Weight3Report:
    """Count codewords of weight 3 supported on the last n'' coordinates.

    Each solution of a*A''_i + b*A''_j + c*A''_k = 0 with i < j < k and
    a, b, c in {1, 2, 3} is one codeword; those with a = b = c = 2 have order 2.
    """
    cols = M.right.T % 4
    n = len(cols)
    if n < 3:
        return Weight3Report(0, 0)
    multiples = {k: pack(k * cols % 4).tolist() for k in (1, 2, 3)}
    # packed value of c*A''_k -> list of (k, c)
    where: dict[int, list[tuple[int, int]]] = {}
    for c in (1, 2, 3):
        for k, code in enumerate(multiples[c]):
            where.setdefault(code, []).append((k, c))
    order2 = order4 = 0
    for i, j in combinations(range(n), 2):
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                target = pack(-(a * cols[i] + b * cols[j]) % 4)
                for k, c in where.get(int(target), ()):
                    if k > j:
                        if a == b == c == 2:
                            order2 += 1
                        else:
                            order4 += 1
    return Weight3Report(order2, order4)


def quasi_cyclic_permutation(
    M: CheckMatrix, ring: GaloisRing | None = None
) -> list[list[int]]:
    """Cycles of the column permutation induced by multiplying every column by xi.

    Columns are numbered globally (left part first, then right). Pairs must
    map onto pairs in order and right columns onto right columns; otherwise
    NotQuasiCyclic is raised.
    """
    if M.shape.nprime:
        raise NotQuasiCyclic("matrix has a Z2 part; xi-multiplication is undefined there")
    if ring is None:
        ring = preset_ring(M.rows)
    if ring.delta != M.rows:
        raise ValueError(f"ring delta {ring.delta} does not match {M.rows} rows")
    times_xi = lambda col: ring.mul(tuple(col), ring.xi)

    left = [tuple(c) for c in M.left.T.tolist()]
    pairs = {(left[2 * i], left[2 * i + 1]): i for i in range(M.shape.m)}
    right = {tuple(c): k for k, c in enumerate(M.right.T.tolist())}
    if len(pairs) != M.shape.m or len(right) != M.shape.npp:
        raise NotQuasiCyclic("repeated columns; permutation is not well defined")

    perm = [0] * (2 * M.shape.m + M.shape.npp)
    for (b1, b2), i in pairs.items():
        j = pairs.get((times_xi(b1), times_xi(b2)))
        if j is None:
            raise NotQuasiCyclic(f"xi * pair {i} is not a pair of the matrix")
        perm[2 * i], perm[2 * i + 1] = 2 * j, 2 * j + 1
    offset = 2 * M.shape.m
    for col, k in right.items():
        j = right.get(times_xi(col))
        if j is None:
            raise NotQuasiCyclic(f"xi * right column {k} is not a right column")
        perm[offset + k] = offset + j

    cycles = []
    seen = np.zeros(len(perm), dtype=bool)
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        cycles.append(cyc)
    return cycles
