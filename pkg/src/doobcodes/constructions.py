"""
Check matrices of additive 1-perfect codes in D(m, n' + n'').

Everything here returns a ``CheckMatrix``; none of the constructors verify
their own output. ``construct`` chains them for any admissible parameters
with odd delta, and callers that publish a matrix are expected to run
``verify_perfect`` first (the CLI always does).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .check_matrix import CheckMatrix, has_order2_row, pack
from .doob_space import Shape
from .galois_ring import Element, GaloisRing, gf2_is_irreducible, preset_ring


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionParams:
    gamma: int
    delta: int
    m: int
    nprime: int
    npp: int

    @property
    def shape(self) -> Shape:
        return Shape(self.m, self.nprime, self.npp)


def admissible_params(gamma: int, delta: int) -> list[ConstructionParams]:
    """All (m, n', n'') satisfying the necessary conditions for (gamma, delta),
    ordered by increasing n''."""
    if gamma < 0 or gamma % 2 or delta < 2:
        return []
    total = (2 ** (gamma + 2 * delta) - 1) // 3  # 2m + n' + n''
    order2 = 2 ** (gamma + delta) - 1  # 3n' + n''
    out = []
    for npp in range(0, 2**delta):
        if npp == 1 or (order2 - npp) % 3:
            continue
        nprime = (order2 - npp) // 3
        rest = total - nprime - npp
        if nprime < 0 or rest < 0 or rest % 2:
            continue
        out.append(ConstructionParams(gamma, delta, rest // 2, nprime, npp))
    return out


# -- literal matrices --------------------------------------------------------


def _from_rows(rows: Sequence[str]) -> CheckMatrix:
    left, middle, right = zip(*(r.split("|") for r in rows))
    block = lambda part: np.array([[int(ch) for ch in s] for s in part], dtype=np.int64)
    return CheckMatrix(len(rows), block(left), block(middle), block(right))


def base_d814() -> CheckMatrix:
    """The explicit 3 x 22 check matrix of a 1-perfect code in D(8,1+4)."""
    return _from_rows(
        [
            "1022011221231110|10|1001",
            "0110222312212131|11|0101",
            "2201102123121203|01|0011",
        ]
    )


def alt_d707() -> CheckMatrix:
    """A third, computer-found 1-perfect code in D(7,0+7)."""
    return _from_rows(
        [
            "10220111321211||1003011",
            "01102212113210||0101321",
            "22011032121123||0010111",
        ]
    )


# -- quasi-cyclic families ---------------------------------------------------

# Each seed ((a1, b1), (a2, b2)) stands for the column pair
# (xi^(a1+i) + 2 xi^(b1+i), xi^(a2+i) + 2 xi^(b2+i)); the family is closed
# under the shift i and, for delta 5 and 7, under the Frobenius powers f^l,
# which multiply every exponent by 2^l.
QC_SEEDS: dict[int, tuple[tuple[tuple[int, int], tuple[int, int]], ...]] = {
    3: (((0, 2), (1, 5)),),
    5: (((1, 2), (2, 5)),),
    7: (((1, 2), (2, 7)), ((1, 4), (2, 17)), ((1, 10), (2, 57))),
}
QC_FROBENIUS = {3: (0,), 5: tuple(range(5)), 7: tuple(range(7))}


def _qc_element(ring: GaloisRing, a: int, b: int) -> Element:
    return ring.add(ring.xi_power(a), ring.scale(2, ring.xi_power(b)))


def quasi_cyclic(delta: int) -> CheckMatrix:
    """Quasi-cyclic 1-perfect code in D((2^d-1)(2^d-2)/6, 0 + (2^d-1)) for d = 3, 5, 7."""
    if delta not in QC_SEEDS:
        raise ConstructionError(f"no quasi-cyclic family for delta={delta}")
    ring = preset_ring(delta)
    n = ring.order
    left = []
    for (a1, b1), (a2, b2) in QC_SEEDS[delta]:
        for l in QC_FROBENIUS[delta]:
            q = 2**l
            for i in range(n):
                left.append(_qc_element(ring, q * (a1 + i), q * (b1 + i)))
                left.append(_qc_element(ring, q * (a2 + i), q * (b2 + i)))
    right = [ring.xi_power(i) for i in range(n)]
    return CheckMatrix.from_columns(delta, left=left, right=right)


def cyclotomic_cosets(n: int) -> list[list[int]]:
    """Orbits of x -> 2x on {1, ..., n-1}, each sorted, ordered by minimum."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    seen = set()
    out = []
    for x in range(1, n):
        if x in seen:
            continue
        orbit = []
        y = x
        while y not in orbit:
            orbit.append(y)
            y = 2 * y % n
        seen.update(orbit)
        out.append(sorted(orbit))
    return out


def seed_differences(delta: int) -> list[int]:
    """For every seed pair (c, c'), the exponent differences b - a of the six
    covered elements c, c', -c, -c', c+c', -(c+c') written as xi^a + 2 xi^b."""
    ring = preset_ring(delta)
    out = []
    for (a1, b1), (a2, b2) in QC_SEEDS[delta]:
        c = _qc_element(ring, a1, b1)
        c2 = _qc_element(ring, a2, b2)
        s = ring.add(c, c2)
        for elem in (c, c2, ring.neg(c), ring.neg(c2), s, ring.neg(s)):
            a, b = ring.two_adic(elem)
            out.append((ring.xi_log(b) - ring.xi_log(a)) % ring.order)
    return out


def seed_coverage_ok(delta: int) -> bool:
    """The coset criterion: the differences must fall in pairwise distinct
    orbits of the Frobenius powers in use, and together hit every orbit."""
    n = 2**delta - 1
    mults = {pow(2, l, n) for l in QC_FROBENIUS[delta]}
    orbit_of = {}
    for x in range(1, n):
        if x not in orbit_of:
            orbit = {x * q % n for q in mults}
            for y in orbit:
                orbit_of[y] = min(orbit)
    diffs = seed_differences(delta)
    if 0 in diffs:
        return False
    hit = [orbit_of[d] for d in diffs]
    return len(set(hit)) == len(hit) == len(set(orbit_of.values()))


# -- recursive constructions -------------------------------------------------


def _ring_for(M: CheckMatrix, ring: GaloisRing | None) -> GaloisRing:
    if ring is None:
        try:
            return preset_ring(M.rows)
        except ValueError as exc:
            raise ConstructionError(str(exc)) from exc
    if ring.delta != M.rows:
        raise ConstructionError(f"ring has delta={ring.delta} but matrix has {M.rows} rows")
    return ring


def _check_units(ring: GaloisRing, x: Element, y: Element, names: str):
    for label, v in zip(names.split(","), (x, y, ring.add(x, y))):
        if not ring.is_unit(v):
            raise ConstructionError(f"{label} must be a unit of GR(4^{ring.delta})")


def _extend(M: CheckMatrix, extra: int):
    """Column lists of M padded with ``extra`` zero rows."""
    z = (0,) * extra
    return (
        [tuple(c) + z for c in M.left.T.tolist()],
        [tuple(c) + z for c in M.middle.T.tolist()],
        [tuple(c) + z for c in M.right.T.tolist()],
    )


def delta_step(
    prev: CheckMatrix,
    alpha: Sequence[int] | None = None,
    beta: Sequence[int] | None = None,
    ring: GaloisRing | None = None,
) -> CheckMatrix:
    """Lift a 1-perfect check matrix with r rows (gamma = 0) to one with r + 2 rows.

    ``alpha`` and ``beta`` are elements of GR(4^r) with alpha, beta and
    alpha + beta units; they default to 1 and xi.
    """
    ring = _ring_for(prev, ring)
    alpha = ring.check(alpha if alpha is not None else ring.one)
    beta = ring.check(beta if beta is not None else ring.xi)
    _check_units(ring, alpha, beta, "alpha,beta,alpha+beta")
    if has_order2_row(prev):
        raise ConstructionError("previous matrix has a row of order 2")

    t = ring.unit_count
    elems = ring.elements
    mul = ring.mul

    left: list[tuple[int, ...]] = []
    for c in elems[: t // 2]:  # B
        left += [mul(c, alpha) + (2, 0), mul(c, beta) + (0, 2)]
    for c in elems:  # W; alpha column carries (1,0) so that 2W matches D'
        left += [mul(c, alpha) + (1, 0), mul(c, beta) + (0, 1)]
    for c in elems:  # V
        left += [mul(c, alpha) + (1, 2), mul(c, beta) + (1, 3)]
    e_left, e_mid, e_right = _extend(prev, 2)
    left += e_left

    middle = list(e_mid)
    for c in elems[t:]:  # D'
        middle += [ring.halve(mul(c, alpha)) + (1, 0), ring.halve(mul(c, beta)) + (0, 1)]

    return CheckMatrix.from_columns(prev.rows + 2, left, middle, e_right)


@dataclass(frozen=True)
class Replacement:
    middle_pair: int
    left_pair: int
    appended: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def _doubles(x: np.ndarray, y: np.ndarray) -> frozenset[int]:
    return frozenset(pack(np.stack([2 * x, 2 * y, 2 * (x + y)]) % 4).tolist())


def replace_middle_pair(M: CheckMatrix) -> tuple[CheckMatrix, Replacement]:
    """One n''-increasing step: trade the first middle pair and a matching
    left pair for three new right columns B1, B2, B1 + B2.

    Left pairs are scanned from the last one backwards; any pair whose
    doubles equal those of the middle pair works.
    """
    if M.shape.nprime == 0:
        raise ConstructionError("no middle pair left to replace")
    d1, d2 = M.middle[:, 0], M.middle[:, 1]
    target = frozenset(pack(np.stack([2 * d1, 2 * d2, 2 * ((d1 + d2) % 2)])).tolist())
    pairs = M.left_pairs
    for j in reversed(range(len(pairs))):
        b1, b2 = pairs[j]
        if _doubles(b1, b2) == target:
            break
    else:
        raise ConstructionError(
            "no left pair matches middle pair 0 "
            f"(columns {d1.tolist()}, {d2.tolist()})"
        )
    new_cols = (b1, b2, (b1 + b2) % 4)
    left = np.delete(M.left, [2 * j, 2 * j + 1], axis=1)
    middle = M.middle[:, 2:]
    right = np.concatenate([M.right, np.stack(new_cols, axis=1)], axis=1)
    rec = Replacement(0, j, tuple(tuple(int(v) for v in c) for c in new_cols))  # type: ignore[arg-type]
    return CheckMatrix(M.rows, left, middle, right), rec


def increase_npp(M: CheckMatrix, count: int) -> CheckMatrix:
    """Apply ``count`` replacement steps: shape (m, n', n'') -> (m-k, n'-k, n''+3k)."""
    if count < 0 or count > M.shape.nprime:
        raise ConstructionError(f"count must be in 0..{M.shape.nprime}")
    for _ in range(count):
        M, _rec = replace_middle_pair(M)
    return M


def _gf2m_mul(a: int, b: int, poly: int, deg: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= poly
    return r


def gf4_triple_partition(gamma: int) -> list[tuple[tuple[int, ...], ...]]:
    """Partition of the nonzero vectors of Z2^gamma into triples {a, b, a+b}
    taken from the cosets x*GF(4)* in GF(2^gamma). Vectors are returned doubled
    (entries 0/2), ready to be appended as order-2 rows."""
    if gamma < 2 or gamma % 2:
        raise ConstructionError("gamma must be even and at least 2")
    poly = next(
        p for p in range(1 << gamma, 1 << (gamma + 1)) if gf2_is_irreducible(p)
    )
    mul = lambda a, b: _gf2m_mul(a, b, poly, gamma)
    omega = next(x for x in range(2, 1 << gamma) if mul(x, mul(x, x)) == 1)
    omega2 = mul(omega, omega)
    vec = lambda x: tuple(2 * (x >> k & 1) for k in range(gamma))
    seen = set()
    out = []
    for x in range(1, 1 << gamma):
        if x in seen:
            continue
        triple = (x, mul(x, omega), mul(x, omega2))
        seen.update(triple)
        out.append(tuple(vec(v) for v in triple))
    return out


def gamma_step(
    M: CheckMatrix,
    gamma: int,
    g: Sequence[int] | None = None,
    d: Sequence[int] | None = None,
    ring: GaloisRing | None = None,
) -> CheckMatrix:
    """Append ``gamma`` order-2 rows to a gamma = 0 check matrix in one step.

    ``g`` and ``d`` are elements of GR(4^delta) (delta = rows of M) with
    g, d and g + d units; defaults 1 and xi.
    """
    if gamma < 2 or gamma % 2:
        raise ConstructionError("gamma must be even and at least 2")
    ring = _ring_for(M, ring)
    g = ring.check(g if g is not None else ring.one)
    d = ring.check(d if d is not None else ring.xi)
    _check_units(ring, g, d, "g,d,g+d")
    if has_order2_row(M):
        raise ConstructionError("matrix has a row of order 2")

    l = ring.unit_count
    units = ring.elements[: l // 2]
    non_units = ring.elements[l:]
    triples = gf4_triple_partition(gamma)

    left: list[tuple[int, ...]] = []
    for a, b, _c in triples:  # F_i
        for u in units:
            left += [ring.mul(u, g) + a, ring.mul(u, d) + b]
    j_left, j_mid, j_right = _extend(M, gamma)
    left += j_left

    middle = list(j_mid)
    for a, b, _c in triples:  # G'_i
        ha, hb = ring.halve(a), ring.halve(b)
        for u in non_units:
            middle += [ring.halve(ring.mul(u, g)) + ha, ring.halve(ring.mul(u, d)) + hb]

    return CheckMatrix.from_columns(M.rows + gamma, left, middle, j_right)


# -- parameterized construction ----------------------------------------------


class UnsupportedParams(ConstructionError):
    pass


def construct(gamma: int, delta: int, npp: int) -> CheckMatrix:
    """Chain base matrix -> delta steps -> n'' increases -> gamma step.

    Raises UnsupportedParams for inadmissible triples and for even delta,
    whose construction is not part of this package.
    """
    params = {p.npp: p for p in admissible_params(gamma, delta)}
    if npp not in params:
        raise UnsupportedParams(f"(gamma={gamma}, delta={delta}, npp={npp}) is not admissible")
    if delta % 2 == 0:
        raise UnsupportedParams(
            "even delta is admissible but not constructed here; "
            "codes for even delta come from an earlier, separate construction"
        )
    M = base_d814()
    while M.rows < delta:
        M = delta_step(M)
    M = increase_npp(M, (npp - 4) // 3)
    if gamma:
        M = gamma_step(M, gamma)
    assert M.shape == params[npp].shape, (M.shape, params[npp])
    return M


PRESETS: dict[str, Callable[[], CheckMatrix]] = {
    "d814": base_d814,
    "d707-qc": lambda: quasi_cyclic(3),
    "d707-alt": alt_d707,
    "d155-qc": lambda: quasi_cyclic(5),
    "d2667-qc": lambda: quasi_cyclic(7),
}
