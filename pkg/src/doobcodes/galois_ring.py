"""
Arithmetic in the Galois ring GR(4^d) = Z4[x]/(h(x)).

Elements are tuples of d integers in {0,1,2,3}, lowest coefficient first,
so (1, 3, 2) is 1 + 3*xi + 2*xi^2 where xi is the class of x.

Only primitive basic irreducible moduli are accepted: h mod 2 must be
irreducible and xi must have multiplicative order 2^d - 1, so that the
Teichmuller set is {0} together with the powers of xi.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Element = tuple[int, ...]

# modulus coefficients, constant term first
PRESET_MODULI: dict[int, tuple[int, ...]] = {
    3: (3, 1, 2, 1),  # x^3 + 2x^2 + x + 3
    5: (3, 2, 3, 0, 0, 1),  # x^5 + 3x^2 + 2x + 3
    7: (3, 1, 0, 0, 2, 0, 0, 1),  # x^7 + 2x^4 + x + 3
}


class RingError(ValueError):
    pass


def _gf2_polymod(a: int, b: int) -> int:
    """Remainder of a by b, polynomials over GF(2) packed as bit masks."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def gf2_is_irreducible(mask: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = mask.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in range(1 << d):
            if _gf2_polymod(mask, (1 << d) | low) == 0:
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def parse_element(text: str, delta: int) -> Element:
    """Parse the digit form, e.g. "132" -> (1, 3, 2)."""
    if len(text) != delta or any(ch not in "0123" for ch in text):
        raise RingError(f"expected {delta} digits 0-3, got {text!r}")
    return tuple(int(ch) for ch in text)


def format_element(a: Sequence[int]) -> str:
    return "".join(str(v) for v in a)


class GaloisRing:
    """GR(4^delta) for a fixed primitive basic irreducible modulus.

    Immutable after construction. ``elements`` lists the units first, arranged
    so that ``elements[i] + elements[t - 1 - i] == 0`` for ``i < t`` (0-based;
    t = unit_count), followed by the non-units in lexicographic order.
    """

    def __init__(self, delta: int, modulus: Sequence[int]):
        if delta < 2:
            raise RingError("delta must be at least 2")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != delta + 1 or modulus[-1] != 1:
            raise RingError(f"modulus must be monic of degree {delta}")
        if any(c not in (0, 1, 2, 3) for c in modulus):
            raise RingError("modulus coefficients must lie in {0,1,2,3}")
        mask = sum((c & 1) << k for k, c in enumerate(modulus))
        if not gf2_is_irreducible(mask):
            raise RingError("modulus is reducible mod 2 (not basic irreducible)")

        self.delta = delta
        self.modulus = modulus
        self.zero: Element = (0,) * delta
        self.one: Element = (1,) + (0,) * (delta - 1)
        self.xi: Element = (0, 1) + (0,) * (delta - 2)
        self.order = 2**delta - 1
        self.unit_count = self.order * 2**delta

        xi_pows = [self.one]
        for _ in range(self.order):
            xi_pows.append(self.mul(xi_pows[-1], self.xi))
        if xi_pows[self.order] != self.one or any(
            xi_pows[self.order // p] == self.one for p in _prime_factors(self.order)
        ):
            raise RingError("class of x does not have order 2^delta - 1 (not primitive)")
        self._xi_pows = tuple(xi_pows[: self.order])
        self._log = {a: k for k, a in enumerate(self._xi_pows)}
        # each residue class mod 2 holds exactly one Teichmuller element
        self._teich = {tuple(v & 1 for v in a): a for a in self._xi_pows}
        self._teich[self.zero] = self.zero

    def __repr__(self):
        return f"GaloisRing(delta={self.delta}, modulus={self.modulus})"

    # -- basic arithmetic -------------------------------------------------

    def check(self, a: Sequence[int]) -> Element:
        a = tuple(a)
        if len(a) != self.delta:
            raise RingError(f"element length {len(a)} != delta {self.delta}")
        if any(v not in (0, 1, 2, 3) for v in a):
            raise RingError(f"entries must lie in 0..3: {a}")
        return a

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % 4 for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        return tuple(-x % 4 for x in a)

    def sub(self, a: Element, b: Element) -> Element:
        return tuple((x - y) % 4 for x, y in zip(a, b))

    def scale(self, k: int, a: Element) -> Element:
        return tuple(k * x % 4 for x in a)

    def mul(self, a: Element, b: Element) -> Element:
        d = self.delta
        if len(a) != d or len(b) != d:
            raise RingError("operand length does not match ring")
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        h = self.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % 4
            if c:
                for t in range(d + 1):
                    prod[k - d + t] -= c * h[t]
        return tuple(v % 4 for v in prod[:d])

    def power(self, a: Element, k: int) -> Element:
        if k < 0:
            raise RingError("negative exponent")
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def xi_power(self, k: int) -> Element:
        """xi^k with the exponent reduced mod 2^delta - 1 (negative k allowed)."""
        return self._xi_pows[k % self.order]

    def xi_log(self, a: Element) -> int:
        """Exponent k with xi^k == a, for a in T*."""
        try:
            return self._log[tuple(a)]
        except KeyError:
            raise RingError(f"{format_element(a)} is not a power of xi") from None

    # -- 2-adic structure -------------------------------------------------

    def teichmuller(self, c: Element) -> Element:
        """The a in T with c = a + 2b, i.e. the T element with c's residue mod 2."""
        return self._teich[tuple(v & 1 for v in c)]

    def teichmuller_by_squaring(self, c: Element) -> Element:
        # (a + 2b)^2 = a^2, and x^(2^delta) = x on T
        for _ in range(self.delta):
            c = self.mul(c, c)
        return c

    def _square_t(self, a: Element) -> Element:
        if a == self.zero:
            return a
        return self._xi_pows[2 * self._log[a] % self.order]

    def is_teichmuller(self, c: Element) -> bool:
        return self.teichmuller(c) == tuple(c)

    def two_adic(self, c: Element) -> tuple[Element, Element]:
        a = self.teichmuller(c)
        half = self.halve(self.sub(c, a))
        return a, self.teichmuller(half)

    def is_unit(self, c: Element) -> bool:
        return any(v & 1 for v in c)

    def frobenius(self, c: Element) -> Element:
        a, b = self.two_adic(c)
        return self.add(self._square_t(a), self.scale(2, self._square_t(b)))

    def halve(self, c: Sequence[int]) -> Element:
        """Coefficientwise 0 -> 0, 2 -> 1; defined only on 2*GR."""
        if any(v & 1 for v in c):
            raise RingError(f"cannot halve {format_element(c)}: odd coefficient")
        return tuple(v >> 1 for v in c)

    # -- enumeration ------------------------------------------------------

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        all_elems = list(itertools.product(range(4), repeat=self.delta))
        t = self.unit_count
        units: list[Element | None] = [None] * t
        placed = set()
        front = 0
        for u in all_elems:
            if not self.is_unit(u) or u in placed:
                continue
            v = self.neg(u)
            units[front] = u
            units[t - 1 - front] = v
            placed.update((u, v))
            front += 1
        non_units = [c for c in all_elems if not self.is_unit(c)]
        return tuple(units) + tuple(non_units)  # type: ignore[arg-type]

    @property
    def units(self) -> tuple[Element, ...]:
        return self.elements[: self.unit_count]

    @property
    def non_units(self) -> tuple[Element, ...]:
        return self.elements[self.unit_count :]

    def teichmuller_set(self) -> tuple[Element, ...]:
        return (self.zero,) + self._xi_pows

    def iter_elements(self) -> Iterable[Element]:
        return iter(self.elements)


def make_ring(delta: int, modulus: Sequence[int] | None = None) -> GaloisRing:
    """Build GR(4^delta); the modulus defaults to the built-in preset for 3, 5, 7."""
    if modulus is None:
        try:
            modulus = PRESET_MODULI[delta]
        except KeyError:
            raise RingError(f"no preset modulus for delta={delta}; supply one") from None
    return GaloisRing(delta, modulus)


@lru_cache(maxsize=None)
def preset_ring(delta: int) -> GaloisRing:
    """Cached ring for the built-in moduli."""
    return make_ring(delta)
