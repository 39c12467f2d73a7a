"""
Vertices of the Doob graph D(m, n' + n'').

A vertex lives in Z4^(2m) x Z2^(2n') x Z4^(n''). The first part is read in
adjacent pairs, each pair one Shrikhande component; the middle part in pairs,
each a K4 component written over Z2^2; the last part coordinate by coordinate,
each a K4 component written over Z4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

# Shrikhande connection set, in the order used for weight-1 enumeration
SHRIKHANDE_GENERATORS = ((0, 1), (1, 1), (1, 0), (0, 3), (3, 3), (3, 0))
K4_PAIR_GENERATORS = ((0, 1), (1, 1), (1, 0))
K4_SINGLE_GENERATORS = (1, 2, 3)

_SHRIKHANDE_SET = frozenset(SHRIKHANDE_GENERATORS)


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    m: int
    nprime: int
    npp: int

    def __post_init__(self):
        if min(self.m, self.nprime, self.npp) < 0:
            raise ValueError(f"negative component count in {self}")
        if self.m + self.nprime + self.npp == 0:
            raise ValueError("shape has no coordinates")

    def __str__(self):
        return f"({self.m},{self.nprime},{self.npp})"

    @property
    def ball_size(self) -> int:
        """Vertices at distance <= 1 from a fixed vertex."""
        return 1 + 6 * self.m + 3 * self.nprime + 3 * self.npp

    @property
    def space_size(self) -> int:
        return 4 ** (2 * self.m) * 2 ** (2 * self.nprime) * 4**self.npp

    @property
    def length(self) -> int:
        return 2 * self.m + 2 * self.nprime + self.npp


@dataclass(frozen=True)
class Vertex:
    """Flat coordinate tuples for the three parts."""

    left: tuple[int, ...]
    middle: tuple[int, ...] = ()
    right: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(int(v) for v in self.left))
        object.__setattr__(self, "middle", tuple(int(v) for v in self.middle))
        object.__setattr__(self, "right", tuple(int(v) for v in self.right))
        if len(self.left) % 2 or len(self.middle) % 2:
            raise ValueError("paired parts must have even length")
        if any(v not in (0, 1, 2, 3) for v in self.left + self.right):
            raise ValueError("Z4 entries must lie in 0..3")
        if any(v not in (0, 1) for v in self.middle):
            raise ValueError("Z2 entries must lie in 0..1")

    @property
    def shape(self) -> Shape:
        return Shape(len(self.left) // 2, len(self.middle) // 2, len(self.right))

    @classmethod
    def zero(cls, shape: Shape) -> "Vertex":
        return cls((0,) * (2 * shape.m), (0,) * (2 * shape.nprime), (0,) * shape.npp)

    def _check_same(self, other: "Vertex"):
        if self.shape != other.shape:
            raise ShapeMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "Vertex") -> "Vertex":
        self._check_same(other)
        return Vertex(
            tuple((a + b) % 4 for a, b in zip(self.left, other.left)),
            tuple(a ^ b for a, b in zip(self.middle, other.middle)),
            tuple((a + b) % 4 for a, b in zip(self.right, other.right)),
        )

    def __neg__(self) -> "Vertex":
        return Vertex(
            tuple(-a % 4 for a in self.left), self.middle, tuple(-a % 4 for a in self.right)
        )

    def __sub__(self, other: "Vertex") -> "Vertex":
        return self + (-other)

    def __str__(self):
        return format_vertex(self)


@dataclass(frozen=True)
class ErrorPattern:
    """A weight-1 vertex: ``part`` is "left", "middle" or "right"; ``index`` is
    the 0-based pair index (left, middle) or coordinate index (right)."""

    part: str
    index: int
    values: tuple[int, ...]

    def to_vertex(self, shape: Shape) -> Vertex:
        left = [0] * (2 * shape.m)
        middle = [0] * (2 * shape.nprime)
        right = [0] * shape.npp
        target = {"left": left, "middle": middle, "right": right}[self.part]
        if self.part == "right":
            target[self.index] = self.values[0]
        else:
            target[2 * self.index : 2 * self.index + 2] = self.values
        return Vertex(tuple(left), tuple(middle), tuple(right))

    def __str__(self):
        return f"{self.part}[{self.index}]={''.join(map(str, self.values))}"


def shrikhande_weight(pair: Sequence[int]) -> int:
    x, y = pair[0] % 4, pair[1] % 4
    if x == 0 and y == 0:
        return 0
    return 1 if (x, y) in _SHRIKHANDE_SET else 2


def weight(v: Vertex) -> int:
    w = sum(shrikhande_weight(v.left[i : i + 2]) for i in range(0, len(v.left), 2))
    w += sum(1 for i in range(0, len(v.middle), 2) if v.middle[i] or v.middle[i + 1])
    w += sum(1 for z in v.right if z)
    return w


def distance(u: Vertex, v: Vertex) -> int:
    return weight(u - v)


def enumerate_weight1(shape: Shape) -> list[ErrorPattern]:
    out = []
    for i in range(shape.m):
        out.extend(ErrorPattern("left", i, xy) for xy in SHRIKHANDE_GENERATORS)
    for i in range(shape.nprime):
        out.extend(ErrorPattern("middle", i, vw) for vw in K4_PAIR_GENERATORS)
    for i in range(shape.npp):
        out.extend(ErrorPattern("right", i, (z,)) for z in K4_SINGLE_GENERATORS)
    return out


def iter_vertices(shape: Shape) -> Iterator[Vertex]:
    """Every vertex of the space; only sensible for small shapes."""
    import itertools

    for left in itertools.product(range(4), repeat=2 * shape.m):
        for middle in itertools.product(range(2), repeat=2 * shape.nprime):
            for right in itertools.product(range(4), repeat=shape.npp):
                yield Vertex(left, middle, right)


def format_vertex(v: Vertex) -> str:
    j = "".join
    return f"{j(map(str, v.left))}|{j(map(str, v.middle))}|{j(map(str, v.right))}"


def parse_vertex(text: str, shape: Shape | None = None) -> Vertex:
    """Parse "0123|10|32"; raises ValueError on bad symbols or shape mismatch."""
    parts = text.strip().split("|")
    if len(parts) != 3:
        raise ValueError(f"vertex text needs exactly two '|' separators: {text!r}")
    left, middle, right = parts
    if any(ch not in "0123" for ch in left + right) or any(ch not in "01" for ch in middle):
        raise ValueError(f"bad symbol in vertex text {text!r}")
    v = Vertex(tuple(map(int, left)), tuple(map(int, middle)), tuple(map(int, right)))
    if shape is not None and v.shape != shape:
        raise ShapeMismatch(f"vertex shape {v.shape} does not match {shape}")
    return v
