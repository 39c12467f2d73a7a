"""
Check matrices (A | A' | A'') and the perfectness test.

A vertex z = (z1 | z2 | z3) has syndrome A z1 + 2 A' z2 + A'' z3 over Z4,
where the middle block is stored over Z2 and doubled at use. The additive
code is the kernel of this map. It is 1-perfect exactly when no column is
zero and the weight-1 syndromes are pairwise distinct, nonzero, and fill
every nonzero element of the image.

Syndromes are packed into integers, entry k contributing s_k * 4**k, for use
as table keys.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .doob_space import (
    K4_PAIR_GENERATORS,
    K4_SINGLE_GENERATORS,
    SHRIKHANDE_GENERATORS,
    ErrorPattern,
    Shape,
    ShapeMismatch,
    Vertex,
    enumerate_weight1,
)

MAX_ROWS = 31  # packed syndromes must fit in int64


def _as_block(cols, rows: int, modulus: int) -> np.ndarray:
    a = np.asarray(cols, dtype=np.int64)
    if a.size == 0:
        return np.zeros((rows, 0), dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != rows:
        raise ValueError(f"block must have {rows} rows, got shape {a.shape}")
    if a.min() < 0 or a.max() >= modulus:
        raise ValueError(f"block entries must lie in 0..{modulus - 1}")
    a = a.copy()
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class CheckMatrix:
    """Blocks are stored as (rows x columns) integer arrays.

    ``left`` has 2m columns over Z4 (pairs are columns 2i, 2i+1), ``middle``
    2n' columns over Z2, ``right`` n'' columns over Z4.
    """

    rows: int
    left: np.ndarray
    middle: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        if not 1 <= self.rows <= MAX_ROWS:
            raise ValueError(f"row count must be in 1..{MAX_ROWS}")
        object.__setattr__(self, "left", _as_block(self.left, self.rows, 4))
        object.__setattr__(self, "middle", _as_block(self.middle, self.rows, 2))
        object.__setattr__(self, "right", _as_block(self.right, self.rows, 4))
        if self.left.shape[1] % 2 or self.middle.shape[1] % 2:
            raise ValueError("paired blocks need an even number of columns")
        Shape(self.left.shape[1] // 2, self.middle.shape[1] // 2, self.right.shape[1])

    @classmethod
    def from_columns(
        cls,
        rows: int,
        left: Sequence[Sequence[int]] = (),
        middle: Sequence[Sequence[int]] = (),
        right: Sequence[Sequence[int]] = (),
    ) -> "CheckMatrix":
        """Build from lists of column vectors rather than row-major blocks."""

        def block(cols):
            if len(cols) == 0:
                return np.zeros((rows, 0), dtype=np.int64)
            return np.asarray(cols, dtype=np.int64).T

        return cls(rows, block(left), block(middle), block(right))

    @property
    def shape(self) -> Shape:
        return Shape(self.left.shape[1] // 2, self.middle.shape[1] // 2, self.right.shape[1])

    @property
    def left_pairs(self) -> list[tuple[np.ndarray, np.ndarray]]:
        return [(self.left[:, 2 * i], self.left[:, 2 * i + 1]) for i in range(self.shape.m)]

    def columns(self) -> np.ndarray:
        """All columns as Z4 vectors (middle ones doubled), global column order."""
        return np.concatenate([self.left, 2 * self.middle, self.right], axis=1).T

    def __eq__(self, other):
        if not isinstance(other, CheckMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and np.array_equal(self.left, other.left)
            and np.array_equal(self.middle, other.middle)
            and np.array_equal(self.right, other.right)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"CheckMatrix(rows={self.rows}, shape={self.shape})"


@dataclass
class VerificationReport:
    is_perfect: bool
    subgroup_size: int
    weight1_count: int
    zero_columns: list[int] = field(default_factory=list)
    duplicate_syndromes: list[tuple[tuple[int, ...], list[ErrorPattern]]] = field(
        default_factory=list
    )
    zero_syndrome_errors: list[ErrorPattern] = field(default_factory=list)


# -- packing ---------------------------------------------------------------


def pack(vectors: np.ndarray) -> np.ndarray:
    """Pack Z4 vectors (last axis) into base-4 integers."""
    vectors = np.asarray(vectors, dtype=np.int64) % 4
    weights = 4 ** np.arange(vectors.shape[-1], dtype=np.int64)
    return vectors @ weights


def unpack(code: int, rows: int) -> tuple[int, ...]:
    return tuple((int(code) >> (2 * k)) & 3 for k in range(rows))


# -- syndromes -------------------------------------------------------------


def syndrome(M: CheckMatrix, z: Vertex) -> tuple[int, ...]:
    if z.shape != M.shape:
        raise ShapeMismatch(f"vertex shape {z.shape} does not match matrix shape {M.shape}")
    s = np.zeros(M.rows, dtype=np.int64)
    if z.left:
        s += M.left @ np.asarray(z.left, dtype=np.int64)
    if z.middle:
        s += 2 * (M.middle @ np.asarray(z.middle, dtype=np.int64))
    if z.right:
        s += M.right @ np.asarray(z.right, dtype=np.int64)
    return tuple(int(v) for v in s % 4)


def weight1_syndromes(M: CheckMatrix) -> np.ndarray:
    """Syndromes of every weight-1 pattern, in ``enumerate_weight1`` order,
    as an (N x rows) array."""
    blocks = []
    if M.shape.m:
        b1 = M.left[:, 0::2].T
        b2 = M.left[:, 1::2].T
        combos = np.stack([x * b1 + y * b2 for x, y in SHRIKHANDE_GENERATORS], axis=1)
        blocks.append(combos.reshape(-1, M.rows))
    if M.shape.nprime:
        d1 = M.middle[:, 0::2].T
        d2 = M.middle[:, 1::2].T
        combos = np.stack([2 * ((v * d1 + w * d2) % 2) for v, w in K4_PAIR_GENERATORS], axis=1)
        blocks.append(combos.reshape(-1, M.rows))
    if M.shape.npp:
        cols = M.right.T
        combos = np.stack([k * cols for k in K4_SINGLE_GENERATORS], axis=1)
        blocks.append(combos.reshape(-1, M.rows))
    if not blocks:
        return np.zeros((0, M.rows), dtype=np.int64)
    return np.concatenate(blocks) % 4


def coverage_table(M: CheckMatrix) -> dict[tuple[int, ...], list[ErrorPattern]]:
    """Map each covered syndrome to the weight-1 patterns producing it."""
    patterns = enumerate_weight1(M.shape)
    table: dict[tuple[int, ...], list[ErrorPattern]] = defaultdict(list)
    for pat, s in zip(patterns, weight1_syndromes(M).tolist()):
        table[tuple(s)].append(pat)
    return dict(table)


def syndrome_subgroup_array(M: CheckMatrix) -> np.ndarray:
    """Elements of the image of the syndrome map as an (N x rows) array,
    obtained by closing {0} under addition of the column generators."""
    elems = np.zeros((1, M.rows), dtype=np.int64)
    seen = {0}
    gens = M.columns() % 4
    for g, code in zip(gens, pack(gens).tolist()):
        if code in seen:
            continue
        shifted = [elems] + [(elems + k * g) % 4 for k in (1, 2, 3)]
        elems = np.concatenate(shifted)
        codes, first = np.unique(pack(elems), return_index=True)
        elems = elems[first]
        seen = set(codes.tolist())
    return elems


def syndrome_subgroup(M: CheckMatrix) -> frozenset[int]:
    """Packed elements of the syndrome image."""
    return frozenset(pack(syndrome_subgroup_array(M)).tolist())


def subgroup_size(M: CheckMatrix) -> int:
    return len(syndrome_subgroup_array(M))


def zero_columns(M: CheckMatrix) -> list[int]:
    cols = M.columns()
    return [int(i) for i in np.flatnonzero(~cols.any(axis=1))]


def verify_perfect(M: CheckMatrix) -> VerificationReport:
    """Full defect report; never stops at the first problem."""
    syn = weight1_syndromes(M)
    codes = pack(syn)
    size = subgroup_size(M)
    zeros = zero_columns(M)

    patterns = enumerate_weight1(M.shape)
    zero_syn = [patterns[i] for i in np.flatnonzero(codes == 0)]

    dups = []
    uniq, inverse, counts = np.unique(codes, return_inverse=True, return_counts=True)
    groups = np.split(np.argsort(inverse, kind="stable"), np.cumsum(counts)[:-1])
    for u in np.flatnonzero(counts > 1):
        dups.append((unpack(uniq[u], M.rows), [patterns[i] for i in groups[u]]))

    n1 = len(codes)
    ok = not zeros and not dups and not zero_syn and n1 + 1 == size
    return VerificationReport(ok, size, n1, zeros, dups, zero_syn)


def code_cardinality(M: CheckMatrix) -> int:
    return M.shape.space_size // subgroup_size(M)


def has_order2_row(M: CheckMatrix) -> bool:
    """True when some row can only produce syndrome entries in {0, 2}."""
    odd = np.concatenate([M.left, M.right], axis=1) % 2
    return bool((~odd.any(axis=1)).any())


# -- text format -----------------------------------------------------------

MAGIC = "DOOBPC 1"


class MatrixFormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + msg)
        self.line = line
        self.col = col


def dumps(M: CheckMatrix) -> str:
    s = M.shape
    lines = [MAGIC, f"rows={M.rows} m={s.m} nprime={s.nprime} npp={s.npp}"]
    for k in range(M.rows):
        j = "".join
        lines.append(
            f"{j(map(str, M.left[k]))}|{j(map(str, M.middle[k]))}|{j(map(str, M.right[k]))}"
        )
    return "\n".join(lines) + "\n"


def loads(text: str) -> CheckMatrix:
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise MatrixFormatError(f"expected header {MAGIC!r}", 1)
    if len(lines) < 2:
        raise MatrixFormatError("missing dimension line", 2)
    dims = {}
    for tok in lines[1].split():
        key, sep, val = tok.partition("=")
        if not sep or key not in ("rows", "m", "nprime", "npp") or not val.isdigit():
            raise MatrixFormatError(f"bad dimension token {tok!r}", 2)
        dims[key] = int(val)
    if set(dims) != {"rows", "m", "nprime", "npp"}:
        raise MatrixFormatError("dimension line needs rows, m, nprime, npp", 2)
    r, m, n1, n2 = dims["rows"], dims["m"], dims["nprime"], dims["npp"]
    body = lines[2:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != r:
        raise MatrixFormatError(f"expected {r} matrix rows, found {len(body)}", 3 + min(r, len(body)))

    widths = (2 * m, 2 * n1, n2)
    alphabets = ("0123", "01", "0123")
    blocks: list[list[list[int]]] = [[], [], []]
    for k, line in enumerate(body):
        lineno = k + 3
        parts = line.strip().split("|")
        if len(parts) != 3:
            raise MatrixFormatError("row needs exactly two '|' separators", lineno)
        col = 1
        for b, (part, width, alpha) in enumerate(zip(parts, widths, alphabets)):
            if len(part) != width:
                raise MatrixFormatError(
                    f"block {b + 1} has {len(part)} entries, expected {width}", lineno, col
                )
            for off, ch in enumerate(part):
                if ch not in alpha:
                    raise MatrixFormatError(f"bad symbol {ch!r}", lineno, col + off)
            blocks[b].append([int(ch) for ch in part])
            col += width + 1
    try:
        return CheckMatrix(
            r,
            np.array(blocks[0], dtype=np.int64).reshape(r, widths[0]),
            np.array(blocks[1], dtype=np.int64).reshape(r, widths[1]),
            np.array(blocks[2], dtype=np.int64).reshape(r, widths[2]),
        )
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def save(M: CheckMatrix, path: str | Path) -> None:
    Path(path).write_text(dumps(M))


def load(path: str | Path) -> CheckMatrix:
    return loads(Path(path).read_text())
