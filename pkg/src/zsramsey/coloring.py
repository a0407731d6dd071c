"""Z_p edge-colorings of complete host graphs.

A coloring of K_ell is stored as a symmetric ``ell x ell`` integer matrix;
the diagonal is zero and never read.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import FormatError, ModulusMismatch
from .zp import is_prime


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    modulus: int
    colors: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        c = np.array(self.colors, dtype=np.int64)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ValueError("colors must be a square matrix")
        np.fill_diagonal(c, 0)
        if not np.array_equal(c, c.T):
            raise ValueError("colors must be symmetric")
        if c.size and (c.min() < 0 or c.max() >= self.modulus):
            raise ValueError(f"colors must lie in [0, {self.modulus})")
        c.setflags(write=False)
        object.__setattr__(self, "colors", c)

    @property
    def host_order(self) -> int:
        return self.colors.shape[0]

    @property
    def p(self) -> int:
        return self.modulus

    def __call__(self, x: int, y: int) -> int:
        if x == y:
            raise ValueError("no loop colors")
        return int(self.colors[x, y])

    def __eq__(self, other):
        return (
            isinstance(other, EdgeColoring)
            and self.modulus == other.modulus
            and np.array_equal(self.colors, other.colors)
        )

    def __hash__(self):
        return hash((self.modulus, self.colors.tobytes()))

    @classmethod
    def from_function(cls, ell: int, p: int, fn) -> "EdgeColoring":
        c = np.zeros((ell, ell), dtype=np.int64)
        for x in range(ell):
            for y in range(x + 1, ell):
                c[x, y] = c[y, x] = fn(x, y) % p
        return cls(p, c)

    @classmethod
    def from_upper(cls, ell: int, p: int, values: Iterable[int]) -> "EdgeColoring":
        """Build from the ``ell(ell-1)/2`` upper-triangle colors in lexicographic pair order."""
        c = np.zeros((ell, ell), dtype=np.int64)
        iu = np.triu_indices(ell, 1)
        c[iu] = np.fromiter(values, dtype=np.int64, count=len(iu[0]))
        c = c + c.T
        return cls(p, c)

    def upper(self) -> np.ndarray:
        return self.colors[np.triu_indices(self.host_order, 1)]

    # -- text format: "ell p" then one "u v color" line per pair, lexicographic ---

    def to_text(self) -> str:
        ell = self.host_order
        iu, ju = np.triu_indices(ell, 1)
        vals = self.colors[iu, ju]
        lines = [f"{ell} {self.modulus}"]
        lines += [f"{u} {v} {c}" for u, v, c in zip(iu.tolist(), ju.tolist(), vals.tolist())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "EdgeColoring":
        return parse_coloring(text)


def parse_coloring(text: str) -> EdgeColoring:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty coloring file", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("header must be 'ell p'", 1)
    ell, p = _ints(head, 1)
    if ell < 0:
        raise FormatError("ell must be non-negative", 1)
    if not is_prime(p):
        raise FormatError(f"p={p} is not prime", 1)
    expected = ell * (ell - 1) // 2
    if len(lines) - 1 != expected:
        raise FormatError(f"expected {expected} color lines, found {len(lines) - 1}", len(lines))
    c = np.zeros((ell, ell), dtype=np.int64)
    lineno = 1
    for u in range(ell):
        for v in range(u + 1, ell):
            lineno += 1
            parts = lines[lineno - 1].split()
            if len(parts) != 3:
                raise FormatError("color line must be 'u v color'", lineno)
            a, b, col = _ints(parts, lineno)
            if (a, b) != (u, v):
                raise FormatError(f"expected pair {u} {v}, got {a} {b}", lineno)
            if not 0 <= col < p:
                raise FormatError(f"color {col} outside [0, {p})", lineno)
            c[u, v] = c[v, u] = col
    return EdgeColoring(p, c)


def _ints(parts, lineno):
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise FormatError(f"non-integer token in {' '.join(parts)!r}", lineno) from None


def edge_sum(c: EdgeColoring, y: int, X: Iterable[int]) -> int:
    """``sum_{x in X} c(yx) mod p``; the empty sum is 0."""
    X = list(X)
    if y in X:
        raise ValueError("y must not belong to X")
    if not X:
        return 0
    return int(c.colors[y, X].sum() % c.modulus)


def check_modulus(c: EdgeColoring, p: int) -> None:
    if c.modulus != p:
        raise ModulusMismatch(f"coloring is over Z_{c.modulus}, expected Z_{p}")


# -- generators -----------------------------------------------------------------


def uniform_coloring(ell: int, p: int, seed: int) -> EdgeColoring:
    rng = np.random.default_rng(seed)
    return EdgeColoring.from_upper(ell, p, rng.integers(0, p, size=ell * (ell - 1) // 2))


def constant_coloring(ell: int, p: int, g: int) -> EdgeColoring:
    c = np.full((ell, ell), g % p, dtype=np.int64)
    return EdgeColoring(p, c)


def affine_coloring(ell: int, p: int) -> EdgeColoring:
    """``c(uv) = (u + v) mod p``."""
    idx = np.arange(ell)
    return EdgeColoring(p, (idx[:, None] + idx[None, :]) % p)


def two_block_coloring(ell: int, p: int, size: int) -> EdgeColoring:
    """Color 0 inside ``[0, size)`` and inside ``[size, ell)``, color 1 across."""
    side = np.arange(ell) < size
    return EdgeColoring(p, (side[:, None] != side[None, :]).astype(np.int64) % p)


def near_constant_coloring(ell: int, p: int, g: int, degree: int, seed: int) -> EdgeColoring:
    """Constant ``g`` except on ``degree`` random perfect matchings.

    Every vertex sees at most ``degree`` edges whose color differs from ``g``;
    those edges get uniformly random non-``g`` colors. Colorings like this are
    regular enough to stall the incremental process, so they exercise the
    fallback phases.
    """
    rng = np.random.default_rng(seed)
    c = np.full((ell, ell), g % p, dtype=np.int64)
    for _ in range(degree):
        perm = rng.permutation(ell)
        for a, b in zip(perm[0::2], perm[1::2]):
            off = int(rng.integers(1, p)) if p > 1 else 0
            c[a, b] = c[b, a] = (g + off) % p
    return EdgeColoring(p, c)


COLORING_MODES = ("uniform", "constant:g", "affine", "two-block:size", "near-constant:g:degree")


def make_coloring(mode: str, ell: int, p: int, seed: int = 0) -> EdgeColoring:
    """Dispatch on a mode string such as ``uniform``, ``constant:1`` or ``two-block:7``."""
    name, _, arg = mode.partition(":")
    try:
        if name == "uniform" and not arg:
            return uniform_coloring(ell, p, seed)
        if name == "constant":
            return constant_coloring(ell, p, int(arg))
        if name == "affine" and not arg:
            return affine_coloring(ell, p)
        if name == "two-block":
            return two_block_coloring(ell, p, int(arg) if arg else ell // 2)
        if name == "near-constant":
            g, _, deg = arg.partition(":")
            return near_constant_coloring(ell, p, int(g), int(deg or 1), seed)
    except ValueError as exc:
        raise ValueError(f"bad coloring mode {mode!r}: {exc}") from None
    raise ValueError(f"unknown coloring mode {mode!r}; expected one of {', '.join(COLORING_MODES)}")
