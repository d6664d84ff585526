"""Moonshine numerology with exact big integers.

Covers the classical observations around the modular invariant and the
largest sporadic simple group: verification and bounded enumeration of
decompositions of j-coefficients into non-negative combinations of monster
irreducible dimensions, the 54-digit order factorization, and the mod-70
sum-of-squares of the first 24 coefficients (the answer is 42).

The bundled dimension file carries seven literature-exact anchor values
(indices 1..6 and 194, 1-based); every load validates them.  See the data
file header about the provenance of the remaining entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

from .qseries import discriminant, j_invariant

MONSTER_IRREP_COUNT = 194

# Anchors by 0-based index; the only entries treated as ground truth.
MONSTER_ANCHORS: dict[int, int] = {
    0: 1,
    1: 196883,
    2: 21296876,
    3: 842609326,
    4: 18538750076,
    5: 19360062527,
    193: 258823477531055064045234375,
}

# Entries of the bundled file beyond this 0-based index are placeholders,
# not verified dimensions; see the data file header.
MONSTER_VERIFIED_PREFIX = 7

MONSTER_ORDER = 808017424794512875886459904961710757005754368000000000

MONSTER_ORDER_FACTORIZATION = (
    (2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3),
    (17, 1), (19, 1), (23, 1), (29, 1), (31, 1), (41, 1),
    (47, 1), (59, 1), (71, 1),
)


@dataclass(frozen=True)
class IrrepDims:
    dims: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.dims)

    def __getitem__(self, i: int) -> int:
        return self.dims[i]


class IrrepDimsError(ValueError):
    pass


def load_irrep_dims(path, *, expected_count=None, anchors=None) -> IrrepDims:
    """Load one decimal integer per line; '#' lines are comments.

    Validates the count, ascending order (ties permitted), a leading 1, and
    any anchor values, reporting the first offending line by number.
    """
    dims: list[int] = []
    lines: list[int] = []  # line number per parsed entry
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            try:
                value = int(text)
            except ValueError:
                raise IrrepDimsError(f"{path}: line {lineno}: not a decimal integer: {text!r}")
            if value < 1:
                raise IrrepDimsError(f"{path}: line {lineno}: dimensions must be positive")
            if dims and value < dims[-1]:
                raise IrrepDimsError(
                    f"{path}: line {lineno}: value {value} breaks ascending order"
                )
            dims.append(value)
            lines.append(lineno)
    if not dims:
        raise IrrepDimsError(f"{path}: no dimensions found")
    if expected_count is not None and len(dims) != expected_count:
        raise IrrepDimsError(
            f"{path}: expected {expected_count} dimensions, found {len(dims)}"
        )
    if dims[0] != 1:
        raise IrrepDimsError(f"{path}: line {lines[0]}: first dimension must be 1")
    for index, expect in sorted((anchors or {}).items()):
        if index >= len(dims):
            raise IrrepDimsError(f"{path}: anchor index {index} beyond the data")
        if dims[index] != expect:
            raise IrrepDimsError(
                f"{path}: line {lines[index]}: anchor mismatch at index {index}: "
                f"expected {expect}, found {dims[index]}"
            )
    return IrrepDims(tuple(dims))


def bundled_monster_dims_path() -> str:
    return str(resources.files("mckay_lab").joinpath("data/monster_dims.txt"))


def load_monster_dims(path=None) -> IrrepDims:
    """The bundled (or substituted) monster dimension table, anchor-checked."""
    return load_irrep_dims(
        path or bundled_monster_dims_path(),
        expected_count=MONSTER_IRREP_COUNT,
        anchors=MONSTER_ANCHORS,
    )


@dataclass(frozen=True)
class Decomposition:
    target: int
    terms: tuple[tuple[int, int], ...]  # (0-based irrep index, multiplicity >= 1)

    def multiplicity_vector(self, width: int) -> tuple[int, ...]:
        out = [0] * width
        for index, mult in self.terms:
            out[index] = mult
        return tuple(out)

    def describe(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for index, mult in self.terms:
            label = f"r{index + 1}"
            pieces.append(label if mult == 1 else f"{mult}*{label}")
        return " + ".join(pieces)


def verify_decomposition(decomposition: Decomposition, dims: IrrepDims) -> bool:
    """Exact big-integer check of the stated combination."""
    total = 0
    for index, mult in decomposition.terms:
        if index < 0 or index >= dims.count:
            raise IndexError(f"irrep index {index} out of range")
        total += mult * dims[index]
    return total == decomposition.target


MAX_ENUMERATION_IRREPS = 10
MAX_ENUMERATION_MULTIPLICITY = 10


def enumerate_decompositions(target: int, dims: IrrepDims, max_irreps: int,
                             max_mult: int) -> list[Decomposition]:
    """All decompositions of target over the first max_irreps dimensions with
    every multiplicity at most max_mult, in lexicographic order of the
    multiplicity vectors.  Exhaustive bounded search with big-integer pruning.
    """
    if not 1 <= max_irreps <= MAX_ENUMERATION_IRREPS:
        raise ValueError(
            f"max_irreps must be between 1 and {MAX_ENUMERATION_IRREPS}; "
            "tighten the limits to keep the search exhaustive"
        )
    if not 1 <= max_mult <= MAX_ENUMERATION_MULTIPLICITY:
        raise ValueError(
            f"max_mult must be between 1 and {MAX_ENUMERATION_MULTIPLICITY}; "
            "tighten the limits to keep the search exhaustive"
        )
    if target < 0:
        raise ValueError("target must be non-negative")
    width = min(max_irreps, dims.count)
    suffix_max = [0] * (width + 1)
    for i in range(width - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + max_mult * dims[i]
    results: list[Decomposition] = []
    stack: list[int] = []

    def search(index: int, remaining: int):
        if remaining == 0 and index == width:
            terms = tuple((i, m) for i, m in enumerate(stack) if m)
            results.append(Decomposition(target, terms))
            return
        if index == width or remaining > suffix_max[index]:
            return
        d = dims[index]
        for mult in range(0, max_mult + 1):
            used = mult * d
            if used > remaining:
                break
            stack.append(mult)
            search(index + 1, remaining - used)
            stack.pop()

    search(0, target)
    return results


def monster_order_check() -> bool:
    """The factorization of the 54-digit order, and 196883 = 47*59*71."""
    product = 1
    for prime, power in MONSTER_ORDER_FACTORIZATION:
        product *= prime**power
    return product == MONSTER_ORDER and 47 * 59 * 71 == 196883


class CoefficientWindow(NamedTuple):
    """A run of q-exponents: start, start+1, ..., start+count-1."""

    start: int
    count: int = 24


# Windows pinned by direct computation: summing the squares of coefficients
# q^1 .. q^24 gives residue 42 mod 70 for both series; the windows starting
# at the pole term or the constant term give 53 and 32 instead.
TAU_WINDOW = CoefficientWindow(1, 24)
J_WINDOW = CoefficientWindow(1, 24)


def meaning_of_life(source: str, window: CoefficientWindow | None = None) -> int:
    """Sum of squared coefficients over the window, reduced mod 70."""
    if source == "tau":
        window = window or TAU_WINDOW
        series = discriminant(max(window.start + window.count - 1, 1))
    elif source == "j":
        window = window or J_WINDOW
        series = j_invariant(max(window.start + window.count - 1, -1))
    else:
        raise ValueError("source must be 'j' or 'tau'")
    total = 0
    for k in range(window.start, window.start + window.count):
        c = series.coefficient(k)
        if c.denominator != 1:
            raise ArithmeticError("non-integer coefficient in window")
        total += c.numerator**2
    return total % 70
