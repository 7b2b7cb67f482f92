"""Truth tables and algebraic normal forms as packed bitsets.

A table over n variables is a single integer whose bit v holds the
function value at assignment index v.  Index bit (n - k) carries
variable x_k, so the MSB-first integer (x1 .. xn) equals its own table
index.  The subset-sum butterfly that converts a table into its ANF
coefficients runs on the packed integer with masked shifts, which keeps
exhaustive sweeps up to n = 16 fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from interval_xag.formula import And, Const, Formula, Not, Or, Var, Xor

MAX_TABLE_WIDTH = 24


class WidthLimitError(Exception):
    """Raised when a table-building operation exceeds its width guard."""


@lru_cache(maxsize=None)
def index_bit_mask(width: int, position: int) -> int:
    """Packed set of the table positions whose index has ``position`` set."""
    span = 1 << position
    mask = ((1 << span) - 1) << span
    step = span << 1
    size = 1 << width
    while step < size:
        mask |= mask << step
        step <<= 1
    return mask


def var_mask(width: int, var: int) -> int:
    """Packed truth table of the projection x_var over 2**width assignments."""
    if not 1 <= var <= width:
        raise ValueError(f"variable x{var} out of range for width {width}")
    return index_bit_mask(width, width - var)


@lru_cache(maxsize=None)
def popcount_mask(width: int, count: int) -> int:
    """Packed set of the table positions whose index has ``count`` bits set."""
    if count < 0 or count > width:
        return 0
    if width == 0:
        return 1
    half = 1 << (width - 1)
    low = popcount_mask(width - 1, count)
    high = popcount_mask(width - 1, count - 1)
    return low | (high << half)


@dataclass(frozen=True)
class TruthTable:
    """Function table over ``width`` inputs; bit v of ``bits`` is entry v."""

    width: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_TABLE_WIDTH:
            raise ValueError(f"table width must be in [1, {MAX_TABLE_WIDTH}]")
        if not 0 <= self.bits < 1 << (1 << self.width):
            raise ValueError("table bits exceed 2**width entries")

    def entry(self, index: int) -> int:
        if not 0 <= index < 1 << self.width:
            raise ValueError(f"table index {index} out of range")
        return (self.bits >> index) & 1


@dataclass(frozen=True)
class Anf:
    """XOR-of-monomials form; bit v of ``coefficients`` is the monomial
    whose variable set is decoded from index v (bit n-k meaning x_k)."""

    width: int
    coefficients: int

    def monomials(self) -> frozenset[frozenset[int]]:
        """Materialise the coefficient set as variable-index subsets."""
        found = []
        coeffs = self.coefficients
        while coeffs:
            low = coeffs & -coeffs
            index = low.bit_length() - 1
            found.append(frozenset(
                k for k in range(1, self.width + 1) if (index >> (self.width - k)) & 1
            ))
            coeffs ^= low
        return frozenset(found)


def assignment_from_index(index: int, width: int) -> tuple[int, ...]:
    """Assignment (x1, .., xn) encoded by a table index."""
    return tuple((index >> (width - k)) & 1 for k in range(1, width + 1))


def truth_table(formula: Formula, width: int) -> TruthTable:
    """Evaluate ``formula`` on all 2**width assignments in one packed pass."""
    if width > MAX_TABLE_WIDTH:
        raise WidthLimitError(f"table width {width} exceeds the guard of {MAX_TABLE_WIDTH}")
    if width < 1:
        raise ValueError("table width must be at least 1")
    full = (1 << (1 << width)) - 1
    cache: dict[Formula, int] = {}

    def bits_of(node: Formula) -> int:
        cached = cache.get(node)
        if cached is not None:
            return cached
        match node:
            case Var(index):
                out = var_mask(width, index)
            case Const(value):
                out = full if value else 0
            case Not(child):
                out = full ^ bits_of(child)
            case And(left, right):
                out = bits_of(left) & bits_of(right)
            case Or(left, right):
                out = bits_of(left) | bits_of(right)
            case Xor(left, right):
                out = bits_of(left) ^ bits_of(right)
            case _:
                raise TypeError(f"not a formula node: {node!r}")
        cache[node] = out
        return out

    return TruthTable(width, bits_of(formula))


def mobius_transform(bits: int, width: int) -> int:
    """GF(2) subset-sum butterfly over each index bit; self-inverse."""
    for position in range(width):
        shift = 1 << position
        zeros = index_bit_mask(width, position) >> shift
        bits ^= (bits & zeros) << shift
    return bits


def anf_of(table: TruthTable) -> Anf:
    """The unique coefficient set whose monomial XOR reproduces ``table``."""
    return Anf(table.width, mobius_transform(table.bits, table.width))


def degree(anf: Anf) -> int:
    """Size of the largest monomial; 0 for both constant functions."""
    for count in range(anf.width, 0, -1):
        if anf.coefficients & popcount_mask(anf.width, count):
            return count
    return 0


def degree_lower_bound(anf: Anf) -> int:
    """AND gates needed by any circuit for the function, from its degree."""
    return max(degree(anf) - 1, 0)
