"""Fixed-width nonnegative constants with MSB-first bit indexing."""

from __future__ import annotations

from dataclasses import dataclass

MAX_WIDTH = 62


@dataclass(frozen=True)
class BitConstant:
    """An integer bound viewed as a fixed-width bit string.

    Bit 1 is the most significant bit and bit ``width`` the least
    significant one.  ``value == 2**width`` is tolerated so the degenerate
    upper bound of a full interval can be represented; its bits are never
    inspected.
    """

    value: int
    width: int

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_WIDTH:
            raise ValueError(f"width must be in [1, {MAX_WIDTH}], got {self.width}")
        if not 0 <= self.value <= 1 << self.width:
            raise ValueError(f"value {self.value} does not fit in {self.width} bits")

    def bit(self, k: int) -> int:
        """MSB-first bit access: bit(1) is the coefficient of 2**(width-1)."""
        if not 1 <= k <= self.width:
            raise ValueError(f"bit index {k} out of range [1, {self.width}]")
        return (self.value >> (self.width - k)) & 1

    def trailing_zeros(self) -> int:
        """Largest j <= width such that value / 2**j is an integer.

        Zero is divisible by every power of two, so the count saturates at
        the width.
        """
        if self.value == 0:
            return self.width
        return (self.value & -self.value).bit_length() - 1
