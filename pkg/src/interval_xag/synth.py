"""Comparator and interval-check synthesis under the free-XOR cost model.

A constant comparison [a <= x] reduces, after dropping the trailing zero
bits of a, to a right-nested AND/OR chain whose operators follow the
remaining bits.  The interval check [a <= x < b] is the XOR of two such
chains and merges into one circuit that never costs more than the longer
chain: equal leading operators factor out on their variable, and once
the operators disagree the rest collapses through a conditional-negation
(if-then-else) recursion with five terminal and four non-terminal shapes.
"""

from __future__ import annotations

from dataclasses import dataclass

from interval_xag.bitconst import BitConstant
from interval_xag.formula import (
    AND_OP,
    OR_OP,
    And,
    AndOrChain,
    Const,
    Formula,
    Not,
    Or,
    Var,
    Xor,
    chain_length,
    chain_to_formula,
)


@dataclass(frozen=True)
class IntervalSpec:
    """Half-open interval [lower, upper) over width-bit inputs.

    ``upper.value == 2**width`` selects the degenerate unbounded top.
    """

    width: int
    lower: BitConstant
    upper: BitConstant

    def __post_init__(self) -> None:
        if self.lower.width != self.width or self.upper.width != self.width:
            raise ValueError("bound widths must match the spec width")
        if not self.lower.value < self.upper.value <= 1 << self.width:
            raise ValueError(
                f"need lower < upper <= 2**width, got "
                f"{self.lower.value}, {self.upper.value} at width {self.width}"
            )

    @classmethod
    def from_ints(cls, width: int, lower: int, upper: int) -> "IntervalSpec":
        return cls(width, BitConstant(lower, width), BitConstant(upper, width))


def comparison_chain(constant: BitConstant, lo: int, hi: int) -> AndOrChain:
    """Chain over x_lo..x_hi whose operator at k is AND iff bit k of the
    constant is set.  When the constant's lowest set bit is at hi, the
    chain computes [constant <= x] restricted to those positions."""
    if not 1 <= lo <= hi <= constant.width:
        raise ValueError(f"invalid chain range [{lo}, {hi}] for width {constant.width}")
    operators = tuple(
        AND_OP if constant.bit(k) else OR_OP for k in range(lo, hi)
    )
    return AndOrChain(operators, tuple(range(lo, hi + 1)))


def reduced_comparison_chain(constant: BitConstant) -> AndOrChain:
    """Comparator chain for [constant <= x] after trailing-zero reduction.

    A lower bound of 0 degenerates to the constant-1 chain.
    """
    if constant.value == 0:
        return AndOrChain((), (), const=1)
    if constant.value >= 1 << constant.width:
        raise ValueError("comparison bound must be below 2**width")
    return comparison_chain(constant, 1, constant.width - constant.trailing_zeros())


def compare_synth(constant: BitConstant) -> Formula:
    """Circuit for [constant <= x] with x a constant.width-bit input.

    Costs width - trailing_zeros - 1 gates for a positive bound and none
    for the always-true bound 0.
    """
    return chain_to_formula(reduced_comparison_chain(constant))


def _check_aligned(first: AndOrChain, second: AndOrChain) -> None:
    shorter, longer = sorted((first.variables, second.variables), key=len)
    if longer[: len(shorter)] != shorter:
        raise ValueError("chain variable lists must agree on their common prefix")


def xor_chain_merge(first: AndOrChain, second: AndOrChain) -> Formula:
    """Circuit for ``first XOR second`` built by merging the two chains.

    Requires distinct non-constant chains whose variable lists agree on
    the common prefix.  The result costs l - 1 gates when the lengths are
    equal and max(l1, l2) otherwise.
    """
    if first.is_const or second.is_const:
        raise ValueError("cannot merge a constant chain")
    if first == second:
        raise ValueError("chains must be distinct (their XOR is constant 0)")
    _check_aligned(first, second)
    return _merge(first, second)


def _merge(first: AndOrChain, second: AndOrChain) -> Formula:
    assert first != second
    head = Var(first.variables[0])
    if chain_length(first) == 0 or chain_length(second) == 0:
        # one side is the bare head variable:
        #   x ^ (x & f) = x & !f      x ^ (x | f) = !x & f
        rest = second if chain_length(first) == 0 else first
        tail = chain_to_formula(rest.tail())
        if rest.operators[0] == AND_OP:
            return And(head, Not(tail))
        return And(Not(head), tail)
    first_op, second_op = first.operators[0], second.operators[0]
    if first_op == second_op:
        # equal leading operators factor out on the head variable:
        #   (x & f1) ^ (x & f2) = x & (f1 ^ f2)
        #   (x | f1) ^ (x | f2) = !x & (f1 ^ f2)
        guard = head if first_op == AND_OP else Not(head)
        return And(guard, _merge(first.tail(), second.tail()))
    # differing operators: (x | f1) ^ (x & f2) = ite(x, !f2, f1)
    if first_op == OR_OP:
        return ite_chain_merge(first.variables[0], second.tail(), first.tail())
    return ite_chain_merge(first.variables[0], first.tail(), second.tail())


def ite_chain_merge(pivot: int, negated: AndOrChain, direct: AndOrChain) -> Formula:
    """Circuit for ``(x & !negated) ^ (!x & direct)`` with x = x_pivot.

    Both chains must start at the same variable, agree on their common
    variable prefix, and not contain the pivot.  The result costs
    l(direct) gates when both lengths are equal and max(l1, l2) + 1
    otherwise.
    """
    if negated.is_const or direct.is_const:
        raise ValueError("cannot merge a constant chain")
    if pivot in negated.variables or pivot in direct.variables:
        raise ValueError(f"pivot x{pivot} must not occur in either chain")
    if negated.variables[0] != direct.variables[0]:
        raise ValueError("chains must start at the same variable")
    _check_aligned(negated, direct)
    return _ite(Var(pivot), negated, direct)


def _ite(pivot: Var, negated: AndOrChain, direct: AndOrChain) -> Formula:
    head = Var(direct.variables[0])
    direct_len = chain_length(direct)
    negated_len = chain_length(negated)
    if direct_len == 0 and negated_len == 0:
        return Xor(pivot, head)
    if negated_len == 0:
        # negated side is the bare head; the direct chain continues:
        #   ite(x, !xj, xj & f) = (x ^ xj) & (x | f)
        #   ite(x, !xj, xj | f) = (x ^ xj) | (!x & f)
        tail = chain_to_formula(direct.tail())
        if direct.operators[0] == AND_OP:
            return And(Xor(pivot, head), Or(pivot, tail))
        return Or(Xor(pivot, head), And(Not(pivot), tail))
    if direct_len == 0:
        # direct side is the bare head; the negated chain continues:
        #   ite(x, !(xj & f), xj) = (x ^ xj) | (x & !f)
        #   ite(x, !(xj | f), xj) = x ^ (xj | (x & f))
        tail = chain_to_formula(negated.tail())
        if negated.operators[0] == AND_OP:
            return Or(Xor(pivot, head), And(pivot, Not(tail)))
        return Xor(pivot, Or(head, And(pivot, tail)))
    direct_op, negated_op = direct.operators[0], negated.operators[0]
    inner = _ite(pivot, negated.tail(), direct.tail())
    if direct_op == AND_OP and negated_op == OR_OP:
        return And(Xor(pivot, head), inner)
    if direct_op == OR_OP and negated_op == AND_OP:
        return Or(Xor(pivot, head), inner)
    # equal operators keep the head and push the pivot inwards:
    #   ite(x, !(xj & f2), xj & f1) = x ^ (xj & (x ^ ite(x, !f2, f1)))
    #   ite(x, !(xj | f2), xj | f1) = x ^ (xj | (x ^ ite(x, !f2, f1)))
    if direct_op == AND_OP:
        return Xor(pivot, And(head, Xor(pivot, inner)))
    return Xor(pivot, Or(head, Xor(pivot, inner)))


def interval_formula(spec: IntervalSpec) -> Formula:
    """Circuit for [lower <= x < upper], the merged form of both comparators."""
    top = 1 << spec.width
    if spec.lower.value == 0 and spec.upper.value == top:
        return Const(1)
    if spec.lower.value == 0:
        return Not(compare_synth(spec.upper))
    if spec.upper.value == top:
        return compare_synth(spec.lower)
    lower_chain = reduced_comparison_chain(spec.lower)
    upper_chain = reduced_comparison_chain(spec.upper)
    # distinct bounds reduce to distinct chains, so the merge precondition holds
    assert lower_chain != upper_chain
    return xor_chain_merge(lower_chain, upper_chain)


def interval_formula_fused(spec: IntervalSpec) -> Formula:
    """Single-pass construction of the interval circuit.

    Walks the bit positions once, emitting the factored prefix, then the
    conditional-negation layers, then the terminal shape.  Cross-check for
    :func:`interval_formula`; truth tables and gate counts always agree.
    """
    top = 1 << spec.width
    if spec.lower.value == 0 and spec.upper.value == top:
        return Const(1)
    if spec.lower.value == 0:
        return Not(compare_synth(spec.upper))
    if spec.upper.value == top:
        return compare_synth(spec.lower)

    n = spec.width
    lower, upper = spec.lower, spec.upper
    tz_lower, tz_upper = lower.trailing_zeros(), upper.trailing_zeros()
    cutoff = n - min(tz_lower, tz_upper)
    shorter_end = n - max(tz_lower, tz_upper)

    # layers are applied outside-in around the terminal built last
    layers: list[tuple[str, int, int, int]] = []

    i = 1
    while i < shorter_end and lower.bit(i) == upper.bit(i):
        layers.append(("prefix", i, 0, lower.bit(i)))
        i += 1

    if i == n - tz_lower:
        # the lower chain is exhausted; both bits here are forced to 1
        suffix = chain_to_formula(comparison_chain(upper, i + 1, cutoff))
        return _apply_layers(layers, And(Var(i), Not(suffix)))
    if i == n - tz_upper:
        # the upper chain is exhausted; the lower bit here is forced to 0
        suffix = chain_to_formula(comparison_chain(lower, i + 1, cutoff))
        return _apply_layers(layers, And(Not(Var(i)), suffix))

    j = i + 1
    while j < shorter_end:
        kind = "same" if lower.bit(j) == upper.bit(j) else "diff"
        layers.append((kind, i, j, lower.bit(j)))
        j += 1

    if tz_lower != tz_upper:
        upper_longer = tz_lower > tz_upper
        keep_pivot = (not upper.bit(j)) if upper_longer else bool(lower.bit(j))
        outer = And if keep_pivot else Or
        inner = Or if keep_pivot else And
        source = upper if upper_longer else lower
        suffix: Formula = chain_to_formula(comparison_chain(source, j + 1, cutoff))
        if upper_longer:
            keep_pivot = not keep_pivot
            suffix = Not(suffix)
        pivot_term = Var(i) if keep_pivot else Not(Var(i))
        terminal: Formula = outer(Xor(Var(i), Var(j)), inner(pivot_term, suffix))
    else:
        terminal = Xor(Var(i), Var(j))
    return _apply_layers(layers, terminal)


def _apply_layers(layers: list[tuple[str, int, int, int]], core: Formula) -> Formula:
    result = core
    for kind, i, j, bit in reversed(layers):
        if kind == "prefix":
            guard = Var(i) if bit else Not(Var(i))
            result = And(guard, result)
        elif kind == "same":
            node = And if bit else Or
            result = Xor(Var(i), node(Var(j), Xor(Var(i), result)))
        else:
            node = And if bit else Or
            result = node(Xor(Var(i), Var(j)), result)
    return result


def naive_interval(spec: IntervalSpec) -> Formula:
    """XOR of the two comparators built independently; the cost baseline."""
    top = 1 << spec.width
    if spec.lower.value == 0 and spec.upper.value == top:
        return Const(1)
    if spec.lower.value == 0:
        return Not(compare_synth(spec.upper))
    if spec.upper.value == top:
        return compare_synth(spec.lower)
    return Xor(compare_synth(spec.lower), compare_synth(spec.upper))


def predicted_mc(spec: IntervalSpec) -> int:
    """Exact AND/OR-gate count of the merged interval circuit.

    With j = trailing zeros of each bound (saturating at the width for 0
    and for 2**width), the count is n - min(j_lo, j_hi) - 1 when the
    counts differ and n - j - 2 when they match, floored at 0 for the
    always-true interval.
    """
    tz_lower = spec.lower.trailing_zeros()
    tz_upper = spec.upper.trailing_zeros()
    if tz_lower != tz_upper:
        return spec.width - min(tz_lower, tz_upper) - 1
    return max(spec.width - tz_lower - 2, 0)
