"""Immutable Boolean expression nodes and right-nested AND/OR chains.

The cost model charges one unit per distinct AND or OR node; XOR and NOT
are free.  Nodes are frozen dataclasses, so structurally identical
subterms hash alike and shared gates are counted once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

AND_OP = "&"
OR_OP = "|"


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Xor:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Const, Not, And, Or, Xor]


@dataclass(frozen=True)
class AndOrChain:
    """Right-nested chain ``x1 o1 (x2 o2 (... xm))`` with each ``oi`` in {&, |}.

    ``variables`` holds distinct 1-based indices, one more entry than
    ``operators``.  A chain with no variables degenerates to the constant
    ``const``.
    """

    operators: tuple[str, ...]
    variables: tuple[int, ...]
    const: int | None = field(default=None)

    def __post_init__(self) -> None:
        if self.const is not None:
            if self.operators or self.variables:
                raise ValueError("constant chain must have no operators or variables")
            if self.const not in (0, 1):
                raise ValueError(f"chain constant must be 0 or 1, got {self.const}")
            return
        if not self.variables:
            raise ValueError("chain needs at least one variable (or a const)")
        if len(self.operators) != len(self.variables) - 1:
            raise ValueError("chain needs exactly one operator between consecutive variables")
        if any(op not in (AND_OP, OR_OP) for op in self.operators):
            raise ValueError(f"chain operators must be '{AND_OP}' or '{OR_OP}'")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("chain variables must be distinct")

    @property
    def is_const(self) -> bool:
        return self.const is not None

    def tail(self) -> "AndOrChain":
        """Chain with the leading variable and operator removed."""
        if self.is_const or not self.operators:
            raise ValueError("chain has no tail")
        return AndOrChain(self.operators[1:], self.variables[1:])


def chain_length(chain: AndOrChain) -> int:
    """Number of operators; 0 for single-variable and constant chains."""
    return len(chain.operators)


def chain_to_formula(chain: AndOrChain) -> Formula:
    if chain.is_const:
        return Const(chain.const)
    result: Formula = Var(chain.variables[-1])
    for op, index in zip(reversed(chain.operators), reversed(chain.variables[:-1])):
        node = And if op == AND_OP else Or
        result = node(Var(index), result)
    return result


def evaluate(formula: Formula, assignment: Sequence[int]) -> int:
    """Evaluate under ``assignment``, where ``assignment[k-1]`` is x_k."""
    match formula:
        case Var(index):
            if not 1 <= index <= len(assignment):
                raise ValueError(f"variable x{index} is unbound for width {len(assignment)}")
            return assignment[index - 1] & 1
        case Const(value):
            return value
        case Not(child):
            return 1 - evaluate(child, assignment)
        case And(left, right):
            return evaluate(left, assignment) & evaluate(right, assignment)
        case Or(left, right):
            return evaluate(left, assignment) | evaluate(right, assignment)
        case Xor(left, right):
            return evaluate(left, assignment) ^ evaluate(right, assignment)
    raise TypeError(f"not a formula node: {formula!r}")


def mult_cost(formula: Formula) -> int:
    """Number of distinct AND/OR nodes reachable from ``formula``.

    This is the AND-gate count of the circuit once OR is rewritten through
    De Morgan; XOR and NOT contribute nothing.  It upper-bounds the
    multiplicative complexity of the computed function.
    """
    seen: set[Formula] = set()
    gates: set[Formula] = set()
    stack: list[Formula] = [formula]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        match node:
            case And(left, right) | Or(left, right):
                gates.add(node)
                stack.append(left)
                stack.append(right)
            case Xor(left, right):
                stack.append(left)
                stack.append(right)
            case Not(child):
                stack.append(child)
            case _:
                pass
    return len(gates)


def to_text(formula: Formula) -> str:
    """Fully parenthesised infix rendering, e.g. ``(x1 ^ (x2 | x3))``."""
    match formula:
        case Var(index):
            return f"x{index}"
        case Const(value):
            return str(value)
        case Not(child):
            return f"!{to_text(child)}"
        case And(left, right):
            return f"({to_text(left)} & {to_text(right)})"
        case Or(left, right):
            return f"({to_text(left)} | {to_text(right)})"
        case Xor(left, right):
            return f"({to_text(left)} ^ {to_text(right)})"
    raise TypeError(f"not a formula node: {formula!r}")
