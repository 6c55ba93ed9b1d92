"""Term orders on exponent vectors.

Variables are ordered ``t_1 > .. > t_d > x_1 > .. > x_c > y_1 > .. > y_d``;
a :class:`Universe` says how many of each block are present.  Every order
is realised as a sort key, so comparisons are plain tuple comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

Monomial = tuple[int, ...]


class UniverseMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Universe:
    c: int
    d: int
    with_t: bool = False

    @property
    def nt(self) -> int:
        return self.d if self.with_t else 0

    @property
    def nvars(self) -> int:
        return self.nt + self.c + self.d

    @property
    def x_slice(self) -> slice:
        return slice(self.nt, self.nt + self.c)

    @property
    def y_slice(self) -> slice:
        return slice(self.nt + self.c, self.nvars)

    @property
    def t_slice(self) -> slice:
        return slice(0, self.nt)

    def names(self) -> list[str]:
        return (
            [f"t{i}" for i in range(1, self.nt + 1)]
            + [f"x{i}" for i in range(1, self.c + 1)]
            + [f"y{j}" for j in range(1, self.d + 1)]
        )


class Kind(Enum):
    REVLEX = "revlex"
    LEX = "lex"
    XBLOCK = "xblock"
    ELIM_REVLEX = "elim-revlex"


ORDER_NAMES = tuple(k.value for k in Kind)


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def _lex_key(m: Monomial):
    return m


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class TermOrder:
    """A monomial order over a fixed variable universe.

    ``revlex`` is graded reverse lexicographic, ``lex`` is pure
    lexicographic, ``xblock`` compares the x-degree first and breaks ties by
    revlex, and ``elim-revlex`` compares the t-degree first and breaks ties
    by revlex on the whole vector.
    """

    kind: Kind
    universe: Universe

    def __post_init__(self):
        if self.kind is Kind.ELIM_REVLEX and not self.universe.with_t:
            raise UniverseMismatch("elim-revlex needs the t,x,y universe")

    @classmethod
    def named(cls, name: str, universe: Universe) -> "TermOrder":
        try:
            kind = Kind(name)
        except ValueError:
            raise ValueError(f"unknown order {name!r}; expected one of {', '.join(ORDER_NAMES)}") from None
        return cls(kind, universe)

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        """Sort key: ``key(a) > key(b)`` iff ``a > b`` in this order."""
        kind = self.kind
        if kind is Kind.REVLEX:
            return _grevlex_key
        if kind is Kind.LEX:
            return _lex_key
        if kind is Kind.XBLOCK:
            xs = self.universe.x_slice

            def xblock_key(m):
                return (sum(m[xs]), sum(m), tuple(-e for e in reversed(m)))

            return xblock_key
        nt = self.universe.nt

        def elim_key(m):
            return (sum(m[:nt]), sum(m), tuple(-e for e in reversed(m)))

        return elim_key

    def restricted(self) -> "TermOrder":
        """The order induced on the x,y-universe (t-degree zero)."""
        if self.kind is Kind.ELIM_REVLEX:
            return TermOrder(Kind.REVLEX, Universe(self.universe.c, self.universe.d))
        return self

    def check(self, m: Monomial) -> None:
        if len(m) != self.universe.nvars:
            raise UniverseMismatch(
                f"monomial of length {len(m)} in a {self.universe.nvars}-variable universe"
            )


def compare(order: TermOrder, a: Monomial, b: Monomial) -> Ordering:
    order.check(a)
    order.check(b)
    if a == b:
        return Ordering.EQUAL
    ka, kb = order.key(a), order.key(b)
    return Ordering.GREATER if ka > kb else Ordering.LESS


def leading_of(order: TermOrder, a: Monomial, b: Monomial) -> tuple[Monomial, Monomial]:
    """Orient ``(a, b)`` as ``(lead, tail)``; equal monomials are a zero binomial."""
    if compare(order, a, b) is Ordering.EQUAL:
        raise ValueError(f"zero binomial: both terms are {a}")
    return (a, b) if order.key(a) > order.key(b) else (b, a)
