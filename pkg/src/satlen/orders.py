"""Monomial orders: graded reverse lexicographic, lexicographic, and block elimination."""

from __future__ import annotations

from dataclasses import dataclass

KIND_GREVLEX = 0
KIND_LEX = 1
KIND_ELIM = 2

_KIND_NAMES = {KIND_GREVLEX: "grevlex", KIND_LEX: "lex", KIND_ELIM: "elim"}


@dataclass(frozen=True)
class Order:
    """A monomial order; ``block`` is the front-block size for elimination orders."""

    kind: int
    block: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_NAMES:
            raise ValueError(f"unknown order kind {self.kind}")
        if self.kind == KIND_ELIM and self.block < 1:
            raise ValueError("elimination order needs a front block of size >= 1")

    def key(self, exps: tuple) -> tuple:
        """Sort key: key(a) > key(b) iff a > b under this order."""
        if self.kind == KIND_GREVLEX:
            return _grevlex_key(exps)
        if self.kind == KIND_LEX:
            return exps
        k = self.block
        return _grevlex_key(exps[:k]) + _grevlex_key(exps[k:])

    def __str__(self):
        name = _KIND_NAMES[self.kind]
        return f"{name}({self.block})" if self.kind == KIND_ELIM else name


def _grevlex_key(exps: tuple) -> tuple:
    # larger degree first; ties broken by the smaller trailing exponent
    key = [sum(exps)]
    for e in reversed(exps):
        key.append(-e)
    return tuple(key)


GREVLEX = Order(KIND_GREVLEX)
LEX = Order(KIND_LEX)


def elimination(front_block: int) -> Order:
    """Order eliminating the first ``front_block`` variables."""
    return Order(KIND_ELIM, front_block)


def order_from_name(name: str) -> Order:
    if name == "grevlex":
        return GREVLEX
    if name == "lex":
        return LEX
    raise ValueError(f"unknown order name {name!r}")
