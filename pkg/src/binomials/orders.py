"""Monomial orders on exponent vectors: lex, grevlex, block elimination.

Exponents are plain tuples of nonnegative ints.  Every order exposes a
sort ``key`` that is injective and additive, so comparisons, sorting and
admissibility (0 minimal, translation invariance) all come for free from
tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

LT, EQ, GT = -1, 0, 1


def e_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def e_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def e_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def e_divides(u, v):
    """True when X^u divides X^v."""
    return all(a <= b for a, b in zip(u, v))


def e_deg(u):
    return sum(u)


def zero(n):
    return (0,) * n


@dataclass(frozen=True)
class MonomialOrder:
    kind: str                      # "lex" | "grevlex" | "elim"
    perm: tuple = None             # variable priority, most significant first
    block: tuple = None            # elim: sorted indices eliminated first
    inner: "MonomialOrder" = None  # elim: order used on the non-block part

    def _priority(self, n):
        if self.perm is None:
            return range(n)
        if len(self.perm) != n:
            raise InputError("order permutation has length %d, expected %d"
                             % (len(self.perm), n))
        return self.perm

    def key(self, u):
        if self.kind == "lex":
            return tuple(u[i] for i in self._priority(len(u)))
        if self.kind == "grevlex":
            pri = list(self._priority(len(u)))
            return (sum(u), tuple(-u[i] for i in reversed(pri)))
        if self.kind == "elim":
            blk = set(self.block)
            masked_in = tuple(x if i in blk else 0 for i, x in enumerate(u))
            masked_out = tuple(0 if i in blk else x for i, x in enumerate(u))
            bdeg = sum(masked_in)
            btie = tuple(-u[i] for i in reversed(self.block))
            return (bdeg, btie, self.inner.key(masked_out))
        raise InputError("unknown order kind %r" % (self.kind,))

    def cmp(self, u, v):
        if len(u) != len(v):
            raise InputError("exponent dimension mismatch: %d vs %d"
                             % (len(u), len(v)))
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return LT
        if ku > kv:
            return GT
        return EQ


def lex(perm=None):
    return MonomialOrder("lex", tuple(perm) if perm is not None else None)


def grevlex(perm=None):
    return MonomialOrder("grevlex", tuple(perm) if perm is not None else None)


def elim(block, inner=None):
    """Order eliminating the ``block`` variables (ties broken by ``inner``)."""
    blk = tuple(sorted(set(block)))
    return MonomialOrder("elim", None, blk, inner or grevlex())


def order_cmp(order, u, v):
    """Compare two exponents; returns LT, EQ or GT."""
    return order.cmp(u, v)
