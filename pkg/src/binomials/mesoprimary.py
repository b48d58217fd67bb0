"""Mesoprime and mesoprimary structure of cellular binomial ideals.

A delta-mesoprime ideal is I_L(rho) + <X_j : j not in delta> with L inside
Z^delta.  Associated mesoprimes of a delta-cellular ideal I arise as
(I : X^u) restricted to the delta variables, for monomials X^u in the
nilpotent variables; there are finitely many because u_i < d_i suffices.
An ideal is mesoprimary when it is cellular with exactly one associated
mesoprime; its primary decomposition then comes straight from the lattice
decomposition of its delta part.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cellular import as_cellular
from .engine import (BinomialIdeal, colon_monomial, eliminate, ideal_equals,
                     ideal_member, ideal_sum, monomial, saturate_vars)
from .errors import InputError, NotMesoprimaryError, UnitIdealError
from .lattices import (PartialCharacter, character_of, is_saturated,
                       lattice_ideal, lattice_primary_decomposition)


@dataclass(frozen=True)
class Mesoprime:
    """delta and a partial character on a lattice inside Z^delta."""

    names: tuple
    delta: frozenset
    character: PartialCharacter

    def ideal(self):
        """Materialize as I_L(rho) + <X_j : j not in delta>."""
        base = lattice_ideal(self.character, self.names)
        extra = [monomial(tuple(1 if j == i else 0 for j in range(len(self.names))))
                 for i in sorted(set(range(len(self.names))) - self.delta)]
        return ideal_sum(base, BinomialIdeal(self.names, tuple(extra)))

    def sort_key(self):
        return (tuple(sorted(self.delta)), self.character.lattice.basis,
                tuple((v.torsion, v.primes) for v in self.character.values))


def mesoprime(names, delta, character):
    """Validated constructor: the lattice lives in Z^delta and every delta
    variable is a nonzerodivisor modulo the materialized ideal."""
    delta = frozenset(delta)
    n = len(names)
    for v in character.lattice.basis:
        if any(v[i] != 0 for i in range(n) if i not in delta):
            raise InputError("lattice vector %r not supported on delta" % (v,))
    m = Mesoprime(tuple(names), delta, character)
    I = m.ideal()
    for i in sorted(delta):
        e_i = tuple(1 if j == i else 0 for j in range(n))
        if not ideal_equals(colon_monomial(I, e_i), I):
            raise InputError("variable %d is a zerodivisor; not mesoprime" % i)
    return m


def _delta_character(I, delta):
    """Character of the delta part (I n k[delta vars]) of a cellular ideal."""
    if not delta:
        from .lattices import Lattice
        return PartialCharacter.trivial(Lattice.from_vectors(I.n, []))
    part = eliminate(I, delta)
    return character_of(part)


def _standard_monomials(component):
    """Exponents u supported off delta with u_i < d_i and X^u outside I,
    in lexicographic order over the nilpotent coordinates."""
    I = component.ideal
    nil = dict(component.nilpotency)
    indices = sorted(nil)
    out = []
    for combo in itertools.product(*(range(nil[i]) for i in indices)):
        u = [0] * I.n
        for i, c in zip(indices, combo):
            u[i] = c
        u = tuple(u)
        if not ideal_member(monomial(u), I):
            out.append(u)
    return out


def associated_mesoprimes(component):
    """Distinct associated mesoprimes with one witness monomial each,
    deterministically ordered."""
    I = component.ideal
    delta = component.delta
    found = {}
    for u in _standard_monomials(component):
        quotient = colon_monomial(I, u) if any(u) else I
        m = Mesoprime(I.names, delta, _delta_character(quotient, delta))
        if m not in found:
            found[m] = u
    return sorted(found.items(), key=lambda kv: kv[0].sort_key())


def is_mesoprimary(I):
    """(True, None) for mesoprimary ideals; otherwise (False, witness)
    where the witness monomial exhibits a second associated mesoprime
    (None when I is not even cellular)."""
    if I.is_unit():
        raise UnitIdealError("mesoprimary test is undefined for the unit ideal")
    component = as_cellular(I)
    if component is None:
        return False, None
    base = Mesoprime(I.names, component.delta, _delta_character(I, component.delta))
    for u in _standard_monomials(component):
        if not any(u):
            continue
        quotient = colon_monomial(I, u)
        m = Mesoprime(I.names, component.delta,
                      _delta_character(quotient, component.delta))
        if m != base:
            return False, u
    return True, None


def is_mesoprime(I):
    """The Mesoprime structure when I = I_L(rho) + p_deltac, else None."""
    gb = I.groebner()
    if gb.is_unit():
        return None
    n = I.n
    delta = set(range(n))
    for i in range(n):
        e_i = tuple(1 if j == i else 0 for j in range(n))
        if ideal_member(monomial(e_i), I):
            delta.discard(i)
    part = eliminate(I, delta) if delta else BinomialIdeal(I.names, ())
    if any(b.is_monomial for b in part.groebner().elements):
        return None
    if not ideal_equals(saturate_vars(part, range(n)), part):
        return None
    candidate = Mesoprime(I.names, frozenset(delta), character_of(part))
    return candidate if ideal_equals(candidate.ideal(), I) else None


def is_prime(I):
    """Binomial primality: mesoprime with a saturated lattice."""
    m = is_mesoprime(I)
    return m is not None and is_saturated(m.character.lattice)


def cellular_radical(component):
    """The radical of a cellular ideal, as a mesoprime (characteristic 0
    keeps the lattice part radical)."""
    return Mesoprime(component.ideal.names, component.delta,
                     _delta_character(component.ideal, component.delta))


def mesoprimary_primary_decomposition(I):
    """I = intersection of (I + I_j) over the lattice decomposition of its
    delta part; each component is primary."""
    ok, witness = is_mesoprimary(I)
    if not ok:
        raise NotMesoprimaryError(
            "ideal is not mesoprimary" if witness is None else
            "ideal is not mesoprimary: colon by the witness monomial changes "
            "the delta part", witness=witness)
    component = as_cellular(I)
    rho = _delta_character(I, component.delta)
    out = []
    for _, lattice_component in lattice_primary_decomposition(rho, I.names):
        out.append(ideal_sum(I, lattice_component))
    return out
