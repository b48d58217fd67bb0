"""Cellular binomial ideals: the cellularity test and the splitting
decomposition I = (I : X_i^d) n (I + <X_i^d>) on a non-nilpotent
zerodivisor variable, recursed to completion.

Cellular decompositions are not unique; this module pins the output by a
deterministic strategy (always split on the lowest-index offending
variable) and by sorting the resulting components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import (BinomialIdeal, colon_monomial, ideal_contains,
                     ideal_equals, ideal_member, ideal_sum, monomial,
                     saturate_vars)
from .errors import InputError, UnitIdealError


@dataclass(frozen=True)
class CellularComponent:
    """A delta-cellular ideal: variables in delta are nonzerodivisors,
    the others are nilpotent with the recorded exponents."""

    delta: frozenset
    ideal: BinomialIdeal
    nilpotency: tuple  # sorted ((i, d_i) for i not in delta)


def cellular_component(I, delta, nilpotency):
    delta = frozenset(delta)
    nilpotency = tuple(sorted(dict(nilpotency).items()))
    if set(dict(nilpotency)) != set(range(I.n)) - delta:
        raise InputError("nilpotency exponents must cover the complement of delta")
    if not ideal_equals(saturate_vars(I, delta), I):
        raise InputError("ideal is not saturated at its delta variables")
    for i, d in nilpotency:
        power = tuple(d if j == i else 0 for j in range(I.n))
        if not ideal_member(monomial(power), I):
            raise InputError("X_%d^%d is not in the ideal" % (i, d))
    return CellularComponent(delta, I, nilpotency)


def _unit_var(n, i, power=1):
    return tuple(power if j == i else 0 for j in range(n))


def _nilpotency_exponent(I, i):
    """Least d with X_i^d in I, or None; decided by saturation first."""
    sat = saturate_vars(I, [i])
    if not sat.is_unit():
        return None
    d = 1
    while not ideal_member(monomial(_unit_var(I.n, i, d)), I):
        d += 1
    return d


def _classify_variables(I):
    """(delta, nilpotency dict, offenders): offenders are zerodivisor,
    non-nilpotent variables; empty exactly when I is cellular."""
    delta, nilpotency, offenders = set(), {}, []
    for i in range(I.n):
        if ideal_equals(colon_monomial(I, _unit_var(I.n, i)), I):
            delta.add(i)
            continue
        d = _nilpotency_exponent(I, i)
        if d is None:
            offenders.append(i)
        else:
            nilpotency[i] = d
    return delta, nilpotency, offenders


def is_cellular(I):
    """The unique delta when I is cellular, None otherwise."""
    if I.is_unit():
        raise UnitIdealError("cellularity is undefined for the unit ideal")
    delta, nilpotency, offenders = _classify_variables(I)
    return frozenset(delta) if not offenders else None


def as_cellular(I):
    """The CellularComponent view of I, or None when I is not cellular."""
    if I.is_unit():
        raise UnitIdealError("cellularity is undefined for the unit ideal")
    delta, nilpotency, offenders = _classify_variables(I)
    if offenders:
        return None
    return CellularComponent(frozenset(delta), I, tuple(sorted(nilpotency.items())))


def _stable_colon_exponent(I, i):
    """Least d with I : X_i^d = I : X_i^e for all e >= d."""
    d = 1
    current = colon_monomial(I, _unit_var(I.n, i))
    while True:
        nxt = colon_monomial(current, _unit_var(I.n, i))
        if ideal_equals(nxt, current):
            return d, current
        current = nxt
        d += 1


def component_sort_key(component):
    return (tuple(sorted(component.delta)),
            tuple((b.lead, b.trail or ()) for b in component.ideal.groebner().elements))


def cellular_decompose(I, prune_components=False):
    """A finite list of cellular components whose intersection is I.

    Splits on the lowest-index non-nilpotent zerodivisor with the
    stabilized colon exponent; both branches strictly contain their
    parent, so the recursion terminates.
    """
    if I.is_unit():
        raise UnitIdealError("cannot decompose the unit ideal")
    out, work = [], [I]
    while work:
        J = work.pop()
        delta, nilpotency, offenders = _classify_variables(J)
        if not offenders:
            out.append(CellularComponent(frozenset(delta), J,
                                         tuple(sorted(nilpotency.items()))))
            continue
        i = offenders[0]
        d, left = _stable_colon_exponent(J, i)
        power = monomial(_unit_var(J.n, i, d))
        right = ideal_sum(J, BinomialIdeal(J.names, (power,)))
        assert not ideal_equals(left, J), "colon branch did not grow"
        assert not ideal_member(power, J), "monomial branch did not grow"
        work.append(right)
        work.append(left)
    unique = []
    for comp in out:
        if not any(ideal_equals(comp.ideal, kept.ideal) for kept in unique):
            unique.append(comp)
    unique.sort(key=component_sort_key)
    return prune(unique) if prune_components else unique


def prune(components):
    """Drop duplicates and any component containing another one.

    Removing a superset never changes the intersection, but this pairwise
    pruning does not certify a minimal decomposition.
    """
    unique = []
    for comp in components:
        if not any(ideal_equals(comp.ideal, kept.ideal) for kept in unique):
            unique.append(comp)
    kept = []
    for i, comp in enumerate(unique):
        redundant = any(j != i and ideal_contains(comp.ideal, other.ideal)
                        for j, other in enumerate(unique))
        if not redundant:
            kept.append(comp)
    return sorted(kept, key=component_sort_key)
