"""Binomial ideals, a two-term Buchberger engine, and the ideal operations
that preserve binomiality: elimination, colon by a monomial, variable
saturation, intersection with a monomial ideal, and the pure-part
construction.

A reduced Groebner basis of a binomial ideal consists of binomials, because
S-polynomials of binomials are binomials and reduction rewrites one term
into one term.  The single additive event is a term collision (two surviving
terms with the same exponent), which only needs a coefficient equality test:
equal coefficients cancel the element, unequal ones leave a monomial.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import InputError, NonBinomialOperationError, PurePartError
from .orders import (e_add, e_deg, e_divides, e_lcm, e_sub, elim, grevlex,
                     zero, GT, LT, MonomialOrder)
from .scalars import Scalar, ONE


@dataclass(frozen=True)
class Term:
    coeff: Scalar
    exponent: tuple


@dataclass(frozen=True)
class Binomial:
    """X^lead - coeff * X^trail, or the monic monomial X^lead when trail is None."""

    lead: tuple
    trail: tuple = None
    coeff: Scalar = None

    def __post_init__(self):
        if (self.trail is None) != (self.coeff is None):
            raise InputError("trail and coeff must be present together")
        if self.trail is not None and self.trail == self.lead:
            raise InputError("lead and trail exponents coincide")

    @property
    def is_monomial(self):
        return self.trail is None

    def support(self):
        sup = {i for i, e in enumerate(self.lead) if e}
        if self.trail is not None:
            sup |= {i for i, e in enumerate(self.trail) if e}
        return sup


def binomial(lead, trail=None, coeff=None):
    """Normalize a two-term combination; None when it cancels to zero."""
    lead = tuple(lead)
    if trail is None:
        return Binomial(lead)
    trail = tuple(trail)
    coeff = ONE if coeff is None else coeff
    if lead == trail:
        return None if coeff.is_one() else Binomial(lead)
    return Binomial(lead, trail, coeff)


def monomial(exponent):
    return Binomial(tuple(exponent))


def oriented(b, order):
    """Reorient so that lead > trail under ``order`` (inverting the coefficient)."""
    if b.trail is None or order.cmp(b.lead, b.trail) == GT:
        return b
    return Binomial(b.trail, b.lead, b.coeff.inv())


@dataclass(frozen=True)
class ReducedGB:
    """Reduced Groebner basis: monic leads, interreduced, sorted by lead."""

    order: MonomialOrder
    elements: tuple

    def is_zero(self):
        return not self.elements

    def is_unit(self):
        return any(e_deg(b.lead) == 0 for b in self.elements)

    def monomials(self):
        return tuple(b for b in self.elements if b.is_monomial)


@dataclass(eq=False)
class BinomialIdeal:
    """A binomial ideal given by generators, with per-order GB memoization.

    Values are immutable apart from the GB cache, which is an idempotent
    write-once-per-order memo: duplicate computation is harmless because
    reduced Groebner bases are unique.
    """

    names: tuple
    gens: tuple
    _gb: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.names = tuple(self.names)
        self.gens = tuple(g for g in self.gens if g is not None)
        for g in self.gens:
            if len(g.lead) != self.n:
                raise InputError("generator dimension %d, ring has %d variables"
                                 % (len(g.lead), self.n))

    @property
    def n(self):
        return len(self.names)

    def groebner(self, order=None):
        order = order or grevlex()
        cached = self._gb.get(order)
        if cached is None:
            cached = ReducedGB(order, _reduced_basis(self.gens, order))
            self._gb[order] = cached
        return cached

    def is_unit(self):
        return self.groebner().is_unit()

    def is_zero(self):
        return self.groebner().is_zero()


def ideal(names, gens):
    return BinomialIdeal(tuple(names), tuple(gens))


def groebner_basis(I, order=None):
    """Reduced Groebner basis of I (memoized on the ideal per order)."""
    return I.groebner(order)


# ---------------------------------------------------------------------------
# reduction and Buchberger

def _nf_exponent(u, c, elements):
    """Normal form of the term c*X^u against oriented binomials.

    Returns (exponent, coeff) or None when the term reduces to zero.
    The exponent of the result depends only on u, never on c.
    """
    progress = True
    while progress:
        progress = False
        for g in elements:
            if e_divides(g.lead, u):
                if g.trail is None:
                    return None
                u = e_add(e_sub(u, g.lead), g.trail)
                c = c * g.coeff
                progress = True
                break
    return u, c


def _combine(t1, t2, order):
    """Assemble a reduced binomial from up to two irreducible terms."""
    if t1 is None and t2 is None:
        return None
    if t2 is None:
        return monomial(t1[0])
    if t1 is None:
        return monomial(t2[0])
    (u, a), (v, b) = t1, t2
    if u == v:
        # the single additive event: a*X^u + b*X^u
        return None if a == b.negate() else monomial(u)
    if order.cmp(u, v) == LT:
        (u, a), (v, b) = (v, b), (u, a)
    return Binomial(u, v, (b * a.inv()).negate())


def _spair_terms(f, g):
    """The two signed terms of the S-polynomial of oriented f and g."""
    m = e_lcm(f.lead, g.lead)
    # X^(m-lf)*f - X^(m-lg)*g; the X^m terms cancel
    t1 = (e_add(e_sub(m, g.lead), g.trail), g.coeff) if g.trail is not None else None
    t2 = (e_add(e_sub(m, f.lead), f.trail), f.coeff.negate()) if f.trail is not None else None
    return t1, t2


def _reduced_basis(gens, order):
    basis = []
    for g in gens:
        ob = oriented(g, order)
        if ob is not None:
            basis.append(ob)

    pairs = []

    def push_pairs(j):
        for i in range(j):
            f, g = basis[i], basis[j]
            if f.is_monomial and g.is_monomial:
                continue
            key = order.key(e_lcm(f.lead, g.lead))
            heapq.heappush(pairs, (key, i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        f, g = basis[i], basis[j]
        lcm = e_lcm(f.lead, g.lead)
        if lcm == e_add(f.lead, g.lead):
            continue  # coprime leads: S-pair reduces to zero
        t1, t2 = _spair_terms(f, g)
        r1 = _nf_exponent(*t1, basis) if t1 is not None else None
        r2 = _nf_exponent(*t2, basis) if t2 is not None else None
        r = _combine(r1, r2, order)
        if r is not None:
            basis.append(r)
            push_pairs(len(basis) - 1)

    return _interreduce(basis, order)


def _interreduce(basis, order):
    by_lead = sorted(basis, key=lambda b: order.key(b.lead))
    minimal = []
    for b in by_lead:
        if not any(e_divides(k.lead, b.lead) for k in minimal):
            minimal.append(b)
    out = []
    for b in minimal:
        if b.trail is None:
            out.append(b)
            continue
        t = _nf_exponent(b.trail, b.coeff, minimal)
        out.append(monomial(b.lead) if t is None else Binomial(b.lead, t[0], t[1]))
    out.sort(key=lambda b: order.key(b.lead))
    return tuple(out)


# ---------------------------------------------------------------------------
# membership, normal forms, equality

def normal_form(t, gb):
    """Normal form of a term modulo a reduced GB; None when it reduces to 0."""
    if gb.elements and len(t.exponent) != len(gb.elements[0].lead):
        raise InputError("term dimension %d, basis dimension %d"
                         % (len(t.exponent), len(gb.elements[0].lead)))
    r = _nf_exponent(t.exponent, t.coeff, gb.elements)
    return None if r is None else Term(r[1], r[0])


def ideal_member(f, I, order=None):
    """Membership test via normal forms of both terms and one equality check."""
    gb = I.groebner(order)
    r1 = _nf_exponent(f.lead, ONE, gb.elements)
    if f.trail is None:
        return r1 is None
    r2 = _nf_exponent(f.trail, f.coeff, gb.elements)
    if r1 is None or r2 is None:
        return r1 is None and r2 is None
    return r1 == r2


def ideal_equals(I, J):
    if I.names != J.names:
        raise InputError("ideals live in different rings")
    return I.groebner().elements == J.groebner().elements


def ideal_contains(I, J):
    """True when J is a subset of I."""
    return all(ideal_member(g, I) for g in J.groebner().elements)


def ideal_sum(I, *others):
    gens = list(I.gens)
    for J in others:
        if J.names != I.names:
            raise InputError("ideals live in different rings")
        gens.extend(J.gens)
    return BinomialIdeal(I.names, tuple(gens))


# ---------------------------------------------------------------------------
# variable elimination and the auxiliary-variable tricks

def eliminate(I, keep):
    """The elimination ideal I n k[X_i : i in keep], in the same ambient ring."""
    keep = set(keep)
    block = [i for i in range(I.n) if i not in keep]
    if not block:
        return BinomialIdeal(I.names, I.groebner().elements)
    gb = I.groebner(elim(block))
    kept = tuple(b for b in gb.elements if b.support() <= keep)
    return BinomialIdeal(I.names, kept)


def project_ideal(I, keep):
    """Rewrite an ideal supported on ``keep`` into the smaller ring."""
    keep = sorted(keep)
    gens = []
    for b in I.groebner().elements:
        if not b.support() <= set(keep):
            raise InputError("generator %r not supported on the kept variables" % (b,))
        lead = tuple(b.lead[i] for i in keep)
        trail = None if b.trail is None else tuple(b.trail[i] for i in keep)
        gens.append(binomial(lead, trail, b.coeff))
    return BinomialIdeal(tuple(I.names[i] for i in keep), tuple(gens))


def _lift(b, extra_lead=0, extra_trail=0):
    lead = b.lead + (extra_lead,)
    trail = None if b.trail is None else b.trail + (extra_trail,)
    return Binomial(lead, trail, b.coeff)


def _aux_eliminate(names, gens_ext):
    """Eliminate the final auxiliary variable and drop its coordinate."""
    n = len(names)
    aux = BinomialIdeal(names + ("_t",), tuple(g for g in gens_ext if g is not None))
    kept = eliminate(aux, range(n))
    return project_ideal(kept, range(n))


def colon_monomial(I, u):
    """The ideal quotient (I : X^u), via T*I + (1-T)<X^u> and elimination."""
    u = tuple(u)
    if len(u) != I.n:
        raise InputError("monomial dimension %d, ring has %d variables" % (len(u), I.n))
    if all(x == 0 for x in u):
        return I
    gens = [_lift(g, 1, 1) for g in I.gens]          # T*g
    gens.append(binomial(u + (0,), u + (1,)))        # (1-T)*X^u
    inter = _aux_eliminate(I.names, gens)            # I n <X^u>
    quotient = []
    for b in inter.gens:
        lead, trail = e_sub(b.lead, u), None
        if b.trail is not None:
            trail = e_sub(b.trail, u)
        if min(lead) < 0 or (trail is not None and min(trail) < 0):
            raise AssertionError("element of I n <X^u> not divisible by X^u")
        quotient.append(binomial(lead, trail, b.coeff))
    return BinomialIdeal(I.names, tuple(quotient))


def colon(I, divisor):
    """Colon by a monomial; refuses a two-term divisor (result can be
    non-binomial, so it is outside this engine)."""
    if divisor.trail is not None:
        raise NonBinomialOperationError(
            "colon by a binomial may have a non-binomial result; only "
            "monomial divisors are supported")
    return colon_monomial(I, divisor.lead)


def saturate_vars(I, sigma):
    """I : (prod_{i in sigma} X_i)^infinity, by iterating the colon."""
    sigma = sorted(set(sigma))
    if not sigma:
        return I
    u = tuple(1 if i in sigma else 0 for i in range(I.n))
    current = I
    while True:
        step = colon_monomial(current, u)
        if ideal_equals(step, current):
            return current
        current = step


def saturate_monomial(I, u):
    """I : (X^u)^infinity."""
    return saturate_vars(I, [i for i, x in enumerate(u) if x])


def intersect_monomial(I, M):
    """I n M for a monomial ideal M, via T*I + (1-T)*M and elimination."""
    if M.names != I.names:
        raise InputError("ideals live in different rings")
    if any(g.trail is not None for g in M.gens):
        raise NonBinomialOperationError(
            "intersection is only supported with a monomial ideal; general "
            "intersections of binomial ideals need not be binomial")
    gens = [_lift(g, 1, 1) for g in I.gens]
    for m in M.gens:
        gens.append(binomial(m.lead + (0,), m.lead + (1,)))
    return _aux_eliminate(I.names, gens)


def intersect(I, J):
    """Intersection where one side is a monomial ideal; refuses otherwise."""
    if all(g.trail is None for g in J.gens):
        return intersect_monomial(I, J)
    if all(g.trail is None for g in I.gens):
        return intersect_monomial(J, I)
    raise NonBinomialOperationError(
        "intersection of two binomial ideals need not be binomial; "
        "one argument must be a monomial ideal")


def scalar_power(lambdas, u):
    out = ONE
    for lam, e in zip(lambdas, u):
        out = out * lam ** e
    return out


def pure_part(I, lambdas):
    """The pure ideal I n <X_i - lambda_i>, which induces the same congruence.

    Requires I to contain monomials and every non-monomial reduced-GB
    element X^a - c X^b to satisfy lambda^a = c * lambda^b.  Computed via
    (A + T*P + (1-T)*Q) n k[X] = (A + P) n (A + Q) with A the non-monomial
    part, P = <X_i - lambda_i>, Q = the monomial part; the precondition
    gives A within P, so the right side is <X_i - lambda_i> n I.
    """
    lambdas = tuple(lambdas)
    if len(lambdas) != I.n:
        raise InputError("expected %d scale values, got %d" % (I.n, len(lambdas)))
    gb = I.groebner()
    mono = [b for b in gb.elements if b.is_monomial]
    if not mono:
        raise PurePartError("ideal contains no monomials; it is already pure")
    pure = [b for b in gb.elements if not b.is_monomial]
    for b in pure:
        if scalar_power(lambdas, b.lead) != b.coeff * scalar_power(lambdas, b.trail):
            raise PurePartError(
                "scale point does not annihilate the basis element "
                "X^%r - %s X^%r" % (b.lead, b.coeff, b.trail))
    gens = [_lift(b) for b in pure]                              # A
    for i, lam in enumerate(lambdas):                            # T*(X_i - lam_i)
        e_i = tuple(1 if j == i else 0 for j in range(I.n))
        gens.append(binomial(e_i + (1,), zero(I.n) + (1,), lam))
    for m in mono:                                               # (1-T)*X^m
        gens.append(binomial(m.lead + (0,), m.lead + (1,)))
    return _aux_eliminate(I.names, gens)
