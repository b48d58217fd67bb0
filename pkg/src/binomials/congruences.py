"""The congruence a binomial ideal induces on N^n, and its exploration.

Two exponents are related when some nonzero multiple of one monomial minus
the other lies in the ideal; the class of an exponent is its normal-form
exponent under a fixed order, or the distinguished NIL tag when the
monomial itself lies in the ideal.  NIL is the monoid's absorbing element.

Classification of elements and congruences is only sound on a maximal
congruence, one whose ideal contains the monomials of its nil class; an
ideal with monomials is automatically maximal, a lattice ideal has no nil,
and the remaining pure ideals go through ``maximal_ideal``'s bounded
search, which reports an explicit completeness flag.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cellular import is_cellular
from .engine import (BinomialIdeal, Term, colon_monomial, eliminate,
                     ideal_equals, ideal_member, ideal_sum, monomial,
                     normal_form, saturate_monomial, saturate_vars)
from .errors import (BudgetExceededError, InputError, NonMaximalCongruenceError,
                     NotCancellativeError, NotPrimaryError, UnitIdealError)
from .lattices import character_of, lattice_ideal, lattice_intersect
from .mesoprimary import is_mesoprime, is_mesoprimary, is_prime
from .orders import e_add, e_deg, grevlex, zero
from .scalars import ONE


class _Nil:
    """Distinguished tag for the absorbing (nil) class."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NIL"


NIL = _Nil()


def _is_lattice_ideal(I):
    gb = I.groebner()
    if any(b.is_monomial for b in gb.elements):
        return False
    return ideal_equals(saturate_vars(I, range(I.n)), I)


@dataclass(eq=False)
class Congruence:
    """View of the relation ~ induced by a binomial ideal on N^n."""

    ideal: BinomialIdeal
    order: object
    maximal: bool


def congruence(I, order=None):
    """Congruence view of I; the maximality flag is set when I is known to
    contain its nil monomials (monomials present, or lattice ideal)."""
    if I.is_unit():
        raise UnitIdealError("the unit ideal induces no congruence")
    order = order or grevlex()
    gb = I.groebner(order)
    maximal = any(b.is_monomial for b in gb.elements) or _is_lattice_ideal(I)
    return Congruence(I, order, maximal)


def class_id(c, u):
    """NIL when X^u lies in the ideal, else the normal-form exponent."""
    u = tuple(u)
    if len(u) != c.ideal.n:
        raise InputError("exponent dimension %d, ring has %d variables"
                         % (len(u), c.ideal.n))
    nf = normal_form(Term(ONE, u), c.ideal.groebner(c.order))
    return NIL if nf is None else nf.exponent


def related(c, u, v):
    return class_id(c, u) == class_id(c, v)


def _is_nil(c, u):
    """Absorbing test: [u] != [0] and u + e_i ~ u for every generator."""
    u = tuple(u)
    if class_id(c, u) == class_id(c, zero(c.ideal.n)):
        return False
    n = c.ideal.n
    return all(related(c, e_add(u, tuple(1 if j == i else 0 for j in range(n))), u)
               for i in range(n))


@dataclass(frozen=True)
class ElementFlags:
    nil: bool
    nilpotent: bool
    cancellable: bool
    partly_cancellable: bool


def classify_element(c, u):
    """Nil / nilpotent / cancellable / partly-cancellable flags of [u].

    Requires a maximal congruence: cancellability via colon is only sound
    there.  The partly-cancellable branch additionally needs a primary
    (cellular) congruence.
    """
    if not c.maximal:
        raise NonMaximalCongruenceError(
            "element classification needs a maximal congruence; run "
            "maximal_ideal first")
    u = tuple(u)
    I = c.ideal
    nil = _is_nil(c, u)
    nilpotent = any(u) and saturate_monomial(I, u).is_unit()
    cancellable = ideal_equals(colon_monomial(I, u), I)
    if cancellable or nil:
        # nil sums are all the absorbing class, so the defining implication
        # a + b = a + c != nil => b = c holds vacuously
        partly = True
    else:
        delta = is_cellular(I)
        if delta is None:
            raise NotPrimaryError(
                "partly-cancellable test needs a primary congruence "
                "(cellular ideal)")
        partly = ideal_equals(eliminate(colon_monomial(I, u), delta),
                              eliminate(I, delta))
    return ElementFlags(nil, nilpotent, cancellable, partly)


@dataclass(frozen=True)
class CongruenceFlags:
    cancellative: bool
    prime: bool
    primary: bool
    mesoprimary: bool
    toric: bool


def classify_congruence(c):
    """Cancellative / prime / primary / mesoprimary / toric flags, via the
    corresponding ideal predicates; requires a maximal congruence."""
    if not c.maximal:
        raise NonMaximalCongruenceError(
            "congruence classification needs a maximal congruence")
    I = c.ideal
    flags = CongruenceFlags(
        cancellative=_is_lattice_ideal(I),
        prime=is_mesoprime(I) is not None,
        primary=is_cellular(I) is not None,
        mesoprimary=is_mesoprimary(I)[0],
        toric=is_prime(I),
    )
    assert not flags.toric or flags.prime
    assert not flags.prime or flags.primary
    assert not flags.mesoprimary or flags.primary
    return flags


def _total_degree_exponents(n, degree):
    """All exponents in N^n of the given total degree, lexicographically."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _total_degree_exponents(n - 1, degree - first):
            yield (first,) + rest


def maximal_ideal(J, bound=None):
    """(ideal, complete): the congruence-maximal ideal J + nil monomials.

    An ideal with monomials is already maximal (complete = True).  A
    lattice ideal has no nil (complete = True).  Otherwise nil classes are
    searched up to the total-degree bound; found nils are adjoined and the
    search repeated to a fixed point, but completeness stays uncertified.
    """
    if J.is_unit():
        raise UnitIdealError("the unit ideal induces no congruence")
    gb = J.groebner()
    if any(b.is_monomial for b in gb.elements):
        return J, True
    if _is_lattice_ideal(J):
        return J, True
    if bound is None:
        maxdeg = max((max(e_deg(b.lead), e_deg(b.trail)) for b in gb.elements),
                     default=0)
        bound = 2 * maxdeg + J.n
    current = J
    while True:
        c = Congruence(current, grevlex(), False)
        nils = []
        for degree in range(1, bound + 1):
            for u in _total_degree_exponents(J.n, degree):
                if ideal_member(monomial(u), current):
                    continue
                if _is_nil(c, u):
                    nils.append(u)
        if not nils:
            break
        minimal = [u for u in nils
                   if not any(v != u and all(a <= b for a, b in zip(v, u))
                              for v in nils)]
        current = ideal_sum(current, BinomialIdeal(
            J.names, tuple(monomial(u) for u in minimal)))
    # neither branch can certify the bounded search exhausted the nil class
    return current, False


@dataclass(frozen=True)
class QuotientTable:
    """Finite quotient monoid: class representatives and an addition table
    of representative indices.  Row and column 0 belong to the class of 0;
    the NIL row, when present, is constant."""

    classes: tuple  # ClassIds: exponents, possibly the NIL tag
    table: tuple    # table[i][j] = index of classes[i] + classes[j]

    def has_nil(self):
        return NIL in self.classes


def quotient_table(c, max_classes):
    """Breadth-first closure of the quotient monoid from [0]; raises a
    budget error (carrying progress) past ``max_classes`` classes."""
    n = c.ideal.n
    generators = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    start = class_id(c, zero(n))
    classes = [start]
    index = {start: 0}
    frontier = [start]
    while frontier:
        cls = frontier.pop(0)
        if cls is NIL:
            continue
        for g in generators:
            nxt = class_id(c, e_add(cls, g))
            if nxt not in index:
                if len(classes) >= max_classes:
                    raise BudgetExceededError(
                        "quotient exceeded %d classes; found %r so far"
                        % (max_classes, classes), classes=classes)
                index[nxt] = len(classes)
                classes.append(nxt)
                frontier.append(nxt)
    table = []
    for a in classes:
        row = []
        for b in classes:
            if a is NIL or b is NIL:
                row.append(index[NIL])
            else:
                row.append(index[class_id(c, e_add(a, b))])
        table.append(tuple(row))
    return QuotientTable(tuple(classes), tuple(table))


def rees_ideal(exponents, names):
    """The monomial ideal whose congruence is the Rees congruence modulo
    the monoid ideal generated by ``exponents``."""
    exponents = [tuple(e) for e in exponents]
    n = len(names)
    for e in exponents:
        if len(e) != n:
            raise InputError("exponent dimension %d, ring has %d variables"
                             % (len(e), n))
        if not any(e):
            raise InputError("0 generates the improper monoid ideal; "
                             "the Rees quotient needs a proper E")
    return BinomialIdeal(tuple(names), tuple(monomial(e) for e in exponents))


def intersection_related(c1, c2, u, v):
    """Pairwise decision for the intersection congruence: u ~ v in the
    common refinement iff u ~ v in both inputs.

    The intersection of arbitrary congruences has no finite ideal
    construction here (the intersection of the associated ideals need not
    be binomial), so only this decision procedure is exposed; the
    cancellative case has a constructor in ``cancellative_intersect``.
    """
    return related(c1, u, v) and related(c2, u, v)


def cancellative_intersect(c1, c2):
    """The intersection congruence of two cancellative congruences: the
    congruence of the lattice-intersection ideal."""
    for c in (c1, c2):
        if not _is_lattice_ideal(c.ideal):
            raise NotCancellativeError(
                "congruence intersection is only constructed for "
                "cancellative congruences (lattice ideals)")
    if c1.ideal.names != c2.ideal.names:
        raise InputError("congruences live in different rings")
    L1 = character_of(c1.ideal).lattice
    L2 = character_of(c2.ideal).lattice
    L = lattice_intersect(L1, L2)
    from .lattices import PartialCharacter
    I = lattice_ideal(PartialCharacter.trivial(L), c1.ideal.names)
    return Congruence(I, c1.order, True)


# ---------------------------------------------------------------------------
# table rendering

def _class_label(cls, names):
    if cls is NIL:
        return "inf"
    if not any(cls):
        return "0"
    parts = []
    for name, e in zip(names, cls):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def table_text(qt, names):
    """Aligned text rendition of the addition table."""
    labels = [_class_label(cls, names) for cls in qt.classes]
    width = max(len(s) for s in labels + ["+"])
    rows = [["+"] + labels]
    for label, row in zip(labels, qt.table):
        rows.append([label] + [labels[j] for j in row])
    return "\n".join(" | ".join(s.rjust(width) for s in row) for row in rows)


def table_json(qt, names):
    return {
        "classes": [None if cls is NIL else list(cls) for cls in qt.classes],
        "labels": [_class_label(cls, names) for cls in qt.classes],
        "table": [list(row) for row in qt.table],
    }
