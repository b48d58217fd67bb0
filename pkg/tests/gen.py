"""Seeded random generators shared by the property suites."""

import random
from fractions import Fraction

from binomials import Binomial, BinomialIdeal, Scalar, binomial, monomial

SMALL_PRIMES = (2, 3, 5, 7)


def rng(seed):
    return random.Random(seed)


def rand_exponent(r, n, maxdeg=6):
    # distribute a random total degree over the coordinates
    total = r.randint(0, maxdeg)
    exponent = [0] * n
    for _ in range(total):
        exponent[r.randrange(n)] += 1
    return tuple(exponent)


def rand_rational_scalar(r):
    num = r.choice([1, 1, 2, 3, 4, 5, 6])
    den = r.choice([1, 1, 1, 2, 3])
    sign = r.choice([1, -1])
    return Scalar.from_rational(sign * num, den)


def rand_scalar(r):
    s = rand_rational_scalar(r)
    if r.random() < 0.3:
        m = r.choice([3, 4, 5, 6])
        s = s * Scalar.zeta(m, r.randrange(1, m))
    return s


def rand_binomial(r, n, maxdeg=6, rational=True, allow_monomial=True):
    lead = rand_exponent(r, n, maxdeg)
    if allow_monomial and r.random() < 0.2:
        if not any(lead):
            lead = tuple(1 if i == r.randrange(n) else 0 for i in range(n))
        return monomial(lead)
    trail = rand_exponent(r, n, maxdeg)
    while trail == lead:
        trail = rand_exponent(r, n, maxdeg)
    coeff = rand_rational_scalar(r) if rational else rand_scalar(r)
    return binomial(lead, trail, coeff)


def rand_ideal(r, n=3, size=None, maxdeg=6, rational=True, allow_monomial=True,
               names=None):
    size = size or r.randint(1, 3)
    names = names or tuple("XYZW"[:n])
    gens = [rand_binomial(r, n, maxdeg, rational, allow_monomial)
            for _ in range(size)]
    return BinomialIdeal(names, tuple(gens))


def rand_matrix(r, max_rows=6, max_cols=6, bound=20):
    rows = r.randint(1, max_rows)
    cols = r.randint(1, max_cols)
    return [[r.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def rand_lattice_vectors(r, n, count=None, bound=4):
    count = count or r.randint(1, n)
    return [tuple(r.randint(-bound, bound) for _ in range(n)) for _ in range(count)]
