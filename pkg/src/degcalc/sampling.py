"""Seeded random generators for ordinals and W-terms.

Used by the property checks and by ``degcalc model validate``.  All
generators take a :class:`random.Random` so runs are reproducible.
"""

import random
from functools import cmp_to_key

from .metaordinal import mo_normalize
from .ordinal import ONE, ZERO, nat, omega_pow, ord_add, ord_cmp, ord_is_limit, ord_mul, veblen


def cantor_ordinal(rng, max_exponent, max_terms=4, max_coeff=3):
    """Random ordinal below ``w^max_exponent`` with finite exponents."""
    exps = sorted(rng.sample(range(max_exponent), rng.randint(0, min(max_terms, max_exponent))),
                  reverse=True)
    total = ZERO
    for e in exps:
        total = ord_add(total, ord_mul(omega_pow(nat(e)), nat(rng.randint(1, max_coeff))))
    return total


def random_ordinal(rng, depth=2, max_level=2):
    """Random ordinal in Veblen normal form, nesting ``depth`` levels deep."""
    if depth <= 0:
        return nat(rng.randint(0, 3))
    pieces = []
    for _ in range(rng.randint(0, 3)):
        roll = rng.random()
        if roll < 0.2:
            head = ONE
        elif roll < 0.7:
            head = omega_pow(random_ordinal(rng, depth - 1, max_level))
        else:
            level = nat(rng.randint(1, max_level))
            head = veblen(level, random_ordinal(rng, depth - 1, max_level))
        pieces.append(ord_mul(head, nat(rng.randint(1, 3))))
    pieces.sort(key=cmp_to_key(ord_cmp), reverse=True)
    total = ZERO
    for p in pieces:
        total = ord_add(total, p)
    return total


def random_limit(rng, depth=2, max_level=2):
    while True:
        k = random_ordinal(rng, depth, max_level)
        if ord_is_limit(k):
            return k


def random_meta(rng, depth=1, max_power=3, max_terms=3):
    """Random W-term with small ordinal parameters."""
    n = rng.randint(0, max_terms)
    raw = []
    for _ in range(n):
        exp = nat(rng.randint(1, max_power)) if rng.random() < 0.8 else random_ordinal(rng, depth)
        coeff = random_ordinal(rng, depth)
        if exp != ZERO and coeff != ZERO:
            raw.append((exp, coeff))
    const = random_ordinal(rng, depth) if rng.random() < 0.7 else ZERO
    return mo_normalize(raw, const)


def fragment_term(rng, depth=1, max_b=3):
    """Random W-term below W^2, i.e. ``W*b + a``."""
    b = nat(rng.randint(0, max_b)) if rng.random() < 0.7 else random_ordinal(rng, depth, 1)
    a = random_ordinal(rng, depth, 1)
    raw = [(ONE, b)] if b != ZERO else []
    return mo_normalize(raw, a)


def make_rng(seed):
    return random.Random(seed)
