"""The canonical model: degrees of inaccessibility over ordinal notations.

"Inaccessible" is read as "limit ordinal".  Under that reading the limit
point operator I and the diagonal intersection D become the classical
derivative operations, and every class reached from the base by finitely
many steps is one of

* ``MultOmega(a)``       the nonzero multiples of ``w^a``;
* ``VeblenImage(b, a)``  the values ``phi(b, xi)`` with ``w^a | xi``
  (and ``xi > 0`` when ``a >= 1``).

The module gives closed forms for the operators, membership, least
elements and exact degrees for W-terms below ``W^2``, together with an
independent brute-force oracle for finite degrees and direct probes of
the operator definitions used to validate the closed forms.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import NotInBase, OutOfFragment, OutOfRange
from .metaordinal import MetaOrdinal, as_meta, mo_print
from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    as_ordinal,
    divides_omega_pow,
    fund_seq,
    is_natural,
    is_principal,
    least_exponent,
    leading_exponent,
    nat,
    omega_pow,
    ord_add,
    ord_cmp,
    ord_is_limit,
    ord_print,
    ord_succ,
    principal_parts,
    to_int,
    truncate_below,
    veblen,
)

PROBE_DEPTH = 8


@dataclass(frozen=True)
class MultOmega:
    """``{k > 0 : w^a divides k}``; ``MultOmega(1)`` is the class of limits."""

    a: Ordinal

    def __post_init__(self):
        if self.a == ZERO:
            raise ValueError("MultOmega needs a >= 1")

    def __str__(self):
        return f"MultOmega({ord_print(self.a)})"


@dataclass(frozen=True)
class VeblenImage:
    """``{phi(level, xi) : w^divisor | xi, xi > 0 if divisor >= 1}``."""

    level: Ordinal
    divisor: Ordinal

    def __post_init__(self):
        if self.level == ZERO:
            raise ValueError("VeblenImage needs level >= 1")

    def __str__(self):
        return f"VeblenImage({ord_print(self.level)},{ord_print(self.divisor)})"


ClassExpr = Union[MultOmega, VeblenImage]


# ------------------------------------------------------------- the calculus

def base_class():
    return MultOmega(ONE)


def apply_I(x):
    """Limit points of ``x``."""
    if isinstance(x, MultOmega):
        return MultOmega(ord_succ(x.a))
    return VeblenImage(x.level, ord_succ(x.divisor))


def iterate_I(x, alpha):
    """The ``alpha``-fold iterate; limit stages intersect the earlier ones."""
    alpha = as_ordinal(alpha)
    if isinstance(x, MultOmega):
        return MultOmega(ord_add(x.a, alpha))
    return VeblenImage(x.level, ord_add(x.divisor, alpha))


def diagonal_const_family():
    """Diagonal intersection of ``iterate_I(base, alpha)`` over all alpha."""
    return VeblenImage(ONE, ZERO)


def diagonal_level_family(b):
    """Diagonal intersection of ``VeblenImage(b, alpha)`` over all alpha."""
    b = as_ordinal(b)
    if b == ZERO:
        raise ValueError("level must be at least 1")
    return VeblenImage(ord_succ(b), ZERO)


def _split_fragment(t):
    """``t = W*b + a`` -> ``(b, a)``; OutOfFragment at or above ``W^2``."""
    t = as_meta(t)
    if not t.terms:
        return ZERO, t.constant
    if len(t.terms) == 1 and t.terms[0][0] == ONE:
        return t.terms[0][1], t.constant
    raise OutOfFragment(f"{mo_print(t)} is at or above W^2; the model covers W*b+a only")


def class_of(t):
    b, a = _split_fragment(t)
    if b == ZERO:
        return MultOmega(ord_add(ONE, a))
    return VeblenImage(b, a)


# ------------------------------------------------------------- membership

def _veblen_index(level, k):
    """The ``xi`` with ``phi(level, xi) = k``, or None if ``k`` is no such value."""
    if not is_principal(k):
        return None
    c, y = principal_parts(k)
    rel = ord_cmp(c, level)
    if rel < 0:
        return None
    return y if rel == 0 else k


def class_member(x, k):
    k = as_ordinal(k)
    if isinstance(x, MultOmega):
        return k != ZERO and divides_omega_pow(x.a, k)
    xi = _veblen_index(x.level, k)
    if xi is None:
        return False
    return divides_omega_pow(x.divisor, xi) and (x.divisor == ZERO or xi != ZERO)


def class_least(x):
    if isinstance(x, MultOmega):
        return omega_pow(x.a)
    return veblen(x.level, ZERO if x.divisor == ZERO else omega_pow(x.divisor))


def member(t, k):
    return class_member(class_of(t), k)


def least(t):
    return class_least(class_of(t))


def exact_degree(k):
    """The ``t < W^2`` with ``member(t, k)`` and not ``member(t+1, k)``."""
    k = as_ordinal(k)
    if not ord_is_limit(k):
        raise NotInBase(f"{ord_print(k)} is not a limit ordinal")
    if is_principal(k):
        c, y = principal_parts(k)
        if c != ZERO:
            if y == ZERO:
                return MetaOrdinal(((ONE, c),))
            return MetaOrdinal(((ONE, c),), least_exponent(y))
    e = least_exponent(k)
    # largest a with 1 + a <= e
    return MetaOrdinal((), nat(to_int(e) - 1) if is_natural(e) else e)


# ------------------------------------------------ direct operator probes
#
# These evaluate the definitions of I and D directly, using only membership
# in the *input* class and least elements above a bound.  They are what the
# closed forms above are checked against.

def _veblen_inverse(level, y):
    """Least ``xi`` with ``phi(level, xi) > y``."""
    if y == ZERO:
        return ZERO
    h = y.terms[0][0]
    c, z = h.level, h.index
    head = Ordinal(((h, 1),))
    # values of phi are additively principal: exceeding y is exceeding its head
    rel = ord_cmp(c, level)
    if rel > 0:
        return ord_succ(head)  # head is a fixed point of phi(level, .)
    if rel == 0:
        return ord_succ(z)
    return _veblen_inverse(level, z)


def _round_up_multiple(xi, a):
    """Least ``x >= xi`` with ``w^a | x`` and ``x > 0`` when ``a >= 1``."""
    if divides_omega_pow(a, xi) and (a == ZERO or xi != ZERO):
        return xi
    return ord_add(truncate_below(xi, a), omega_pow(a))


def least_above(x, y):
    """Least member of ``x`` strictly greater than ``y``."""
    y = as_ordinal(y)
    if isinstance(x, MultOmega):
        return ord_add(truncate_below(y, x.a), omega_pow(x.a))
    xi = _round_up_multiple(_veblen_inverse(x.level, y), x.divisor)
    return veblen(x.level, xi)


def probe_limit_point(x, k, depth=PROBE_DEPTH):
    """Direct test of ``k`` in I(x): a limit with members of x cofinal below it.

    Each probe ``fund_seq(k, i)`` must have a member of ``x`` strictly between
    it and ``k``; a failing probe is an exact certificate of non-membership.
    """
    k = as_ordinal(k)
    if not ord_is_limit(k):
        return False
    return all(ord_cmp(least_above(x, fund_seq(k, i)), k) < 0 for i in range(depth))


def probe_diagonal(family, k, depth=PROBE_DEPTH):
    """Direct test of ``k`` in the diagonal intersection of ``family``.

    ``family(alpha)`` must be decreasing in ``alpha``, so the probes
    ``alpha = fund_seq(k, i)`` climbing to ``k`` carry the whole condition.
    """
    k = as_ordinal(k)
    if not ord_is_limit(k):
        return False
    return all(class_member(family(fund_seq(k, i)), k) for i in range(depth))


def probe_intersection(x, lam, k, depth=PROBE_DEPTH):
    """Direct test of ``k`` in the intersection of ``iterate_I(x, beta)``, beta < lam."""
    return all(class_member(iterate_I(x, fund_seq(lam, i)), k) for i in range(depth))


# ------------------------------------------------- finite-degree oracle

ORACLE_MAX_DEGREE = 6
ORACLE_MAX_EXPONENT = 8


def oracle_member_const(n, k):
    """Is ``k`` an ``n``-point, computed by recursion on the definition?

    0-points are the limit ordinals; ``(n+1)``-points are limits at which the
    ``n``-points are cofinal.  For ``k = q + w^e`` the fundamental sequence
    cuts the interval below ``k`` into blocks ``(k[i], k[i+1]]`` that are
    translates of one another, so a block with no ``n``-point certifies that
    none lie above ``k[i]``.  Candidates in a block are ``k[i] + w^j``: any
    point of the block lies at or above one of them with the same final term.
    """
    k = as_ordinal(k)
    if not 0 <= n <= ORACLE_MAX_DEGREE:
        raise OutOfRange(f"degree {n} outside 0..{ORACLE_MAX_DEGREE}")
    if k != ZERO and ord_cmp(leading_exponent(k), nat(ORACLE_MAX_EXPONENT)) >= 0:
        raise OutOfRange(f"{ord_print(k)} is not below w^{ORACLE_MAX_EXPONENT}")
    return _oracle(n, k)


@lru_cache(maxsize=None)
def _oracle(n, k):
    if not ord_is_limit(k):
        return False
    if n == 0:
        return True
    e = to_int(least_exponent(k))
    for i in range(PROBE_DEPTH):
        start = fund_seq(k, i)
        if not any(_oracle(n - 1, ord_add(start, omega_pow(nat(j)))) for j in range(e - 1, -1, -1)):
            return False
    return True


# ------------------------------------------------------- rule validation

def _rule_cases(rng):
    """``(name, closed form, direct test, classes to draw samples from)``."""
    from .sampling import random_ordinal

    def small(depth=1):
        return random_ordinal(rng, depth, 1)

    a = ord_add(ONE, small())
    b = ord_add(ONE, small())
    lam = ord_add(small(), OMEGA_POWERS[rng.randrange(len(OMEGA_POWERS))])
    mo, vi = MultOmega(a), VeblenImage(b, small())
    base = base_class()
    return [
        ("apply_I(MultOmega)", apply_I(mo), lambda k: probe_limit_point(mo, k), (mo, apply_I(mo))),
        ("apply_I(VeblenImage)", apply_I(vi), lambda k: probe_limit_point(vi, k), (vi, apply_I(vi))),
        ("iterate_I(MultOmega, limit)", iterate_I(mo, lam), lambda k: probe_intersection(mo, lam, k),
         (mo, iterate_I(mo, lam))),
        ("iterate_I(VeblenImage, limit)", iterate_I(vi, lam), lambda k: probe_intersection(vi, lam, k),
         (vi, iterate_I(vi, lam))),
        ("diagonal_const_family", diagonal_const_family(),
         lambda k: probe_diagonal(lambda al: iterate_I(base, al), k), (base, diagonal_const_family())),
        ("diagonal_level_family", diagonal_level_family(b),
         lambda k: probe_diagonal(lambda al: VeblenImage(b, al), k), (VeblenImage(b, ZERO), diagonal_level_family(b))),
    ]


OMEGA_POWERS = (OMEGA, omega_pow(nat(2)), omega_pow(OMEGA), veblen(ONE, ZERO))


def _sample_point(rng, classes):
    from .sampling import random_limit, random_ordinal

    roll = rng.random()
    if roll < 0.25:
        return random_limit(rng, 2, 2)
    x = classes[rng.randrange(len(classes))]
    k = least_above(x, random_ordinal(rng, 2, 2))
    if roll < 0.4:
        # a nearby ordinal just above a member
        k = ord_add(k, omega_pow(random_ordinal(rng, 1, 1)))
    return k


def validate_rules(rng, samples=200):
    """Compare every operator rule with its direct probe on random points.

    Returns ``{rule: (agreements, samples, first disagreement or None)}``.
    Each rule gets ``samples`` points, with fresh random parameters drawn
    for every point.
    """
    report = {}
    for idx in range(6):
        agree, bad = 0, None
        for _ in range(samples):
            name, closed, direct, classes = _rule_cases(rng)[idx]
            k = _sample_point(rng, classes)
            if class_member(closed, k) == direct(k):
                agree += 1
            elif bad is None:
                bad = (str(closed), ord_print(k))
        report[name] = (agree, samples, bad)
    return report
