"""W-terms: ``W^a1*b1 + ... + W^ak*bk + c`` with ordinal parameters.

``W`` stands for the order type of all ordinals, so these terms index degrees
of inaccessibility past every ordinal.  Exponents are ordinals ``>= 1`` in
strictly decreasing order, coefficients are nonzero ordinals, and the
constant is any ordinal.  Comparison is lexicographic on the term list with
the constant treated as the ``W^0`` term, which is ordinary ordinal
comparison when ``W`` is read as a very large ordinal.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Tuple

from .errors import Exhausted, ParseError
from .ordinal import (
    ONE,
    OMEGA,
    ZERO,
    Ordering,
    Ordinal,
    _wrap,
    as_ordinal,
    fund_seq,
    is_atomic,
    is_successor,
    nat,
    omega_pow,
    ord_add,
    ord_cmp,
    ord_is_limit,
    ord_min,
    ord_mul,
    ord_pow,
    ord_pred,
    ord_print,
    ord_succ,
    veblen,
)
from .syntax import parse_ast


@dataclass(frozen=True)
class MetaOrdinal:
    terms: Tuple[Tuple[Ordinal, Ordinal], ...] = ()
    constant: Ordinal = ZERO

    def __lt__(self, other):
        return mo_cmp(self, as_meta(other)) < 0

    def __le__(self, other):
        return mo_cmp(self, as_meta(other)) <= 0

    def __gt__(self, other):
        return mo_cmp(self, as_meta(other)) > 0

    def __ge__(self, other):
        return mo_cmp(self, as_meta(other)) >= 0

    def __str__(self):
        return mo_print(self)

    def __repr__(self):
        return f"MetaOrdinal({mo_print(self)!r})"

    @property
    def is_ordinal(self):
        return not self.terms


def from_ordinal(a):
    return MetaOrdinal((), a)


def omega_term(exponent, coefficient=ONE):
    """The single term ``W^exponent * coefficient``."""
    exponent, coefficient = as_ordinal(exponent), as_ordinal(coefficient)
    if exponent == ZERO:
        return from_ordinal(coefficient)
    if coefficient == ZERO:
        return MetaOrdinal()
    return MetaOrdinal(((exponent, coefficient),))


W = omega_term(ONE)


def as_meta(x):
    if isinstance(x, MetaOrdinal):
        return x
    if isinstance(x, str):
        return mo_parse(x)
    return from_ordinal(as_ordinal(x))


def _components(t):
    comps = list(t.terms)
    if t.constant != ZERO:
        comps.append((ZERO, t.constant))
    return comps


def _from_components(comps):
    terms = tuple((e, c) for e, c in comps if e != ZERO)
    const = comps[-1][1] if comps and comps[-1][0] == ZERO else ZERO
    return MetaOrdinal(terms, const)


def mo_cmp(s, t):
    a, b = _components(s), _components(t)
    for (ea, ca), (eb, cb) in zip(a, b):
        c = ord_cmp(ea, eb) or ord_cmp(ca, cb)
        if c:
            return Ordering(c)
    if len(a) == len(b):
        return Ordering.EQUAL
    return Ordering.LESS if len(a) < len(b) else Ordering.GREATER


def mo_succ(t):
    return MetaOrdinal(t.terms, ord_succ(t.constant))


def mo_normalize(raw_terms, constant=ZERO):
    """Sort ``(exponent, coefficient)`` pairs descending and merge equal exponents.

    Coefficients of equal exponents are added in the order given; zero
    coefficients are dropped.
    """
    merged = {}
    order = []
    for e, c in raw_terms:
        e, c = as_ordinal(e), as_ordinal(c)
        if e == ZERO:
            raise ValueError("W-term exponents must be at least 1; pass finite parts as the constant")
        if e in merged:
            merged[e] = ord_add(merged[e], c)
        else:
            merged[e] = c
            order.append(e)
    order.sort(key=cmp_to_key(ord_cmp), reverse=True)
    terms = tuple((e, merged[e]) for e in order if merged[e] != ZERO)
    return MetaOrdinal(terms, as_ordinal(constant))


def mo_add(s, t):
    """Left-to-right sum with ordinal absorption (``W + 5 + W = W*2``)."""
    if not t.terms:
        return MetaOrdinal(s.terms, ord_add(s.constant, t.constant))
    e, c = t.terms[0]
    kept = []
    for es, cs in s.terms:
        rel = ord_cmp(es, e)
        if rel > 0:
            kept.append((es, cs))
            continue
        if rel == 0:
            kept.append((e, ord_add(cs, c)))
            return MetaOrdinal(tuple(kept) + t.terms[1:], t.constant)
        break
    return MetaOrdinal(tuple(kept) + t.terms, t.constant)


def mo_params(t):
    """Every ordinal appearing as an exponent, coefficient or nonzero constant."""
    params = set()
    for e, c in t.terms:
        params.add(e)
        params.add(c)
    if t.constant != ZERO:
        params.add(t.constant)
    return frozenset(params)


def mo_admissible_at(t, k):
    k = as_ordinal(k)
    return all(ord_cmp(p, k) < 0 for p in mo_params(t))


def mo_eval_at(t, k):
    """Substitute the ordinal ``k`` for ``W`` and evaluate."""
    k = as_ordinal(k)
    total = ZERO
    for e, c in t.terms:
        total = ord_add(total, ord_mul(ord_pow(k, e), c))
    return ord_add(total, t.constant)


# ------------------------------------------------------------- enumeration
#
# _below(comps) describes the admissible terms strictly below the term with
# components ``comps``: ("max", comps') when a greatest one exists, or
# ("cofinal", f) where f(1), f(2), ... is strictly increasing and cofinal.

def _prepend(comp, result):
    kind, val = result
    if kind == "max":
        return kind, [comp] + val
    return kind, lambda i: [comp] + val(i)


def _below_power(e, bound):
    """Admissible terms below ``W^e``."""
    if e == ZERO:
        return "max", []
    cap = ord_min(e, bound)
    if cap == ZERO:
        return "max", []
    if not is_successor(cap):
        return "cofinal", lambda i: [(fund_seq(cap, i), ONE)]
    top = ord_pred(cap)
    if ord_cmp(bound, ONE) <= 0:
        return "max", []
    if ord_is_limit(bound):
        return "cofinal", lambda i: [(top, fund_seq(bound, i))]
    return _prepend((top, ord_pred(bound)), _below_power(top, bound))


def _below(comps, bound):
    if not comps:
        return None
    (e, c), rest = comps[0], comps[1:]
    e_ok = e == ZERO or ord_cmp(e, bound) < 0
    if e_ok and ord_cmp(c, bound) < 0:
        r = _below(rest, bound)
        if r is not None:
            return _prepend((e, c), r)
    if e_ok:
        cap = ord_min(c, bound)
        if ord_cmp(cap, ONE) > 0:
            if is_successor(cap):
                return _prepend((e, ord_pred(cap)), _below_power(e, bound))
            return "cofinal", lambda i: [(e, fund_seq(cap, i))]
    return _below_power(e, bound)


def mo_enumerate_below(t, param_bound, n):
    """``n`` admissible terms below ``t``, strictly increasing.

    Admissible means every parameter is below ``param_bound``.  When the
    admissible terms below ``t`` are cofinal without a maximum, the result is
    the first ``n`` entries of a fixed cofinal sequence; otherwise it ends
    with the greatest admissible term below ``t`` and continues downward.
    """
    bound = as_ordinal(param_bound)
    found = []
    cur = t
    while len(found) < n:
        r = _below(_components(cur), bound)
        if r is None:
            raise Exhausted(f"only {len(found)} admissible terms below {mo_print(t)}")
        kind, val = r
        if kind == "cofinal":
            head = [_from_components(val(i)) for i in range(1, n - len(found) + 1)]
            return head + found[::-1]
        cur = _from_components(val)
        found.append(cur)
    return found[::-1]


# ------------------------------------------------------------ text interface

def _fold(node, text):
    kind = node[0]
    if kind == "nat":
        return from_ordinal(nat(node[1]))
    if kind == "w":
        return from_ordinal(OMEGA)
    if kind == "W":
        return W
    if kind == "phi":
        a, b = _fold(node[1], text), _fold(node[2], text)
        if not (a.is_ordinal and b.is_ordinal):
            raise ParseError("phi arguments must be ordinals", text, node[3])
        return from_ordinal(veblen(a.constant, b.constant))
    left, right = _fold(node[1], text), _fold(node[2], text)
    pos = node[3]
    if kind == "+":
        return mo_add(left, right)
    if kind == "*":
        if not right.is_ordinal:
            raise ParseError("a W-term can only be multiplied on the right by an ordinal", text, pos)
        if left.is_ordinal:
            return from_ordinal(ord_mul(left.constant, right.constant))
        if len(left.terms) == 1 and left.constant == ZERO:
            (e, c), = left.terms
            return omega_term(e, ord_mul(c, right.constant))
        raise ParseError("only a single W-power may carry a coefficient", text, pos)
    # exponentiation
    if not right.is_ordinal:
        raise ParseError("W-term exponents must be ordinals", text, pos)
    if left == W:
        return omega_term(right.constant)
    if left == from_ordinal(OMEGA):
        return from_ordinal(omega_pow(right.constant))
    raise ParseError("only w or W may be raised to a power", text, pos)


def mo_parse(text):
    return _fold(parse_ast(text), text)


def _coefficient(c):
    if c == ONE:
        return ""
    return "*" + (ord_print(c) if is_atomic(c) else f"({ord_print(c)})")


def mo_print(t):
    parts = []
    for e, c in t.terms:
        power = "W" if e == ONE else f"W^{_wrap(e)}"
        parts.append(power + _coefficient(c))
    if t.constant != ZERO or not parts:
        parts.append(ord_print(t.constant))
    return "+".join(parts)
