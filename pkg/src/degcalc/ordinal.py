"""Ordinal notations below Gamma_0 in two-argument Veblen normal form.

An :class:`Ordinal` is a finite sum ``h_1*c_1 + ... + h_k*c_k`` of additive
principal heads in strictly decreasing order with positive natural
coefficients.  Every head is ``Phi(level, index)`` standing for
``phi_level(index)`` with ``phi_0(x) = w^x``, subject to the normality
condition ``index < Phi(level, index)``.  Below Gamma_0 that representation
is unique, so structural equality coincides with ordinal equality.

Values are immutable and all functions are pure.

Fundamental sequences
---------------------
``fund_seq(k, n)`` uses the following fixed assignment, where ``h`` is the
last head of ``k`` and ``k = p + h``:

* ``k = p + h``                         ->  ``p + h[n]``
* ``w^(e+1)``                           ->  ``w^e * n``
* ``w^lam`` (lam limit)                  ->  ``w^(lam[n])``
* ``phi(a+1, 0)``                       ->  ``phi_a`` applied ``n+1`` times to ``1``
* ``phi(a+1, b+1)``                     ->  ``phi_a`` applied ``n+1`` times to ``phi(a+1,b)+1``
* ``phi(lam, 0)``                       ->  ``phi(lam[n], 0)``
* ``phi(lam, b+1)``                     ->  ``phi(lam[n], phi(lam,b)+1)``
* ``phi(a, lam)``                       ->  ``phi(a, lam[n])``

so ``fund_seq(phi(1,0), 2) = w^(w^w)``.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Tuple

from .errors import NotALimit, ParseError
from .syntax import parse_ast


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Phi:
    """Additive principal head ``phi_level(index)``."""

    level: "Ordinal"
    index: "Ordinal"


@dataclass(frozen=True)
class Ordinal:
    terms: Tuple[Tuple[Phi, int], ...] = ()

    def __post_init__(self):
        # hashing recurses through the whole notation; compute it once
        object.__setattr__(self, "_hash", hash(self.terms))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, int):
            other = nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._hash == other._hash and self.terms == other.terms

    def __lt__(self, other):
        return ord_cmp(self, _coerce(other)) < 0

    def __le__(self, other):
        return ord_cmp(self, _coerce(other)) <= 0

    def __gt__(self, other):
        return ord_cmp(self, _coerce(other)) > 0

    def __ge__(self, other):
        return ord_cmp(self, _coerce(other)) >= 0

    def __add__(self, other):
        return ord_add(self, _coerce(other))

    def __radd__(self, other):
        return ord_add(_coerce(other), self)

    def __mul__(self, other):
        return ord_mul(self, _coerce(other))

    def __rmul__(self, other):
        return ord_mul(_coerce(other), self)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return ord_print(self)

    def __repr__(self):
        return f"Ordinal({ord_print(self)!r})"


def _coerce(x):
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return nat(x)
    raise TypeError(f"cannot use {type(x).__name__} as an ordinal")


ZERO = Ordinal()
_ONE_HEAD = Phi(ZERO, ZERO)
ONE = Ordinal(((_ONE_HEAD, 1),))
OMEGA = Ordinal(((Phi(ZERO, ONE), 1),))


def nat(n):
    if n < 0:
        raise ValueError("ordinals are non-negative")
    return Ordinal(((_ONE_HEAD, n),)) if n else ZERO


def as_ordinal(x):
    """Coerce an ``int``, ``str`` or :class:`Ordinal` to an :class:`Ordinal`."""
    if isinstance(x, str):
        return ord_parse(x)
    return _coerce(x)


# ---------------------------------------------------------------- comparison

def _cmp_head(x, y):
    if x is y:
        return Ordering.EQUAL
    c = ord_cmp(x.level, y.level)
    if c == 0:
        return ord_cmp(x.index, y.index)
    if c < 0:
        # phi_a(b) < phi_c(d) with a < c  iff  b < phi_c(d)
        return Ordering.LESS if ord_cmp(x.index, Ordinal(((y, 1),))) < 0 else Ordering.GREATER
    # a > c: phi_a(b) < phi_c(d)  iff  phi_a(b) < d
    return Ordering.LESS if ord_cmp(Ordinal(((x, 1),)), y.index) < 0 else Ordering.GREATER


def ord_cmp(a, b):
    """Compare two normal forms; total, and EQUAL exactly on equal notations."""
    if a is b:
        return Ordering.EQUAL
    for (ha, ca), (hb, cb) in zip(a.terms, b.terms):
        c = _cmp_head(ha, hb)
        if c:
            return c
        if ca != cb:
            return Ordering.LESS if ca < cb else Ordering.GREATER
    if len(a.terms) == len(b.terms):
        return Ordering.EQUAL
    return Ordering.LESS if len(a.terms) < len(b.terms) else Ordering.GREATER


def ord_max(a, b):
    return a if ord_cmp(a, b) >= 0 else b


def ord_min(a, b):
    return a if ord_cmp(a, b) <= 0 else b


# ----------------------------------------------------------------- structure

def is_principal(a):
    """True for additive principal ordinals (a single head, coefficient 1)."""
    return len(a.terms) == 1 and a.terms[0][1] == 1


def is_natural(a):
    return not a.terms or (len(a.terms) == 1 and a.terms[0][0] == _ONE_HEAD)


def to_int(a):
    if not is_natural(a):
        raise ValueError(f"{a} is not finite")
    return a.terms[0][1] if a.terms else 0


def head_exponent(h):
    """The exponent ``e`` with ``h = w^e``."""
    if h.level == ZERO:
        return h.index
    return Ordinal(((h, 1),))


def leading_exponent(a):
    if not a.terms:
        raise ValueError("0 has no exponent")
    return head_exponent(a.terms[0][0])


def least_exponent(a):
    """Exponent of the last Cantor term; the largest ``e`` with ``w^e | a``."""
    if not a.terms:
        raise ValueError("0 has no exponent")
    return head_exponent(a.terms[-1][0])


def principal_parts(a):
    """``(level, index)`` of a principal ordinal ``phi(level, index)``."""
    if not is_principal(a):
        raise ValueError(f"{a} is not additively principal")
    h = a.terms[0][0]
    return h.level, h.index


def ord_is_limit(a):
    return bool(a.terms) and a.terms[-1][0] != _ONE_HEAD


def is_successor(a):
    return bool(a.terms) and a.terms[-1][0] == _ONE_HEAD


def ord_pred(a):
    if not is_successor(a):
        raise ValueError(f"{a} is not a successor")
    h, c = a.terms[-1]
    return Ordinal(a.terms[:-1] + (((h, c - 1),) if c > 1 else ()))


# ---------------------------------------------------------------- arithmetic

def omega_pow(e):
    """Normal form of ``w^e``."""
    if is_principal(e) and e.terms[0][0].level != ZERO:
        return e  # epsilon-type fixed point: w^e = e
    return Ordinal(((Phi(ZERO, e), 1),))


def veblen(level, index):
    """Normal form of ``phi_level(index)``, collapsing fixed points."""
    if level == ZERO:
        return omega_pow(index)
    if is_principal(index) and ord_cmp(index.terms[0][0].level, level) > 0:
        return index
    return Ordinal(((Phi(level, index), 1),))


def ord_add(a, b):
    if not b.terms:
        return a
    hb, cb = b.terms[0]
    kept = []
    for h, c in a.terms:
        rel = _cmp_head(h, hb)
        if rel > 0:
            kept.append((h, c))
        else:
            if rel == 0:
                kept.append((hb, c + cb))
                return Ordinal(tuple(kept) + b.terms[1:])
            break
    return Ordinal(tuple(kept) + b.terms)


def ord_mul(a, b):
    if not a.terms or not b.terms:
        return ZERO
    h0, c0 = a.terms[0]
    e0 = head_exponent(h0)
    total = ZERO
    for h, c in b.terms:
        if h == _ONE_HEAD:
            part = Ordinal(((h0, c0 * c),) + a.terms[1:])
        else:
            head = omega_pow(ord_add(e0, head_exponent(h))).terms[0][0]
            part = Ordinal(((head, c),))
        total = ord_add(total, part)
    return total


def ord_succ(a):
    return ord_add(a, ONE)


def ord_pow(base, e):
    """Ordinal exponentiation ``base^e`` by the Cantor normal form rules."""
    if not e.terms:
        return ONE
    if not base.terms:
        return ZERO
    if base == ONE:
        return ONE
    # split e = limit part + finite n
    n = e.terms[-1][1] if e.terms[-1][0] == _ONE_HEAD else 0
    limit_part = Ordinal(e.terms[:-1]) if n else e
    finite_power = ONE
    for _ in range(n):
        finite_power = ord_mul(finite_power, base)
    if not limit_part.terms:
        return finite_power
    if is_natural(base):
        # k^(w*x) = w^x for finite k >= 2
        x = ZERO
        for h, c in limit_part.terms:
            x = ord_add(x, ord_mul(omega_pow(_minus_one(head_exponent(h))), nat(c)))
        return ord_mul(omega_pow(x), finite_power)
    return ord_mul(omega_pow(ord_mul(leading_exponent(base), limit_part)), finite_power)


def _minus_one(e):
    """The unique ``x`` with ``1 + x = e`` (``e >= 1``)."""
    if is_natural(e):
        return nat(to_int(e) - 1)
    return e


def divides_omega_pow(a, k):
    """True iff ``w^a`` left-divides ``k``; ``k = 0`` is divisible by everything."""
    if not k.terms:
        return True
    return ord_cmp(least_exponent(k), a) >= 0


def truncate_below(k, a):
    """Drop the Cantor terms of ``k`` with exponent below ``a``."""
    kept = tuple(t for t in k.terms if ord_cmp(head_exponent(t[0]), a) >= 0)
    return Ordinal(kept)


# ------------------------------------------------------- fundamental sequences

def _iterate(level, start, times):
    x = start
    for _ in range(times):
        x = veblen(level, x)
    return x


def _fund_head(h, n):
    a, b = h.level, h.index
    if a == ZERO:
        if is_successor(b):
            return ord_mul(omega_pow(ord_pred(b)), nat(n))
        return omega_pow(fund_seq(b, n))
    if b == ZERO:
        if is_successor(a):
            return _iterate(ord_pred(a), ONE, n + 1)
        return veblen(fund_seq(a, n), ZERO)
    if is_successor(b):
        prev = ord_succ(veblen(a, ord_pred(b)))
        if is_successor(a):
            return _iterate(ord_pred(a), prev, n + 1)
        return veblen(fund_seq(a, n), prev)
    return veblen(a, fund_seq(b, n))


def fund_seq(k, n):
    """The ``n``-th element of the canonical fundamental sequence of limit ``k``."""
    if not ord_is_limit(k):
        raise NotALimit(f"{k} is not a limit ordinal")
    if n < 0:
        raise ValueError("index must be a natural number")
    h, c = k.terms[-1]
    prefix = Ordinal(k.terms[:-1] + (((h, c - 1),) if c > 1 else ()))
    return ord_add(prefix, _fund_head(h, n))


# ------------------------------------------------------------ text interface

def fold_ordinal(node, text):
    kind = node[0]
    if kind == "nat":
        return nat(node[1])
    if kind == "w":
        return OMEGA
    if kind == "W":
        raise ParseError("W is not an ordinal", text, node[1])
    if kind == "phi":
        return veblen(fold_ordinal(node[1], text), fold_ordinal(node[2], text))
    left = fold_ordinal(node[1], text)
    right = fold_ordinal(node[2], text)
    if kind == "+":
        return ord_add(left, right)
    if kind == "*":
        return ord_mul(left, right)
    if left != OMEGA:
        raise ParseError("only w may be raised to a power", text, node[3])
    return omega_pow(right)


def ord_parse(text):
    return fold_ordinal(parse_ast(text), text)


def is_atomic(a):
    """Whether ``a`` prints without needing parentheses as an operand."""
    if is_natural(a) or a == OMEGA:
        return True
    return is_principal(a) and a.terms[0][0].level != ZERO


def _wrap(a):
    s = ord_print(a)
    return s if is_atomic(a) else f"({s})"


def _print_head(h):
    if h.level != ZERO:
        return f"phi({ord_print(h.level)},{ord_print(h.index)})"
    if h.index == ONE:
        return "w"
    return f"w^{_wrap(h.index)}"


def ord_print(a):
    if not a.terms:
        return "0"
    parts = []
    for h, c in a.terms:
        if h == _ONE_HEAD:
            parts.append(str(c))
        elif c == 1:
            parts.append(_print_head(h))
        else:
            parts.append(f"{_print_head(h)}*{c}")
    return "+".join(parts)
