import pytest
from hypothesis import given, settings

from degcalc.errors import NotALimit, ParseError
from degcalc.ordinal import (
    OMEGA, ONE, ZERO, Ordering, Phi, divides_omega_pow, fund_seq, nat, omega_pow, ord_add, ord_cmp,
    ord_is_limit, ord_mul, ord_parse, ord_pow, ord_print, ord_succ, veblen,
)
from strategies import limits, ordinals

P = ord_parse
EPS0 = veblen(ONE, ZERO)


@pytest.mark.parametrize("a,b,expected", [
    ("w*2+1", "w^2", Ordering.LESS),
    ("phi(1,0)", "w^(w^w)", Ordering.GREATER),
    ("w^3", "w^3", Ordering.EQUAL),
    ("phi(2,0)", "phi(1,phi(2,0)+1)", Ordering.LESS),
    ("phi(1,1)", "phi(1,0)*5", Ordering.GREATER),
])
def test_cmp_examples(a, b, expected):
    assert ord_cmp(P(a), P(b)) == expected


def test_arithmetic_examples():
    assert ord_add(P("w^2*2+w"), P("w^2")) == P("w^2*3")
    assert ord_add(ONE, OMEGA) == OMEGA
    assert ord_mul(OMEGA, P("w^2")) == P("w^3")
    assert ord_mul(P("w+1"), nat(3)) == P("w*3+1")
    assert ord_mul(nat(2), OMEGA) == OMEGA
    assert ord_succ(OMEGA) == P("w+1")
    assert ord_is_limit(OMEGA) and not ord_is_limit(P("w+1")) and not ord_is_limit(ZERO)
    assert ord_pow(OMEGA, nat(2)) == P("w^2")


def test_veblen_examples():
    assert omega_pow(EPS0) == EPS0
    assert veblen(ZERO, nat(2)) == P("w^2")
    assert veblen(ONE, ZERO) == EPS0
    assert veblen(ONE, veblen(nat(2), ZERO)) == veblen(nat(2), ZERO)
    assert veblen(ONE, ZERO).terms == ((Phi(ONE, ZERO), 1),)


def test_divides_examples():
    assert divides_omega_pow(nat(2), P("w^2*3"))
    assert not divides_omega_pow(nat(2), P("w^2+w"))
    assert divides_omega_pow(EPS0, EPS0)


def test_fund_seq_examples():
    assert fund_seq(P("w^2"), 3) == P("w*3")
    assert fund_seq(OMEGA, 5) == nat(5)
    assert fund_seq(EPS0, 2) == P("w^(w^w)")
    assert ord_cmp(fund_seq(EPS0, 1), fund_seq(EPS0, 2)) < 0
    with pytest.raises(NotALimit):
        fund_seq(P("w+1"), 0)


def test_parse_examples():
    assert P("w^2*3+5") == ord_add(ord_mul(P("w^2"), nat(3)), nat(5))
    assert P("phi(1,0)") == EPS0
    assert P("w^(phi(1,0))") == EPS0
    assert P("ω^2") == P("w^2")
    assert ord_print(P("w^w+w*2+3")) == "w^w+w*2+3"
    for bad in ("w^", "phi(1)", "w+*2", "W", ""):
        with pytest.raises(ParseError):
            P(bad)


# -------------------------------------------------------------- properties

@settings(max_examples=300)
@given(ordinals, ordinals)
def test_trichotomy_and_antisymmetry(a, b):
    c = ord_cmp(a, b)
    assert c in (Ordering.LESS, Ordering.EQUAL, Ordering.GREATER)
    assert ord_cmp(b, a) == -c
    assert (c == Ordering.EQUAL) == (a == b)


@settings(max_examples=300)
@given(ordinals, ordinals, ordinals)
def test_transitivity(a, b, c):
    x, y, z = sorted([a, b, c])
    assert ord_cmp(x, y) <= 0 and ord_cmp(y, z) <= 0 and ord_cmp(x, z) <= 0


@settings(max_examples=300)
@given(ordinals, ordinals, ordinals)
def test_add_associative_and_left_distributive(a, b, c):
    assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))
    assert ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c))
    assert ord_mul(ord_mul(a, b), c) == ord_mul(a, ord_mul(b, c))


@settings(max_examples=300)
@given(ordinals, ordinals, ordinals)
def test_right_strict_monotonicity(a, b, c):
    if ord_cmp(b, c) < 0:
        assert ord_cmp(ord_add(a, b), ord_add(a, c)) < 0


@settings(max_examples=200)
@given(limits)
def test_fund_seq_increasing_below(k):
    prev = None
    for n in range(21):
        x = fund_seq(k, n)
        assert ord_cmp(x, k) < 0
        if prev is not None:
            assert ord_cmp(prev, x) < 0
        prev = x


@settings(max_examples=500)
@given(ordinals)
def test_parse_print_roundtrip(a):
    assert ord_parse(ord_print(a)) == a


@settings(max_examples=300)
@given(ordinals)
def test_normal_form_invariants(a):
    heads = [h for h, _ in a.terms]
    for x, y in zip(heads, heads[1:]):
        assert ord_cmp(_head_value(x), _head_value(y)) > 0
    assert all(c >= 1 for _, c in a.terms)
    for h in heads:
        if h.level != ZERO:
            assert ord_cmp(h.index, veblen(h.level, h.index)) < 0


def _head_value(h):
    return veblen(h.level, h.index)
