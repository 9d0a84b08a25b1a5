import pytest
from hypothesis import given, strategies as st

from actkit.bicyclic import (
    IDENTITY,
    BicyclicElement as B,
    bicyclic_left_divisors,
    bicyclic_mul,
    divisor_bound,
    element,
)
from actkit.errors import BoundTooSmall

nat = st.integers(0, 40)
elems = st.builds(B, nat, nat)


def as_word(x):
    """(p, q) is q^p p^q read as a word in the generators, where p q = 1.
    Reduce by cancelling "pq" and count the letters left over."""
    return "q" * x.p + "p" * x.q


def reduce_word(w):
    stack = []
    for c in w:
        if c == "q" and stack and stack[-1] == "p":
            stack.pop()
        else:
            stack.append(c)
    return B(stack.count("q"), stack.count("p"))


def test_formula_examples():
    assert bicyclic_mul(B(2, 3), B(1, 5)) == B(2, 7)
    assert B(1, 0) * B(0, 1) == B(1, 1)
    assert B(0, 1) * B(1, 0) == IDENTITY
    for s, t in [(0, 0), (3, 1), (5, 9)]:
        assert IDENTITY * B(s, t) == B(s, t) == B(s, t) * IDENTITY


@given(elems, elems)
def test_product_matches_word_reduction(a, b):
    # an independent model: concatenate normal-form words and cancel pq
    assert bicyclic_mul(a, b) == reduce_word(as_word(a) + as_word(b))


@given(elems, elems, elems)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_left_divisor_examples():
    assert bicyclic_left_divisors(B(3, 1), B(2, 0), 10) == [B(3, 3)]
    for st_ in [B(0, 0), B(2, 5), B(4, 1)]:
        assert IDENTITY in bicyclic_left_divisors(st_, st_, divisor_bound(st_, st_) + 3)
    assert len(bicyclic_left_divisors(B(0, 5), B(3, 3), 10)) <= 4


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_divisors_complete_against_wide_search(m, n, s, t):
    target, right = B(m, n), B(s, t)
    wide = [B(p, q) for p in range(40) for q in range(40) if B(p, q) * right == target]
    assert bicyclic_left_divisors(target, right, divisor_bound(target, right)) == wide
    assert len(wide) <= s + 1


def test_bound_too_small():
    with pytest.raises(BoundTooSmall) as exc:
        bicyclic_left_divisors(B(3, 1), B(2, 0), 2)
    assert exc.value.witness == divisor_bound(B(3, 1), B(2, 0))


def test_element_rejects_negative():
    assert element(2, 3) == B(2, 3)
    with pytest.raises(ValueError):
        element(-1, 0)


def test_large_coordinates_are_exact():
    big = 10 ** 30
    assert B(big, big + 1) * B(big + 1, 0) == B(big, 0)
