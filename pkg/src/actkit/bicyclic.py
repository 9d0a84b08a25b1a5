"""Exact arithmetic in the bicyclic monoid.

Elements are pairs (p, q) of naturals; (0, 0) is the identity. Python
ints are unbounded, so no coordinate can overflow.
"""

from typing import NamedTuple

from .errors import BoundTooSmall


class BicyclicElement(NamedTuple):
    p: int
    q: int

    def __mul__(self, other):
        return bicyclic_mul(self, other)


def element(p, q):
    """Checked constructor: coordinates must be natural numbers."""
    if p < 0 or q < 0:
        raise ValueError(f"bicyclic coordinates must be natural: {(p, q)}")
    return BicyclicElement(p, q)


IDENTITY = BicyclicElement(0, 0)


def bicyclic_mul(a, b):
    """(p,q)(s,t) = (p - q + max(q,s), t - s + max(q,s))."""
    m = max(a.q, b.p)
    return BicyclicElement(a.p - a.q + m, b.q - b.p + m)


def divisor_bound(target, s_t):
    """Smallest search bound that provably contains every left divisor.

    A solution (p, q) of (p,q)(s,t) = (m,n) has either q >= s, in which
    case (p, q) = (m, n - t + s), or q < s, in which case p = m - s + q.
    Either way p <= m and q <= n + s.
    """
    return max(target.p, target.q) + max(s_t.p, s_t.q) + 1


def bicyclic_left_divisors(target, s_t, search_bound):
    """All (p, q) with coordinates <= search_bound and (p,q)*s_t == target.

    The bound must be at least ``divisor_bound(target, s_t)``; as a second
    line of defence the search refuses any solution lying on the boundary
    of the box, since that would mean the box could be cutting off others.
    """
    need = divisor_bound(target, s_t)
    if search_bound < need:
        raise BoundTooSmall(
            f"search bound {search_bound} < {need} for target {tuple(target)}",
            witness=need,
        )
    found = []
    for p in range(search_bound + 1):
        for q in range(search_bound + 1):
            cand = BicyclicElement(p, q)
            if bicyclic_mul(cand, s_t) == target:
                if p == search_bound or q == search_bound:
                    raise BoundTooSmall(f"solution {(p, q)} on search boundary", witness=cand)
                found.append(cand)
    return found
