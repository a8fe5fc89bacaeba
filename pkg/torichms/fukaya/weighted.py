"""
Monomial counts on weighted projective lines and on [A^1/mu_n]

These are the independent oracles for path counting on wheels: Gamma(p, q)
against the weighted line P^1(p, q), Gamma(n, 0) against [A^1/mu_n].
"""
from typing import Dict, Tuple, Union

from torichms.exceptions import InputException
from torichms.fukaya.series import EVEN, Bucket, GradedSeries, check_truncation

Twist = Union[int, Tuple[int, int]]


def _pair_monomials(p: int, q: int, delta: Tuple[int, int], truncate: int) -> Dict[Bucket, int]:
    """
    X^i Y^j with j y + i x = delta in <x, y | p y = q x>

    Solutions are j = dy + t p, i = dx - t q over integers t.
    """
    dy, dx = delta
    counts: Dict[Bucket, int] = {}
    # j >= 0 needs t >= -dy / p, i >= 0 needs t <= dx / q
    low = -(dy // p)
    high = dx // q
    for t in range(low, high + 1):
        j, i = dy + t * p, dx - t * q
        if i < 0 or j < 0:
            continue
        weight = i + j
        if weight <= truncate:
            counts[(EVEN, weight)] = counts.get((EVEN, weight), 0) + 1
    return counts


def _integer_monomials(p: int, q: int, degree: int, truncate: int) -> Dict[Bucket, int]:
    """X^i Y^j with i p + j q = degree"""
    counts: Dict[Bucket, int] = {}
    if degree < 0:
        return counts
    for i in range(degree // p + 1):
        rest = degree - i * p
        if rest % q:
            continue
        weight = i + rest // q
        if weight <= truncate:
            counts[(EVEN, weight)] = counts.get((EVEN, weight), 0) + 1
    return counts


def weighted_p1_series(p: int, q: int, a: Twist, b: Twist, truncate: int) -> GradedSeries:
    """
    Hom(O(a), O(b)) on P^1(p, q) bucketed by polynomial degree

    Twists are either pairs (y-part, x-part) in <x, y | p y = q x>, with X of
    degree x and Y of degree y, or integers in the grading deg X = p,
    deg Y = q. Both twists must use the same form.

    Example:
        weighted_p1_series(1, 2, 0, 2, 5).total()   # 2, from X^2 and Y
    """
    check_truncation(truncate)
    if p < 1 or q < 1:
        raise InputException(f"weights must be positive, got ({p}, {q})")
    if isinstance(a, tuple) != isinstance(b, tuple):
        raise InputException("twists must both be pairs or both be integers")
    if isinstance(a, tuple) and isinstance(b, tuple):
        delta = (b[0] - a[0], b[1] - a[1])
        counts = _pair_monomials(p, q, delta, truncate)
    else:
        counts = _integer_monomials(p, q, int(b) - int(a), truncate)
    return GradedSeries.from_counts(truncate, counts)


def mu_n_series(n: int, i: int, j: int, truncate: int) -> GradedSeries:
    """
    Hom(O(chi^j), O(chi^i)) on [A^1/mu_n]: z^a with a = i - j mod n

    Example:
        mu_n_series(2, 0, 0, 4).dim(0, 2)   # 1
    """
    check_truncation(truncate)
    if n < 1:
        raise InputException(f"mu_n needs n >= 1, got {n}")
    residue = (i - j) % n
    return GradedSeries.from_counts(
        truncate,
        {(EVEN, a): 1 for a in range(residue, truncate + 1, n)},
    )
