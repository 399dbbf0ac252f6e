"""Exact integer evaluation of the edge / clique / star bound functions.

All arithmetic is exact: integers throughout, with :class:`fractions.Fraction`
only on the generalized-binomial path.  ``gen_binom(a, b)`` follows the
polynomial convention C(a,b) = a(a-1)...(a-b+1)/b! when a >= b-1 and 0
otherwise, which is what makes the clique bound well defined for degenerate
parameters such as x > floor((n-1)/2).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def falling_factorial(k: int, t: int) -> int:
    """(k)_t = k(k-1)...(k-t+1); 1 when t = 0, and 0 when 0 <= k < t."""
    if t < 0:
        raise ValueError("falling factorial needs t >= 0")
    out = 1
    for i in range(t):
        out *= k - i
    return out


def gen_binom(a: int | Fraction, b: int) -> int | Fraction:
    """Generalized binomial: (a)_b / b! if a >= b-1, else 0.

    Returns an int whenever the exact value is integral.
    """
    if b < 0:
        raise ValueError("gen_binom needs b >= 0")
    if a < b - 1:
        return 0
    num = 1
    for i in range(b):
        num *= a - i
    val = Fraction(num) / Fraction(_factorial(b))
    if val.denominator == 1:
        return int(val)
    return val


def _factorial(b: int) -> int:
    out = 1
    for i in range(2, b + 1):
        out *= i
    return out


def h(n: int, d: int) -> int:
    """Edge bound for one construction: C(n-d, 2) + d^2."""
    if not 0 <= d <= n:
        raise ValueError(f"h(n={n}, d={d}) out of range")
    m = n - d
    return m * (m - 1) // 2 + d * d


def h_k(n: int, x: int, k: int) -> int:
    """Clique bound: C(n-x, k) + x*C(x, k-1), generalized-binomial convention.

    Equals h(n, x) when k = 2.
    """
    if not 0 <= x <= n:
        raise ValueError(f"h_k(n={n}, x={x}) out of range")
    if k < 2:
        raise ValueError("h_k needs k >= 2")
    val = gen_binom(n - x, k) + x * gen_binom(x, k - 1)
    assert isinstance(val, int)
    return val


def e_bound(n: int, d: int) -> int:
    """max{h(n,d), h(n, floor((n-1)/2))}: the sharp nonhamiltonian edge bound."""
    half = (n - 1) // 2
    if not 1 <= d <= half:
        raise ValueError(f"e_bound(n={n}, d={d}) needs 1 <= d <= {half}")
    return max(h(n, d), h(n, half))


def d0(n: int) -> int:
    """Degree threshold where the edge bound stops decreasing in d."""
    if n < 3:
        raise ValueError("d0 needs n >= 3")
    if n % 2:
        return -((n + 1) // -6)
    return -((n + 4) // -6)


def star_count_formula(degree_sequence: Iterable[int], t: int) -> int:
    """Labeled count of t-vertex stars from the degree sequence alone.

    Each vertex v contributes (d(v))_{t-1} labeled copies as the star center.
    """
    if t < 2:
        raise ValueError("star_count_formula needs t >= 2")
    return sum(falling_factorial(d, t - 1) for d in degree_sequence)


def star_count_unlabeled(degree_sequence: Iterable[int], t: int) -> int:
    """Unlabeled star count: sum of C(d(v), t-1) over vertices."""
    if t < 2:
        raise ValueError("star_count_unlabeled needs t >= 2")
    total = 0
    for d in degree_sequence:
        total += falling_factorial(d, t - 1) // _factorial(t - 1)
    return total


def n0_threshold(d: int, t: int) -> int:
    """Order threshold 4dt + 3d^2 + 5t for the general pattern-count bound."""
    if d < 1 or t < 3:
        raise ValueError("n0_threshold needs d >= 1 and t >= 3")
    return 4 * d * t + 3 * d * d + 5 * t
