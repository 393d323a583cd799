"""Catalan numbers, their logarithms and asymptotics, and the split law.

The n-th Catalan number C_n = binom(2n, n)/(n + 1) counts the permutations of
[n] avoiding any fixed length-3 pattern.  ``split_probability(j, n)`` is the
probability that a uniform 231-avoider of size n carries its maximum at
position j, namely C_{j-1} C_{n-j} / C_n; the recursive sampler and the exact
distribution recurrences both consume it.

Values are cached and exact (arbitrary precision); ``log_catalan`` serves the
regimes where linear floats overflow.  Cache growth is append-only and
idempotent, so concurrent readers are safe under the GIL.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import RangeError

_exact: list[int] = [1]
_logs: list[float] = [0.0]

_LOG4 = math.log(4.0)
_HALF_LOG_PI = 0.5 * math.log(math.pi)


def catalan(n: int) -> int:
    """Exact n-th Catalan number (C_0 = 1)."""
    if n < 0:
        raise RangeError(f"catalan is defined for n >= 0, got {n}")
    while len(_exact) <= n:
        k = len(_exact) - 1
        _exact.append(_exact[-1] * (2 * (2 * k + 1)) // (k + 2))
    return _exact[n]


def log_catalan(n: int) -> float:
    """Natural log of the exact Catalan number."""
    catalan(n)
    while len(_logs) <= n:
        _logs.append(math.log(_exact[len(_logs)]))
    return _logs[n]


def log_catalan_asymptotic(n: int) -> float:
    """log of the leading-order approximation 4^n / (sqrt(pi) n^(3/2))."""
    if n < 1:
        raise RangeError(f"asymptotic form needs n >= 1, got {n}")
    return n * _LOG4 - _HALF_LOG_PI - 1.5 * math.log(n)


def catalan_asymptotic(n: int) -> float:
    """Leading-order approximation of C_n; inf once past float range."""
    log_value = log_catalan_asymptotic(n)
    if log_value > 709.0:
        return math.inf
    return math.exp(log_value)


def split_probability(j: int, n: int) -> Fraction:
    """Exact probability C_{j-1} C_{n-j} / C_n that the maximum sits at j."""
    if not 1 <= j <= n:
        raise RangeError(f"position j must satisfy 1 <= j <= n, got j={j}, n={n}")
    return Fraction(catalan(j - 1) * catalan(n - j), catalan(n))


def split_probabilities(n: int) -> list[Fraction]:
    """All n split probabilities for size n, in position order."""
    if n < 1:
        raise RangeError(f"split law needs n >= 1, got {n}")
    cn = catalan(n)
    return [Fraction(catalan(j - 1) * catalan(n - j), cn) for j in range(1, n + 1)]


def log_split_probability(j: int, n: int) -> float:
    """Float log of the split probability, safe for large n."""
    if not 1 <= j <= n:
        raise RangeError(f"position j must satisfy 1 <= j <= n, got j={j}, n={n}")
    return log_catalan(j - 1) + log_catalan(n - j) - log_catalan(n)
