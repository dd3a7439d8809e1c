"""Small integer helpers on top of sympy."""
from itertools import combinations

from sympy import isprime, primefactors

__all__ = ["isprime", "primefactors", "p_part", "pi_part", "is_pi_number", "prime_subsets"]


def p_part(n, p):
    """Largest power of ``p`` dividing ``n``."""
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


def pi_part(n, primes):
    r = 1
    for p in primes:
        r *= p_part(n, p)
    return r


def is_pi_number(n, primes):
    return pi_part(n, primes) == n


def prime_subsets(n):
    """All non-empty sets of primes dividing ``n``, smallest first."""
    ps = primefactors(n)
    return [frozenset(c) for k in range(1, len(ps) + 1) for c in combinations(ps, k)]
