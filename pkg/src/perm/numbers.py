"""
Prime helpers for group orders
"""

from typing import List

from sympy import isprime, primefactors

from ..core.exceptions import NotPrimeError


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not a prime")
    return p


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n"""
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def prime_divisors(n: int) -> List[int]:
    return sorted(primefactors(n)) if n > 1 else []


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def p_bar(p: int) -> int:
    """p for odd p, 4 for p = 2"""
    return 4 if p == 2 else p
