"""Exact integer arithmetic: valuations, factorization, residue and Hilbert symbols.

Everything here is a pure function of its arguments, safe to call concurrently.
Public inputs are bounded to 64 bits (factorization) per the library contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

MAX_FACTOR_INPUT = 2**63 - 1

_TRIAL_LIMIT = 10**6
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def v2(n: int) -> int:
    """Largest k with 2**k dividing n (the 2-adic order); n must be >= 1."""
    if n < 1:
        raise ValueError("2-adic order requires n >= 1")
    return (n & -n).bit_length() - 1


def odd_part(n: int) -> int:
    """n divided by its full power of 2; n must be >= 1."""
    if n < 1:
        raise ValueError("odd part requires n >= 1")
    return n >> v2(n)


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization as a sorted tuple of (prime, exponent)."""

    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = v2(d)
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Deterministic Brent cycle-finding splitter for odd composite n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho splitter exhausted deterministic seeds on {n}")


@lru_cache(maxsize=1 << 16)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    d = 7
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        g = _brent_rho(m)
        stack.append(g)
        stack.append(m // g)
    return tuple(sorted(counts.items()))


def factorize(n: int) -> Factorization:
    """Prime factorization of 1 <= n <= 2**63-1; deterministic."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n > MAX_FACTOR_INPUT:
        raise ValueError("factorize input exceeds 64-bit bound")
    return Factorization(_factor_tuple(n))


def squarefree_part(n: int) -> int:
    """Product of the primes dividing n to an odd power; n / result is a square."""
    if n < 1:
        raise ValueError("squarefree part requires n >= 1")
    out = 1
    for p, e in _factor_tuple(n):
        if e % 2:
            out *= p
    return out


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd m >= 1; 0 iff gcd(a, m) > 1."""
    if m < 1 or m % 2 == 0:
        raise ValueError("Jacobi symbol needs a positive odd modulus")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def is_qr(a: int, m: int) -> bool:
    """True iff gcd(a, m) = 1 and x^2 = a (mod m) is solvable; m = 1 gives True.

    Odd part decided prime-by-prime via Jacobi symbols (each odd prime power
    lifts); the 2-part needs a = 1 mod 4 for 4 | m and a = 1 mod 8 for 8 | m.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return True
    a %= m
    if math.gcd(a, m) != 1:
        return False
    e = v2(m)
    for p in factorize(m >> e).primes:
        if jacobi(a, p) != 1:
            return False
    if e >= 3:
        return a % 8 == 1
    if e == 2:
        return a % 4 == 1
    return True


# (u-1)/2 and (u^2-1)/8 mod 2, keyed by the odd residue u mod 8
_EPS = {1: 0, 3: 1, 5: 0, 7: 1}
_OMEGA = {1: 0, 3: 1, 5: 1, 7: 0}


def hilbert2(a: int, b: int) -> int:
    """2-adic Hilbert symbol (a, b): 1 iff a*x^2 + b*y^2 = z^2 has a nontrivial
    2-adic solution. Depends only on square classes; symmetric; bimultiplicative."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    va = v2(abs(a))
    vb = v2(abs(b))
    u = (a >> va) % 8
    w = (b >> vb) % 8
    exp = _EPS[u] * _EPS[w] + va * _OMEGA[w] + vb * _OMEGA[u]
    return -1 if exp % 2 else 1
