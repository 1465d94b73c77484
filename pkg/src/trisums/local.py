"""Local solvability conditions: odd-prime residue criteria and the dyadic clauses."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, jacobi, odd_part, v2
from .forms import FormKind, MixedForm, associated_quadratic


def _failing_primes(target: int, modulus_odd: int) -> list[int]:
    """Odd primes p | modulus_odd with target not a nonzero square mod p."""
    bad = []
    for p in factorize(modulus_odd).primes:
        if target % p == 0 or jacobi(target, p) != 1:
            bad.append(p)
    return bad


def odd_locally_universal(a: int, b: int, c: int) -> tuple[bool, list[int]]:
    """Whether a*x^2+b*y^2+c*z^2 represents every integer p-adically at every
    odd prime: true iff -ab is a residue mod the odd part of c, and cyclically.
    Also returns the odd primes witnessing failure."""
    bad: set[int] = set()
    bad.update(_failing_primes(-a * b, odd_part(c)))
    bad.update(_failing_primes(-a * c, odd_part(b)))
    bad.update(_failing_primes(-b * c, odd_part(a)))
    return (not bad, sorted(bad))


def two_adic_ok(form: MixedForm) -> bool:
    """Family-specific dyadic solvability clause (always true for ttt)."""
    a, b, c = form.coefficients
    if form.kind is FormKind.TWO_SQUARES_ONE_TRI:
        return c % 4 != 0 or (v2(c) == 2 and v2(a) + v2(b) == 1)
    if form.kind is FormKind.ONE_SQUARE_TWO_TRI:
        return b % 4 != 0 or c % 4 != 0
    return True


def vf(form: MixedForm) -> int:
    """Dyadic order of the family's critical sum: v2(c), v2(b+c), v2(a+b+c)."""
    a, b, c = form.coefficients
    if form.kind is FormKind.TWO_SQUARES_ONE_TRI:
        return v2(c)
    if form.kind is FormKind.ONE_SQUARE_TWO_TRI:
        return v2(b + c)
    return v2(a + b + c)


@dataclass(frozen=True)
class LocalReport:
    odd_condition_holds: bool
    failing_odd_primes: tuple[int, ...]
    two_adic_holds: bool
    vf: int


def local_report(form: MixedForm) -> LocalReport:
    """Odd-prime conditions evaluated on the associated diagonal quadratic,
    plus the dyadic clause and the critical valuation."""
    qa, qb, qc = associated_quadratic(form).coefficients
    ok, bad = odd_locally_universal(qa, qb, qc)
    return LocalReport(
        odd_condition_holds=ok,
        failing_odd_primes=tuple(bad),
        two_adic_holds=two_adic_ok(form),
        vf=vf(form),
    )
