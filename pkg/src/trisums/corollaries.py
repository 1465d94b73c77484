"""Closed-form predicates for special coefficient families.

Each rule evaluates its stated criterion directly from prime residues,
independently of the main case tables in `classify`, so the two routes can be
cross-checked. Rules are keyed by a template naming the form; parameters fill
the template slots. Verdicts are TriState: Unknown appears exactly on the
parameter carve-outs the criteria leave open.
"""

from __future__ import annotations

from .arith import factorize, is_qr, odd_part, squarefree_part, v2
from .classify import NO, YES, GAP_STT, GAP_TTT, TriState, unknown
from .forms import FormKind, MixedForm


def _odd_primes_in(n: int, allowed: set[int], modulus: int) -> bool:
    return all(p % modulus in allowed for p in factorize(n).primes if p != 2)


def _all_primes_in(n: int, allowed: set[int], modulus: int) -> bool:
    return all(p % modulus in allowed for p in factorize(n).primes)


def _tri(flag: bool) -> TriState:
    return YES if flag else NO


def _squarefree(n: int) -> bool:
    return squarefree_part(n) == n


# -- single-parameter square/triangular companions --------------------------------


def _ax2_y2_T(a: int) -> TriState:
    return _tri(_odd_primes_in(a, {1, 3}, 8))


def _ax2_2y2_2T(a: int) -> TriState:
    return _tri(_all_primes_in(a, {1, 3}, 8))


def _ax2_2y2_T(a: int) -> TriState:
    return _tri(_odd_primes_in(a, {1}, 4))


def _ax2_y2_2T(a: int) -> TriState:
    return _tri(_odd_primes_in(a, {1}, 4))


def _ax2_2y2_4T(a: int) -> TriState:
    return _tri(_all_primes_in(a, {1}, 4))


def _ax2_4y2_2T(a: int) -> TriState:
    return _tri(a % 8 == 1 and _all_primes_in(a, {1}, 4))


def _ax2_2T_T(a: int) -> TriState:
    return _tri(_odd_primes_in(a, {1, 3}, 8))


def _ax2_4T_T(a: int) -> TriState:
    return _tri(_odd_primes_in(a, {1}, 4))


# -- m-families with a fixed square part ------------------------------------------


def _x2_y2_mT(m: int) -> TriState:
    return _tri(m % 4 != 0 and _odd_primes_in(m, {1}, 4))


def _2x2_y2_mT(m: int) -> TriState:
    return _tri(m % 8 != 0 and _odd_primes_in(m, {1, 3}, 8))


def _4k_x2_y2_mT(k: int, m: int) -> TriState:
    if k < 1:
        raise ValueError("k must be >= 1")
    ok = (
        m % 4 != 0
        and _odd_primes_in(m, {1}, 4)
        and (v2(m) != 1 or _squarefree(m))
    )
    return _tri(ok)


def _2_4k_x2_y2_mT(k: int, m: int) -> TriState:
    if k < 1:
        raise ValueError("k must be >= 1")
    ok = (
        m % 4 != 0
        and _odd_primes_in(m, {1, 3}, 8)
        and (m % 8 != 1 or _squarefree(m))
    )
    return _tri(ok)


def _2k_x2_2l_y2_mT(k: int, l: int, m: int) -> TriState:
    if not 1 <= l <= k:
        raise ValueError("needs k >= l >= 1")
    allowed = {1} if (k - l) % 2 == 0 else {1, 3}
    modulus = 4 if (k - l) % 2 == 0 else 8
    asym = _all_primes_in(m, allowed, modulus)
    return _tri(asym and (_squarefree(m) or (k % 2 == 0 and l == 1)))


def _x2_T_mT(m: int) -> TriState:
    good_primes = _odd_primes_in(m, {1, 3}, 8)
    val_ok = not (v2(m) >= 4 and v2(m) % 2 == 0)  # v2(m) not in {4, 6, 8, ...}
    cond = good_primes and (odd_part(m) % 8 == 3 or val_ok)
    if v2(m) != 4:
        return _tri(cond)
    if cond:
        return YES
    if not good_primes:
        return NO
    return unknown(GAP_STT)


def _2k_x2_T_mT(k: int, m: int) -> TriState:
    if k < 1:
        raise ValueError("k must be >= 1")
    if m % 2 == 0 or not _all_primes_in(m, {1, 3}, 8):
        return NO
    if k in (1, 2):
        return YES
    if k == 3:
        return NO if m % 8 == 1 else unknown(GAP_STT)
    if k == 4:
        return unknown(GAP_STT)
    return NO


def _x2_2T_mT(m: int) -> TriState:
    good_primes = _odd_primes_in(m, {1}, 4)
    val_ok = not (v2(m) >= 5 and v2(m) % 2 == 1)
    if v2(m) != 3:
        return _tri(good_primes and val_ok)
    return unknown(GAP_STT) if good_primes else NO


def _2k_x2_2T_mT(k: int, m: int) -> TriState:
    if k < 1:
        raise ValueError("k must be >= 1")
    cond = m % 2 == 1 and _all_primes_in(m, {1}, 4)
    if k == 1:
        return _tri(cond)
    if k == 2:
        return unknown(GAP_STT) if cond else NO
    return NO


def _aT_2T_T(a: int) -> TriState:
    good_primes = _odd_primes_in(a, {1, 3}, 8)
    ap = odd_part(a)
    val_ok = not (v2(a) >= 4 and v2(a) % 2 == 0)
    cond = good_primes and (ap % 8 == 1 or val_ok)
    if v2(a) != 4:
        return _tri(cond)
    if cond:
        return YES
    if not good_primes:
        return NO
    return unknown(GAP_TTT)


# -- residue-bounded families ----------------------------------------------------


def _floor12_even(n: int, odd_only: bool) -> bool:
    primes = factorize(n).primes
    if odd_only:
        primes = tuple(p for p in primes if p != 2)
    return all(p // 12 % 2 == 0 for p in primes)


def _ax2_3y2_T(a: int) -> TriState:
    return _tri(a % 3 == 1 and _floor12_even(a, odd_only=True))


def _ax2_y2_3T(a: int) -> TriState:
    return _tri(a % 3 == 2 and _floor12_even(a, odd_only=True))


def _ax2_2y2_6T(a: int) -> TriState:
    return _tri(a % 6 == 1 and _floor12_even(a, odd_only=False))


def _ax2_6y2_2T(a: int) -> TriState:
    return _tri(a % 6 == 5 and _floor12_even(a, odd_only=False))


# -- two-parameter families --------------------------------------------------------


def _ax2_by2_4cT(a: int, b: int, c: int) -> TriState:
    if c % 2 == 0:
        raise ValueError("c must be odd")
    ok = (
        v2(a) + v2(b) == 1
        and is_qr(-a * b, c)
        and is_qr(-2 * a * c, odd_part(b))
        and is_qr(-2 * b * c, odd_part(a))
    )
    return _tri(ok)


def _require_bad_prime(a: int, b: int) -> None:
    if b % 2 == 0:
        raise ValueError("b must be odd")
    sf = squarefree_part(odd_part(a)) * squarefree_part(b)
    if _odd_primes_in(sf, {1}, 4):
        raise ValueError("hypothesis needs a prime divisor congruent to 3 mod 4")


def _ax2_by2_2T(a: int, b: int) -> TriState:
    _require_bad_prime(a, b)
    return _tri(is_qr(-a, b) and is_qr(-b, odd_part(a)))


def _ax2_y2_2bT(a: int, b: int) -> TriState:
    return _ax2_by2_2T(a, b)


def _ax2_2y2_bT(a: int, b: int) -> TriState:
    _require_bad_prime(a, b)
    return _tri(is_qr(-2 * a, b) and is_qr(-b, odd_part(a)))


def _ax2_2by2_T(a: int, b: int) -> TriState:
    return _ax2_2y2_bT(a, b)


def _ax2_216y2_T(a: int) -> TriState:
    if a % 2 or v2(a) % 2 or not _odd_primes_in(a, {1}, 3):
        raise ValueError("hypothesis needs even a, even v2(a), odd prime divisors 1 mod 3")
    sf = squarefree_part(odd_part(a))
    primes = factorize(sf).primes
    blocked = all(p % 24 in (1, 19) for p in primes) and (
        sum(1 for p in primes if p % 24 == 19) % 2 == 1
    )
    return _tri(not blocked)


def _ax2_250y2_T(a: int) -> TriState:
    ap = odd_part(a)
    if (
        a % 2 == 1
        or v2(a) % 2 == 0
        or ap % 10 not in (1, 9)
        or not all(p // 10 % 2 == 0 for p in factorize(ap).primes)
    ):
        raise ValueError("hypothesis needs odd v2(a), a' = +-1 mod 10, floor(p/10) even")
    sf = squarefree_part(ap)
    blocked = ap % 40 in (21, 29) and _all_primes_in(sf, {1, 9}, 20)
    return _tri(not blocked)


# -- reciprocity obstruction rows (non-asymptotic-universality) --------------------


def _row_all_five(a: int, b: int, c: int) -> bool:
    ap, bp, cp = odd_part(a) % 8, odd_part(b) % 8, odd_part(c) % 8
    return ap == bp == (-cp) % 8


def _row_first_three(a: int, b: int, c: int) -> bool:
    ap, bp, cp = odd_part(a) % 8, odd_part(b) % 8, odd_part(c) % 8
    parity_match = v2(a) % 2 == v2(b) % 2
    case1 = ap == bp == (cp + 4) % 8 and not parity_match
    case2 = (-bp) % 8 == (cp + 4) % 8 and ap % 8 in ((cp + 4) % 8, (-(cp + 4)) % 8) and parity_match
    return case1 or case2


def _row_last_two(a: int, b: int, c: int) -> bool:
    ap, bp, cp = odd_part(a) % 8, odd_part(b) % 8, odd_part(c) % 8
    parity_match = v2(a) % 2 == v2(b) % 2
    case1 = ap == bp == (cp + 4) % 8 and parity_match
    case2 = (-bp) % 8 == (cp + 4) % 8 and ap % 8 in ((cp + 4) % 8, (-(cp + 4)) % 8) and not parity_match
    return case1 or case2


def obstruction_targets(row: str, a: int, b: int, c: int) -> list[MixedForm]:
    """The forms a hypothesis row rules out of asymptotic universality."""
    all_five = [
        MixedForm(FormKind.TWO_SQUARES_ONE_TRI, a, b, c),
        MixedForm(FormKind.ONE_SQUARE_TWO_TRI, c, a, b),
        MixedForm(FormKind.THREE_TRI, a, b, c),
        MixedForm(FormKind.TWO_SQUARES_ONE_TRI, a, c, b),
        MixedForm(FormKind.ONE_SQUARE_TWO_TRI, a, b, c),
    ]
    if row == "obstructs-all-five":
        return all_five
    if row == "obstructs-first-three":
        return all_five[:3]
    if row == "obstructs-last-two":
        return all_five[3:]
    raise ValueError(f"unknown obstruction row {row!r}")


def _paired_obstruction(a: int, b: int, c: int) -> bool:
    if v2(b) % 2 != v2(c) % 2:
        raise ValueError("hypothesis needs v2(b) = v2(c) mod 2")
    ap, bp, cp = odd_part(a) % 4, odd_part(b) % 4, odd_part(c) % 4
    return not ap == bp == cp


def paired_obstruction_forms(
    a: int, b: int, c: int
) -> tuple[tuple[MixedForm, MixedForm], tuple[MixedForm, MixedForm]]:
    """Two pairs of forms; under the hypothesis, at least one pair is entirely
    non-asymptotically-universal."""
    pair1 = (
        MixedForm(FormKind.TWO_SQUARES_ONE_TRI, a, b, 2 * c),
        MixedForm(FormKind.TWO_SQUARES_ONE_TRI, a, c, 2 * b),
    )
    pair2 = (
        MixedForm(FormKind.TWO_SQUARES_ONE_TRI, a, 2 * c, b),
        MixedForm(FormKind.TWO_SQUARES_ONE_TRI, a, 2 * b, c),
    )
    return pair1, pair2


_RULES = {
    "ax2+y2+T": _ax2_y2_T,
    "ax2+2y2+2T": _ax2_2y2_2T,
    "ax2+2y2+T": _ax2_2y2_T,
    "ax2+y2+2T": _ax2_y2_2T,
    "ax2+2y2+4T": _ax2_2y2_4T,
    "ax2+4y2+2T": _ax2_4y2_2T,
    "ax2+2T+T": _ax2_2T_T,
    "ax2+4T+T": _ax2_4T_T,
    "x2+y2+mT": _x2_y2_mT,
    "2x2+y2+mT": _2x2_y2_mT,
    "4k.x2+y2+mT": _4k_x2_y2_mT,
    "2.4k.x2+y2+mT": _2_4k_x2_y2_mT,
    "2k.x2+2l.y2+mT": _2k_x2_2l_y2_mT,
    "x2+T+mT": _x2_T_mT,
    "2k(x2+T)+mT": _2k_x2_T_mT,
    "x2+2T+mT": _x2_2T_mT,
    "2k(x2+2T)+mT": _2k_x2_2T_mT,
    "aT+2T+T": _aT_2T_T,
    "ax2+3y2+T": _ax2_3y2_T,
    "ax2+y2+3T": _ax2_y2_3T,
    "ax2+2y2+6T": _ax2_2y2_6T,
    "ax2+6y2+2T": _ax2_6y2_2T,
    "ax2+by2+4cT": _ax2_by2_4cT,
    "ax2+by2+2T": _ax2_by2_2T,
    "ax2+y2+2bT": _ax2_y2_2bT,
    "ax2+2y2+bT": _ax2_2y2_bT,
    "ax2+2by2+T": _ax2_2by2_T,
    "ax2+216y2+T": _ax2_216y2_T,
    "ax2+250y2+T": _ax2_250y2_T,
    "obstructs-all-five": _row_all_five,
    "obstructs-first-three": _row_first_three,
    "obstructs-last-two": _row_last_two,
    "paired-obstruction": _paired_obstruction,
}


def corollary_predicate(rule: str, *args: int) -> TriState | bool:
    """Evaluate a closed-form criterion; obstruction rows return a plain bool
    (whether the hypothesis fires), everything else a TriState verdict."""
    try:
        fn = _RULES[rule]
    except KeyError:
        raise ValueError(f"unknown rule {rule!r}") from None
    return fn(*args)
